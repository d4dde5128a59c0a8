use thiserror::Error;

use crate::exact::{rat, RationalFunction, SparsePoly};
use crate::partitions::Partition;

/// `H_λ(q) = Π_s (1 − q^{h(s)})`.
pub fn hook_polynomial(lambda: &Partition) -> SparsePoly {
    lambda.hooks().iter().fold(SparsePoly::one(), |acc, &h| {
        &acc * &(SparsePoly::one() - SparsePoly::monomial(rat(1), &[("q", h)]))
    })
}

/// `a_λ(q) = q^{|λ|+2n(λ)} Π_i Π_{j≤mᵢ} (1 − q^{−j})`, the order of the
/// centralizer of a unipotent element of type `λ`.
pub fn centralizer_order(lambda: &Partition) -> SparsePoly {
    let mut acc = SparsePoly::one();
    let mut shift = lambda.size() as u64 + 2 * lambda.n();
    for (_, m) in lambda.multiplicities() {
        for j in 1..=m {
            // q^j (1 − q^{−j}) = q^j − 1
            acc = &acc * &SparsePoly::univariate_rat("q", &unit_minus(j));
            shift -= j as u64;
        }
    }
    let out = acc.shift(&[("q", shift as u32)]);
    assert!(out.is_integral());
    out
}

fn unit_minus(j: u32) -> Vec<crate::exact::Rational> {
    let mut v = vec![rat(0); j as usize + 1];
    v[0] = rat(-1);
    v[j as usize] = rat(1);
    v
}

/// `𝓗_λ(q) = 1/a_λ(q)`.
pub fn unipotent_weight(lambda: &Partition) -> RationalFunction {
    RationalFunction::new(SparsePoly::one(), centralizer_order(lambda)).expect("nonzero")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("genus hook of the empty partition is undefined")]
pub struct EmptyPartition;

/// `𝓗^g_λ(z,w) = Π_s (z^{2a+1} − w^{2l+1})^{2g} / ((z^{2a+2} − w^{2l})(z^{2a} − w^{2l+2}))`.
pub fn genus_hook(lambda: &Partition, g: u32) -> Result<RationalFunction, EmptyPartition> {
    if lambda.is_empty() {
        return Err(EmptyPartition);
    }
    let zw = |a: u32, b: u32| SparsePoly::monomial(rat(1), &[("z", a)]) - SparsePoly::monomial(rat(1), &[("w", b)]);
    let mut num = SparsePoly::one();
    let mut den = SparsePoly::one();
    for c in lambda.cells() {
        let (a, l) = (c.arm, c.leg);
        num = &num * &zw(2 * a + 1, 2 * l + 1).pow(2 * g);
        den = &den * &(&zw(2 * a + 2, 2 * l) * &zw(2 * a, 2 * l + 2));
    }
    Ok(RationalFunction::new(num, den).expect("nonzero denominator"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&p([1])), SparsePoly::univariate("q", &[-1, 1]));
        let gl2 = &SparsePoly::univariate("q", &[-1, 0, 1]) * &SparsePoly::univariate("q", &[0, -1, 1]);
        assert_eq!(centralizer_order(&p([1, 1])), gl2);
        assert_eq!(
            hook_polynomial(&p([1, 1])),
            &SparsePoly::univariate("q", &[1, -1]) * &SparsePoly::univariate("q", &[1, 0, -1])
        );
    }

    #[test]
    fn single_cell_genus_hook() {
        let h = genus_hook(&p([1]), 1).unwrap();
        let num = SparsePoly::var("z") - SparsePoly::var("w");
        let den = &(SparsePoly::monomial(rat(1), &[("z", 2)]) - SparsePoly::one())
            * &(SparsePoly::one() - SparsePoly::monomial(rat(1), &[("w", 2)]));
        assert_eq!(h, RationalFunction::new(num.pow(2), den.clone()).unwrap());
        let h0 = genus_hook(&p([1]), 0).unwrap();
        assert_eq!(h0, RationalFunction::new(SparsePoly::one(), den).unwrap());
        assert!(genus_hook(&Partition::empty(), 0).is_err());
    }
}
