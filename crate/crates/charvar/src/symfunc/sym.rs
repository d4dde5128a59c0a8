use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::basis::{basis_matrices, Basis};
use crate::exact::{Rational, RationalFunction, SparsePoly};
use crate::partitions::{Partition, TypeT};

/// One power-sum index per alphabet.
pub type Key = Vec<Partition>;

/// Element of `Q(vars) ⊗ Λ(x₁) ⊗ ⋯ ⊗ Λ(x_k)`, homogeneous of a fixed
/// multidegree, stored in the power-sum basis.
#[derive(Clone, PartialEq)]
pub struct SymFunc {
    degree: Vec<u32>,
    terms: BTreeMap<Key, RationalFunction>,
}

/// A symmetric function written in a basis other than power sums.
#[derive(Clone, PartialEq, Debug)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub degree: Vec<u32>,
    pub terms: BTreeMap<Key, RationalFunction>,
}

impl SymFunc {
    pub fn zero(degree: Vec<u32>) -> Self {
        SymFunc {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Degree-zero element with the given coefficient.
    pub fn scalar(k: usize, c: RationalFunction) -> Self {
        let mut f = SymFunc::zero(vec![0; k]);
        f.insert(vec![Partition::empty(); k], c);
        f
    }

    pub fn one(k: usize) -> Self {
        Self::scalar(k, RationalFunction::one())
    }

    /// `p_{λ₁}(x₁)⋯p_{λ_k}(x_k)`.
    pub fn power(key: &[Partition]) -> Self {
        let mut f = SymFunc::zero(key.iter().map(Partition::size).collect());
        f.insert(key.to_vec(), RationalFunction::one());
        f
    }

    /// One-alphabet basis element `B_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let n = lambda.size();
        let m = basis_matrices(basis, n);
        let i = m.partitions.iter().position(|p| p == lambda).unwrap();
        let mut f = SymFunc::zero(vec![n]);
        for (rho, c) in m.partitions.iter().zip(&m.to_power[i]) {
            if !c.is_zero() {
                f.insert(vec![rho.clone()], RationalFunction::constant(c.clone()));
            }
        }
        f
    }

    pub fn schur(lambda: &Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    pub fn complete(lambda: &Partition) -> Self {
        Self::basis_element(Basis::Complete, lambda)
    }

    pub fn monomial(lambda: &Partition) -> Self {
        Self::basis_element(Basis::Monomial, lambda)
    }

    /// `f₁(x₁)⋯f_k(x_k)` from one-alphabet factors.
    pub fn tensor(factors: &[SymFunc]) -> Self {
        let mut out = SymFunc::one(0);
        for f in factors {
            assert_eq!(f.k(), 1, "tensor factors must be one-alphabet");
            let mut next = SymFunc::zero(out.degree.iter().copied().chain(std::iter::once(f.degree[0])).collect());
            for (ka, ca) in &out.terms {
                for (kb, cb) in &f.terms {
                    let mut key = ka.clone();
                    key.push(kb[0].clone());
                    next.insert(key, ca * cb);
                }
            }
            out = next;
        }
        out
    }

    pub fn from_expansion(e: &BasisExpansion) -> Self {
        let mut f = SymFunc::zero(e.degree.clone());
        for (key, c) in &e.terms {
            let factors: Vec<SymFunc> = key.iter().map(|l| SymFunc::basis_element(e.basis, l)).collect();
            f = &f + &SymFunc::tensor(&factors).scale_rf(c);
        }
        f
    }

    pub fn k(&self) -> usize {
        self.degree.len()
    }

    pub fn degree(&self) -> &[u32] {
        &self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Key, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[Partition]) -> RationalFunction {
        self.terms.get(key).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Coefficient of a degree-zero element.
    pub fn constant(&self) -> RationalFunction {
        self.coeff(&vec![Partition::empty(); self.k()])
    }

    fn insert(&mut self, key: Key, c: RationalFunction) {
        debug_assert!(key.iter().map(Partition::size).eq(self.degree.iter().copied()));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_rf(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn from_terms(degree: Vec<u32>, terms: impl IntoIterator<Item = (Key, RationalFunction)>) -> Self {
        let mut f = SymFunc::zero(degree);
        for (k, c) in terms {
            assert!(
                k.iter().map(Partition::size).eq(f.degree.iter().copied()),
                "key {k:?} does not match multidegree {:?}",
                f.degree
            );
            f.insert(k, c);
        }
        f
    }

    pub fn scale_rf(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return SymFunc::zero(self.degree.clone());
        }
        SymFunc {
            degree: self.degree.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.scale_rf(&RationalFunction::constant(c.clone()))
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&RationalFunction) -> RationalFunction) -> Self {
        let mut out = SymFunc::zero(self.degree.clone());
        for (k, v) in &self.terms {
            out.insert(k.clone(), f(v));
        }
        out
    }

    pub fn try_map_coeffs<E>(
        &self,
        mut f: impl FnMut(&RationalFunction) -> Result<RationalFunction, E>,
    ) -> Result<Self, E> {
        let mut out = SymFunc::zero(self.degree.clone());
        for (k, v) in &self.terms {
            out.insert(k.clone(), f(v)?);
        }
        Ok(out)
    }

    /// `ψ_n`: `p_r ↦ p_{rn}` in every alphabet and `v ↦ vⁿ` on coefficients.
    pub fn adams(&self, n: u32) -> Self {
        assert!(n > 0);
        if n == 1 {
            return self.clone();
        }
        SymFunc {
            degree: self.degree.iter().map(|d| d * n).collect(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.iter().map(|p| p.scaled(n)).collect(), v.power_vars(n)))
                .collect(),
        }
    }

    /// Extended Hall pairing, diagonal in power sums with `⟨p_λ, p_λ⟩ = z_λ`.
    pub fn hall(&self, other: &SymFunc) -> RationalFunction {
        if self.degree != other.degree {
            return RationalFunction::zero();
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = RationalFunction::zero();
        for (k, a) in &small.terms {
            if let Some(b) = big.terms.get(k) {
                let z = k.iter().fold(num_bigint::BigInt::from(1), |z, p| z * p.z());
                acc = acc.add_rf(&(a * b).scale(&BigRational::from_integer(z)));
            }
        }
        acc
    }

    /// Coordinates in the given basis, converting one alphabet at a time.
    pub fn to_basis(&self, basis: Basis) -> BasisExpansion {
        let mut terms = self.terms.clone();
        for a in 0..self.k() {
            if basis == Basis::Power {
                break;
            }
            let m = basis_matrices(basis, self.degree[a]);
            let index = |p: &Partition| m.partitions.iter().position(|x| x == p).unwrap();
            let mut next: BTreeMap<Key, RationalFunction> = BTreeMap::new();
            for (key, c) in &terms {
                let row = &m.from_power[index(&key[a])];
                for (lam, x) in m.partitions.iter().zip(row) {
                    if x.is_zero() {
                        continue;
                    }
                    let mut nk = key.clone();
                    nk[a] = lam.clone();
                    let add = c.scale(x);
                    let e = next.entry(nk).or_insert_with(RationalFunction::zero);
                    *e = e.add_rf(&add);
                }
            }
            next.retain(|_, v| !v.is_zero());
            terms = next;
        }
        BasisExpansion {
            basis,
            degree: self.degree.clone(),
            terms,
        }
    }

    /// Replaces `p_r(x)` by `p_r(x)p_r(y)` in every alphabet, with
    /// `y = (1, q, q², …)` so that `p_r(y) = 1/(1 − qʳ)`.
    pub fn y_specialize(&self, q: &str) -> Self {
        let geometric = |r: u32| {
            let den = SparsePoly::one() - SparsePoly::monomial(crate::exact::rat(1), &[(q, r)]);
            RationalFunction::new(SparsePoly::one(), den).expect("nonzero denominator")
        };
        let mut out = SymFunc::zero(self.degree.clone());
        for (k, c) in &self.terms {
            let f: RationalFunction = k.iter().flat_map(|p| p.parts().to_vec()).map(geometric).product();
            out.insert(k.clone(), c * &f);
        }
        out
    }

    pub fn mul_sf(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.k(), other.k(), "alphabet count mismatch");
        let degree = self.degree.iter().zip(&other.degree).map(|(a, b)| a + b).collect();
        let mut out = SymFunc::zero(degree);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key = ka.iter().zip(kb).map(|(a, b)| a.union(b)).collect();
                out.insert(key, ca * cb);
            }
        }
        out
    }

    pub fn add_sf(&self, other: &SymFunc) -> SymFunc {
        if self.is_zero() && self.k() == other.k() {
            return other.clone();
        }
        if other.is_zero() && self.k() == other.k() {
            return self.clone();
        }
        assert_eq!(self.degree, other.degree, "multidegree mismatch in sum");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(k.clone(), v.clone());
        }
        out
    }

    pub fn neg_sf(&self) -> SymFunc {
        SymFunc {
            degree: self.degree.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

/// `A_ω = Π_i ψ_{dᵢ}(A_{ωⁱ})` for a family of one-alphabet functions.
pub fn type_extension(family: impl Fn(&Partition) -> SymFunc, omega: &TypeT) -> SymFunc {
    omega
        .entries()
        .iter()
        .fold(SymFunc::one(1), |acc, (d, l)| acc.mul_sf(&family(l).adams(*d)))
}

/// `⟨f(x), s_ω(xy)⟩` with `y = (1, q, q², …)`.
pub fn principal_specialization_pairing(f: &SymFunc, omega: &TypeT, q: &str) -> RationalFunction {
    let s = type_extension(SymFunc::schur, omega).y_specialize(q);
    f.hall(&s)
}

impl std::ops::Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, o: &SymFunc) -> SymFunc {
        self.add_sf(o)
    }
}

impl std::ops::Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, o: &SymFunc) -> SymFunc {
        self.add_sf(&o.neg_sf())
    }
}

impl std::ops::Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, o: &SymFunc) -> SymFunc {
        self.mul_sf(o)
    }
}

impl std::ops::Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.neg_sf()
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, sym: &str, terms: &BTreeMap<Key, RationalFunction>) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (k, c)) in terms.iter().rev().enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        write!(f, "({c})")?;
        for (a, p) in k.iter().enumerate() {
            if !p.is_empty() {
                write!(f, "*{sym}{p}(x{})", a + 1)?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, "p", &self.terms)
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.basis.to_string(), &self.terms)
    }
}

impl BasisExpansion {
    pub fn coeff(&self, key: &[Partition]) -> RationalFunction {
        self.terms.get(key).cloned().unwrap_or_else(RationalFunction::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat2;

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    #[test]
    fn schur_two() {
        let s2 = SymFunc::schur(&p([2]));
        assert_eq!(s2.coeff(&[p([2])]), RationalFunction::constant(rat2(1, 2)));
        assert_eq!(s2.coeff(&[p([1, 1])]), RationalFunction::constant(rat2(1, 2)));
        assert_eq!(SymFunc::schur(&p([1])), SymFunc::power(&[p([1])]));
    }

    #[test]
    fn complete_two_two_in_schur() {
        let e = SymFunc::complete(&p([2, 2])).to_basis(Basis::Schur);
        let keys: Vec<_> = e.terms.keys().cloned().collect();
        assert_eq!(keys, vec![vec![p([2, 2])], vec![p([3, 1])], vec![p([4])]]);
        assert!(e.terms.values().all(RationalFunction::is_one));
    }

    #[test]
    fn pairings() {
        assert_eq!(
            SymFunc::power(&[p([2])]).hall(&SymFunc::power(&[p([2])])),
            RationalFunction::int(2)
        );
        let a = SymFunc::power(&[p([1]), p([1])]);
        let b = SymFunc::tensor(&[SymFunc::schur(&p([1])), SymFunc::schur(&p([1]))]);
        assert!(a.hall(&b).is_one());
    }

    #[test]
    fn adams_scales_vars() {
        let f = SymFunc::power(&[p([1])]).scale_rf(&RationalFunction::var("z"));
        let g = f.adams(2);
        assert_eq!(
            g,
            SymFunc::power(&[p([2])]).scale_rf(&RationalFunction::from_poly(SparsePoly::monomial(
                rat2(1, 1),
                &[("z", 2)]
            )))
        );
    }

    #[test]
    fn type_extension_remarks() {
        let om = TypeT::new(vec![(1, p([2])), (1, p([1]))]);
        assert_eq!(type_extension(SymFunc::schur, &om), SymFunc::complete(&p([2, 1])));
        let om = TypeT::new(vec![(2, p([1])), (3, p([1]))]);
        assert_eq!(type_extension(SymFunc::schur, &om), SymFunc::power(&[p([3, 2])]));
        assert_eq!(type_extension(|_| SymFunc::one(1), &om), SymFunc::one(1));
    }

    #[test]
    fn principal_specialization() {
        let f = SymFunc::schur(&p([1]));
        let v = principal_specialization_pairing(&f, &TypeT::single(p([1])), "q");
        let expect = RationalFunction::new(SparsePoly::one(), SparsePoly::univariate("q", &[1, -1])).unwrap();
        assert_eq!(v, expect);
    }
}
