//! Generating series over tuples of unipotent classes: the product over
//! Frobenius orbits, the assembly from point counts, and the `ℍ` side.
//! Everything stays symbolic in `q`.

use rayon::prelude::*;

use super::hfunction::{h_function, HError};
use super::omega::OmegaKernel;
use crate::arith::{divisors, mobius};
use crate::exact::{rat, rat2, AlgebraError, RationalFunction, SparsePoly};
use crate::partitions::{MultiType, Partition, TypeT};
use crate::quiver::dimension_unipotent;
use crate::symfunc::{SeriesError, SymFunc, SymSeries};

/// `f(√q, 1/√q)` as a function of `q`.
pub fn at_sqrt_q(f: &RationalFunction) -> Result<RationalFunction, AlgebraError> {
    let s = RationalFunction::var("s");
    f.substitute(&[("z", s.clone()), ("w", s.inv()?)])?.even_in("s", "q")
}

/// `φ_d(q) = (1/d) Σ_{e|d} μ(e)(q^{d/e} − 1)`, the number of Frobenius
/// orbits of size `d` on the multiplicative group.
pub fn phi(d: u32) -> SparsePoly {
    divisors(d as u64)
        .into_iter()
        .fold(SparsePoly::zero(), |acc, e| {
            let m = mobius(e);
            if m == 0 {
                return acc;
            }
            let t = SparsePoly::monomial(rat(1), &[("q", d / e as u32)]) - SparsePoly::one();
            &acc + &t.scale(&rat(m))
        })
        .scale(&rat2(1, d as i64))
}

/// All `k`-tuples of partitions of `n`.
pub fn multipartitions(n: u32, k: usize) -> Vec<Vec<Partition>> {
    let parts = Partition::all(n);
    (0..k).fold(vec![Vec::new()], |acc, _| {
        acc.iter()
            .flat_map(|p| {
                parts.iter().map(move |l| {
                    let mut v = p.clone();
                    v.push(l.clone());
                    v
                })
            })
            .collect()
    })
}

/// The multi-type `((1,μ¹),…,(1,μᵏ))`.
pub fn unipotent_multitype(mu: &[Partition]) -> MultiType {
    MultiType::new(mu.iter().map(|m| TypeT::single(m.clone())).collect()).expect("equal sizes")
}

fn schur_dual_tuple(mu: &[Partition]) -> SymFunc {
    SymFunc::tensor(&mu.iter().map(|m| SymFunc::schur(&m.dual())).collect::<Vec<_>>())
}

/// `Π_{d≥1} Ω(x^d; q^{d/2}, q^{−d/2})^{φ_d(q)}` through
/// `exp(Σ_d φ_d ψ_d log Ω(√q, 1/√q))`.
pub fn unipotent_product(g: u32, k: usize, truncation: u32) -> Result<SymSeries, SeriesError> {
    let omega = OmegaKernel::build(g, k, truncation)
        .series
        .map_coeffs(|c| at_sqrt_q(c).expect("Ω has no pole at z = √q, w = 1/√q"));
    let log = omega.log()?;
    let mut acc = SymSeries::zero(k, truncation);
    for d in 1..=truncation {
        let term = log.adams_truncated(d).scale_rf(&RationalFunction::from_poly(phi(d)));
        acc = acc.add(&term)?;
    }
    acc.exp()
}

/// `Σ_μ q^{1−d_μ/2} c_μ s_{μ′}` from the values `c_μ = ⟨𝓔 ∗ X_{C̄_{μ¹}} ∗ ⋯, 1₁⟩`.
pub fn unipotent_series_from_counts(
    g: u32,
    k: usize,
    truncation: u32,
    count: impl Fn(&[Partition]) -> RationalFunction + Sync,
) -> SymSeries {
    let q = RationalFunction::var("q");
    SymSeries::from_fn(k, truncation, |n| {
        if n == 0 {
            return SymFunc::one(k);
        }
        multipartitions(n, k)
            .par_iter()
            .map(|mu| {
                let d = dimension_unipotent(mu, g);
                let w = q.pow(1 - d / 2).expect("q is nonzero");
                schur_dual_tuple(mu).scale_rf(&(&w * &count(mu)))
            })
            .reduce(|| SymFunc::zero(vec![n; k]), |a, b| &a + &b)
    })
    .expect("homogeneous by construction")
}

/// `q Σ_{μ≠∅} ℍ_μ(√q, 1/√q) s_{μ′}`, each `ℍ_μ` extracted on its own.
pub fn unipotent_h_sum(g: u32, k: usize, truncation: u32) -> Result<SymSeries, HError> {
    let q = RationalFunction::var("q");
    let mut coeffs = vec![SymFunc::zero(vec![0; k])];
    for n in 1..=truncation {
        let mut acc = SymFunc::zero(vec![n; k]);
        for mu in multipartitions(n, k) {
            let h = h_function(&unipotent_multitype(&mu), g, truncation)?;
            let v = &q * &at_sqrt_q(&h.value)?;
            acc = &acc + &schur_dual_tuple(&mu).scale_rf(&v);
        }
        coeffs.push(acc);
    }
    Ok(SymSeries::new(k, coeffs)?)
}

/// Replaces `p_r` by `1 − uʳ` in every alphabet.
pub fn u_specialize(f: &SymFunc) -> RationalFunction {
    f.terms()
        .iter()
        .map(|(key, c)| {
            let p: SparsePoly = key
                .iter()
                .flat_map(|l| l.parts().to_vec())
                .map(|r| SparsePoly::one() - SparsePoly::monomial(rat(1), &[("u", r)]))
                .fold(SparsePoly::one(), |a, b| &a * &b);
            c.mul_poly(&p)
        })
        .sum()
}

/// `[f] = u^{|f|} f[1 − u⁻¹]` at `u = 0`, for `f` homogeneous.
pub fn top_degree_via_u(f: &SymFunc) -> RationalFunction {
    let deg: u32 = f.degree().iter().sum();
    let u = RationalFunction::var("u");
    let inv = u.inv().expect("u is nonzero");
    let g = u_specialize(f)
        .substitute(&[("u", inv)])
        .expect("polynomial in u")
        .mul_rf(&u.pow(deg as i64).expect("u is nonzero"));
    g.substitute(&[("u", RationalFunction::zero())])
        .expect("u^{|f|} clears every negative power")
}

/// `[f] = (−1)^{|f|} ⟨f, ⊗ᵢ s_{(1ⁿ)}(xᵢ)⟩`.
pub fn top_degree(f: &SymFunc) -> RationalFunction {
    let cols: Vec<SymFunc> = f
        .degree()
        .iter()
        .map(|&n| SymFunc::schur(&Partition::column(n)))
        .collect();
    let deg: u32 = f.degree().iter().sum();
    let v = f.hall(&SymFunc::tensor(&cols));
    if deg.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Coefficientwise top degree, as a series in zero alphabets.
pub fn top_degree_series(s: &SymSeries) -> SymSeries {
    let coeffs = s.coeffs().iter().map(|c| SymFunc::scalar(0, top_degree(c))).collect();
    SymSeries::new(0, coeffs).expect("scalar coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_counts() {
        assert_eq!(phi(1), SparsePoly::univariate("q", &[-1, 1]));
        assert_eq!(
            phi(2),
            SparsePoly::univariate_rat("q", &[rat(0), rat2(-1, 2), rat2(1, 2)])
        );
        // q = 3: 8 elements of F_9^* outside F_3^* form 3 orbits of size 2
        assert_eq!(phi(2).eval(&[("q", rat(3))]).unwrap(), rat(3));
    }

    #[test]
    fn u_specialization_and_top_degree() {
        let p2 = SymFunc::power(&[Partition::from([2])]);
        assert_eq!(
            u_specialize(&p2),
            RationalFunction::from_poly(SparsePoly::univariate("u", &[1, 0, -1]))
        );
        for n in 1..=4 {
            let e = SymFunc::schur(&Partition::column(n));
            let sign = RationalFunction::int(if n % 2 == 0 { 1 } else { -1 });
            assert_eq!(top_degree(&e), sign);
            assert_eq!(top_degree_via_u(&e), sign);
        }
        for l in Partition::all(4) {
            let s = SymFunc::schur(&l);
            assert_eq!(top_degree(&s), top_degree_via_u(&s), "{l}");
        }
    }

    #[test]
    fn product_matches_h_sum() {
        for (g, k) in [(0, 3), (1, 1)] {
            let p = unipotent_product(g, k, 2).unwrap();
            let lhs = p
                .plethystic_log()
                .unwrap()
                .scale_rf(&RationalFunction::from_poly(SparsePoly::univariate("q", &[-1, 1])));
            assert_eq!(lhs, unipotent_h_sum(g, k, 2).unwrap(), "g={g} k={k}");
        }
    }

    #[test]
    fn top_degree_commutes_with_log() {
        let p = unipotent_product(0, 3, 2).unwrap();
        let a = top_degree_series(&p.plethystic_log().unwrap());
        let b = top_degree_series(&p).plethystic_log().unwrap();
        assert_eq!(a, b);
    }
}
