//! Point counts through the finite type sum over `α ∈ T_n`, kept symbolic in
//! `q` and evaluated afterwards.

use rayon::prelude::*;

use crate::exact::{rat, Rational, RationalFunction, SparsePoly};
use crate::macdonald::{hall_littlewood_tilde, hook_polynomial, kt, unipotent_weight};
use crate::partitions::{MultiType, TypeT};
use crate::symfunc::{type_extension, SymFunc};

fn q_pow(e: i64) -> RationalFunction {
    RationalFunction::var("q").pow(e).expect("q is nonzero")
}

/// `Σ_{τ⊴ω} (−1)^{|ω|} K̃_{ωτ}(q) 𝓗_τ(q) H̃_τ(x;q)`, all factors taken
/// entrywise with `q ↦ q^d` on entries of degree `d`.
pub fn closure_sum(omega: &TypeT) -> SymFunc {
    let sign = if omega.size().is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    };
    let mut acc = SymFunc::zero(vec![omega.size()]);
    for tau in omega.closure_tuples() {
        let mut coeff = RationalFunction::one();
        for ((d, w), (_, t)) in omega.entries().iter().zip(&tau) {
            let k = RationalFunction::from_poly(kt(w, t)).power_vars(*d);
            coeff = &(&coeff * &k) * &unipotent_weight(t).power_vars(*d);
        }
        if coeff.is_zero() {
            continue;
        }
        let h = type_extension(hall_littlewood_tilde, &TypeT::new(tau));
        acc = &acc + &h.scale_rf(&coeff.scale(&sign));
    }
    acc
}

/// `s_{ω′}(xy)` at `y = (1, q, q², …)`.
pub fn principal_schur_dual(omega: &TypeT) -> SymFunc {
    type_extension(SymFunc::schur, &omega.dual()).y_specialize("q")
}

/// Checks `s_{ω′}(xy) = (−1)^{f(ω)} Σ_{τ⊴ω} 𝓗_τ K̃_{ωτ} H̃_τ(x;q)` exactly.
pub fn propmagic_holds(omega: &TypeT) -> bool {
    // closure_sum carries (−1)^{|ω|}; flip to (−1)^{f(ω)}.
    let flip = (omega.size() + omega.f()) % 2 == 1;
    let rhs = closure_sum(omega);
    let rhs = if flip { -&rhs } else { rhs };
    principal_schur_dual(omega) == rhs
}

/// `(q−1) ⟨𝓔 ∗ X_{C̄₁} ∗ ⋯ ∗ X_{C̄_k}, 1₁⟩` as a rational function of `q`,
/// by the sum over `α ∈ T_n` of
/// `(q−1) C^o_α q^{n(n−1)(2g−2+k)/2 − Σ n(ωᵢ)} (H_α q^{−n(α)})^{2g−2+k} Πᵢ ⟨s_α, Yᵢ⟩`
/// with `Yᵢ` the closure sum of `ωᵢ`.
pub fn count_via_type_sum_symbolic(omega: &MultiType, g: u32) -> RationalFunction {
    let n = omega.size() as i64;
    let k = omega.k() as i64;
    let e = 2 * g as i64 - 2 + k;
    let closures: Vec<SymFunc> = omega.types().iter().map(closure_sum).collect();
    let shift = n * (n - 1) * e / 2 - omega.types().iter().map(|t| t.n() as i64).sum::<i64>();
    let q1 = RationalFunction::from_poly(SparsePoly::var("q") - SparsePoly::one());
    let total = TypeT::all(n as u32)
        .par_iter()
        .map(|alpha| {
            let c = alpha.constants().c_o;
            if c == num_traits::Zero::zero() {
                return RationalFunction::zero();
            }
            let s = type_extension(SymFunc::schur, alpha);
            let pairs: RationalFunction = closures.iter().map(|y| s.hall(y)).product();
            if pairs.is_zero() {
                return pairs;
            }
            let h: RationalFunction = alpha
                .entries()
                .iter()
                .map(|(d, l)| RationalFunction::from_poly(hook_polynomial(l)).power_vars(*d))
                .product();
            let hq = (&h * &q_pow(-(alpha.n() as i64)))
                .pow(e)
                .expect("hook polynomial is nonzero");
            (&(&(&q1 * &hq) * &pairs) * &q_pow(shift)).scale(&c)
        })
        .reduce(RationalFunction::zero, |a, b| &a + &b);
    &q1 * &total
}

/// [`count_via_type_sum_symbolic`] evaluated at a prime power `q`.
pub fn count_via_type_sum(omega: &MultiType, g: u32, q: u64) -> Rational {
    count_via_type_sum_symbolic(omega, g)
        .eval(&[("q", Rational::from_integer(q.into()))])
        .expect("denominators are products of cyclotomic factors and powers of q")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfun::{h_function, specialize_h, SpecializeMode};
    use crate::partitions::{parse_multitype, parse_type};

    #[test]
    fn rank_one() {
        let om = parse_multitype("[1]").unwrap();
        assert_eq!(count_via_type_sum(&om, 1, 3), rat(4));
    }

    #[test]
    fn affine_d4() {
        let om = parse_multitype("[1][1];[1][1];[1][1];[1][1]").unwrap();
        assert_eq!(count_via_type_sum(&om, 0, 3), rat(22));
    }

    #[test]
    fn non_root_is_empty() {
        let om = parse_multitype("[1][1];[1][1]").unwrap();
        assert_eq!(count_via_type_sum_symbolic(&om, 0), RationalFunction::zero());
    }

    #[test]
    fn agrees_with_e_ic() {
        for (s, g) in [
            ("[1][1];[2];[1,1]", 0),
            ("[1][1];[1][1];[1][1];[2]", 0),
            ("(2,[1]);[1][1];[1][1];[1][1]", 0),
            ("[2]", 1),
            ("[1][1][1];[2,1];[3]", 0),
        ] {
            let om = parse_multitype(s).unwrap();
            let h = h_function(&om, g, 4).unwrap();
            let e = specialize_h(&h, SpecializeMode::EIc).unwrap();
            assert_eq!(count_via_type_sum_symbolic(&om, g), e.value, "{s}");
        }
    }

    #[test]
    fn propmagic_small() {
        for s in [
            "[1]",
            "[2]",
            "[1,1]",
            "[1][1]",
            "(2,[1])",
            "[2,1]",
            "(3,[1])",
            "(2,[1])[1]",
            "[1,1][1]",
        ] {
            assert!(propmagic_holds(&parse_type(s).unwrap()), "{s}");
        }
    }
}
