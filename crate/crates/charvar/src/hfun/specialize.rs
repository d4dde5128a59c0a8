//! Substitutions of `ℍ_ω` into counting and Hodge-type polynomials.  Square
//! roots of `q` go through the variable `s` with `q = s²`.

use std::fmt;

use super::hfunction::HFunction;
use crate::exact::{rat, AlgebraError, Rational, RationalFunction, SparsePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecializeMode {
    /// `q^{d/2} ℍ(1/√q, √q)`
    EIc,
    /// `ℍ(0, √q)`
    Pure,
    /// `q^{d/2} ℍ(0, √q)`
    PurePoincare,
    /// `(t√q)^d ℍ(−1/√q, t√q)`
    Mixed,
    /// The `EIc` substitution applied to types with degrees above one.
    TwistedCheck,
}

impl fmt::Display for SpecializeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecializeMode::EIc => "e_ic",
            SpecializeMode::Pure => "pure",
            SpecializeMode::PurePoincare => "pure_poincare",
            SpecializeMode::Mixed => "mixed",
            SpecializeMode::TwistedCheck => "twisted_check",
        })
    }
}

/// Polynomial result, or the rational function that failed to be one.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Polynomial(SparsePoly),
    NotPolynomial(RationalFunction),
}

impl Outcome {
    pub fn polynomial(&self) -> Option<&SparsePoly> {
        match self {
            Outcome::Polynomial(p) => Some(p),
            Outcome::NotPolynomial(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Specialization {
    pub mode: SpecializeMode,
    pub value: RationalFunction,
    pub outcome: Outcome,
    /// `E(q) = q^d E(1/q)`, for the `EIc`-type modes with a polynomial result.
    pub palindromic: Option<bool>,
    pub conjectural: bool,
}

fn var(v: &str) -> RationalFunction {
    RationalFunction::var(v)
}

fn s_pow(e: i64) -> RationalFunction {
    RationalFunction::from_poly(SparsePoly::monomial(rat(1), &[("s", e as u32)]))
}

/// `E(q) = q^d E(1/q)` for a polynomial in `q`.
pub fn is_palindromic(e: &SparsePoly, d: i64) -> bool {
    if e.is_zero() {
        return true;
    }
    let Some(c) = e.univariate_coeffs("q") else {
        return false;
    };
    if d < 0 || c.len() as i64 > d + 1 {
        return false;
    }
    let d = d as usize;
    let at = |i: usize| c.get(i).cloned().unwrap_or_else(|| Rational::from_integer(0.into()));
    (0..=d).all(|i| at(i) == at(d - i))
}

pub fn specialize_h(h: &HFunction, mode: SpecializeMode) -> Result<Specialization, AlgebraError> {
    let d = h.d;
    let half = |f: RationalFunction| f.even_in("s", "q");
    let value = match mode {
        SpecializeMode::EIc | SpecializeMode::TwistedCheck => {
            let f = h.value.substitute(&[("z", var("s").inv()?), ("w", var("s"))])?;
            half(&f * &s_pow(d))?
        }
        SpecializeMode::Pure | SpecializeMode::PurePoincare => {
            let f = half(
                h.value
                    .substitute(&[("z", RationalFunction::zero()), ("w", var("s"))])?,
            )?;
            if mode == SpecializeMode::PurePoincare {
                &f * &RationalFunction::from_poly(SparsePoly::monomial(rat(1), &[("q", (d / 2) as u32)]))
            } else {
                f
            }
        }
        SpecializeMode::Mixed => {
            let ts = &var("t") * &var("s");
            let f = h.value.substitute(&[("z", -var("s").inv()?), ("w", ts.clone())])?;
            half(&f * &ts.pow(d)?)?
        }
    };
    let outcome = match value.assert_polynomial() {
        Ok(p) => Outcome::Polynomial(p),
        Err(_) => Outcome::NotPolynomial(value.clone()),
    };
    let palindromic = match (mode, &outcome) {
        (SpecializeMode::EIc | SpecializeMode::TwistedCheck, Outcome::Polynomial(p)) => Some(is_palindromic(p, d)),
        _ => None,
    };
    Ok(Specialization {
        mode,
        value,
        outcome,
        palindromic,
        conjectural: mode == SpecializeMode::Mixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfun::h_function;
    use crate::partitions::parse_multitype;

    fn q(coeffs: &[i64]) -> SparsePoly {
        SparsePoly::univariate("q", coeffs)
    }

    #[test]
    fn genus_one_rank_one() {
        let h = h_function(&parse_multitype("[1]").unwrap(), 1, 1).unwrap();
        let e = specialize_h(&h, SpecializeMode::EIc).unwrap();
        assert_eq!(e.outcome, Outcome::Polynomial(q(&[1, -2, 1])));
        assert_eq!(e.palindromic, Some(true));
    }

    #[test]
    fn affine_d4() {
        let h = h_function(&parse_multitype("[1][1];[1][1];[1][1];[1][1]").unwrap(), 0, 2).unwrap();
        let e = specialize_h(&h, SpecializeMode::EIc).unwrap();
        assert_eq!(e.outcome, Outcome::Polynomial(q(&[1, 4, 1])));
        assert_eq!(e.palindromic, Some(true));
        let p = specialize_h(&h, SpecializeMode::Pure).unwrap();
        assert_eq!(p.outcome, Outcome::Polynomial(q(&[4, 1])));
        let pp = specialize_h(&h, SpecializeMode::PurePoincare).unwrap();
        assert_eq!(pp.outcome, Outcome::Polynomial(q(&[0, 4, 1])));
        // t² + 4qt² + q²t⁴
        let m = specialize_h(&h, SpecializeMode::Mixed).unwrap();
        let t2 = SparsePoly::monomial(rat(1), &[("t", 2)]);
        let expect = &(&t2 + &t2.shift(&[("q", 1)]).scale(&rat(4))) + &t2.pow(2).shift(&[("q", 2)]);
        assert_eq!(m.outcome, Outcome::Polynomial(expect));
        assert!(m.conjectural);
    }

    #[test]
    fn palindromic_check() {
        assert!(is_palindromic(&q(&[1, 4, 1]), 2));
        assert!(!is_palindromic(&q(&[1, 4]), 2));
        assert!(!is_palindromic(&q(&[1, 4, 1]), 4));
        assert!(is_palindromic(&q(&[0, 1, 0]), 2));
    }
}
