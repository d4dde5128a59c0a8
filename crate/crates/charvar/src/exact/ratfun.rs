//! Rational functions: normalized quotients of sparse polynomials.

use std::fmt;

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::{rat, Rational, SparsePoly};
use super::AlgebraError;

/// `num / den` with `gcd(num, den) = 1` and `den` an integer primitive
/// polynomial with positive leading coefficient.  The representation is
/// unique, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: SparsePoly,
    den: SparsePoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: SparsePoly::zero(),
            den: SparsePoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: SparsePoly::constant(c),
            den: SparsePoly::one(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(SparsePoly::var(name))
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        RationalFunction {
            num: p,
            den: SparsePoly::one(),
        }
    }

    /// Normalizing constructor.
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: SparsePoly, den: SparsePoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.constant_value() {
            return RationalFunction {
                num: num.scale(&c.recip()),
                den: SparsePoly::one(),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::fix_content(num, den)
    }

    /// Assumes `gcd(num, den) = 1`; only rescales.
    fn fix_content(num: SparsePoly, den: SparsePoly) -> Self {
        if let Some(c) = den.constant_value() {
            return RationalFunction {
                num: num.scale(&c.recip()),
                den: SparsePoly::one(),
            };
        }
        let f = den.primitive_factor();
        RationalFunction {
            num: num.scale(&f),
            den: den.scale(&f),
        }
    }

    pub fn numer(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denom(&self) -> &SparsePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn has_var(&self, name: &str) -> bool {
        self.num.has_var(name) || self.den.has_var(name)
    }

    pub fn add_rf(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(&self.num + &o.num);
        }
        if self.den == o.den {
            let n = &self.num + &o.num;
            return Self::normalized(n, self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = &self.num.mul_poly(&o.den) + &o.num.mul_poly(&self.den);
            let d = self.den.mul_poly(&o.den);
            // gcd(n, d) = 1 when the denominators are coprime.
            return Self::fix_content(n, d);
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = o.den.div_exact(&g).unwrap();
        let n = &self.num.mul_poly(&d1) + &o.num.mul_poly(&b1);
        if n.is_zero() {
            return Self::zero();
        }
        let g2 = gcd(&n, &g);
        let (n, gr) = if g2.is_one() {
            (n, g)
        } else {
            (n.div_exact(&g2).unwrap(), g.div_exact(&g2).unwrap())
        };
        let d = b1.mul_poly(&d1).mul_poly(&gr);
        Self::fix_content(n, d)
    }

    pub fn neg_rf(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub_rf(&self, o: &Self) -> Self {
        self.add_rf(&o.neg_rf())
    }

    pub fn mul_rf(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul_poly(&o.num));
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = o.den.div_exact(&g1).unwrap();
        let c = o.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        Self::fix_content(a.mul_poly(&c), b.mul_poly(&d))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> Self {
        self.mul_rf(&Self::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::fix_content(self.den.clone(), self.num.clone()))
    }

    pub fn div_rf(&self, o: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul_rf(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        if e == 0 {
            return Ok(Self::one());
        }
        Ok(Self::fix_content(self.num.pow(e), self.den.pow(e)))
    }

    /// `v ↦ vⁿ` for every variable.
    pub fn power_vars(&self, n: u32) -> Self {
        if n == 1 {
            return self.clone();
        }
        Self::normalized(self.num.power_vars(n), self.den.power_vars(n))
    }

    /// Simultaneous substitution of variables by rational functions.
    pub fn substitute(&self, bindings: &[(&str, RationalFunction)]) -> Result<Self, AlgebraError> {
        let n = subst_poly(&self.num, bindings);
        let d = subst_poly(&self.den, bindings);
        if d.is_zero() {
            let culprits: Vec<String> = bindings
                .iter()
                .filter(|(v, _)| self.den.has_var(v))
                .map(|(v, f)| format!("{v} ↦ {f}"))
                .collect();
            return Err(AlgebraError::ZeroDenominator {
                binding: culprits.join(", "),
            });
        }
        n.div_rf(&d)
    }

    /// Evaluates at a rational point covering every variable.
    pub fn eval(&self, point: &[(&str, Rational)]) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(point).map_err(AlgebraError::Unbound)?;
        if d.is_zero() {
            let culprits: Vec<String> = point
                .iter()
                .filter(|(v, _)| self.den.has_var(v))
                .map(|(v, x)| format!("{v} ↦ {x}"))
                .collect();
            return Err(AlgebraError::ZeroDenominator {
                binding: culprits.join(", "),
            });
        }
        let n = self.num.eval(point).map_err(AlgebraError::Unbound)?;
        Ok(n / d)
    }

    /// The numerator, provided the normalized denominator is a constant.
    pub fn assert_polynomial(&self) -> Result<SparsePoly, AlgebraError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(AlgebraError::NotPolynomial {
                denominator: self.den.clone(),
            })
        }
    }

    /// Rewrites a function of `s` that only involves even powers of `s` as a
    /// function of `q = s²`.
    pub fn even_in(&self, s: &str, q: &str) -> Result<Self, AlgebraError> {
        let n = halve(&self.num, s, q)?;
        let d = halve(&self.den, s, q)?;
        Ok(Self::fix_content(n, d))
    }
}

fn halve(p: &SparsePoly, s: &str, q: &str) -> Result<SparsePoly, AlgebraError> {
    if !p.has_var(s) {
        return Ok(p.clone());
    }
    let coeffs = p.coeffs_in(s);
    let mut out = Vec::with_capacity(coeffs.len() / 2 + 1);
    for (e, c) in coeffs.iter().enumerate() {
        if e % 2 == 1 {
            if !c.is_zero() {
                return Err(AlgebraError::OddPower {
                    var: s.to_string(),
                    poly: p.clone(),
                });
            }
        } else {
            out.push(c.clone());
        }
    }
    Ok(SparsePoly::from_coeffs_in(q, &out))
}

/// Result is a polynomial in `q = s²`; errors otherwise.
pub fn assert_poly_in_qsq(f: &RationalFunction, s: &str, q: &str) -> Result<SparsePoly, AlgebraError> {
    f.even_in(s, q)?.assert_polynomial()
}

fn subst_poly(p: &SparsePoly, bindings: &[(&str, RationalFunction)]) -> RationalFunction {
    let active: Vec<(&str, &RationalFunction, u32)> = bindings
        .iter()
        .filter(|(v, _)| p.has_var(v))
        .map(|(v, f)| (*v, f, p.degree_in(v)))
        .collect();
    if active.is_empty() {
        return RationalFunction::from_poly(p.clone());
    }
    // Power tables for numerators and denominators of each binding.
    let tables: Vec<(Vec<SparsePoly>, Vec<SparsePoly>)> = active
        .iter()
        .map(|(_, f, d)| {
            let mut a = vec![SparsePoly::one()];
            let mut b = vec![SparsePoly::one()];
            for _ in 0..*d {
                a.push(a.last().unwrap().mul_poly(f.numer()));
                b.push(b.last().unwrap().mul_poly(f.denom()));
            }
            (a, b)
        })
        .collect();
    let mut num = SparsePoly::zero();
    for (c, factors) in p.terms() {
        let mut term = SparsePoly::constant(c);
        let mut free: Vec<(String, u32)> = Vec::new();
        let mut seen = vec![0u32; active.len()];
        for (v, e) in &factors {
            match active.iter().position(|(n, _, _)| *n == v.name()) {
                Some(i) => seen[i] = *e,
                None => free.push((v.name().to_string(), *e)),
            }
        }
        for (i, (_, _, d)) in active.iter().enumerate() {
            let e = seen[i] as usize;
            term = term.mul_poly(&tables[i].0[e]).mul_poly(&tables[i].1[*d as usize - e]);
        }
        let free: Vec<(&str, u32)> = free.iter().map(|(v, e)| (v.as_str(), *e)).collect();
        num = &num + &term.shift(&free);
    }
    let mut den = SparsePoly::one();
    for (i, (_, _, d)) in active.iter().enumerate() {
        den = den.mul_poly(&tables[i].1[*d as usize]);
    }
    RationalFunction::normalized(num, den)
}

impl From<SparsePoly> for RationalFunction {
    fn from(p: SparsePoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        RationalFunction::int(n)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        RationalFunction::constant(c)
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_rf(rhs)
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.sub_rf(rhs)
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.mul_rf(rhs)
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_rf()
    }
}

impl std::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        self.add_rf(&rhs)
    }
}

impl std::ops::Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        self.sub_rf(&rhs)
    }
}

impl std::ops::Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        self.mul_rf(&rhs)
    }
}

impl std::ops::Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_rf()
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |a, b| a.add_rf(&b))
    }
}

impl std::iter::Product for RationalFunction {
    fn product<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::one(), |a, b| a.mul_rf(&b))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> RationalFunction {
        RationalFunction::var(n)
    }

    fn one() -> RationalFunction {
        RationalFunction::one()
    }

    #[test]
    fn gcd_cancellation() {
        let z21 = &(&v("z") * &v("z")) - &one();
        let w = &one() - &(&v("w") * &v("w"));
        let r = (&z21 * &w).div_rf(&z21).unwrap();
        assert_eq!(r, w);
    }

    #[test]
    fn division_by_zero_errors() {
        assert!(matches!(
            one().div_rf(&RationalFunction::zero()),
            Err(AlgebraError::DivisionByZero)
        ));
    }

    #[test]
    fn laurent_substitution() {
        let zw = &v("z") - &v("w");
        let f = &zw * &zw;
        let s = v("s");
        let r = f.substitute(&[("z", s.inv().unwrap()), ("w", s.clone())]).unwrap();
        let one_minus_s2 = &one() - &(&s * &s);
        let expect = (&one_minus_s2 * &one_minus_s2).div_rf(&(&s * &s)).unwrap();
        assert_eq!(r, expect);
        let q = assert_poly_in_qsq(&(&r * &(&s * &s)), "s", "q").unwrap();
        assert_eq!(q, SparsePoly::univariate("q", &[1, -2, 1]));
    }

    #[test]
    fn partial_specialization() {
        let f = &(&(&v("z") * &v("z")) + &RationalFunction::int(4)) + &(&v("w") * &v("w"));
        let r = f.substitute(&[("z", RationalFunction::zero()), ("w", v("s"))]).unwrap();
        assert_eq!(r.assert_polynomial().unwrap(), SparsePoly::univariate("s", &[4, 0, 1]));
    }

    #[test]
    fn polynomial_assertions() {
        let q = v("q");
        let a = (&(&q * &q) - &one()).div_rf(&(&q - &one())).unwrap();
        assert_eq!(a.assert_polynomial().unwrap(), SparsePoly::univariate("q", &[1, 1]));
        let b = (&q - &one()).inv().unwrap();
        match b.assert_polynomial() {
            Err(AlgebraError::NotPolynomial { denominator }) => {
                assert_eq!(denominator, SparsePoly::univariate("q", &[-1, 1]))
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn zero_denominator_names_binding() {
        let f = (&v("q") - &one()).inv().unwrap();
        let err = f.substitute(&[("q", one())]).unwrap_err();
        assert!(err.to_string().contains("q ↦ 1"), "{err}");
    }

    #[test]
    fn odd_power_rejected() {
        assert!(assert_poly_in_qsq(&v("s"), "s", "q").is_err());
    }

    #[test]
    fn canonical_denominator() {
        let a = RationalFunction::new(SparsePoly::int(2), SparsePoly::univariate("q", &[2, -4])).unwrap();
        // 2/(2 - 4q) = -1/(2q - 1)
        assert_eq!(a.denom(), &SparsePoly::univariate("q", &[-1, 2]));
        assert_eq!(a.numer(), &SparsePoly::int(-1));
    }
}
