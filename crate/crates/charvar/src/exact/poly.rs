//! Sparse multivariate polynomials with rational coefficients.
//!
//! Every polynomial carries the sorted list of variables that actually occur
//! in it; binary operations align the two lists first.  Terms are kept in a
//! `BTreeMap` keyed by exponent vectors under graded-lex order, so iteration
//! order (and therefore serialization) is canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat2(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A named indeterminate.
///
/// Variables are ordered by a fixed rank for the names used throughout the
/// engine (`z, w, q, t, s, u, T`) and alphabetically after that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn rank(&self) -> usize {
        match &*self.0 {
            "z" => 0,
            "w" => 1,
            "q" => 2,
            "t" => 3,
            "s" => 4,
            "u" => 5,
            "T" => 6,
            _ => 7,
        }
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    vars: Vec<Var>,
    terms: BTreeMap<Mono, Rational>,
}

fn merge_vars(a: &[Var], b: &[Var]) -> Vec<Var> {
    let mut out: Vec<Var> = a.iter().chain(b).cloned().collect();
    out.sort();
    out.dedup();
    out
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(Vec::new()), c);
        }
        SparsePoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `coeff * Π name^exp`; repeated names multiply.
    pub fn monomial(coeff: Rational, factors: &[(&str, u32)]) -> Self {
        let mut vars: Vec<Var> = factors.iter().map(|(n, _)| Var::new(n)).collect();
        vars.sort();
        vars.dedup();
        let mut exps = vec![0u32; vars.len()];
        for (n, e) in factors {
            let v = Var::new(n);
            let i = vars.binary_search(&v).unwrap();
            exps[i] += e;
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Mono(exps), coeff);
        }
        SparsePoly { vars, terms }.trimmed()
    }

    /// Builds a polynomial from `(coeff, [(var, exp)])` pairs.
    pub fn from_terms<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<(&'a str, u32)>)>,
    {
        let mut acc = SparsePoly::zero();
        for (c, f) in terms {
            acc = &acc + &SparsePoly::monomial(c, &f);
        }
        acc
    }

    /// Univariate polynomial from ascending integer coefficients.
    pub fn univariate(name: &str, coeffs: &[i64]) -> Self {
        Self::univariate_rat(name, &coeffs.iter().map(|&c| rat(c)).collect::<Vec<_>>())
    }

    pub fn univariate_rat(name: &str, coeffs: &[Rational]) -> Self {
        let v = Var::new(name);
        let mut terms = BTreeMap::new();
        for (e, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(Mono(vec![e as u32]), c.clone());
            }
        }
        SparsePoly { vars: vec![v], terms }.trimmed()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn has_var(&self, name: &str) -> bool {
        self.vars.iter().any(|v| v.name() == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    /// Constant value if the polynomial has no variables.
    pub fn constant_value(&self) -> Option<Rational> {
        if !self.vars.is_empty() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order as `(coeff, [(var, exp)])`,
    /// omitting zero exponents.
    pub fn terms(&self) -> Vec<(Rational, Vec<(Var, u32)>)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let f = self
                    .vars
                    .iter()
                    .zip(&m.0)
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| (v.clone(), e))
                    .collect();
                (c.clone(), f)
            })
            .collect()
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Mono, Rational> {
        &self.terms
    }

    pub(crate) fn from_raw(vars: Vec<Var>, terms: BTreeMap<Mono, Rational>) -> Self {
        SparsePoly { vars, terms }.trimmed()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.vars.iter().position(|v| v.name() == name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Lowest exponent of `name` over all terms.
    pub fn min_degree_in(&self, name: &str) -> u32 {
        match self.vars.iter().position(|v| v.name() == name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0),
            None => 0,
        }
    }

    fn trimmed(mut self) -> Self {
        let n = self.vars.len();
        if n == 0 {
            return self;
        }
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (u, &e) in used.iter_mut().zip(&m.0) {
                *u |= e > 0;
            }
        }
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| {
                let e = m.0.iter().zip(&used).filter(|(_, &u)| u).map(|(&e, _)| e).collect();
                (Mono(e), c)
            })
            .collect();
        SparsePoly { vars, terms }
    }

    /// Terms re-expressed over a superset `vars` of the own variables.
    fn terms_over(&self, vars: &[Var]) -> BTreeMap<Mono, Rational> {
        if self.vars.as_slice() == vars {
            return self.terms.clone();
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("variable superset"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; vars.len()];
                for (&i, &x) in idx.iter().zip(&m.0) {
                    e[i] = x;
                }
                (Mono(e), c.clone())
            })
            .collect()
    }

    fn combine(&self, other: &SparsePoly, negate: bool) -> SparsePoly {
        let vars = merge_vars(&self.vars, &other.vars);
        let mut terms = self.terms_over(&vars);
        let rhs = if other.vars == vars {
            std::borrow::Cow::Borrowed(&other.terms)
        } else {
            std::borrow::Cow::Owned(other.terms_over(&vars))
        };
        for (m, c) in rhs.iter() {
            match terms.get_mut(m) {
                Some(x) => {
                    if negate {
                        *x -= c;
                    } else {
                        *x += c;
                    }
                    if x.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), if negate { -c.clone() } else { c.clone() });
                }
            }
        }
        SparsePoly { vars, terms }.trimmed()
    }

    pub fn mul_poly(&self, other: &SparsePoly) -> SparsePoly {
        if self.is_zero() || other.is_zero() {
            return SparsePoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        let vars = merge_vars(&self.vars, &other.vars);
        let a = self.terms_over(&vars);
        let b = other.terms_over(&vars);
        let mut acc: std::collections::HashMap<Vec<u32>, Rational> =
            std::collections::HashMap::with_capacity(a.len() * b.len());
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let p = ca * cb;
                match acc.get_mut(&e) {
                    Some(x) => *x += p,
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Mono(e), c))
            .collect();
        SparsePoly { vars, terms }.trimmed()
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = SparsePoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Multiplies by `Π name^exp`.
    pub fn shift(&self, factors: &[(&str, u32)]) -> SparsePoly {
        self.mul_poly(&SparsePoly::monomial(Rational::one(), factors))
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &SparsePoly) -> Option<SparsePoly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(SparsePoly::zero());
        }
        if let Some(c) = other.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        if other.vars.iter().any(|v| !self.vars.contains(v)) {
            return None;
        }
        let vars = self.vars.clone();
        let mut rem = self.terms.clone();
        let div = other.terms_over(&vars);
        let (lm, lc) = div.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quot: BTreeMap<Mono, Rational> = BTreeMap::new();
        while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = Mono(rm.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect());
            let qc = &rc / &lc;
            for (dm, dc) in &div {
                let e = Mono(dm.0.iter().zip(&qm.0).map(|(a, b)| a + b).collect());
                let p = dc * &qc;
                match rem.get_mut(&e) {
                    Some(x) => {
                        *x -= &p;
                        if x.is_zero() {
                            rem.remove(&e);
                        }
                    }
                    None => {
                        rem.insert(e, -p);
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Some(SparsePoly { vars, terms: quot }.trimmed())
    }

    /// Coefficients of `self` viewed as a polynomial in `name`, indexed by
    /// degree; each coefficient lives in the remaining variables.
    pub fn coeffs_in(&self, name: &str) -> Vec<SparsePoly> {
        let Some(i) = self.vars.iter().position(|v| v.name() == name) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(name) as usize;
        let rest: Vec<Var> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let mut parts: Vec<BTreeMap<Mono, Rational>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let d = e.remove(i) as usize;
            parts[d].insert(Mono(e), c.clone());
        }
        parts
            .into_iter()
            .map(|t| SparsePoly::from_raw(rest.clone(), t))
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(name: &str, coeffs: &[SparsePoly]) -> SparsePoly {
        let mut acc = SparsePoly::zero();
        for (d, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &c.shift(&[(name, d as u32)]);
            }
        }
        acc
    }

    /// Multiplies every exponent by `n`: the substitution `v ↦ vⁿ` for all
    /// variables at once.
    pub fn power_vars(&self, n: u32) -> SparsePoly {
        if n == 1 {
            return self.clone();
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono(m.0.iter().map(|e| e * n).collect()), c.clone()))
                .collect(),
        }
    }

    /// Renames variables; targets must not collide with untouched names.
    pub fn rename(&self, map: &[(&str, &str)]) -> SparsePoly {
        let mut acc = SparsePoly::zero();
        for (c, f) in self.terms() {
            let f: Vec<(String, u32)> = f
                .into_iter()
                .map(|(v, e)| {
                    let n = map
                        .iter()
                        .find(|(a, _)| *a == v.name())
                        .map(|(_, b)| b.to_string())
                        .unwrap_or_else(|| v.name().to_string());
                    (n, e)
                })
                .collect();
            let f: Vec<(&str, u32)> = f.iter().map(|(n, e)| (n.as_str(), *e)).collect();
            acc = &acc + &SparsePoly::monomial(c, &f);
        }
        acc
    }

    /// Evaluates every variable at a rational point; missing bindings error
    /// with the variable name.
    pub fn eval(&self, point: &[(&str, Rational)]) -> Result<Rational, String> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match point.iter().find(|(n, _)| *n == v.name()) {
                Some((_, x)) => vals.push(x.clone()),
                None => return Err(format!("no value for variable {v}")),
            }
        }
        let mut pows: Vec<Vec<Rational>> = vals.iter().map(|x| vec![Rational::one(), x.clone()]).collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while pows[i].len() <= e {
                    let nx = pows[i].last().unwrap() * &vals[i];
                    pows[i].push(nx);
                }
                t *= &pows[i][e];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Least common multiple of the coefficient denominators divided by the
    /// gcd of the numerators, signed so that the leading coefficient of
    /// `self * factor` is positive.
    pub fn primitive_factor(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
            g = g.gcd(c.numer());
        }
        let mut f = Rational::new(l, g);
        if self.leading_coeff().is_negative() {
            f = -f;
        }
        f
    }

    /// Integer-coefficient primitive associate with positive leading
    /// coefficient.
    pub fn primitive(&self) -> SparsePoly {
        self.scale(&self.primitive_factor())
    }

    /// Monic associate (leading coefficient 1).
    pub fn monic(&self) -> SparsePoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Coefficients of a univariate polynomial in ascending degree.
    pub fn univariate_coeffs(&self, name: &str) -> Option<Vec<Rational>> {
        if self.vars.iter().any(|v| v.name() != name) {
            return None;
        }
        let d = self.degree_in(name) as usize;
        let mut out = vec![Rational::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.0.first().copied().unwrap_or(0) as usize;
            out[e] = c.clone();
        }
        Some(out)
    }
}

impl std::ops::Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.combine(rhs, false)
    }
}

impl std::ops::Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.combine(rhs, true)
    }
}

impl std::ops::Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_poly(rhs)
    }
}

impl std::ops::Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Add for SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: SparsePoly) -> SparsePoly {
        &self + &rhs
    }
}

impl std::ops::Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: SparsePoly) -> SparsePoly {
        &self - &rhs
    }
}

impl std::ops::Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        self.mul_poly(&rhs)
    }
}

impl std::ops::Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, vars)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = vars
                .iter()
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> SparsePoly {
        SparsePoly::var("q")
    }

    #[test]
    fn expand_matches_term_by_term_oracle() {
        // (1 - q)(1 - q^2) q
        let one = SparsePoly::one();
        let p = &(&(&one - &q()) * &(&one - &q().pow(2))) * &q();
        // oracle: convolve coefficient vectors by hand
        let a = [1i64, -1];
        let b = [1i64, 0, -1];
        let mut c = [0i64; 5];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                c[i + j + 1] += x * y;
            }
        }
        assert_eq!(p, SparsePoly::univariate("q", &c));
        assert_eq!(p.to_string(), "q^4 - q^3 - q^2 + q");
    }

    #[test]
    fn zero_power_is_one() {
        let zw = &SparsePoly::var("z") - &SparsePoly::var("w");
        assert!(zw.pow(0).is_one());
    }

    #[test]
    fn cancellation_trims_variables() {
        let z = SparsePoly::var("z");
        let w = SparsePoly::var("w");
        let d = &(&z + &w) - &z;
        assert_eq!(d.vars().len(), 1);
        assert_eq!(d, w);
    }

    #[test]
    fn exact_division() {
        let q2m1 = SparsePoly::univariate("q", &[-1, 0, 1]);
        let qm1 = SparsePoly::univariate("q", &[-1, 1]);
        assert_eq!(q2m1.div_exact(&qm1).unwrap(), SparsePoly::univariate("q", &[1, 1]));
        assert!(qm1.div_exact(&q2m1).is_none());
        let z = SparsePoly::var("z");
        assert!(qm1.div_exact(&z).is_none());
    }

    #[test]
    fn graded_lex_order() {
        let p = SparsePoly::from_terms([(rat(1), vec![("w", 2)]), (rat(4), vec![]), (rat(1), vec![("z", 2)])]);
        assert_eq!(p.to_string(), "z^2 + w^2 + 4");
    }

    #[test]
    fn coefficient_split_round_trip() {
        let p = SparsePoly::from_terms([
            (rat(3), vec![("z", 2), ("w", 1)]),
            (rat(-1), vec![("w", 3)]),
            (rat(2), vec![("z", 1)]),
        ]);
        let c = p.coeffs_in("z");
        assert_eq!(c.len(), 3);
        assert_eq!(SparsePoly::from_coeffs_in("z", &c), p);
    }

    #[test]
    fn evaluation() {
        let p = SparsePoly::univariate("q", &[1, 4, 1]);
        assert_eq!(p.eval(&[("q", rat(3))]).unwrap(), rat(22));
        assert!(p.eval(&[]).is_err());
    }
}
