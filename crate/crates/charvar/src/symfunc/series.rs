use std::fmt;

use thiserror::Error;

use super::sym::SymFunc;
use crate::arith::{divisors, mobius};
use crate::exact::{rat, rat2, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term must be 1, found {0}")]
    ConstantNotOne(String),
    #[error("constant term must be 0, found {0}")]
    ConstantNotZero(String),
    #[error("truncation overflow: a nonzero term would land in T-degree {degree} > N = {truncation}")]
    TruncationOverflow { degree: u32, truncation: u32 },
    #[error("series shape mismatch: {0}")]
    Shape(String),
}

/// Truncated series `Σ_{n≤N} fₙ Tⁿ` whose coefficient `fₙ` has multidegree
/// `(n,…,n)` in `k` alphabets.
#[derive(Clone, PartialEq)]
pub struct SymSeries {
    k: usize,
    coeffs: Vec<SymFunc>,
}

impl SymSeries {
    pub fn zero(k: usize, truncation: u32) -> Self {
        SymSeries {
            k,
            coeffs: (0..=truncation).map(|n| SymFunc::zero(vec![n; k])).collect(),
        }
    }

    pub fn one(k: usize, truncation: u32) -> Self {
        let mut s = Self::zero(k, truncation);
        s.coeffs[0] = SymFunc::one(k);
        s
    }

    /// Builds a series from its coefficients `f₀,…,f_N`.
    pub fn new(k: usize, coeffs: Vec<SymFunc>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Shape("no coefficients".into()));
        }
        for (n, c) in coeffs.iter().enumerate() {
            if c.k() != k || c.degree().iter().any(|&d| d as usize != n) {
                return Err(SeriesError::Shape(format!(
                    "coefficient of T^{n} has multidegree {:?}",
                    c.degree()
                )));
            }
        }
        Ok(SymSeries { k, coeffs })
    }

    pub fn from_fn(k: usize, truncation: u32, f: impl Fn(u32) -> SymFunc) -> Result<Self, SeriesError> {
        Self::new(k, (0..=truncation).map(f).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn truncation(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, n: u32) -> &SymFunc {
        &self.coeffs[n as usize]
    }

    pub fn coeffs(&self) -> &[SymFunc] {
        &self.coeffs
    }

    fn check_shape(&self, o: &SymSeries) -> Result<(), SeriesError> {
        if self.k != o.k || self.truncation() != o.truncation() {
            return Err(SeriesError::Shape(format!(
                "(k={}, N={}) vs (k={}, N={})",
                self.k,
                self.truncation(),
                o.k,
                o.truncation()
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &SymSeries) -> Result<SymSeries, SeriesError> {
        self.check_shape(o)?;
        Ok(SymSeries {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &SymSeries) -> Result<SymSeries, SeriesError> {
        self.check_shape(o)?;
        Ok(SymSeries {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, o: &SymSeries) -> Result<SymSeries, SeriesError> {
        self.check_shape(o)?;
        let n = self.truncation();
        let mut out = SymSeries::zero(self.k, n);
        for i in 0..=n as usize {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n as usize - i) {
                if o.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &o.coeffs[j]);
            }
        }
        Ok(out)
    }

    pub fn scale_rf(&self, c: &RationalFunction) -> SymSeries {
        SymSeries {
            k: self.k,
            coeffs: self.coeffs.iter().map(|f| f.scale_rf(c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> SymSeries {
        SymSeries {
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c.map_coeffs(&f)).collect(),
        }
    }

    /// `ψ_d`; fails if a nonzero coefficient would move past the truncation.
    pub fn adams(&self, d: u32) -> Result<SymSeries, SeriesError> {
        let n = self.truncation();
        if let Some(m) = (1..=n).find(|&m| m * d > n && !self.coeffs[m as usize].is_zero()) {
            return Err(SeriesError::TruncationOverflow {
                degree: m * d,
                truncation: n,
            });
        }
        Ok(self.adams_truncated(d))
    }

    /// `ψ_d`, dropping whatever lands past the truncation.
    pub fn adams_truncated(&self, d: u32) -> SymSeries {
        let n = self.truncation();
        let mut out = SymSeries::zero(self.k, n);
        for m in 0..=n / d {
            out.coeffs[(m * d) as usize] = self.coeffs[m as usize].adams(d);
        }
        out
    }

    fn constant(&self) -> RationalFunction {
        self.coeffs[0].constant()
    }

    /// Ordinary `log F` for `F ∈ 1 + TΛ[[T]]`, from `F′ = (log F)′ F`.
    pub fn log(&self) -> Result<SymSeries, SeriesError> {
        let c = self.constant();
        if !c.is_one() {
            return Err(SeriesError::ConstantNotOne(c.to_string()));
        }
        let n = self.truncation() as usize;
        let mut l = SymSeries::zero(self.k, n as u32);
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&rat(m as i64));
            for j in 1..m {
                if l.coeffs[j].is_zero() || self.coeffs[m - j].is_zero() {
                    continue;
                }
                acc = &acc - &(&l.coeffs[j] * &self.coeffs[m - j]).scale(&rat(j as i64));
            }
            l.coeffs[m] = acc.scale(&rat2(1, m as i64));
        }
        Ok(l)
    }

    /// Ordinary `exp G` for `G ∈ TΛ[[T]]`.
    pub fn exp(&self) -> Result<SymSeries, SeriesError> {
        let c = self.constant();
        if !c.is_zero() {
            return Err(SeriesError::ConstantNotZero(c.to_string()));
        }
        let n = self.truncation() as usize;
        let mut e = SymSeries::one(self.k, n as u32);
        for m in 1..=n {
            let mut acc = SymFunc::zero(vec![m as u32; self.k]);
            for j in 1..=m {
                if self.coeffs[j].is_zero() || e.coeffs[m - j].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[j] * &e.coeffs[m - j]).scale(&rat(j as i64));
            }
            e.coeffs[m] = acc.scale(&rat2(1, m as i64));
        }
        Ok(e)
    }

    /// `Log = Ψ⁻¹ ∘ log` with `Ψ⁻¹(f) = Σ μ(d) ψ_d(f)/d`.
    pub fn plethystic_log(&self) -> Result<SymSeries, SeriesError> {
        let l = self.log()?;
        Ok(l.psi_inverse())
    }

    /// `Exp = exp ∘ Ψ` with `Ψ(f) = Σ ψ_d(f)/d`.
    pub fn plethystic_exp(&self) -> Result<SymSeries, SeriesError> {
        let c = self.constant();
        if !c.is_zero() {
            return Err(SeriesError::ConstantNotZero(c.to_string()));
        }
        self.psi().exp()
    }

    fn psi(&self) -> SymSeries {
        self.divisor_sum(|_| 1)
    }

    fn psi_inverse(&self) -> SymSeries {
        self.divisor_sum(mobius)
    }

    fn divisor_sum(&self, weight: impl Fn(u64) -> i64) -> SymSeries {
        let n = self.truncation();
        let mut out = SymSeries::zero(self.k, n);
        for m in 1..=n {
            let mut acc = SymFunc::zero(vec![m; self.k]);
            for d in divisors(m as u64) {
                let w = weight(d);
                let src = &self.coeffs[(m as u64 / d) as usize];
                if w == 0 || src.is_zero() {
                    continue;
                }
                acc = &acc + &src.adams(d as u32).scale(&rat2(w, d as i64));
            }
            out.coeffs[m as usize] = acc;
        }
        out
    }
}

impl fmt::Display for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                writeln!(f, "T^{n}: {c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::symfunc::Basis;

    #[test]
    fn log_of_geometric_series() {
        let g = SymSeries::from_fn(0, 6, |_| SymFunc::one(0)).unwrap();
        let l = g.plethystic_log().unwrap();
        assert!(l.coeff(1).constant().is_one());
        for n in 2..=6 {
            assert!(l.coeff(n).is_zero(), "degree {n}");
        }
    }

    #[test]
    fn exp_of_p1_gives_complete() {
        let n = 5;
        let g = SymSeries::from_fn(1, n, |m| {
            if m == 1 {
                SymFunc::power(&[Partition::from([1])])
            } else {
                SymFunc::zero(vec![m])
            }
        })
        .unwrap();
        let e = g.plethystic_exp().unwrap();
        for m in 1..=n {
            let h = e.coeff(m).to_basis(Basis::Complete);
            assert_eq!(h.terms.len(), 1);
            assert!(h.coeff(&[Partition::row(m)]).is_one());
        }
    }

    #[test]
    fn constant_term_errors() {
        let z = SymSeries::zero(1, 3);
        assert!(matches!(z.log(), Err(SeriesError::ConstantNotOne(_))));
        let o = SymSeries::one(1, 3);
        assert!(matches!(o.plethystic_exp(), Err(SeriesError::ConstantNotZero(_))));
    }

    #[test]
    fn adams_overflow_names_degree() {
        let s = SymSeries::from_fn(1, 3, |m| SymFunc::power(&[Partition::column(m)])).unwrap();
        match s.adams(2) {
            Err(SeriesError::TruncationOverflow { degree, .. }) => assert_eq!(degree, 4),
            other => panic!("{other:?}"),
        }
    }
}
