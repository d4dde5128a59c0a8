use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;
use thiserror::Error;

use super::omega::{macdonald_zw, negate_zw, swap_zw, OmegaKernel};
use crate::exact::{AlgebraError, RationalFunction, SparsePoly};
use crate::macdonald::genus_hook;
use crate::partitions::{MultiType, TypeT};
use crate::quiver::dimension_dc;
use crate::symfunc::{type_extension, SeriesError, SymFunc, SymSeries};

#[derive(Debug, Clone, Error)]
pub enum HError {
    #[error("multi-type of size {size} exceeds truncation N = {truncation}")]
    Truncation { size: u32, truncation: u32 },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `ℍ_ω(z,w)` together with `d_C`.
#[derive(Clone, Debug, PartialEq)]
pub struct HFunction {
    pub multitype: MultiType,
    pub g: u32,
    pub value: RationalFunction,
    pub d: i64,
}

impl HFunction {
    /// `ℍ(z,w) = ℍ(w,z)`.
    pub fn is_swap_symmetric(&self) -> bool {
        swap_zw(&self.value) == self.value
    }

    /// `ℍ(−z,−w) = ℍ(z,w)`.
    pub fn is_sign_symmetric(&self) -> bool {
        negate_zw(&self.value) == self.value
    }
}

/// `(z² − 1)(1 − w²)`.
pub(crate) fn prefactor() -> RationalFunction {
    let z2 = SparsePoly::monomial(crate::exact::rat(1), &[("z", 2)]);
    let w2 = SparsePoly::monomial(crate::exact::rat(1), &[("w", 2)]);
    RationalFunction::from_poly(&(&z2 - &SparsePoly::one()) * &(&SparsePoly::one() - &w2))
}

fn sign(e: u64) -> RationalFunction {
    RationalFunction::int(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// `s_{ω′} = Π_i s_{ω_i′}(xᵢ)`.
pub fn schur_dual(omega: &MultiType) -> SymFunc {
    let factors: Vec<SymFunc> = omega
        .types()
        .iter()
        .map(|t| type_extension(SymFunc::schur, &t.dual()))
        .collect();
    SymFunc::tensor(&factors)
}

/// `Log Ω` truncated at `n`, shared between calls.
pub fn log_omega(g: u32, k: usize, n: u32) -> Result<Arc<SymSeries>, SeriesError> {
    type Cache = RwLock<HashMap<(u32, usize, u32), Arc<SymSeries>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(s) = cache.read().unwrap().get(&(g, k, n)) {
        return Ok(s.clone());
    }
    let s = Arc::new(OmegaKernel::build(g, k, n).log()?);
    cache.write().unwrap().insert((g, k, n), s.clone());
    Ok(s)
}

/// `ℍ_ω = (−1)^{r(ω)} (z²−1)(1−w²) ⟨Log Ω, s_{ω′}⟩`.
pub fn h_function(omega: &MultiType, g: u32, truncation: u32) -> Result<HFunction, HError> {
    let n = omega.size();
    if n > truncation {
        return Err(HError::Truncation { size: n, truncation });
    }
    let log = log_omega(g, omega.k(), n)?;
    let pairing = log.coeff(n).hall(&schur_dual(omega));
    Ok(finish(omega, g, pairing))
}

fn finish(omega: &MultiType, g: u32, pairing: RationalFunction) -> HFunction {
    HFunction {
        multitype: omega.clone(),
        g,
        value: &(&sign(omega.r()) * &prefactor()) * &pairing,
        d: dimension_dc(omega, g),
    }
}

/// The same function through `Log(Σ A_λ T^{|λ|}) = Σ_α C^o_α A_α T^{|α|}`,
/// summing over all types of size `|ω|` without forming the series.
pub fn h_function_via_types(omega: &MultiType, g: u32) -> HFunction {
    let n = omega.size();
    let duals: Vec<SymFunc> = omega
        .types()
        .iter()
        .map(|t| type_extension(SymFunc::schur, &t.dual()))
        .collect();
    let pairing = TypeT::all(n)
        .par_iter()
        .map(|alpha| {
            let c = alpha.constants().c_o;
            if c == num_traits::Zero::zero() {
                return RationalFunction::zero();
            }
            let weight: RationalFunction = alpha
                .entries()
                .iter()
                .map(|(d, l)| genus_hook(l, g).expect("nonempty").power_vars(*d))
                .product();
            let h = type_extension(macdonald_zw, alpha);
            let pairs: RationalFunction = duals.iter().map(|s| h.hall(s)).product();
            (&weight * &pairs).scale(&c)
        })
        .reduce(RationalFunction::zero, |a, b| &a + &b);
    finish(omega, g, pairing)
}
