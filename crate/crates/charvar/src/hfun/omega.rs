use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use crate::exact::{RationalFunction, SparsePoly};
use crate::macdonald::{genus_hook, modified_macdonald};
use crate::partitions::Partition;
use crate::symfunc::{SeriesError, SymFunc, SymSeries};

pub(crate) fn sq(v: &str) -> RationalFunction {
    RationalFunction::from_poly(SparsePoly::monomial(crate::exact::rat(1), &[(v, 2)]))
}

/// `(z, w) ↦ (w, z)`.
pub fn swap_zw(f: &RationalFunction) -> RationalFunction {
    f.substitute(&[("z", RationalFunction::var("w")), ("w", RationalFunction::var("z"))])
        .expect("swap keeps denominators nonzero")
}

/// `(z, w) ↦ (−z, −w)`.
pub fn negate_zw(f: &RationalFunction) -> RationalFunction {
    let m = |v: &str| -RationalFunction::var(v);
    f.substitute(&[("z", m("z")), ("w", m("w"))])
        .expect("sign change keeps denominators nonzero")
}

/// `H̃_λ(x; z², w²)`.
pub fn macdonald_zw(lambda: &Partition) -> SymFunc {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SymFunc>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(lambda) {
        return (**f).clone();
    }
    let f = modified_macdonald(lambda).map_coeffs(|c| {
        c.substitute(&[("q", sq("z")), ("t", sq("w"))])
            .expect("polynomial substitution")
    });
    cache.write().unwrap().insert(lambda.clone(), Arc::new(f.clone()));
    f
}

/// `𝓗^g_λ(z,w) Π_i H̃_λ(xᵢ; z², w²)`.
pub fn omega_term(lambda: &Partition, g: u32, k: usize) -> SymFunc {
    let h = macdonald_zw(lambda);
    let weight = genus_hook(lambda, g).expect("nonempty partition");
    SymFunc::tensor(&vec![h; k]).scale_rf(&weight)
}

/// `Ω = Σ_λ 𝓗^g_λ(z,w) Π_i H̃_λ(xᵢ; z², w²) T^{|λ|}`, truncated at `N`.
#[derive(Clone, Debug)]
pub struct OmegaKernel {
    pub g: u32,
    pub k: usize,
    pub series: SymSeries,
}

impl OmegaKernel {
    pub fn build(g: u32, k: usize, truncation: u32) -> Self {
        assert!(truncation >= 1, "truncation must be positive");
        let coeffs: Vec<SymFunc> = (0..=truncation)
            .into_par_iter()
            .map(|n| {
                if n == 0 {
                    return SymFunc::one(k);
                }
                Partition::all(n)
                    .par_iter()
                    .map(|l| omega_term(l, g, k))
                    .reduce(|| SymFunc::zero(vec![n; k]), |a, b| &a + &b)
            })
            .collect();
        let series = SymSeries::new(k, coeffs).expect("homogeneous by construction");
        OmegaKernel { g, k, series }
    }

    pub fn log(&self) -> Result<SymSeries, SeriesError> {
        self.series.plethystic_log()
    }

    /// Every coefficient is unchanged by `(z, w) ↦ (w, z)`.
    pub fn is_swap_symmetric(&self) -> bool {
        self.series
            .coeffs()
            .iter()
            .all(|c| c.terms().values().all(|v| swap_zw(v) == *v))
    }
}
