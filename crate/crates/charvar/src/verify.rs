//! Named identity suites, shared by the command line and the acceptance
//! tests.  Each suite returns one [`Check`] per identity with the offending
//! values in `detail` when it fails.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{rat, rat2, AlgebraError, Rational, RationalFunction, SparsePoly};
use crate::hfun::{
    count_via_type_sum_symbolic, h_function, propmagic_holds, specialize_h, top_degree, top_degree_series,
    top_degree_via_u, unipotent_h_sum, unipotent_product, unipotent_series_from_counts, HError, SpecializeMode,
};
use crate::macdonald::{centralizer_order, green_polynomial, unipotent_weight};
use crate::oracle::{
    closure_char_function, convolution_count, find_generic, unipotent_descriptor, ClassDescriptor, GroupCensus,
    OracleError,
};
use crate::partitions::{MultiType, Partition, TypeT};
use crate::quiver::{report, RootKind};
use crate::symfunc::{SeriesError, SymFunc, SymSeries};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    H(#[from] HError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(suite: &str, name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            suite: suite.into(),
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

fn at(f: &RationalFunction, q: u64) -> Result<Rational, AlgebraError> {
    f.eval(&[("q", rat(q as i64))])
}

fn q_const(q: u64) -> RationalFunction {
    RationalFunction::int(q as i64)
}

fn zw(a: i64, b: i64, c: i64) -> RationalFunction {
    let z = RationalFunction::var("z");
    let w = RationalFunction::var("w");
    &(&z.pow(2).expect("z").scale(&rat(a)) + &RationalFunction::int(b)) + &w.pow(2).expect("w").scale(&rat(c))
}

/// `ωᵢ`: `4 − i` copies of `(1ʳ)(1ʳ)` followed by `i` copies of `(2ʳ)`.
pub fn d4_multitype(r: u32, i: usize) -> MultiType {
    let ss = TypeT::new(vec![(1, Partition::column(r)), (1, Partition::column(r))]);
    let uni = TypeT::single(Partition::new(vec![2; r as usize]));
    MultiType::new(
        (0..4)
            .map(|j| if j < 4 - i { ss.clone() } else { uni.clone() })
            .collect(),
    )
    .expect("equal sizes")
}

/// `ℍ_{ωᵢ}(0,w) = (4−i) + w²`, `ℍ_{ωᵢ}(z⁻¹,z) = z⁻² + (4−i) + z²` and the
/// full value `z² + (4−i) + w²`, for `i = 0..4`.
pub fn suite_d4(r: u32) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    let z = RationalFunction::var("z");
    let w = RationalFunction::var("w");
    for i in 0..=4usize {
        let om = d4_multitype(r, i);
        let h = h_function(&om, 0, 2 * r)?;
        let c = 4 - i as i64;
        let pure = h.value.substitute(&[("z", RationalFunction::zero())])?;
        let pure_ok = pure == &RationalFunction::int(c) + &w.pow(2)?;
        let zinv = h.value.substitute(&[("z", z.inv()?), ("w", z.clone())])?;
        let inv_ok = zinv == &(&z.pow(-2)? + &RationalFunction::int(c)) + &z.pow(2)?;
        let full_ok = h.value == zw(1, c, 1);
        let mut detail = format!("ℍ = {}", h.value);
        if i == 0 {
            let e = specialize_h(&h, SpecializeMode::EIc)?;
            let p = specialize_h(&h, SpecializeMode::Pure)?;
            let e_ok = e.value == RationalFunction::from_poly(SparsePoly::univariate("q", &[1, 4, 1]))
                && e.palindromic == Some(true);
            let p_ok = p.value == RationalFunction::from_poly(SparsePoly::univariate("q", &[4, 1]));
            detail += &format!("; E_ic = {}; pure = {}", e.value, p.value);
            out.push(Check::new(
                "d4",
                format!("r={r} i={i}"),
                pure_ok && inv_ok && full_ok && e_ok && p_ok,
                detail,
            ));
        } else {
            out.push(Check::new(
                "d4",
                format!("r={r} i={i}"),
                pure_ok && inv_ok && full_ok,
                detail,
            ));
        }
    }
    Ok(out)
}

/// Multisets of `k` types of size `n`, as sorted tuples.
pub fn multitypes(n: u32, k: usize, filter: impl Fn(&TypeT) -> bool) -> Vec<MultiType> {
    let types: Vec<TypeT> = TypeT::all(n).into_iter().filter(|t| filter(t)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    if types.is_empty() {
        return out;
    }
    loop {
        out.push(MultiType::new(idx.iter().map(|&i| types[i].clone()).collect()).expect("equal sizes"));
        let Some(pos) = (0..k).rev().find(|&p| idx[p] + 1 < types.len()) else {
            return out;
        };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[pos];
        }
    }
}

/// One generic case of the three-way comparison.
#[derive(Clone, Debug)]
pub struct BatteryCase {
    pub multitype: MultiType,
    pub g: u32,
    pub q: u64,
    pub classes: Vec<ClassDescriptor>,
    /// `⟨𝓔 ∗ X₁ ∗ ⋯ ∗ X_k, 1₁⟩`.
    pub convolution: Rational,
    pub type_sum: Rational,
    pub e_ic: Rational,
    pub root: RootKind,
}

impl BatteryCase {
    pub fn agrees(&self) -> bool {
        let scaled = &self.convolution * rat(self.q as i64 - 1);
        scaled == self.type_sum && scaled == self.e_ic
    }
}

/// All multitypes of the given shape with generic eigenvalues over `F_q`,
/// with the oracle, type-sum and `ℍ` counts.  Returns the cases and the
/// number of multitypes skipped for lack of generic eigenvalues.
pub fn battery(
    census: &GroupCensus,
    g: u32,
    k: usize,
    filter: impl Fn(&TypeT) -> bool,
) -> Result<(Vec<BatteryCase>, usize), VerifyError> {
    let q = census.q as u64;
    let n = census.n as u32;
    let found: Vec<(MultiType, Option<Vec<ClassDescriptor>>)> = multitypes(n, k, filter)
        .into_iter()
        .map(|om| find_generic(&om, q).map(|c| (om, c)))
        .collect::<Result<_, _>>()?;
    let skipped = found.iter().filter(|(_, c)| c.is_none()).count();
    let cases = found
        .into_par_iter()
        .filter_map(|(om, c)| c.map(|c| (om, c)))
        .map(|(om, classes)| -> Result<BatteryCase, VerifyError> {
            let xs = classes
                .iter()
                .map(|c| closure_char_function(c, census))
                .collect::<Result<Vec<_>, _>>()?;
            let h = h_function(&om, g, n)?;
            let e = specialize_h(&h, SpecializeMode::EIc)?;
            Ok(BatteryCase {
                convolution: convolution_count(census, g, &xs),
                type_sum: at(&count_via_type_sum_symbolic(&om, g), q)?,
                e_ic: at(&e.value, q)?,
                root: report(&om, g).classification,
                multitype: om,
                g,
                q,
                classes,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((cases, skipped))
}

fn case_check(c: &BatteryCase) -> Check {
    let names: Vec<String> = c.classes.iter().map(|d| d.to_string()).collect();
    Check::new(
        "convtheo",
        format!("{} g={} q={}", c.multitype, c.g, c.q),
        c.agrees(),
        format!(
            "classes {}; (q−1)·convolution = {}, type sum = {}, E_ic = {}",
            names.join(";"),
            &c.convolution * rat(c.q as i64 - 1),
            c.type_sum,
            c.e_ic
        ),
    )
}

/// Three-way agreement over `n ≤ n_max`, `g ∈ {0,1}`, `k ∈ {1,…,4}`; for
/// `n = 3` only `g = 0`, `k = 3` with regular semisimple classes.
pub fn suite_convtheo(qs: &[u64], n_max: u32, budget: u64) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for &q in qs {
        for n in 1..=n_max.min(3) {
            let census = GroupCensus::build(n as usize, q, budget)?;
            let shapes: Vec<(u32, usize)> = if n == 3 {
                vec![(0, 3)]
            } else {
                (0..=1).flat_map(|g| (1..=4).map(move |k| (g, k))).collect()
            };
            for (g, k) in shapes {
                let filter = |t: &TypeT| n < 3 || t.entries().iter().all(|(_, l)| l.size() == 1);
                let (cases, skipped) = battery(&census, g, k, filter)?;
                out.extend(cases.iter().map(case_check));
                if cases.is_empty() {
                    out.push(Check::new(
                        "convtheo",
                        format!("n={n} g={g} k={k} q={q}"),
                        true,
                        format!("no multitype admits generic eigenvalues ({skipped} skipped)"),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Nonzero oracle count exactly at roots, and `(q−1)·stack = 1` at real
/// roots, over the `g = 0` battery.
pub fn suite_roots(qs: &[u64], budget: u64) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for &q in qs {
        for n in 1..=2 {
            let census = GroupCensus::build(n, q, budget)?;
            for k in 1..=4 {
                let (cases, _) = battery(&census, 0, k, |_| true)?;
                for c in cases {
                    let scaled = &c.convolution * rat(q as i64 - 1);
                    let nonzero_ok = !c.convolution.is_zero() == c.root.is_root();
                    let real_ok = c.root != RootKind::Real || scaled.is_one();
                    out.push(Check::new(
                        "roots",
                        format!("{} q={q}", c.multitype),
                        nonzero_ok && real_ok,
                        format!("{:?}; (q−1)·stack = {scaled}", c.root),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Plethystic `Log ∘ Exp = id` on random series in one alphabet.
pub fn suite_logexp(seed: u64, count: usize, truncation: u32) -> Result<Vec<Check>, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for i in 0..count {
        let n_max = rng.gen_range(1..=truncation);
        let mut coeffs = vec![SymFunc::zero(vec![0])];
        for n in 1..=truncation {
            let mut f = SymFunc::zero(vec![n]);
            if n <= n_max {
                for l in Partition::all(n) {
                    let c = rat2(rng.gen_range(-3..=3), rng.gen_range(1..=3));
                    f = &f + &SymFunc::power(&[l]).scale(&c);
                }
            }
            coeffs.push(f);
        }
        let f = SymSeries::new(1, coeffs)?;
        let back = f.plethystic_exp()?.plethystic_log()?;
        out.push(Check::new("logexp", format!("series {i}"), back == f, format!("{f:?}")));
    }
    Ok(out)
}

/// `s_{ω′}(xy)` against the closure sum for every type of size `≤ n_max`.
pub fn suite_propmagic(n_max: u32) -> Vec<Check> {
    (1..=n_max)
        .flat_map(TypeT::all)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|t| Check::new("propmagic", t.to_string(), propmagic_holds(t), ""))
        .collect()
}

/// `y_ρ(q) = q^{−|ρ|} z_ρ Π (1 − q^{−ρᵢ})^{−1}`.
fn y_rho(rho: &Partition) -> Result<RationalFunction, AlgebraError> {
    let q = RationalFunction::var("q");
    let mut acc = RationalFunction::constant(Rational::from_integer(rho.z())).mul_rf(&q.pow(-(rho.size() as i64))?);
    for &r in rho.parts() {
        acc = acc.div_rf(&RationalFunction::one().sub_rf(&q.pow(-(r as i64))?))?;
    }
    Ok(acc)
}

/// Green orthogonality `Σ_λ 𝓗_λ Q^λ_ρ Q^λ_σ = δ_{ρσ} y_ρ` and
/// `Σ_λ |G|/a_λ(q) = q^{n(n−1)}`.
pub fn suite_green(n_max: u32, qs: &[u64]) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let parts = Partition::all(n);
        let mut ok = true;
        let mut witness = String::new();
        for a in &parts {
            for b in &parts {
                let s: RationalFunction = parts
                    .iter()
                    .map(|l| {
                        let qa = RationalFunction::from_poly(green_polynomial(l, a).expect("sizes agree"));
                        let qb = RationalFunction::from_poly(green_polynomial(l, b).expect("sizes agree"));
                        unipotent_weight(l).mul_rf(&qa).mul_rf(&qb)
                    })
                    .sum();
                let expect = if a == b { y_rho(a)? } else { RationalFunction::zero() };
                if s != expect && ok {
                    ok = false;
                    witness = format!("ρ={a} σ={b}: {s} ≠ {expect}");
                }
            }
        }
        out.push(Check::new("green", format!("orthogonality n={n}"), ok, witness));
        for &q in qs {
            let gl: Rational = (0..n).map(|i| rat((q as i64).pow(n) - (q as i64).pow(i))).product();
            let total: Rational = parts
                .iter()
                .map(|l| {
                    Ok(&gl
                        / centralizer_order(l)
                            .eval(&[("q", rat(q as i64))])
                            .map_err(AlgebraError::Unbound)?)
                })
                .sum::<Result<Rational, AlgebraError>>()?;
            let expect = rat((q as i64).pow(n * (n - 1)));
            out.push(Check::new(
                "green",
                format!("unipotent count n={n} q={q}"),
                total == expect,
                format!("{total}"),
            ));
        }
    }
    Ok(out)
}

fn series_at(s: &SymSeries, q: u64) -> SymSeries {
    s.map_coeffs(|c| c.substitute(&[("q", q_const(q))]).expect("no pole at q"))
}

/// Product formula, oracle counts and `q Σ ℍ_μ(√q,1/√q) s_{μ′}` for
/// `(g,k) ∈ {(0,3),(1,1)}` to `|μ| ≤ 2`, plus the top-degree routes.
pub fn suite_unichar(q: u64, budget: u64) -> Result<Vec<Check>, VerifyError> {
    let truncation = 2;
    let censuses = [GroupCensus::build(1, q, budget)?, GroupCensus::build(2, q, budget)?];
    let q1 = RationalFunction::from_poly(SparsePoly::univariate("q", &[-1, 1]));
    let mut out = Vec::new();
    for (g, k) in [(0u32, 3usize), (1, 1)] {
        let name = |s: &str| format!("g={g} k={k} {s}");
        let product = unipotent_product(g, k, truncation)?;
        let counts = unipotent_series_from_counts(g, k, truncation, |mu| {
            let census = &censuses[mu[0].size() as usize - 1];
            let xs: Vec<_> = mu
                .iter()
                .map(|m| closure_char_function(&unipotent_descriptor(m, q), census).expect("unipotent class"))
                .collect();
            RationalFunction::constant(convolution_count(census, g, &xs))
        });
        let counts = series_at(&counts, q);
        let product_q = series_at(&product, q);
        out.push(Check::new("unichar", name("product = counts"), product_q == counts, ""));
        let h_sum = unipotent_h_sum(g, k, truncation)?;
        let log = product.plethystic_log()?;
        out.push(Check::new(
            "unichar",
            name("(q−1) Log product = q Σ ℍ"),
            log.scale_rf(&q1) == h_sum,
            "",
        ));
        let exp_h = h_sum.scale_rf(&q1.inv()?).plethystic_exp()?;
        out.push(Check::new(
            "unichar",
            name("counts = Exp(q Σ ℍ / (q−1)) at q"),
            series_at(&exp_h, q) == counts,
            "",
        ));
        let top_ok = top_degree_series(&log) == top_degree_series(&product).plethystic_log()?;
        let routes_ok = log.coeffs().iter().all(|c| top_degree(c) == top_degree_via_u(c));
        out.push(Check::new("unichar", name("top degree"), top_ok && routes_ok, ""));
    }
    Ok(out)
}
