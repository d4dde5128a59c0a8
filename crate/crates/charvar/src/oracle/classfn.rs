//! Class functions on a census, their convolution, the commutator
//! distribution `𝓔` and counts of solutions to
//! `Π[aᵢ,bᵢ] c₁⋯c_k = 1`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::census::GroupCensus;
use super::descriptor::ClassDescriptor;
use super::OracleError;
use crate::exact::{rat, Rational};
use crate::macdonald::kt;

/// Values on the classes of a census, indexed by class id.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<Rational>,
}

impl ClassFunction {
    pub fn zero(census: &GroupCensus) -> Self {
        ClassFunction {
            values: vec![Rational::zero(); census.num_classes()],
        }
    }

    pub fn point_mass(census: &GroupCensus, class: usize) -> Self {
        let mut f = Self::zero(census);
        f.values[class] = Rational::one();
        f
    }

    /// `Σ_x f(x)`.
    pub fn total_mass(&self, census: &GroupCensus) -> Rational {
        census
            .classes
            .iter()
            .zip(&self.values)
            .map(|(c, v)| v * rat(c.size as i64))
            .sum()
    }

    /// `(f ∗ g)(z) = Σ_{xy=z} f(x) g(y)`.
    pub fn convolve(&self, other: &ClassFunction, census: &GroupCensus) -> ClassFunction {
        let nc = census.num_classes();
        let values = census
            .structure_counts()
            .par_iter()
            .map(|m| {
                // x = zu, y = u⁻¹
                let mut acc = Rational::zero();
                for a in (0..nc).filter(|&a| !self.values[a].is_zero()) {
                    for b in 0..nc {
                        let count = m[a * nc + b];
                        let g = &other.values[census.inverse_class[b]];
                        if count != 0 && !g.is_zero() {
                            acc += &self.values[a] * g * rat(count as i64);
                        }
                    }
                }
                acc
            })
            .collect();
        ClassFunction { values }
    }

    /// `(f ∗ g)(1) = Σ_x f(x) g(x⁻¹)`.
    pub fn convolve_at_identity(&self, other: &ClassFunction, census: &GroupCensus) -> Rational {
        census
            .classes
            .iter()
            .enumerate()
            .map(|(c, info)| &self.values[c] * &other.values[census.inverse_class[c]] * rat(info.size as i64))
            .sum()
    }

    fn power(&self, e: u32, census: &GroupCensus) -> ClassFunction {
        let mut acc = ClassFunction::point_mass(census, census.identity_class);
        for _ in 0..e {
            acc = acc.convolve(self, census);
        }
        acc
    }
}

/// Histogram of `key([a,b])` over all pairs, `[a,b] = aba⁻¹b⁻¹`.
pub fn commutator_histogram<T, K>(
    elems: &[T],
    mul: impl Fn(&T, &T) -> T + Sync,
    inv: impl Fn(&T) -> T + Sync,
    key: impl Fn(&T) -> K + Sync,
) -> BTreeMap<K, u64>
where
    T: Sync,
    K: Ord + Send,
{
    elems
        .par_iter()
        .map(|a| {
            let ai = inv(a);
            let mut h = BTreeMap::new();
            for b in elems {
                let c = mul(&mul(&mul(a, b), &ai), &inv(b));
                *h.entry(key(&c)).or_insert(0u64) += 1;
            }
            h
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_insert(0) += v;
            }
            x
        })
}

/// `𝓔_g(z) = #{(a₁,b₁,…,a_g,b_g) : Π[aᵢ,bᵢ] = z}`, with `𝓔₁` from
/// `#{(a,b) : [a,b] = z} = Σ_b [b ~ zb] |C_G(b)|` and `𝓔_g = 𝓔₁^{∗g}`.
pub fn commutator_distribution(census: &GroupCensus, g: u32) -> ClassFunction {
    if g == 0 {
        return ClassFunction::point_mass(census, census.identity_class);
    }
    let nc = census.num_classes();
    let values = census
        .structure_counts()
        .iter()
        .map(|m| {
            (0..nc)
                .map(|b| rat(m[b * nc + b] as i64) * rat((census.order / census.classes[b].size) as i64))
                .sum()
        })
        .collect();
    ClassFunction { values }.power(g, census)
}

/// `𝓔_g` with `𝓔₁` enumerated over all of `G × G`.
pub fn commutator_distribution_enumerated(census: &GroupCensus, g: u32) -> ClassFunction {
    if g == 0 {
        return ClassFunction::point_mass(census, census.identity_class);
    }
    let p = census.q;
    let hist = commutator_histogram(
        &census.elements,
        |a, b| a.mul(b, p),
        |a| a.inverse(p).expect("invertible"),
        |c| census.class_of(c),
    );
    let mut e1 = ClassFunction::zero(census);
    for (c, count) in hist {
        e1.values[c] = rat(count as i64) / rat(census.classes[c].size as i64);
    }
    e1.power(g, census)
}

/// `X_{C̄}` on the census: on a class with the same eigenvalues and Jordan
/// partitions `μ_f`, the product over factors `f` of degree `d` of
/// `q^{−d n(λ_f)} K̃_{λ_f μ_f}(q^d)`; zero elsewhere.
pub fn closure_char_function(desc: &ClassDescriptor, census: &GroupCensus) -> Result<ClassFunction, OracleError> {
    if desc.size() as usize != census.n || desc.q != census.q {
        return Err(OracleError::Descriptor(format!(
            "class {desc} does not live in GL_{}(F_{})",
            census.n, census.q
        )));
    }
    let q = rat(census.q as i64);
    let values = census
        .classes
        .iter()
        .map(|c| {
            if c.key.len() != desc.key.len() || c.key.iter().zip(&desc.key).any(|(a, b)| a.0 != b.0) {
                return Rational::zero();
            }
            c.key
                .iter()
                .zip(&desc.key)
                .map(|((f, mu), (_, lambda))| {
                    if mu.size() != lambda.size() {
                        return Rational::zero();
                    }
                    let d = (f.len() - 1) as i32;
                    let qd = q.pow(d);
                    kt(lambda, mu).eval(&[("q", qd.clone())]).expect("univariate in q") / qd.pow(lambda.n() as i32)
                })
                .product()
        })
        .collect();
    Ok(ClassFunction { values })
}

/// `⟨𝓔_g ∗ X₁ ∗ ⋯ ∗ X_k, 1₁⟩ = (1/|G|)(𝓔_g ∗ X₁ ∗ ⋯ ∗ X_k)(1)`.
pub fn convolution_count(census: &GroupCensus, g: u32, closures: &[ClassFunction]) -> Rational {
    let mut f = commutator_distribution(census, g);
    let Some((last, rest)) = closures.split_last() else {
        return &f.values[census.identity_class] / rat(census.order as i64);
    };
    for x in rest {
        f = f.convolve(x, census);
    }
    f.convolve_at_identity(last, census) / rat(census.order as i64)
}

/// Indicator of the class itself, without its closure.
pub fn class_indicator(desc: &ClassDescriptor, census: &GroupCensus) -> Result<ClassFunction, OracleError> {
    let c = census
        .classes
        .iter()
        .position(|c| c.key == desc.key)
        .filter(|_| desc.q == census.q)
        .ok_or_else(|| {
            OracleError::Descriptor(format!("class {desc} does not live in GL_{}(F_{})", census.n, census.q))
        })?;
    Ok(ClassFunction::point_mass(census, c))
}

fn support(f: &ClassFunction) -> ClassFunction {
    ClassFunction {
        values: f
            .values
            .iter()
            .map(|v| if v.is_zero() { Rational::zero() } else { Rational::one() })
            .collect(),
    }
}

/// `#{(a, b, c) : Π[aᵢ,bᵢ] c₁⋯c_k = 1, cᵢ ∈ C̄ᵢ}`.
pub fn raw_count(census: &GroupCensus, g: u32, closures: &[ClassFunction]) -> Rational {
    let ind: Vec<ClassFunction> = closures.iter().map(support).collect();
    convolution_count(census, g, &ind) * rat(census.order as i64)
}

/// `raw_count / |G|`.
pub fn stack_count(census: &GroupCensus, g: u32, closures: &[ClassFunction]) -> Rational {
    raw_count(census, g, closures) / rat(census.order as i64)
}

/// The three counts for a tuple of tagged classes.
#[derive(Clone, Debug, PartialEq)]
pub struct Counts {
    pub raw_count: Rational,
    pub stack_count: Rational,
    pub convolution: Rational,
    /// Every class is semisimple or regular, so the closure functions are
    /// indicators and the stack count equals the convolution.
    pub indicator_closures: bool,
}

impl Counts {
    pub fn compute(census: &GroupCensus, g: u32, classes: &[ClassDescriptor]) -> Result<Counts, OracleError> {
        let xs = classes
            .iter()
            .map(|c| closure_char_function(c, census))
            .collect::<Result<Vec<_>, _>>()?;
        let raw = raw_count(census, g, &xs);
        Ok(Counts {
            stack_count: &raw / rat(census.order as i64),
            raw_count: raw,
            convolution: convolution_count(census, g, &xs),
            indicator_closures: classes.iter().all(|c| c.is_semisimple() || c.is_regular()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{parse_classes, unipotent_descriptor, DEFAULT_BUDGET};
    use crate::partitions::Partition;

    fn census(n: usize, q: u64) -> GroupCensus {
        GroupCensus::build(n, q, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn symmetric_group_twin() {
        // S₃ as permutations of {0,1,2}
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mul = |a: &[usize; 3], b: &[usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let inv = |a: &[usize; 3]| {
            let mut r = [0; 3];
            for i in 0..3 {
                r[a[i]] = i;
            }
            r
        };
        let h = commutator_histogram(&perms, mul, inv, |c| *c == [0, 1, 2]);
        assert_eq!(h[&true], 18);
    }

    #[test]
    fn commutator_routes_agree() {
        for (n, q) in [(2, 3), (2, 5), (3, 2)] {
            let c = census(n, q);
            let a = commutator_distribution(&c, 1);
            assert_eq!(a, commutator_distribution_enumerated(&c, 1));
            let order = rat(c.order as i64);
            assert_eq!(a.total_mass(&c), &order * &order);
            let a2 = commutator_distribution(&c, 2);
            assert_eq!(a2.total_mass(&c), order.pow(4));
        }
    }

    #[test]
    fn closure_values() {
        let c = census(3, 2);
        let x = closure_char_function(&unipotent_descriptor(&Partition::from([2, 1]), 2), &c).unwrap();
        assert_eq!(x.values[c.identity_class], rat(3));
        let ones: Vec<&Rational> = x.values.iter().filter(|v| !v.is_zero()).collect();
        assert_eq!(ones.len(), 2);
        let reg = closure_char_function(&unipotent_descriptor(&Partition::from([3]), 2), &c).unwrap();
        assert_eq!(reg.values.iter().filter(|v| v.is_one()).count(), 3);
        let ss = parse_classes("[1]@1(2,[1])@(1,1)", 2).unwrap();
        let x = closure_char_function(&ss[0], &c).unwrap();
        assert_eq!(x.values.iter().filter(|v| v.is_one()).count(), 1);
        assert_eq!(x.values.iter().filter(|v| v.is_zero()).count(), c.num_classes() - 1);
    }

    #[test]
    fn small_counts() {
        let c1 = census(1, 3);
        let cl = parse_classes("[1]@1", 3).unwrap();
        let n = Counts::compute(&c1, 1, &cl).unwrap();
        assert_eq!(n.convolution, rat(2));
        assert_eq!(n.stack_count, rat(2));
        assert_eq!(n.raw_count, rat(4));
        let c5 = census(1, 5);
        let n = Counts::compute(&c5, 1, &parse_classes("[1]@1", 5).unwrap()).unwrap();
        assert_eq!(n.stack_count, rat(4));
        // one Jordan block is never the identity, but its closure holds it
        let c2 = census(2, 3);
        let j = parse_classes("[2]@1", 3).unwrap();
        let x = class_indicator(&j[0], &c2).unwrap();
        assert_eq!(raw_count(&c2, 0, &[x]), rat(0));
        let n = Counts::compute(&c2, 0, &j).unwrap();
        assert_eq!(n.raw_count, rat(1));
    }

    #[test]
    fn affine_d4_at_seven() {
        let c = census(2, 7);
        let om = crate::partitions::parse_multitype("[1][1];[1][1];[1][1];[1][1]").unwrap();
        let cl = crate::oracle::find_generic(&om, 7).unwrap().unwrap();
        let n = Counts::compute(&c, 0, &cl).unwrap();
        // 1 + 4q + q² at q = 7
        assert_eq!(n.convolution.clone() * rat(6), rat(78));
        assert_eq!(n.stack_count, n.convolution);
    }
}
