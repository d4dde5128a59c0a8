use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::arith::{factorial, mobius};

/// A type: multiset of `(degree, partition)` pairs, kept sorted
/// non-increasingly by `(partition, degree)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeT(Vec<(u32, Partition)>);

/// `K^o`, `|W|` and `C^o = K^o / |W|` of a type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeConstants {
    pub k_o: BigInt,
    pub w_order: BigInt,
    pub c_o: BigRational,
}

impl TypeT {
    /// Canonicalizes; panics on empty partitions or zero degrees.
    pub fn new(mut entries: Vec<(u32, Partition)>) -> Self {
        assert!(
            entries.iter().all(|(d, l)| *d > 0 && !l.is_empty()),
            "type entries need a positive degree and a nonempty partition"
        );
        entries.sort_by(|a, b| (&b.1, b.0).cmp(&(&a.1, a.0)));
        TypeT(entries)
    }

    /// `(1, λ)`.
    pub fn single(l: Partition) -> Self {
        TypeT::new(vec![(1, l)])
    }

    /// All-degree-one type from partitions (the section `ι`).
    pub fn from_partitions(ps: Vec<Partition>) -> Self {
        TypeT::new(ps.into_iter().map(|p| (1, p)).collect())
    }

    /// Semisimple type with eigenvalue multiplicities given by the parts of
    /// `mu`: `(1,(1^{μ₁}))(1,(1^{μ₂}))⋯`.
    pub fn semisimple(mu: &Partition) -> Self {
        TypeT::from_partitions(mu.parts().iter().map(|&m| Partition::column(m)).collect())
    }

    pub fn entries(&self) -> &[(u32, Partition)] {
        &self.0
    }

    /// Number of entries `r`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|ω| = Σ dᵢ|ωⁱ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().map(|(d, l)| d * l.size()).sum()
    }

    /// `f(ω) = Σ |ωⁱ|`.
    pub fn f(&self) -> u32 {
        self.0.iter().map(|(_, l)| l.size()).sum()
    }

    /// `n(ω) = Σ dᵢ n(ωⁱ)`.
    pub fn n(&self) -> u64 {
        self.0.iter().map(|(d, l)| *d as u64 * l.n()).sum()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.0.iter().map(|(d, _)| *d).collect()
    }

    pub fn all_degree_one(&self) -> bool {
        self.0.iter().all(|(d, _)| *d == 1)
    }

    /// `m : T → T^o`, repeating each partition `d` times.
    pub fn m(&self) -> TypeT {
        TypeT::new(
            self.0
                .iter()
                .flat_map(|(d, l)| std::iter::repeat_n((1, l.clone()), *d as usize))
                .collect(),
        )
    }

    /// `ι : T^o → T`; with all degrees already one this is the identity on
    /// entries, otherwise degrees are reset to one.
    pub fn iota(&self) -> TypeT {
        TypeT::new(self.0.iter().map(|(_, l)| (1, l.clone())).collect())
    }

    /// Every partition replaced by its dual.
    pub fn dual(&self) -> TypeT {
        TypeT::new(self.0.iter().map(|(d, l)| (*d, l.dual())).collect())
    }

    pub fn constants(&self) -> TypeConstants {
        let r = self.0.len() as u64;
        let d0 = self.0[0].0;
        let k_o = if self.0.iter().all(|(d, _)| *d == d0) {
            let sign = if r % 2 == 1 { 1 } else { -1 };
            BigInt::from(sign * mobius(d0 as u64)) * BigInt::from(d0).pow((r - 1) as u32) * factorial(r - 1)
        } else {
            BigInt::zero()
        };
        // Distinct entries with multiplicity m contribute d^m · m!.
        let mut w_order = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let m = (j - i) as u32;
            w_order *= BigInt::from(self.0[i].0).pow(m) * factorial(m as u64);
            i = j;
        }
        let c_o = BigRational::new(k_o.clone(), w_order.clone());
        TypeConstants { k_o, w_order, c_o }
    }

    /// All types of size `n`.
    pub fn all(n: u32) -> Vec<TypeT> {
        let mut atoms: Vec<(u32, Partition)> = Vec::new();
        for d in 1..=n {
            for s in 1..=n / d {
                for l in Partition::all(s) {
                    atoms.push((d, l));
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            atoms: &[(u32, Partition)],
            start: usize,
            rem: u32,
            cur: &mut Vec<(u32, Partition)>,
            out: &mut Vec<TypeT>,
        ) {
            if rem == 0 {
                out.push(TypeT::new(cur.clone()));
                return;
            }
            for i in start..atoms.len() {
                let w = atoms[i].0 * atoms[i].1.size();
                if w <= rem {
                    cur.push(atoms[i].clone());
                    rec(atoms, i, rem - w, cur, out);
                    cur.pop();
                }
            }
        }
        rec(&atoms, 0, n, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Per-entry closure choices: every tuple `(τ¹,…,τʳ)` with `τⁱ ⊴ ωⁱ`,
    /// aligned with this type's entries.
    pub fn closure_tuples(&self) -> Vec<Vec<(u32, Partition)>> {
        let mut out: Vec<Vec<(u32, Partition)>> = vec![Vec::new()];
        for (d, l) in &self.0 {
            let mut next = Vec::new();
            for prefix in &out {
                for t in l.dominated() {
                    let mut v = prefix.clone();
                    v.push((*d, t));
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
}

/// `τ ⊴ ω`: same number of entries, and a degree-preserving matching with
/// entrywise dominance.
pub fn closure_order(tau: &TypeT, omega: &TypeT) -> bool {
    if tau.len() != omega.len() {
        return false;
    }
    let n = tau.len();
    let mut used = vec![false; n];
    fn rec(i: usize, tau: &TypeT, omega: &TypeT, used: &mut [bool]) -> bool {
        if i == tau.len() {
            return true;
        }
        let (d, t) = &tau.0[i];
        for j in 0..omega.len() {
            let (e, w) = &omega.0[j];
            if !used[j] && d == e && t.dominated_by(w) {
                used[j] = true;
                if rec(i + 1, tau, omega, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    rec(0, tau, omega, &mut used)
}

impl fmt::Display for TypeT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, l) in &self.0 {
            write!(f, "({d},{l})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TypeT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A k-tuple of types of a common size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiType(Vec<TypeT>);

impl MultiType {
    pub fn new(types: Vec<TypeT>) -> Result<Self, String> {
        if types.is_empty() {
            return Err("a multi-type needs at least one component".into());
        }
        let n = types[0].size();
        if let Some(t) = types.iter().find(|t| t.size() != n) {
            return Err(format!("component {t} has size {} but {} was expected", t.size(), n));
        }
        Ok(MultiType(types))
    }

    pub fn types(&self) -> &[TypeT] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0[0].size()
    }

    pub fn dual(&self) -> MultiType {
        MultiType(self.0.iter().map(TypeT::dual).collect())
    }

    pub fn m(&self) -> MultiType {
        MultiType(self.0.iter().map(TypeT::m).collect())
    }

    pub fn all_degree_one(&self) -> bool {
        self.0.iter().all(TypeT::all_degree_one)
    }

    /// `r(ω) = k|ω| + Σ_{i,j} |ωᵢʲ|`.
    pub fn r(&self) -> u64 {
        self.k() as u64 * self.size() as u64 + self.0.iter().map(|t| t.f() as u64).sum::<u64>()
    }
}

impl fmt::Display for MultiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat2;

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    #[test]
    fn stats() {
        let w = TypeT::new(vec![(1, p([2])), (1, p([1]))]);
        assert_eq!((w.size(), w.f(), w.n()), (3, 3, 0));
        let w = TypeT::new(vec![(2, p([1, 1]))]);
        assert_eq!((w.size(), w.f(), w.n()), (4, 2, 2));
        for n in 1..7 {
            assert_eq!(TypeT::single(Partition::column(n)).n(), (n * (n - 1) / 2) as u64);
        }
    }

    #[test]
    fn maps() {
        let w = TypeT::new(vec![(2, p([3]))]);
        assert_eq!(w.m(), TypeT::new(vec![(1, p([3])), (1, p([3]))]));
        let o = TypeT::from_partitions(vec![p([3]), p([1])]);
        assert_eq!(o.iota(), TypeT::new(vec![(1, p([3])), (1, p([1]))]));
        for t in TypeT::all(5).into_iter().filter(TypeT::all_degree_one) {
            assert_eq!(t.iota().m(), t);
        }
    }

    #[test]
    fn canonical_order_is_insertion_independent() {
        let a = TypeT::new(vec![(1, p([1])), (2, p([1])), (1, p([2]))]);
        let b = TypeT::new(vec![(1, p([2])), (1, p([1])), (2, p([1]))]);
        assert_eq!(a, b);
    }

    #[test]
    fn closure_examples() {
        let reg = TypeT::single(p([2]));
        let min = TypeT::single(p([1, 1]));
        assert!(closure_order(&min, &reg));
        assert!(!closure_order(&reg, &min));
        let twisted = TypeT::new(vec![(2, p([1]))]);
        let split = TypeT::new(vec![(1, p([1])), (1, p([1]))]);
        assert!(!closure_order(&twisted, &split));
    }

    #[test]
    fn closure_is_partial_order() {
        for n in 1..=6 {
            let all = TypeT::all(n);
            for a in &all {
                assert!(closure_order(a, a));
                for b in &all {
                    if a != b && closure_order(a, b) {
                        assert!(!closure_order(b, a), "{a} {b}");
                    }
                }
            }
        }
        // transitivity on a smaller slice to keep the cubic loop cheap
        let all = TypeT::all(5);
        for a in &all {
            for b in all.iter().filter(|b| closure_order(a, b)) {
                for c in all.iter().filter(|c| closure_order(b, c)) {
                    assert!(closure_order(a, c));
                }
            }
        }
    }

    #[test]
    fn constants() {
        let l = p([2, 1]);
        let c = TypeT::single(l.clone()).constants();
        assert_eq!(
            (c.k_o, c.w_order, c.c_o),
            (BigInt::one(), BigInt::one(), BigRational::one())
        );
        let c = TypeT::new(vec![(1, l.clone()), (1, l.clone())]).constants();
        assert_eq!(c.k_o, BigInt::from(-1));
        assert_eq!(c.w_order, BigInt::from(2));
        assert_eq!(c.c_o, rat2(-1, 2));
        let c = TypeT::new(vec![(1, l.clone()), (2, p([1]))]).constants();
        assert!(c.c_o.is_zero());
    }

    #[test]
    fn type_counts() {
        // conjugacy-class types of GL_n
        let counts: Vec<usize> = (1..=4).map(|n| TypeT::all(n).len()).collect();
        assert_eq!(counts, [1, 4, 8, 22]);
    }
}
