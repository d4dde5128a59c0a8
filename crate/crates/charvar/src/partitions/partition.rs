use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::factorial;

/// Upper bound on partition sizes accepted from user input.
pub const MAX_PARTITION_SIZE: u32 = 64;

/// Integer partition stored as weakly decreasing positive parts.
///
/// The derived ordering is lexicographic on the parts and serves as the
/// fixed total order used to canonicalize types.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

/// Arm, leg and hook of a cell `(i, j)` (0-based row and column).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
    pub arm: u32,
    pub leg: u32,
}

impl Cell {
    pub fn hook(&self) -> u32 {
        self.arm + self.leg + 1
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1ⁿ)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn dual(&self) -> Partition {
        let m = self.part(0);
        Partition(
            (1..=m)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `n(λ) = Σ (i−1) λᵢ`.
    pub fn n(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let d = self.dual();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                out.push(Cell {
                    row: i as u32,
                    col: j,
                    arm: p - j - 1,
                    leg: d.0[j as usize] - i as u32 - 1,
                });
            }
        }
        out
    }

    pub fn hooks(&self) -> Vec<u32> {
        self.cells().iter().map(Cell::hook).collect()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π iᵐⁱ mᵢ!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities().into_iter().fold(BigInt::one(), |acc, (i, m)| {
            acc * BigInt::from(i).pow(m) * factorial(m as u64)
        })
    }

    /// Dominance order `self ⊴ other` (sizes must agree).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Multiplies every part by `d` (the effect of `ψ_d` on `p_λ`).
    pub fn scaled(&self, d: u32) -> Partition {
        Partition(self.0.iter().map(|p| p * d).collect())
    }

    /// Multiset union of parts (the index of `p_λ p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of `self.size()` dominated by `self`.
    pub fn dominated(&self) -> Vec<Partition> {
        Partition::all(self.size())
            .into_iter()
            .filter(|t| t.dominated_by(self))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&[u32]> for Partition {
    fn from(p: &[u32]) -> Self {
        Partition::new(p.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(p: [u32; N]) -> Self {
        Partition::new(p.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    #[test]
    fn single_cell() {
        let l = p([1]);
        let c = l.cells();
        assert_eq!((c[0].arm, c[0].leg, c[0].hook()), (0, 0, 1));
        assert_eq!(l.n(), 0);
        assert_eq!(l.dual(), l);
    }

    #[test]
    fn staircase_and_column() {
        assert_eq!(p([2, 1]).n(), 1);
        assert_eq!(p([2, 1]).dual(), p([2, 1]));
        assert_eq!(p([1, 1, 1]).n(), 3);
        assert_eq!(p([1, 1, 1]).dual(), p([3]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn dual_involution_and_cell_sums() {
        for n in 0..=12 {
            for l in Partition::all(n) {
                assert_eq!(l.dual().dual(), l);
                if n <= 10 {
                    let cells = l.cells();
                    let legs: u64 = cells.iter().map(|c| c.leg as u64).sum();
                    let arms: u64 = cells.iter().map(|c| c.arm as u64).sum();
                    assert_eq!(legs, l.n());
                    assert_eq!(arms, l.dual().n());
                    let choose2: u64 = l.parts().iter().map(|&x| (x as u64) * (x as u64 - 1) / 2).sum();
                    assert_eq!(l.dual().n(), choose2);
                }
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(p([2]).z(), BigInt::from(2));
        assert_eq!(p([1, 1]).z(), BigInt::from(2));
        assert_eq!(p([2, 1, 1]).z(), BigInt::from(4));
        // Σ 1/z_ρ over |ρ| = n is 1
        for n in 1..8u32 {
            let s: num_rational::BigRational = Partition::all(n)
                .iter()
                .map(|r| num_rational::BigRational::new(BigInt::one(), r.z()))
                .sum();
            assert_eq!(s, num_rational::BigRational::one());
        }
    }

    #[test]
    fn dominance() {
        assert!(p([1, 1]).dominated_by(&p([2])));
        assert!(!p([2]).dominated_by(&p([1, 1])));
        assert!(!p([3, 1, 1, 1]).dominated_by(&p([2, 2, 2])));
        assert!(!p([2, 2, 2]).dominated_by(&p([3, 1, 1, 1])));
    }
}
