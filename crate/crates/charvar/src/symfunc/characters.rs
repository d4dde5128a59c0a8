//! Symmetric-group characters by the Murnaghan–Nakayama rule and the
//! change-of-basis matrices built from them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partitions::Partition;

/// Character table of `S_n`: `chi[λ][ρ]` with both indices running over
/// `Partition::all(n)`.
#[derive(Debug)]
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    chi: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn build(n: u32) -> Self {
        let partitions = Partition::all(n);
        let index = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut memo = HashMap::new();
        let chi = partitions
            .iter()
            .map(|l| partitions.iter().map(|r| mn(l, r.parts(), &mut memo)).collect())
            .collect();
        CharacterTable { partitions, index, chi }
    }

    pub fn index(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.chi[self.index(lambda)][self.index(rho)]
    }
}

/// Shared, lazily built character tables.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(CharacterTable::build(n));
    cache.write().unwrap().entry(n).or_insert(t).clone()
}

/// `χ^λ_ρ`.
pub fn chi(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "character of mismatched sizes");
    character_table(lambda.size()).value(lambda, rho)
}

/// Murnaghan–Nakayama on beta-sets: removing a rim hook of length `r` moves a
/// bead from `b` to `b − r`, with sign given by the beads jumped over.
fn mn(lambda: &Partition, rho: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), i64>) -> i64 {
    if rho.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rho[0];
    let l = lambda.len();
    let beta: Vec<u32> = (0..l).map(|i| lambda.part(i) + (l - 1 - i) as u32).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let len = nb.len();
        let parts: Vec<u32> = nb.iter().enumerate().map(|(j, &x)| x - (len - 1 - j) as u32).collect();
        let mu = Partition::new(parts);
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&mu, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Dense square matrix over the rationals.
pub type Matrix = Vec<Vec<BigRational>>;

pub fn invert(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular change-of-basis matrix");
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// `1 / z_ρ`.
pub fn z_inv(rho: &Partition) -> BigRational {
    BigRational::new(BigInt::one(), rho.z())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    #[test]
    fn small_values() {
        assert_eq!(chi(&p([2]), &p([2])), 1);
        assert_eq!(chi(&p([2]), &p([1, 1])), 1);
        assert_eq!(chi(&p([1, 1]), &p([2])), -1);
        assert_eq!(chi(&p([2, 1]), &p([1, 1, 1])), 2);
        assert_eq!(chi(&p([2, 1]), &p([3])), -1);
        assert_eq!(chi(&p([2, 1]), &p([2, 1])), 0);
        assert_eq!(chi(&p([2, 2]), &p([2, 2])), 2);
        assert_eq!(chi(&p([3, 1]), &p([2, 2])), -1);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let t = character_table(n);
            for a in &t.partitions {
                for b in &t.partitions {
                    let s: i64 = t.partitions.iter().map(|l| t.value(l, a) * t.value(l, b)).sum();
                    let expect = if a == b { a.z() } else { BigInt::zero() };
                    assert_eq!(BigInt::from(s), expect);
                }
            }
        }
    }

    #[test]
    fn inversion() {
        let m: Matrix = vec![
            vec![BigRational::from_integer(2.into()), BigRational::one()],
            vec![BigRational::one(), BigRational::one()],
        ];
        let i = invert(&m);
        assert_eq!(i[0][0], BigRational::one());
        assert_eq!(i[1][1], BigRational::from_integer(2.into()));
    }
}
