//! Change-of-basis matrices between power sums and the Schur, complete and
//! monomial bases, one alphabet at a time.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::characters::{character_table, invert, z_inv, Matrix};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Power,
    Schur,
    Complete,
    Monomial,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Power => "p",
            Basis::Schur => "s",
            Basis::Complete => "h",
            Basis::Monomial => "m",
        })
    }
}

/// `to_power[λ][ρ]` is the coefficient of `p_ρ` in `B_λ`; `from_power[ρ][λ]`
/// the coefficient of `B_λ` in `p_ρ`.  Indices follow `Partition::all(n)`.
#[derive(Debug)]
pub struct BasisMatrices {
    pub partitions: Vec<Partition>,
    pub to_power: Matrix,
    pub from_power: Matrix,
}

pub fn basis_matrices(basis: Basis, n: u32) -> Arc<BasisMatrices> {
    type Cache = RwLock<HashMap<(Basis, u32), Arc<BasisMatrices>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(m) = cache.read().unwrap().get(&(basis, n)) {
        return m.clone();
    }
    let m = Arc::new(build(basis, n));
    cache.write().unwrap().entry((basis, n)).or_insert(m).clone()
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn build(basis: Basis, n: u32) -> BasisMatrices {
    let table = character_table(n);
    let parts = table.partitions.clone();
    let len = parts.len();
    let (to_power, from_power) = match basis {
        Basis::Power => (identity(len), identity(len)),
        Basis::Schur => {
            let to: Matrix = parts
                .iter()
                .map(|l| {
                    parts
                        .iter()
                        .map(|r| BigRational::from_integer(table.value(l, r).into()) * z_inv(r))
                        .collect()
                })
                .collect();
            let from: Matrix = parts
                .iter()
                .map(|r| {
                    parts
                        .iter()
                        .map(|l| BigRational::from_integer(table.value(l, r).into()))
                        .collect()
                })
                .collect();
            (to, from)
        }
        Basis::Complete => {
            let to = complete_in_power(&parts);
            let from = invert(&to);
            (to, from)
        }
        Basis::Monomial => {
            // ⟨m_λ, h_μ⟩ = δ, so with h_μ = Σ d_{μρ} p_ρ the matrix of m is
            // the inverse transpose of d·diag(z).
            let d = complete_in_power(&parts);
            let dz: Matrix = d
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&parts)
                        .map(|(x, r)| x * BigRational::from_integer(r.z()))
                        .collect()
                })
                .collect();
            let to = transpose(&invert(&dz));
            let from = transpose(&dz);
            (to, from)
        }
    };
    BasisMatrices {
        partitions: parts,
        to_power,
        from_power,
    }
}

fn transpose(m: &Matrix) -> Matrix {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

/// Power-sum expansion of `h_λ` for every `λ ⊢ n`.
fn complete_in_power(parts: &[Partition]) -> Matrix {
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    parts
        .iter()
        .map(|l| {
            let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
            acc.insert(Partition::empty(), BigRational::one());
            for &part in l.parts() {
                let mut next = BTreeMap::new();
                for (key, c) in &acc {
                    for r in Partition::all(part) {
                        let e = next.entry(key.union(&r)).or_insert_with(BigRational::zero);
                        *e += c * z_inv(&r);
                    }
                }
                acc = next;
            }
            let mut row = vec![BigRational::zero(); parts.len()];
            for (k, c) in acc {
                row[index[&k]] = c;
            }
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_are_identity() {
        for b in [Basis::Schur, Basis::Complete, Basis::Monomial] {
            for n in 1..=6 {
                let m = basis_matrices(b, n);
                let len = m.partitions.len();
                for i in 0..len {
                    for j in 0..len {
                        let s: BigRational = (0..len).map(|k| &m.to_power[i][k] * &m.from_power[k][j]).sum();
                        let e = if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        };
                        assert_eq!(s, e, "{b} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_one_one() {
        // m_{11} = (p_11 − p_2)/2
        let m = basis_matrices(Basis::Monomial, 2);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(m.to_power[1][0], -half.clone());
        assert_eq!(m.to_power[1][1], half);
    }
}
