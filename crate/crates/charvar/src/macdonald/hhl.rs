//! Modified Macdonald polynomials from the inv/maj filling statistics.
//!
//! Diagrams are drawn French style: row 0 is the longest row, at the bottom.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use crate::exact::{rat, RationalFunction, SparsePoly};
use crate::partitions::{Cell, Partition};
use crate::symfunc::{Basis, BasisExpansion, SymFunc};

/// `(inv, maj)` of a filling, cells listed as in `Partition::cells`.
pub fn inv_maj(mu: &Partition, cells: &[Cell], filling: &[u32]) -> (u32, u32) {
    let pos: HashMap<(u32, u32), usize> = cells.iter().enumerate().map(|(i, c)| ((c.row, c.col), i)).collect();
    let mut maj = 0;
    let mut des_arm = 0;
    for (i, c) in cells.iter().enumerate() {
        if c.row > 0 {
            let below = pos[&(c.row - 1, c.col)];
            if filling[i] > filling[below] {
                maj += c.leg + 1;
                des_arm += c.arm;
            }
        }
    }
    let mut inv = 0;
    for r in 0..mu.len() as u32 {
        let row_len = mu.part(r as usize);
        for a in 0..row_len {
            let u = filling[pos[&(r, a)]];
            for b in a + 1..row_len {
                if u > filling[pos[&(r, b)]] {
                    inv += 1;
                }
            }
            // Upper cell (r, a) is read before the lower cell (r-1, b), b < a.
            if r > 0 {
                for b in 0..a {
                    if u > filling[pos[&(r - 1, b)]] {
                        inv += 1;
                    }
                }
            }
        }
    }
    (inv - des_arm, maj)
}

/// Distinct rearrangements of a multiset, in lexicographic order.
fn multiset_permutations(mut items: Vec<u32>) -> Vec<Vec<u32>> {
    items.sort_unstable();
    let mut out = vec![items.clone()];
    loop {
        let n = items.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| items[i] < items[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
        out.push(items.clone());
    }
    out
}

/// Coefficient of `m_α` in `H̃_μ`, as a polynomial in `q, t`.
pub fn monomial_coefficient(mu: &Partition, alpha: &Partition) -> SparsePoly {
    let cells = mu.cells();
    let content: Vec<u32> = alpha
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as u32 + 1, m as usize))
        .collect();
    let mut counts: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for f in multiset_permutations(content) {
        *counts.entry(inv_maj(mu, &cells, &f)).or_default() += 1;
    }
    SparsePoly::from_terms(counts.into_iter().map(|((i, m), c)| (rat(c), vec![("q", i), ("t", m)])))
}

/// `H̃_μ(x; q, t)` in one alphabet.
pub fn modified_macdonald(mu: &Partition) -> SymFunc {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SymFunc>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(mu) {
        return (**f).clone();
    }
    let n = mu.size();
    let terms: BTreeMap<_, _> = Partition::all(n)
        .into_par_iter()
        .map(|a| {
            let c = RationalFunction::from_poly(monomial_coefficient(mu, &a));
            (vec![a], c)
        })
        .collect();
    let f = SymFunc::from_expansion(&BasisExpansion {
        basis: Basis::Monomial,
        degree: vec![n],
        terms,
    });
    cache
        .write()
        .unwrap()
        .entry(mu.clone())
        .or_insert_with(|| Arc::new(f.clone()));
    f
}

/// `K̃_{λμ}(q,t)` for all `λ ⊢ |μ|`.
pub fn qt_kostka_column(mu: &Partition) -> BTreeMap<Partition, SparsePoly> {
    let s = modified_macdonald(mu).to_basis(Basis::Schur);
    Partition::all(mu.size())
        .into_iter()
        .map(|l| {
            let c = s
                .coeff(std::slice::from_ref(&l))
                .assert_polynomial()
                .expect("K̃(q,t) is polynomial");
            (l, c)
        })
        .collect()
}

/// Schur expansions `H̃_μ = Σ_λ K̃_{λμ}(q,t) s_λ` for every `|μ| ≤ n`.
#[derive(Debug, Clone)]
pub struct MacdonaldTable {
    pub entries: BTreeMap<Partition, BTreeMap<Partition, SparsePoly>>,
}

impl MacdonaldTable {
    pub fn build(n: u32) -> Self {
        let mus: Vec<Partition> = (1..=n).flat_map(Partition::all).collect();
        let entries = mus
            .into_par_iter()
            .map(|mu| {
                let col = qt_kostka_column(&mu);
                (mu, col)
            })
            .collect();
        MacdonaldTable { entries }
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&SparsePoly> {
        self.entries.get(mu).and_then(|c| c.get(lambda))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    fn poly(s: &[(i64, u32, u32)]) -> SparsePoly {
        SparsePoly::from_terms(s.iter().map(|&(c, i, j)| (rat(c), vec![("q", i), ("t", j)])))
    }

    #[test]
    fn two_cells() {
        let row = qt_kostka_column(&p([2]));
        assert!(row[&p([2])].is_one());
        assert_eq!(row[&p([1, 1])], SparsePoly::var("q"));
        let col = qt_kostka_column(&p([1, 1]));
        assert!(col[&p([2])].is_one());
        assert_eq!(col[&p([1, 1])], SparsePoly::var("t"));
    }

    #[test]
    fn hook_shape_three() {
        let c = qt_kostka_column(&p([2, 1]));
        assert!(c[&p([3])].is_one());
        assert_eq!(c[&p([2, 1])], poly(&[(1, 1, 0), (1, 0, 1)]));
        assert_eq!(c[&p([1, 1, 1])], poly(&[(1, 1, 1)]));
    }

    #[test]
    fn single_cell() {
        assert_eq!(modified_macdonald(&p([1])), SymFunc::schur(&p([1])));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(multiset_permutations(vec![1, 1, 2, 3]).len(), 12);
        assert_eq!(multiset_permutations(vec![]).len(), 1);
    }
}
