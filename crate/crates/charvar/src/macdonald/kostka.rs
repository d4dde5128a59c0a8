//! Kostka–Foulkes polynomials from the charge statistic and the Green
//! polynomials built from them.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

use crate::exact::{rat, SparsePoly};
use crate::partitions::Partition;
use crate::symfunc::chi;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("size mismatch: |{lambda}| ≠ |{mu}|")]
pub struct SizeMismatch {
    pub lambda: Partition,
    pub mu: Partition,
}

/// Semistandard tableaux of shape `λ` and content `μ`, as rows (English).
pub fn ssyt(lambda: &Partition, mu: &Partition) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let rows = vec![Vec::new(); lambda.len()];
    fill(lambda, mu.parts(), 1, rows, &mut out);
    out
}

/// Places `content[0]` copies of `letter` as a horizontal strip.
fn fill(lambda: &Partition, content: &[u32], letter: u32, rows: Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    let Some((&m, rest)) = content.split_first() else {
        if rows.iter().enumerate().all(|(i, r)| r.len() as u32 == lambda.part(i)) {
            out.push(rows);
        }
        return;
    };
    // Row i may gain at most (row above's old length − own length) cells.
    let mut strips = Vec::new();
    let mut cur = vec![0u32; rows.len()];
    fn rec(i: usize, left: u32, rows: &[Vec<u32>], lambda: &Partition, cur: &mut Vec<u32>, strips: &mut Vec<Vec<u32>>) {
        if i == rows.len() {
            if left == 0 {
                strips.push(cur.clone());
            }
            return;
        }
        let len = rows[i].len() as u32;
        let cap_shape = lambda.part(i) - len;
        let cap_strip = if i == 0 {
            u32::MAX
        } else {
            rows[i - 1].len() as u32 - len
        };
        for a in 0..=left.min(cap_shape).min(cap_strip) {
            cur[i] = a;
            rec(i + 1, left - a, rows, lambda, cur, strips);
        }
        cur[i] = 0;
    }
    rec(0, m, &rows, lambda, &mut cur, &mut strips);
    for s in strips {
        let mut next = rows.clone();
        for (r, &a) in next.iter_mut().zip(&s) {
            r.extend(std::iter::repeat_n(letter, a as usize));
        }
        fill(lambda, rest, letter + 1, next, out);
    }
}

/// Charge of a word with partition content.
pub fn charge(word: &[u32]) -> u32 {
    let mut w: Vec<Option<u32>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    while w.iter().any(Option::is_some) {
        let n = w.len();
        let top = *w.iter().flatten().max().unwrap();
        // Scan leftwards, cyclically, for 1, 2, …, picking a standard subword.
        let mut picked = Vec::with_capacity(top as usize);
        let mut pos = n;
        for letter in 1..=top {
            let found = (1..=n).map(|k| (pos + n - k) % n).find(|&i| w[i] == Some(letter));
            match found {
                Some(i) => {
                    picked.push(i);
                    pos = i;
                }
                None => break,
            }
        }
        let mut index = 0;
        for pair in picked.windows(2) {
            if pair[1] > pair[0] {
                index += 1;
            }
            total += index;
        }
        for i in picked {
            w[i] = None;
        }
    }
    total
}

/// Reading word: rows from bottom to top, each left to right.
pub fn reading_word(t: &[Vec<u32>]) -> Vec<u32> {
    t.iter().rev().flatten().copied().collect()
}

/// `K_{λμ}(t)`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<SparsePoly, SizeMismatch> {
    if lambda.size() != mu.size() {
        return Err(SizeMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
    for t in ssyt(lambda, mu) {
        *counts.entry(charge(&reading_word(&t))).or_default() += 1;
    }
    Ok(SparsePoly::from_terms(
        counts.into_iter().map(|(e, c)| (rat(c), vec![("t", e)])),
    ))
}

/// `K̃_{λμ}(q) = q^{n(μ)} K_{λμ}(1/q)`.
pub fn modified_kostka_q(lambda: &Partition, mu: &Partition) -> Result<SparsePoly, SizeMismatch> {
    let k = kostka_foulkes(lambda, mu)?;
    let nmu = mu.n() as u32;
    let coeffs = k
        .univariate_coeffs("t")
        .unwrap_or_else(|| vec![k.constant_value().unwrap_or_default()]);
    Ok(SparsePoly::from_terms(coeffs.iter().enumerate().map(|(e, c)| {
        assert!(e as u32 <= nmu, "charge exceeds n(μ)");
        (c.clone(), vec![("q", nmu - e as u32)])
    })))
}

/// Cached `K̃_{λμ}(q)`.
pub fn kt(lambda: &Partition, mu: &Partition) -> SparsePoly {
    type Cache = RwLock<HashMap<(Partition, Partition), Arc<SparsePoly>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return (**v).clone();
    }
    let v = modified_kostka_q(lambda, mu).expect("sizes agree");
    cache.write().unwrap().insert(key, Arc::new(v.clone()));
    v
}

/// `Q^λ_ρ(q) = Σ_μ χ^μ_ρ K̃_{μλ}(q)`.
pub fn green_polynomial(lambda: &Partition, rho: &Partition) -> Result<SparsePoly, SizeMismatch> {
    if lambda.size() != rho.size() {
        return Err(SizeMismatch {
            lambda: lambda.clone(),
            mu: rho.clone(),
        });
    }
    Ok(Partition::all(lambda.size())
        .iter()
        .fold(SparsePoly::zero(), |acc, mu| {
            &acc + &kt(mu, lambda).scale(&rat(chi(mu, rho)))
        }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(ssyt(&p([2, 1]), &p([1, 1, 1])).len(), 2);
        assert_eq!(ssyt(&p([3, 2]), &p([2, 2, 1])).len(), 2);
        assert_eq!(ssyt(&p([2]), &p([1, 1])).len(), 1);
        assert_eq!(ssyt(&p([1, 1]), &p([2])).len(), 0);
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[3, 1, 2]), 2);
        assert_eq!(charge(&[2, 1, 3]), 1);
        assert_eq!(charge(&[1, 1, 2]), 1);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_foulkes(&p([2]), &p([1, 1])).unwrap(), SparsePoly::var("t"));
        assert_eq!(
            modified_kostka_q(&p([2, 1]), &p([1, 1, 1])).unwrap(),
            SparsePoly::univariate("q", &[0, 1, 1])
        );
        for n in 1..=5 {
            for l in Partition::all(n) {
                assert!(kostka_foulkes(&l, &l).unwrap().is_one());
            }
        }
        assert!(kostka_foulkes(&p([2]), &p([1])).is_err());
    }

    #[test]
    fn green_examples() {
        assert_eq!(
            green_polynomial(&p([1, 1]), &p([1, 1])).unwrap(),
            SparsePoly::univariate("q", &[1, 1])
        );
        assert_eq!(
            green_polynomial(&p([1, 1]), &p([2])).unwrap(),
            SparsePoly::univariate("q", &[1, -1])
        );
        assert!(green_polynomial(&p([2]), &p([2])).unwrap().is_one());
    }
}
