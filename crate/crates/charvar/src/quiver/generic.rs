//! Genericity of eigenvalue data, written additively in a finitely
//! generated abelian group `Z^a ⊕ Z/m₁ ⊕ ⋯`.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::partitions::TypeT;

/// Coordinate moduli; `0` marks a free coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub moduli: Vec<u64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { moduli: vec![0; rank] }
    }

    pub fn cyclic(m: u64) -> Self {
        AbelianGroup { moduli: vec![m] }
    }

    fn reduce(&self, mut x: Vec<i64>) -> Vec<i64> {
        for (a, &m) in x.iter_mut().zip(&self.moduli) {
            if m > 0 {
                *a = a.rem_euclid(m as i64);
            }
        }
        x
    }

    fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &[i64]) -> Vec<i64> {
        self.reduce(a.iter().map(|x| -x).collect())
    }

    fn zero(&self) -> Vec<i64> {
        vec![0; self.moduli.len()]
    }
}

/// A conjugacy class: its type and eigenvalues with multiplicities.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub ty: TypeT,
    pub eigenvalues: Vec<(Vec<i64>, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenericityError {
    #[error("class {index}: eigenvalue multiplicities {found:?} do not match the type (expected {expected:?})")]
    Multiplicities {
        index: usize,
        found: Vec<u32>,
        expected: Vec<u32>,
    },
    #[error("class {index}: eigenvalue has {found} coordinates, group has {expected}")]
    Rank {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("classes have different sizes")]
    Sizes,
}

/// Sums of all sub-multisets of size `r`.
fn subset_sums(group: &AbelianGroup, eig: &[(Vec<i64>, u32)], r: u32) -> HashSet<Vec<i64>> {
    let mut acc: HashSet<(Vec<i64>, u32)> = HashSet::from([(group.zero(), 0)]);
    for (x, m) in eig {
        let mut next = HashSet::new();
        for (s, used) in &acc {
            let mut cur = s.clone();
            for take in 0..=*m {
                if used + take > r {
                    break;
                }
                next.insert((cur.clone(), used + take));
                cur = group.add(&cur, x);
            }
        }
        acc = next;
    }
    acc.into_iter().filter(|(_, u)| *u == r).map(|(s, _)| s).collect()
}

fn sumset(group: &AbelianGroup, sets: &[HashSet<Vec<i64>>]) -> HashSet<Vec<i64>> {
    sets.iter().fold(HashSet::from([group.zero()]), |acc, s| {
        let mut out = HashSet::new();
        for a in &acc {
            for b in s {
                out.insert(group.add(a, b));
            }
        }
        out
    })
}

/// Checks the determinant condition and that no proper sub-selection of
/// eigenvalues, of the same size `r` in every class, multiplies to 1.
pub fn genericity_check(group: &AbelianGroup, classes: &[ClassData]) -> Result<bool, GenericityError> {
    let Some(first) = classes.first() else {
        return Ok(true);
    };
    let n = first.ty.size();
    for (index, c) in classes.iter().enumerate() {
        if c.ty.size() != n {
            return Err(GenericityError::Sizes);
        }
        if let Some(e) = c.eigenvalues.iter().find(|(x, _)| x.len() != group.moduli.len()) {
            return Err(GenericityError::Rank {
                index,
                found: e.0.len(),
                expected: group.moduli.len(),
            });
        }
        let mut found: Vec<u32> = c.eigenvalues.iter().map(|(_, m)| *m).collect();
        let mut expected: Vec<u32> =
            c.ty.entries()
                .iter()
                .flat_map(|(d, l)| std::iter::repeat_n(l.size(), *d as usize))
                .collect();
        found.sort_unstable();
        expected.sort_unstable();
        if found != expected {
            return Err(GenericityError::Multiplicities { index, found, expected });
        }
    }
    let det = classes
        .iter()
        .flat_map(|c| c.eigenvalues.iter())
        .fold(group.zero(), |acc, (x, m)| (0..*m).fold(acc, |a, _| group.add(&a, x)));
    if det != group.zero() {
        return Ok(false);
    }
    let bad = (1..n).into_par_iter().any(|r| {
        let sets: Vec<HashSet<Vec<i64>>> = classes.iter().map(|c| subset_sums(group, &c.eigenvalues, r)).collect();
        // Meet in the middle: 0 ∈ A + B iff A ∩ (−B) ≠ ∅.
        let (left, right) = sets.split_at(sets.len() / 2);
        let a = sumset(group, left);
        let b = sumset(group, right);
        b.iter().any(|x| a.contains(&group.neg(x)))
    });
    Ok(!bad)
}
