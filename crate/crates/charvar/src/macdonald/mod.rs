//! Modified Macdonald polynomials, Kostka–Foulkes and Green polynomials, and
//! the hook-type products that weight them.

mod hhl;
mod hooks;
mod kostka;

use std::collections::BTreeMap;
use std::fmt::Write as _;

pub use hhl::{inv_maj, modified_macdonald, monomial_coefficient, qt_kostka_column, MacdonaldTable};
pub use hooks::{centralizer_order, genus_hook, hook_polynomial, unipotent_weight, EmptyPartition};
pub use kostka::{charge, green_polynomial, kostka_foulkes, kt, modified_kostka_q, reading_word, ssyt, SizeMismatch};

use crate::exact::{RationalFunction, SparsePoly};
use crate::partitions::Partition;
use crate::symfunc::SymFunc;

/// One-variable tables for partitions of a fixed `n`.
#[derive(Debug, Clone)]
pub struct GreenTable {
    pub n: u32,
    pub partitions: Vec<Partition>,
    /// `(λ, μ) ↦ K̃_{λμ}(q)`
    pub kt: BTreeMap<(Partition, Partition), SparsePoly>,
    /// `(λ, μ) ↦ K_{λμ}(t)`
    pub kostka_foulkes: BTreeMap<(Partition, Partition), SparsePoly>,
    /// `(λ, ρ) ↦ Q^λ_ρ(q)`
    pub green: BTreeMap<(Partition, Partition), SparsePoly>,
    pub hook: BTreeMap<Partition, SparsePoly>,
    pub centralizer: BTreeMap<Partition, SparsePoly>,
}

impl GreenTable {
    pub fn build(n: u32) -> Self {
        let partitions = Partition::all(n);
        let mut t = GreenTable {
            n,
            partitions: partitions.clone(),
            kt: BTreeMap::new(),
            kostka_foulkes: BTreeMap::new(),
            green: BTreeMap::new(),
            hook: BTreeMap::new(),
            centralizer: BTreeMap::new(),
        };
        for l in &partitions {
            for m in &partitions {
                let key = (l.clone(), m.clone());
                t.kt.insert(key.clone(), kt(l, m));
                t.kostka_foulkes
                    .insert(key.clone(), kostka_foulkes(l, m).expect("same size"));
                t.green.insert(key, green_polynomial(l, m).expect("same size"));
            }
            t.hook.insert(l.clone(), hook_polynomial(l));
            t.centralizer.insert(l.clone(), centralizer_order(l));
        }
        t
    }
}

/// `H̃_μ(x; q) = Σ_λ K̃_{λμ}(q) s_λ`, the one-variable transformed
/// Hall–Littlewood function in the variable `q`.
pub fn hall_littlewood_tilde(mu: &Partition) -> SymFunc {
    Partition::all(mu.size())
        .iter()
        .fold(SymFunc::zero(vec![mu.size()]), |acc, l| {
            let c = kt(l, mu);
            if c.is_zero() {
                acc
            } else {
                &acc + &SymFunc::schur(l).scale_rf(&RationalFunction::from_poly(c))
            }
        })
}

/// Which Kostka table to dump.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KostkaKind {
    /// `K̃_{λμ}(q,t)`
    Macdonald,
    /// `K̃_{λμ}(q)`
    ModifiedQ,
    /// `K_{λμ}(t)`
    Charge,
}

/// Tab-separated table with rows `λ` and columns `μ`.
pub fn kostka_tsv(n: u32, kind: KostkaKind) -> String {
    let parts = Partition::all(n);
    let mut out = String::from("lambda\\mu");
    for m in &parts {
        write!(out, "\t{m}").unwrap();
    }
    out.push('\n');
    let columns: Vec<BTreeMap<Partition, SparsePoly>> = match kind {
        KostkaKind::Macdonald => parts.iter().map(qt_kostka_column).collect(),
        KostkaKind::ModifiedQ => parts
            .iter()
            .map(|m| parts.iter().map(|l| (l.clone(), kt(l, m))).collect())
            .collect(),
        KostkaKind::Charge => parts
            .iter()
            .map(|m| {
                parts
                    .iter()
                    .map(|l| (l.clone(), kostka_foulkes(l, m).expect("same size")))
                    .collect()
            })
            .collect(),
    };
    for l in &parts {
        write!(out, "{l}").unwrap();
        for col in &columns {
            write!(out, "\t{}", col[l]).unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macdonald_at_q_zero_is_hall_littlewood() {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let h = modified_macdonald(&mu).map_coeffs(|c| {
                    c.substitute(&[("q", RationalFunction::zero()), ("t", RationalFunction::var("q"))])
                        .unwrap()
                });
                assert_eq!(h, hall_littlewood_tilde(&mu), "μ = {mu}");
            }
        }
    }

    #[test]
    fn tsv_shape() {
        let s = kostka_tsv(2, KostkaKind::ModifiedQ);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "lambda\\mu\t[2]\t[1,1]");
        assert_eq!(lines[2], "[1,1]\t0\tq");
    }
}
