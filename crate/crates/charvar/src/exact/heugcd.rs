//! Heuristic gcd of integer polynomials by evaluation at a large integer and
//! ξ-adic reconstruction.  Returns `None` when the heuristic gives up; the
//! caller then falls back to the subresultant route.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Mono, Rational, SparsePoly, Var};

type IPoly = BTreeMap<Vec<u32>, BigInt>;

const MAX_BITS: u64 = 400_000;

pub(crate) fn heu_gcd(a: &SparsePoly, b: &SparsePoly) -> Option<SparsePoly> {
    let mut vars: Vec<Var> = a.vars().iter().chain(b.vars()).cloned().collect();
    vars.sort();
    vars.dedup();
    let fa = to_ipoly(a, &vars)?;
    let fb = to_ipoly(b, &vars)?;
    let active: Vec<usize> = (0..vars.len()).collect();
    let h = heu(&fa, &fb, &active)?;
    let terms = h
        .into_iter()
        .map(|(e, c)| (Mono(e), Rational::from_integer(c)))
        .collect();
    Some(SparsePoly::from_raw(vars, terms))
}

fn to_ipoly(p: &SparsePoly, vars: &[Var]) -> Option<IPoly> {
    let idx: Vec<usize> = p.vars().iter().map(|v| vars.binary_search(v).unwrap()).collect();
    let mut out = IPoly::new();
    for (m, c) in p.raw_terms() {
        if !c.is_integer() {
            return None;
        }
        let mut e = vec![0u32; vars.len()];
        for (&i, &x) in idx.iter().zip(&m.0) {
            e[i] = x;
        }
        out.insert(e, c.numer().clone());
    }
    Some(out)
}

fn content(f: &IPoly) -> BigInt {
    f.values().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn norm(f: &IPoly) -> BigInt {
    f.values().map(|c| c.abs()).max().unwrap_or_default()
}

fn is_constant(f: &IPoly) -> bool {
    f.keys().all(|e| e.iter().all(|&x| x == 0))
}

fn div_int(f: &IPoly, c: &BigInt) -> IPoly {
    f.iter().map(|(e, x)| (e.clone(), x / c)).collect()
}

fn scale_int(f: &IPoly, c: &BigInt) -> IPoly {
    f.iter().map(|(e, x)| (e.clone(), x * c)).collect()
}

/// Primitive part with positive leading coefficient.
fn primitive(f: &IPoly) -> IPoly {
    let mut c = content(f);
    if f.values().next_back().is_some_and(|x| x.is_negative()) {
        c = -c;
    }
    div_int(f, &c)
}

fn eval_at(f: &IPoly, j: usize, xi: &BigInt) -> IPoly {
    let mut out = IPoly::new();
    let mut pows: Vec<BigInt> = vec![BigInt::one()];
    for (e, c) in f {
        let d = e[j] as usize;
        while pows.len() <= d {
            let next = pows.last().unwrap() * xi;
            pows.push(next);
        }
        let mut k = e.clone();
        k[j] = 0;
        *out.entry(k).or_default() += c * &pows[d];
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Symmetric ξ-adic expansion of every coefficient, digits becoming powers of
/// variable `j`.
fn interpolate(h: &IPoly, j: usize, xi: &BigInt) -> IPoly {
    let half = xi >> 1;
    let mut out = IPoly::new();
    for (e, c) in h {
        let mut c = c.clone();
        let mut i = 0u32;
        while !c.is_zero() {
            let mut d = c.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            if !d.is_zero() {
                let mut k = e.clone();
                k[j] = i;
                out.insert(k, d.clone());
            }
            c = (c - d) / xi;
            i += 1;
        }
    }
    out
}

/// Exact quotient in `Z[x]`, or `None`.
fn div_exact(f: &IPoly, g: &IPoly) -> Option<IPoly> {
    let (lm, lc) = g.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut rem = f.clone();
    let mut quot = IPoly::new();
    while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        if rm.iter().zip(&lm).any(|(a, b)| a < b) {
            return None;
        }
        let (qc, r) = rc.div_rem(&lc);
        if !r.is_zero() {
            return None;
        }
        let qm: Vec<u32> = rm.iter().zip(&lm).map(|(a, b)| a - b).collect();
        for (gm, gc) in g {
            let e: Vec<u32> = gm.iter().zip(&qm).map(|(a, b)| a + b).collect();
            let p = gc * &qc;
            let entry = rem.entry(e.clone()).or_default();
            *entry -= p;
            if entry.is_zero() {
                rem.remove(&e);
            }
        }
        quot.insert(qm, qc);
    }
    Some(quot)
}

fn degree_in(f: &IPoly, j: usize) -> u32 {
    f.keys().map(|e| e[j]).max().unwrap_or(0)
}

fn heu(f: &IPoly, g: &IPoly, active: &[usize]) -> Option<IPoly> {
    let cf = content(f);
    let cg = content(g);
    let gc = cf.gcd(&cg);
    if is_constant(f) || is_constant(g) {
        return Some(IPoly::from([(vec![0; f.keys().next()?.len()], gc)]));
    }
    let f = div_int(f, &cf);
    let g = div_int(g, &cg);
    let Some((&j, rest)) = active
        .iter()
        .filter(|&&j| degree_in(&f, j) > 0 || degree_in(&g, j) > 0)
        .collect::<Vec<_>>()
        .split_last()
        .map(|(a, b)| (*a, b.iter().map(|x| **x).collect::<Vec<usize>>()))
    else {
        return Some(IPoly::from([(vec![0; f.keys().next()?.len()], gc)]));
    };
    let deg = degree_in(&f, j).max(degree_in(&g, j)) as u64 + 1;
    let mut xi: BigInt = BigInt::from(2) * norm(&f).min(norm(&g)) + BigInt::from(29);
    for _ in 0..6 {
        if xi.bits() * deg > MAX_BITS {
            return None;
        }
        let ff = eval_at(&f, j, &xi);
        let gg = eval_at(&g, j, &xi);
        if !ff.is_empty() && !gg.is_empty() {
            if let Some(h) = heu(&ff, &gg, &rest) {
                let cand = primitive(&interpolate(&h, j, &xi));
                if !cand.is_empty() && div_exact(&f, &cand).is_some() && div_exact(&g, &cand).is_some() {
                    return Some(scale_int(&cand, &gc));
                }
                for (big, img) in [(&f, &ff), (&g, &gg)] {
                    let Some(co) = div_exact(img, &h) else { continue };
                    let co = primitive(&interpolate(&co, j, &xi));
                    if co.is_empty() {
                        continue;
                    }
                    if let Some(cand) = div_exact(big, &co) {
                        let cand = primitive(&cand);
                        let other = if std::ptr::eq(big, &f) { &g } else { &f };
                        if div_exact(other, &cand).is_some() {
                            return Some(scale_int(&cand, &gc));
                        }
                    }
                }
            }
        }
        xi = (&xi * BigInt::from(73794)) / BigInt::from(27011) + 1;
    }
    None
}
