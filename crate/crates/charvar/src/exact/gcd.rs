//! Multivariate polynomial gcd over the rationals.
//!
//! The heuristic evaluation gcd is tried first.  When it gives up we use a
//! recursive primitive-PRS on the main variable, with the content computed
//! recursively in the remaining variables.  Before running a PRS, a modular
//! image (other variables evaluated at fixed residues modulo a prime) is used
//! to detect the very common coprime case; the image degree can only
//! overestimate the true gcd degree when leading coefficients survive, so a
//! zero-degree image is a proof.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::heugcd::heu_gcd;
use super::poly::{Rational, SparsePoly, Var};

const P: u64 = 2_147_483_647;

/// Greatest common divisor, normalized to integer coefficients with content 1
/// and positive leading coefficient.  `gcd(0, 0) = 0`.
pub fn gcd(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return SparsePoly::one();
    }
    let (ma, a1) = split_monomial(a);
    let (mb, b1) = split_monomial(b);
    let mut mono: Vec<(String, u32)> = Vec::new();
    for (v, e) in &ma {
        if let Some((_, f)) = mb.iter().find(|(w, _)| w == v) {
            let m = (*e).min(*f);
            if m > 0 {
                mono.push((v.clone(), m));
            }
        }
    }
    let (pa, pb) = (a1.primitive(), b1.primitive());
    let g = heu_gcd(&pa, &pb).unwrap_or_else(|| gcd_no_monomial(&pa, &pb));
    let m: Vec<(&str, u32)> = mono.iter().map(|(v, e)| (v.as_str(), *e)).collect();
    g.shift(&m).primitive()
}

/// Least common multiple, normalized like [`gcd`].
pub fn lcm(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    if a.is_zero() || b.is_zero() {
        return SparsePoly::zero();
    }
    let g = gcd(a, b);
    a.div_exact(&g).expect("gcd divides").mul_poly(b).primitive()
}

fn split_monomial(a: &SparsePoly) -> (Vec<(String, u32)>, SparsePoly) {
    let mins: Vec<(String, u32)> = a
        .vars()
        .iter()
        .map(|v| (v.name().to_string(), a.min_degree_in(v.name())))
        .filter(|(_, e)| *e > 0)
        .collect();
    if mins.is_empty() {
        return (mins, a.clone());
    }
    let m: Vec<(&str, u32)> = mins.iter().map(|(v, e)| (v.as_str(), *e)).collect();
    let q = a
        .div_exact(&SparsePoly::monomial(Rational::one(), &m))
        .expect("monomial content divides");
    (mins, q)
}

/// Content with respect to `x`: gcd of the coefficients in `x`, folded with
/// an optional seed so the fold can stop at 1.
fn content_in(a: &SparsePoly, x: &str, seed: Option<&SparsePoly>) -> SparsePoly {
    let mut g = seed.cloned().unwrap_or_else(SparsePoly::zero);
    let mut coeffs = a.coeffs_in(x);
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(|c| c.num_terms());
    for c in coeffs {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn gcd_no_monomial(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    if a.is_constant() || b.is_constant() || a.num_terms() == 1 || b.num_terms() == 1 {
        return SparsePoly::one();
    }
    if a == b {
        return a.primitive();
    }
    // Variables private to one side can only contribute through contents.
    for v in a.vars() {
        if !b.has_var(v.name()) {
            return content_in(a, v.name(), Some(b));
        }
    }
    for v in b.vars() {
        if !a.has_var(v.name()) {
            return content_in(b, v.name(), Some(a));
        }
    }
    let x: Var = a
        .vars()
        .iter()
        .min_by_key(|v| a.degree_in(v.name()).max(b.degree_in(v.name())))
        .cloned()
        .expect("non-constant");
    let x = x.name();
    let ca = content_in(a, x, None);
    let cb = content_in(b, x, None);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    if image_gcd_degree(&pa, &pb, x) == Some(0) {
        return c;
    }
    let g = prs(&pa, &pb, x);
    c.mul_poly(&g).primitive()
}

fn prs(a: &SparsePoly, b: &SparsePoly, x: &str) -> SparsePoly {
    let (mut r0, mut r1) = if a.degree_in(x) >= b.degree_in(x) {
        (a.coeffs_in(x), b.coeffs_in(x))
    } else {
        (b.coeffs_in(x), a.coeffs_in(x))
    };
    loop {
        if r1.iter().all(|c| c.is_zero()) {
            let g = SparsePoly::from_coeffs_in(x, &r0);
            return primitive_in(&g, x);
        }
        if r1.len() == 1 {
            return SparsePoly::one();
        }
        let r = prem(&r0, &r1);
        r0 = r1;
        if r.is_empty() {
            r1 = vec![SparsePoly::zero()];
            continue;
        }
        let rp = primitive_in(&SparsePoly::from_coeffs_in(x, &r), x);
        r1 = rp.coeffs_in(x);
    }
}

fn primitive_in(a: &SparsePoly, x: &str) -> SparsePoly {
    let c = content_in(a, x, None);
    a.div_exact(&c).expect("content divides").primitive()
}

/// Pseudo-remainder of dense coefficient vectors; the result has its
/// trailing zero coefficients removed (empty means zero).
fn prem(a: &[SparsePoly], b: &[SparsePoly]) -> Vec<SparsePoly> {
    let n = b.len() - 1;
    let lb = &b[n];
    let mut r: Vec<SparsePoly> = a.to_vec();
    while r.len() > n && !r.is_empty() {
        let k = r.len() - 1;
        let rk = r[k].clone();
        if rk.is_zero() {
            r.pop();
            continue;
        }
        for c in r.iter_mut().take(k) {
            *c = c.mul_poly(lb);
        }
        for (j, bj) in b.iter().enumerate().take(n) {
            let idx = k - n + j;
            r[idx] = &r[idx] - &rk.mul_poly(bj);
        }
        r.pop();
    }
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

fn mod_p(x: &BigInt) -> u64 {
    let m = x % BigInt::from(P);
    let v = m.to_i64().unwrap();
    if v < 0 {
        (v + P as i64) as u64
    } else {
        v as u64
    }
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

fn eval_mod(p: &SparsePoly, point: &[(String, u64)]) -> Option<u64> {
    let vals: Vec<u64> = p
        .vars()
        .iter()
        .map(|v| point.iter().find(|(n, _)| n == v.name()).map(|(_, x)| *x).unwrap())
        .collect();
    let mut acc = 0u64;
    for (m, c) in p.raw_terms() {
        if !c.is_integer() {
            return None;
        }
        let mut t = mod_p(c.numer());
        for (x, &e) in vals.iter().zip(&m.0) {
            t = t * pow_mod(*x, e as u64) % P;
        }
        acc = (acc + t) % P;
    }
    Some(acc)
}

fn image_gcd_degree(a: &SparsePoly, b: &SparsePoly, x: &str) -> Option<usize> {
    let ca = a.primitive().coeffs_in(x);
    let cb = b.primitive().coeffs_in(x);
    let rest: Vec<String> = a
        .vars()
        .iter()
        .chain(b.vars())
        .filter(|v| v.name() != x)
        .map(|v| v.name().to_string())
        .collect();
    for attempt in 0..4u64 {
        let point: Vec<(String, u64)> = rest
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), (1_000_003 * (attempt + 1) + 7919 * i as u64 + 12345) % P))
            .collect();
        let ia: Option<Vec<u64>> = ca.iter().map(|c| eval_mod(c, &point)).collect();
        let ib: Option<Vec<u64>> = cb.iter().map(|c| eval_mod(c, &point)).collect();
        let (Some(ia), Some(ib)) = (ia, ib) else {
            return None;
        };
        if ia.last() == Some(&0) || ib.last() == Some(&0) {
            continue;
        }
        return Some(univariate_gcd_degree_mod(ia, ib));
    }
    None
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn univariate_gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lb_inv = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() {
            let f = a.last().unwrap() * lb_inv % P;
            let shift = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                let idx = shift + j;
                a[idx] = (a[idx] + P - f * bj % P) % P;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Integer content of a polynomial's coefficients (for diagnostics).
pub fn integer_content(a: &SparsePoly) -> BigInt {
    let f = a.primitive_factor();
    if f.is_zero() {
        return BigInt::zero();
    }
    (f.denom() / f.numer()).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::rat;

    fn p(s: &[(i64, &[(&str, u32)])]) -> SparsePoly {
        SparsePoly::from_terms(s.iter().map(|(c, f)| (rat(*c), f.to_vec())))
    }

    #[test]
    fn univariate() {
        let a = SparsePoly::univariate("q", &[-1, 0, 1]);
        let b = SparsePoly::univariate("q", &[1, 2, 1]);
        assert_eq!(gcd(&a, &b), SparsePoly::univariate("q", &[1, 1]));
    }

    #[test]
    fn bivariate_common_factor() {
        // (z^2 - 1)(1 - w^2) and (z^2 - 1)(z - w)
        let z21 = p(&[(1, &[("z", 2)]), (-1, &[])]);
        let w = p(&[(1, &[]), (-1, &[("w", 2)])]);
        let zw = p(&[(1, &[("z", 1)]), (-1, &[("w", 1)])]);
        let g = gcd(&z21.mul_poly(&w), &z21.mul_poly(&zw));
        assert_eq!(g, z21);
    }

    #[test]
    fn monomial_part() {
        let a = p(&[(2, &[("z", 3), ("w", 1)]), (4, &[("z", 2), ("w", 2)])]);
        let b = p(&[(6, &[("z", 1), ("w", 2)])]);
        assert_eq!(gcd(&a, &b), p(&[(1, &[("z", 1), ("w", 1)])]));
    }

    #[test]
    fn private_variable_content() {
        // a = (q+1)(t+2), b = (q+1)^2
        let q1 = SparsePoly::univariate("q", &[1, 1]);
        let t2 = SparsePoly::univariate("t", &[2, 1]);
        assert_eq!(gcd(&q1.mul_poly(&t2), &q1.pow(2)), q1);
    }

    #[test]
    fn coprime() {
        let a = p(&[(1, &[("z", 2)]), (-1, &[("w", 2)])]);
        let b = p(&[(1, &[("z", 1)]), (1, &[("w", 3)]), (1, &[])]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn three_variables() {
        let f = p(&[(1, &[("z", 1), ("q", 1)]), (-1, &[("w", 2)]), (3, &[])]);
        let g1 = p(&[(1, &[("z", 2)]), (1, &[("q", 1), ("w", 1)])]);
        let g2 = p(&[(1, &[("w", 3)]), (-2, &[("z", 1)])]);
        let g = gcd(&f.mul_poly(&g1), &f.mul_poly(&g2));
        assert_eq!(g, f.primitive());
    }
}
