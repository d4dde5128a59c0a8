//! Prime fields, polynomials over them, and small extension fields with
//! discrete-log tables.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime; the oracle only supports prime q")]
    NotPrime(u64),
    #[error("{0} is not a monic irreducible polynomial of degree {1} over F_{2}")]
    NotIrreducible(String, usize, u32),
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let (mut b, mut r) = (a as u64 % p as u64, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Polynomial over `F_p`, coefficients from the constant term up, no
/// trailing zeros.
pub type FpPoly = Vec<u32>;

pub fn trim(mut f: FpPoly) -> FpPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn poly_mul(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + *x as u64 * *y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|x| x as u32).collect())
}

/// Remainder and quotient of `a` by a nonzero `b`.
pub fn poly_divmod(a: &[u32], b: &[u32], p: u32) -> (FpPoly, FpPoly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u32; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        q[shift] = c;
        for (i, y) in b.iter().enumerate() {
            let sub = (c as u64 * *y as u64 % p as u64) as u32;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

/// All monic polynomials of degree `d`.
pub fn monic_polys(d: usize, p: u32) -> Vec<FpPoly> {
    let count = (p as usize).pow(d as u32);
    (0..count)
        .map(|mut i| {
            let mut f: Vec<u32> = (0..d)
                .map(|_| {
                    let c = (i % p as usize) as u32;
                    i /= p as usize;
                    c
                })
                .collect();
            f.push(1);
            f
        })
        .collect()
}

pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    (1..=d / 2).all(|e| monic_polys(e, p).iter().all(|g| !poly_divmod(f, g, p).1.is_empty()))
}

/// Monic irreducible polynomials of degree `d`, excluding `x` itself.
pub fn monic_irreducibles(d: usize, p: u32) -> Vec<FpPoly> {
    monic_polys(d, p)
        .into_iter()
        .filter(|f| is_irreducible(f, p) && f != &vec![0, 1])
        .collect()
}

/// `F_{p^d}` as `F_p[x]/(m)` with a primitive element and a log table.
#[derive(Clone, Debug)]
pub struct ExtField {
    pub p: u32,
    pub d: usize,
    pub modulus: FpPoly,
    /// `p^d − 1`.
    pub order: u64,
    log: HashMap<FpPoly, u64>,
    exp: Vec<FpPoly>,
}

impl ExtField {
    pub fn new(p: u32, d: usize) -> Self {
        let order = (p as u64).pow(d as u32) - 1;
        for modulus in monic_polys(d, p) {
            if !is_irreducible(&modulus, p) {
                continue;
            }
            for idx in 1..=order {
                let mut i = idx;
                let g = trim(
                    (0..d)
                        .map(|_| {
                            let c = (i % p as u64) as u32;
                            i /= p as u64;
                            c
                        })
                        .collect(),
                );
                let mut exp = Vec::with_capacity(order as usize);
                let mut x: FpPoly = vec![1];
                let mut ok = true;
                for i in 0..order {
                    if i > 0 && x == vec![1] {
                        ok = false;
                        break;
                    }
                    exp.push(x.clone());
                    x = poly_divmod(&poly_mul(&x, &g, p), &modulus, p).1;
                }
                if ok && x == vec![1] {
                    let log = exp.iter().enumerate().map(|(i, e)| (e.clone(), i as u64)).collect();
                    return ExtField {
                        p,
                        d,
                        modulus,
                        order,
                        log,
                        exp,
                    };
                }
            }
        }
        unreachable!("finite fields have primitive elements")
    }

    pub fn log(&self, x: &[u32]) -> Option<u64> {
        self.log.get(&trim(x.to_vec())).copied()
    }

    pub fn exp(&self, e: u64) -> &FpPoly {
        &self.exp[(e % self.order) as usize]
    }

    /// Logs of the distinct roots of `f` in this field, increasing.
    pub fn root_logs(&self, f: &[u32]) -> Vec<u64> {
        let mut out = Vec::new();
        for (i, x) in self.exp.iter().enumerate() {
            // Horner evaluation of f at x inside the extension.
            let mut acc: FpPoly = Vec::new();
            for &c in f.iter().rev() {
                acc = poly_mul(&acc, x, self.p);
                let mut a = acc.clone();
                if a.is_empty() {
                    a.push(0);
                }
                a[0] = (a[0] + c) % self.p;
                acc = poly_divmod(&trim(a), &self.modulus, self.p).1;
            }
            if acc.is_empty() {
                out.push(i as u64);
            }
        }
        out
    }

    /// Log of the embedded prime-field element `a ≠ 0`.
    pub fn log_base(&self, a: u32) -> u64 {
        self.log(&[a % self.p]).expect("nonzero element")
    }
}
