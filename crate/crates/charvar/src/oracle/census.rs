//! Enumeration of `GL_n(F_p)` for `n ≤ 3` with conjugacy classes labelled by
//! their elementary divisors.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;

use super::field::{inv_mod, monic_irreducibles, poly_divmod, FpPoly};
use super::OracleError;
use crate::partitions::{Partition, TypeT};

/// Square matrix over `F_p`, row-major, `n ≤ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: usize,
    pub e: [u32; 9],
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut e = [0; 9];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Mat { n, e }
    }

    pub fn scalar(n: usize, a: u32) -> Self {
        let mut m = Self::identity(n);
        for i in 0..n {
            m.e[i * n + i] = a;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.e[i * self.n + j]
    }

    pub fn mul(&self, o: &Mat, p: u32) -> Mat {
        let n = self.n;
        let mut e = [0u32; 9];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u32;
                for k in 0..n {
                    s += self.e[i * n + k] * o.e[k * n + j];
                }
                e[i * n + j] = s % p;
            }
        }
        Mat { n, e }
    }

    pub fn add(&self, o: &Mat, p: u32) -> Mat {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(&o.e) {
            *a = (*a + b) % p;
        }
        Mat { n: self.n, e }
    }

    pub fn scale(&self, c: u32, p: u32) -> Mat {
        let mut e = self.e;
        for a in e.iter_mut() {
            *a = *a * c % p;
        }
        Mat { n: self.n, e }
    }

    pub fn det(&self, p: u32) -> u32 {
        let g = |i, j| self.get(i, j) as i64;
        let d = match self.n {
            1 => g(0, 0),
            2 => g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0),
            3 => {
                g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
                    + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
            }
            _ => unreachable!("n ≤ 3"),
        };
        d.rem_euclid(p as i64) as u32
    }

    fn trace(&self, p: u32) -> u32 {
        (0..self.n).map(|i| self.get(i, i)).sum::<u32>() % p
    }

    /// Monic characteristic polynomial, constant term first.
    pub fn charpoly(&self, p: u32) -> FpPoly {
        let neg = |x: u32| (p - x % p) % p;
        match self.n {
            1 => vec![neg(self.e[0]), 1],
            2 => vec![self.det(p), neg(self.trace(p)), 1],
            3 => {
                let g = |i, j| self.get(i, j) as i64;
                let minors = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0))
                    + (g(0, 0) * g(2, 2) - g(0, 2) * g(2, 0))
                    + (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1));
                vec![
                    neg(self.det(p)),
                    minors.rem_euclid(p as i64) as u32,
                    neg(self.trace(p)),
                    1,
                ]
            }
            _ => unreachable!("n ≤ 3"),
        }
    }

    pub fn eval_poly(&self, f: &[u32], p: u32) -> Mat {
        let mut acc = Mat { n: self.n, e: [0; 9] };
        for &c in f.iter().rev() {
            acc = acc.mul(self, p).add(&Mat::scalar(self.n, c), p);
        }
        acc
    }

    pub fn rank(&self, p: u32) -> usize {
        let n = self.n;
        let mut m = self.e;
        let mut rank = 0;
        for col in 0..n {
            let Some(r) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                continue;
            };
            for j in 0..n {
                m.swap(r * n + j, rank * n + j);
            }
            let inv = inv_mod(m[rank * n + col], p);
            for r2 in 0..n {
                if r2 != rank && m[r2 * n + col] != 0 {
                    let f = m[r2 * n + col] * inv % p;
                    for j in 0..n {
                        m[r2 * n + j] = (m[r2 * n + j] + p * p - f * m[rank * n + j] % p) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Inverse by Gauss–Jordan; `None` when singular.
    pub fn inverse(&self, p: u32) -> Option<Mat> {
        let n = self.n;
        let mut a = self.e;
        let mut b = Mat::identity(n).e;
        for col in 0..n {
            let r = (col..n).find(|&r| a[r * n + col] != 0)?;
            for j in 0..n {
                a.swap(r * n + j, col * n + j);
                b.swap(r * n + j, col * n + j);
            }
            let inv = inv_mod(a[col * n + col], p);
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * inv % p;
                b[col * n + j] = b[col * n + j] * inv % p;
            }
            for r2 in 0..n {
                let f = a[r2 * n + col];
                if r2 != col && f != 0 {
                    for j in 0..n {
                        a[r2 * n + j] = (a[r2 * n + j] + p * p - f * a[col * n + j] % p) % p;
                        b[r2 * n + j] = (b[r2 * n + j] + p * p - f * b[col * n + j] % p) % p;
                    }
                }
            }
        }
        Some(Mat { n, e: b })
    }

    fn encode(&self, p: u32) -> usize {
        self.e[..self.n * self.n]
            .iter()
            .rev()
            .fold(0usize, |acc, &x| acc * p as usize + x as usize)
    }

    fn decode(mut idx: usize, n: usize, p: u32) -> Mat {
        let mut e = [0u32; 9];
        for x in e.iter_mut().take(n * n) {
            *x = (idx % p as usize) as u32;
            idx /= p as usize;
        }
        Mat { n, e }
    }
}

/// Elementary divisor data: each monic irreducible factor of the
/// characteristic polynomial with its Jordan partition, sorted.
pub type ClassKey = Vec<(FpPoly, Partition)>;

/// Type of a class with the given elementary divisors.
pub fn key_type(key: &ClassKey) -> TypeT {
    TypeT::new(key.iter().map(|(f, l)| ((f.len() - 1) as u32, l.clone())).collect())
}

pub fn class_key(a: &Mat, p: u32) -> ClassKey {
    let n = a.n;
    let mut chi = a.charpoly(p);
    let mut key = Vec::new();
    for d in 1..=n {
        for f in monic_irreducibles(d, p) {
            let mut m = 0;
            loop {
                let (q, r) = poly_divmod(&chi, &f, p);
                if !r.is_empty() {
                    break;
                }
                chi = q;
                m += 1;
            }
            if m == 0 {
                continue;
            }
            // c_j = number of Jordan blocks of size ≥ j
            let fa = a.eval_poly(&f, p);
            let mut power = Mat::identity(n);
            let mut prev_ker = 0;
            let mut c = Vec::new();
            for _ in 0..m {
                power = power.mul(&fa, p);
                let ker = n - power.rank(p);
                let blocks = ((ker - prev_ker) / d) as u32;
                if blocks == 0 {
                    break;
                }
                c.push(blocks);
                prev_ker = ker;
            }
            key.push((f, Partition::new(c).dual()));
        }
    }
    key.sort();
    key
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub rep: Mat,
    pub size: u64,
    pub key: ClassKey,
    pub ty: TypeT,
}

/// `|GL_n(F_q)| = Π_{i<n} (qⁿ − qⁱ)`.
pub fn gl_order(n: usize, q: u64) -> u64 {
    (0..n as u32).map(|i| q.pow(n as u32) - q.pow(i)).product()
}

/// All elements of `GL_n(F_q)` with their classes.
#[derive(Clone, Debug)]
pub struct GroupCensus {
    pub n: usize,
    pub q: u32,
    pub order: u64,
    pub elements: Vec<Mat>,
    /// Class id of `elements[i]`.
    pub element_class: Vec<u32>,
    pub classes: Vec<ClassInfo>,
    pub identity_class: usize,
    /// Class of the inverses of class `c`.
    pub inverse_class: Vec<usize>,
    index: Vec<u32>,
    structure: OnceLock<Vec<Vec<u32>>>,
}

/// Default cap on `|GL_n(F_q)|`.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

impl GroupCensus {
    pub fn build(n: usize, q: u64, budget: u64) -> Result<Self, OracleError> {
        if !(1..=3).contains(&n) {
            return Err(OracleError::Rank(n));
        }
        if !super::field::is_prime(q) {
            return Err(OracleError::Field(super::field::FieldError::NotPrime(q)));
        }
        let order = gl_order(n, q);
        if order > budget {
            return Err(OracleError::Budget { size: order, budget });
        }
        let p = q as u32;
        let total = (q as usize).pow((n * n) as u32);
        let elements: Vec<Mat> = (0..total)
            .map(|i| Mat::decode(i, n, p))
            .filter(|m| m.det(p) != 0)
            .collect();
        let keys: Vec<ClassKey> = elements.par_iter().map(|m| class_key(m, p)).collect();
        let distinct: Vec<ClassKey> = keys.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let id: HashMap<&ClassKey, u32> = distinct.iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
        let element_class: Vec<u32> = keys.iter().map(|k| id[k]).collect();
        let mut classes: Vec<ClassInfo> = distinct
            .iter()
            .map(|k| ClassInfo {
                rep: Mat::identity(n),
                size: 0,
                key: k.clone(),
                ty: key_type(k),
            })
            .collect();
        let mut seen = vec![false; classes.len()];
        for (m, &c) in elements.iter().zip(&element_class) {
            let info = &mut classes[c as usize];
            info.size += 1;
            if !seen[c as usize] {
                seen[c as usize] = true;
                info.rep = *m;
            }
        }
        let mut index = vec![u32::MAX; total];
        for (i, m) in elements.iter().enumerate() {
            index[m.encode(p)] = i as u32;
        }
        let mut census = GroupCensus {
            n,
            q: p,
            order,
            elements,
            element_class,
            classes,
            identity_class: 0,
            inverse_class: Vec::new(),
            index,
            structure: OnceLock::new(),
        };
        census.identity_class = census.class_of(&Mat::identity(n));
        census.inverse_class = census
            .classes
            .iter()
            .map(|c| census.class_of(&c.rep.inverse(p).expect("invertible")))
            .collect();
        Ok(census)
    }

    pub fn class_of(&self, m: &Mat) -> usize {
        let i = self.index[m.encode(self.q)];
        assert_ne!(i, u32::MAX, "singular matrix");
        self.element_class[i as usize] as usize
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// For each class `z`, the counts `#{u ∈ C_b : zu ∈ C_a}` at index
    /// `a · #classes + b`, with `z` the class representative.
    pub fn structure_counts(&self) -> &[Vec<u32>] {
        self.structure.get_or_init(|| {
            let nc = self.num_classes();
            self.classes
                .par_iter()
                .map(|c| {
                    let mut m = vec![0u32; nc * nc];
                    for (u, &b) in self.elements.iter().zip(&self.element_class) {
                        let a = self.class_of(&c.rep.mul(u, self.q));
                        m[a * nc + b as usize] += 1;
                    }
                    m
                })
                .collect()
        })
    }
}
