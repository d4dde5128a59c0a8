//! Character table of `GL₂(F_q)` from its four families, with values in
//! `Q(ζ)` for `ζ` a primitive `(q²−1)`-th root of unity.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::census::GroupCensus;
use super::classfn::ClassFunction;
use super::field::ExtField;
use super::OracleError;
use crate::arith::divisors;
use crate::exact::{rat, Rational};

/// `Φ_m` with integer coefficients, constant term first.
fn cyclotomic_poly(m: usize) -> Vec<i64> {
    let mut f = vec![0i64; m + 1];
    f[0] = -1;
    f[m] = 1;
    for d in divisors(m as u64).into_iter().map(|d| d as usize).filter(|&d| d < m) {
        let g = cyclotomic_poly(d);
        // exact division by the monic g
        let mut quot = vec![0i64; f.len() - g.len() + 1];
        for i in (0..quot.len()).rev() {
            let c = f[i + g.len() - 1];
            quot[i] = c;
            for (j, gj) in g.iter().enumerate() {
                f[i + j] -= c * gj;
            }
        }
        f = quot;
    }
    f
}

/// Element of `Q(ζ_m)` in the power basis `1, ζ, …, ζ^{φ(m)−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cyclotomic {
    m: usize,
    phi: Arc<Vec<i64>>,
    c: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero_in(m: usize) -> Self {
        let phi = Arc::new(cyclotomic_poly(m));
        let deg = phi.len() - 1;
        Cyclotomic {
            m,
            phi,
            c: vec![Rational::zero(); deg],
        }
    }

    fn like(&self, c: Vec<Rational>) -> Self {
        Cyclotomic {
            m: self.m,
            phi: self.phi.clone(),
            c,
        }
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Self {
        let deg = self.phi.len() - 1;
        for i in (deg..v.len()).rev() {
            let c = std::mem::take(&mut v[i]);
            if c.is_zero() {
                continue;
            }
            for (j, pj) in self.phi.iter().enumerate().take(deg) {
                v[i - deg + j] -= &c * rat(*pj);
            }
        }
        v.resize(deg, Rational::zero());
        self.like(v)
    }

    /// `ζ^e`.
    pub fn root(&self, e: i64) -> Self {
        let e = e.rem_euclid(self.m as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        self.reduce(v)
    }

    pub fn zero(&self) -> Self {
        self.like(vec![Rational::zero(); self.c.len()])
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.like(self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.like(self.c.iter().map(|a| a * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut v = vec![Rational::zero(); 2 * self.c.len()];
        for (i, a) in self.c.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in o.c.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        self.reduce(v)
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let mut v = vec![Rational::zero(); self.m];
        for (i, a) in self.c.iter().enumerate() {
            v[(self.m - i) % self.m] += a;
        }
        self.reduce(v)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.c[1..].iter().all(|x| x.is_zero()).then(|| self.c[0].clone())
    }
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    Central(i64),
    Jordan(i64),
    Split(i64, i64),
    Elliptic(i64),
}

/// Irreducible characters of `GL₂(F_q)` on the classes of a census.
#[derive(Clone, Debug)]
pub struct Gl2Characters {
    pub labels: Vec<String>,
    pub degrees: Vec<u64>,
    /// `values[χ][class]`.
    pub values: Vec<Vec<Cyclotomic>>,
}

impl Gl2Characters {
    pub fn build(census: &GroupCensus) -> Result<Self, OracleError> {
        if census.n != 2 {
            return Err(OracleError::NoCharacterTable);
        }
        let q = census.q as i64;
        let p = census.q;
        let field = ExtField::new(p, 2);
        let m = (q * q - 1) as usize;
        let zero = Cyclotomic::zero_in(m);
        let lin = |f: &[u32]| field.log_base((p - f[0]) % p) as i64;
        let kinds: Vec<Kind> = census
            .classes
            .iter()
            .map(|c| match c.key.as_slice() {
                [(f, l)] if f.len() == 2 && l.len() == 2 => Kind::Central(lin(f)),
                [(f, _)] if f.len() == 2 => Kind::Jordan(lin(f)),
                [(f, _)] => Kind::Elliptic(field.root_logs(f)[0] as i64),
                [(f, _), (g, _)] => Kind::Split(lin(f), lin(g)),
                _ => unreachable!("GL₂ classes have at most two factors"),
            })
            .collect();
        let z = |e: i64| zero.root(e);
        let qr = |x: i64| rat(x);
        let mut out = Gl2Characters {
            labels: Vec::new(),
            degrees: Vec::new(),
            values: Vec::new(),
        };
        let mut push = |label: String, deg: u64, value: &dyn Fn(Kind) -> Cyclotomic| {
            out.labels.push(label);
            out.degrees.push(deg);
            out.values.push(kinds.iter().map(|&k| value(k)).collect());
        };
        for i in 0..q - 1 {
            push(format!("U{i}"), 1, &|k| match k {
                Kind::Central(l) | Kind::Jordan(l) => z(2 * i * l),
                Kind::Split(a, b) => z(i * (a + b)),
                Kind::Elliptic(l) => z(i * l * (q + 1)),
            });
            push(format!("V{i}"), q as u64, &|k| match k {
                Kind::Central(l) => z(2 * i * l).scale(&qr(q)),
                Kind::Jordan(_) => zero.clone(),
                Kind::Split(a, b) => z(i * (a + b)),
                Kind::Elliptic(l) => z(i * l * (q + 1)).scale(&qr(-1)),
            });
        }
        for i in 0..q - 1 {
            for k2 in i + 1..q - 1 {
                push(format!("W{i},{k2}"), (q + 1) as u64, &|k| match k {
                    Kind::Central(l) => z((i + k2) * l).scale(&qr(q + 1)),
                    Kind::Jordan(l) => z((i + k2) * l),
                    Kind::Split(a, b) => z(i * a + k2 * b).add(&z(i * b + k2 * a)),
                    Kind::Elliptic(_) => zero.clone(),
                });
            }
        }
        let mm = m as i64;
        for j in 0..mm {
            let jq = (j * q) % mm;
            if jq <= j {
                continue;
            }
            push(format!("X{j}"), (q - 1) as u64, &|k| match k {
                Kind::Central(l) => z(j * l).scale(&qr(q - 1)),
                Kind::Jordan(l) => z(j * l).scale(&qr(-1)),
                Kind::Split(..) => zero.clone(),
                Kind::Elliptic(l) => z(j * l).add(&z(jq * l)).scale(&qr(-1)),
            });
        }
        Ok(out)
    }

    fn rational(x: &Cyclotomic) -> Rational {
        x.to_rational().expect("rational by construction")
    }

    /// `Σ_C |C| χ(C) ψ̄(C) = |G| δ_{χψ}` and
    /// `Σ_χ χ(C) χ̄(C′) = δ_{CC′} |G|/|C|`.
    pub fn orthogonality_holds(&self, census: &GroupCensus) -> bool {
        let order = rat(census.order as i64);
        let nc = census.num_classes();
        if self.values.len() != nc {
            return false;
        }
        let conj: Vec<Vec<Cyclotomic>> = self
            .values
            .iter()
            .map(|r| r.iter().map(Cyclotomic::conj).collect())
            .collect();
        for a in 0..nc {
            for (b, conj_b) in conj.iter().enumerate().skip(a) {
                let s = (0..nc).fold(self.values[0][0].zero(), |acc, c| {
                    acc.add(
                        &self.values[a][c]
                            .mul(&conj_b[c])
                            .scale(&rat(census.classes[c].size as i64)),
                    )
                });
                let expect = if a == b { order.clone() } else { Rational::zero() };
                if s.to_rational() != Some(expect) {
                    return false;
                }
                let s = (0..nc).fold(self.values[0][0].zero(), |acc, x| {
                    acc.add(&self.values[x][a].mul(&conj[x][b]))
                });
                let expect = if a == b {
                    &order / rat(census.classes[a].size as i64)
                } else {
                    Rational::zero()
                };
                if s.to_rational() != Some(expect) {
                    return false;
                }
            }
        }
        true
    }

    /// `𝓔_g(z) = |G|^{2g−1} Σ_χ χ(z)/χ(1)^{2g−1}`.
    pub fn commutator_distribution(&self, census: &GroupCensus, g: u32) -> ClassFunction {
        let order = rat(census.order as i64);
        let e = 2 * g as i32 - 1;
        let values = (0..census.num_classes())
            .map(|c| {
                let s = self
                    .values
                    .iter()
                    .zip(&self.degrees)
                    .fold(self.values[0][0].zero(), |acc, (row, &d)| {
                        acc.add(&row[c].scale(&rat(d as i64).pow(-e)))
                    });
                Self::rational(&s) * order.pow(e)
            })
            .collect();
        ClassFunction { values }
    }

    /// `Σ_χ (|G|/χ(1))^{2g−2} Πᵢ (Σ_C |C| Xᵢ(C) χ(C)/χ(1))`.
    pub fn frobenius_count(&self, census: &GroupCensus, g: u32, closures: &[ClassFunction]) -> Rational {
        let order = rat(census.order as i64);
        let total = self
            .values
            .iter()
            .zip(&self.degrees)
            .fold(self.values[0][0].zero(), |acc, (row, &d)| {
                let d = rat(d as i64);
                let mut term = row[0]
                    .zero()
                    .add(&row[0].root(0))
                    .scale(&(&order / &d).pow(2 * g as i32 - 2));
                for x in closures {
                    let central = census.classes.iter().enumerate().fold(row[0].zero(), |s, (c, info)| {
                        if x.values[c].is_zero() {
                            s
                        } else {
                            s.add(&row[c].scale(&(&x.values[c] * rat(info.size as i64))))
                        }
                    });
                    term = term.mul(&central.scale(&(Rational::one() / &d)));
                }
                acc.add(&term)
            });
        Self::rational(&total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{
        closure_char_function, commutator_distribution, convolution_count, parse_classes, DEFAULT_BUDGET,
    };

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(24), vec![1, 0, 0, 0, -1, 0, 0, 0, 1]);
        let z = Cyclotomic::zero_in(8);
        assert_eq!(z.root(3).mul(&z.root(5)).to_rational(), Some(rat(1)));
        assert_eq!(z.root(4).to_rational(), Some(rat(-1)));
        assert_eq!(z.root(3).conj(), z.root(5));
    }

    #[test]
    fn table_shape_and_orthogonality() {
        for q in [3, 5] {
            let c = GroupCensus::build(2, q, DEFAULT_BUDGET).unwrap();
            let t = Gl2Characters::build(&c).unwrap();
            assert_eq!(t.values.len(), c.num_classes());
            let sq: u64 = t.degrees.iter().map(|d| d * d).sum();
            assert_eq!(sq, c.order);
            assert!(t.orthogonality_holds(&c));
        }
    }

    #[test]
    fn commutator_and_frobenius() {
        for q in [3, 5] {
            let c = GroupCensus::build(2, q, DEFAULT_BUDGET).unwrap();
            let t = Gl2Characters::build(&c).unwrap();
            for g in 0..=2 {
                assert_eq!(
                    t.commutator_distribution(&c, g),
                    commutator_distribution(&c, g),
                    "q={q} g={g}"
                );
            }
            let cl = parse_classes("[1]@1[1]@2;[2]@1;[1,1]@2;(2,[1])@(2,1)", q).unwrap();
            let xs: Vec<ClassFunction> = cl.iter().map(|d| closure_char_function(d, &c).unwrap()).collect();
            for g in 0..=1 {
                assert_eq!(t.frobenius_count(&c, g, &xs), convolution_count(&c, g, &xs));
            }
        }
    }
}
