use charvar::exact::{rat, Rational, RationalFunction, SparsePoly};
use charvar::macdonald::{
    centralizer_order, genus_hook, green_polynomial, kostka_foulkes, qt_kostka_column, unipotent_weight,
};
use charvar::partitions::Partition;
use charvar::symfunc::chi;
use num_traits::Signed;

fn swap_qt(p: &SparsePoly) -> SparsePoly {
    p.rename(&[("q", "t"), ("t", "q")])
}

#[test]
fn transpose_symmetry_up_to_five() {
    for n in 1..=5 {
        for mu in Partition::all(n) {
            let a = qt_kostka_column(&mu);
            let b = qt_kostka_column(&mu.dual());
            for (l, c) in &a {
                assert_eq!(*c, swap_qt(&b[l]), "λ={l} μ={mu}");
            }
        }
    }
}

#[test]
fn extreme_coefficients_and_positivity() {
    for n in 1..=5 {
        for mu in Partition::all(n) {
            let col = qt_kostka_column(&mu);
            assert!(col[&Partition::row(n)].is_one());
            let expect = SparsePoly::monomial(rat(1), &[("q", mu.dual().n() as u32), ("t", mu.n() as u32)]);
            assert_eq!(col[&Partition::column(n)], expect, "μ={mu}");
            for c in col.values() {
                assert!(c.terms().iter().all(|(x, _)| x.is_positive() && x.is_integer()));
            }
        }
    }
}

#[test]
fn total_fillings_at_one() {
    // Σ_λ K̃_{λμ}(1,1) f^λ counts all bijective fillings.
    for n in 1..=5 {
        let fact: i64 = (1..=n as i64).product();
        let ones = Partition::column(n);
        for mu in Partition::all(n) {
            let col = qt_kostka_column(&mu);
            let total: Rational = col
                .iter()
                .map(|(l, c)| c.eval(&[("q", rat(1)), ("t", rat(1))]).unwrap() * rat(chi(l, &ones)))
                .sum();
            assert_eq!(total, rat(fact));
        }
    }
}

#[test]
fn kostka_foulkes_vanishes_outside_dominance() {
    for n in 1..=6 {
        for l in Partition::all(n) {
            for m in Partition::all(n) {
                let k = kostka_foulkes(&l, &m).unwrap();
                assert_eq!(k.is_zero(), !m.dominated_by(&l), "λ={l} μ={m}");
            }
        }
    }
}

fn q() -> RationalFunction {
    RationalFunction::var("q")
}

/// `y_ρ(q) = q^{−|ρ|} z_ρ Π (1 − q^{−ρᵢ})^{−1}`
fn y_rho(rho: &Partition) -> RationalFunction {
    let mut acc = RationalFunction::constant(Rational::from_integer(rho.z()));
    acc = acc.mul_rf(&q().pow(-(rho.size() as i64)).unwrap());
    for &r in rho.parts() {
        let f = RationalFunction::one().sub_rf(&q().pow(-(r as i64)).unwrap());
        acc = acc.div_rf(&f).unwrap();
    }
    acc
}

#[test]
fn green_orthogonality() {
    for n in 1..=4 {
        let parts = Partition::all(n);
        for a in &parts {
            for b in &parts {
                let s: RationalFunction = parts
                    .iter()
                    .map(|l| {
                        let qa = RationalFunction::from_poly(green_polynomial(l, a).unwrap());
                        let qb = RationalFunction::from_poly(green_polynomial(l, b).unwrap());
                        unipotent_weight(l).mul_rf(&qa).mul_rf(&qb)
                    })
                    .sum();
                let expect = if a == b { y_rho(a) } else { RationalFunction::zero() };
                assert_eq!(s, expect, "ρ={a} σ={b}");
            }
        }
    }
}

#[test]
fn unipotent_elements_count() {
    for n in 1..=4u32 {
        for qv in [2i64, 3, 5] {
            let point = [("q", rat(qv))];
            let gl: Rational = (0..n).map(|i| rat(qv.pow(n) - qv.pow(i))).product();
            let total: Rational = Partition::all(n)
                .iter()
                .map(|l| &gl / centralizer_order(l).eval(&point).unwrap())
                .sum();
            assert_eq!(total, rat(qv.pow(n * (n - 1))));
        }
    }
}

#[test]
fn genus_hook_transpose() {
    for n in 1..=5 {
        for l in Partition::all(n) {
            for g in 0..=1 {
                let a = genus_hook(&l, g).unwrap();
                let b = genus_hook(&l.dual(), g).unwrap();
                let swapped = b
                    .substitute(&[("z", RationalFunction::var("w")), ("w", RationalFunction::var("z"))])
                    .unwrap();
                assert_eq!(a, swapped, "λ={l} g={g}");
            }
        }
    }
}
