use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use charvar::exact::{rat, rf_from_json, rf_to_json, RationalFunction, SparsePoly};
use charvar::hfun::{count_via_type_sum_symbolic, h_function, specialize_h, SpecializeMode};
use charvar::oracle::{closure_char_function, convolution_count, find_generic, GroupCensus, DEFAULT_BUDGET};
use charvar::partitions::{MultiType, Partition, TypeT};
use charvar::quiver::{dimension_dc, dimension_unipotent, report};
use charvar::symfunc::{SymFunc, SymSeries};
use num_traits::Zero;
use proptest::prelude::*;

const VARS: [&str; 3] = ["z", "w", "q"];

fn arb_poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        terms.into_iter().fold(SparsePoly::zero(), |acc, (c, a, b, e)| {
            &acc + &SparsePoly::monomial(rat(c), &[(VARS[0], a), (VARS[1], b), (VARS[2], e)])
        })
    })
}

fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(Partition::new)
}

fn arb_partition_of(n: u32) -> impl Strategy<Value = Partition> {
    let all = Partition::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// Degree-`n` symmetric function in one alphabet with coefficients `c·q^e`.
fn arb_symfunc(n: u32) -> impl Strategy<Value = SymFunc> {
    let parts = Partition::all(n);
    prop::collection::vec((-3i64..=3, 0u32..2), parts.len()).prop_map(move |cs| {
        parts.iter().zip(cs).fold(SymFunc::zero(vec![n]), |acc, (l, (c, e))| {
            let coeff = RationalFunction::from_poly(SparsePoly::monomial(rat(c), &[("q", e)]));
            &acc + &SymFunc::power(std::slice::from_ref(l)).scale_rf(&coeff)
        })
    })
}

fn arb_multitype(n_max: u32, k_max: usize) -> impl Strategy<Value = MultiType> {
    (1..=n_max).prop_flat_map(move |n| {
        let types = TypeT::all(n);
        prop::collection::vec(0..types.len(), 1..=k_max)
            .prop_map(move |ix| MultiType::new(ix.iter().map(|&i| types[i].clone()).collect()).unwrap())
    })
}

type CensusCache = Mutex<HashMap<(usize, u64), Arc<GroupCensus>>>;

static CENSUS: LazyLock<CensusCache> = LazyLock::new(Default::default);

fn census(n: usize, q: u64) -> Arc<GroupCensus> {
    CENSUS
        .lock()
        .unwrap()
        .entry((n, q))
        .or_insert_with(|| Arc::new(GroupCensus::build(n, q, DEFAULT_BUDGET).unwrap()))
        .clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, SparsePoly::zero());
    }

    #[test]
    fn division_then_multiplication(f in arb_poly(), g in arb_poly()) {
        prop_assume!(!g.is_zero());
        let ff = RationalFunction::from_poly(f.clone());
        let gg = RationalFunction::from_poly(g);
        prop_assert_eq!(ff.div_rf(&gg).unwrap().mul_rf(&gg), ff);
    }

    #[test]
    fn substitution_composes(f in arb_poly(), s in arb_poly(), t in arb_poly()) {
        // σ: z ↦ s(z,w,q), then τ: w ↦ t(z,w,q)
        let f = RationalFunction::from_poly(f);
        let s = RationalFunction::from_poly(s);
        let t = RationalFunction::from_poly(t);
        let stepwise = f.substitute(&[("z", s.clone())]).unwrap().substitute(&[("w", t.clone())]).unwrap();
        let composed = f.substitute(&[("z", s.substitute(&[("w", t.clone())]).unwrap()), ("w", t)]).unwrap();
        prop_assert_eq!(stepwise, composed);
    }

    #[test]
    fn json_round_trip(f in arb_poly(), g in arb_poly()) {
        prop_assume!(!g.is_zero());
        let r = RationalFunction::new(f, g).unwrap();
        prop_assert_eq!(rf_from_json(&rf_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn partition_statistics(l in arb_partition(5, 4)) {
        prop_assert_eq!(l.dual().dual(), l.clone());
        let cells = l.cells();
        prop_assert_eq!(cells.iter().map(|c| c.leg as u64).sum::<u64>(), l.n());
        prop_assert_eq!(cells.iter().map(|c| c.arm as u64).sum::<u64>(), l.dual().n());
        let binom: u64 = l.parts().iter().map(|&p| (p as u64) * (p as u64 - 1) / 2).sum();
        prop_assert_eq!(l.dual().n(), binom);
        prop_assert_eq!(l.hooks().iter().map(|&h| h as u64).sum::<u64>(), l.size() as u64 + l.n() + l.dual().n());
    }

    #[test]
    fn adams_is_a_ring_homomorphism(
        f in (1u32..=3).prop_flat_map(arb_symfunc),
        g in (1u32..=3).prop_flat_map(arb_symfunc),
        d in 1u32..=3,
    ) {
        prop_assert_eq!((&f * &g).adams(d), &f.adams(d) * &g.adams(d));
    }

    #[test]
    fn hall_is_symmetric_and_bilinear(
        (a, b, c) in (1u32..=4).prop_flat_map(|n| (arb_symfunc(n), arb_symfunc(n), arb_symfunc(n))),
        x in -3i64..=3,
    ) {
        prop_assert_eq!(a.hall(&b), b.hall(&a));
        let lhs = (&a.scale(&rat(x)) + &b).hall(&c);
        prop_assert_eq!(lhs, &a.hall(&c).scale(&rat(x)) + &b.hall(&c));
    }

    #[test]
    fn schur_orthonormal((l, m) in (1u32..=6).prop_flat_map(|n| (arb_partition_of(n), arb_partition_of(n)))) {
        let expect = if l == m { RationalFunction::one() } else { RationalFunction::zero() };
        prop_assert_eq!(SymFunc::schur(&l).hall(&SymFunc::schur(&m)), expect);
    }

    #[test]
    fn y_exchange((u, v) in (1u32..=4).prop_flat_map(|n| (arb_symfunc(n), arb_symfunc(n)))) {
        prop_assert_eq!(u.y_specialize("t").hall(&v), u.hall(&v.y_specialize("t")));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn log_exp_inverse_two_alphabets(
        cs in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 3),
    ) {
        // coefficient of Tⁿ: Σ c · p_λ(x₁) p_μ(x₂) over a few (λ, μ) ⊢ n
        let mut coeffs = vec![SymFunc::zero(vec![0, 0])];
        for (n, row) in (1u32..=3).zip(&cs) {
            let parts = Partition::all(n);
            let mut f = SymFunc::zero(vec![n, n]);
            for (i, c) in row.iter().enumerate() {
                let key = [parts[i % parts.len()].clone(), parts[(i / parts.len()) % parts.len()].clone()];
                f = &f + &SymFunc::power(&key).scale(&rat(*c));
            }
            coeffs.push(f);
        }
        let s = SymSeries::new(2, coeffs).unwrap();
        prop_assert_eq!(s.plethystic_exp().unwrap().plethystic_log().unwrap(), s.clone());
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn h_is_symmetric(om in arb_multitype(3, 3), g in 0u32..=1) {
        let h = h_function(&om, g, om.size()).unwrap();
        prop_assert!(h.is_swap_symmetric(), "{}", h.value);
        prop_assert!(h.is_sign_symmetric(), "{}", h.value);
    }

    #[test]
    fn three_routes_agree(om in arb_multitype(2, 3), g in 0u32..=1, qi in 0usize..3) {
        let q = [2u64, 3, 5][qi];
        let Some(classes) = find_generic(&om, q).unwrap() else { return Ok(()) };
        let census = census(om.size() as usize, q);
        let xs: Vec<_> = classes.iter().map(|c| closure_char_function(c, &census).unwrap()).collect();
        let conv = &convolution_count(&census, g, &xs) * rat(q as i64 - 1);
        let at_q = |f: &RationalFunction| f.eval(&[("q", rat(q as i64))]).unwrap();
        let h = h_function(&om, g, om.size()).unwrap();
        let e = specialize_h(&h, SpecializeMode::EIc).unwrap();
        prop_assert_eq!(&conv, &at_q(&count_via_type_sum_symbolic(&om, g)));
        prop_assert_eq!(&conv, &at_q(&e.value));
        prop_assert_eq!(e.palindromic, Some(true));
        if g == 0 {
            prop_assert_eq!(!conv.is_zero(), report(&om, g).is_root);
        }
    }

    #[test]
    fn unipotent_dimension_formulas(
        mus in (1u32..=6).prop_flat_map(|n| prop::collection::vec(arb_partition_of(n), 1..=4)),
        g in 0u32..=2,
    ) {
        let om = MultiType::new(mus.iter().cloned().map(TypeT::single).collect()).unwrap();
        prop_assert_eq!(dimension_dc(&om, g), dimension_unipotent(&mus, g));
    }
}
