mod common;

use common::{
    check_domination, check_powers, check_semiring, nat_in, nondecreasing_any_base, triple_any_base,
};
use lunar_core::numtheory::{is_prime, nontrivial_factorization, nth_roots};
use lunar_core::search::{find_squares_with_total, SearchSpec};
use lunar_core::{Grid3, GridDocument, LunarNat};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn semiring_laws((a, b, c) in triple_any_base(6)) {
        check_semiring(&a, &b, &c)?;
    }

    #[test]
    fn domination_is_absorption((a, b, c) in triple_any_base(5)) {
        check_domination(&a, &b, &c)?;
    }

    #[test]
    fn nondecreasing_powers(a in nondecreasing_any_base(6), n in 0u32..6) {
        check_powers(&a, n)?;
    }

    #[test]
    fn length_lex_matches_digit_strings((a, b, _) in triple_any_base(6)) {
        let key = |x: &LunarNat| (x.len(), x.digits().iter().rev().copied().collect::<Vec<_>>());
        prop_assert_eq!(a.cmp(&b), key(&a).cmp(&key(&b)));
        prop_assert_eq!(a.compare_length_lex(&b).unwrap(), a.cmp(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn parse_display_round_trip(base in 2u32..=36, digits in prop::collection::vec(0u32..36, 0..12)) {
        let digits: Vec<u32> = digits.into_iter().map(|d| d % base).collect();
        let n = LunarNat::from_digits(base, digits).unwrap();
        prop_assert_eq!(LunarNat::parse(&n.to_string(), base).unwrap(), n);
    }

    #[test]
    fn roots_are_roots(m in (2u32..=10).prop_flat_map(|b| nat_in(b, 4)), k in 1u32..4) {
        let p = m.pow(k);
        let roots = nth_roots(&p, k);
        prop_assert!(roots.contains(&m));
        for r in &roots {
            prop_assert_eq!(&r.pow(k), &p);
        }
    }

    #[test]
    fn factorizations_multiply_back(n in (2u32..=6).prop_flat_map(|b| nat_in(b, 4))) {
        match nontrivial_factorization(&n) {
            Some((a, b)) => {
                prop_assert_eq!(&a * &b, n.clone());
                prop_assert!(!a.is_identity() && !b.is_identity());
                prop_assert!(!is_prime(&n));
            }
            None => prop_assert_eq!(is_prime(&n), !n.is_identity()),
        }
    }

    #[test]
    fn digit_planes_of_magic_grids_are_magic(
        seed in (2u32..=5).prop_flat_map(|b| (Just(b), nat_in(b, 3), 0usize..400))
    ) {
        let (base, total, pick) = seed;
        prop_assume!(!total.is_zero());
        let spec = SearchSpec::new(base).total(total.clone()).emit_limit(400).budget(200_000);
        let report = find_squares_with_total(&spec, 1).unwrap();
        prop_assume!(!report.results.is_empty());
        let g = &report.results[pick % report.results.len()];
        prop_assert_eq!(g.magic_total(), Some(total.clone()));
        for i in 0..=total.len() {
            let plane = g.digit_plane(i);
            let want = LunarNat::single(base, total.digit(i)).unwrap();
            prop_assert_eq!(plane.magic_total(), Some(want));
        }
        let planes = g.decompose();
        let mut sum = Grid3::zero(base).unwrap();
        for p in &planes {
            sum = sum.elementwise_add(p).unwrap();
        }
        prop_assert_eq!(&sum, g);
        for img in g.symmetric_images() {
            prop_assert_eq!(img.magic_total(), Some(total.clone()));
        }
        let doc = GridDocument::from(g);
        let back = GridDocument::from_json(&doc.to_json()).unwrap().to_grid().unwrap();
        prop_assert_eq!(&back, g);
    }

    #[test]
    fn thread_count_does_not_change_reports(
        seed in (2u32..=6).prop_flat_map(|b| (Just(b), nat_in(b, 3))),
        budget in 1u64..50_000,
        emit in 1usize..60,
        distinct in any::<bool>(),
        canonical in any::<bool>(),
    ) {
        let (base, total) = seed;
        prop_assume!(!total.is_zero());
        let spec = SearchSpec::new(base)
            .total(total)
            .budget(budget)
            .emit_limit(emit)
            .distinct(distinct)
            .canonical(canonical);
        let one = find_squares_with_total(&spec, 1).unwrap();
        prop_assert!(one.nodes_explored <= budget);
        prop_assert!(one.results.len() <= emit);
        prop_assert_eq!(find_squares_with_total(&spec, 3).unwrap(), one);
    }
}
