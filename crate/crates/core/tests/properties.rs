use std::sync::Arc;

use proptest::prelude::*;

use gf::bibundle::*;
use gf::fuzz::{Bounds, Fuzzer};
use gf::gpd::*;
use gf::laws::{run_case, weq_oracle, Suite};
use gf::morita::*;

fn relation(classes: &[usize]) -> Arc<FiniteGroupoid> {
    let xs: Vec<String> = (0..classes.len()).map(|i| format!("x{i}")).collect();
    Arc::new(relation_groupoid(&xs, classes).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fuzzed_groupoids_satisfy_the_axioms(seed: u64) {
        let g = Fuzzer::new(seed).groupoid(Bounds::new(4, 24));
        prop_assert!(g.check_axioms().is_ok());
        prop_assert_eq!(&validate_groupoid(&g.to_data()).unwrap(), g.as_ref());
    }

    #[test]
    fn relation_groupoid_counts(classes in prop::collection::vec(0usize..3, 1..7)) {
        let g = relation(&classes);
        let arrows: usize = (0..3).map(|c| classes.iter().filter(|&&k| k == c).count().pow(2)).sum();
        prop_assert_eq!(g.n_arrows(), arrows);
        let mut distinct = classes.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(orbit_space(&g).len(), distinct.len());
        prop_assert_eq!(g.components().len(), distinct.len());
        // χ is onto Pair(X) exactly when the relation is total
        prop_assert_eq!(is_fibrating(&g), distinct.len() == 1);
    }

    #[test]
    fn weak_equivalence_matches_oracle(seed: u64) {
        let mut f = Fuzzer::new(seed);
        let g = f.groupoid(Bounds::new(3, 12));
        let h = f.groupoid(Bounds::new(3, 12));
        if let Some(phi) = f.functor(&g, &h) {
            prop_assert_eq!(is_weak_equivalence(&phi), weq_oracle(&phi));
        }
    }

    #[test]
    fn pullback_projections_commute(seed: u64) {
        let mut f = Fuzzer::new(seed);
        let k = f.groupoid(Bounds::new(2, 8));
        let g = f.groupoid(Bounds::new(2, 8));
        let h = f.groupoid(Bounds::new(2, 8));
        if let (Some(phi), Some(psi)) = (f.functor(&g, &k), f.functor(&h, &k)) {
            let sp = strict_pullback(&phi, &psi).unwrap();
            prop_assert_eq!(phi.after(&sp.pr1), psi.after(&sp.pr2));
            let expected: usize = g.objects().map(|x| h.objects().filter(|&y| phi.obj(x) == psi.obj(y)).count()).sum();
            prop_assert_eq!(sp.groupoid.n_objects(), expected);

            let wp = weak_pullback(&phi, &psi).unwrap();
            prop_assert!(wp.pr2.check().is_ok());
            let j = strict_into_weak(&sp, &wp).unwrap();
            prop_assert_eq!(wp.pr1.after(&j), sp.pr1.clone());
        }
    }

    #[test]
    fn inertia_has_one_object_per_loop(seed: u64) {
        let g = Fuzzer::new(seed).groupoid(Bounds::new(3, 16));
        let loops: usize = g.objects().map(|x| g.automorphisms(x).len()).sum();
        prop_assert_eq!(inertia_groupoid(&g).n_objects(), loops);
    }

    #[test]
    fn opposite_swaps_principality(seed: u64) {
        let mut f = Fuzzer::new(seed);
        let g = f.groupoid(Bounds::new(2, 8));
        let h = f.groupoid(Bounds::new(2, 8));
        if let Some(b) = f.right_principal_bibundle(&g, &h, 64) {
            let op = opposite(&b);
            let (p, q) = (check_principality(&b).flags, check_principality(&op).flags);
            prop_assert_eq!((p.left_principal, p.right_principal), (q.right_principal, q.left_principal));
            prop_assert_eq!(opposite(&op), b);
        }
    }

    #[test]
    fn biprincipal_bibundles_are_morita_witnesses(seed: u64) {
        let b = Fuzzer::new(seed).biprincipal_bibundle(Bounds::new(3, 12), 64);
        let w = are_morita_equivalent(b.source(), b.target()).unwrap();
        prop_assert!(w.is_equivalent());
        let q = quasi_inverse_bi(&b).unwrap();
        prop_assert!(q.unit.is_bijective() && q.counit.is_bijective());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn every_suite_passes_on_arbitrary_cases(seed: u64, i in 0usize..1000) {
        for s in Suite::ALL {
            prop_assert!(run_case(s, seed, i).is_ok(), "{} failed at seed {seed} case {i}", s.name());
        }
    }
}
