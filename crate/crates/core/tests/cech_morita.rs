use std::sync::Arc;

use gf::cech::*;
use gf::gpd::*;
use gf::morita::*;

#[test]
fn evaluation_is_a_subductive_weak_equivalence() {
    for c in subset_covers(3, 2) {
        let n = nebulaic_groupoid(&c).unwrap();
        assert!(check_subductive_weak_equivalence(&n.ev));
    }
}

#[test]
fn nebulae_of_different_covers_are_morita_equivalent() {
    let xs = ["a", "b"];
    let one = nebulaic_groupoid(&Cover::from_subsets(&xs, &[vec![0, 1]]).unwrap()).unwrap();
    let two = nebulaic_groupoid(&Cover::from_subsets(&xs, &[vec![0, 1], vec![1]]).unwrap()).unwrap();
    assert_eq!((two.groupoid.n_objects(), two.groupoid.n_arrows()), (3, 5));
    let w = are_morita_equivalent(&one.groupoid, &two.groupoid).unwrap();
    assert!(w.is_equivalent(), "{w}");
}

#[test]
fn disjoint_charts_give_a_disjoint_relation_groupoid() {
    let c = Cover::from_subsets(&["a", "b", "c"], &[vec![0], vec![1, 2]]).unwrap();
    let n = nebulaic_groupoid(&c).unwrap();
    assert_eq!((n.groupoid.n_objects(), n.groupoid.n_arrows()), (3, 3));
    assert_eq!(n.groupoid.components().len(), 3);
}

#[test]
fn one_chart_cocycles_are_trivial() {
    // a bijective chart: every arrow is a unit, so only the trivial cocycle survives
    let c = Cover::from_subsets(&["a", "b", "c"], &[vec![0, 1, 2]]).unwrap();
    let g = FiniteGroup::cyclic(2);
    let cat = cocycle_category(&c, &g).unwrap();
    assert_eq!(cat.objects.len(), 1);
    assert_eq!(cat.hom(&cat.objects[0], &cat.objects[0]).len(), 2usize.pow(3));
}

#[test]
fn point_and_pair_bases() {
    let c2 = FiniteGroup::cyclic(2);
    for (xs, autos) in [(vec!["a"], 2), (vec!["a", "b"], 4)] {
        let subsets: Vec<Vec<usize>> = vec![(0..xs.len()).collect()];
        let r = cech_equivalence_check(&Cover::from_subsets(&xs, &subsets).unwrap(), &c2).unwrap();
        assert!(r.verified());
        assert_eq!((r.cocycle_classes, r.bundle_classes), (1, 1));
        assert_eq!((r.cocycle_automorphisms, r.bundle_automorphisms), (autos, autos));
    }
    let t = cocycle_category(&Cover::from_subsets(&["a"], &[vec![0]]).unwrap(), &FiniteGroup::trivial()).unwrap();
    assert_eq!(t.objects.len(), 1);
    assert_eq!(t.hom(&t.objects[0], &t.objects[0]).len(), 1);
}

#[test]
fn pair2_is_morita_trivial() {
    let p = Arc::new(pair(2));
    let w = are_morita_equivalent(&p, &Arc::new(point())).unwrap();
    assert!(w.is_equivalent());
    assert_eq!(invariants(&p).kernel_arrows, 2);
}
