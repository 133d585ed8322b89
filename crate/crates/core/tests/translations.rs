use std::sync::Arc;

use gf::ana::*;
use gf::bibundle::*;
use gf::fractions::*;
use gf::gpd::*;
use gf::GpdError;

fn arc(g: FiniteGroupoid) -> Arc<FiniteGroupoid> {
    Arc::new(g)
}

fn pair2_to_pt() -> Functor {
    Functor::constant(&arc(pair(2)), &arc(point()), Obj(0))
}

fn pt_to_bc2() -> Functor {
    Functor::constant(&arc(point()), &arc(cyclic_groupoid(2)), Obj(0))
}

#[test]
fn identity_bibundle_of_bc2_is_biprincipal() {
    let b = identity_bibundle(&arc(cyclic_groupoid(2)));
    assert_eq!(b.len(), 2);
    assert!(b.is_biprincipal());
    assert_eq!(identity_bibundle(&arc(pair(2))).len(), 4);
}

#[test]
fn bibundlise_pt_to_bc2() {
    // Pt → BC2 is not full, so only the right side is principal
    let b = bibundlise(&pt_to_bc2());
    assert_eq!(b.len(), 2);
    let r = check_principality(&b);
    assert!(r.flags.right_principal && !r.flags.biprincipal());
    assert!(!is_weak_equivalence(&pt_to_bc2()));
    assert!(check_principality(&bibundlise(&pair2_to_pt())).flags.biprincipal());
}

#[test]
fn bibundlise_of_non_weak_equivalence_is_only_right_principal() {
    let pt = arc(point());
    let d2 = arc(discrete(2));
    let incl = Functor::constant(&pt, &d2, Obj(0));
    let b = bibundlise(&incl);
    let f = check_principality(&b).flags;
    assert!(f.right_principal && !f.left_principal);
    let f2 = check_principality(&opposite(&b)).flags;
    assert!(f2.left_principal && !f2.right_principal);
    assert_eq!(opposite(&opposite(&b)), b);
    assert!(matches!(quasi_inverse_bi(&b), Err(GpdError::NotBiprincipal(_))));
}

#[test]
fn spanise_bibundle_matches_bibundlise() {
    for phi in [pair2_to_pt(), pt_to_bc2(), Functor::identity(&arc(cyclic_groupoid(3)))] {
        let iso = spanise_bibundle_iso(&phi).unwrap();
        assert!(iso.is_bijective());
    }
}

#[test]
fn gm_to_bibundle_witness_and_round_trip() {
    let gm = spanise(&pair2_to_pt());
    let gb = gm_to_bibundle(&gm).unwrap();
    assert!(gb.bibundle.is_biprincipal());
    gb.witness.check().unwrap();
    let iso = bibundle_roundtrip_iso(&gb.bibundle).unwrap();
    assert!(iso.is_bijective());
}

#[test]
fn quasi_inverse_gm_pair2() {
    let p2 = arc(pair(2));
    let gm = GeneralizedMorphism::new(Functor::identity(&p2), pair2_to_pt()).unwrap();
    let qi = quasi_inverse_gm(&gm).unwrap();
    assert_eq!(qi.inverse.source().n_objects(), 1);
    let id = identity_2cell(qi.unit.target());
    let _ = id;
    let (composite, _) = compose_gm_detailed(&gm, &qi.inverse).unwrap();
    assert_eq!(composite.apex().n_objects(), 4);
}

#[test]
fn quasi_inverse_gm_rejects_non_invertible_leg() {
    let pt = arc(point());
    let d2 = arc(discrete(2));
    let gm = GeneralizedMorphism::new(Functor::identity(&pt), Functor::constant(&pt, &d2, Obj(0))).unwrap();
    assert!(matches!(quasi_inverse_gm(&gm), Err(GpdError::RightLegNotWeakEquivalence(_))));
}

#[test]
fn quasi_inverse_ana_pair2() {
    let p2 = arc(pair(2));
    let a = Anafunctor::new(Functor::identity(&p2), pair2_to_pt()).unwrap();
    let q = quasi_inverse_ana(&a).unwrap();
    assert_eq!(q.inverse.target().n_objects(), 2);
    let id = Anafunctor::identity(&p2);
    assert!(quasi_inverse_ana(&id).unwrap().inverse == id);
}

#[test]
fn quasi_inverse_ana_canonicalizes_non_subductive_right_leg() {
    let pt = arc(point());
    let p2 = arc(pair(2));
    let a = Anafunctor::new(Functor::identity(&pt), Functor::constant(&pt, &p2, Obj(0))).unwrap();
    let q = quasi_inverse_ana(&a).unwrap();
    assert!(check_subductive_weak_equivalence(q.canonical.right()));
}

#[test]
fn spanisation_and_anafunctisation_agree() {
    for phi in [pair2_to_pt(), pt_to_bc2()] {
        let d = spanise_to_anafunctise(&phi).unwrap();
        let u = canonical_2cell(&d).unwrap();
        u.check().unwrap();
        assert!(two_cells_equal(&d, &d).unwrap());
    }
}

#[test]
fn anafunctise_identity_2cell() {
    let phi = pt_to_bc2();
    assert_eq!(anafunctise(&phi).apex().n_objects(), 2);
    let s = NaturalTransformation::identity(&phi);
    assert_eq!(anafunctise_2cell(&s), identity_transformation(&anafunctise(&phi)));
}

#[test]
fn bibundlise_action_groupoid_is_anafunctisation() {
    for phi in [pair2_to_pt(), pt_to_bc2()] {
        let iso = bibundlise_action_iso(&phi).unwrap();
        assert!(iso.is_isomorphism());
    }
}

#[test]
fn coherence_small_chain() {
    let bc2 = arc(cyclic_groupoid(2));
    let t = bc2.arr_by_label("t").unwrap();
    let _ = t;
    let id = Functor::identity(&bc2);
    assert!(anafunctisation_coherence(&pt_to_bc2(), &id, &id).unwrap());
    let pt = arc(point());
    let idp = Functor::identity(&pt);
    assert!(anafunctisation_coherence(&idp, &idp, &idp).unwrap());
}

#[test]
fn distinct_transformations_are_distinct_cells() {
    let pt = arc(point());
    let bc2 = arc(cyclic_groupoid(2));
    let phi = Functor::constant(&pt, &bc2, Obj(0));
    let t = bc2.arr_by_label("t").unwrap();
    let s_id = NaturalTransformation::identity(&phi);
    let s_t = NaturalTransformation::new(phi.clone(), phi.clone(), vec![t]).unwrap();
    let c1 = spanise_2cell(&s_id);
    let c2 = spanise_2cell(&s_t);
    assert!(!two_cells_equal(&c1, &c2).unwrap());
    assert!(two_cells_equal(&c1, &identity_2cell(c1.source())).unwrap());
}

#[test]
fn vcomp_with_inverse_is_identity() {
    let pt = arc(point());
    let bc2 = arc(cyclic_groupoid(2));
    let phi = Functor::constant(&pt, &bc2, Obj(0));
    let t = bc2.arr_by_label("t").unwrap();
    let c = spanise_2cell(&NaturalTransformation::new(phi.clone(), phi, vec![t]).unwrap());
    let v = vcomp_gm(&c, &c.inverse()).unwrap();
    assert!(two_cells_equal(&v, &identity_2cell(c.source())).unwrap());
}
