use std::sync::Arc;

use gf::gpd::*;
use gf::GpdError;

fn arc(g: FiniteGroupoid) -> Arc<FiniteGroupoid> {
    Arc::new(g)
}

fn data(text: &str) -> GroupoidData {
    serde_json::from_str(text).unwrap()
}

// brute-force size of the weak pullback, straight from the definition
fn weak_counts(phi: &Functor, psi: &Functor) -> (usize, usize) {
    let (g, h, k) = (phi.dom(), psi.dom(), phi.cod());
    let mut objs = 0;
    for x in g.objects() {
        for y in h.objects() {
            objs += k.arrows().filter(|&c| k.src(c) == phi.obj(x) && k.trg(c) == psi.obj(y)).count();
        }
    }
    let mut arrs = 0;
    for a in g.arrows() {
        for b in h.arrows() {
            arrs += k.arrows().filter(|&c| k.src(c) == phi.obj(g.src(a)) && k.trg(c) == psi.obj(h.src(b))).count();
        }
    }
    (objs, arrs)
}

#[test]
fn validation_accepts_point_and_rejects_missing_unit() {
    let pt = data(r#"{"objects":["*"],"arrows":[{"id":"e","src":"*","trg":"*"}],
        "units":{"*":"e"},"inverse":{"e":"e"},"compose":[["e","e","e"]]}"#);
    let g = validate_groupoid(&pt).unwrap();
    assert_eq!((g.n_objects(), g.n_arrows()), (1, 1));

    let bad = data(r#"{"objects":["*"],"arrows":[{"id":"e","src":"*","trg":"*"}],
        "inverse":{"e":"e"},"compose":[["e","e","e"]]}"#);
    match validate_groupoid(&bad) {
        Err(GpdError::Invalid(vs)) => assert!(vs.iter().any(|v| v.axiom == "unit")),
        other => panic!("expected a unit violation, got {other:?}"),
    }
}

#[test]
fn pair2_round_trips_through_data() {
    let p = pair(2);
    let back = validate_groupoid(&p.to_data()).unwrap();
    assert_eq!(back, p);
    assert!(p.check_axioms().is_ok());
}

#[test]
fn duplicate_and_dangling_ids_are_reported() {
    let d = data(r#"{"objects":["a","a"],"arrows":[{"id":"f","src":"a","trg":"b"}]}"#);
    let Err(GpdError::Invalid(vs)) = validate_groupoid(&d) else { panic!() };
    assert!(vs.len() >= 2);
}

#[test]
fn constructor_sizes() {
    let t = trivial_groupoid(&["a", "b"]).unwrap();
    assert_eq!((t.n_objects(), t.n_arrows()), (2, 2));
    let p = pair_groupoid(&["0", "1", "2"]).unwrap();
    assert_eq!((p.n_objects(), p.n_arrows()), (3, 9));
    assert!(pair_groupoid(&["x", "x"]).is_err());

    // classes {0,1},{2}: 4 + 1 arrows
    let r = relation_groupoid(&["a", "b", "c"], &[0, 0, 1]).unwrap();
    assert_eq!((r.n_objects(), r.n_arrows(), r.components().len()), (3, 5, 2));

    let s3 = group_groupoid(&FiniteGroup::symmetric(3));
    assert_eq!((s3.n_objects(), s3.n_arrows()), (1, 6));

    let u = disjoint_union(&[&pair(2), &cyclic_groupoid(3)]);
    assert_eq!((u.n_objects(), u.n_arrows(), u.components().len()), (3, 7, 2));
}

#[test]
fn swap_action_groupoid_is_connected_with_trivial_stabilizers() {
    // C2 acting on {a, b} by swapping is the pair groupoid in disguise
    use gf::bibundle::{GroupoidAction, Side};
    let c2 = arc(cyclic_groupoid(2));
    let flip = c2.arrows().find(|&a| !c2.is_unit(a)).unwrap();
    let act = GroupoidAction::new(
        c2.clone(),
        Side::Left,
        vec!["a".into(), "b".into()],
        vec![Obj(0), Obj(0)],
        c2.arrows().flat_map(|g| (0..2).map(move |x| ((g, x), if g == flip { 1 - x } else { x }))),
    )
    .unwrap();
    let (ag, _) = act.action_groupoid().unwrap();
    assert_eq!((ag.n_objects(), ag.n_arrows(), ag.components().len()), (2, 4, 1));
    assert!(ag.objects().all(|x| ag.automorphisms(x).len() == 1));
}

#[test]
fn characteristic_functor_examples() {
    let pt = arc(point());
    let chi = characteristic_functor(&pt);
    assert!(chi.is_isomorphism());

    let p2 = arc(pair(2));
    let chi = characteristic_functor(&p2);
    assert_eq!(chi.obj_map(), &[Obj(0), Obj(1)]);
    assert!(chi.is_isomorphism());
    for a in p2.arrows() {
        assert_eq!(chi.cod().arr_label(chi.arr(a)), p2.arr_label(a));
    }

    let bc2 = arc(cyclic_groupoid(2));
    let chi = characteristic_functor(&bc2);
    assert!(bc2.arrows().all(|a| chi.cod().is_unit(chi.arr(a))));
}

#[test]
fn weak_equivalence_examples() {
    let pt = arc(point());
    let p2 = arc(pair(2));
    let d2 = arc(discrete(2));

    assert!(is_weak_equivalence(&Functor::constant(&p2, &pt, Obj(0))));
    assert!(is_weak_equivalence(&Functor::identity(&arc(cyclic_groupoid(3)))));

    let incl = Functor::constant(&pt, &d2, Obj(0));
    let r = check_weak_equivalence(&incl);
    assert!(r.is_fully_faithful() && !r.is_essentially_surjective());
    assert_eq!(r.first_unreached(), Some(Obj(1)));

    let into_pair = Functor::constant(&pt, &p2, Obj(0));
    assert!(is_weak_equivalence(&into_pair));
    assert!(!check_subductive_weak_equivalence(&into_pair));
    assert!(matches!(subductive_ff_inverse(&into_pair), Err(GpdError::NotSubductive(_))));

    // Pt → BC2 is essentially surjective but not full
    let r = check_weak_equivalence(&Functor::constant(&pt, &arc(cyclic_groupoid(2)), Obj(0)));
    assert!(r.is_essentially_surjective() && !r.is_fully_faithful());
}

#[test]
fn ff_inverse_inverts_hom_maps() {
    let p3 = arc(pair(3));
    let pt = arc(point());
    let phi = Functor::constant(&p3, &pt, Obj(0));
    let inv = ff_inverse(&phi).unwrap();
    for x1 in p3.objects() {
        for x2 in p3.objects() {
            let g = inv.apply(x1, x2, pt.unit(Obj(0)));
            assert_eq!((p3.src(g), p3.trg(g)), (x1, x2));
        }
    }
}

#[test]
fn strict_pullback_examples() {
    let pt = arc(point());
    let id = Functor::identity(&pt);
    let sp = strict_pullback(&id, &id).unwrap();
    assert_eq!((sp.groupoid.n_objects(), sp.groupoid.n_arrows()), (1, 1));

    let d2 = arc(discrete(2));
    let i0 = Functor::constant(&pt, &d2, Obj(0));
    let i1 = Functor::constant(&pt, &d2, Obj(1));
    let sp = strict_pullback(&i0, &i1).unwrap();
    assert_eq!(sp.groupoid.n_objects(), 0);

    let a = arc(discrete(2));
    let b = arc(discrete(3));
    let sp = strict_pullback(&Functor::constant(&a, &pt, Obj(0)), &Functor::constant(&b, &pt, Obj(0))).unwrap();
    assert_eq!((sp.groupoid.n_objects(), sp.groupoid.n_arrows()), (6, 6));
    assert_eq!(sp.groupoid.components().len(), 6);
}

#[test]
fn strict_pullback_respects_the_size_cap() {
    let p3 = arc(pair(3));
    let pt = arc(point());
    let f = Functor::constant(&p3, &pt, Obj(0));
    assert!(matches!(strict_pullback_with_cap(&f, &f, 10), Err(GpdError::SizeCapExceeded { .. })));
    let sp = strict_pullback_with_cap(&f, &f, 81).unwrap();
    assert_eq!(sp.groupoid.n_arrows(), 81);
}

#[test]
fn weak_pullback_examples() {
    let pt = arc(point());
    let id = Functor::identity(&pt);
    let wp = weak_pullback(&id, &id).unwrap();
    assert_eq!((wp.groupoid.n_objects(), wp.groupoid.n_arrows()), (1, 1));

    let p2 = arc(pair(2));
    let i0 = Functor::constant(&pt, &p2, Obj(0));
    let i1 = Functor::constant(&pt, &p2, Obj(1));
    let wp = weak_pullback(&i0, &i1).unwrap();
    assert_eq!(wp.groupoid.n_objects(), 1);
    assert_eq!((wp.groupoid.n_objects(), wp.groupoid.n_arrows()), weak_counts(&i0, &i1));

    let bc2 = arc(cyclic_groupoid(2));
    let id = Functor::identity(&bc2);
    let wp = weak_pullback(&id, &id).unwrap();
    assert_eq!((wp.groupoid.n_objects(), wp.groupoid.n_arrows()), (2, 8));
    assert!(wp.groupoid.check_axioms().is_ok());
}

#[test]
fn weak_pullback_counts_match_definition() {
    let cases = [
        (Functor::constant(&arc(pair(2)), &arc(cyclic_groupoid(3)), Obj(0)), Functor::identity(&arc(cyclic_groupoid(3)))),
        (Functor::constant(&arc(discrete(2)), &arc(pair(3)), Obj(1)), Functor::identity(&arc(pair(3)))),
    ];
    for (phi, _) in &cases {
        let psi = Functor::identity(phi.cod());
        let wp = weak_pullback(phi, &psi).unwrap();
        assert_eq!((wp.groupoid.n_objects(), wp.groupoid.n_arrows()), weak_counts(phi, &psi));
        // projections and the structure transformation
        assert!(wp.pr2.check().is_ok());
        for o in wp.groupoid.objects() {
            let (x, k, y) = wp.obj_triple(o);
            assert_eq!((wp.pr1.obj(o), wp.pr2.at(o), wp.pr3.obj(o)), (x, k, y));
        }
    }
}

#[test]
fn strict_pullback_embeds_in_weak_pullback() {
    let p2 = arc(pair(2));
    let bc2 = arc(cyclic_groupoid(2));
    let phi = Functor::constant(&p2, &bc2, Obj(0));
    let psi = Functor::identity(&bc2);
    let sp = strict_pullback(&phi, &psi).unwrap();
    let wp = weak_pullback(&phi, &psi).unwrap();
    let j = strict_into_weak(&sp, &wp).unwrap();
    assert!(j.check().is_ok());
    assert_eq!(wp.pr1.after(&j), sp.pr1);
    assert_eq!(wp.pr3.after(&j), sp.pr2);
}

#[test]
fn base_change_examples() {
    let (g, cmp) = base_change(&arc(point()), &["a", "b"], &[Obj(0), Obj(0)]).unwrap();
    let p = pair_groupoid(&["a", "b"]).unwrap();
    assert_eq!((g.n_objects(), g.n_arrows()), (p.n_objects(), p.n_arrows()));
    assert!(g.objects().all(|x| g.objects().all(|y| g.hom(x, y).len() == 1)));
    assert!(is_weak_equivalence(&cmp));

    let (g, cmp) = base_change(&arc(cyclic_groupoid(2)), &["a", "b"], &[Obj(0), Obj(0)]).unwrap();
    assert_eq!((g.n_objects(), g.n_arrows()), (2, 8));
    assert!(check_subductive_weak_equivalence(&cmp));
}

#[test]
fn base_change_comparison_is_iso_iff_fully_faithful() {
    let pt = arc(point());
    let p2 = arc(pair(2));
    let bc2 = arc(cyclic_groupoid(2));
    let ff = Functor::constant(&p2, &pt, Obj(0));
    assert!(base_change_comparison(&ff).unwrap().1.is_isomorphism());
    let not_full = Functor::constant(&pt, &bc2, Obj(0));
    assert!(!base_change_comparison(&not_full).unwrap().1.is_isomorphism());
}

#[test]
fn rep_ff_factor_recovers_the_transformation() {
    // φ: BC3 → BC3 identity is fully faithful; S = φS′ so factoring gives S′ back
    let bc3 = arc(cyclic_groupoid(3));
    let phi = Functor::identity(&bc3);
    let psi = Functor::identity(&bc3);
    let gen = bc3.arrows().find(|&a| !bc3.is_unit(a)).unwrap();
    let s = NaturalTransformation::new(psi.clone(), psi.clone(), vec![bc3.unit(Obj(0))]).unwrap();
    let back = rep_ff_factor(&phi, &psi, &psi, &s).unwrap();
    assert!(back.is_identity());

    // ψ = const: Pt → BC3, components can be any arrow
    let pt = arc(point());
    let c = Functor::constant(&pt, &bc3, Obj(0));
    let s = NaturalTransformation::new(c.clone(), c.clone(), vec![gen]).unwrap();
    assert_eq!(rep_ff_factor(&phi, &c, &c, &s).unwrap().at(Obj(0)), gen);
}

#[test]
fn coff_factor_descends_along_subductive_weq() {
    let p2 = arc(pair(2));
    let pt = arc(point());
    let bc2 = arc(cyclic_groupoid(2));
    let phi = Functor::constant(&p2, &pt, Obj(0));
    let psi = Functor::constant(&pt, &bc2, Obj(0));
    let gen = bc2.arrows().find(|&a| !bc2.is_unit(a)).unwrap();
    let s = NaturalTransformation::new(psi.after(&phi), psi.after(&phi), vec![gen, gen]).unwrap();
    let s2 = coff_factor(&phi, &psi, &psi, &s).unwrap();
    assert_eq!(s2.components(), &[gen]);

    let into_pair = Functor::constant(&pt, &p2, Obj(0));
    let chi = Functor::constant(&p2, &bc2, Obj(0));
    let s = NaturalTransformation::identity(&chi.after(&into_pair));
    assert!(matches!(coff_factor(&into_pair, &chi, &chi, &s), Err(GpdError::NotSubductive(_))));
}

#[test]
fn functor_checks_reject_non_functors() {
    let bc2 = arc(cyclic_groupoid(2));
    let gen = bc2.arrows().find(|&a| !bc2.is_unit(a)).unwrap();
    // sending the unit to the generator breaks units
    assert!(Functor::new(bc2.clone(), bc2.clone(), vec![Obj(0)], vec![gen, gen]).is_err());
    let id = Functor::identity(&bc2);
    assert!(NaturalTransformation::new(id.clone(), id.clone(), vec![gen]).is_ok());
}
