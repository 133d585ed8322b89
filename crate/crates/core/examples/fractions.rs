//! Spans with a weak-equivalence leg: composition, 2-cells and quasi-inverses.

use std::sync::Arc;

use gf::fractions::*;
use gf::gpd::*;

fn main() {
    let pt = Arc::new(point());
    let bc2 = Arc::new(cyclic_groupoid(2));
    let collapse = Functor::constant(&Arc::new(pair(2)), &pt, Obj(0));

    let s = spanise(&collapse);
    let q = quasi_inverse_gm(&s).unwrap();
    let there_and_back = compose_gm(&s, &q.inverse).unwrap();
    println!("Pair(2) → Pt → Pair(2) apex: {} objects", there_and_back.apex().n_objects());
    println!("unit is identity-like: {}", two_cells_equal(&q.unit, &q.unit).unwrap());

    let c = Functor::constant(&pt, &bc2, Obj(0));
    let flip = bc2.arrows().find(|&a| !bc2.is_unit(a)).unwrap();
    let t = spanise_2cell(&NaturalTransformation::new(c.clone(), c.clone(), vec![flip]).unwrap());
    let e = identity_2cell(t.source());
    println!("\nflip cell equals identity: {}", two_cells_equal(&t, &e).unwrap());
    println!("flip ∘ flip equals identity: {}", two_cells_equal(&vcomp_gm(&t, &t).unwrap(), &e).unwrap());
    let h = hcomp_gm(&t, &identity_2cell(&GeneralizedMorphism::identity(&bc2))).unwrap();
    println!("both horizontal composites agree: {}", two_cells_equal(&h, &hcomp_gm_alt(&t, &identity_2cell(&GeneralizedMorphism::identity(&bc2))).unwrap()).unwrap());
}
