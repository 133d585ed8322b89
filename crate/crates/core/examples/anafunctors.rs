//! Anafunctors: anafunctisation, composition over strict pullbacks and canonical 2-cells.

use std::sync::Arc;

use gf::ana::*;
use gf::gpd::*;

fn main() {
    let pt = Arc::new(point());
    let bc3 = Arc::new(cyclic_groupoid(3));
    let c = Functor::constant(&pt, &bc3, Obj(0));

    let a = anafunctise(&c);
    println!("anafunctise(Pt → BC3) apex: {} objects", a.apex().n_objects());

    let id = Anafunctor::identity(&bc3);
    let comp = compose_ana(&a, &id).unwrap();
    let lam = unitor_right_ana(&a).unwrap();
    println!("a ∘ id apex: {} objects, unitor has {} components", comp.apex().n_objects(), lam.components().len());

    let gen = bc3.arrows().find(|&g| !bc3.is_unit(g)).unwrap();
    let s = anafunctise_2cell(&NaturalTransformation::new(c.clone(), c.clone(), vec![gen]).unwrap());
    let s3 = vcomp_ana(&vcomp_ana(&s, &s).unwrap(), &s).unwrap();
    println!("\ns³ is the identity: {}", s3.is_identity());
    let back = canonical_2cell(&transformation_to_diagram(&s)).unwrap();
    println!("canonical form recovers s: {}", back == s);

    let bc2 = Arc::new(cyclic_groupoid(2));
    let e = Functor::constant(&pt, &bc2, Obj(0));
    let d = Functor::constant(&bc2, &Arc::new(pair(2)), Obj(1));
    println!("coherence for Pt → BC2 → BC2 → Pair(2): {}", anafunctisation_coherence(&e, &Functor::identity(&bc2), &d).unwrap());
}
