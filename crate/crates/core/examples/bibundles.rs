//! Bibundles: principality, tensor products and the translation to anafunctors.

use std::sync::Arc;

use gf::bibundle::*;
use gf::gpd::*;

fn describe(name: &str, b: &Bibundle) {
    let f = check_principality(b).flags;
    println!("{name:<16} {} points, right principal {:<5} biprincipal {}", b.len(), f.right_principal, f.biprincipal());
}

fn main() {
    let pt = Arc::new(point());
    let bc2 = Arc::new(cyclic_groupoid(2));
    let p2 = Arc::new(pair(2));

    let m = bibundlise(&Functor::constant(&p2, &pt, Obj(0)));
    describe("id(BC2)", &identity_bibundle(&bc2));
    describe("B(Pt → BC2)", &bibundlise(&Functor::constant(&pt, &bc2, Obj(0))));
    describe("B(Pair2 → Pt)", &m);
    describe("opposite", &opposite(&m));

    let t = tensor(&m, &opposite(&m)).unwrap();
    let q = quasi_inverse_bi(&m).unwrap();
    println!("\nM ⊗ M̄ has {} points; unit onto id(Pair2) bijective: {}", t.len(), q.unit.is_bijective());

    let a = bibundle_to_anafunctor(&m).unwrap();
    println!("action anafunctor apex: {} objects", a.anafunctor.apex().n_objects());
    println!("round trip iso bijective: {}", bibundle_roundtrip_iso(&m).unwrap().is_bijective());
}
