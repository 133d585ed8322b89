//! Standard groupoids, the characteristic functor and weak equivalences.

use std::sync::Arc;

use gf::gpd::*;

fn show(name: &str, g: &FiniteGroupoid) {
    println!("{name:<10} {} objects, {} arrows, {} components", g.n_objects(), g.n_arrows(), g.components().len());
}

fn main() {
    let pt = Arc::new(point());
    let p3 = Arc::new(pair(3));
    let bc2 = Arc::new(cyclic_groupoid(2));
    show("Pt", &pt);
    show("Disc(3)", &discrete(3));
    show("Pair(3)", &p3);
    show("BC2", &bc2);
    show("BS3", &group_groupoid(&FiniteGroup::symmetric(3)));
    show("rel", &relation_groupoid(&["a", "b", "c"], &[0, 0, 1]).unwrap());

    let chi = characteristic_functor(&bc2);
    println!("\nχ(BC2) sends every arrow to a unit: {}", bc2.arrows().all(|a| chi.cod().is_unit(chi.arr(a))));

    let cases = [
        ("Pair(3) → Pt", Functor::constant(&p3, &pt, Obj(0))),
        ("Pt → Pair(3)", Functor::constant(&pt, &p3, Obj(1))),
        ("Pt → BC2", Functor::constant(&pt, &bc2, Obj(0))),
        ("Pt → Disc(2)", Functor::constant(&pt, &Arc::new(discrete(2)), Obj(0))),
    ];
    println!();
    for (name, f) in &cases {
        let r = check_weak_equivalence(f);
        println!(
            "{name:<14} ess.surj {:<5} ff {:<5} subductive w.e. {}",
            r.is_essentially_surjective(),
            r.is_fully_faithful(),
            check_subductive_weak_equivalence(f)
        );
    }
}
