//! Strict and weak pullbacks, base change and the mediating functor.

use std::sync::Arc;

use gf::gpd::*;

fn main() {
    let pt = Arc::new(point());
    let bc2 = Arc::new(cyclic_groupoid(2));
    let p2 = Arc::new(pair(2));

    let id = Functor::identity(&bc2);
    let sp = strict_pullback(&id, &id).unwrap();
    let wp = weak_pullback(&id, &id).unwrap();
    println!("BC2 ×  BC2: {} objects, {} arrows", sp.groupoid.n_objects(), sp.groupoid.n_arrows());
    println!("BC2 ×ʷ BC2: {} objects, {} arrows", wp.groupoid.n_objects(), wp.groupoid.n_arrows());
    for o in wp.groupoid.objects() {
        println!("  {}", wp.groupoid.obj_label(o));
    }

    // two points of Pair(2) do not meet strictly but do weakly
    let i0 = Functor::constant(&pt, &p2, Obj(0));
    let i1 = Functor::constant(&pt, &p2, Obj(1));
    println!(
        "\npoints of Pair(2): strict {} objects, weak {}",
        strict_pullback(&i0, &i1).unwrap().groupoid.n_objects(),
        weak_pullback(&i0, &i1).unwrap().groupoid.n_objects()
    );

    let (g, cmp) = base_change(&bc2, &["a", "b"], &[Obj(0), Obj(0)]).unwrap();
    println!("\nBC2[a, b]: {} objects, {} arrows, comparison is a w.e.: {}", g.n_objects(), g.n_arrows(), is_weak_equivalence(&cmp));

    let j = strict_into_weak(&sp, &wp).unwrap();
    println!("strict ↪ weak is fully faithful: {}", check_weak_equivalence(&j).is_fully_faithful());
}
