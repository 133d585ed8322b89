//! Morita equivalence decisions with witnesses or distinguishing invariants.

use std::sync::Arc;

use gf::gpd::*;
use gf::morita::*;

fn main() {
    let s3 = Arc::new(group_groupoid(&FiniteGroup::symmetric(3)));
    let pairs = [
        ("Pair(7)", Arc::new(pair(7)), "Pt", Arc::new(point())),
        ("BC2", Arc::new(cyclic_groupoid(2)), "Pt", Arc::new(point())),
        ("Disc(2)", Arc::new(discrete(2)), "Disc(3)", Arc::new(discrete(3))),
        ("BC4", Arc::new(cyclic_groupoid(4)), "BV4", Arc::new(group_groupoid(&FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))))),
    ];
    for (a, g, b, h) in &pairs {
        println!("{a} ~ {b}: {}", are_morita_equivalent(g, h).unwrap());
    }

    let i = invariants(&s3);
    println!("\nBS3: {} orbit(s), stabilizers {:?}, inertia {} objects", i.orbits.len(), i.stabilizers, i.inertia_objects);
    println!("conjugacy classes of S3: {}", orbit_space(&inertia_groupoid(&s3)).len());
}
