//! Runs the cocycle/bundle comparison over every small subset cover.
use std::time::Instant;

use gf::cech::{cech_equivalence_check, subset_covers};
use gf::gpd::FiniteGroup;

fn main() {
    let start = Instant::now();
    let (mut ok, mut total) = (0, 0);
    for order in [2, 3] {
        let g = FiniteGroup::cyclic(order);
        for n in 1..=3 {
            for c in subset_covers(n, 3) {
                total += 1;
                match cech_equivalence_check(&c, &g) {
                    Ok(r) if r.verified() => ok += 1,
                    Ok(r) => println!("C{order} on {:?}: {r}", c.charts().iter().map(|ch| ch.name.clone()).collect::<Vec<_>>()),
                    Err(e) => println!("C{order}: {e}"),
                }
            }
        }
    }
    println!("{ok}/{total} covers verified in {:.2?}", start.elapsed());
}
