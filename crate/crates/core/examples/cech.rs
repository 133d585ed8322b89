//! Čech cocycles on a cover against principal bundles on the base.

use gf::cech::*;
use gf::gpd::FiniteGroup;

fn main() {
    let cover = Cover::from_subsets(&["a", "b", "c"], &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    let n = nebulaic_groupoid(&cover).unwrap();
    println!("nebula: {} objects, {} arrows", n.groupoid.n_objects(), n.groupoid.n_arrows());
    for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)] {
        let r = cech_equivalence_check(&cover, &g).unwrap();
        println!("\n{}:\n{r}", g.short_name());
    }
}
