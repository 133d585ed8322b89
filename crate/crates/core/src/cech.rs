//! Covers of finite sets, their nebulaic groupoids, and the comparison between
//! Čech cocycles with abelian coefficients and principal bundles.

use rustc_hash::FxHashMap as HashMap;
use std::sync::Arc;

use crate::bibundle::{Bibundle, BiequivariantMap, GroupoidAction, Side};
use crate::error::{GpdError, Result};
use crate::gpd::{
    enforce_cap, group_groupoid, relation_groupoid, size_cap, trivial_groupoid, tuple_label, Arr, FiniteGroup,
    FiniteGroupoid, Functor, Obj,
};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Chart {
    pub name: String,
    pub domain: Vec<String>,
    /// Domain index ↦ base index.
    pub map: Vec<usize>,
}

/// A finite family of maps into a base set that is jointly surjective.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Cover {
    base: Vec<String>,
    charts: Vec<Chart>,
}

impl Cover {
    pub fn new(base: Vec<String>, charts: Vec<Chart>) -> Result<Self> {
        let mut hit = vec![false; base.len()];
        for c in &charts {
            if c.domain.len() != c.map.len() {
                return Err(GpdError::NotCovering(format!("chart {} has a partial map", c.name)));
            }
            for &x in &c.map {
                *hit.get_mut(x).ok_or_else(|| GpdError::NotCovering(format!("chart {} leaves the base", c.name)))? =
                    true;
            }
        }
        if let Some(x) = hit.iter().position(|h| !h) {
            return Err(GpdError::NotCovering(format!("{} is not in any chart", base[x])));
        }
        Ok(Cover { base, charts })
    }

    /// Charts `U0, U1, ...` given as subsets of the base, included.
    pub fn from_subsets<S: AsRef<str>>(base: &[S], subsets: &[Vec<usize>]) -> Result<Self> {
        let base: Vec<String> = base.iter().map(|s| s.as_ref().to_string()).collect();
        let charts = subsets
            .iter()
            .enumerate()
            .map(|(i, s)| Chart {
                name: format!("U{i}"),
                domain: s.iter().map(|&x| base.get(x).cloned().unwrap_or_default()).collect(),
                map: s.clone(),
            })
            .collect();
        Cover::new(base, charts)
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }
}

/// The nebulaic groupoid `N₀ ×_X N₀ ⇉ N₀` of a cover with its evaluation functor.
#[derive(Clone, Debug)]
pub struct Nebula {
    pub groupoid: Arc<FiniteGroupoid>,
    pub ev: Functor,
    arrow_of: HashMap<(Obj, Obj), Arr>,
    /// The first point over each base element.
    base_point: Vec<Obj>,
}

impl Nebula {
    pub fn arrow(&self, p: Obj, q: Obj) -> Option<Arr> {
        self.arrow_of.get(&(p, q)).copied()
    }

    pub fn base_point(&self, x: usize) -> Obj {
        self.base_point[x]
    }

    pub fn base(&self) -> &Arc<FiniteGroupoid> {
        self.ev.cod()
    }
}

pub fn nebulaic_groupoid(c: &Cover) -> Result<Nebula> {
    let mut labels = Vec::new();
    let mut ev = Vec::new();
    for chart in &c.charts {
        for (u, &x) in chart.domain.iter().zip(&chart.map) {
            labels.push(format!("{}:{u}", chart.name));
            ev.push(x);
        }
    }
    let n = Arc::new(relation_groupoid(&labels, &ev)?);
    let x = Arc::new(trivial_groupoid(&c.base)?);
    let ev_f = Functor::new(n.clone(), x, ev.iter().map(|&i| Obj(i)).collect(), n.arrows().map(|a| Arr(ev[n.src(a).0])).collect())?;
    let arrow_of = n.arrows().map(|a| ((n.src(a), n.trg(a)), a)).collect();
    let base_point = (0..c.base.len()).map(|x| Obj(ev.iter().position(|&e| e == x).expect("cover"))).collect();
    Ok(Nebula { groupoid: n, ev: ev_f, arrow_of, base_point })
}

fn require_abelian(g: &FiniteGroup) -> Result<()> {
    if g.is_abelian() {
        Ok(())
    } else {
        Err(GpdError::GroupNotAbelian)
    }
}

/// A `G`-valued function on nebulaic arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CechCocycle {
    pub values: Vec<usize>,
}

impl CechCocycle {
    /// `f(q, r)·f(p, q) = f(p, r)` on every composable pair.
    pub fn is_cocycle(&self, n: &Nebula, g: &FiniteGroup) -> bool {
        n.groupoid.composable_pairs().all(|(b, a, ba)| g.mul(self.values[b.0], self.values[a.0]) == self.values[ba.0])
    }

    pub fn trivial(n: &Nebula, g: &FiniteGroup) -> Self {
        CechCocycle { values: vec![g.identity(); n.groupoid.n_arrows()] }
    }
}

/// `(δα)(p, q) = α(q) − α(p)`.
pub fn coboundary(n: &Nebula, g: &FiniteGroup, alpha: &[usize]) -> CechCocycle {
    let k = &n.groupoid;
    CechCocycle { values: k.arrows().map(|a| g.mul(alpha[k.trg(a).0], g.inv(alpha[k.src(a).0]))).collect() }
}

/// Cocycles and the 0-cochains between them.
#[derive(Clone, Debug)]
pub struct CocycleCategory {
    pub nebula: Nebula,
    pub group: FiniteGroup,
    pub objects: Vec<CechCocycle>,
    index: HashMap<CechCocycle, usize>,
}

impl CocycleCategory {
    pub fn index_of(&self, f: &CechCocycle) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Every `α` with `δα = f₂ − f₁`, composition being pointwise addition.
    ///
    /// Such an `α` is fixed by its values at the base points, so those are
    /// enumerated and each candidate is checked.
    pub fn hom(&self, f1: &CechCocycle, f2: &CechCocycle) -> Vec<Vec<usize>> {
        let (n, g) = (&self.nebula, &self.group);
        let k = &n.groupoid;
        let diff: Vec<usize> = f1.values.iter().zip(&f2.values).map(|(&a, &b)| g.mul(b, g.inv(a))).collect();
        let xs = n.base().n_objects();
        let mut out = Vec::new();
        for free in tuples(g.order(), xs) {
            let alpha: Vec<usize> = k
                .objects()
                .map(|q| {
                    let x = n.ev.obj(q).0;
                    let p0 = n.base_point(x);
                    g.mul(diff[n.arrow(p0, q).expect("same fibre").0], free[x])
                })
                .collect();
            if coboundary(n, g, &alpha).values == diff {
                out.push(alpha);
            }
        }
        out
    }

    /// Classes under `f ~ f + δα`.
    pub fn iso_classes(&self) -> Vec<usize> {
        let (n, g) = (&self.nebula, &self.group);
        let mut gens = Vec::new();
        for p in n.groupoid.objects() {
            for e in 0..g.order() {
                let mut alpha = vec![g.identity(); n.groupoid.n_objects()];
                alpha[p.0] = e;
                gens.push(coboundary(n, g, &alpha));
            }
        }
        let mut class = vec![usize::MAX; self.objects.len()];
        let mut next = 0;
        for start in 0..self.objects.len() {
            if class[start] != usize::MAX {
                continue;
            }
            class[start] = next;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for d in &gens {
                    let moved = CechCocycle {
                        values: self.objects[i].values.iter().zip(&d.values).map(|(&a, &b)| g.mul(a, b)).collect(),
                    };
                    let j = self.index[&moved];
                    if class[j] == usize::MAX {
                        class[j] = next;
                        stack.push(j);
                    }
                }
            }
            next += 1;
        }
        class
    }
}

/// All tuples in `0..base` of the given length, in lexicographic order.
fn tuples(base: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = base.pow(len as u32);
    (0..total).map(move |mut i| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = i % base;
            i /= base;
        }
        t
    })
}

pub fn cocycle_category(c: &Cover, g: &FiniteGroup) -> Result<CocycleCategory> {
    require_abelian(g)?;
    let n = nebulaic_groupoid(c)?;
    let k = &n.groupoid;
    // a cocycle is fixed by its values on the arrows leaving each base point
    let free: Vec<Obj> = k.objects().filter(|&q| n.base_point(n.ev.obj(q).0) != q).collect();
    let count = (g.order() as u128).saturating_pow(free.len() as u32);
    enforce_cap("cocycle enumeration", usize::try_from(count).unwrap_or(usize::MAX), size_cap())?;
    let mut objects = Vec::new();
    for t in tuples(g.order(), free.len()) {
        let mut from_base = vec![g.identity(); k.n_objects()];
        for (&q, &v) in free.iter().zip(&t) {
            from_base[q.0] = v;
        }
        let f = CechCocycle {
            values: k.arrows().map(|a| g.mul(from_base[k.trg(a).0], g.inv(from_base[k.src(a).0]))).collect(),
        };
        if !f.is_cocycle(&n, g) {
            return Err(GpdError::InvariantBroken("enumerated a non-cocycle".into()));
        }
        objects.push(f);
    }
    let index = objects.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    Ok(CocycleCategory { nebula: n, group: g.clone(), objects, index })
}

/// Right principal `G`-bundles over a finite set on the carrier `X × G`.
#[derive(Clone, Debug)]
pub struct BundleCategory {
    pub base: Arc<FiniteGroupoid>,
    pub structure: Arc<FiniteGroupoid>,
    pub group: FiniteGroup,
    /// One bundle per choice of regular right action on each fibre.
    pub objects: Vec<Bibundle>,
}

impl BundleCategory {
    /// Every bi-equivariant bijection; each is fixed by where it sends the
    /// first point of each fibre.
    pub fn hom(&self, a: &Bibundle, b: &Bibundle) -> Vec<BiequivariantMap> {
        let xs = self.base.n_objects();
        let fibre = |bb: &Bibundle, x: usize| -> Vec<usize> { (0..bb.len()).filter(|&p| bb.l(p) == Obj(x)).collect() };
        let (fa, fb): (Vec<_>, Vec<_>) = (0..xs).map(|x| (fibre(a, x), fibre(b, x))).unzip();
        let mut out = Vec::new();
        for choice in tuples(self.group.order(), xs) {
            let mut map = vec![usize::MAX; a.len()];
            for x in 0..xs {
                let (p0, q0) = (fa[x][0], fb[x][choice[x]]);
                for &p in &fa[x] {
                    let h = a.right_division(p0, p).expect("fibres are torsors");
                    map[p] = b.act_right(q0, h).expect("anchors match");
                }
            }
            if let Ok(m) = BiequivariantMap::new(a.clone(), b.clone(), map) {
                if m.is_bijective() {
                    out.push(m);
                }
            }
        }
        out
    }

    pub fn iso_classes(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = Vec::new();
        let mut class = Vec::with_capacity(self.objects.len());
        for (i, b) in self.objects.iter().enumerate() {
            match reps.iter().position(|&r| !self.hom(&self.objects[r], b).is_empty()) {
                Some(c) => class.push(c),
                None => {
                    class.push(reps.len());
                    reps.push(i);
                }
            }
        }
        class
    }

    pub fn index_of(&self, b: &Bibundle) -> Option<usize> {
        self.objects.iter().position(|o| o == b)
    }
}

/// Carrier labels `(x,g)`, fibre by fibre.
fn bundle_carrier(x: &FiniteGroupoid, g: &FiniteGroup) -> Vec<String> {
    x.objects().flat_map(|o| g.labels().iter().map(move |e| tuple_label(&[x.obj_label(o), e]))).collect()
}

/// The bundle on `X × G` whose right action on fibre `x` is `(x, e)·h = (x, rho[x][e][h])`.
fn bundle_from_tables(base: &Arc<FiniteGroupoid>, bg: &Arc<FiniteGroupoid>, g: &FiniteGroup, rho: &[Vec<Vec<usize>>]) -> Result<Bibundle> {
    let m = g.order();
    let carrier = bundle_carrier(base, g);
    let anchor: Vec<Obj> = (0..carrier.len()).map(|p| Obj(p / m)).collect();
    let left = GroupoidAction::new(
        base.clone(),
        Side::Left,
        carrier.clone(),
        anchor,
        (0..carrier.len()).map(|p| ((base.unit(Obj(p / m)), p), p)),
    )?;
    let mut act = HashMap::default();
    for p in 0..carrier.len() {
        let (x, e) = (p / m, p % m);
        for h in 0..m {
            act.insert((Arr(h), p), x * m + rho[x][e][h]);
        }
    }
    let right = GroupoidAction::new(bg.clone(), Side::Right, carrier, vec![Obj(0); m * base.n_objects()], act)?;
    Bibundle::new(left, right)
}

/// Regular right actions of `G` on its own underlying set, one per bijection
/// up to left translation: `e·h = β(β⁻¹(e) h)`.
fn regular_actions(g: &FiniteGroup) -> Vec<Vec<Vec<usize>>> {
    let m = g.order();
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    for beta in permutations(m) {
        let mut inv = vec![0; m];
        for (i, &b) in beta.iter().enumerate() {
            inv[b] = i;
        }
        let table: Vec<Vec<usize>> = (0..m).map(|e| (0..m).map(|h| beta[g.mul(inv[e], h)]).collect()).collect();
        if !out.contains(&table) {
            out.push(table);
        }
    }
    out
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for i in 0..m {
            let mut q = p.clone();
            q.insert(i, m - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub fn bundle_category<S: AsRef<str>>(xs: &[S], g: &FiniteGroup) -> Result<BundleCategory> {
    require_abelian(g)?;
    let base = Arc::new(trivial_groupoid(xs)?);
    let bg = Arc::new(group_groupoid(g));
    let regular = regular_actions(g);
    let n = base.n_objects();
    let count = regular.len().saturating_pow(n as u32);
    enforce_cap("bundle enumeration", count, size_cap())?;
    let mut objects = Vec::with_capacity(count);
    for choice in tuples(regular.len(), n) {
        let rho: Vec<Vec<Vec<usize>>> = choice.iter().map(|&c| regular[c].clone()).collect();
        objects.push(bundle_from_tables(&base, &bg, g, &rho)?);
    }
    Ok(BundleCategory { base, structure: bg, group: g.clone(), objects })
}

/// The bundle `(N₀ × G)/((p, e) ~ (q, f(p,q)·e))`, written on `X × G` through
/// the base-point section `[p₀(x), e] ↦ (x, e)`.
pub fn bundle_of_cocycle(cat: &CocycleCategory, bundles: &BundleCategory, f: &CechCocycle) -> Result<Bibundle> {
    let (n, g) = (&cat.nebula, &cat.group);
    let k = &n.groupoid;
    let m = g.order();
    // the class of (p, e), as a section coordinate
    let coord = |p: Obj, e: usize| -> (usize, usize) {
        let x = n.ev.obj(p).0;
        let a = n.arrow(p, n.base_point(x)).expect("same fibre");
        (x, g.mul(f.values[a.0], e))
    };
    for a in k.arrows() {
        for e in 0..m {
            if coord(k.src(a), e) != coord(k.trg(a), g.mul(f.values[a.0], e)) {
                return Err(GpdError::InvariantBroken("cocycle quotient is not well defined".into()));
            }
        }
    }
    let rho: Vec<Vec<Vec<usize>>> = (0..n.base().n_objects())
        .map(|x| {
            let p0 = n.base_point(x);
            (0..m).map(|e| (0..m).map(|h| coord(p0, g.mul(e, h)).1).collect()).collect()
        })
        .collect();
    bundle_from_tables(&bundles.base, &bundles.structure, g, &rho)
}

/// `α ↦ ([p, e] ↦ [p, α(p)·e])`.
pub fn bundle_map_of_cochain(
    cat: &CocycleCategory,
    from: &Bibundle,
    to: &Bibundle,
    alpha: &[usize],
) -> Result<BiequivariantMap> {
    let (n, g) = (&cat.nebula, &cat.group);
    let m = g.order();
    let map = (0..from.len())
        .map(|p| {
            let (x, e) = (p / m, p % m);
            x * m + g.mul(alpha[n.base_point(x).0], e)
        })
        .collect();
    BiequivariantMap::new(from.clone(), to.clone(), map)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CechReport {
    pub base_points: usize,
    pub nebula_objects: usize,
    pub nebula_arrows: usize,
    pub cocycles: usize,
    pub cocycle_classes: usize,
    pub cocycle_automorphisms: usize,
    pub bundles: usize,
    pub bundle_classes: usize,
    pub bundle_automorphisms: usize,
    /// `|G|` to the number of orbits of the base.
    pub expected_automorphisms: usize,
    pub all_coboundaries: bool,
    pub essentially_surjective: bool,
    pub fully_faithful: bool,
}

impl CechReport {
    pub fn verified(&self) -> bool {
        self.essentially_surjective
            && self.fully_faithful
            && self.cocycle_classes == self.bundle_classes
            && self.cocycle_automorphisms == self.bundle_automorphisms
            && self.bundle_automorphisms == self.expected_automorphisms
    }
}

impl std::fmt::Display for CechReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "nebula: {} objects, {} arrows", self.nebula_objects, self.nebula_arrows)?;
        writeln!(f, "cocycles: {}, iso classes {}, automorphisms {}", self.cocycles, self.cocycle_classes, self.cocycle_automorphisms)?;
        writeln!(f, "bundles: {}, iso classes {}, automorphisms {}", self.bundles, self.bundle_classes, self.bundle_automorphisms)?;
        write!(f, "equivalence {}", if self.verified() { "verified" } else { "FAILED" })
    }
}

/// Builds the comparison functor from cocycles to bundles and checks that it
/// is an equivalence by enumeration.
///
/// Full faithfulness is checked on every endomorphism set and on every hom set
/// out of the trivial cocycle; all other hom sets are translates of these.
pub fn cech_equivalence_check(c: &Cover, g: &FiniteGroup) -> Result<CechReport> {
    let cat = cocycle_category(c, g)?;
    let bundles = bundle_category(c.base(), g)?;
    let n = &cat.nebula;
    let images: Vec<Bibundle> = cat.objects.iter().map(|f| bundle_of_cocycle(&cat, &bundles, f)).collect::<Result<_>>()?;
    let image_index: Vec<usize> = images
        .iter()
        .map(|b| bundles.index_of(b).ok_or_else(|| GpdError::InvariantBroken("image bundle not enumerated".into())))
        .collect::<Result<_>>()?;

    let bclass = bundles.iso_classes();
    let reached: std::collections::HashSet<usize> = image_index.iter().map(|&i| bclass[i]).collect();
    let essentially_surjective = bclass.iter().all(|c| reached.contains(c));

    let trivial = CechCocycle::trivial(n, g);
    let t = cat.index_of(&trivial).expect("trivial cocycle");
    let faithful_on = |i: usize, j: usize| -> Result<bool> {
        let homs = cat.hom(&cat.objects[i], &cat.objects[j]);
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for alpha in &homs {
            let m = bundle_map_of_cochain(&cat, &images[i], &images[j], alpha)?;
            if seen.iter().any(|s| s == m.map()) {
                return Ok(false);
            }
            seen.push(m.map().to_vec());
        }
        Ok(seen.len() == bundles.hom(&images[i], &images[j]).len())
    };
    let mut fully_faithful = true;
    for j in 0..cat.objects.len() {
        if !faithful_on(j, j)? || !faithful_on(t, j)? {
            fully_faithful = false;
            break;
        }
    }

    let cclass = cat.iso_classes();
    let count = |v: &[usize]| v.iter().copied().max().map_or(0, |m| m + 1);
    let expected = g.order().pow(c.base().len() as u32);
    Ok(CechReport {
        base_points: c.base().len(),
        nebula_objects: n.groupoid.n_objects(),
        nebula_arrows: n.groupoid.n_arrows(),
        cocycles: cat.objects.len(),
        cocycle_classes: count(&cclass),
        cocycle_automorphisms: cat.hom(&trivial, &trivial).len(),
        bundles: bundles.objects.len(),
        bundle_classes: count(&bclass),
        bundle_automorphisms: bundles.hom(&images[t], &images[t]).len(),
        expected_automorphisms: expected,
        all_coboundaries: cclass.iter().all(|&k| k == cclass[t]),
        essentially_surjective,
        fully_faithful,
    })
}

/// Every cover of an `n`-point base by at most `max_charts` subset charts, up to chart order.
pub fn subset_covers(n: usize, max_charts: usize) -> Vec<Cover> {
    let base: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let subsets: Vec<Vec<usize>> = (1..(1usize << n)).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((from, chosen)) = stack.pop() {
        if !chosen.is_empty() {
            let charts: Vec<Vec<usize>> = chosen.iter().map(|&i| subsets[i].clone()).collect();
            if let Ok(c) = Cover::from_subsets(&base, &charts) {
                out.push(c);
            }
        }
        if chosen.len() < max_charts {
            for i in (from..subsets.len()).rev() {
                let mut next = chosen.clone();
                next.push(i);
                stack.push((i, next));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gpd::check_subductive_weak_equivalence;

    fn two_chart() -> Cover {
        Cover::from_subsets(&["a", "b"], &[vec![0, 1], vec![1]]).unwrap()
    }

    #[test]
    fn nebula_of_single_bijective_chart_is_discrete() {
        let c = Cover::from_subsets(&["a", "b", "c"], &[vec![0, 1, 2]]).unwrap();
        let n = nebulaic_groupoid(&c).unwrap();
        assert_eq!((n.groupoid.n_objects(), n.groupoid.n_arrows()), (3, 3));
        assert!(n.ev.is_isomorphism());
    }

    #[test]
    fn nebula_with_overlap() {
        let n = nebulaic_groupoid(&two_chart()).unwrap();
        assert_eq!((n.groupoid.n_objects(), n.groupoid.n_arrows()), (3, 5));
        assert!(check_subductive_weak_equivalence(&n.ev));
        let d = Cover::from_subsets(&["a", "b"], &[vec![0], vec![1]]).unwrap();
        assert_eq!(nebulaic_groupoid(&d).unwrap().groupoid.components().len(), 2);
    }

    #[test]
    fn cover_must_be_surjective() {
        assert!(matches!(Cover::from_subsets(&["a", "b"], &[vec![0]]), Err(GpdError::NotCovering(_))));
    }

    #[test]
    fn one_chart_with_c2() {
        let c = Cover::from_subsets(&["a"], &[vec![0]]).unwrap();
        let cat = cocycle_category(&c, &FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(cat.objects.len(), 1);
        assert_eq!(cat.hom(&cat.objects[0], &cat.objects[0]).len(), 2);
    }

    #[test]
    fn every_cocycle_is_a_coboundary_and_delta_lands_in_cocycles() {
        let g = FiniteGroup::cyclic(2);
        let cat = cocycle_category(&two_chart(), &g).unwrap();
        assert_eq!(cat.objects.len(), 2);
        assert!(cat.iso_classes().iter().all(|&c| c == 0));
        for alpha in tuples(2, 3) {
            let d = coboundary(&cat.nebula, &g, &alpha);
            assert!(d.is_cocycle(&cat.nebula, &g));
            assert!(cat.index_of(&d).is_some());
        }
    }

    #[test]
    fn bundle_counts() {
        let c2 = FiniteGroup::cyclic(2);
        let b = bundle_category(&["a"], &c2).unwrap();
        assert_eq!(b.objects.len(), 1);
        assert_eq!(b.hom(&b.objects[0], &b.objects[0]).len(), 2);
        let b = bundle_category(&["a", "b"], &c2).unwrap();
        assert_eq!(b.hom(&b.objects[0], &b.objects[0]).len(), 4);
        let b = bundle_category(&["a", "b"], &FiniteGroup::cyclic(3)).unwrap();
        assert_eq!(b.objects.len(), 4);
        assert_eq!(b.iso_classes().iter().max(), Some(&0));
        let t = bundle_category(&["a"], &FiniteGroup::trivial()).unwrap();
        assert_eq!(t.objects.len(), 1);
    }

    #[test]
    fn nonabelian_groups_are_rejected() {
        let s3 = FiniteGroup::symmetric(3);
        assert!(matches!(cocycle_category(&two_chart(), &s3), Err(GpdError::GroupNotAbelian)));
    }

    #[test]
    fn equivalence_examples() {
        let r = cech_equivalence_check(&two_chart(), &FiniteGroup::cyclic(2)).unwrap();
        assert!(r.verified(), "{r}");
        assert_eq!((r.cocycle_classes, r.bundle_automorphisms), (1, 4));
        let r = cech_equivalence_check(&two_chart(), &FiniteGroup::trivial()).unwrap();
        assert!(r.verified());
        let three = Cover::from_subsets(&["a", "b", "c"], &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let r = cech_equivalence_check(&three, &FiniteGroup::cyclic(3)).unwrap();
        assert!(r.verified(), "{r}");
        assert_eq!(r.bundle_automorphisms, 27);
    }

    #[test]
    fn subset_cover_enumeration() {
        // nonempty subsets of a point: one chart, repeated up to three times
        assert_eq!(subset_covers(1, 3).len(), 3);
        assert!(subset_covers(3, 3).iter().all(|c| c.charts().len() <= 3));
    }
}
