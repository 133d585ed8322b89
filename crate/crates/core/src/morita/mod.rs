//! Morita equivalence of finite groupoids: a skeleton-based decision with a
//! witness bibundle, and the invariants that a biprincipal bibundle preserves.

mod iso;

use rustc_hash::FxHashMap as HashMap;
use std::sync::Arc;

pub use iso::{are_isomorphic, find_group_isomorphism, generators, GROUP_ISO_CAP};

use crate::bibundle::{bibundlise, opposite, tensor, Bibundle, GroupoidAction, Side};
use crate::error::{GpdError, Result};
use crate::gpd::{
    assemble, characteristic_functor, check_weak_equivalence, full_subgroupoid, point, tuple_label, weak_pullback,
    Arr, FiniteGroup, FiniteGroupoid, Functor, Obj,
};

/// Connected components as a quotient set.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OrbitSpace {
    /// `[x]` for the least object `x` of each class.
    pub classes: Vec<String>,
    /// Object index ↦ class index.
    pub projection: Vec<usize>,
}

impl OrbitSpace {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn orbit_space(g: &FiniteGroupoid) -> OrbitSpace {
    let comps = g.components();
    let mut projection = vec![0; g.n_objects()];
    for (i, c) in comps.iter().enumerate() {
        for x in c {
            projection[x.0] = i;
        }
    }
    let classes = comps.iter().map(|c| format!("[{}]", g.obj_label(c[0]))).collect();
    OrbitSpace { classes, projection }
}

/// Whether the characteristic functor hits every ordered pair of objects.
pub fn is_fibrating(g: &Arc<FiniteGroupoid>) -> bool {
    characteristic_functor(g).is_surjective_on_arrows()
}

/// The stabiliser subgroupoid: every object, and the arrows with `src = trg`.
pub fn kernel_groupoid(g: &Arc<FiniteGroupoid>) -> (Arc<FiniteGroupoid>, Functor) {
    let objects = g.objects().map(|x| (x, g.obj_label(x).to_string())).collect();
    let arrows = g
        .objects()
        .flat_map(|x| g.automorphisms(x).iter().map(|&a| (a, g.arr_label(a).to_string())))
        .collect();
    let k = assemble(
        objects,
        arrows,
        |&a| g.src(a),
        |&a| g.trg(a),
        |&x| g.unit(x),
        |&a| g.inv(a),
        |&p, &q| g.comp(p, q),
    );
    let ker = Arc::new(k.groupoid);
    let incl = Functor::new_unchecked(ker.clone(), g.clone(), k.okeys, k.akeys);
    (ker, incl)
}

/// The conjugation action groupoid on stabiliser arrows, keyed by the arrows it was built from.
#[derive(Clone, Debug)]
pub struct Inertia {
    pub groupoid: Arc<FiniteGroupoid>,
    objs: Vec<Arr>,
    obj_of: HashMap<Arr, Obj>,
    arrs: Vec<(Arr, Arr)>,
    arr_of: HashMap<(Arr, Arr), Arr>,
}

impl Inertia {
    /// The stabiliser arrow sitting at an object.
    pub fn loop_at(&self, o: Obj) -> Arr {
        self.objs[o.0]
    }

    pub fn obj(&self, k: Arr) -> Option<Obj> {
        self.obj_of.get(&k).copied()
    }

    /// The arrow `(g, k): k → g k g⁻¹`.
    pub fn arr(&self, g: Arr, k: Arr) -> Option<Arr> {
        self.arr_of.get(&(g, k)).copied()
    }

    pub fn arr_pair(&self, a: Arr) -> (Arr, Arr) {
        self.arrs[a.0]
    }
}

pub fn inertia(g: &FiniteGroupoid) -> Inertia {
    let loops: Vec<Arr> = g.objects().flat_map(|x| g.automorphisms(x).iter().copied()).collect();
    let objects = loops.iter().map(|&k| (k, g.arr_label(k).to_string())).collect();
    let mut arrows = Vec::new();
    for &k in &loops {
        for &a in g.arrows_from(g.src(k)) {
            arrows.push(((a, k), tuple_label(&[g.arr_label(a), g.arr_label(k)])));
        }
    }
    let conj = |a: Arr, k: Arr| g.comp_all(&[a, k, g.inv(a)]);
    let kd = assemble(
        objects,
        arrows,
        |&(_, k)| k,
        |&(a, k)| conj(a, k),
        |&k| (g.unit(g.src(k)), k),
        |&(a, k)| (g.inv(a), conj(a, k)),
        |&(b, _), &(a, k)| (g.comp(b, a), k),
    );
    Inertia { groupoid: Arc::new(kd.groupoid), objs: kd.okeys, obj_of: kd.obj_of, arrs: kd.akeys, arr_of: kd.arr_of }
}

pub fn inertia_groupoid(g: &FiniteGroupoid) -> Arc<FiniteGroupoid> {
    inertia(g).groupoid
}

/// `I(φ): (g, k) ↦ (φ g, φ k)` between the inertia groupoids of the ends of `φ`.
pub fn inertia_functor(phi: &Functor, dom: &Inertia, cod: &Inertia) -> Functor {
    Functor::from_fns(
        &dom.groupoid,
        &cod.groupoid,
        |o| cod.obj(phi.arr(dom.loop_at(o))).expect("functors preserve loops"),
        |a| {
            let (g, k) = dom.arr_pair(a);
            cod.arr(phi.arr(g), phi.arr(k)).expect("functors preserve conjugation")
        },
    )
}

/// `I_G ← I_W → I_H` for the weak pullback `W = G ×ʷ_{φ,id} H`.
#[derive(Clone, Debug)]
pub struct InertiaSpan {
    pub apex: Inertia,
    pub left: Functor,
    pub right: Functor,
}

pub fn inertia_span(phi: &Functor) -> Result<InertiaSpan> {
    let report = check_weak_equivalence(phi);
    if !report.is_weak_equivalence() {
        return Err(GpdError::NotWeakEquivalence("inertia span needs a weak equivalence".into()));
    }
    let w = weak_pullback(phi, &Functor::identity(phi.cod()))?;
    let (ig, ih, iw) = (inertia(phi.dom()), inertia(phi.cod()), inertia(&w.groupoid));
    let left = inertia_functor(&w.pr1, &iw, &ig);
    let right = inertia_functor(&w.pr3, &iw, &ih);
    Ok(InertiaSpan { apex: iw, left, right })
}

/// One object per component with its automorphism group.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub reps: Vec<Obj>,
    pub groups: Vec<FiniteGroup>,
}

pub fn skeleton(g: &FiniteGroupoid) -> Skeleton {
    let reps: Vec<Obj> = g.components().iter().map(|c| c[0]).collect();
    let groups = reps.iter().map(|&x| FiniteGroup::stabilizer(g, x)).collect();
    Skeleton { reps, groups }
}

#[derive(Clone, Debug)]
pub enum MoritaWitness {
    /// A biprincipal bibundle, with the matched component representatives.
    Equivalent { bibundle: Bibundle, matching: Vec<(Obj, Obj)> },
    OrbitCountMismatch { left: usize, right: usize },
    /// A component of one side whose stabiliser has no partner on the other.
    StabilizerMismatch { left: String, right: String },
}

impl MoritaWitness {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, MoritaWitness::Equivalent { .. })
    }

    pub fn bibundle(&self) -> Option<&Bibundle> {
        match self {
            MoritaWitness::Equivalent { bibundle, .. } => Some(bibundle),
            _ => None,
        }
    }
}

impl std::fmt::Display for MoritaWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MoritaWitness::Equivalent { bibundle, .. } => {
                write!(f, "equivalent: witness bibundle with {} points", bibundle.len())
            }
            MoritaWitness::OrbitCountMismatch { left, right } => {
                write!(f, "NOT equivalent: orbit count {left} vs {right}")
            }
            MoritaWitness::StabilizerMismatch { left, right } => {
                write!(f, "NOT equivalent: stabilizer {left} vs {right}")
            }
        }
    }
}

/// Decides Morita equivalence by matching components with isomorphic stabilisers.
///
/// The witness is `opposite(bibundlise(i_G)) ⊗ bibundlise(i_H ∘ θ)`, where the
/// `i` are skeleton inclusions and `θ` is the matching of skeletons.
pub fn are_morita_equivalent(g: &Arc<FiniteGroupoid>, h: &Arc<FiniteGroupoid>) -> Result<MoritaWitness> {
    let (sg, sh) = (skeleton(g), skeleton(h));
    if sg.reps.len() != sh.reps.len() {
        return Ok(MoritaWitness::OrbitCountMismatch { left: sg.reps.len(), right: sh.reps.len() });
    }
    let n = sg.reps.len();
    let mut partner = vec![usize::MAX; n];
    let mut isos = vec![Vec::new(); n];
    let mut taken = vec![false; n];
    // isomorphism is an equivalence relation, so greedy matching is complete
    for i in 0..n {
        for j in 0..n {
            if taken[j] {
                continue;
            }
            if let Some(m) = find_group_isomorphism(&sg.groups[i], &sh.groups[j])? {
                partner[i] = j;
                isos[i] = m;
                taken[j] = true;
                break;
            }
        }
        if partner[i] == usize::MAX {
            let j = (0..n).find(|&j| !taken[j]).expect("an unmatched partner remains");
            return Ok(MoritaWitness::StabilizerMismatch {
                left: sg.groups[i].short_name(),
                right: sh.groups[j].short_name(),
            });
        }
    }

    let (skg, ig) = full_subgroupoid(g, &sg.reps);
    let (skh, ih) = full_subgroupoid(h, &sh.reps);
    let theta = Functor::new(
        skg.clone(),
        skh.clone(),
        (0..n).map(|i| Obj(partner[i])).collect(),
        skg.arrows()
            .map(|a| {
                let i = skg.src(a).0;
                let x = sg.reps[i];
                let e = g.automorphisms(x).iter().position(|&b| b == ig.arr(a)).expect("skeleton loop");
                let y = sh.reps[partner[i]];
                let b = h.automorphisms(y)[isos[i][e]];
                ih.arr_map().iter().position(|&c| c == b).map(Arr).expect("skeleton loop")
            })
            .collect(),
    )?;
    let bibundle = tensor(&opposite(&bibundlise(&ig)), &bibundlise(&ih.after(&theta)))?;
    debug_assert!(bibundle.is_biprincipal());
    let matching = (0..n).map(|i| (sg.reps[i], sh.reps[partner[i]])).collect();
    Ok(MoritaWitness::Equivalent { bibundle, matching })
}

/// A summary of the Morita invariants of one groupoid.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Invariants {
    pub objects: usize,
    pub arrows: usize,
    pub orbits: Vec<String>,
    pub stabilizers: Vec<String>,
    pub fibrating: bool,
    pub kernel_arrows: usize,
    pub inertia_objects: usize,
    pub inertia_arrows: usize,
}

pub fn invariants(g: &Arc<FiniteGroupoid>) -> Invariants {
    let s = skeleton(g);
    let (ker, _) = kernel_groupoid(g);
    let i = inertia_groupoid(g);
    Invariants {
        objects: g.n_objects(),
        arrows: g.n_arrows(),
        orbits: orbit_space(g).classes,
        stabilizers: s.groups.iter().map(|k| k.short_name()).collect(),
        fibrating: is_fibrating(g),
        kernel_arrows: ker.n_arrows(),
        inertia_objects: i.n_objects(),
        inertia_arrows: i.n_arrows(),
    }
}

/// Stabiliser order at the first point of each orbit, sorted.
pub fn stabilizer_profile(a: &GroupoidAction) -> Vec<usize> {
    let mut p: Vec<usize> = a
        .orbits()
        .iter()
        .map(|o| a.acting_on(o[0]).iter().filter(|&&g| a.act(g, o[0]) == o[0]).count())
        .collect();
    p.sort_unstable();
    p
}

/// A left action `Y` of `H` read as a bibundle `H → Pt`.
fn as_bibundle(y: &GroupoidAction) -> Result<Bibundle> {
    let pt = Arc::new(point());
    let right = GroupoidAction::new(
        pt.clone(),
        Side::Right,
        y.carrier().to_vec(),
        vec![Obj(0); y.len()],
        (0..y.len()).map(|x| ((pt.unit(Obj(0)), x), x)),
    )?;
    Bibundle::new(y.clone(), right)
}

/// Carries a left `H`-action `Y` along a biprincipal `b: G → H` to the left
/// `G`-action on `X ⊗_H Y`.
pub fn transport_action(b: &Bibundle, y: &GroupoidAction) -> Result<GroupoidAction> {
    if !b.is_biprincipal() {
        return Err(GpdError::NotBiprincipal("transport needs a biprincipal bibundle".into()));
    }
    if y.side() != Side::Left || !crate::gpd::same_groupoid(y.actor(), b.target()) {
        return Err(GpdError::BoundaryMismatch("transport needs a left action of the target groupoid".into()));
    }
    y.check()?;
    let out = tensor(b, &as_bibundle(y)?)?.left_action().clone();
    if out.orbits().len() != y.orbits().len() || stabilizer_profile(&out) != stabilizer_profile(y) {
        return Err(GpdError::InvariantBroken("transport changed the orbit or stabiliser data".into()));
    }
    Ok(out)
}

/// An equivariant, anchor-preserving bijection `a → b` between left actions of one groupoid.
pub fn find_action_isomorphism(a: &GroupoidAction, b: &GroupoidAction) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.side() != b.side() || !crate::gpd::same_groupoid(a.actor(), b.actor()) {
        return None;
    }
    let orbits = a.orbits();
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    extend_iso(a, b, &orbits, 0, &mut map, &mut used).then_some(map)
}

fn extend_iso(
    a: &GroupoidAction,
    b: &GroupoidAction,
    orbits: &[Vec<usize>],
    i: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(orbit) = orbits.get(i) else { return true };
    let x = orbit[0];
    for y in 0..b.len() {
        if used[y] || b.anchor(y) != a.anchor(x) {
            continue;
        }
        let mut assigned = Vec::new();
        let mut ok = true;
        for &g in a.acting_on(x) {
            let (p, q) = (a.act(g, x), b.act(g, y));
            if map[p] == usize::MAX && !used[q] {
                map[p] = q;
                used[q] = true;
                assigned.push(p);
            } else if map[p] != q {
                ok = false;
                break;
            }
        }
        if ok && extend_iso(a, b, orbits, i + 1, map, used) {
            return true;
        }
        for p in assigned {
            used[map[p]] = false;
            map[p] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bibundle::{check_principality, identity_bibundle};
    use crate::gpd::{cyclic_groupoid, discrete, group_groupoid, pair};

    fn arc(g: FiniteGroupoid) -> Arc<FiniteGroupoid> {
        Arc::new(g)
    }

    fn swap_action_groupoid() -> Arc<FiniteGroupoid> {
        let c2 = arc(cyclic_groupoid(2));
        let t = c2.arr_by_label("t").unwrap();
        let act = GroupoidAction::new(
            c2.clone(),
            Side::Left,
            vec!["0".into(), "1".into()],
            vec![Obj(0); 2],
            [((c2.unit(Obj(0)), 0), 0), ((c2.unit(Obj(0)), 1), 1), ((t, 0), 1), ((t, 1), 0)],
        )
        .unwrap();
        act.action_groupoid().unwrap().0
    }

    #[test]
    fn orbit_spaces() {
        assert_eq!(orbit_space(&pair(2)).len(), 1);
        assert_eq!(orbit_space(&discrete(3)).len(), 3);
        assert_eq!(orbit_space(&swap_action_groupoid()).len(), 1);
    }

    #[test]
    fn fibrating() {
        assert!(is_fibrating(&arc(pair(3))));
        assert!(is_fibrating(&arc(cyclic_groupoid(2))));
        assert!(!is_fibrating(&arc(discrete(2))));
    }

    #[test]
    fn kernels() {
        let (k, incl) = kernel_groupoid(&arc(pair(2)));
        assert_eq!((k.n_objects(), k.n_arrows()), (2, 2));
        incl.check().unwrap();
        assert_eq!(kernel_groupoid(&arc(cyclic_groupoid(2))).0.n_arrows(), 2);
        assert_eq!(kernel_groupoid(&swap_action_groupoid()).0.n_arrows(), 2);
    }

    #[test]
    fn inertia_groupoids() {
        let i = inertia_groupoid(&point());
        assert_eq!((i.n_objects(), i.n_arrows()), (1, 1));
        let i = inertia_groupoid(&cyclic_groupoid(2));
        assert_eq!((i.n_objects(), i.n_arrows()), (2, 4));
        assert!(i.objects().all(|x| i.automorphisms(x).len() == 2));
        let i = inertia_groupoid(&pair(2));
        assert_eq!((i.n_objects(), i.n_arrows()), (2, 4));
        assert!(i.check_axioms().is_ok());
        // conjugacy classes of S3 are the orbits of its inertia groupoid
        let s3 = inertia_groupoid(&group_groupoid(&FiniteGroup::symmetric(3)));
        assert_eq!(orbit_space(&s3).len(), 3);
    }

    #[test]
    fn decisions() {
        let bc2 = arc(cyclic_groupoid(2));
        let w = are_morita_equivalent(&bc2, &bc2).unwrap();
        assert!(check_principality(w.bibundle().unwrap()).flags.biprincipal());
        let w = are_morita_equivalent(&bc2, &arc(point())).unwrap();
        assert_eq!(w.to_string(), "NOT equivalent: stabilizer C2 vs trivial");
        let w = are_morita_equivalent(&arc(pair(7)), &arc(point())).unwrap();
        assert!(w.bibundle().unwrap().is_biprincipal());
        assert_eq!(w.bibundle().unwrap().len(), 7);
        let w = are_morita_equivalent(&arc(discrete(2)), &arc(discrete(3))).unwrap();
        assert_eq!(w.to_string(), "NOT equivalent: orbit count 2 vs 3");
    }

    #[test]
    fn witness_through_nontrivial_isomorphism() {
        let c3 = arc(cyclic_groupoid(3));
        let g = arc(crate::gpd::disjoint_union(&[&pair(2), &cyclic_groupoid(3)]));
        let h = arc(crate::gpd::disjoint_union(&[&c3, &point()]));
        let w = are_morita_equivalent(&g, &h).unwrap();
        let b = w.bibundle().unwrap();
        b.check().unwrap();
        assert!(b.is_biprincipal());
    }

    #[test]
    fn inertia_span_legs() {
        let bc2 = arc(cyclic_groupoid(2));
        // the weak pullback of id_BC2 has one object per element of C2
        let s = inertia_span(&Functor::identity(&bc2)).unwrap();
        assert_eq!(s.apex.groupoid.n_objects(), 4);
        for leg in [&s.left, &s.right] {
            assert!(crate::gpd::check_subductive_weak_equivalence(leg));
            assert!(leg.is_surjective_on_arrows());
        }
        let p2 = arc(pair(2));
        let s = inertia_span(&Functor::constant(&p2, &arc(point()), Obj(0))).unwrap();
        for leg in [&s.left, &s.right] {
            assert!(crate::gpd::check_subductive_weak_equivalence(leg));
        }
        assert_eq!(s.right.cod().n_objects(), 1);
        assert!(inertia_span(&Functor::constant(&arc(point()), &bc2, Obj(0))).is_err());
    }

    #[test]
    fn transport_along_identity_and_back() {
        let bc2 = arc(cyclic_groupoid(2));
        let id = identity_bibundle(&bc2);
        let y = id.left_action().clone();
        let z = transport_action(&id, &y).unwrap();
        assert!(find_action_isomorphism(&y, &z).is_some());

        let p2 = arc(pair(2));
        let b = opposite(&bibundlise(&Functor::constant(&p2, &arc(point()), Obj(0))));
        let pt_self = identity_bibundle(b.target()).left_action().clone();
        let moved = transport_action(&b, &pt_self).unwrap();
        assert_eq!(moved.len(), 2);
        let back = transport_action(&opposite(&b), &moved).unwrap();
        assert!(find_action_isomorphism(&pt_self, &back).is_some());
    }
}
