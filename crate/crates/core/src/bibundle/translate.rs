//! Passing between spans, anafunctors and bibundles.

use rustc_hash::FxHashMap as HashMap;
use std::sync::Arc;

use super::{bibundlise, bibundlise_index, Bibundle, BiequivariantMap, GroupoidAction, Side};
use crate::ana::{Anafunctor, Transformation};
use crate::error::{GpdError, Result};
use crate::fractions::{GeneralizedMorphism, TwoCellDiagram};
use crate::gpd::{
    assemble, enforce_cap, size_cap, tuple_label, weak_pullback, Arr, FiniteGroupoid, Functor,
    NaturalTransformation, Obj,
};

/// The anafunctor `G ←l̂ G ⋉ X ⋊ H →r̂ H` of a right-principal bibundle.
///
/// Arrows are `((g, h), x): x → g·x·h⁻¹`.
#[derive(Clone, Debug)]
pub struct ActionAnafunctor {
    pub anafunctor: Anafunctor,
    keys: Vec<(Arr, Arr, usize)>,
    arr_of: HashMap<(Arr, Arr, usize), Arr>,
}

impl ActionAnafunctor {
    pub fn apex(&self) -> &Arc<FiniteGroupoid> {
        self.anafunctor.apex()
    }

    /// The arrow `((g, h), x)`.
    pub fn arrow(&self, g: Arr, h: Arr, x: usize) -> Option<Arr> {
        self.arr_of.get(&(g, h, x)).copied()
    }

    pub fn arrow_key(&self, a: Arr) -> (Arr, Arr, usize) {
        self.keys[a.0]
    }
}

pub fn bibundle_to_anafunctor(b: &Bibundle) -> Result<ActionAnafunctor> {
    b.require_right_principal()?;
    let (g, h) = (b.source().clone(), b.target().clone());
    let objects: Vec<(usize, String)> = (0..b.len()).map(|x| (x, b.carrier()[x].clone())).collect();
    let mut arrows = Vec::new();
    for x in 0..b.len() {
        for &a in g.arrows_from(b.l(x)) {
            for &c in h.arrows_from(b.r(x)) {
                let label = tuple_label(&[&tuple_label(&[g.arr_label(a), h.arr_label(c)]), &b.carrier()[x]]);
                arrows.push(((a, c, x), label));
            }
        }
    }
    enforce_cap("action groupoid", arrows.len(), size_cap())?;
    let target = |&(a, c, x): &(Arr, Arr, usize)| {
        let y = b.act_right(x, h.inv(c)).expect("right action defined");
        b.act_left(a, y).expect("left action defined")
    };
    let k = assemble(
        objects,
        arrows,
        |&(_, _, x)| x,
        target,
        |&x| (g.unit(b.l(x)), h.unit(b.r(x)), x),
        |key| (g.inv(key.0), h.inv(key.1), target(key)),
        |&(a2, c2, _), &(a1, c1, x)| (g.comp(a2, a1), h.comp(c2, c1), x),
    );
    let apex = Arc::new(k.groupoid);
    let lhat = Functor::new_unchecked(
        apex.clone(),
        g.clone(),
        k.okeys.iter().map(|&x| b.l(x)).collect(),
        k.akeys.iter().map(|k| k.0).collect(),
    );
    let rhat = Functor::new_unchecked(
        apex.clone(),
        h.clone(),
        k.okeys.iter().map(|&x| b.r(x)).collect(),
        k.akeys.iter().map(|k| k.1).collect(),
    );
    let anafunctor = Anafunctor::new(lhat, rhat)?;
    Ok(ActionAnafunctor { anafunctor, keys: k.akeys, arr_of: k.arr_of })
}

/// Classes `[g, y, h]` of `g: x → φ(y)`, `h: ψ(y) → z` under
/// `[g, y, h] ~ [φ(k)⁻¹·g, src k, h·ψ(k)]`.
struct GmData {
    bibundle: Bibundle,
    reps: Vec<(Arr, Obj, Arr)>,
    class_of: HashMap<(Arr, Obj, Arr), usize>,
}

fn gm_data(gm: &GeneralizedMorphism) -> Result<GmData> {
    let (phi, psi) = (gm.left(), gm.right());
    let (g, k, h) = (gm.source().clone(), gm.apex().clone(), gm.target().clone());
    let mut triples = Vec::new();
    for y in k.objects() {
        for &a in g.arrows_into(phi.obj(y)) {
            for &c in h.arrows_from(psi.obj(y)) {
                triples.push((a, y, c));
            }
        }
    }
    enforce_cap("span bibundle", triples.len(), size_cap())?;
    triples.sort_unstable();
    let mut class_of = HashMap::default();
    let mut reps = Vec::new();
    for &(a, y, c) in &triples {
        if class_of.contains_key(&(a, y, c)) {
            continue;
        }
        let cls = reps.len();
        reps.push((a, y, c));
        for &m in k.arrows_into(y) {
            let t = (g.comp(g.inv(phi.arr(m)), a), k.src(m), h.comp(c, psi.arr(m)));
            class_of.insert(t, cls);
        }
    }
    let carrier: Vec<String> = reps
        .iter()
        .map(|&(a, y, c)| format!("[{},{},{}]", g.arr_label(a), k.obj_label(y), h.arr_label(c)))
        .collect();
    let left = GroupoidAction::from_fn(&g, Side::Left, carrier.clone(), reps.iter().map(|r| g.src(r.0)).collect(), |a, i| {
        let (x, y, c) = reps[i];
        class_of[&(g.comp(x, g.inv(a)), y, c)]
    });
    let right = GroupoidAction::from_fn(&h, Side::Right, carrier, reps.iter().map(|r| h.trg(r.2)).collect(), |a, i| {
        let (x, y, c) = reps[i];
        class_of[&(x, y, h.comp(h.inv(a), c))]
    });
    Ok(GmData { bibundle: Bibundle::new_unchecked(left, right), reps, class_of })
}

/// A bibundle built from a span, with the diagram connecting the span to
/// the action anafunctor of the bibundle.
#[derive(Clone, Debug)]
pub struct GmBibundle {
    pub bibundle: Bibundle,
    pub action: ActionAnafunctor,
    pub witness: TwoCellDiagram,
}

pub fn gm_to_bibundle(gm: &GeneralizedMorphism) -> Result<GmBibundle> {
    let data = gm_data(gm)?;
    let (phi, psi) = (gm.left(), gm.right());
    let (g, k, h) = (gm.source(), gm.apex(), gm.target());
    let action = bibundle_to_anafunctor(&data.bibundle)?;
    let point = |y: Obj| data.class_of[&(g.unit(phi.obj(y)), y, h.unit(psi.obj(y)))];
    let iota = Functor::from_fns(
        k,
        action.apex(),
        |y| Obj(point(y)),
        |m| action.arrow(phi.arr(m), psi.arr(m), point(k.src(m))).expect("arrow of the action groupoid"),
    );
    let ana = &action.anafunctor;
    let s1 = NaturalTransformation::new_unchecked(phi.clone(), ana.left().after(&iota), k.objects().map(|y| g.unit(phi.obj(y))).collect());
    let s2 = NaturalTransformation::new_unchecked(psi.clone(), ana.right().after(&iota), k.objects().map(|y| h.unit(psi.obj(y))).collect());
    let witness = TwoCellDiagram::new(gm.clone(), ana.as_gm().clone(), Functor::identity(k), iota, s1, s2)?;
    Ok(GmBibundle { bibundle: data.bibundle, action, witness })
}

/// The bi-equivariant bijection induced by a diagram between spans.
///
/// `[g, y, h]` is moved along any `k: α(m) → y` and then across the
/// diagram to `[S₁(m)·φ(k)⁻¹·g, α′(m), h·ψ(k)·S₂(m)⁻¹]`; every choice of
/// `(m, k)` is checked to give the same class.
pub fn twocell_to_biequiv(c: &TwoCellDiagram) -> Result<BiequivariantMap> {
    let (a, b) = (c.source(), c.target());
    let xa = gm_data(a)?;
    let xb = gm_data(b)?;
    let (g, k, h) = (a.source(), a.apex(), a.target());
    let m_gpd = c.alpha().dom();
    let mut map = Vec::with_capacity(xa.reps.len());
    for &(x, y, z) in &xa.reps {
        let mut found = None;
        for m in m_gpd.objects() {
            for &kk in k.hom(c.alpha().obj(m), y) {
                let g1 = g.comp_all(&[c.s1().at(m), g.inv(a.left().arr(kk)), x]);
                let h1 = h.comp_all(&[z, a.right().arr(kk), h.inv(c.s2().at(m))]);
                let img = *xb
                    .class_of
                    .get(&(g1, c.alpha2().obj(m), h1))
                    .ok_or_else(|| GpdError::InvariantBroken("transported triple is not an element".into()))?;
                match found {
                    None => found = Some(img),
                    Some(p) if p != img => {
                        return Err(GpdError::InvariantBroken("induced map depends on the chosen lift".into()))
                    }
                    _ => {}
                }
            }
        }
        map.push(found.ok_or_else(|| GpdError::InvariantBroken("mediator misses a component".into()))?);
    }
    let out = BiequivariantMap::new(xa.bibundle, xb.bibundle, map)?;
    if !out.is_bijective() {
        return Err(GpdError::NotBijective("map induced by a 2-cell".into()));
    }
    Ok(out)
}

/// `S(x, w) = d_H(w, α(x))`, so that `w·S(x, w) = α(x)`.
pub fn biequiv_to_transformation(m: &BiequivariantMap) -> Result<Transformation> {
    if !m.is_bijective() {
        return Err(GpdError::NotBijective("only bijections give transformations".into()));
    }
    let (x, y) = (m.source(), m.target());
    let ax = bibundle_to_anafunctor(x)?;
    let ay = bibundle_to_anafunctor(y)?;
    Transformation::from_fn(&ax.anafunctor, &ay.anafunctor, |p, w| {
        y.right_division(w.0, m.apply(p.0))
            .ok_or_else(|| GpdError::InvariantBroken("division undefined on a fibre pair".into()))
    })
}

/// `α(x) = w·U(x, w)` for any `w` over `l(x)`; all choices are checked.
pub fn transformation_to_biequiv(x: &Bibundle, y: &Bibundle, u: &Transformation) -> Result<BiequivariantMap> {
    let ax = bibundle_to_anafunctor(x)?;
    let ay = bibundle_to_anafunctor(y)?;
    if *u.source() != ax.anafunctor || *u.target() != ay.anafunctor {
        return Err(GpdError::BoundaryMismatch("transformation is not between the action anafunctors".into()));
    }
    let mut map = Vec::with_capacity(x.len());
    for p in 0..x.len() {
        let mut found = None;
        for w in (0..y.len()).filter(|&w| y.l(w) == x.l(p)) {
            let img = y.act_right(w, u.at(Obj(p), Obj(w)).expect("pair in pullback")).expect("action defined");
            match found {
                None => found = Some(img),
                Some(q) if q != img => {
                    return Err(GpdError::InvariantBroken("induced map depends on the chosen point".into()))
                }
                _ => {}
            }
        }
        map.push(found.ok_or_else(|| GpdError::InvariantBroken("empty fibre".into()))?);
    }
    BiequivariantMap::new(x.clone(), y.clone(), map)
}

/// `[g, y, h] ↦ (src g, (h·φ(g))⁻¹)` from the bibundle of `spanise(φ)` to `B(φ)`.
pub fn spanise_bibundle_iso(phi: &Functor) -> Result<BiequivariantMap> {
    let data = gm_data(&crate::fractions::spanise(phi))?;
    let target = bibundlise(phi);
    let index: HashMap<(Obj, Arr), usize> =
        bibundlise_index(phi).into_iter().enumerate().map(|(i, p)| (p, i)).collect();
    let (g, h) = (phi.dom(), phi.cod());
    let map = data.reps.iter().map(|&(a, _, c)| index[&(g.src(a), h.inv(h.comp(c, phi.arr(a))))]).collect();
    BiequivariantMap::new(data.bibundle, target, map)
}

/// `[g, w, h] ↦ g⁻¹·w·h⁻¹` from the round trip through the action anafunctor back to `b`.
pub fn bibundle_roundtrip_iso(b: &Bibundle) -> Result<BiequivariantMap> {
    let a = bibundle_to_anafunctor(b)?;
    let data = gm_data(a.anafunctor.as_gm())?;
    let (g, h) = (b.source(), b.target());
    let map = data
        .reps
        .iter()
        .map(|&(x, w, z)| {
            let v = b.act_right(w.0, h.inv(z)).expect("right action defined");
            b.act_left(g.inv(x), v).expect("left action defined")
        })
        .collect();
    BiequivariantMap::new(data.bibundle, b.clone(), map)
}

/// `((g′, h′), (x, h)) ↦ (g′, h⁻¹, h′)` from the action groupoid of `B(φ)`
/// onto the apex of the anafunctisation of `φ`.
pub fn bibundlise_action_iso(phi: &Functor) -> Result<Functor> {
    let a = bibundle_to_anafunctor(&bibundlise(phi))?;
    let wp = weak_pullback(phi, &Functor::identity(phi.cod()))?;
    let pts = bibundlise_index(phi);
    let h = phi.cod();
    let iso = Functor::from_fns(
        a.apex(),
        &wp.groupoid,
        |p| {
            let (x, k) = pts[p.0];
            wp.obj(x, h.inv(k), h.src(k)).expect("triple of the weak pullback")
        },
        |arr| {
            let (g2, h2, p) = a.arrow_key(arr);
            wp.arr(g2, h.inv(pts[p].1), h2).expect("arrow of the weak pullback")
        },
    );
    iso.check()?;
    Ok(iso)
}
