use rustc_hash::FxHashMap as HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use super::functor::{same_groupoid, Functor, NaturalTransformation};
use super::groupoid::{assemble, tuple_label, Arr, FiniteGroupoid, Obj};
use crate::error::{GpdError, Result};

pub const DEFAULT_SIZE_CAP: usize = 100_000;

static SIZE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_SIZE_CAP);

/// Largest number of arrows (or carrier points) a pullback or tensor may produce.
pub fn size_cap() -> usize {
    SIZE_CAP.load(Ordering::Relaxed)
}

pub fn set_size_cap(cap: usize) {
    SIZE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn enforce_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(GpdError::SizeCapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

fn check_cospan(phi: &Functor, psi: &Functor) -> Result<()> {
    if same_groupoid(phi.cod(), psi.cod()) {
        Ok(())
    } else {
        Err(GpdError::BoundaryMismatch("pullback legs have different codomains".into()))
    }
}

/// `G ×_{φ,ψ} H` with its two projections.
#[derive(Clone, Debug)]
pub struct StrictPullback {
    pub groupoid: Arc<FiniteGroupoid>,
    pub pr1: Functor,
    pub pr2: Functor,
    obj_of: HashMap<(Obj, Obj), Obj>,
    arr_of: HashMap<(Arr, Arr), Arr>,
}

impl StrictPullback {
    pub fn obj(&self, x: Obj, y: Obj) -> Option<Obj> {
        self.obj_of.get(&(x, y)).copied()
    }

    pub fn arr(&self, g: Arr, h: Arr) -> Option<Arr> {
        self.arr_of.get(&(g, h)).copied()
    }

    pub fn obj_pair(&self, o: Obj) -> (Obj, Obj) {
        (self.pr1.obj(o), self.pr2.obj(o))
    }

    pub fn arr_pair(&self, a: Arr) -> (Arr, Arr) {
        (self.pr1.arr(a), self.pr2.arr(a))
    }
}

pub fn strict_pullback(phi: &Functor, psi: &Functor) -> Result<StrictPullback> {
    strict_pullback_with_cap(phi, psi, size_cap())
}

pub fn strict_pullback_with_cap(phi: &Functor, psi: &Functor, cap: usize) -> Result<StrictPullback> {
    check_cospan(phi, psi)?;
    let (g, h) = (phi.dom().clone(), psi.dom().clone());
    let mut h_objs: HashMap<Obj, Vec<Obj>> = HashMap::default();
    for y in h.objects() {
        h_objs.entry(psi.obj(y)).or_default().push(y);
    }
    let mut h_arrs: HashMap<Arr, Vec<Arr>> = HashMap::default();
    for b in h.arrows() {
        h_arrs.entry(psi.arr(b)).or_default().push(b);
    }
    let size: usize = g.arrows().map(|a| h_arrs.get(&phi.arr(a)).map_or(0, Vec::len)).sum();
    enforce_cap("strict pullback", size, cap)?;
    let mut objects = Vec::new();
    for x in g.objects() {
        for &y in h_objs.get(&phi.obj(x)).map_or(&[][..], Vec::as_slice) {
            objects.push(((x, y), tuple_label(&[g.obj_label(x), h.obj_label(y)])));
        }
    }
    let mut arrows = Vec::with_capacity(size);
    for a in g.arrows() {
        for &b in h_arrs.get(&phi.arr(a)).map_or(&[][..], Vec::as_slice) {
            arrows.push(((a, b), tuple_label(&[g.arr_label(a), h.arr_label(b)])));
        }
    }
    let k = assemble(
        objects,
        arrows,
        |&(a, b)| (g.src(a), h.src(b)),
        |&(a, b)| (g.trg(a), h.trg(b)),
        |&(x, y)| (g.unit(x), h.unit(y)),
        |&(a, b)| (g.inv(a), h.inv(b)),
        |&(a2, b2), &(a1, b1)| (g.comp(a2, a1), h.comp(b2, b1)),
    );
    let p = Arc::new(k.groupoid);
    let pr1 = Functor::new_unchecked(p.clone(), g.clone(), k.okeys.iter().map(|o| o.0).collect(), k.akeys.iter().map(|a| a.0).collect());
    let pr2 = Functor::new_unchecked(p.clone(), h.clone(), k.okeys.iter().map(|o| o.1).collect(), k.akeys.iter().map(|a| a.1).collect());
    Ok(StrictPullback { groupoid: p, pr1, pr2, obj_of: k.obj_of, arr_of: k.arr_of })
}

/// `G ×ʷ_{φ,ψ} H`: objects `(x, k, y)` with `k: φ(x) → ψ(y)`.
#[derive(Clone, Debug)]
pub struct WeakPullback {
    pub groupoid: Arc<FiniteGroupoid>,
    pub pr1: Functor,
    pub pr3: Functor,
    /// The natural transformation `φ∘pr1 ⇒ ψ∘pr3`, `(x, k, y) ↦ k`.
    pub pr2: NaturalTransformation,
    phi: Functor,
    psi: Functor,
    obj_triples: Vec<(Obj, Arr, Obj)>,
    arr_triples: Vec<(Arr, Arr, Arr)>,
    obj_of: HashMap<(Obj, Arr, Obj), Obj>,
    arr_of: HashMap<(Arr, Arr, Arr), Arr>,
}

impl WeakPullback {
    pub fn phi(&self) -> &Functor {
        &self.phi
    }

    pub fn psi(&self) -> &Functor {
        &self.psi
    }

    pub fn obj(&self, x: Obj, k: Arr, y: Obj) -> Option<Obj> {
        self.obj_of.get(&(x, k, y)).copied()
    }

    pub fn arr(&self, g: Arr, k: Arr, h: Arr) -> Option<Arr> {
        self.arr_of.get(&(g, k, h)).copied()
    }

    pub fn obj_triple(&self, o: Obj) -> (Obj, Arr, Obj) {
        self.obj_triples[o.0]
    }

    pub fn arr_triple(&self, a: Arr) -> (Arr, Arr, Arr) {
        self.arr_triples[a.0]
    }

    /// The unique `θ` with `pr1∘θ = α`, `pr3∘θ = β` and `pr2 θ = T`.
    pub fn mediator(&self, alpha: &Functor, beta: &Functor, t: &NaturalTransformation) -> Result<Functor> {
        if !same_groupoid(alpha.dom(), beta.dom())
            || *t.from() != self.phi.after(alpha)
            || *t.to() != self.psi.after(beta)
        {
            return Err(GpdError::BoundaryMismatch("mediator needs T: φα ⇒ ψβ".into()));
        }
        let l = alpha.dom();
        let theta = Functor::from_fns(
            l,
            &self.groupoid,
            |x| self.obj(alpha.obj(x), t.at(x), beta.obj(x)).expect("object triple exists"),
            |a| self.arr(alpha.arr(a), t.at(l.src(a)), beta.arr(a)).expect("arrow triple exists"),
        );
        debug_assert!(self.pr1.after(&theta) == *alpha && self.pr3.after(&theta) == *beta);
        Ok(theta)
    }
}

pub fn weak_pullback(phi: &Functor, psi: &Functor) -> Result<WeakPullback> {
    weak_pullback_with_cap(phi, psi, size_cap())
}

pub fn weak_pullback_with_cap(phi: &Functor, psi: &Functor, cap: usize) -> Result<WeakPullback> {
    check_cospan(phi, psi)?;
    let (g, h, k) = (phi.dom().clone(), psi.dom().clone(), phi.cod().clone());
    let mut size = 0usize;
    for x in g.objects() {
        for y in h.objects() {
            size += g.arrows_from(x).len() * h.arrows_from(y).len() * k.hom(phi.obj(x), psi.obj(y)).len();
        }
    }
    enforce_cap("weak pullback", size, cap)?;
    let mut objects = Vec::new();
    for x in g.objects() {
        for y in h.objects() {
            for &c in k.hom(phi.obj(x), psi.obj(y)) {
                objects.push(((x, c, y), tuple_label(&[g.obj_label(x), k.arr_label(c), h.obj_label(y)])));
            }
        }
    }
    let mut arrows = Vec::with_capacity(size);
    for a in g.arrows() {
        for b in h.arrows() {
            for &c in k.hom(phi.obj(g.src(a)), psi.obj(h.src(b))) {
                arrows.push(((a, c, b), tuple_label(&[g.arr_label(a), k.arr_label(c), h.arr_label(b)])));
            }
        }
    }
    let target_k = |&(a, c, b): &(Arr, Arr, Arr)| k.comp_all(&[psi.arr(b), c, k.inv(phi.arr(a))]);
    let kd = assemble(
        objects,
        arrows,
        |&(a, c, b)| (g.src(a), c, h.src(b)),
        |t| (g.trg(t.0), target_k(t), h.trg(t.2)),
        |&(x, c, y)| (g.unit(x), c, h.unit(y)),
        |t| (g.inv(t.0), target_k(t), h.inv(t.2)),
        |&(a2, _, b2), &(a1, c1, b1)| (g.comp(a2, a1), c1, h.comp(b2, b1)),
    );
    let p = Arc::new(kd.groupoid);
    let pr1 = Functor::new_unchecked(p.clone(), g.clone(), kd.okeys.iter().map(|o| o.0).collect(), kd.akeys.iter().map(|a| a.0).collect());
    let pr3 = Functor::new_unchecked(p.clone(), h.clone(), kd.okeys.iter().map(|o| o.2).collect(), kd.akeys.iter().map(|a| a.2).collect());
    let pr2 = NaturalTransformation::new_unchecked(phi.after(&pr1), psi.after(&pr3), kd.okeys.iter().map(|o| o.1).collect());
    Ok(WeakPullback {
        groupoid: p,
        pr1,
        pr3,
        pr2,
        phi: phi.clone(),
        psi: psi.clone(),
        obj_triples: kd.okeys,
        arr_triples: kd.akeys,
        obj_of: kd.obj_of,
        arr_of: kd.arr_of,
    })
}

/// Free-function form of [`WeakPullback::mediator`].
pub fn weak_pullback_mediator(
    wp: &WeakPullback,
    alpha: &Functor,
    beta: &Functor,
    t: &NaturalTransformation,
) -> Result<Functor> {
    wp.mediator(alpha, beta, t)
}

/// The inclusion of the strict pullback into the weak one, `(x, y) ↦ (x, unit φ(x), y)`.
pub fn strict_into_weak(sp: &StrictPullback, wp: &WeakPullback) -> Result<Functor> {
    let t = NaturalTransformation::identity(&wp.phi.after(&sp.pr1));
    if *t.to() != wp.psi.after(&sp.pr2) {
        return Err(GpdError::BoundaryMismatch("pullbacks over different cospans".into()));
    }
    wp.mediator(&sp.pr1, &sp.pr2, &t)
}

/// `H[X]` for `f: X → H₀`: objects `X`, arrows `(x1, x2, h)` with `h: f(x1) → f(x2)`.
/// Returns the groupoid and the comparison functor `H[X] → H`.
pub fn base_change<S: AsRef<str>>(h: &Arc<FiniteGroupoid>, xs: &[S], f: &[Obj]) -> Result<(Arc<FiniteGroupoid>, Functor)> {
    if xs.len() != f.len() {
        return Err(GpdError::BoundaryMismatch("base change map length".into()));
    }
    let labels: Vec<String> = xs.iter().map(|s| s.as_ref().to_string()).collect();
    super::groupoid::check_unique(&labels)?;
    let n = labels.len();
    let objects = (0..n).map(|i| (i, labels[i].clone())).collect();
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for &c in h.hom(f[i], f[j]) {
                arrows.push(((i, j, c), tuple_label(&[&labels[i], &labels[j], h.arr_label(c)])));
            }
        }
    }
    let kd = assemble(
        objects,
        arrows,
        |&(i, _, _)| i,
        |&(_, j, _)| j,
        |&i| (i, i, h.unit(f[i])),
        |&(i, j, c)| (j, i, h.inv(c)),
        |&(_, k, c2), &(i, _, c1)| (i, k, h.comp(c2, c1)),
    );
    let g = Arc::new(kd.groupoid);
    let cmp = Functor::new_unchecked(g.clone(), h.clone(), kd.okeys.iter().map(|&i| f[i]).collect(), kd.akeys.iter().map(|a| a.2).collect());
    Ok((g, cmp))
}

/// For any functor `φ: G → H`, the comparison `G → H[G₀]`, `g ↦ (src g, trg g, φ g)`.
/// It is an isomorphism exactly when `φ` is fully faithful.
pub fn base_change_comparison(phi: &Functor) -> Result<(Arc<FiniteGroupoid>, Functor)> {
    let g = phi.dom();
    let (bc, _) = base_change(phi.cod(), g.obj_labels(), phi.obj_map())?;
    let h = phi.cod();
    let cmp = Functor::from_fns(g, &bc, |x| x, |a| {
        let label = tuple_label(&[g.obj_label(g.src(a)), g.obj_label(g.trg(a)), h.arr_label(phi.arr(a))]);
        bc.arr_by_label(&label).expect("base change arrow")
    });
    Ok((bc, cmp))
}
