use std::sync::Arc;

use super::groupoid::{Arr, FiniteGroupoid, Obj};
use crate::error::{GpdError, Result};

/// True when two shared groupoids are the same value.
pub fn same_groupoid(a: &Arc<FiniteGroupoid>, b: &Arc<FiniteGroupoid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor between finite groupoids, stored as object and arrow tables.
#[derive(Clone, Debug)]
pub struct Functor {
    dom: Arc<FiniteGroupoid>,
    cod: Arc<FiniteGroupoid>,
    obj: Vec<Obj>,
    arr: Vec<Arr>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.obj == other.obj
            && self.arr == other.arr
            && same_groupoid(&self.dom, &other.dom)
            && same_groupoid(&self.cod, &other.cod)
    }
}

impl Eq for Functor {}

impl Functor {
    /// Validated constructor: checks functoriality by enumeration.
    pub fn new(dom: Arc<FiniteGroupoid>, cod: Arc<FiniteGroupoid>, obj: Vec<Obj>, arr: Vec<Arr>) -> Result<Self> {
        let f = Functor { dom, cod, obj, arr };
        f.check()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(dom: Arc<FiniteGroupoid>, cod: Arc<FiniteGroupoid>, obj: Vec<Obj>, arr: Vec<Arr>) -> Self {
        debug_assert_eq!(obj.len(), dom.n_objects());
        debug_assert_eq!(arr.len(), dom.n_arrows());
        Functor { dom, cod, obj, arr }
    }

    pub(crate) fn from_fns(
        dom: &Arc<FiniteGroupoid>,
        cod: &Arc<FiniteGroupoid>,
        fo: impl Fn(Obj) -> Obj,
        fa: impl Fn(Arr) -> Arr,
    ) -> Self {
        let obj = dom.objects().map(fo).collect();
        let arr = dom.arrows().map(fa).collect();
        Functor { dom: dom.clone(), cod: cod.clone(), obj, arr }
    }

    pub fn identity(g: &Arc<FiniteGroupoid>) -> Self {
        Self::from_fns(g, g, |x| x, |a| a)
    }

    /// The functor sending everything to the object `y` and its unit.
    pub fn constant(dom: &Arc<FiniteGroupoid>, cod: &Arc<FiniteGroupoid>, y: Obj) -> Self {
        let u = cod.unit(y);
        Self::from_fns(dom, cod, |_| y, |_| u)
    }

    pub fn dom(&self) -> &Arc<FiniteGroupoid> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FiniteGroupoid> {
        &self.cod
    }

    pub fn obj(&self, x: Obj) -> Obj {
        self.obj[x.0]
    }

    pub fn arr(&self, a: Arr) -> Arr {
        self.arr[a.0]
    }

    pub fn obj_map(&self) -> &[Obj] {
        &self.obj
    }

    pub fn arr_map(&self) -> &[Arr] {
        &self.arr
    }

    /// `self ∘ f`. Panics if `f` does not land in the domain of `self`.
    pub fn after(&self, f: &Functor) -> Functor {
        assert!(same_groupoid(f.cod(), &self.dom), "functor composition boundary mismatch");
        Functor {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            obj: f.obj.iter().map(|&x| self.obj(x)).collect(),
            arr: f.arr.iter().map(|&a| self.arr(a)).collect(),
        }
    }

    pub fn is_surjective_on_objects(&self) -> bool {
        let mut hit = vec![false; self.cod.n_objects()];
        for &y in &self.obj {
            hit[y.0] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_surjective_on_arrows(&self) -> bool {
        let mut hit = vec![false; self.cod.n_arrows()];
        for &b in &self.arr {
            hit[b.0] = true;
        }
        hit.into_iter().all(|b| b)
    }

    /// Is this functor an isomorphism of groupoids?
    pub fn is_isomorphism(&self) -> bool {
        self.dom.n_objects() == self.cod.n_objects()
            && self.dom.n_arrows() == self.cod.n_arrows()
            && self.is_surjective_on_objects()
            && self.is_surjective_on_arrows()
    }

    pub fn check(&self) -> Result<()> {
        let (g, h) = (&*self.dom, &*self.cod);
        let bad = |m: String| Err(GpdError::NotAFunctor(m));
        if self.obj.len() != g.n_objects() || self.arr.len() != g.n_arrows() {
            return bad("table sizes do not match the domain".into());
        }
        if self.obj.iter().any(|y| y.0 >= h.n_objects()) || self.arr.iter().any(|b| b.0 >= h.n_arrows()) {
            return bad("table entries outside the codomain".into());
        }
        for a in g.arrows() {
            let b = self.arr(a);
            if h.src(b) != self.obj(g.src(a)) || h.trg(b) != self.obj(g.trg(a)) {
                return bad(format!("endpoints of {}", g.arr_label(a)));
            }
            if h.inv(b) != self.arr(g.inv(a)) {
                return bad(format!("inverse of {}", g.arr_label(a)));
            }
        }
        for x in g.objects() {
            if self.arr(g.unit(x)) != h.unit(self.obj(x)) {
                return bad(format!("unit of {}", g.obj_label(x)));
            }
        }
        for (p, q, r) in g.composable_pairs() {
            if h.comp(self.arr(p), self.arr(q)) != self.arr(r) {
                return bad(format!("composite {}∘{}", g.arr_label(p), g.arr_label(q)));
            }
        }
        Ok(())
    }
}

/// A natural transformation `from ⇒ to` between parallel functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalTransformation {
    from: Functor,
    to: Functor,
    comp: Vec<Arr>,
}

impl NaturalTransformation {
    pub fn new(from: Functor, to: Functor, comp: Vec<Arr>) -> Result<Self> {
        let t = NaturalTransformation { from, to, comp };
        t.check()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(from: Functor, to: Functor, comp: Vec<Arr>) -> Self {
        debug_assert_eq!(comp.len(), from.dom().n_objects());
        NaturalTransformation { from, to, comp }
    }

    pub(crate) fn from_fn(from: Functor, to: Functor, f: impl Fn(Obj) -> Arr) -> Self {
        let comp = from.dom().objects().map(f).collect();
        NaturalTransformation { from, to, comp }
    }

    pub fn identity(f: &Functor) -> Self {
        let cod = f.cod().clone();
        Self::from_fn(f.clone(), f.clone(), |x| cod.unit(f.obj(x)))
    }

    pub fn from(&self) -> &Functor {
        &self.from
    }

    pub fn to(&self) -> &Functor {
        &self.to
    }

    pub fn at(&self, x: Obj) -> Arr {
        self.comp[x.0]
    }

    pub fn components(&self) -> &[Arr] {
        &self.comp
    }

    pub fn dom(&self) -> &Arc<FiniteGroupoid> {
        self.from.dom()
    }

    pub fn cod(&self) -> &Arc<FiniteGroupoid> {
        self.from.cod()
    }

    /// Vertical composite `self ∘ s`.
    pub fn after(&self, s: &NaturalTransformation) -> NaturalTransformation {
        assert!(s.to == self.from, "vertical composition boundary mismatch");
        let h = self.cod().clone();
        Self::from_fn(s.from.clone(), self.to.clone(), |x| h.comp(self.at(x), s.at(x)))
    }

    /// `S f`: whiskering by a functor on the domain side.
    pub fn whisker_pre(&self, f: &Functor) -> NaturalTransformation {
        Self::from_fn(self.from.after(f), self.to.after(f), |x| self.at(f.obj(x)))
    }

    /// `φ S`: whiskering by a functor on the codomain side.
    pub fn whisker_post(&self, phi: &Functor) -> NaturalTransformation {
        Self::from_fn(phi.after(&self.from), phi.after(&self.to), |x| phi.arr(self.at(x)))
    }

    pub fn inverse(&self) -> NaturalTransformation {
        let h = self.cod().clone();
        Self::from_fn(self.to.clone(), self.from.clone(), |x| h.inv(self.at(x)))
    }

    pub fn is_identity(&self) -> bool {
        let h = self.cod();
        self.from == self.to && self.from.dom().objects().all(|x| h.is_unit(self.at(x)))
    }

    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(GpdError::NotNatural(m));
        if !same_groupoid(self.from.dom(), self.to.dom()) || !same_groupoid(self.from.cod(), self.to.cod()) {
            return bad("functors are not parallel".into());
        }
        let (g, h) = (self.dom(), self.cod());
        if self.comp.len() != g.n_objects() {
            return bad("component table size".into());
        }
        for x in g.objects() {
            let c = self.at(x);
            if c.0 >= h.n_arrows() || h.src(c) != self.from.obj(x) || h.trg(c) != self.to.obj(x) {
                return bad(format!("component at {}", g.obj_label(x)));
            }
        }
        for a in g.arrows() {
            let lhs = h.comp(self.at(g.trg(a)), self.from.arr(a));
            let rhs = h.comp(self.to.arr(a), self.at(g.src(a)));
            if lhs != rhs {
                return bad(format!("naturality square at {}", g.arr_label(a)));
            }
        }
        Ok(())
    }
}
