//! The bicategory of fractions: spans whose left leg is a weak equivalence,
//! diagram 2-cells, and their compositions.

use std::sync::Arc;

use crate::bibundle::twocell_to_biequiv;
use crate::error::{GpdError, Result};
use crate::gpd::{
    ff_inverse, is_weak_equivalence, same_groupoid, weak_pullback, FiniteGroupoid, Functor, NaturalTransformation,
    Obj, WeakPullback,
};

/// A span `G ←φ K →ψ H` with `φ` a weak equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedMorphism {
    left: Functor,
    right: Functor,
}

impl GeneralizedMorphism {
    pub fn new(left: Functor, right: Functor) -> Result<Self> {
        if !same_groupoid(left.dom(), right.dom()) {
            return Err(GpdError::BoundaryMismatch("span legs must share their apex".into()));
        }
        if !is_weak_equivalence(&left) {
            return Err(GpdError::NotWeakEquivalence("left leg of a generalized morphism".into()));
        }
        Ok(GeneralizedMorphism { left, right })
    }

    pub(crate) fn new_unchecked(left: Functor, right: Functor) -> Self {
        debug_assert!(same_groupoid(left.dom(), right.dom()));
        GeneralizedMorphism { left, right }
    }

    /// The identity span `G ← G → G`.
    pub fn identity(g: &Arc<FiniteGroupoid>) -> Self {
        spanise(&Functor::identity(g))
    }

    pub fn apex(&self) -> &Arc<FiniteGroupoid> {
        self.left.dom()
    }

    pub fn left(&self) -> &Functor {
        &self.left
    }

    pub fn right(&self) -> &Functor {
        &self.right
    }

    pub fn source(&self) -> &Arc<FiniteGroupoid> {
        self.left.cod()
    }

    pub fn target(&self) -> &Arc<FiniteGroupoid> {
        self.right.cod()
    }

    /// Re-checks the constructor invariant.
    pub fn check(&self) -> Result<()> {
        Self::new(self.left.clone(), self.right.clone()).map(|_| ())
    }
}

/// A diagram 2-cell `(α, α′, S₁, S₂)` between two spans with common endpoints.
///
/// The mediator `K ←α L →α′ K′` has both legs weak equivalences,
/// `S₁: φα ⇒ φ′α′` and `S₂: ψα ⇒ ψ′α′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCellDiagram {
    source: GeneralizedMorphism,
    target: GeneralizedMorphism,
    alpha: Functor,
    alpha2: Functor,
    s1: NaturalTransformation,
    s2: NaturalTransformation,
}

impl TwoCellDiagram {
    pub fn new(
        source: GeneralizedMorphism,
        target: GeneralizedMorphism,
        alpha: Functor,
        alpha2: Functor,
        s1: NaturalTransformation,
        s2: NaturalTransformation,
    ) -> Result<Self> {
        let d = TwoCellDiagram { source, target, alpha, alpha2, s1, s2 };
        d.check()?;
        Ok(d)
    }

    pub(crate) fn new_unchecked(
        source: GeneralizedMorphism,
        target: GeneralizedMorphism,
        alpha: Functor,
        alpha2: Functor,
        s1: NaturalTransformation,
        s2: NaturalTransformation,
    ) -> Self {
        TwoCellDiagram { source, target, alpha, alpha2, s1, s2 }
    }

    pub fn check(&self) -> Result<()> {
        let mismatch = |m: &str| Err(GpdError::BoundaryMismatch(m.into()));
        let (a, b) = (&self.source, &self.target);
        if !same_groupoid(a.source(), b.source()) || !same_groupoid(a.target(), b.target()) {
            return mismatch("2-cell between spans with different endpoints");
        }
        if !same_groupoid(self.alpha.cod(), a.apex()) || !same_groupoid(self.alpha2.cod(), b.apex()) {
            return mismatch("mediator legs must land in the span apexes");
        }
        if !same_groupoid(self.alpha.dom(), self.alpha2.dom()) {
            return mismatch("mediator legs must share their apex");
        }
        if !is_weak_equivalence(&self.alpha) || !is_weak_equivalence(&self.alpha2) {
            return Err(GpdError::NotWeakEquivalence("mediator legs of a 2-cell diagram".into()));
        }
        if *self.s1.from() != a.left().after(&self.alpha) || *self.s1.to() != b.left().after(&self.alpha2) {
            return mismatch("S1 must run from φα to φ′α′");
        }
        if *self.s2.from() != a.right().after(&self.alpha) || *self.s2.to() != b.right().after(&self.alpha2) {
            return mismatch("S2 must run from ψα to ψ′α′");
        }
        self.s1.check()?;
        self.s2.check()
    }

    pub fn source(&self) -> &GeneralizedMorphism {
        &self.source
    }

    pub fn target(&self) -> &GeneralizedMorphism {
        &self.target
    }

    pub fn alpha(&self) -> &Functor {
        &self.alpha
    }

    pub fn alpha2(&self) -> &Functor {
        &self.alpha2
    }

    pub fn s1(&self) -> &NaturalTransformation {
        &self.s1
    }

    pub fn s2(&self) -> &NaturalTransformation {
        &self.s2
    }

    /// The mediating span `K ←α L →α′ K′`.
    pub fn mediator(&self) -> GeneralizedMorphism {
        GeneralizedMorphism::new_unchecked(self.alpha.clone(), self.alpha2.clone())
    }

    /// The same diagram read backwards.
    pub fn inverse(&self) -> TwoCellDiagram {
        TwoCellDiagram {
            source: self.target.clone(),
            target: self.source.clone(),
            alpha: self.alpha2.clone(),
            alpha2: self.alpha.clone(),
            s1: self.s1.inverse(),
            s2: self.s2.inverse(),
        }
    }
}

/// `G ←id G →φ H`.
pub fn spanise(phi: &Functor) -> GeneralizedMorphism {
    GeneralizedMorphism::new_unchecked(Functor::identity(phi.dom()), phi.clone())
}

/// `[id, id, id, T]` for `T: φ ⇒ ψ`.
pub fn spanise_2cell(t: &NaturalTransformation) -> TwoCellDiagram {
    let g = t.dom();
    let id = Functor::identity(g);
    TwoCellDiagram::new_unchecked(
        spanise(t.from()),
        spanise(t.to()),
        id.clone(),
        id.clone(),
        NaturalTransformation::identity(&id),
        t.clone(),
    )
}

/// The identity 2-cell on a span.
pub fn identity_2cell(gm: &GeneralizedMorphism) -> TwoCellDiagram {
    let id = Functor::identity(gm.apex());
    TwoCellDiagram::new_unchecked(
        gm.clone(),
        gm.clone(),
        id.clone(),
        id,
        NaturalTransformation::identity(gm.left()),
        NaturalTransformation::identity(gm.right()),
    )
}

fn check_composable(a: &GeneralizedMorphism, b: &GeneralizedMorphism) -> Result<()> {
    if same_groupoid(a.target(), b.source()) {
        Ok(())
    } else {
        Err(GpdError::BoundaryMismatch("spans are not composable".into()))
    }
}

/// Composite over the weak pullback `L ×ʷ_{ψ,χ} M`, also returning the pullback.
pub fn compose_gm_detailed(
    a: &GeneralizedMorphism,
    b: &GeneralizedMorphism,
) -> Result<(GeneralizedMorphism, WeakPullback)> {
    check_composable(a, b)?;
    let wp = weak_pullback(a.right(), b.left())?;
    let gm = GeneralizedMorphism::new_unchecked(a.left().after(&wp.pr1), b.right().after(&wp.pr3));
    debug_assert!(is_weak_equivalence(gm.left()));
    Ok((gm, wp))
}

pub fn compose_gm(a: &GeneralizedMorphism, b: &GeneralizedMorphism) -> Result<GeneralizedMorphism> {
    compose_gm_detailed(a, b).map(|r| r.0)
}

/// Vertical composite of `c1: A ⇒ B` and `c2: B ⇒ C`.
pub fn vcomp_gm(c1: &TwoCellDiagram, c2: &TwoCellDiagram) -> Result<TwoCellDiagram> {
    if c1.target != c2.source {
        return Err(GpdError::BoundaryMismatch("vcomp_gm: target of c1 differs from source of c2".into()));
    }
    let wp = weak_pullback(&c1.alpha2, &c2.alpha)?;
    let alpha = c1.alpha.after(&wp.pr1);
    let alpha2 = c2.alpha2.after(&wp.pr3);
    let mid = &c1.target;
    let v1 = c2
        .s1
        .whisker_pre(&wp.pr3)
        .after(&wp.pr2.whisker_post(mid.left()).after(&c1.s1.whisker_pre(&wp.pr1)));
    let v2 = c2
        .s2
        .whisker_pre(&wp.pr3)
        .after(&wp.pr2.whisker_post(mid.right()).after(&c1.s2.whisker_pre(&wp.pr1)));
    Ok(TwoCellDiagram::new_unchecked(c1.source.clone(), c2.target.clone(), alpha, alpha2, v1, v2))
}

/// Left whiskering `gm ▷ c` of a 2-cell `c: M ⇒ M′` by `gm: G → H`.
pub fn whisker_left_gm(gm: &GeneralizedMorphism, c: &TwoCellDiagram) -> Result<TwoCellDiagram> {
    let (src, wps) = compose_gm_detailed(gm, &c.source)?;
    let (trg, wpt) = compose_gm_detailed(gm, &c.target)?;
    let chi_alpha = c.source.left().after(&c.alpha);
    let wpn = weak_pullback(gm.right(), &chi_alpha)?;
    let n = &wpn.groupoid;
    let k = gm.target();
    let beta = Functor::from_fns(
        n,
        &wps.groupoid,
        |o| {
            let (l, h, m) = wpn.obj_triple(o);
            wps.obj(l, h, c.alpha.obj(m)).expect("β on objects")
        },
        |a| {
            let (l, h, m) = wpn.arr_triple(a);
            wps.arr(l, h, c.alpha.arr(m)).expect("β on arrows")
        },
    );
    let nn = c.alpha.dom();
    let beta2 = Functor::from_fns(
        n,
        &wpt.groupoid,
        |o| {
            let (l, h, m) = wpn.obj_triple(o);
            wpt.obj(l, k.comp(c.s1.at(m), h), c.alpha2.obj(m)).expect("β′ on objects")
        },
        |a| {
            let (l, h, m) = wpn.arr_triple(a);
            wpt.arr(l, k.comp(c.s1.at(nn.src(m)), h), c.alpha2.arr(m)).expect("β′ on arrows")
        },
    );
    let s1 = NaturalTransformation::identity(&src.left().after(&beta));
    let s1 = NaturalTransformation::new_unchecked(s1.from().clone(), trg.left().after(&beta2), s1.components().to_vec());
    let s2 = NaturalTransformation::from_fn(src.right().after(&beta), trg.right().after(&beta2), |o| {
        c.s2.at(wpn.pr3.obj(o))
    });
    Ok(TwoCellDiagram::new_unchecked(src, trg, beta, beta2, s1, s2))
}

/// Right whiskering `c ◁ gm` of a 2-cell `c: L ⇒ L′` by `gm: H → K`.
pub fn whisker_right_gm(c: &TwoCellDiagram, gm: &GeneralizedMorphism) -> Result<TwoCellDiagram> {
    let (src, wps) = compose_gm_detailed(&c.source, gm)?;
    let (trg, wpt) = compose_gm_detailed(&c.target, gm)?;
    let psi_alpha = c.source.right().after(&c.alpha);
    let wpn = weak_pullback(&psi_alpha, gm.left())?;
    let n = &wpn.groupoid;
    let h = c.source.target().clone();
    let nn = c.alpha.dom();
    let beta = Functor::from_fns(
        n,
        &wps.groupoid,
        |o| {
            let (x, k, m) = wpn.obj_triple(o);
            wps.obj(c.alpha.obj(x), k, m).expect("β on objects")
        },
        |a| {
            let (x, k, m) = wpn.arr_triple(a);
            wps.arr(c.alpha.arr(x), k, m).expect("β on arrows")
        },
    );
    let beta2 = Functor::from_fns(
        n,
        &wpt.groupoid,
        |o| {
            let (x, k, m) = wpn.obj_triple(o);
            wpt.obj(c.alpha2.obj(x), h.comp(k, h.inv(c.s2.at(x))), m).expect("β′ on objects")
        },
        |a| {
            let (x, k, m) = wpn.arr_triple(a);
            wpt.arr(c.alpha2.arr(x), h.comp(k, h.inv(c.s2.at(nn.src(x)))), m).expect("β′ on arrows")
        },
    );
    let s1 = NaturalTransformation::from_fn(src.left().after(&beta), trg.left().after(&beta2), |o| {
        c.s1.at(wpn.pr1.obj(o))
    });
    let id = NaturalTransformation::identity(&src.right().after(&beta));
    let s2 = NaturalTransformation::new_unchecked(id.from().clone(), trg.right().after(&beta2), id.components().to_vec());
    Ok(TwoCellDiagram::new_unchecked(src, trg, beta, beta2, s1, s2))
}

/// Horizontal composite: `(A ▷ c2)` followed by `(c1 ◁ B′)`.
pub fn hcomp_gm(c1: &TwoCellDiagram, c2: &TwoCellDiagram) -> Result<TwoCellDiagram> {
    vcomp_gm(&whisker_left_gm(&c1.source, c2)?, &whisker_right_gm(c1, &c2.target)?)
}

/// Horizontal composite in the other order: `(c1 ◁ B)` followed by `(A′ ▷ c2)`.
pub fn hcomp_gm_alt(c1: &TwoCellDiagram, c2: &TwoCellDiagram) -> Result<TwoCellDiagram> {
    vcomp_gm(&whisker_right_gm(c1, &c2.source)?, &whisker_left_gm(&c1.target, c2)?)
}

/// `λ: id_G ∘ gm ⇒ gm`.
pub fn unitor_left_gm(gm: &GeneralizedMorphism) -> Result<TwoCellDiagram> {
    let (src, wp) = compose_gm_detailed(&GeneralizedMorphism::identity(gm.source()), gm)?;
    let id = Functor::identity(src.apex());
    let s1 = NaturalTransformation::new_unchecked(src.left().clone(), gm.left().after(&wp.pr3), wp.pr2.components().to_vec());
    let s2 = NaturalTransformation::identity(src.right());
    Ok(TwoCellDiagram::new_unchecked(src, gm.clone(), id, wp.pr3.clone(), s1, s2))
}

/// `ρ: gm ∘ id_H ⇒ gm`.
pub fn unitor_right_gm(gm: &GeneralizedMorphism) -> Result<TwoCellDiagram> {
    let (src, wp) = compose_gm_detailed(gm, &GeneralizedMorphism::identity(gm.target()))?;
    let id = Functor::identity(src.apex());
    let s1 = NaturalTransformation::identity(src.left());
    let s2 = NaturalTransformation::new_unchecked(src.right().clone(), gm.right().after(&wp.pr1), wp.pr2.inverse().components().to_vec());
    Ok(TwoCellDiagram::new_unchecked(src, gm.clone(), id, wp.pr1.clone(), s1, s2))
}

/// The regrouping isomorphism `(a∘b)∘c ⇒ a∘(b∘c)` as a diagram with identity 2-cells.
pub fn associator_gm(
    a: &GeneralizedMorphism,
    b: &GeneralizedMorphism,
    c: &GeneralizedMorphism,
) -> Result<TwoCellDiagram> {
    let (ab, wp_ab) = compose_gm_detailed(a, b)?;
    let (x, wp_x) = compose_gm_detailed(&ab, c)?;
    let (bc, wp_bc) = compose_gm_detailed(b, c)?;
    let (y, wp_y) = compose_gm_detailed(a, &bc)?;
    let theta = Functor::from_fns(
        x.apex(),
        y.apex(),
        |o| {
            let (u, k2, n) = wp_x.obj_triple(o);
            let (l, k1, m) = wp_ab.obj_triple(u);
            wp_y.obj(l, k1, wp_bc.obj(m, k2, n).expect("inner object")).expect("outer object")
        },
        |o| {
            let (u, k2, n) = wp_x.arr_triple(o);
            let (l, k1, m) = wp_ab.arr_triple(u);
            wp_y.arr(l, k1, wp_bc.arr(m, k2, n).expect("inner arrow")).expect("outer arrow")
        },
    );
    debug_assert!(theta.is_isomorphism());
    let id = Functor::identity(x.apex());
    let s1 = NaturalTransformation::identity(x.left());
    let s2 = NaturalTransformation::identity(x.right());
    let s1 = NaturalTransformation::new_unchecked(s1.from().clone(), y.left().after(&theta), s1.components().to_vec());
    let s2 = NaturalTransformation::new_unchecked(s2.from().clone(), y.right().after(&theta), s2.components().to_vec());
    Ok(TwoCellDiagram::new_unchecked(x, y, id, theta, s1, s2))
}

/// A flipped span with its two witness 2-cells.
#[derive(Clone, Debug)]
pub struct GmQuasiInverse {
    pub inverse: GeneralizedMorphism,
    /// `gm ∘ inverse ⇒ id_G`.
    pub unit: TwoCellDiagram,
    /// `inverse ∘ gm ⇒ id_H`.
    pub counit: TwoCellDiagram,
}

fn flip_witness(outer: &Functor, inner: &Functor, composite: &GeneralizedMorphism, wp: &WeakPullback) -> Result<TwoCellDiagram> {
    // composite has legs outer∘pr1 and outer∘pr3 over K ×ʷ_{inner,inner} K
    let inv = ff_inverse(inner)?;
    let target = GeneralizedMorphism::identity(outer.cod());
    let k = inner.cod();
    let d = outer.cod();
    let alpha = Functor::identity(composite.apex());
    let alpha2 = outer.after(&wp.pr1);
    let s1 = NaturalTransformation::identity(composite.left());
    let s2 = NaturalTransformation::from_fn(composite.right().clone(), alpha2.clone(), |o| {
        let (y1, h, y2): (Obj, _, Obj) = wp.obj_triple(o);
        outer.arr(inv.apply(y2, y1, k.inv(h)))
    });
    debug_assert!(same_groupoid(d, target.apex()));
    TwoCellDiagram::new(composite.clone(), target, alpha, alpha2, s1, s2)
}

/// Flips a span whose right leg is a weak equivalence; the witnesses are
/// validated and pushed through the bibundle translation.
pub fn quasi_inverse_gm(gm: &GeneralizedMorphism) -> Result<GmQuasiInverse> {
    if !is_weak_equivalence(gm.right()) {
        return Err(GpdError::RightLegNotWeakEquivalence("cannot flip the span".into()));
    }
    let inverse = GeneralizedMorphism::new_unchecked(gm.right().clone(), gm.left().clone());
    let (gi, wp1) = compose_gm_detailed(gm, &inverse)?;
    let unit = flip_witness(gm.left(), gm.right(), &gi, &wp1)?;
    let (ig, wp2) = compose_gm_detailed(&inverse, gm)?;
    let counit = flip_witness(gm.right(), gm.left(), &ig, &wp2)?;
    twocell_to_biequiv(&unit)?;
    twocell_to_biequiv(&counit)?;
    Ok(GmQuasiInverse { inverse, unit, counit })
}

/// Decides equivalence of two diagrams between the same spans by comparing
/// their induced bi-equivariant maps.
pub fn two_cells_equal(c1: &TwoCellDiagram, c2: &TwoCellDiagram) -> Result<bool> {
    if c1.source != c2.source || c1.target != c2.target {
        return Err(GpdError::BoundaryMismatch("two_cells_equal needs diagrams between the same spans".into()));
    }
    let m1 = twocell_to_biequiv(c1)?;
    let m2 = twocell_to_biequiv(c2)?;
    Ok(m1.map() == m2.map())
}
