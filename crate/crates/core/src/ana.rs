//! The anafunctor bicategory: spans with a subductive left leg, composed by
//! strict pullback, with transformations as 2-cells.

use std::sync::Arc;

use crate::bibundle::{bibundle_to_anafunctor, gm_to_bibundle};
use crate::error::{GpdError, Result};
use crate::fractions::{GeneralizedMorphism, TwoCellDiagram};
use crate::gpd::{
    check_subductive_weak_equivalence, ff_inverse, is_weak_equivalence, same_groupoid, strict_into_weak,
    strict_pullback, subductive_ff_inverse, weak_pullback, Arr, FiniteGroupoid, Functor, NaturalTransformation,
    Obj, StrictPullback,
};

/// A span `G ←φ K →ψ H` whose left leg is a subductive weak equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anafunctor {
    gm: GeneralizedMorphism,
}

impl Anafunctor {
    pub fn new(left: Functor, right: Functor) -> Result<Self> {
        if !same_groupoid(left.dom(), right.dom()) {
            return Err(GpdError::BoundaryMismatch("anafunctor legs must share their apex".into()));
        }
        if !check_subductive_weak_equivalence(&left) {
            return Err(GpdError::NotAnafunctor("left leg is not a subductive weak equivalence".into()));
        }
        Ok(Anafunctor { gm: GeneralizedMorphism::new_unchecked(left, right) })
    }

    pub(crate) fn new_unchecked(left: Functor, right: Functor) -> Self {
        Anafunctor { gm: GeneralizedMorphism::new_unchecked(left, right) }
    }

    pub fn from_gm(gm: &GeneralizedMorphism) -> Result<Self> {
        Self::new(gm.left().clone(), gm.right().clone())
    }

    /// The identity anafunctor `G ← G → G`.
    pub fn identity(g: &Arc<FiniteGroupoid>) -> Self {
        let id = Functor::identity(g);
        Self::new_unchecked(id.clone(), id)
    }

    pub fn as_gm(&self) -> &GeneralizedMorphism {
        &self.gm
    }

    pub fn apex(&self) -> &Arc<FiniteGroupoid> {
        self.gm.apex()
    }

    pub fn left(&self) -> &Functor {
        self.gm.left()
    }

    pub fn right(&self) -> &Functor {
        self.gm.right()
    }

    pub fn source(&self) -> &Arc<FiniteGroupoid> {
        self.gm.source()
    }

    pub fn target(&self) -> &Arc<FiniteGroupoid> {
        self.gm.target()
    }

    /// The span read backwards; requires the right leg to be subductive as well.
    pub fn flip(&self) -> Result<Anafunctor> {
        Anafunctor::new(self.right().clone(), self.left().clone())
    }
}

/// A natural transformation `ψ∘pr1 ⇒ ψ′∘pr2` on `K ×_{φ,φ′} K′`.
#[derive(Clone, Debug)]
pub struct Transformation {
    source: Anafunctor,
    target: Anafunctor,
    pullback: StrictPullback,
    comp: Vec<Arr>,
}

impl PartialEq for Transformation {
    fn eq(&self, other: &Self) -> bool {
        self.comp == other.comp && self.source == other.source && self.target == other.target
    }
}

impl Eq for Transformation {}

impl Transformation {
    /// Validated constructor; `comp` lists components in the order of the
    /// objects of `K ×_{φ,φ′} K′`.
    pub fn new(source: Anafunctor, target: Anafunctor, comp: Vec<Arr>) -> Result<Self> {
        let pullback = endpoint_pullback(&source, &target)?;
        let t = Transformation { source, target, pullback, comp };
        t.check()?;
        Ok(t)
    }

    /// Builds the components from a function of `(y, y′)` and validates.
    pub fn from_fn(
        source: &Anafunctor,
        target: &Anafunctor,
        mut f: impl FnMut(Obj, Obj) -> Result<Arr>,
    ) -> Result<Self> {
        let pullback = endpoint_pullback(source, target)?;
        let comp = pullback
            .groupoid
            .objects()
            .map(|o| {
                let (y, y2) = pullback.obj_pair(o);
                f(y, y2)
            })
            .collect::<Result<Vec<_>>>()?;
        let t = Transformation { source: source.clone(), target: target.clone(), pullback, comp };
        t.check()?;
        Ok(t)
    }

    pub fn source(&self) -> &Anafunctor {
        &self.source
    }

    pub fn target(&self) -> &Anafunctor {
        &self.target
    }

    pub fn pullback(&self) -> &StrictPullback {
        &self.pullback
    }

    pub fn components(&self) -> &[Arr] {
        &self.comp
    }

    /// Component at `(y, y′)`, if the pair lies over a common object.
    pub fn at(&self, y: Obj, y2: Obj) -> Option<Arr> {
        self.pullback.obj(y, y2).map(|o| self.comp[o.0])
    }

    /// As a natural transformation `ψ∘pr1 ⇒ ψ′∘pr2`.
    pub fn as_natural(&self) -> NaturalTransformation {
        NaturalTransformation::new_unchecked(
            self.source.right().after(&self.pullback.pr1),
            self.target.right().after(&self.pullback.pr2),
            self.comp.clone(),
        )
    }

    pub fn check(&self) -> Result<()> {
        if self.comp.len() != self.pullback.groupoid.n_objects() {
            return Err(GpdError::NotNatural("component table size".into()));
        }
        self.as_natural().check()
    }

    /// The inverse transformation `target ⇒ source`.
    pub fn inverse(&self) -> Transformation {
        let h = self.source.target().clone();
        Transformation::from_fn(&self.target, &self.source, |y2, y| {
            Ok(h.inv(self.at(y, y2).expect("pair lies in the pullback")))
        })
        .expect("inverse of a transformation is a transformation")
    }

    pub fn is_identity(&self) -> bool {
        *self == identity_transformation(&self.source)
    }
}

fn endpoint_pullback(a: &Anafunctor, b: &Anafunctor) -> Result<StrictPullback> {
    if !same_groupoid(a.source(), b.source()) || !same_groupoid(a.target(), b.target()) {
        return Err(GpdError::BoundaryMismatch("transformation between anafunctors with different endpoints".into()));
    }
    strict_pullback(a.left(), b.left())
}

/// Composite over the strict pullback `L ×_{ψ,χ} M`, also returning the pullback.
pub fn compose_ana_detailed(a: &Anafunctor, b: &Anafunctor) -> Result<(Anafunctor, StrictPullback)> {
    if !same_groupoid(a.target(), b.source()) {
        return Err(GpdError::BoundaryMismatch("anafunctors are not composable".into()));
    }
    let sp = strict_pullback(a.right(), b.left())?;
    let c = Anafunctor::new_unchecked(a.left().after(&sp.pr1), b.right().after(&sp.pr2));
    debug_assert!(check_subductive_weak_equivalence(c.left()));
    Ok((c, sp))
}

pub fn compose_ana(a: &Anafunctor, b: &Anafunctor) -> Result<Anafunctor> {
    compose_ana_detailed(a, b).map(|r| r.0)
}

/// `I(y₁, y₂) = ψ(Φ_φ⁻¹(y₁, y₂, unit φ(y₁)))`.
pub fn identity_transformation(a: &Anafunctor) -> Transformation {
    let inv = ff_inverse(a.left()).expect("anafunctor left leg is fully faithful");
    let g = a.source().clone();
    Transformation::from_fn(a, a, |y1, y2| {
        Ok(a.right().arr(inv.apply(y1, y2, g.unit(a.left().obj(y1)))))
    })
    .expect("identity transformation is natural")
}

/// Vertical composite of `s: a ⇒ b` and `t: b ⇒ c`; every auxiliary `y₂` must agree.
pub fn vcomp_ana(s: &Transformation, t: &Transformation) -> Result<Transformation> {
    if s.target != t.source {
        return Err(GpdError::BoundaryMismatch("vcomp_ana: target of S differs from source of T".into()));
    }
    let mid = &s.target;
    let h = mid.target().clone();
    Transformation::from_fn(&s.source, &t.target, |y1, y3| {
        let base = s.source.left().obj(y1);
        let mut found = None;
        for y2 in mid.apex().objects().filter(|&y2| mid.left().obj(y2) == base) {
            let c = h.comp(t.at(y2, y3).expect("(y2,y3) in pullback"), s.at(y1, y2).expect("(y1,y2) in pullback"));
            match found {
                None => found = Some(c),
                Some(d) if d != c => {
                    return Err(GpdError::InvariantBroken("vcomp_ana depends on the auxiliary object".into()))
                }
                _ => {}
            }
        }
        found.ok_or_else(|| GpdError::InvariantBroken("no auxiliary object over the base".into()))
    })
}

/// Right whiskering `s ◁ a2` for `s: M ⇒ M′` and `a2 = (ξ, I, ζ)`:
/// `T((w, v₁), (w′, v₂)) = ζ Φ_ξ⁻¹(v₁, v₂, S(w, w′))`.
pub fn whisker_right_ana(s: &Transformation, a2: &Anafunctor) -> Result<Transformation> {
    let (src, sp1) = compose_ana_detailed(&s.source, a2)?;
    let (trg, sp2) = compose_ana_detailed(&s.target, a2)?;
    let inv = ff_inverse(a2.left())?;
    Transformation::from_fn(&src, &trg, |p, q| {
        let (w, v1) = sp1.obj_pair(p);
        let (w2, v2) = sp2.obj_pair(q);
        let c = s.at(w, w2).expect("(w,w′) in pullback");
        Ok(a2.right().arr(inv.apply(v1, v2, c)))
    })
}

/// Left whiskering `a ▷ s` for `a = (φ, K, ψ)` and `s: M ⇒ M′`.
///
/// The component at `((k, m), (k′, m′))` transports `S(m, m″)` along
/// `Φ_χ′⁻¹(m″, m′, ψ(Φ_φ⁻¹(k, k′, unit)))` for any `m″` over `χ(m)`; all
/// choices of `m″` are checked to agree.
pub fn whisker_left_ana(a: &Anafunctor, s: &Transformation) -> Result<Transformation> {
    let (src, sp1) = compose_ana_detailed(a, &s.source)?;
    let (trg, sp2) = compose_ana_detailed(a, &s.target)?;
    let inv_phi = ff_inverse(a.left())?;
    let (m, m2) = (&s.source, &s.target);
    let inv_chi2 = ff_inverse(m2.left())?;
    let (g, k_out) = (a.source().clone(), m.target().clone());
    Transformation::from_fn(&src, &trg, |p, q| {
        let (k, mm) = sp1.obj_pair(p);
        let (k2, mm2) = sp2.obj_pair(q);
        let khat = inv_phi.apply(k, k2, g.unit(a.left().obj(k)));
        let bridge = a.right().arr(khat);
        let base = m.left().obj(mm);
        let mut found = None;
        for m3 in m2.apex().objects().filter(|&m3| m2.left().obj(m3) == base) {
            let n = inv_chi2.apply(m3, mm2, bridge);
            let c = k_out.comp(m2.right().arr(n), s.at(mm, m3).expect("(m,m″) in pullback"));
            match found {
                None => found = Some(c),
                Some(d) if d != c => {
                    return Err(GpdError::InvariantBroken("left whisker depends on the chosen preimage".into()))
                }
                _ => {}
            }
        }
        found.ok_or_else(|| GpdError::InvariantBroken("no preimage for the left whisker".into()))
    })
}

/// `(a ▷ t)` followed by `(s ◁ b′)` for `s: a ⇒ a′`, `t: b ⇒ b′`.
pub fn hcomp_ana(s: &Transformation, t: &Transformation) -> Result<Transformation> {
    vcomp_ana(&whisker_left_ana(&s.source, t)?, &whisker_right_ana(s, &t.target)?)
}

/// `(s ◁ b)` followed by `(a′ ▷ t)`.
pub fn hcomp_ana_alt(s: &Transformation, t: &Transformation) -> Result<Transformation> {
    vcomp_ana(&whisker_right_ana(s, &t.source)?, &whisker_left_ana(&s.target, t)?)
}

/// `λ: id_G ∘ a ⇒ a`, `((x, y₁), y₂) ↦ ψ(Φ_φ⁻¹(y₁, y₂, unit_x))`.
pub fn unitor_left_ana(a: &Anafunctor) -> Result<Transformation> {
    let (src, sp) = compose_ana_detailed(&Anafunctor::identity(a.source()), a)?;
    let inv = ff_inverse(a.left())?;
    let g = a.source().clone();
    Transformation::from_fn(&src, a, |p, y2| {
        let (x, y1) = sp.obj_pair(p);
        Ok(a.right().arr(inv.apply(y1, y2, g.unit(x))))
    })
}

/// `ρ: a ∘ id_H ⇒ a`, `((y₁, z), y₂) ↦ ψ(Φ_φ⁻¹(y₁, y₂, unit φ(y₁)))`.
pub fn unitor_right_ana(a: &Anafunctor) -> Result<Transformation> {
    let (src, sp) = compose_ana_detailed(a, &Anafunctor::identity(a.target()))?;
    let inv = ff_inverse(a.left())?;
    let g = a.source().clone();
    Transformation::from_fn(&src, a, |p, y2| {
        let (y1, _) = sp.obj_pair(p);
        Ok(a.right().arr(inv.apply(y1, y2, g.unit(a.left().obj(y1)))))
    })
}

/// The transformation induced by a map of apexes commuting with both legs.
pub fn transformation_from_apex_map(src: &Anafunctor, trg: &Anafunctor, theta: &Functor) -> Result<Transformation> {
    if trg.left().after(theta) != *src.left() || trg.right().after(theta) != *src.right() {
        return Err(GpdError::BoundaryMismatch("apex map must commute with both legs".into()));
    }
    let inv = ff_inverse(trg.left())?;
    let g = src.source().clone();
    Transformation::from_fn(src, trg, |p, q| {
        Ok(trg.right().arr(inv.apply(theta.obj(p), q, g.unit(src.left().obj(p)))))
    })
}

/// The regrouping transformation `(a∘b)∘c ⇒ a∘(b∘c)`.
pub fn associator_ana(a: &Anafunctor, b: &Anafunctor, c: &Anafunctor) -> Result<Transformation> {
    let (ab, sp_ab) = compose_ana_detailed(a, b)?;
    let (x, sp_x) = compose_ana_detailed(&ab, c)?;
    let (bc, sp_bc) = compose_ana_detailed(b, c)?;
    let (y, sp_y) = compose_ana_detailed(a, &bc)?;
    let theta = Functor::from_fns(
        x.apex(),
        y.apex(),
        |o| {
            let (u, n) = sp_x.obj_pair(o);
            let (l, m) = sp_ab.obj_pair(u);
            sp_y.obj(l, sp_bc.obj(m, n).expect("inner object")).expect("outer object")
        },
        |o| {
            let (u, n) = sp_x.arr_pair(o);
            let (l, m) = sp_ab.arr_pair(u);
            sp_y.arr(l, sp_bc.arr(m, n).expect("inner arrow")).expect("outer arrow")
        },
    );
    transformation_from_apex_map(&x, &y, &theta)
}

/// `G ←pr1 G ×ʷ_{φ,id} H →pr3 H`.
pub fn anafunctise(phi: &Functor) -> Anafunctor {
    let wp = weak_pullback(phi, &Functor::identity(phi.cod())).expect("anafunctisation within the size cap");
    Anafunctor::new_unchecked(wp.pr1.clone(), wp.pr3.clone())
}

/// `S̃((x, h₁, y₁), (x, h₂, y₂)) = h₂·S(x)·h₁⁻¹`.
pub fn anafunctise_2cell(s: &NaturalTransformation) -> Transformation {
    let (a, b) = (anafunctise(s.from()), anafunctise(s.to()));
    let wa = weak_pullback(s.from(), &Functor::identity(s.cod())).expect("size cap");
    let wb = weak_pullback(s.to(), &Functor::identity(s.cod())).expect("size cap");
    let h = s.cod().clone();
    Transformation::from_fn(&a, &b, |p, q| {
        let (x, h1, _) = wa.obj_triple(p);
        let (_, h2, _) = wb.obj_triple(q);
        Ok(h.comp_all(&[h2, s.at(x), h.inv(h1)]))
    })
    .expect("anafunctisation of a natural transformation")
}

/// The 2-cell relating the spanisation and the anafunctisation of `φ`.
pub fn spanise_to_anafunctise(phi: &Functor) -> Result<TwoCellDiagram> {
    let h = phi.cod();
    let wp = weak_pullback(phi, &Functor::identity(h))?;
    let g = phi.dom();
    let incl = Functor::from_fns(
        g,
        &wp.groupoid,
        |x| wp.obj(x, h.unit(phi.obj(x)), phi.obj(x)).expect("unit triple"),
        |a| wp.arr(a, h.unit(phi.obj(g.src(a))), phi.arr(a)).expect("unit triple"),
    );
    let target = Anafunctor::new_unchecked(wp.pr1.clone(), wp.pr3.clone());
    let id = Functor::identity(g);
    TwoCellDiagram::new(
        crate::fractions::spanise(phi),
        target.as_gm().clone(),
        id.clone(),
        incl.clone(),
        NaturalTransformation::identity(&id),
        NaturalTransformation::identity(phi),
    )
}

/// The θ-diagram relating the fractions composite (weak pullback) and the
/// anafunctor composite (strict pullback) of the same pair.
pub fn composite_comparison(a: &Anafunctor, b: &Anafunctor) -> Result<TwoCellDiagram> {
    let (gm, wp) = crate::fractions::compose_gm_detailed(a.as_gm(), b.as_gm())?;
    let (ana, sp) = compose_ana_detailed(a, b)?;
    let theta = strict_into_weak(&sp, &wp)?;
    let id = Functor::identity(ana.apex());
    let s1 = NaturalTransformation::identity(ana.left());
    let s2 = NaturalTransformation::identity(ana.right());
    TwoCellDiagram::new(
        gm.clone(),
        ana.as_gm().clone(),
        theta.clone(),
        id,
        NaturalTransformation::new_unchecked(gm.left().after(&theta), s1.to().clone(), s1.components().to_vec()),
        NaturalTransformation::new_unchecked(gm.right().after(&theta), s2.to().clone(), s2.components().to_vec()),
    )
}

/// `C_{φ,ψ}: A(φ)∘A(ψ) ⇒ A(ψ∘φ)`, `(((x,h,y),(y,k₁,z₁)),(x,k₂,z₂)) ↦ k₂·ψ(h⁻¹)·k₁⁻¹`.
pub fn compositor(phi: &Functor, psi: &Functor) -> Result<Transformation> {
    let (aphi, apsi) = (anafunctise(phi), anafunctise(psi));
    let w1 = weak_pullback(phi, &Functor::identity(phi.cod()))?;
    let w2 = weak_pullback(psi, &Functor::identity(psi.cod()))?;
    let comp = psi.after(phi);
    let w3 = weak_pullback(&comp, &Functor::identity(comp.cod()))?;
    let (src, sp) = compose_ana_detailed(&aphi, &apsi)?;
    let target = anafunctise(&comp);
    let (h, k) = (phi.cod().clone(), psi.cod().clone());
    Transformation::from_fn(&src, &target, |p, q| {
        let (u, v) = sp.obj_pair(p);
        let (_, hh, _) = w1.obj_triple(u);
        let (_, k1, _) = w2.obj_triple(v);
        let (_, k2, _) = w3.obj_triple(q);
        Ok(k.comp_all(&[k2, psi.arr(h.inv(hh)), k.inv(k1)]))
    })
}

/// `ID_G: id_G ⇒ A(id_G)`, `(x, (x, g, x′)) ↦ g`.
pub fn unit_comparison(g: &Arc<FiniteGroupoid>) -> Result<Transformation> {
    let id = Functor::identity(g);
    let w = weak_pullback(&id, &id)?;
    Transformation::from_fn(&Anafunctor::identity(g), &anafunctise(&id), |_, q| Ok(w.obj_triple(q).1))
}

/// Checks the associativity and both unit coherences of anafunctisation for
/// the composable chain `φ: G → H`, `ψ: H → K`, `χ: K → L`.
pub fn anafunctisation_coherence(phi: &Functor, psi: &Functor, chi: &Functor) -> Result<bool> {
    if !same_groupoid(phi.cod(), psi.dom()) || !same_groupoid(psi.cod(), chi.dom()) {
        return Err(GpdError::BoundaryMismatch("functors are not composable".into()));
    }
    let (aphi, apsi, achi) = (anafunctise(phi), anafunctise(psi), anafunctise(chi));
    let lhs = vcomp_ana(&whisker_right_ana(&compositor(phi, psi)?, &achi)?, &compositor(&psi.after(phi), chi)?)?;
    let rhs = vcomp_ana(&whisker_left_ana(&aphi, &compositor(psi, chi)?)?, &compositor(phi, &chi.after(psi))?)?;
    let assoc = vcomp_ana(&associator_ana(&aphi, &apsi, &achi)?, &rhs)?;
    if lhs != assoc {
        return Ok(false);
    }
    let id_a = identity_transformation(&aphi);
    let left = vcomp_ana(
        &vcomp_ana(&whisker_right_ana(&unit_comparison(phi.dom())?, &aphi)?, &compositor(&Functor::identity(phi.dom()), phi)?)?,
        &id_a,
    )?;
    if left != unitor_left_ana(&aphi)? {
        return Ok(false);
    }
    let right = vcomp_ana(
        &vcomp_ana(&whisker_left_ana(&aphi, &unit_comparison(phi.cod())?)?, &compositor(phi, &Functor::identity(phi.cod()))?)?,
        &id_a,
    )?;
    Ok(right == unitor_right_ana(&aphi)?)
}

/// The unique transformation representing a diagram between anafunctors.
///
/// `U(y, y′) = ψ′(T)⁻¹·S₂(l)·ψ(k)` with `T = Φ_φ′⁻¹(y′, α′(l), S₁(l)·φ(k))`,
/// for any `l` and `k: y → α(l)`; all such choices are checked to agree.
pub fn canonical_2cell(c: &TwoCellDiagram) -> Result<Transformation> {
    let a = Anafunctor::from_gm(c.source())?;
    let b = Anafunctor::from_gm(c.target())?;
    let inv2 = ff_inverse(b.left())?;
    let (kk, hh) = (a.apex().clone(), a.target().clone());
    let l_gpd = c.alpha().dom().clone();
    Transformation::from_fn(&a, &b, |y, y2| {
        let mut found = None;
        for l in l_gpd.objects() {
            for &k in kk.hom(y, c.alpha().obj(l)) {
                let t = inv2.apply(y2, c.alpha2().obj(l), a.source().comp(c.s1().at(l), a.left().arr(k)));
                let u = hh.comp_all(&[hh.inv(b.right().arr(t)), c.s2().at(l), a.right().arr(k)]);
                match found {
                    None => found = Some(u),
                    Some(v) if v != u => {
                        return Err(GpdError::InvariantBroken("canonical 2-cell depends on the chosen lift".into()))
                    }
                    _ => {}
                }
            }
        }
        found.ok_or_else(|| GpdError::InvariantBroken("mediator misses an object".into()))
    })
}

/// Embeds a transformation as a diagram over `K ×_{φ,φ′} K′`.
pub fn transformation_to_diagram(t: &Transformation) -> TwoCellDiagram {
    let sp = &t.pullback;
    let s1 = NaturalTransformation::identity(&t.source.left().after(&sp.pr1));
    let s1 = NaturalTransformation::new_unchecked(s1.from().clone(), t.target.left().after(&sp.pr2), s1.components().to_vec());
    TwoCellDiagram::new_unchecked(
        t.source.as_gm().clone(),
        t.target.as_gm().clone(),
        sp.pr1.clone(),
        sp.pr2.clone(),
        s1,
        t.as_natural(),
    )
}

/// A quasi-inverse anafunctor with its triangle witnesses.
#[derive(Clone, Debug)]
pub struct AnaQuasiInverse {
    /// The anafunctor actually flipped: the input, or a canonical replacement
    /// with both legs subductive.
    pub canonical: Anafunctor,
    pub inverse: Anafunctor,
    /// `id_G ⇒ canonical ∘ inverse`.
    pub unit: Transformation,
    /// `inverse ∘ canonical ⇒ id_H`.
    pub counit: Transformation,
}

pub fn quasi_inverse_ana(a: &Anafunctor) -> Result<AnaQuasiInverse> {
    if !is_weak_equivalence(a.right()) {
        return Err(GpdError::RightLegNotWeakEquivalence("anafunctor has no quasi-inverse".into()));
    }
    let canonical = if check_subductive_weak_equivalence(a.right()) {
        a.clone()
    } else {
        bibundle_to_anafunctor(&gm_to_bibundle(a.as_gm())?.bibundle)?.anafunctor
    };
    let a = &canonical;
    let inverse = a.flip()?;
    let inv_phi = subductive_ff_inverse(a.left())?;
    let inv_psi = subductive_ff_inverse(a.right())?;
    let (aa, sp1) = compose_ana_detailed(a, &inverse)?;
    let unit = Transformation::from_fn(&Anafunctor::identity(a.source()), &aa, |_, q| {
        let (y1, y2) = sp1.obj_pair(q);
        Ok(a.left().arr(inv_psi.apply(y1, y2, a.target().unit(a.right().obj(y1)))))
    })?;
    let (ia, sp2) = compose_ana_detailed(&inverse, a)?;
    let h = a.target().clone();
    let counit = Transformation::from_fn(&ia, &Anafunctor::identity(a.target()), |p, _| {
        let (y1, y2) = sp2.obj_pair(p);
        Ok(h.inv(a.right().arr(inv_phi.apply(y1, y2, a.source().unit(a.left().obj(y1))))))
    })?;

    // first triangle: a ⇒ id∘a ⇒ (a∘ā)∘a ⇒ a∘(ā∘a) ⇒ a∘id ⇒ a
    let t1 = [
        unitor_left_ana(a)?.inverse(),
        whisker_right_ana(&unit, a)?,
        associator_ana(a, &inverse, a)?,
        whisker_left_ana(a, &counit)?,
        unitor_right_ana(a)?,
    ];
    // second triangle: ā ⇒ ā∘id ⇒ ā∘(a∘ā) ⇒ (ā∘a)∘ā ⇒ id∘ā ⇒ ā
    let t2 = [
        unitor_right_ana(&inverse)?.inverse(),
        whisker_left_ana(&inverse, &unit)?,
        associator_ana(&inverse, a, &inverse)?.inverse(),
        whisker_right_ana(&counit, &inverse)?,
        unitor_left_ana(&inverse)?,
    ];
    for chain in [&t1[..], &t2[..]] {
        let mut acc = chain[0].clone();
        for t in &chain[1..] {
            acc = vcomp_ana(&acc, t)?;
        }
        if !acc.is_identity() {
            return Err(GpdError::InvariantBroken("triangle identity fails for the quasi-inverse".into()));
        }
    }
    Ok(AnaQuasiInverse { canonical: canonical.clone(), inverse, unit, counit })
}
