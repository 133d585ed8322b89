use rustc_hash::FxHashMap as HashMap;

use super::functor::{same_groupoid, Functor, NaturalTransformation};
use super::groupoid::{Arr, Obj};
use crate::error::{GpdError, Result};

/// The inverse of `Φ_φ: g ↦ (src g, trg g, φ(g))` for a fully faithful `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfInverse {
    table: HashMap<(Obj, Obj, Arr), Arr>,
}

impl FfInverse {
    pub fn get(&self, x1: Obj, x2: Obj, h: Arr) -> Option<Arr> {
        self.table.get(&(x1, x2, h)).copied()
    }

    /// `Φ⁻¹(x1, x2, h)`; panics if `h` is not an arrow `φ(x1) → φ(x2)`.
    pub fn apply(&self, x1: Obj, x2: Obj, h: Arr) -> Arr {
        self.get(x1, x2, h).expect("Φ⁻¹ applied outside its domain")
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// First failure of full faithfulness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FfViolation {
    /// Two arrows `x1 → x2` with the same image.
    NotInjective { x1: Obj, x2: Obj, arrows: (Arr, Arr) },
    /// An arrow `φ(x1) → φ(x2)` with no preimage.
    NotSurjective { x1: Obj, x2: Obj, h: Arr },
}

#[derive(Clone, Debug)]
pub struct WeakEquivalenceReport {
    /// For each codomain object `y`, some `(x, h)` with `h: y → φ(x)`.
    pub ess_surj_witness: Vec<Option<(Obj, Arr)>>,
    pub ff_inverse: std::result::Result<FfInverse, FfViolation>,
}

impl WeakEquivalenceReport {
    pub fn is_essentially_surjective(&self) -> bool {
        self.ess_surj_witness.iter().all(Option::is_some)
    }

    pub fn is_fully_faithful(&self) -> bool {
        self.ff_inverse.is_ok()
    }

    pub fn is_weak_equivalence(&self) -> bool {
        self.is_essentially_surjective() && self.is_fully_faithful()
    }

    /// The first codomain object not reached up to isomorphism.
    pub fn first_unreached(&self) -> Option<Obj> {
        self.ess_surj_witness.iter().position(Option::is_none).map(Obj)
    }
}

fn ess_surj_witness(phi: &Functor) -> Vec<Option<(Obj, Arr)>> {
    let (g, h) = (phi.dom(), phi.cod());
    let mut w = vec![None; h.n_objects()];
    for x in g.objects() {
        for &k in h.arrows_into(phi.obj(x)) {
            let y = h.src(k);
            if w[y.0].is_none() {
                w[y.0] = Some((x, k));
            }
        }
    }
    w
}

fn ff_table(phi: &Functor) -> std::result::Result<FfInverse, FfViolation> {
    let (g, h) = (phi.dom(), phi.cod());
    let mut table = HashMap::default();
    for x1 in g.objects() {
        for x2 in g.objects() {
            let mut seen: HashMap<Arr, Arr> = HashMap::default();
            for &a in g.hom(x1, x2) {
                if let Some(&b) = seen.get(&phi.arr(a)) {
                    return Err(FfViolation::NotInjective { x1, x2, arrows: (b, a) });
                }
                seen.insert(phi.arr(a), a);
            }
            for &k in h.hom(phi.obj(x1), phi.obj(x2)) {
                match seen.get(&k) {
                    Some(&a) => {
                        table.insert((x1, x2, k), a);
                    }
                    None => return Err(FfViolation::NotSurjective { x1, x2, h: k }),
                }
            }
        }
    }
    Ok(FfInverse { table })
}

/// Decides whether `Ψ_φ` is surjective and `Φ_φ` bijective, with witnesses.
pub fn check_weak_equivalence(phi: &Functor) -> WeakEquivalenceReport {
    WeakEquivalenceReport { ess_surj_witness: ess_surj_witness(phi), ff_inverse: ff_table(phi) }
}

pub fn is_weak_equivalence(phi: &Functor) -> bool {
    ess_surj_witness(phi).iter().all(Option::is_some) && ff_table(phi).is_ok()
}

/// `Φ_φ⁻¹`, or `NotFullyFaithful` naming the first violation.
pub fn ff_inverse(phi: &Functor) -> Result<FfInverse> {
    ff_table(phi).map_err(|v| {
        let (g, h) = (phi.dom(), phi.cod());
        GpdError::NotFullyFaithful(match v {
            FfViolation::NotInjective { arrows: (a, b), .. } => {
                format!("{} and {} have the same image", g.arr_label(a), g.arr_label(b))
            }
            FfViolation::NotSurjective { x1, x2, h: k } => format!(
                "{} has no preimage {} → {}",
                h.arr_label(k),
                g.obj_label(x1),
                g.obj_label(x2)
            ),
        })
    })
}

/// Fully faithful and surjective on objects. Such a functor is then also
/// surjective on arrows, which is asserted.
pub fn check_subductive_weak_equivalence(phi: &Functor) -> bool {
    let ok = ff_table(phi).is_ok() && phi.is_surjective_on_objects();
    if ok {
        assert!(phi.is_surjective_on_arrows(), "subductive weak equivalence not surjective on arrows");
    }
    ok
}

/// Inverse of `Φ_φ` for a subductive weak equivalence, or `NotSubductive`.
pub fn subductive_ff_inverse(phi: &Functor) -> Result<FfInverse> {
    if !phi.is_surjective_on_objects() {
        return Err(GpdError::NotSubductive("not surjective on objects".into()));
    }
    ff_inverse(phi).map_err(|e| GpdError::NotSubductive(e.to_string()))
}

/// Given `S: φψ ⇒ φψ′` with `φ` fully faithful, the unique `S′: ψ ⇒ ψ′` with `φS′ = S`.
pub fn rep_ff_factor(
    phi: &Functor,
    psi: &Functor,
    psi2: &Functor,
    s: &NaturalTransformation,
) -> Result<NaturalTransformation> {
    if *s.from() != phi.after(psi) || *s.to() != phi.after(psi2) {
        return Err(GpdError::BoundaryMismatch("S must run from φψ to φψ′".into()));
    }
    let inv = ff_inverse(phi)?;
    NaturalTransformation::new(
        psi.clone(),
        psi2.clone(),
        psi.dom().objects().map(|z| inv.apply(psi.obj(z), psi2.obj(z), s.at(z))).collect(),
    )
}

/// Given `S: ψφ ⇒ ψ′φ` with `φ` a subductive weak equivalence, the unique
/// `S′: ψ ⇒ ψ′` with `S′φ = S`. Every preimage is checked to agree.
pub fn coff_factor(
    phi: &Functor,
    psi: &Functor,
    psi2: &Functor,
    s: &NaturalTransformation,
) -> Result<NaturalTransformation> {
    if !check_subductive_weak_equivalence(phi) {
        return Err(GpdError::NotSubductive("coff_factor needs a subductive weak equivalence".into()));
    }
    if !same_groupoid(psi.dom(), phi.cod()) || *s.from() != psi.after(phi) || *s.to() != psi2.after(phi) {
        return Err(GpdError::BoundaryMismatch("S must run from ψφ to ψ′φ".into()));
    }
    let mut comp: Vec<Option<Arr>> = vec![None; phi.cod().n_objects()];
    for x in phi.dom().objects() {
        let y = phi.obj(x);
        match comp[y.0] {
            None => comp[y.0] = Some(s.at(x)),
            Some(c) if c != s.at(x) => {
                return Err(GpdError::InvariantBroken(format!(
                    "preimages of {} disagree",
                    phi.cod().obj_label(y)
                )))
            }
            _ => {}
        }
    }
    NaturalTransformation::new(psi.clone(), psi2.clone(), comp.into_iter().map(Option::unwrap).collect())
}
