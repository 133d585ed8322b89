//! Bibundles between finite groupoids: two commuting actions on one carrier,
//! composed by balanced tensor product.

mod action;
mod tensor;
mod translate;

use rustc_hash::FxHashMap as HashMap;
use std::sync::Arc;

pub use action::{GroupoidAction, Side};
pub use tensor::{
    associator, hcomp_bi, tensor, tensor_detailed, unitor_left_bi, unitor_right_bi, vcomp_bi, whisker_left_bi,
    whisker_right_bi, Tensor,
};
pub use translate::{
    biequiv_to_transformation, bibundle_roundtrip_iso, bibundle_to_anafunctor, bibundlise_action_iso,
    gm_to_bibundle, spanise_bibundle_iso, transformation_to_biequiv, twocell_to_biequiv, ActionAnafunctor,
    GmBibundle,
};

use crate::error::{GpdError, Result};
use crate::gpd::{same_groupoid, tuple_label, Arr, FiniteGroupoid, Functor, NaturalTransformation, Obj};

/// Division table of a free and transitive-on-fibres action: `(x, y)` maps to
/// the unique arrow taking `x` to `y`.
pub type DivisionTable = HashMap<(usize, usize), Arr>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Principality {
    pub left_principal: bool,
    pub right_principal: bool,
}

impl Principality {
    pub fn biprincipal(&self) -> bool {
        self.left_principal && self.right_principal
    }
}

/// The flags together with the division tables behind them.
#[derive(Clone, Debug)]
pub struct PrincipalityReport {
    pub flags: Principality,
    /// `(x, x′) ↦ h` with `x·h = x′`.
    pub right_division: Option<DivisionTable>,
    /// `(x, x′) ↦ g` with `g·x = x′`.
    pub left_division: Option<DivisionTable>,
}

/// A `G`–`H` bibundle.
#[derive(Clone, Debug)]
pub struct Bibundle {
    left: GroupoidAction,
    right: GroupoidAction,
    right_div: Option<Arc<DivisionTable>>,
    left_div: Option<Arc<DivisionTable>>,
}

impl PartialEq for Bibundle {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left && self.right == other.right
    }
}

impl Eq for Bibundle {}

/// Right-principal division data for `act`, where `base` is the anchor of
/// the other action onto `n_base` objects. `None` when the anchor misses an
/// object, or the action map is not a bijection onto the fibred square.
fn division(act: &GroupoidAction, base: &[Obj], n_base: usize) -> Option<DivisionTable> {
    let mut hit = vec![false; n_base];
    for o in base {
        hit[o.0] = true;
    }
    if hit.iter().any(|h| !h) {
        return None;
    }
    let mut fibre = vec![0usize; n_base];
    for o in base {
        fibre[o.0] += 1;
    }
    let square: usize = fibre.iter().map(|n| n * n).sum();
    let mut table = HashMap::with_capacity_and_hasher(square, Default::default());
    for x in 0..act.len() {
        for &a in act.acting_on(x) {
            if table.insert((x, act.act(a, x)), a).is_some() {
                return None;
            }
        }
    }
    (table.len() == square).then_some(table)
}

impl Bibundle {
    pub fn new(left: GroupoidAction, right: GroupoidAction) -> Result<Self> {
        let b = Self::new_unchecked(left, right);
        b.check()?;
        Ok(b)
    }

    pub(crate) fn new_unchecked(left: GroupoidAction, right: GroupoidAction) -> Self {
        let right_div = division(&right, left.anchors(), left.actor().n_objects()).map(Arc::new);
        let left_div = division(&left, right.anchors(), right.actor().n_objects()).map(Arc::new);
        Bibundle { left, right, right_div, left_div }
    }

    pub fn check(&self) -> Result<()> {
        let (l, r) = (&self.left, &self.right);
        if l.side() != Side::Left || r.side() != Side::Right {
            return Err(GpdError::ActionAxiomViolation("bibundle needs a left and a right action".into()));
        }
        if l.carrier() != r.carrier() {
            return Err(GpdError::ActionAxiomViolation("actions on different carriers".into()));
        }
        l.check()?;
        r.check()?;
        for x in 0..l.len() {
            for &g in l.acting_on(x) {
                let gx = l.act(g, x);
                if r.anchor(gx) != r.anchor(x) {
                    return Err(GpdError::ActionAxiomViolation("right anchor is not left-invariant".into()));
                }
                for &h in r.acting_on(x) {
                    let xh = r.act(h, x);
                    if l.anchor(xh) != l.anchor(x) {
                        return Err(GpdError::ActionAxiomViolation("left anchor is not right-invariant".into()));
                    }
                    if r.act(h, gx) != l.act(g, xh) {
                        return Err(GpdError::ActionAxiomViolation(format!(
                            "actions do not commute at {}",
                            l.carrier()[x]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FiniteGroupoid> {
        self.left.actor()
    }

    pub fn target(&self) -> &Arc<FiniteGroupoid> {
        self.right.actor()
    }

    pub fn left_action(&self) -> &GroupoidAction {
        &self.left
    }

    pub fn right_action(&self) -> &GroupoidAction {
        &self.right
    }

    pub fn carrier(&self) -> &[String] {
        self.left.carrier()
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn l(&self, x: usize) -> Obj {
        self.left.anchor(x)
    }

    pub fn r(&self, x: usize) -> Obj {
        self.right.anchor(x)
    }

    /// `g·x`, if defined.
    pub fn act_left(&self, g: Arr, x: usize) -> Option<usize> {
        self.left.try_act(g, x)
    }

    /// `x·h`, if defined.
    pub fn act_right(&self, x: usize, h: Arr) -> Option<usize> {
        self.right.try_act(h, x)
    }

    pub fn principality(&self) -> Principality {
        Principality { left_principal: self.left_div.is_some(), right_principal: self.right_div.is_some() }
    }

    pub fn is_right_principal(&self) -> bool {
        self.right_div.is_some()
    }

    pub fn is_biprincipal(&self) -> bool {
        self.principality().biprincipal()
    }

    /// The `h` with `x·h = y`.
    pub fn right_division(&self, x: usize, y: usize) -> Option<Arr> {
        self.right_div.as_ref()?.get(&(x, y)).copied()
    }

    /// The `g` with `g·x = y`.
    pub fn left_division(&self, x: usize, y: usize) -> Option<Arr> {
        self.left_div.as_ref()?.get(&(x, y)).copied()
    }

    pub(crate) fn require_right_principal(&self) -> Result<()> {
        if self.is_right_principal() {
            Ok(())
        } else {
            Err(GpdError::NotRightPrincipal("bibundle is not right principal".into()))
        }
    }
}

/// Principality flags and division tables. Left principality is right
/// principality of the opposite bibundle, with divisions inverted.
pub fn check_principality(b: &Bibundle) -> PrincipalityReport {
    let op = opposite(b);
    let src = b.source().clone();
    let left_division = op
        .right_div
        .as_ref()
        .map(|t| t.iter().map(|(&k, &a)| (k, src.inv(a))).collect::<DivisionTable>());
    debug_assert_eq!(left_division.is_some(), b.left_div.is_some());
    PrincipalityReport {
        flags: Principality { left_principal: left_division.is_some(), right_principal: b.right_div.is_some() },
        right_division: b.right_div.as_deref().cloned(),
        left_division,
    }
}

/// `G ←trg G₁ →src G`, acting by composition.
pub fn identity_bibundle(g: &Arc<FiniteGroupoid>) -> Bibundle {
    let carrier = g.arr_labels().to_vec();
    let left = GroupoidAction::from_fn(g, Side::Left, carrier.clone(), g.arrows().map(|a| g.trg(a)).collect(), |a, k| {
        g.comp(a, Arr(k)).0
    });
    let right = GroupoidAction::from_fn(g, Side::Right, carrier, g.arrows().map(|a| g.src(a)).collect(), |h, k| {
        g.comp(Arr(k), h).0
    });
    Bibundle::new_unchecked(left, right)
}

/// Same actions read from the other side: `h·x := x·h⁻¹`, `x·g := g⁻¹·x`.
pub fn opposite(b: &Bibundle) -> Bibundle {
    let (g, h) = (b.source().clone(), b.target().clone());
    let carrier = b.carrier().to_vec();
    let left = GroupoidAction::from_fn(&h, Side::Left, carrier.clone(), b.right.anchors().to_vec(), |a, x| {
        b.right.act(h.inv(a), x)
    });
    let right = GroupoidAction::from_fn(&g, Side::Right, carrier, b.left.anchors().to_vec(), |a, x| {
        b.left.act(g.inv(a), x)
    });
    Bibundle::new_unchecked(left, right)
}

/// `G ← G₀ ×_{φ,trg} H₁ → H`: points `(x, h)` with `trg h = φ(x)`.
pub fn bibundlise(phi: &Functor) -> Bibundle {
    let (g, h) = (phi.dom().clone(), phi.cod().clone());
    let mut pts = Vec::new();
    for x in g.objects() {
        for &k in h.arrows_into(phi.obj(x)) {
            pts.push((x, k));
        }
    }
    let index: HashMap<(Obj, Arr), usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let carrier: Vec<String> = pts.iter().map(|&(x, k)| tuple_label(&[g.obj_label(x), h.arr_label(k)])).collect();
    let left = GroupoidAction::from_fn(&g, Side::Left, carrier.clone(), pts.iter().map(|p| p.0).collect(), |a, i| {
        let (_, k) = pts[i];
        index[&(g.trg(a), h.comp(phi.arr(a), k))]
    });
    let right = GroupoidAction::from_fn(&h, Side::Right, carrier, pts.iter().map(|&(_, k)| h.src(k)).collect(), |a, i| {
        let (x, k) = pts[i];
        index[&(x, h.comp(k, a))]
    });
    Bibundle::new_unchecked(left, right)
}

fn bibundlise_point(b: &Bibundle, phi: &Functor, x: Obj, k: Arr) -> usize {
    let label = tuple_label(&[phi.dom().obj_label(x), phi.cod().arr_label(k)]);
    b.left.point_by_label(&label).expect("point of a bibundlisation")
}

/// `(x, h) ↦ (x, S(x)·h)`.
pub fn bibundlise_2cell(s: &NaturalTransformation) -> BiequivariantMap {
    let (src, trg) = (bibundlise(s.from()), bibundlise(s.to()));
    let h = s.cod().clone();
    let index = bibundlise_index(s.from());
    let map = index
        .iter()
        .map(|&(x, k)| bibundlise_point(&trg, s.to(), x, h.comp(s.at(x), k)))
        .collect();
    BiequivariantMap::new(src, trg, map).expect("bibundlisation of a natural transformation")
}

pub(crate) fn bibundlise_index(phi: &Functor) -> Vec<(Obj, Arr)> {
    let mut pts = Vec::new();
    for x in phi.dom().objects() {
        for &k in phi.cod().arrows_into(phi.obj(x)) {
            pts.push((x, k));
        }
    }
    pts
}

/// `γ: B(φ) ⊗ B(ψ) → B(ψφ)`, `(x, h) ⊗ (y, k) ↦ (x, ψ(h)·k)`.
pub fn gamma(phi: &Functor, psi: &Functor) -> Result<BiequivariantMap> {
    let (bphi, bpsi) = (bibundlise(phi), bibundlise(psi));
    let t = tensor_detailed(&bphi, &bpsi)?;
    let comp = psi.after(phi);
    let target = bibundlise(&comp);
    let (i1, i2) = (bibundlise_index(phi), bibundlise_index(psi));
    let k = psi.cod().clone();
    let map = t
        .reps()
        .iter()
        .map(|&(u, v)| {
            let (x, h) = i1[u];
            let (_, kk) = i2[v];
            bibundlise_point(&target, &comp, x, k.comp(psi.arr(h), kk))
        })
        .collect();
    BiequivariantMap::new(t.bibundle, target, map)
}

/// `ι: G₁ → B(id_G)`, `g ↦ (trg g, g)`.
pub fn iota(g: &Arc<FiniteGroupoid>) -> BiequivariantMap {
    let id = Functor::identity(g);
    let target = bibundlise(&id);
    let map = g.arrows().map(|a| bibundlise_point(&target, &id, g.trg(a), a)).collect();
    BiequivariantMap::new(identity_bibundle(g), target, map).expect("ι is bi-equivariant")
}

/// A map of bibundles commuting with both anchors and both actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiequivariantMap {
    source: Bibundle,
    target: Bibundle,
    map: Vec<usize>,
}

impl BiequivariantMap {
    pub fn new(source: Bibundle, target: Bibundle, map: Vec<usize>) -> Result<Self> {
        let m = BiequivariantMap { source, target, map };
        m.check()?;
        Ok(m)
    }

    pub fn identity(b: &Bibundle) -> Self {
        BiequivariantMap { source: b.clone(), target: b.clone(), map: (0..b.len()).collect() }
    }

    pub fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if !same_groupoid(s.source(), t.source()) || !same_groupoid(s.target(), t.target()) {
            return Err(GpdError::BoundaryMismatch("bi-equivariant map between bibundles with different endpoints".into()));
        }
        if self.map.len() != s.len() || self.map.iter().any(|&y| y >= t.len()) {
            return Err(GpdError::NotEquivariant("map table size".into()));
        }
        for x in 0..s.len() {
            let y = self.map[x];
            if s.l(x) != t.l(y) || s.r(x) != t.r(y) {
                return Err(GpdError::NotEquivariant(format!("anchors differ at {}", s.carrier()[x])));
            }
            for &g in s.left.acting_on(x) {
                if self.map[s.left.act(g, x)] != t.left.act(g, y) {
                    return Err(GpdError::NotEquivariant(format!("left action at {}", s.carrier()[x])));
                }
            }
            for &h in s.right.acting_on(x) {
                if self.map[s.right.act(h, x)] != t.right.act(h, y) {
                    return Err(GpdError::NotEquivariant(format!("right action at {}", s.carrier()[x])));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Bibundle {
        &self.source
    }

    pub fn target(&self) -> &Bibundle {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut seen = vec![false; self.target.len()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &y)| i == y)
    }

    pub fn inverse(&self) -> Result<BiequivariantMap> {
        if !self.is_bijective() {
            return Err(GpdError::NotBijective("only bijections can be inverted".into()));
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Ok(BiequivariantMap { source: self.target.clone(), target: self.source.clone(), map: inv })
    }
}

/// The opposite bibundle with the two witnesses built from division maps.
#[derive(Clone, Debug)]
pub struct BiQuasiInverse {
    pub inverse: Bibundle,
    /// `b ⊗ b̄ → G₁`, `[x, x′] ↦ d_G(x′, x)`.
    pub unit: BiequivariantMap,
    /// `b̄ ⊗ b → H₁`, `[x′, x] ↦ d_H(x′, x)`.
    pub counit: BiequivariantMap,
}

pub fn quasi_inverse_bi(b: &Bibundle) -> Result<BiQuasiInverse> {
    if !b.is_biprincipal() {
        return Err(GpdError::NotBiprincipal("bibundle has no quasi-inverse".into()));
    }
    let inverse = opposite(b);
    let t1 = tensor_detailed(b, &inverse)?;
    let map = t1.reps().iter().map(|&(x, x2)| b.left_division(x2, x).expect("biprincipal").0).collect();
    let unit = BiequivariantMap::new(t1.bibundle, identity_bibundle(b.source()), map)?;
    let t2 = tensor_detailed(&inverse, b)?;
    let map = t2.reps().iter().map(|&(x2, x)| b.right_division(x2, x).expect("biprincipal").0).collect();
    let counit = BiequivariantMap::new(t2.bibundle, identity_bibundle(b.target()), map)?;
    if !unit.is_bijective() || !counit.is_bijective() {
        return Err(GpdError::InvariantBroken("division maps of a biprincipal bibundle are not bijective".into()));
    }
    Ok(BiQuasiInverse { inverse, unit, counit })
}
