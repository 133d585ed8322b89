use rustc_hash::FxHashMap as HashMap;

use super::{Bibundle, BiequivariantMap, GroupoidAction, Side};
use crate::error::{GpdError, Result};
use crate::gpd::{enforce_cap, same_groupoid, size_cap};

/// A balanced tensor product `(X ×_{r,l} Y)/H` with its class bookkeeping.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub bibundle: Bibundle,
    reps: Vec<(usize, usize)>,
    class_of: HashMap<(usize, usize), usize>,
}

impl Tensor {
    /// Minimal representative of each class.
    pub fn reps(&self) -> &[(usize, usize)] {
        &self.reps
    }

    /// The class `[x, y]`.
    pub fn class(&self, x: usize, y: usize) -> Option<usize> {
        self.class_of.get(&(x, y)).copied()
    }
}

pub fn tensor(b1: &Bibundle, b2: &Bibundle) -> Result<Bibundle> {
    tensor_detailed(b1, b2).map(|t| t.bibundle)
}

pub fn tensor_detailed(b1: &Bibundle, b2: &Bibundle) -> Result<Tensor> {
    if !same_groupoid(b1.target(), b2.source()) {
        return Err(GpdError::BoundaryMismatch("tensor needs a shared middle groupoid".into()));
    }
    let h = b1.target();
    let mut pairs = Vec::new();
    for x in 0..b1.len() {
        for y in 0..b2.len() {
            if b1.r(x) == b2.l(y) {
                pairs.push((x, y));
            }
        }
    }
    enforce_cap("tensor product", pairs.len(), size_cap())?;

    // the orbit of (x, y) is {(x·h, h⁻¹·y)}; pairs are visited in increasing
    // order so the first member met is the minimal one
    let mut class_of = HashMap::default();
    let mut reps = Vec::new();
    for &(x, y) in &pairs {
        if class_of.contains_key(&(x, y)) {
            continue;
        }
        let c = reps.len();
        reps.push((x, y));
        for &a in b1.right_action().acting_on(x) {
            let p = (b1.right_action().act(a, x), b2.left_action().act(h.inv(a), y));
            class_of.insert(p, c);
        }
    }

    let carrier: Vec<String> =
        reps.iter().map(|&(x, y)| format!("[{}⊗{}]", b1.carrier()[x], b2.carrier()[y])).collect();
    let left = GroupoidAction::from_fn(
        b1.source(),
        Side::Left,
        carrier.clone(),
        reps.iter().map(|&(x, _)| b1.l(x)).collect(),
        |g, c| {
            let (x, y) = reps[c];
            class_of[&(b1.left_action().act(g, x), y)]
        },
    );
    let right = GroupoidAction::from_fn(
        b2.target(),
        Side::Right,
        carrier,
        reps.iter().map(|&(_, y)| b2.r(y)).collect(),
        |k, c| {
            let (x, y) = reps[c];
            class_of[&(x, b2.right_action().act(k, y))]
        },
    );
    let bibundle = Bibundle::new_unchecked(left, right);
    debug_assert!(!(b1.is_right_principal() && b2.is_right_principal()) || bibundle.is_right_principal());
    Ok(Tensor { bibundle, reps, class_of })
}

/// `A: (X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`.
pub fn associator(x: &Bibundle, y: &Bibundle, z: &Bibundle) -> Result<BiequivariantMap> {
    let xy = tensor_detailed(x, y)?;
    let xy_z = tensor_detailed(&xy.bibundle, z)?;
    let yz = tensor_detailed(y, z)?;
    let x_yz = tensor_detailed(x, &yz.bibundle)?;
    let map = xy_z
        .reps()
        .iter()
        .map(|&(c, k)| {
            let (i, j) = xy.reps()[c];
            x_yz.class(i, yz.class(j, k).expect("inner class")).expect("outer class")
        })
        .collect();
    BiequivariantMap::new(xy_z.bibundle, x_yz.bibundle, map)
}

/// `λ: G₁ ⊗ X → X`, `g ⊗ x ↦ g·x`.
pub fn unitor_left_bi(b: &Bibundle) -> Result<BiequivariantMap> {
    let t = tensor_detailed(&super::identity_bibundle(b.source()), b)?;
    let map = t.reps().iter().map(|&(g, x)| b.left_action().act(crate::gpd::Arr(g), x)).collect();
    BiequivariantMap::new(t.bibundle, b.clone(), map)
}

/// `ρ: X ⊗ H₁ → X`, `x ⊗ h ↦ x·h`.
pub fn unitor_right_bi(b: &Bibundle) -> Result<BiequivariantMap> {
    let t = tensor_detailed(b, &super::identity_bibundle(b.target()))?;
    let map = t.reps().iter().map(|&(x, h)| b.right_action().act(crate::gpd::Arr(h), x)).collect();
    BiequivariantMap::new(t.bibundle, b.clone(), map)
}

/// Function composition: first `a`, then `b`.
pub fn vcomp_bi(a: &BiequivariantMap, b: &BiequivariantMap) -> Result<BiequivariantMap> {
    if a.target() != b.source() {
        return Err(GpdError::BoundaryMismatch("vcomp_bi: maps are not composable".into()));
    }
    BiequivariantMap::new(a.source().clone(), b.target().clone(), a.map().iter().map(|&x| b.apply(x)).collect())
}

/// `α ⊗ β: [x, y] ↦ [α(x), β(y)]`.
pub fn hcomp_bi(a: &BiequivariantMap, b: &BiequivariantMap) -> Result<BiequivariantMap> {
    let s = tensor_detailed(a.source(), b.source())?;
    let t = tensor_detailed(a.target(), b.target())?;
    let map = s
        .reps()
        .iter()
        .map(|&(x, y)| t.class(a.apply(x), b.apply(y)).expect("image pair is balanced"))
        .collect();
    BiequivariantMap::new(s.bibundle, t.bibundle, map)
}

pub fn whisker_left_bi(x: &Bibundle, b: &BiequivariantMap) -> Result<BiequivariantMap> {
    hcomp_bi(&BiequivariantMap::identity(x), b)
}

pub fn whisker_right_bi(a: &BiequivariantMap, y: &Bibundle) -> Result<BiequivariantMap> {
    hcomp_bi(a, &BiequivariantMap::identity(y))
}
