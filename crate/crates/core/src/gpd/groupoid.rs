use std::collections::BTreeMap;

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{GpdError, Result, Violation, ViolationKind};

/// Index of an object inside its groupoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub usize);

/// Index of an arrow inside its groupoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arr(pub usize);

const NONE: Arr = Arr(usize::MAX);

/// A finite groupoid with dense structure tables.
///
/// Objects and arrows are addressed by position; every element also carries a
/// string label, unique within its kind, used for I/O and canonical ordering.
#[derive(Clone)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    arrows: Vec<String>,
    src: Vec<Obj>,
    trg: Vec<Obj>,
    unit: Vec<Arr>,
    inv: Vec<Arr>,
    /// `comp[g][slot[f]]` is `g∘f`, or `NONE` when the table leaves it out.
    comp: Vec<Vec<Arr>>,
    slot: Vec<usize>,
    obj_index: HashMap<String, Obj>,
    arr_index: HashMap<String, Arr>,
    hom: HashMap<(Obj, Obj), Vec<Arr>>,
    into: Vec<Vec<Arr>>,
    from: Vec<Vec<Arr>>,
}

impl PartialEq for FiniteGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.arrows == other.arrows
            && self.src == other.src
            && self.trg == other.trg
            && self.unit == other.unit
            && self.inv == other.inv
            && self.comp == other.comp
    }
}

impl Eq for FiniteGroupoid {}

impl fmt::Debug for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroupoid")
            .field("objects", &self.objects)
            .field("arrows", &self.arrows)
            .finish()
    }
}

impl FiniteGroupoid {
    /// Builds the indexes for already-consistent tables. Callers guarantee the axioms.
    pub(crate) fn from_parts(
        objects: Vec<String>,
        arrows: Vec<String>,
        src: Vec<Obj>,
        trg: Vec<Obj>,
        unit: Vec<Arr>,
        inv: Vec<Arr>,
        comp: HashMap<(Arr, Arr), Arr>,
    ) -> Self {
        let mut g = Self::from_dense(objects, arrows, src, trg, unit, inv, Vec::new());
        g.comp = g.src.iter().map(|s| vec![NONE; g.into[s.0].len()]).collect();
        for ((a, f), h) in comp {
            if g.src[a.0] == g.trg[f.0] {
                g.comp[a.0][g.slot[f.0]] = h;
            }
        }
        g
    }

    /// Like `from_parts`, with `comp[g]` listing `g∘f` for `f` in `arrows_into(src g)` order.
    pub(crate) fn from_dense(
        objects: Vec<String>,
        arrows: Vec<String>,
        src: Vec<Obj>,
        trg: Vec<Obj>,
        unit: Vec<Arr>,
        inv: Vec<Arr>,
        comp: Vec<Vec<Arr>>,
    ) -> Self {
        let mut obj_index = HashMap::with_capacity_and_hasher(objects.len(), Default::default());
        for (i, l) in objects.iter().enumerate() {
            obj_index.entry(l.clone()).or_insert(Obj(i));
        }
        let mut arr_index = HashMap::with_capacity_and_hasher(arrows.len(), Default::default());
        for (i, l) in arrows.iter().enumerate() {
            arr_index.entry(l.clone()).or_insert(Arr(i));
        }
        let mut hom: HashMap<(Obj, Obj), Vec<Arr>> = HashMap::default();
        let mut into = vec![Vec::new(); objects.len()];
        let mut from = vec![Vec::new(); objects.len()];
        let mut slot = vec![0; arrows.len()];
        for a in 0..arrows.len() {
            hom.entry((src[a], trg[a])).or_default().push(Arr(a));
            slot[a] = into[trg[a].0].len();
            into[trg[a].0].push(Arr(a));
            from[src[a].0].push(Arr(a));
        }
        FiniteGroupoid { objects, arrows, src, trg, unit, inv, comp, slot, obj_index, arr_index, hom, into, from }
    }

    pub fn empty() -> Self {
        Self::from_parts(vec![], vec![], vec![], vec![], vec![], vec![], HashMap::default())
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + '_ {
        (0..self.objects.len()).map(Obj)
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arr> + '_ {
        (0..self.arrows.len()).map(Arr)
    }

    pub fn obj_label(&self, x: Obj) -> &str {
        &self.objects[x.0]
    }

    pub fn arr_label(&self, a: Arr) -> &str {
        &self.arrows[a.0]
    }

    pub fn obj_labels(&self) -> &[String] {
        &self.objects
    }

    pub fn arr_labels(&self) -> &[String] {
        &self.arrows
    }

    pub fn obj_by_label(&self, l: &str) -> Option<Obj> {
        self.obj_index.get(l).copied()
    }

    pub fn arr_by_label(&self, l: &str) -> Option<Arr> {
        self.arr_index.get(l).copied()
    }

    pub fn src(&self, a: Arr) -> Obj {
        self.src[a.0]
    }

    pub fn trg(&self, a: Arr) -> Obj {
        self.trg[a.0]
    }

    pub fn unit(&self, x: Obj) -> Arr {
        self.unit[x.0]
    }

    pub fn inv(&self, a: Arr) -> Arr {
        self.inv[a.0]
    }

    pub fn is_unit(&self, a: Arr) -> bool {
        self.src(a) == self.trg(a) && self.unit(self.src(a)) == a
    }

    /// `g ∘ f`, defined when `src g = trg f`.
    pub fn try_comp(&self, g: Arr, f: Arr) -> Option<Arr> {
        if self.src[g.0] != self.trg[f.0] {
            return None;
        }
        Some(self.comp[g.0][self.slot[f.0]]).filter(|&h| h != NONE)
    }

    /// `g ∘ f`; panics on a non-composable pair.
    pub fn comp(&self, g: Arr, f: Arr) -> Arr {
        match self.try_comp(g, f) {
            Some(h) => h,
            None => panic!(
                "arrows {} and {} are not composable",
                self.arr_label(g),
                self.arr_label(f)
            ),
        }
    }

    /// Left-to-right product of a path written in composition order: `comp_all(&[c, b, a]) = c∘b∘a`.
    pub fn comp_all(&self, path: &[Arr]) -> Arr {
        let mut it = path.iter().rev();
        let mut acc = *it.next().expect("empty path");
        for &g in it {
            acc = self.comp(g, acc);
        }
        acc
    }

    pub fn hom(&self, x: Obj, y: Obj) -> &[Arr] {
        self.hom.get(&(x, y)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn arrows_into(&self, y: Obj) -> &[Arr] {
        &self.into[y.0]
    }

    pub fn arrows_from(&self, x: Obj) -> &[Arr] {
        &self.from[x.0]
    }

    /// Automorphism arrows at `x` (the stabilizer).
    pub fn automorphisms(&self, x: Obj) -> &[Arr] {
        self.hom(x, x)
    }

    /// Connected components, each sorted, ordered by least object.
    pub fn components(&self) -> Vec<Vec<Obj>> {
        let mut seen = vec![false; self.n_objects()];
        let mut out = Vec::new();
        for x in self.objects() {
            if seen[x.0] {
                continue;
            }
            let mut c: Vec<Obj> = self.arrows_from(x).iter().map(|&a| self.trg(a)).collect();
            c.sort_unstable();
            c.dedup();
            for y in &c {
                seen[y.0] = true;
            }
            out.push(c);
        }
        out
    }

    pub fn composable_pairs(&self) -> impl Iterator<Item = (Arr, Arr, Arr)> + '_ {
        self.comp.iter().enumerate().flat_map(move |(g, row)| {
            let s = self.src[g];
            row.iter().zip(&self.into[s.0]).filter(|(&h, _)| h != NONE).map(move |(&h, &f)| (Arr(g), f, h))
        })
    }

    pub fn n_composable_pairs(&self) -> usize {
        self.comp.iter().map(|row| row.iter().filter(|&&h| h != NONE).count()).sum()
    }

    /// Re-checks every axiom instance by enumeration.
    pub fn check_axioms(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        let ax = |name: &str, els: Vec<String>| Violation::new(ViolationKind::AxiomViolation, name, els);
        for x in self.objects() {
            let u = self.unit(x);
            if self.src(u) != x || self.trg(u) != x {
                out.push(ax("unit", vec![self.obj_label(x).into()]));
            }
        }
        for f in self.arrows() {
            for &g in self.arrows_from(self.trg(f)) {
                match self.try_comp(g, f) {
                    None => out.push(ax("comp-total", vec![self.arr_label(g).into(), self.arr_label(f).into()])),
                    Some(h) => {
                        if self.src(h) != self.src(f) || self.trg(h) != self.trg(g) {
                            out.push(ax("comp-endpoints", vec![self.arr_label(g).into(), self.arr_label(f).into()]));
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return Err(out);
        }
        for f in self.arrows() {
            let (s, t) = (self.src(f), self.trg(f));
            if self.comp(self.unit(t), f) != f || self.comp(f, self.unit(s)) != f {
                out.push(ax("unit-law", vec![self.arr_label(f).into()]));
            }
            let i = self.inv(f);
            if self.src(i) != t || self.trg(i) != s {
                out.push(ax("inverse", vec![self.arr_label(f).into()]));
                continue;
            }
            if self.comp(i, f) != self.unit(s) || self.comp(f, i) != self.unit(t) {
                out.push(ax("inverse", vec![self.arr_label(f).into()]));
            }
        }
        for f in self.arrows() {
            for &g in self.arrows_from(self.trg(f)) {
                let gf = self.comp(g, f);
                for &h in self.arrows_from(self.trg(g)) {
                    if self.comp(h, gf) != self.comp(self.comp(h, g), f) {
                        out.push(ax(
                            "associativity",
                            vec![self.arr_label(h).into(), self.arr_label(g).into(), self.arr_label(f).into()],
                        ));
                    }
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// Canonical raw form; `validate_groupoid(&g.to_data())` reproduces `g`.
    pub fn to_data(&self) -> GroupoidData {
        let mut compose: Vec<(Arr, Arr, Arr)> = self.composable_pairs().collect();
        compose.sort();
        GroupoidData {
            objects: self.objects.clone(),
            arrows: self
                .arrows()
                .map(|a| ArrowDecl {
                    id: self.arr_label(a).into(),
                    src: self.obj_label(self.src(a)).into(),
                    trg: self.obj_label(self.trg(a)).into(),
                })
                .collect(),
            units: self
                .objects()
                .map(|x| (self.obj_label(x).to_string(), self.arr_label(self.unit(x)).to_string()))
                .collect(),
            inverse: self
                .arrows()
                .map(|a| (self.arr_label(a).to_string(), self.arr_label(self.inv(a)).to_string()))
                .collect(),
            compose: compose
                .into_iter()
                .map(|(g, f, h)| {
                    [self.arr_label(g).to_string(), self.arr_label(f).to_string(), self.arr_label(h).to_string()]
                })
                .collect(),
        }
    }
}

/// Raw, unvalidated groupoid description (the on-disk JSON shape).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidData {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    #[serde(default)]
    pub units: BTreeMap<String, String>,
    #[serde(default)]
    pub inverse: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDecl {
    pub id: String,
    pub src: String,
    pub trg: String,
}

/// Validates raw data, reporting every violation found.
pub fn validate_groupoid(data: &GroupoidData) -> Result<FiniteGroupoid> {
    use ViolationKind::*;
    let mut vs = Vec::new();
    let mut obj_index = HashMap::default();
    for (i, o) in data.objects.iter().enumerate() {
        if obj_index.insert(o.clone(), Obj(i)).is_some() {
            vs.push(Violation::new(DuplicateId, "object", vec![o.clone()]));
        }
    }
    let mut arr_index = HashMap::default();
    let mut src = Vec::with_capacity(data.arrows.len());
    let mut trg = Vec::with_capacity(data.arrows.len());
    for (i, a) in data.arrows.iter().enumerate() {
        if arr_index.insert(a.id.clone(), Arr(i)).is_some() {
            vs.push(Violation::new(DuplicateId, "arrow", vec![a.id.clone()]));
        }
        for (end, o) in [("src", &a.src), ("trg", &a.trg)] {
            if !obj_index.contains_key(o) {
                vs.push(Violation::new(DanglingReference, end, vec![a.id.clone(), o.clone()]));
            }
        }
        src.push(obj_index.get(&a.src).copied().unwrap_or(Obj(0)));
        trg.push(obj_index.get(&a.trg).copied().unwrap_or(Obj(0)));
    }
    if !vs.is_empty() {
        return Err(GpdError::Invalid(vs));
    }

    let mut unit = vec![None; data.objects.len()];
    for (o, a) in &data.units {
        match (obj_index.get(o), arr_index.get(a)) {
            (Some(&x), Some(&u)) => unit[x.0] = Some(u),
            _ => vs.push(Violation::new(DanglingReference, "unit", vec![o.clone(), a.clone()])),
        }
    }
    for (i, u) in unit.iter().enumerate() {
        if u.is_none() {
            vs.push(Violation::new(AxiomViolation, "unit", vec![data.objects[i].clone()]));
        }
    }
    let mut inv = vec![None; data.arrows.len()];
    for (a, b) in &data.inverse {
        match (arr_index.get(a), arr_index.get(b)) {
            (Some(&x), Some(&y)) => inv[x.0] = Some(y),
            _ => vs.push(Violation::new(DanglingReference, "inverse", vec![a.clone(), b.clone()])),
        }
    }
    for (i, u) in inv.iter().enumerate() {
        if u.is_none() {
            vs.push(Violation::new(AxiomViolation, "inverse", vec![data.arrows[i].id.clone()]));
        }
    }
    let mut comp = HashMap::default();
    for [g, f, h] in &data.compose {
        let (Some(&gi), Some(&fi), Some(&hi)) = (arr_index.get(g), arr_index.get(f), arr_index.get(h)) else {
            vs.push(Violation::new(DanglingReference, "compose", vec![g.clone(), f.clone(), h.clone()]));
            continue;
        };
        if src[gi.0] != trg[fi.0] {
            vs.push(Violation::new(AxiomViolation, "composable", vec![g.clone(), f.clone()]));
            continue;
        }
        if let Some(prev) = comp.insert((gi, fi), hi) {
            if prev != hi {
                vs.push(Violation::new(AxiomViolation, "comp-functional", vec![g.clone(), f.clone()]));
            }
        }
    }
    if !vs.is_empty() {
        return Err(GpdError::Invalid(vs));
    }
    let g = FiniteGroupoid::from_parts(
        data.objects.clone(),
        data.arrows.iter().map(|a| a.id.clone()).collect(),
        src,
        trg,
        unit.into_iter().map(Option::unwrap).collect(),
        inv.into_iter().map(Option::unwrap).collect(),
        comp,
    );
    g.check_axioms().map_err(GpdError::Invalid)?;
    Ok(g)
}

/// Assembles a groupoid from keyed elements and structure closures.
///
/// Panics if a closure produces a key outside the supplied element lists; every
/// caller builds closed constructions, so that would be a bug here.
#[allow(clippy::too_many_arguments)]
pub(crate) fn assemble<O, A>(
    objects: Vec<(O, String)>,
    arrows: Vec<(A, String)>,
    src: impl Fn(&A) -> O,
    trg: impl Fn(&A) -> O,
    unit: impl Fn(&O) -> A,
    inv: impl Fn(&A) -> A,
    comp: impl Fn(&A, &A) -> A,
) -> Keyed<O, A>
where
    O: Eq + Hash + Clone,
    A: Eq + Hash + Clone,
{
    let obj_of: HashMap<O, Obj> = objects.iter().enumerate().map(|(i, (k, _))| (k.clone(), Obj(i))).collect();
    let arr_of: HashMap<A, Arr> = arrows.iter().enumerate().map(|(i, (k, _))| (k.clone(), Arr(i))).collect();
    let lo = |k: &O| *obj_of.get(k).expect("construction produced an unknown object");
    let la = |k: &A| *arr_of.get(k).expect("construction produced an unknown arrow");
    let src_v: Vec<Obj> = arrows.iter().map(|(k, _)| lo(&src(k))).collect();
    let trg_v: Vec<Obj> = arrows.iter().map(|(k, _)| lo(&trg(k))).collect();
    let unit_v: Vec<Arr> = objects.iter().map(|(k, _)| la(&unit(k))).collect();
    let inv_v: Vec<Arr> = arrows.iter().map(|(k, _)| la(&inv(k))).collect();
    let mut into = vec![Vec::new(); objects.len()];
    for (i, t) in trg_v.iter().enumerate() {
        into[t.0].push(i);
    }
    let comp_t: Vec<Vec<Arr>> = arrows
        .iter()
        .enumerate()
        .map(|(gi, (gk, _))| into[src_v[gi].0].iter().map(|&fi| la(&comp(gk, &arrows[fi].0))).collect())
        .collect();
    let (okeys, olabels): (Vec<O>, Vec<String>) = objects.into_iter().unzip();
    let (akeys, alabels): (Vec<A>, Vec<String>) = arrows.into_iter().unzip();
    let groupoid = FiniteGroupoid::from_dense(olabels, alabels, src_v, trg_v, unit_v, inv_v, comp_t);
    Keyed { groupoid, okeys, akeys, obj_of, arr_of }
}

/// A groupoid together with the structured keys its elements were built from.
#[derive(Clone, Debug)]
pub(crate) struct Keyed<O: Eq + Hash, A: Eq + Hash> {
    pub groupoid: FiniteGroupoid,
    pub okeys: Vec<O>,
    pub akeys: Vec<A>,
    pub obj_of: HashMap<O, Obj>,
    pub arr_of: HashMap<A, Arr>,
}

pub(crate) fn tuple_label(parts: &[&str]) -> String {
    format!("({})", parts.join(","))
}

pub(crate) fn check_unique(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::default();
    let dups: Vec<String> = labels.iter().filter(|l| !seen.insert(l.as_str())).cloned().collect();
    if dups.is_empty() {
        Ok(())
    } else {
        Err(GpdError::Invalid(vec![Violation::new(ViolationKind::DuplicateId, "label", dups)]))
    }
}
