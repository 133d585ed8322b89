//! JSON documents, the named workspace they load into, and DOT export.
//!
//! A document is either a bare groupoid (`{"objects", "arrows", "units",
//! "inverse", "compose"}`) or a workspace with named sections that refer to
//! each other by name:
//!
//! ```json
//! {
//!   "groupoids": { "G": { "objects": [], "arrows": [] } },
//!   "functors": { "F": { "dom": "G", "cod": "H", "objects": {}, "arrows": {} } },
//!   "transformations": { "T": { "from": "F", "to": "F2", "components": {} } },
//!   "spans": { "S": { "left": "F", "right": "F2" } },
//!   "diagrams": { "D": { "source": "S", "target": "S2", "alpha": "A", "alpha2": "A2", "s1": "T1", "s2": "T2" } },
//!   "bibundles": { "B": { "left": "G", "right": "H", "points": [], "left_anchor": {}, "right_anchor": {},
//!                         "left_action": [["g", "p", "q"]], "right_action": [["p", "h", "q"]] } }
//! }
//! ```
//!
//! Saving always writes the canonical form, so loading and saving a canonical
//! file reproduces it byte for byte.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bibundle::{Bibundle, GroupoidAction, Side};
use crate::error::GpdError;
use crate::fractions::{GeneralizedMorphism, TwoCellDiagram};
use crate::gpd::{same_groupoid, validate_groupoid, Arr, FiniteGroupoid, Functor, GroupoidData, NaturalTransformation, Obj};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorData {
    pub dom: String,
    pub cod: String,
    pub objects: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationData {
    pub from: String,
    pub to: String,
    pub components: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanData {
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramData {
    pub source: String,
    pub target: String,
    pub alpha: String,
    pub alpha2: String,
    pub s1: String,
    pub s2: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BibundleData {
    pub left: String,
    pub right: String,
    pub points: Vec<String>,
    pub left_anchor: BTreeMap<String, String>,
    pub right_anchor: BTreeMap<String, String>,
    /// `[g, p, g·p]`.
    pub left_action: Vec<[String; 3]>,
    /// `[p, h, p·h]`.
    pub right_action: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceData {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub groupoids: BTreeMap<String, GroupoidData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functors: BTreeMap<String, FunctorData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub transformations: BTreeMap<String, TransformationData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub spans: BTreeMap<String, SpanData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub diagrams: BTreeMap<String, DiagramData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bibundles: BTreeMap<String, BibundleData>,
}

/// Why a document could not be loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadError {
    Io { path: String, message: String },
    Parse { path: String, line: usize, column: usize, message: String },
    Invalid { path: String, message: String },
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io { path, message } => write!(f, "{path}: {message}"),
            LoadError::Parse { path, line, column, message } => write!(f, "{path}:{line}:{column}: {message}"),
            LoadError::Invalid { path, message } => write!(f, "{path}: {message}"),
        }
    }
}

impl std::error::Error for LoadError {}

/// The two document shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Groupoid(GroupoidData),
    Workspace(WorkspaceData),
}

impl Document {
    pub fn parse(path: &str, text: &str) -> Result<Document, LoadError> {
        let perr = |e: serde_json::Error| LoadError::Parse {
            path: path.into(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        };
        let value: serde_json::Value = serde_json::from_str(text).map_err(perr)?;
        // Typed errors come from the text so that they keep their positions.
        if value.as_object().is_some_and(|m| m.contains_key("objects")) {
            serde_json::from_str(text).map(Document::Groupoid).map_err(perr)
        } else {
            serde_json::from_str(text).map(Document::Workspace).map_err(perr)
        }
    }

    pub fn to_json(&self) -> String {
        let v = match self {
            Document::Groupoid(d) => serde_json::to_value(d),
            Document::Workspace(d) => serde_json::to_value(d),
        }
        .expect("documents serialize");
        to_json_text(&v)
    }
}

/// Indented JSON in which arrays of scalars and arrow declarations stay on one line.
pub fn to_json_text(v: &serde_json::Value) -> String {
    let mut s = String::new();
    write_value(&mut s, v, 0);
    s.push('\n');
    s
}

fn flat(v: &serde_json::Value) -> bool {
    use serde_json::Value::*;
    match v {
        Array(xs) => xs.iter().all(|x| !matches!(x, Array(_) | Object(_))),
        Object(m) => m.len() <= 3 && m.values().all(|x| !matches!(x, Array(_) | Object(_))),
        _ => true,
    }
}

fn write_inline(s: &mut String, v: &serde_json::Value) {
    use serde_json::Value::*;
    match v {
        Array(xs) => {
            s.push('[');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                write_inline(s, x);
            }
            s.push(']');
        }
        Object(m) => {
            s.push('{');
            for (i, (k, x)) in m.iter().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                s.push_str(&serde_json::Value::String(k.clone()).to_string());
                s.push_str(": ");
                write_inline(s, x);
            }
            s.push('}');
        }
        x => s.push_str(&x.to_string()),
    }
}

fn write_value(s: &mut String, v: &serde_json::Value, depth: usize) {
    use serde_json::Value::*;
    if flat(v) {
        write_inline(s, v);
        return;
    }
    let pad = "  ".repeat(depth + 1);
    match v {
        Array(xs) => {
            s.push('[');
            for (i, x) in xs.iter().enumerate() {
                s.push_str(if i == 0 { "\n" } else { ",\n" });
                s.push_str(&pad);
                write_value(s, x, depth + 1);
            }
            s.push('\n');
            s.push_str(&"  ".repeat(depth));
            s.push(']');
        }
        Object(m) => {
            s.push('{');
            for (i, (k, x)) in m.iter().enumerate() {
                s.push_str(if i == 0 { "\n" } else { ",\n" });
                s.push_str(&pad);
                s.push_str(&serde_json::Value::String(k.clone()).to_string());
                s.push_str(": ");
                write_value(s, x, depth + 1);
            }
            s.push('\n');
            s.push_str(&"  ".repeat(depth));
            s.push('}');
        }
        _ => unreachable!("scalars are flat"),
    }
}

/// Named, validated values loaded from documents.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub groupoids: BTreeMap<String, Arc<FiniteGroupoid>>,
    pub functors: BTreeMap<String, Functor>,
    pub transformations: BTreeMap<String, NaturalTransformation>,
    pub spans: BTreeMap<String, GeneralizedMorphism>,
    pub diagrams: BTreeMap<String, TwoCellDiagram>,
    pub bibundles: BTreeMap<String, Bibundle>,
}

/// Looks a name up in one section.
fn get<'a, T>(m: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T, String> {
    m.get(name).ok_or_else(|| format!("unknown {kind} {name}"))
}

fn lookup<T: Copy>(f: impl Fn(&str) -> Option<T>, kind: &str, label: &str) -> Result<T, String> {
    f(label).ok_or_else(|| format!("unknown {kind} {label}"))
}

fn obj_table(dom: &FiniteGroupoid, cod: &FiniteGroupoid, m: &BTreeMap<String, String>, what: &str) -> Result<Vec<Obj>, String> {
    dom.objects()
        .map(|x| {
            let l = dom.obj_label(x);
            let t = m.get(l).ok_or_else(|| format!("{what} misses object {l}"))?;
            lookup(|s| cod.obj_by_label(s), "object", t)
        })
        .collect()
}

fn check_keys(m: &BTreeMap<String, String>, known: impl Fn(&str) -> bool, what: &str) -> Result<(), String> {
    match m.keys().find(|k| !known(k)) {
        Some(k) => Err(format!("{what} mentions unknown {k}")),
        None => Ok(()),
    }
}

impl Workspace {
    /// Validates every entry and resolves all cross references.
    pub fn from_data(d: &WorkspaceData) -> Result<Workspace, String> {
        let mut ws = Workspace::default();
        let ctx = |kind: &str, name: &str, e: &dyn fmt::Display| format!("{kind} {name}: {e}");
        for (name, g) in &d.groupoids {
            let g = validate_groupoid(g).map_err(|e| ctx("groupoid", name, &e))?;
            ws.groupoids.insert(name.clone(), Arc::new(g));
        }
        for (name, f) in &d.functors {
            let e = |e: String| ctx("functor", name, &e);
            let dom = get(&ws.groupoids, "groupoid", &f.dom).map_err(e)?.clone();
            let cod = get(&ws.groupoids, "groupoid", &f.cod).map_err(e)?.clone();
            check_keys(&f.objects, |k| dom.obj_by_label(k).is_some(), "object map").map_err(e)?;
            check_keys(&f.arrows, |k| dom.arr_by_label(k).is_some(), "arrow map").map_err(e)?;
            let obj = obj_table(&dom, &cod, &f.objects, "object map").map_err(e)?;
            let arr = dom
                .arrows()
                .map(|a| {
                    let l = dom.arr_label(a);
                    let t = f.arrows.get(l).ok_or_else(|| format!("arrow map misses arrow {l}"))?;
                    lookup(|s| cod.arr_by_label(s), "arrow", t)
                })
                .collect::<Result<Vec<Arr>, String>>()
                .map_err(e)?;
            let f = Functor::new(dom, cod, obj, arr).map_err(|x| ctx("functor", name, &x))?;
            ws.functors.insert(name.clone(), f);
        }
        for (name, t) in &d.transformations {
            let e = |e: String| ctx("transformation", name, &e);
            let from = get(&ws.functors, "functor", &t.from).map_err(e)?.clone();
            let to = get(&ws.functors, "functor", &t.to).map_err(e)?.clone();
            let (dom, cod) = (from.dom().clone(), from.cod().clone());
            check_keys(&t.components, |k| dom.obj_by_label(k).is_some(), "components").map_err(e)?;
            let comp = dom
                .objects()
                .map(|x| {
                    let l = dom.obj_label(x);
                    let c = t.components.get(l).ok_or_else(|| format!("missing component at {l}"))?;
                    lookup(|s| cod.arr_by_label(s), "arrow", c)
                })
                .collect::<Result<Vec<Arr>, String>>()
                .map_err(e)?;
            let t = NaturalTransformation::new(from, to, comp).map_err(|x| ctx("transformation", name, &x))?;
            ws.transformations.insert(name.clone(), t);
        }
        for (name, s) in &d.spans {
            let e = |e: String| ctx("span", name, &e);
            let left = get(&ws.functors, "functor", &s.left).map_err(e)?.clone();
            let right = get(&ws.functors, "functor", &s.right).map_err(e)?.clone();
            let gm = GeneralizedMorphism::new(left, right).map_err(|x| ctx("span", name, &x))?;
            ws.spans.insert(name.clone(), gm);
        }
        for (name, c) in &d.diagrams {
            let e = |e: String| ctx("diagram", name, &e);
            let source = get(&ws.spans, "span", &c.source).map_err(e)?.clone();
            let target = get(&ws.spans, "span", &c.target).map_err(e)?.clone();
            let alpha = get(&ws.functors, "functor", &c.alpha).map_err(e)?.clone();
            let alpha2 = get(&ws.functors, "functor", &c.alpha2).map_err(e)?.clone();
            let s1 = get(&ws.transformations, "transformation", &c.s1).map_err(e)?.clone();
            let s2 = get(&ws.transformations, "transformation", &c.s2).map_err(e)?.clone();
            let c = TwoCellDiagram::new(source, target, alpha, alpha2, s1, s2).map_err(|x| ctx("diagram", name, &x))?;
            ws.diagrams.insert(name.clone(), c);
        }
        for (name, b) in &d.bibundles {
            let b = bibundle_from_data(&ws, b).map_err(|x| ctx("bibundle", name, &x))?;
            ws.bibundles.insert(name.clone(), b);
        }
        Ok(ws)
    }

    /// The canonical data of every entry; values referenced by an entry but
    /// not stored under a name are added as `<entry>.<role>`.
    pub fn to_data(&self) -> WorkspaceData {
        let mut w = Namer { ws: self.clone(), data: WorkspaceData::default() };
        for (n, g) in &self.groupoids {
            w.data.groupoids.insert(n.clone(), g.to_data());
        }
        for (n, f) in &self.functors {
            w.functor(n, f);
        }
        for (n, t) in &self.transformations {
            w.transformation(n, t);
        }
        for (n, s) in &self.spans {
            w.span(n, s);
        }
        for (n, c) in &self.diagrams {
            let (source, target) = (w.span_name(&format!("{n}.source"), c.source()), w.span_name(&format!("{n}.target"), c.target()));
            let d = DiagramData {
                source,
                target,
                alpha: w.functor_name(&format!("{n}.alpha"), c.alpha()),
                alpha2: w.functor_name(&format!("{n}.alpha2"), c.alpha2()),
                s1: w.transformation_name(&format!("{n}.s1"), c.s1()),
                s2: w.transformation_name(&format!("{n}.s2"), c.s2()),
            };
            w.data.diagrams.insert(n.clone(), d);
        }
        for (n, b) in &self.bibundles {
            w.bibundle(n, b);
        }
        w.data
    }

    pub fn len(&self) -> usize {
        self.groupoids.len()
            + self.functors.len()
            + self.transformations.len()
            + self.spans.len()
            + self.diagrams.len()
            + self.bibundles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn bibundle_from_data(ws: &Workspace, b: &BibundleData) -> Result<Bibundle, String> {
    let g = get(&ws.groupoids, "groupoid", &b.left)?.clone();
    let h = get(&ws.groupoids, "groupoid", &b.right)?.clone();
    let mut index = BTreeMap::new();
    for (i, p) in b.points.iter().enumerate() {
        if index.insert(p.as_str(), i).is_some() {
            return Err(format!("duplicate point {p}"));
        }
    }
    let point = |p: &str| index.get(p).copied().ok_or_else(|| format!("unknown point {p}"));
    let anchors = |m: &BTreeMap<String, String>, gpd: &FiniteGroupoid, what: &str| -> Result<Vec<Obj>, String> {
        check_keys(m, |k| index.contains_key(k), what)?;
        b.points
            .iter()
            .map(|p| {
                let o = m.get(p).ok_or_else(|| format!("{what} misses point {p}"))?;
                lookup(|s| gpd.obj_by_label(s), "object", o)
            })
            .collect()
    };
    let la = anchors(&b.left_anchor, &g, "left anchor")?;
    let ra = anchors(&b.right_anchor, &h, "right anchor")?;
    let mut lact = rustc_hash::FxHashMap::default();
    for [a, p, q] in &b.left_action {
        lact.insert((lookup(|s| g.arr_by_label(s), "arrow", a)?, point(p)?), point(q)?);
    }
    let mut ract = rustc_hash::FxHashMap::default();
    for [p, a, q] in &b.right_action {
        ract.insert((lookup(|s| h.arr_by_label(s), "arrow", a)?, point(p)?), point(q)?);
    }
    let err = |e: GpdError| e.to_string();
    let left = GroupoidAction::new(g, Side::Left, b.points.clone(), la, lact).map_err(err)?;
    let right = GroupoidAction::new(h, Side::Right, b.points.clone(), ra, ract).map_err(err)?;
    Bibundle::new(left, right).map_err(err)
}

/// Serializes values, naming anything not already stored.
struct Namer {
    ws: Workspace,
    data: WorkspaceData,
}

impl Namer {
    fn groupoid_name(&mut self, hint: &str, g: &Arc<FiniteGroupoid>) -> String {
        let by_ptr = self.ws.groupoids.iter().find(|(_, x)| Arc::ptr_eq(x, g));
        if let Some((n, _)) = by_ptr.or_else(|| self.ws.groupoids.iter().find(|(_, x)| same_groupoid(x, g))) {
            return n.clone();
        }
        let n = fresh(hint, |n| self.ws.groupoids.contains_key(n));
        self.ws.groupoids.insert(n.clone(), g.clone());
        self.data.groupoids.insert(n.clone(), g.to_data());
        n
    }

    fn functor_name(&mut self, hint: &str, f: &Functor) -> String {
        if let Some((n, _)) = self.ws.functors.iter().find(|(_, x)| *x == f) {
            return n.clone();
        }
        let n = fresh(hint, |n| self.ws.functors.contains_key(n));
        self.ws.functors.insert(n.clone(), f.clone());
        self.functor(&n, f);
        n
    }

    fn functor(&mut self, n: &str, f: &Functor) {
        let dom = self.groupoid_name(&format!("{n}.dom"), f.dom());
        let cod = self.groupoid_name(&format!("{n}.cod"), f.cod());
        let (g, h) = (f.dom(), f.cod());
        let d = FunctorData {
            dom,
            cod,
            objects: g.objects().map(|x| (g.obj_label(x).into(), h.obj_label(f.obj(x)).into())).collect(),
            arrows: g.arrows().map(|a| (g.arr_label(a).into(), h.arr_label(f.arr(a)).into())).collect(),
        };
        self.data.functors.insert(n.into(), d);
    }

    fn transformation_name(&mut self, hint: &str, t: &NaturalTransformation) -> String {
        if let Some((n, _)) = self.ws.transformations.iter().find(|(_, x)| *x == t) {
            return n.clone();
        }
        let n = fresh(hint, |n| self.ws.transformations.contains_key(n));
        self.ws.transformations.insert(n.clone(), t.clone());
        self.transformation(&n, t);
        n
    }

    fn transformation(&mut self, n: &str, t: &NaturalTransformation) {
        let from = self.functor_name(&format!("{n}.from"), t.from());
        let to = self.functor_name(&format!("{n}.to"), t.to());
        let (g, h) = (t.dom(), t.cod());
        let components = g.objects().map(|x| (g.obj_label(x).into(), h.arr_label(t.at(x)).into())).collect();
        self.data.transformations.insert(n.into(), TransformationData { from, to, components });
    }

    fn span_name(&mut self, hint: &str, s: &GeneralizedMorphism) -> String {
        if let Some((n, _)) = self.ws.spans.iter().find(|(_, x)| *x == s) {
            return n.clone();
        }
        let n = fresh(hint, |n| self.ws.spans.contains_key(n));
        self.ws.spans.insert(n.clone(), s.clone());
        self.span(&n, s);
        n
    }

    fn span(&mut self, n: &str, s: &GeneralizedMorphism) {
        self.groupoid_name(&format!("{n}.apex"), s.apex());
        let left = self.functor_name(&format!("{n}.left"), s.left());
        let right = self.functor_name(&format!("{n}.right"), s.right());
        self.data.spans.insert(n.into(), SpanData { left, right });
    }

    fn bibundle(&mut self, n: &str, b: &Bibundle) {
        let left = self.groupoid_name(&format!("{n}.left"), b.source());
        let right = self.groupoid_name(&format!("{n}.right"), b.target());
        let (g, h) = (b.source(), b.target());
        let pts = b.carrier();
        let mut left_action = Vec::new();
        let mut right_action = Vec::new();
        for x in 0..b.len() {
            for &a in b.left_action().acting_on(x) {
                left_action.push([g.arr_label(a).into(), pts[x].clone(), pts[b.left_action().act(a, x)].clone()]);
            }
            for &a in b.right_action().acting_on(x) {
                right_action.push([pts[x].clone(), h.arr_label(a).into(), pts[b.right_action().act(a, x)].clone()]);
            }
        }
        let d = BibundleData {
            left,
            right,
            points: pts.to_vec(),
            left_anchor: (0..b.len()).map(|x| (pts[x].clone(), g.obj_label(b.l(x)).into())).collect(),
            right_anchor: (0..b.len()).map(|x| (pts[x].clone(), h.obj_label(b.r(x)).into())).collect(),
            left_action,
            right_action,
        };
        self.data.bibundles.insert(n.into(), d);
    }
}

fn fresh(hint: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(hint) {
        return hint.to_string();
    }
    (2..).map(|i| format!("{hint}{i}")).find(|n| !taken(n)).expect("some name is free")
}

/// Reads a document and validates it. A bare groupoid is stored under the
/// file stem.
pub fn load(path: impl AsRef<Path>) -> Result<(Document, Workspace), LoadError> {
    let path = path.as_ref();
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io { path: p.clone(), message: e.to_string() })?;
    let stem = path.file_stem().map_or("groupoid".into(), |s| s.to_string_lossy().into_owned());
    load_str(&p, &stem, &text)
}

pub fn load_str(path: &str, stem: &str, text: &str) -> Result<(Document, Workspace), LoadError> {
    let doc = Document::parse(path, text)?;
    let invalid = |message: String| LoadError::Invalid { path: path.into(), message };
    let ws = match &doc {
        Document::Groupoid(d) => {
            let g = validate_groupoid(d).map_err(|e| invalid(e.to_string()))?;
            let mut ws = Workspace::default();
            ws.groupoids.insert(stem.into(), Arc::new(g));
            ws
        }
        Document::Workspace(d) => Workspace::from_data(d).map_err(invalid)?,
    };
    Ok((doc, ws))
}

/// The canonical text of a loaded document, in the same shape it was read in.
pub fn canonical_text(doc: &Document, ws: &Workspace) -> String {
    match doc {
        Document::Groupoid(_) => {
            let g = ws.groupoids.values().next().expect("one groupoid");
            Document::Groupoid(g.to_data()).to_json()
        }
        Document::Workspace(_) => Document::Workspace(ws.to_data()).to_json(),
    }
}

pub fn save(path: impl AsRef<Path>, doc: &Document, ws: &Workspace) -> std::io::Result<()> {
    std::fs::write(path, canonical_text(doc, ws))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Objects as nodes and non-unit arrows as labelled edges.
pub fn groupoid_dot(name: &str, g: &FiniteGroupoid) -> String {
    let mut s = format!("digraph {} {{\n", quote(name));
    for x in g.objects() {
        let _ = writeln!(s, "  {};", quote(g.obj_label(x)));
    }
    for a in g.arrows().filter(|&a| !g.is_unit(a)) {
        let (x, y) = (g.obj_label(g.src(a)), g.obj_label(g.trg(a)));
        let _ = writeln!(s, "  {} -> {} [label={}];", quote(x), quote(y), quote(g.arr_label(a)));
    }
    s.push_str("}\n");
    s
}

/// Points in the middle, each joined to its two anchors.
pub fn bibundle_dot(name: &str, b: &Bibundle) -> String {
    let (g, h) = (b.source(), b.target());
    let mut s = format!("digraph {} {{\n  rankdir=LR;\n", quote(name));
    let cluster = |s: &mut String, id: &str, label: &str, nodes: Vec<(String, &str)>| {
        let _ = writeln!(s, "  subgraph cluster_{id} {{\n    label={};", quote(label));
        for (n, l) in nodes {
            let _ = writeln!(s, "    {} [label={}];", quote(&n), quote(l));
        }
        s.push_str("  }\n");
    };
    cluster(&mut s, "left", "left", g.objects().map(|x| (format!("L:{}", g.obj_label(x)), g.obj_label(x))).collect());
    cluster(&mut s, "points", "points", b.carrier().iter().map(|p| (format!("P:{p}"), p.as_str())).collect());
    cluster(&mut s, "right", "right", h.objects().map(|y| (format!("R:{}", h.obj_label(y)), h.obj_label(y))).collect());
    for (x, p) in b.carrier().iter().enumerate() {
        let _ = writeln!(s, "  {} -> {} [style=dashed];", quote(&format!("P:{p}")), quote(&format!("L:{}", g.obj_label(b.l(x)))));
        let _ = writeln!(s, "  {} -> {} [style=dashed];", quote(&format!("P:{p}")), quote(&format!("R:{}", h.obj_label(b.r(x)))));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bibundle::bibundlise;
    use crate::fractions::spanise;
    use crate::gpd::{cyclic_groupoid, pair, point};

    fn sample() -> Workspace {
        let bc2 = Arc::new(cyclic_groupoid(2));
        let p2 = Arc::new(pair(2));
        let pt = Arc::new(point());
        let mut ws = Workspace::default();
        ws.groupoids.insert("BC2".into(), bc2.clone());
        ws.groupoids.insert("Pair2".into(), p2.clone());
        let bang = Functor::constant(&p2, &pt, Obj(0));
        ws.spans.insert("S".into(), spanise(&bang));
        ws.bibundles.insert("B".into(), bibundlise(&Functor::constant(&bc2, &pt, Obj(0))));
        ws
    }

    #[test]
    fn workspace_round_trips_byte_for_byte() {
        let ws = sample();
        let text = Document::Workspace(ws.to_data()).to_json();
        let (doc, back) = load_str("mem", "mem", &text).unwrap();
        assert_eq!(canonical_text(&doc, &back), text);
        assert_eq!(back.spans["S"], ws.spans["S"]);
        assert_eq!(back.bibundles["B"], ws.bibundles["B"]);
    }

    #[test]
    fn groupoid_round_trips_byte_for_byte() {
        let text = Document::Groupoid(pair(2).to_data()).to_json();
        let (doc, ws) = load_str("mem", "pair2", &text).unwrap();
        assert_eq!(ws.groupoids["pair2"].n_arrows(), 4);
        assert_eq!(canonical_text(&doc, &ws), text);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = load_str("f.json", "f", "{\n  \"objects\": [\"x\",\n}").unwrap_err();
        assert!(matches!(e, LoadError::Parse { line: 3, .. }), "{e}");
    }

    #[test]
    fn dangling_names_are_reported() {
        let text = r#"{"spans": {"S": {"left": "F", "right": "F"}}}"#;
        let e = load_str("f.json", "f", text).unwrap_err();
        assert_eq!(e.to_string(), "f.json: span S: unknown functor F");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let e = load_str("f.json", "f", r#"{"groupoid": {}}"#).unwrap_err();
        assert!(matches!(e, LoadError::Parse { .. }));
    }

    #[test]
    fn dot_skips_units() {
        let d = groupoid_dot("P", &pair(2));
        assert_eq!(d.matches("->").count(), 2);
    }
}
