//! Command-line front end. `run` parses arguments, executes one command and
//! returns what should be printed together with the exit code:
//! 0 on success, 1 on a domain error, 2 on a parse or validation error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::ana::{canonical_2cell, compose_ana, Anafunctor};
use crate::bibundle::{bibundle_to_anafunctor, bibundlise, gm_to_bibundle, tensor, Bibundle};
use crate::cech::{cech_equivalence_check, Cover};
use crate::error::GpdError;
use crate::files::{bibundle_dot, groupoid_dot, load, Document, LoadError, Workspace};
use crate::fractions::{compose_gm, spanise, GeneralizedMorphism};
use crate::gpd::{
    check_subductive_weak_equivalence, check_weak_equivalence, set_size_cap, FfViolation, FiniteGroup, FiniteGroupoid,
};
use crate::laws::{run_suite, Suite};
use crate::morita::{are_morita_equivalent, invariants, MoritaWitness};

#[derive(Parser, Debug)]
#[command(name = "gf", version, about = "Finite groupoids up to weak equivalence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a document is well formed and every entry is valid.
    Validate { file: PathBuf },
    /// Compose two 1-cells, given as `FILE#NAME`.
    Compose {
        #[arg(long, value_enum)]
        mode: Mode,
        first: String,
        second: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a functor is a weak equivalence.
    CheckWe { functor: String },
    /// The transformation representing a diagram between anafunctors.
    #[command(name = "canonical-2cell")]
    Canonical2cell {
        diagram: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The bibundle of a span.
    ToBibundle {
        span: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The action anafunctor of a right-principal bibundle.
    ToAnafunctor {
        bibundle: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide Morita equivalence, writing the witness bibundle if asked.
    Morita {
        left: String,
        right: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbits, stabilisers and other Morita invariants as JSON.
    Invariants { groupoid: String },
    /// Compare cocycles and principal bundles over a cover.
    Cech {
        cover: PathBuf,
        /// trivial, Cn, V4 or S3.
        #[arg(long, default_value = "C2")]
        group: String,
    },
    /// Run randomized law suites.
    Laws {
        /// One suite; all of them when omitted.
        #[arg(long)]
        suite: Option<Suite>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Draw a groupoid or bibundle in DOT.
    ExportDot { item: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Gm,
    Ana,
    Bi,
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(String),
    Input(String),
}

impl From<GpdError> for Failure {
    fn from(e: GpdError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Run = std::result::Result<String, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    if let Ok(v) = std::env::var("GF_SIZE_CAP") {
        match v.trim().parse::<usize>() {
            Ok(cap) => set_size_cap(cap),
            Err(_) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: GF_SIZE_CAP={v} is not a number\n") },
        }
    }
    let mut code = 0;
    let result = execute(cli.command, &mut code);
    match result {
        Ok(stdout) => Outcome { code, stdout, stderr: String::new() },
        Err(Failure::Domain(m)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Input(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

/// `FILE` or `FILE#NAME`.
struct Ref {
    path: PathBuf,
    name: Option<String>,
}

impl Ref {
    fn parse(s: &str) -> Ref {
        match s.rsplit_once('#') {
            Some((p, n)) => Ref { path: p.into(), name: Some(n.into()) },
            None => Ref { path: s.into(), name: None },
        }
    }

    fn load(&self) -> std::result::Result<Workspace, Failure> {
        Ok(load(&self.path)?.1)
    }
}

/// Picks the named entry, or the only one when no name is given.
fn pick<'a, T>(m: &'a std::collections::BTreeMap<String, T>, kind: &str, r: &Ref) -> std::result::Result<(&'a str, &'a T), Failure> {
    let p = r.path.display();
    match &r.name {
        Some(n) => m.get_key_value(n).map(|(k, v)| (k.as_str(), v)).ok_or_else(|| Failure::Input(format!("{p}: no {kind} named {n}"))),
        None if m.len() == 1 => Ok(m.iter().next().map(|(k, v)| (k.as_str(), v)).expect("one entry")),
        None if m.is_empty() => Err(Failure::Input(format!("{p}: no {kind} in file"))),
        None => Err(Failure::Input(format!(
            "{p}: several {kind}s ({}); name one with FILE#NAME",
            m.keys().cloned().collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn groupoid_of(r: &Ref) -> std::result::Result<(String, Arc<FiniteGroupoid>), Failure> {
    let ws = r.load()?;
    let (n, g) = pick(&ws.groupoids, "groupoid", r)?;
    Ok((n.to_string(), g.clone()))
}

/// A span named directly, or a functor read as its span.
fn span_of(r: &Ref) -> std::result::Result<GeneralizedMorphism, Failure> {
    let ws = r.load()?;
    if r.name.as_ref().is_some_and(|n| ws.functors.contains_key(n)) || (ws.spans.is_empty() && !ws.functors.is_empty()) {
        let (_, f) = pick(&ws.functors, "functor", r)?;
        return Ok(spanise(f));
    }
    Ok(pick(&ws.spans, "span", r)?.1.clone())
}

/// A bibundle named directly, or the bibundlisation of a functor.
fn bibundle_of(r: &Ref) -> std::result::Result<Bibundle, Failure> {
    let ws = r.load()?;
    if r.name.as_ref().is_some_and(|n| ws.functors.contains_key(n)) || (ws.bibundles.is_empty() && !ws.functors.is_empty()) {
        let (_, f) = pick(&ws.functors, "functor", r)?;
        return Ok(bibundlise(f));
    }
    Ok(pick(&ws.bibundles, "bibundle", r)?.1.clone())
}

fn write_out(out: &Option<PathBuf>, ws: Workspace) -> std::result::Result<(), Failure> {
    if let Some(p) = out {
        let text = Document::Workspace(ws.to_data()).to_json();
        std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn count(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn size(g: &FiniteGroupoid) -> String {
    format!("{}, {}", count(g.n_objects(), "object"), count(g.n_arrows(), "arrow"))
}

fn read_cover(path: &std::path::Path) -> std::result::Result<Cover, Failure> {
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{p}: {e}")))?;
    let raw: Cover =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{p}:{}:{}: {e}", e.line(), e.column())))?;
    Cover::new(raw.base().to_vec(), raw.charts().to_vec()).map_err(|e| Failure::Input(format!("{p}: {e}")))
}

fn is_cover_file(path: &std::path::Path) -> bool {
    let text = std::fs::read_to_string(path).unwrap_or_default();
    serde_json::from_str::<serde_json::Value>(&text).is_ok_and(|v| v.get("base").is_some() && v.get("charts").is_some())
}

fn principality(b: &Bibundle) -> &'static str {
    let p = b.principality();
    match (p.left_principal, p.right_principal) {
        (true, true) => "biprincipal",
        (false, true) => "right principal",
        (true, false) => "left principal",
        (false, false) => "not principal",
    }
}

fn span_summary(kind: &str, gm: &GeneralizedMorphism) -> String {
    format!("{kind}: apex {}; source {}; target {}\n", size(gm.apex()), size(gm.source()), size(gm.target()))
}

fn bibundle_summary(kind: &str, b: &Bibundle) -> String {
    format!("{kind}: {}, {}; source {}; target {}\n", count(b.len(), "point"), principality(b), size(b.source()), size(b.target()))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `trivial`, `Cn`, `V4` or `S3`.
pub fn parse_group(s: &str) -> Option<FiniteGroup> {
    match s {
        "trivial" | "C1" => Some(FiniteGroup::trivial()),
        "V4" => Some(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))),
        "S3" => Some(FiniteGroup::symmetric(3)),
        _ => s.strip_prefix('C')?.parse().ok().filter(|&n: &usize| n >= 1).map(FiniteGroup::cyclic),
    }
}

fn execute(cmd: Command, code: &mut i32) -> Run {
    match cmd {
        Command::Validate { file } => {
            if is_cover_file(&file) {
                let c = read_cover(&file)?;
                return Ok(format!("OK: cover, {}, {}\n", count(c.base().len(), "point"), count(c.charts().len(), "chart")));
            }
            let (doc, ws) = load(&file)?;
            let mut s = String::new();
            match doc {
                Document::Groupoid(_) => {
                    let g = ws.groupoids.values().next().expect("one groupoid");
                    let _ = writeln!(s, "OK: groupoid, {}", size(g));
                }
                Document::Workspace(_) => {
                    let _ = writeln!(s, "OK: workspace, {}", match ws.len() {
                        1 => "1 entry".to_string(),
                        n => format!("{n} entries"),
                    });
                    for (n, g) in &ws.groupoids {
                        let _ = writeln!(s, "  groupoid {n}: {}", size(g));
                    }
                    for (n, f) in &ws.functors {
                        let _ = writeln!(s, "  functor {n}: {} to {}", size(f.dom()), size(f.cod()));
                    }
                    for n in ws.transformations.keys() {
                        let _ = writeln!(s, "  transformation {n}");
                    }
                    for (n, gm) in &ws.spans {
                        let _ = writeln!(s, "  span {n}: apex {}", size(gm.apex()));
                    }
                    for n in ws.diagrams.keys() {
                        let _ = writeln!(s, "  diagram {n}");
                    }
                    for (n, b) in &ws.bibundles {
                        let _ = writeln!(s, "  bibundle {n}: {}, {}", count(b.len(), "point"), principality(b));
                    }
                }
            }
            Ok(s)
        }
        Command::Compose { mode, first, second, out } => {
            let (a, b) = (Ref::parse(&first), Ref::parse(&second));
            let mut ws = Workspace::default();
            let s = match mode {
                Mode::Gm => {
                    let c = compose_gm(&span_of(&a)?, &span_of(&b)?)?;
                    let s = span_summary("composite span", &c);
                    ws.spans.insert("composite".into(), c);
                    s
                }
                Mode::Ana => {
                    let x = Anafunctor::from_gm(&span_of(&a)?)?;
                    let y = Anafunctor::from_gm(&span_of(&b)?)?;
                    let c = compose_ana(&x, &y)?;
                    let s = span_summary("composite anafunctor", c.as_gm());
                    ws.spans.insert("composite".into(), c.as_gm().clone());
                    s
                }
                Mode::Bi => {
                    let c = tensor(&bibundle_of(&a)?, &bibundle_of(&b)?)?;
                    let s = bibundle_summary("composite bibundle", &c);
                    ws.bibundles.insert("composite".into(), c);
                    s
                }
            };
            write_out(&out, ws)?;
            Ok(s)
        }
        Command::CheckWe { functor } => {
            let r = Ref::parse(&functor);
            let ws = r.load()?;
            let (_, f) = pick(&ws.functors, "functor", &r)?;
            let rep = check_weak_equivalence(f);
            let (g, h) = (f.dom(), f.cod());
            let mut s = String::new();
            let _ = writeln!(s, "essentially surjective: {}", yes(rep.is_essentially_surjective()));
            if let Some(y) = rep.first_unreached() {
                let _ = writeln!(s, "  unreached: {}", h.obj_label(y));
            }
            let _ = writeln!(s, "fully faithful: {}", yes(rep.is_fully_faithful()));
            match &rep.ff_inverse {
                Err(FfViolation::NotInjective { x1, x2, arrows }) => {
                    let _ = writeln!(
                        s,
                        "  arrows {} and {} from {} to {} have the same image",
                        g.arr_label(arrows.0),
                        g.arr_label(arrows.1),
                        g.obj_label(*x1),
                        g.obj_label(*x2)
                    );
                }
                Err(FfViolation::NotSurjective { x1, x2, h: a }) => {
                    let _ = writeln!(
                        s,
                        "  arrow {} has no preimage from {} to {}",
                        h.arr_label(*a),
                        g.obj_label(*x1),
                        g.obj_label(*x2)
                    );
                }
                Ok(_) => {}
            }
            let _ = writeln!(s, "surjective on objects: {}", yes(f.is_surjective_on_objects()));
            let verdict = if !rep.is_weak_equivalence() {
                "NOT a weak equivalence"
            } else if check_subductive_weak_equivalence(f) {
                "subductive weak equivalence"
            } else {
                "weak equivalence"
            };
            let _ = writeln!(s, "{verdict}");
            Ok(s)
        }
        Command::Canonical2cell { diagram, out } => {
            let r = Ref::parse(&diagram);
            let ws = r.load()?;
            let (n, c) = pick(&ws.diagrams, "diagram", &r)?;
            let t = canonical_2cell(c)?;
            let nat = t.as_natural();
            let (p, h) = (nat.dom(), nat.cod());
            let mut s = format!("transformation with {}\n", count(p.n_objects(), "component"));
            for y in p.objects() {
                let _ = writeln!(s, "  {} -> {}", p.obj_label(y), h.arr_label(nat.at(y)));
            }
            let mut o = Workspace::default();
            o.transformations.insert(format!("{n}.canonical"), nat);
            write_out(&out, o)?;
            Ok(s)
        }
        Command::ToBibundle { span, out } => {
            let gm = span_of(&Ref::parse(&span))?;
            let b = gm_to_bibundle(&gm)?;
            let s = bibundle_summary("bibundle", &b.bibundle);
            let mut o = Workspace::default();
            o.bibundles.insert("bibundle".into(), b.bibundle);
            write_out(&out, o)?;
            Ok(s)
        }
        Command::ToAnafunctor { bibundle, out } => {
            let b = bibundle_of(&Ref::parse(&bibundle))?;
            let a = bibundle_to_anafunctor(&b)?;
            let s = span_summary("anafunctor", a.anafunctor.as_gm());
            let mut o = Workspace::default();
            o.spans.insert("anafunctor".into(), a.anafunctor.as_gm().clone());
            write_out(&out, o)?;
            Ok(s)
        }
        Command::Morita { left, right, out } => {
            let (_, g) = groupoid_of(&Ref::parse(&left))?;
            let (_, h) = groupoid_of(&Ref::parse(&right))?;
            let w = are_morita_equivalent(&g, &h)?;
            if let MoritaWitness::Equivalent { bibundle, .. } = &w {
                let mut o = Workspace::default();
                o.bibundles.insert("witness".into(), bibundle.clone());
                write_out(&out, o)?;
            }
            Ok(format!("{w}\n"))
        }
        Command::Invariants { groupoid } => {
            let (_, g) = groupoid_of(&Ref::parse(&groupoid))?;
            let mut s = serde_json::to_string_pretty(&invariants(&g)).expect("invariants serialize");
            s.push('\n');
            Ok(s)
        }
        Command::Cech { cover, group } => {
            let g = parse_group(&group).ok_or_else(|| Failure::Input(format!("unknown group {group}")))?;
            let c = read_cover(&cover)?;
            let r = cech_equivalence_check(&c, &g)?;
            if !r.verified() {
                *code = 1;
            }
            Ok(format!("{r}\n"))
        }
        Command::Laws { suite, seed, count } => {
            let suites = match suite {
                Some(s) => vec![s],
                None => Suite::ALL.to_vec(),
            };
            let many = suites.len() > 1;
            let mut s = String::new();
            for suite in suites {
                let r = run_suite(suite, seed, count);
                if !r.all_passed() {
                    *code = 1;
                }
                if many {
                    let _ = writeln!(s, "[{}]", suite.name());
                }
                s.push_str(&r.transcript());
                s.push('\n');
            }
            Ok(s)
        }
        Command::ExportDot { item } => {
            let r = Ref::parse(&item);
            let ws = r.load()?;
            if r.name.as_ref().is_some_and(|n| ws.bibundles.contains_key(n)) || (ws.groupoids.is_empty() && !ws.bibundles.is_empty()) {
                let (n, b) = pick(&ws.bibundles, "bibundle", &r)?;
                return Ok(bibundle_dot(n, b));
            }
            let (n, g) = pick(&ws.groupoids, "groupoid", &r)?;
            Ok(groupoid_dot(n, g))
        }
    }
}
