//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use gf::cech::{cech_equivalence_check, subset_covers};
use gf::gpd::{FiniteGroup, FiniteGroupoid};
use gf::laws::{morita_negatives, run_suite, Suite};
use gf::morita::{are_morita_equivalent, orbit_space, skeleton};

const SEED: u64 = 7;
const WEQ_LIMIT: Duration = Duration::from_secs(30);
const CECH_LIMIT: Duration = Duration::from_secs(10);

struct Outcome {
    pass: bool,
    detail: String,
}

fn suites(runs: &[(Suite, usize)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for &(suite, count) in runs {
        let r = run_suite(suite, SEED, count);
        pass &= r.all_passed() && r.total == count;
        parts.push(format!("{} {}", suite.name(), r.summary()));
        for (i, m) in r.failures.iter().take(3) {
            parts.push(format!("case {i}: {m}"));
        }
    }
    Outcome { pass, detail: parts.join("; ") }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let t = start.elapsed();
    o.pass &= t < limit;
    o.detail = format!("{} in {:.2}s (limit {}s)", o.detail, t.as_secs_f64(), limit.as_secs());
    o
}

/// Per component, the sorted element orders of its stabiliser. Groupoids with
/// different profiles cannot be Morita equivalent.
fn stabilizer_profile(g: &FiniteGroupoid) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = skeleton(g)
        .groups
        .iter()
        .map(|k| {
            let mut p: Vec<usize> = (0..k.order()).map(|a| k.element_order(a)).collect();
            p.sort_unstable();
            p
        })
        .collect();
    v.sort();
    v
}

fn morita() -> Outcome {
    let mut o = suites(&[(Suite::Morita, 50)]);
    let mut agree = 0;
    let negatives = morita_negatives();
    for (name, g, h) in &negatives {
        let decided = are_morita_equivalent(g, h).map(|w| w.is_equivalent());
        let differ = orbit_space(g).len() != orbit_space(h).len() || stabilizer_profile(g) != stabilizer_profile(h);
        match decided {
            Ok(false) if differ => agree += 1,
            other => o.detail.push_str(&format!("; {name}: decided {other:?}, invariants differ {differ}")),
        }
    }
    o.pass &= agree == negatives.len() && negatives.len() == 20;
    o.detail.push_str(&format!("; negatives {agree}/{} rejected", negatives.len()));
    o
}

fn cech() -> Outcome {
    let (mut ok, mut total) = (0, 0);
    let mut bad = Vec::new();
    for order in [2usize, 3] {
        let g = FiniteGroup::cyclic(order);
        for n in 1..=3 {
            for c in subset_covers(n, 3) {
                total += 1;
                match cech_equivalence_check(&c, &g) {
                    Ok(r)
                        if r.verified()
                            && r.cocycle_classes == 1
                            && r.bundle_classes == 1
                            && r.bundle_automorphisms == order.pow(n as u32) =>
                    {
                        ok += 1
                    }
                    other => bad.push(format!("C{order} on {n} points: {other:?}")),
                }
            }
        }
    }
    let mut detail = format!("{ok}/{total} covers verified");
    if let Some(b) = bad.first() {
        detail.push_str(&format!("; first failure {b}"));
    }
    Outcome { pass: ok == total && total > 0, detail }
}

fn determinism() -> Outcome {
    let mut same = true;
    for suite in Suite::ALL {
        let a = run_suite(suite, SEED, 10);
        let b = run_suite(suite, SEED, 10);
        same &= a == b && a.transcript() == b.transcript();
    }
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let dir = std::env::temp_dir().join(format!("gf-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let mut files = Vec::new();
    for k in 0..2 {
        let out = dir.join(format!("witness{k}.json"));
        let o = gf::cli::run([
            "gf".to_string(),
            "morita".into(),
            data.join("pair2.gpd").display().to_string(),
            data.join("pt.gpd").display().to_string(),
            "--out".into(),
            out.display().to_string(),
        ]);
        same &= o.code == 0;
        files.push(std::fs::read(&out).unwrap_or_default());
        let c = gf::cli::run(["gf", "cech", &data.join("triangle.cover.json").display().to_string(), "--group", "C3"]);
        files.push(c.stdout.into_bytes());
    }
    same &= files[0] == files[2] && files[1] == files[3] && !files[0].is_empty();
    Outcome { pass: same, detail: "law transcripts, witness files and reports repeat byte for byte".into() }
}

fn main() {
    let criteria: Vec<(&str, Box<dyn FnOnce() -> Outcome>)> = vec![
        ("weak-equivalence calculus", Box::new(|| timed(WEQ_LIMIT, || suites(&[(Suite::Weq, 500)])))),
        ("weak pullback", Box::new(|| suites(&[(Suite::Pullback, 200)]))),
        ("anafunctisation coherence", Box::new(|| suites(&[(Suite::Coherence, 200)]))),
        ("bibundle bicategory laws", Box::new(|| suites(&[(Suite::Bibundle, 200)]))),
        ("canonical 2-cells", Box::new(|| suites(&[(Suite::Canonical, 100)]))),
        ("three-bicategory round trips", Box::new(|| suites(&[(Suite::Roundtrip, 100)]))),
        ("quasi-inverse characterizations", Box::new(|| suites(&[(Suite::QuasiInverse, 100)]))),
        ("Morita invariants", Box::new(morita)),
        ("Cech classification", Box::new(|| timed(CECH_LIMIT, cech))),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
