use std::path::PathBuf;

use gf::cli::run;
use gf::files::{canonical_text, load};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn gf(args: &[&str]) -> gf::cli::Outcome {
    run(std::iter::once("gf").chain(args.iter().copied()))
}

#[test]
fn validate_pair2() {
    let o = gf(&["validate", &data("pair2.gpd")]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "OK: groupoid, 2 objects, 4 arrows\n");
}

#[test]
fn morita_bc2_pt() {
    let o = gf(&["morita", &data("bc2.gpd"), &data("pt.gpd")]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "NOT equivalent: stabilizer C2 vs trivial\n"));
    let o = gf(&["morita", &data("pair2.gpd"), &data("pt.gpd")]);
    assert!(o.stdout.starts_with("equivalent"), "{}", o.stdout);
}

#[test]
fn coherence_laws_at_seed_7() {
    let o = gf(&["laws", "--suite", "coherence", "--seed", "7", "--count", "100"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "100/100 passed\n"));
}

#[test]
fn law_transcripts_repeat() {
    let args = ["laws", "--suite", "bibundle", "--seed", "3", "--count", "10"];
    assert_eq!(gf(&args), gf(&args));
}

#[test]
fn canonical_files_round_trip() {
    for f in ["pair2.gpd", "bc2.gpd", "pt.gpd", "spans.json"] {
        let path = data(f);
        let text = std::fs::read_to_string(&path).unwrap();
        let (doc, ws) = load(&path).unwrap();
        assert_eq!(canonical_text(&doc, &ws), text, "{f}");
    }
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("gf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.gpd");
    std::fs::write(&broken, "{\"objects\": [\"x\"],\n \"arrows\": [}").unwrap();
    let o = gf(&["validate", broken.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("broken.gpd:2:"), "{}", o.stderr);

    let o = gf(&["to-anafunctor", &format!("{}#collapse", data("spans.json"))]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let o = gf(&["to-anafunctor", &format!("{}#bc2_point", data("spans.json"))]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.starts_with("error: bibundle is not right principal"), "{}", o.stderr);
    assert_eq!(gf(&["laws", "--suite", "nope"]).code, 2);
    assert_eq!(gf(&["export-dot", &format!("{}#missing", data("spans.json"))]).code, 2);
}

#[test]
fn compose_in_three_modes() {
    let up = format!("{}#up", data("spans.json"));
    let down = format!("{}#down", data("spans.json"));
    for mode in ["gm", "ana"] {
        let o = gf(&["compose", "--mode", mode, &up, &down]);
        assert_eq!(o.code, 0, "{mode}: {}", o.stderr);
        assert!(o.stdout.contains("source 1 object, 1 arrow; target 1 object, 1 arrow"), "{}", o.stdout);
    }
    let o = gf(&["compose", "--mode", "bi", &format!("{}#collapse", data("spans.json")), &format!("{}#pick", data("spans.json"))]);
    assert_eq!(o.stdout, "composite bibundle: 4 points, biprincipal; source 2 objects, 4 arrows; target 2 objects, 4 arrows\n");
}

#[test]
fn written_results_reload() {
    let dir = std::env::temp_dir().join(format!("gf-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("b.json");
    let o = gf(&["to-bibundle", &format!("{}#down", data("spans.json")), "--out", out.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    let v = gf(&["validate", out.to_str().unwrap()]);
    assert_eq!(v.code, 0, "{}", v.stderr);
    assert!(v.stdout.contains("bibundle bibundle: 2 points, biprincipal"), "{}", v.stdout);
}

#[test]
fn cech_on_triangle() {
    let o = gf(&["cech", &data("triangle.cover.json"), "--group", "C3"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("automorphisms 27"));
    assert!(o.stdout.ends_with("equivalence verified\n"));
}

#[test]
fn dot_export() {
    let o = gf(&["export-dot", &data("pair2.gpd")]);
    assert!(o.stdout.starts_with("digraph \"pair2\" {"));
    assert_eq!(o.stdout.matches(" -> ").count(), 2);
}
