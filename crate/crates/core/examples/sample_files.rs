//! Writes a few small documents the `gf` binary can read.
//!
//!     cargo run --example sample_files -- DIR
use std::path::PathBuf;
use std::sync::Arc;

use gf::bibundle::{bibundlise, opposite};
use gf::cech::Cover;
use gf::files::{Document, Workspace};
use gf::fractions::{identity_2cell, spanise};
use gf::gpd::{cyclic_groupoid, pair, point, Functor, Obj};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir)?;
    let write = |name: &str, doc: Document| std::fs::write(dir.join(name), doc.to_json());

    write("pair2.gpd", Document::Groupoid(pair(2).to_data()))?;
    write("bc2.gpd", Document::Groupoid(cyclic_groupoid(2).to_data()))?;
    write("pt.gpd", Document::Groupoid(point().to_data()))?;

    let (p2, pt, bc2) = (Arc::new(pair(2)), Arc::new(point()), Arc::new(cyclic_groupoid(2)));
    let mut ws = Workspace::default();
    ws.groupoids.insert("Pair2".into(), p2.clone());
    ws.groupoids.insert("Pt".into(), pt.clone());
    ws.groupoids.insert("BC2".into(), bc2.clone());
    let collapse = Functor::constant(&p2, &pt, Obj(0));
    let pick = Functor::constant(&pt, &p2, Obj(0));
    ws.functors.insert("collapse".into(), collapse.clone());
    ws.functors.insert("pick".into(), pick.clone());
    ws.spans.insert("down".into(), spanise(&collapse));
    ws.spans.insert("up".into(), spanise(&pick));
    ws.diagrams.insert("id_down".into(), identity_2cell(&spanise(&collapse)));
    let point_bc2 = bibundlise(&Functor::constant(&pt, &bc2, Obj(0)));
    ws.bibundles.insert("bc2_point".into(), opposite(&point_bc2));
    ws.bibundles.insert("point_bc2".into(), point_bc2);
    write("spans.json", Document::Workspace(ws.to_data()))?;

    let cover = Cover::from_subsets(&["a", "b", "c"], &[vec![0, 1], vec![1, 2], vec![2, 0]]).expect("covers");
    std::fs::write(dir.join("triangle.cover.json"), gf::files::to_json_text(&serde_json::to_value(&cover).expect("serializes")))?;
    Ok(())
}
