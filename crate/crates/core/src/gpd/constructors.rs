//! Standard groupoids: trivial, pair, relation, group and full subgroupoids.

use std::sync::Arc;

use super::functor::Functor;
use super::group::FiniteGroup;
use super::groupoid::{assemble, check_unique, tuple_label, Arr, FiniteGroupoid, Obj};
use crate::error::{GpdError, Result};

fn labels<S: AsRef<str>>(set: &[S]) -> Vec<String> {
    set.iter().map(|s| s.as_ref().to_string()).collect()
}

/// The trivial groupoid of a set: only unit arrows, labelled `id_x`.
pub fn trivial_groupoid<S: AsRef<str>>(set: &[S]) -> Result<FiniteGroupoid> {
    let xs = labels(set);
    check_unique(&xs)?;
    let n = xs.len();
    Ok(FiniteGroupoid::from_parts(
        xs.clone(),
        xs.iter().map(|x| format!("id_{x}")).collect(),
        (0..n).map(Obj).collect(),
        (0..n).map(Obj).collect(),
        (0..n).map(Arr).collect(),
        (0..n).map(Arr).collect(),
        (0..n).map(|i| ((Arr(i), Arr(i)), Arr(i))).collect(),
    ))
}

/// `Disc(n)` on objects `0..n`.
pub fn discrete(n: usize) -> FiniteGroupoid {
    let xs: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    trivial_groupoid(&xs).expect("distinct labels")
}

/// The terminal groupoid `Pt`.
pub fn point() -> FiniteGroupoid {
    trivial_groupoid(&["*"]).expect("one label")
}

/// The pair groupoid: one arrow `(i,j)` for every ordered pair.
pub fn pair_groupoid<S: AsRef<str>>(set: &[S]) -> Result<FiniteGroupoid> {
    let xs = labels(set);
    check_unique(&xs)?;
    let n = xs.len();
    relation_on(&xs, &vec![0; n])
}

/// `Pair(n)` on objects `0..n`.
pub fn pair(n: usize) -> FiniteGroupoid {
    let xs: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    pair_groupoid(&xs).expect("distinct labels")
}

/// The relation groupoid of the equivalence relation `x ~ x'` iff `f(x) = f(x')`.
///
/// `classes[i]` is the image of the i-th element under the surjection `f`.
pub fn relation_groupoid<S: AsRef<str>>(set: &[S], classes: &[usize]) -> Result<FiniteGroupoid> {
    let xs = labels(set);
    check_unique(&xs)?;
    if classes.len() != xs.len() {
        return Err(GpdError::BoundaryMismatch("surjection table length".into()));
    }
    relation_on(&xs, classes)
}

fn relation_on(xs: &[String], classes: &[usize]) -> Result<FiniteGroupoid> {
    let n = xs.len();
    let objects = (0..n).map(|i| (i, xs[i].clone())).collect();
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if classes[i] == classes[j] {
                arrows.push(((i, j), tuple_label(&[&xs[i], &xs[j]])));
            }
        }
    }
    Ok(assemble(
        objects,
        arrows,
        |&(i, _)| i,
        |&(_, j)| j,
        |&i| (i, i),
        |&(i, j)| (j, i),
        |&(_, k), &(i, _)| (i, k),
    )
    .groupoid)
}

/// The one-object groupoid `BG` of a finite group; the object is `*`.
pub fn group_groupoid(g: &FiniteGroup) -> FiniteGroupoid {
    let n = g.order();
    FiniteGroupoid::from_parts(
        vec!["*".into()],
        g.labels().to_vec(),
        vec![Obj(0); n],
        vec![Obj(0); n],
        vec![Arr(g.identity())],
        (0..n).map(|a| Arr(g.inv(a))).collect(),
        (0..n).flat_map(|a| (0..n).map(move |b| ((Arr(a), Arr(b)), Arr(g.mul(a, b))))).collect(),
    )
}

/// `BC_n`: the cyclic group of order `n` as a one-object groupoid.
pub fn cyclic_groupoid(n: usize) -> FiniteGroupoid {
    group_groupoid(&FiniteGroup::cyclic(n))
}

/// Full subgroupoid on the given objects, with its inclusion functor.
pub fn full_subgroupoid(g: &Arc<FiniteGroupoid>, objs: &[Obj]) -> (Arc<FiniteGroupoid>, Functor) {
    let objects: Vec<(Obj, String)> = objs.iter().map(|&x| (x, g.obj_label(x).to_string())).collect();
    let mut arrows = Vec::new();
    for &x in objs {
        for &y in objs {
            for &a in g.hom(x, y) {
                arrows.push((a, g.arr_label(a).to_string()));
            }
        }
    }
    let k = assemble(
        objects,
        arrows,
        |&a| g.src(a),
        |&a| g.trg(a),
        |&x| g.unit(x),
        |&a| g.inv(a),
        |&p, &q| g.comp(p, q),
    );
    let sub = Arc::new(k.groupoid);
    let incl = Functor::new_unchecked(sub.clone(), g.clone(), k.okeys, k.akeys);
    (sub, incl)
}

/// Disjoint union; element labels are prefixed with the summand index as `i:label`.
pub fn disjoint_union(parts: &[&FiniteGroupoid]) -> FiniteGroupoid {
    let mut objects = Vec::new();
    let mut arrows = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        objects.extend(p.objects().map(|x| ((i, x), format!("{i}:{}", p.obj_label(x)))));
        arrows.extend(p.arrows().map(|a| ((i, a), format!("{i}:{}", p.arr_label(a)))));
    }
    assemble(
        objects,
        arrows,
        |&(i, a)| (i, parts[i].src(a)),
        |&(i, a)| (i, parts[i].trg(a)),
        |&(i, x)| (i, parts[i].unit(x)),
        |&(i, a)| (i, parts[i].inv(a)),
        |&(i, p), &(_, q)| (i, parts[i].comp(p, q)),
    )
    .groupoid
}

/// `χ: G → Pair(G₀)`, `g ↦ (src g, trg g)`.
pub fn characteristic_functor(g: &Arc<FiniteGroupoid>) -> Functor {
    let p = Arc::new(pair_groupoid(g.obj_labels()).expect("object labels are unique"));
    let n = g.n_objects();
    // arrows of the pair groupoid are listed row-major by (src, trg)
    Functor::from_fns(g, &p, |x| x, |a| Arr(g.src(a).0 * n + g.trg(a).0))
}
