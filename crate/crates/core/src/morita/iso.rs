use crate::error::{GpdError, Result};
use crate::gpd::FiniteGroup;

/// Largest group order the isomorphism search accepts.
pub const GROUP_ISO_CAP: usize = 64;

/// A small generating set, chosen greedily in element order.
pub fn generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![false; g.order()];
    span[g.identity()] = true;
    for a in 0..g.order() {
        if span[a] {
            continue;
        }
        gens.push(a);
        span = closure(g, &gens);
    }
    gens
}

fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<bool> {
    let mut span = vec![false; g.order()];
    span[g.identity()] = true;
    let mut stack = vec![g.identity()];
    while let Some(a) = stack.pop() {
        for &s in gens {
            let b = g.mul(s, a);
            if !span[b] {
                span[b] = true;
                stack.push(b);
            }
        }
    }
    span
}

/// Extends generator images to a map on all of `a`, if that is a well-defined injective homomorphism.
fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut m = vec![usize::MAX; a.order()];
    m[a.identity()] = b.identity();
    let mut stack = vec![a.identity()];
    while let Some(x) = stack.pop() {
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = a.mul(s, x);
            let v = b.mul(t, m[x]);
            if m[y] == usize::MAX {
                m[y] = v;
                stack.push(y);
            } else if m[y] != v {
                return None;
            }
        }
    }
    let mut hit = vec![false; b.order()];
    for &v in &m {
        if v == usize::MAX || std::mem::replace(&mut hit[v], true) {
            return None;
        }
    }
    for x in 0..a.order() {
        for y in 0..a.order() {
            if m[a.mul(x, y)] != b.mul(m[x], m[y]) {
                return None;
            }
        }
    }
    Some(m)
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut p: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    p.sort_unstable();
    p
}

/// An isomorphism `a → b` as an element table, found by backtracking over
/// generator images with matching element orders.
pub fn find_group_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    for g in [a, b] {
        if g.order() > GROUP_ISO_CAP {
            return Err(GpdError::GroupTooLarge { order: g.order(), cap: GROUP_ISO_CAP });
        }
    }
    if a.order() != b.order() || order_profile(a) != order_profile(b) {
        return Ok(None);
    }
    let gens = generators(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..b.order()).filter(|&t| b.element_order(t) == a.element_order(s)).collect())
        .collect();
    let mut imgs = Vec::with_capacity(gens.len());
    Ok(search(a, b, &gens, &candidates, &mut imgs))
}

fn search(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], cands: &[Vec<usize>], imgs: &mut Vec<usize>) -> Option<Vec<usize>> {
    if imgs.len() == gens.len() {
        return extend(a, b, gens, imgs);
    }
    for &t in &cands[imgs.len()] {
        if imgs.contains(&t) {
            continue;
        }
        imgs.push(t);
        if let Some(m) = search(a, b, gens, cands, imgs) {
            return Some(m);
        }
        imgs.pop();
    }
    None
}

pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    Ok(find_group_isomorphism(a, b)?.is_some())
}
