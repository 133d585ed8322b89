use rustc_hash::FxHashMap as HashMap;
use std::sync::Arc;

use crate::error::{GpdError, Result};
use crate::gpd::{assemble, tuple_label, Arr, FiniteGroupoid, Functor, Obj};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A groupoid acting on a finite set along an anchor map.
///
/// Left: `g·x` is defined when `src g = l(x)` and lands over `trg g`.
/// Right: `x·h` is defined when `trg h = r(x)` and lands over `src h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidAction {
    actor: Arc<FiniteGroupoid>,
    side: Side,
    carrier: Vec<String>,
    anchor: Vec<Obj>,
    act: HashMap<(Arr, usize), usize>,
}

impl GroupoidAction {
    pub fn new(
        actor: Arc<FiniteGroupoid>,
        side: Side,
        carrier: Vec<String>,
        anchor: Vec<Obj>,
        act: impl IntoIterator<Item = ((Arr, usize), usize)>,
    ) -> Result<Self> {
        let a = GroupoidAction { actor, side, carrier, anchor, act: act.into_iter().collect() };
        a.check()?;
        Ok(a)
    }

    /// Tabulates `f(g, x)` over every defined pair.
    pub(crate) fn from_fn(
        actor: &Arc<FiniteGroupoid>,
        side: Side,
        carrier: Vec<String>,
        anchor: Vec<Obj>,
        f: impl Fn(Arr, usize) -> usize,
    ) -> Self {
        let mut act = HashMap::default();
        for (x, &o) in anchor.iter().enumerate() {
            let arrows = match side {
                Side::Left => actor.arrows_from(o),
                Side::Right => actor.arrows_into(o),
            };
            for &g in arrows {
                act.insert((g, x), f(g, x));
            }
        }
        GroupoidAction { actor: actor.clone(), side, carrier, anchor, act }
    }

    pub fn actor(&self) -> &Arc<FiniteGroupoid> {
        &self.actor
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn anchor(&self, x: usize) -> Obj {
        self.anchor[x]
    }

    pub fn anchors(&self) -> &[Obj] {
        &self.anchor
    }

    pub fn point_by_label(&self, l: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == l)
    }

    /// The action of `g` on `x`, if defined.
    pub fn try_act(&self, g: Arr, x: usize) -> Option<usize> {
        self.act.get(&(g, x)).copied()
    }

    pub fn act(&self, g: Arr, x: usize) -> usize {
        self.try_act(g, x).expect("action applied outside its domain")
    }

    /// Arrows that can act on `x`.
    pub fn acting_on(&self, x: usize) -> &[Arr] {
        match self.side {
            Side::Left => self.actor.arrows_from(self.anchor[x]),
            Side::Right => self.actor.arrows_into(self.anchor[x]),
        }
    }

    fn defined(&self, g: Arr, x: usize) -> bool {
        match self.side {
            Side::Left => self.actor.src(g) == self.anchor[x],
            Side::Right => self.actor.trg(g) == self.anchor[x],
        }
    }

    pub fn check(&self) -> Result<()> {
        let g = &self.actor;
        let bad = |m: String| Err(GpdError::ActionAxiomViolation(m));
        if self.anchor.len() != self.carrier.len() {
            return bad("anchor table size".into());
        }
        let mut seen = rustc_hash::FxHashSet::default();
        for c in &self.carrier {
            if !seen.insert(c) {
                return bad(format!("duplicate point {c}"));
            }
        }
        for &(a, x) in self.act.keys() {
            if x >= self.len() || a.0 >= g.n_arrows() || !self.defined(a, x) {
                return bad("action defined on a pair with mismatched anchor".into());
            }
        }
        for x in 0..self.len() {
            if self.anchor[x].0 >= g.n_objects() {
                return bad(format!("anchor of {} out of range", self.carrier[x]));
            }
            for &a in self.acting_on(x) {
                let Some(y) = self.try_act(a, x) else {
                    return bad(format!("{} does not act on {}", g.arr_label(a), self.carrier[x]));
                };
                if y >= self.len() {
                    return bad("action leaves the carrier".into());
                }
                let expected = match self.side {
                    Side::Left => g.trg(a),
                    Side::Right => g.src(a),
                };
                if self.anchor[y] != expected {
                    return bad(format!("anchor of {}·{} is wrong", g.arr_label(a), self.carrier[x]));
                }
            }
            if self.act(g.unit(self.anchor[x]), x) != x {
                return bad(format!("unit does not fix {}", self.carrier[x]));
            }
        }
        for x in 0..self.len() {
            for &a in self.acting_on(x) {
                let y = self.act(a, x);
                for &b in self.acting_on(y) {
                    let z = self.act(b, y);
                    let ba = match self.side {
                        Side::Left => g.comp(b, a),
                        Side::Right => g.comp(a, b),
                    };
                    if self.act(ba, x) != z {
                        return bad(format!(
                            "{} and {} do not act compatibly on {}",
                            g.arr_label(a),
                            g.arr_label(b),
                            self.carrier[x]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The action groupoid of a left action: arrows `(g, x): x → g·x`.
    pub fn action_groupoid(&self) -> Result<(Arc<FiniteGroupoid>, Functor)> {
        if self.side != Side::Left {
            return Err(GpdError::ActionAxiomViolation("action groupoid is built from a left action".into()));
        }
        let g = &self.actor;
        let objects: Vec<(usize, String)> = (0..self.len()).map(|x| (x, self.carrier[x].clone())).collect();
        let mut arrows = Vec::new();
        for x in 0..self.len() {
            for &a in self.acting_on(x) {
                arrows.push(((a, x), tuple_label(&[g.arr_label(a), &self.carrier[x]])));
            }
        }
        let k = assemble(
            objects,
            arrows,
            |&(_, x)| x,
            |&(a, x)| self.act(a, x),
            |&x| (g.unit(self.anchor[x]), x),
            |&(a, x)| (g.inv(a), self.act(a, x)),
            |&(b, _), &(a, x)| (g.comp(b, a), x),
        );
        let ag = Arc::new(k.groupoid);
        let proj = Functor::new_unchecked(
            ag.clone(),
            g.clone(),
            k.okeys.iter().map(|&x| self.anchor[x]).collect(),
            k.akeys.iter().map(|&(a, _)| a).collect(),
        );
        Ok((ag, proj))
    }

    /// Orbits, each listed in carrier order; orbits ordered by first point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut orbit_of = vec![usize::MAX; self.len()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.len() {
            if orbit_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = self.acting_on(x).iter().map(|&a| self.act(a, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                orbit_of[m] = out.len();
            }
            out.push(members);
        }
        out
    }
}
