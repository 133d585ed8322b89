//! Seeded generators of small random instances for the law suites.
//!
//! Every generator draws only from the fuzzer's own ChaCha stream, so a seed
//! fixes the whole sequence of instances.

use rustc_hash::FxHashMap as HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ana::Anafunctor;
use crate::bibundle::{gm_to_bibundle, Bibundle};
use crate::fractions::{GeneralizedMorphism, TwoCellDiagram};
use crate::gpd::{
    base_change, disjoint_union, group_groupoid, weak_pullback, Arr, FiniteGroup, FiniteGroupoid, Functor,
    NaturalTransformation, Obj,
};

/// Size limits for generated groupoids.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_objects: usize,
    pub max_arrows: usize,
}

impl Bounds {
    pub const fn new(max_objects: usize, max_arrows: usize) -> Self {
        Bounds { max_objects, max_arrows }
    }
}

pub struct Fuzzer {
    rng: ChaCha8Rng,
    groups: Vec<Arc<FiniteGroupoid>>,
}

impl Fuzzer {
    pub fn new(seed: u64) -> Self {
        let groups = [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
            FiniteGroup::symmetric(3),
        ]
        .iter()
        .map(|g| Arc::new(group_groupoid(g)))
        .collect();
        Fuzzer { rng: ChaCha8Rng::seed_from_u64(seed), groups }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// A disjoint union of connected pieces `Pair(n) × G`, within `b`.
    pub fn groupoid(&mut self, b: Bounds) -> Arc<FiniteGroupoid> {
        let total = if b.max_objects == 0 { 0 } else { self.rng.gen_range(1..=b.max_objects) };
        let mut budget = b.max_arrows.max(total);
        let mut left = total;
        let mut parts = Vec::new();
        while left > 0 {
            let n = self.rng.gen_range(1..=left);
            // shrink the piece until even the trivial group fits the budget
            let n = (1..=n).rev().find(|&k| k * k + (left - k) <= budget).unwrap_or(1);
            let room = budget.saturating_sub(left - n);
            let fits: Vec<&Arc<FiniteGroupoid>> =
                self.groups.iter().filter(|g| n * n * g.n_arrows() <= room).collect();
            let bg = fits.choose(&mut self.rng).copied().cloned().unwrap_or_else(|| self.groups[0].clone());
            let xs: Vec<String> = (0..n).map(|i| format!("x{}", parts.len() * 4 + i)).collect();
            let (piece, _) = base_change(&bg, &xs, &vec![Obj(0); n]).expect("labels are distinct");
            budget = budget.saturating_sub(piece.n_arrows());
            left -= n;
            parts.push(piece);
        }
        let refs: Vec<&FiniteGroupoid> = parts.iter().map(|p| p.as_ref()).collect();
        Arc::new(disjoint_union(&refs))
    }

    /// A uniformly chosen homomorphism between automorphism groups.
    fn group_hom(&mut self, g: &FiniteGroupoid, x: Obj, h: &FiniteGroupoid, y: Obj) -> HashMap<Arr, Arr> {
        let dom = g.automorphisms(x);
        let cod = h.automorphisms(y);
        let mut gens: Vec<Arr> = Vec::new();
        let mut closure = vec![g.unit(x)];
        for &a in dom {
            if closure.contains(&a) {
                continue;
            }
            gens.push(a);
            closure = close(g, &gens, g.unit(x));
        }
        let mut homs = Vec::new();
        let mut images = vec![0usize; gens.len()];
        loop {
            let assignment: Vec<Arr> = images.iter().map(|&i| cod[i]).collect();
            if let Some(m) = extend_hom(g, h, x, y, &gens, &assignment) {
                homs.push(m);
            }
            // odometer over generator images
            let mut k = 0;
            while k < images.len() {
                images[k] += 1;
                if images[k] < cod.len() {
                    break;
                }
                images[k] = 0;
                k += 1;
            }
            if k == images.len() {
                break;
            }
        }
        let i = self.rng.gen_range(0..homs.len());
        homs.swap_remove(i)
    }

    /// A random functor `g → h`, or `None` when `h` is empty and `g` is not.
    pub fn functor(&mut self, g: &Arc<FiniteGroupoid>, h: &Arc<FiniteGroupoid>) -> Option<Functor> {
        if h.n_objects() == 0 && g.n_objects() > 0 {
            return None;
        }
        let mut obj = vec![Obj(0); g.n_objects()];
        let mut arr = vec![Arr(0); g.n_arrows()];
        let hcomps = h.components();
        for comp in g.components() {
            let root = comp[0];
            let y = Obj(self.rng.gen_range(0..h.n_objects()));
            let rho = self.group_hom(g, root, h, y);
            let hc = hcomps.iter().find(|c| c.contains(&y)).expect("component of y");
            // tree arrows root → x in g, and their images y → y_x in h
            let mut tree = HashMap::default();
            for &x in &comp {
                let t = g.hom(root, x)[0];
                let yx = if x == root { y } else { *hc.choose(&mut self.rng).expect("nonempty") };
                let k = *h.hom(y, yx).choose(&mut self.rng).expect("same component");
                let k = if x == root { h.unit(y) } else { k };
                tree.insert(x, (t, k));
                obj[x.0] = yx;
            }
            for &x1 in &comp {
                for &x2 in &comp {
                    let (t1, k1) = tree[&x1];
                    let (t2, k2) = tree[&x2];
                    for &a in g.hom(x1, x2) {
                        let loop_ = g.comp_all(&[g.inv(t2), a, t1]);
                        arr[a.0] = h.comp_all(&[k2, rho[&loop_], h.inv(k1)]);
                    }
                }
            }
        }
        let f = Functor::new(g.clone(), h.clone(), obj, arr).expect("generated functor is functorial");
        Some(f)
    }

    /// A random weak equivalence onto `h` by base change. When `subductive`,
    /// every object of `h` is hit; otherwise only every component.
    pub fn weak_equivalence_onto(&mut self, h: &Arc<FiniteGroupoid>, subductive: bool, max_arrows: usize) -> Functor {
        for attempt in 0.. {
            let mut f: Vec<Obj> = if subductive {
                h.objects().collect()
            } else {
                h.components().iter().map(|c| *c.choose(&mut self.rng).expect("nonempty")).collect()
            };
            let extra = if attempt > 8 { 0 } else { self.rng.gen_range(0..=2) };
            for _ in 0..extra {
                if h.n_objects() > 0 {
                    f.push(Obj(self.rng.gen_range(0..h.n_objects())));
                }
            }
            f.shuffle(&mut self.rng);
            let size: usize = f.iter().flat_map(|&a| f.iter().map(move |&b| (a, b))).map(|(a, b)| h.hom(a, b).len()).sum();
            if size > max_arrows && attempt <= 8 {
                continue;
            }
            let xs: Vec<String> = (0..f.len()).map(|i| format!("u{i}")).collect();
            let (_, cmp) = base_change(h, &xs, &f).expect("labels are distinct");
            return cmp;
        }
        unreachable!()
    }

    /// A functor `ψ` with a random natural isomorphism `φ ⇒ ψ`.
    pub fn twist(&mut self, phi: &Functor) -> NaturalTransformation {
        let (g, h) = (phi.dom(), phi.cod());
        let comp: Vec<Arr> = g
            .objects()
            .map(|x| *h.arrows_from(phi.obj(x)).choose(&mut self.rng).expect("units exist"))
            .collect();
        let obj = comp.iter().map(|&c| h.trg(c)).collect();
        let arr = g.arrows().map(|a| h.comp_all(&[comp[g.trg(a).0], phi.arr(a), h.inv(comp[g.src(a).0])])).collect();
        let psi = Functor::new(g.clone(), h.clone(), obj, arr).expect("conjugate of a functor");
        NaturalTransformation::new(phi.clone(), psi, comp).expect("twist is natural")
    }

    /// A random span `g ← K → h`.
    pub fn gm(&mut self, g: &Arc<FiniteGroupoid>, h: &Arc<FiniteGroupoid>, subductive: bool, max_apex: usize) -> Option<GeneralizedMorphism> {
        let left = self.weak_equivalence_onto(g, subductive, max_apex);
        let right = self.functor(left.dom(), h)?;
        Some(GeneralizedMorphism::new(left, right).expect("left leg is a weak equivalence"))
    }

    pub fn anafunctor(&mut self, g: &Arc<FiniteGroupoid>, h: &Arc<FiniteGroupoid>, max_apex: usize) -> Option<Anafunctor> {
        let gm = self.gm(g, h, true, max_apex)?;
        Some(Anafunctor::new(gm.left().clone(), gm.right().clone()).expect("subductive left leg"))
    }

    /// A span whose right leg is a weak equivalence: a weak pullback of two
    /// base changes of a common groupoid.
    pub fn morita_span(&mut self, m: &Arc<FiniteGroupoid>, max_arrows: usize) -> GeneralizedMorphism {
        let sa = self.coin(0.5);
        let a = self.weak_equivalence_onto(m, sa, max_arrows);
        let sb = self.coin(0.5);
        let b = self.weak_equivalence_onto(m, sb, max_arrows);
        let wp = weak_pullback(&a, &b).expect("small weak pullback");
        GeneralizedMorphism::new(wp.pr1.clone(), wp.pr3.clone()).expect("pr1 is a weak equivalence")
    }

    /// A random diagram from `a` to a freshly generated span. With
    /// `subductive`, the target is again an anafunctor.
    pub fn diagram_from(&mut self, a: &GeneralizedMorphism, subductive: bool, max_apex: usize) -> TwoCellDiagram {
        let (k, g, h) = (a.apex().clone(), a.source().clone(), a.target().clone());
        let beta = self.weak_equivalence_onto(&k, subductive, max_apex);
        let k2 = beta.dom().clone();
        let (phi2, sigma) = if subductive {
            let l = a.left().after(&beta);
            (l.clone(), NaturalTransformation::identity(&l))
        } else {
            let s = self.twist(&a.left().after(&beta));
            (s.to().clone(), s)
        };
        let tau = self.twist(&a.right().after(&beta));
        let b = GeneralizedMorphism::new(phi2, tau.to().clone()).expect("target span");

        let sa = self.coin(0.5);
        let alpha = self.weak_equivalence_onto(&k, sa, max_apex);
        let l = alpha.dom().clone();
        // lift each object of L to K′ along β, remembering the connecting arrow
        let mut lift = Vec::with_capacity(l.n_objects());
        let kcomps = k.components();
        for y in l.objects() {
            let ay = alpha.obj(y);
            let comp = kcomps.iter().find(|c| c.contains(&ay)).expect("component");
            let zs: Vec<Obj> = k2.objects().filter(|&z| comp.contains(&beta.obj(z))).collect();
            let z = *zs.choose(&mut self.rng).expect("β is essentially surjective");
            let c = *k.hom(ay, beta.obj(z)).choose(&mut self.rng).expect("same component");
            lift.push((z, c));
        }
        let by_key: HashMap<(Obj, Obj, Arr), Arr> =
            k2.arrows().map(|e| ((k2.src(e), k2.trg(e), beta.arr(e)), e)).collect();
        let alpha2 = Functor::new(
            l.clone(),
            k2.clone(),
            lift.iter().map(|p| p.0).collect(),
            l.arrows()
                .map(|e| {
                    let (z1, c1) = lift[l.src(e).0];
                    let (z2, c2) = lift[l.trg(e).0];
                    by_key[&(z1, z2, k.comp_all(&[c2, alpha.arr(e), k.inv(c1)]))]
                })
                .collect(),
        )
        .expect("lift is a functor");
        let s1 = NaturalTransformation::new(
            a.left().after(&alpha),
            b.left().after(&alpha2),
            l.objects().map(|y| g.comp(sigma.at(lift[y.0].0), a.left().arr(lift[y.0].1))).collect(),
        )
        .expect("S1 is natural");
        let s2 = NaturalTransformation::new(
            a.right().after(&alpha),
            b.right().after(&alpha2),
            l.objects().map(|y| h.comp(tau.at(lift[y.0].0), a.right().arr(lift[y.0].1))).collect(),
        )
        .expect("S2 is natural");
        TwoCellDiagram::new(a.clone(), b, alpha, alpha2, s1, s2).expect("generated diagram is valid")
    }

    /// An equivalent diagram: refine the mediator by a weak equivalence and
    /// twist the second mediator leg by a natural isomorphism.
    pub fn remediate(&mut self, c: &TwoCellDiagram, max_apex: usize) -> TwoCellDiagram {
        let sm = self.coin(0.5);
        let mu = self.weak_equivalence_onto(c.alpha().dom(), sm, max_apex);
        let alpha = c.alpha().after(&mu);
        let nu = self.twist(&c.alpha2().after(&mu));
        let alpha2 = nu.to().clone();
        let (b, g, h) = (c.target(), c.source().source(), c.source().target());
        let s1 = c.s1().whisker_pre(&mu);
        let s2 = c.s2().whisker_pre(&mu);
        let s1 = NaturalTransformation::new(
            s1.from().clone(),
            b.left().after(&alpha2),
            mu.dom().objects().map(|y| g.comp(b.left().arr(nu.at(y)), s1.at(y))).collect(),
        )
        .expect("refined S1");
        let s2 = NaturalTransformation::new(
            s2.from().clone(),
            b.right().after(&alpha2),
            mu.dom().objects().map(|y| h.comp(b.right().arr(nu.at(y)), s2.at(y))).collect(),
        )
        .expect("refined S2");
        TwoCellDiagram::new(c.source().clone(), b.clone(), alpha, alpha2, s1, s2).expect("refined diagram")
    }

    /// A right-principal bibundle `g → h`; biprincipal when `h` is produced
    /// together with it as a Morita partner.
    pub fn right_principal_bibundle(&mut self, g: &Arc<FiniteGroupoid>, h: &Arc<FiniteGroupoid>, max_apex: usize) -> Option<Bibundle> {
        let sub = self.coin(0.5);
        let gm = self.gm(g, h, sub, max_apex)?;
        Some(gm_to_bibundle(&gm).expect("small span").bibundle)
    }

    /// A biprincipal bibundle between two base changes of a random groupoid.
    pub fn biprincipal_bibundle(&mut self, b: Bounds, max_apex: usize) -> Bibundle {
        let m = self.groupoid(b);
        let gm = self.morita_span(&m, max_apex);
        gm_to_bibundle(&gm).expect("small span").bibundle
    }
}

fn close(g: &FiniteGroupoid, gens: &[Arr], e: Arr) -> Vec<Arr> {
    let mut out = vec![e];
    let mut i = 0;
    while i < out.len() {
        for &s in gens {
            let c = g.comp(s, out[i]);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        i += 1;
    }
    out
}

fn extend_hom(g: &FiniteGroupoid, h: &FiniteGroupoid, x: Obj, y: Obj, gens: &[Arr], imgs: &[Arr]) -> Option<HashMap<Arr, Arr>> {
    let mut m = HashMap::default();
    m.insert(g.unit(x), h.unit(y));
    let mut queue = vec![g.unit(x)];
    while let Some(a) = queue.pop() {
        for (&s, &t) in gens.iter().zip(imgs) {
            let b = g.comp(s, a);
            let v = h.comp(t, m[&a]);
            match m.get(&b) {
                Some(&w) if w != v => return None,
                Some(_) => {}
                None => {
                    m.insert(b, v);
                    queue.push(b);
                }
            }
        }
    }
    let dom = g.automorphisms(x);
    for &a in dom {
        for &b in dom {
            if m[&g.comp(a, b)] != h.comp(m[&a], m[&b]) {
                return None;
            }
        }
    }
    Some(m)
}
