//! Seeded property suites over fuzzed instances.
//!
//! Each case draws from its own fuzzer, seeded from the suite seed and the
//! case index, so any single case can be replayed on its own. A panic inside
//! a case is caught and reported as a failure of that case.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use crate::ana::*;
use crate::bibundle::*;
use crate::fractions::*;
use crate::fuzz::{Bounds, Fuzzer};
use crate::gpd::*;
use crate::morita::*;

pub type CaseResult = std::result::Result<(), String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Weq,
    Pullback,
    Coherence,
    Bibundle,
    Canonical,
    Roundtrip,
    QuasiInverse,
    Morita,
    Fractions,
    Ana,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Weq,
        Suite::Pullback,
        Suite::Coherence,
        Suite::Bibundle,
        Suite::Canonical,
        Suite::Roundtrip,
        Suite::QuasiInverse,
        Suite::Morita,
        Suite::Fractions,
        Suite::Ana,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Weq => "weq",
            Suite::Pullback => "pullback",
            Suite::Coherence => "coherence",
            Suite::Bibundle => "bibundle",
            Suite::Canonical => "canonical",
            Suite::Roundtrip => "roundtrip",
            Suite::QuasiInverse => "quasi-inverse",
            Suite::Morita => "morita",
            Suite::Fractions => "fractions",
            Suite::Ana => "ana",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    fn case(self, f: &mut Fuzzer, i: usize) -> CaseResult {
        match self {
            Suite::Weq => weq_case(f),
            Suite::Pullback => pullback_case(f),
            Suite::Coherence => coherence_case(f),
            Suite::Bibundle => bibundle_case(f),
            Suite::Canonical => canonical_case(f),
            Suite::Roundtrip => roundtrip_case(f),
            Suite::QuasiInverse => quasi_inverse_case(f),
            Suite::Morita => morita_case(f, i),
            Suite::Fractions => fractions_case(f),
            Suite::Ana => ana_case(f),
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::from_name(s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s}; expected one of {}", names.join(", "))
        })
    }
}

/// Seed of case `i`, mixed so neighbouring cases share no stream prefix.
pub fn case_seed(seed: u64, i: usize) -> u64 {
    let mut z = seed ^ (i as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn run_case(suite: Suite, seed: u64, i: usize) -> CaseResult {
    let mut f = Fuzzer::new(case_seed(seed, i));
    match catch_unwind(AssertUnwindSafe(|| suite.case(&mut f, i))) {
        Ok(r) => r,
        Err(p) => Err(match p.downcast_ref::<&str>() {
            Some(s) => format!("panic: {s}"),
            None => match p.downcast_ref::<String>() {
                Some(s) => format!("panic: {s}"),
                None => "panic".into(),
            },
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub failures: Vec<(usize, String)>,
    pub total: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.total - self.failures.len()
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!("{}/{} passed", self.passed(), self.total)
    }

    /// One line per failure, then the summary.
    pub fn transcript(&self) -> String {
        let mut s = String::new();
        for (i, m) in &self.failures {
            let _ = writeln!(s, "case {i}: FAIL: {m}");
        }
        s.push_str(&self.summary());
        s
    }
}

pub fn run_suite(suite: Suite, seed: u64, count: usize) -> SuiteReport {
    let failures = (0..count).filter_map(|i| run_case(suite, seed, i).err().map(|m| (i, m))).collect();
    SuiteReport { suite, seed, failures, total: count }
}

fn ensure(cond: bool, what: &str) -> CaseResult {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn lift<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

const SMALL: Bounds = Bounds::new(4, 20);
const TINY: Bounds = Bounds::new(3, 10);
const APEX: usize = 24;

/// Weak equivalence by direct counting: every object is reached up to
/// isomorphism, and each hom map is a bijection.
pub fn weq_oracle(phi: &Functor) -> bool {
    let (g, h) = (phi.dom(), phi.cod());
    let reached = h.objects().all(|y| g.objects().any(|x| !h.hom(phi.obj(x), y).is_empty()));
    let ff = g.objects().all(|x1| {
        g.objects().all(|x2| {
            let src = g.hom(x1, x2);
            let mut img: Vec<Arr> = src.iter().map(|&a| phi.arr(a)).collect();
            img.sort_unstable();
            img.dedup();
            img.len() == src.len() && img.len() == h.hom(phi.obj(x1), phi.obj(x2)).len()
        })
    });
    reached && ff
}

/// A functor into `h`: half the time a weak equivalence by base change.
fn into(f: &mut Fuzzer, h: &Arc<FiniteGroupoid>) -> Functor {
    if f.coin(0.5) {
        let sub = f.coin(0.5);
        f.weak_equivalence_onto(h, sub, SMALL.max_arrows)
    } else {
        let g = f.groupoid(SMALL);
        f.functor(&g, h).expect("nonempty codomain")
    }
}

fn weq_case(f: &mut Fuzzer) -> CaseResult {
    let k = f.groupoid(SMALL);
    let psi = into(f, &k);
    let phi = into(f, psi.dom());
    let comp = psi.after(&phi);
    let w = [is_weak_equivalence(&phi), is_weak_equivalence(&psi), is_weak_equivalence(&comp)];
    ensure(
        w == [weq_oracle(&phi), weq_oracle(&psi), weq_oracle(&comp)],
        "weak equivalence check disagrees with counting",
    )?;
    ensure(w.iter().filter(|&&b| b).count() != 2, "two out of three hold but the third fails")?;
    let t = f.twist(&phi);
    ensure(is_weak_equivalence(t.to()) == w[0], "weak equivalence not invariant under natural isomorphism")?;
    let t = f.twist(&comp);
    ensure(is_weak_equivalence(t.to()) == w[2], "composite not invariant under natural isomorphism")
}

fn pullback_case(f: &mut Fuzzer) -> CaseResult {
    let h = f.groupoid(TINY);
    let g = f.groupoid(TINY);
    let phi = f.functor(&g, &h).expect("nonempty");
    let psi = into(f, &h);
    let w = lift(weak_pullback(&phi, &psi))?;
    if is_weak_equivalence(&psi) {
        ensure(check_subductive_weak_equivalence(&w.pr1), "pr1 is not a subductive weak equivalence")?;
    }
    if w.groupoid.n_objects() == 0 {
        return Ok(());
    }
    let sub = f.coin(0.5);
    let lam = f.weak_equivalence_onto(&w.groupoid, sub, 40);
    let alpha = w.pr1.after(&lam);
    let beta = w.pr3.after(&lam);
    let t = w.pr2.whisker_pre(&lam);
    let sigma = f.twist(&alpha);
    let tau = f.twist(&beta);
    let t2 = tau.whisker_post(&psi).after(&t.after(&sigma.inverse().whisker_post(&phi)));
    let theta = lift(w.mediator(sigma.to(), tau.to(), &t2))?;
    lift(theta.check())?;
    ensure(w.pr1.after(&theta) == *sigma.to(), "pr1 ∘ θ ≠ α")?;
    ensure(w.pr3.after(&theta) == *tau.to(), "pr3 ∘ θ ≠ β")?;
    ensure(w.pr2.whisker_pre(&theta).components() == t2.components(), "pr2 θ ≠ T")
}

fn chain(f: &mut Fuzzer, n: usize, b: Bounds) -> Vec<Functor> {
    let mut gs = vec![f.groupoid(b)];
    let mut out = Vec::new();
    for _ in 0..n {
        let next = f.groupoid(b);
        out.push(f.functor(gs.last().expect("nonempty"), &next).expect("nonempty"));
        gs.push(next);
    }
    out
}

/// Coherence checks build strict pullbacks over the triple composite, so
/// chains are redrawn until its apex is small.
const COHERENCE_BUDGET: usize = 96;

fn triple_apex(fs: &[Functor]) -> crate::Result<usize> {
    let a = compose_ana(&compose_ana(&anafunctise(&fs[0]), &anafunctise(&fs[1]))?, &anafunctise(&fs[2]))?;
    Ok(a.apex().n_arrows())
}

fn coherence_case(f: &mut Fuzzer) -> CaseResult {
    let fs = loop {
        let fs = chain(f, 3, Bounds::new(2, 3));
        if triple_apex(&fs).is_ok_and(|n| n <= COHERENCE_BUDGET) {
            break fs;
        }
    };
    ensure(lift(anafunctisation_coherence(&fs[0], &fs[1], &fs[2]))?, "anafunctisation coherence fails")
}

fn small_bibundle(f: &mut Fuzzer, g: &Arc<FiniteGroupoid>, h: &Arc<FiniteGroupoid>) -> Bibundle {
    if f.coin(0.5) {
        bibundlise(&f.functor(g, h).expect("nonempty"))
    } else {
        f.right_principal_bibundle(g, h, 8).expect("nonempty")
    }
}

fn bibundle_case(f: &mut Fuzzer) -> CaseResult {
    let b = Bounds::new(2, 6);
    let gs: Vec<Arc<FiniteGroupoid>> = (0..5).map(|_| f.groupoid(b)).collect();
    let xs: Vec<Bibundle> = (0..4).map(|i| small_bibundle(f, &gs[i], &gs[i + 1])).collect();
    let (x, y, z, w) = (&xs[0], &xs[1], &xs[2], &xs[3]);
    let t = |a: &Bibundle, b: &Bibundle| lift(tensor(a, b));

    // pentagon
    let xy = t(x, y)?;
    let yz = t(y, z)?;
    let zw = t(z, w)?;
    let r1 = lift(vcomp_bi(&lift(associator(&xy, z, w))?, &lift(associator(x, y, &zw))?))?;
    let a1 = lift(whisker_right_bi(&lift(associator(x, y, z))?, w))?;
    let a2 = lift(associator(x, &yz, w))?;
    let a3 = lift(whisker_left_bi(x, &lift(associator(y, z, w))?))?;
    let r2 = lift(vcomp_bi(&lift(vcomp_bi(&a1, &a2))?, &a3))?;
    ensure(r1 == r2, "pentagon")?;

    // triangle: (X ⊗ I) ⊗ Y → X ⊗ Y both ways
    let i = identity_bibundle(x.target());
    let lhs = lift(vcomp_bi(&lift(associator(x, &i, y))?, &lift(whisker_left_bi(x, &lift(unitor_left_bi(y))?))?))?;
    let rhs = lift(whisker_right_bi(&lift(unitor_right_bi(x))?, y))?;
    ensure(lhs == rhs, "triangle")?;

    // interchange on bibundlised twists
    let phi = f.functor(&gs[0], &gs[1]).expect("nonempty");
    let psi = f.functor(&gs[1], &gs[2]).expect("nonempty");
    let (s1, t1) = (f.twist(&phi), f.twist(&psi));
    let (s2, t2) = (f.twist(s1.to()), f.twist(t1.to()));
    let (a, bb, c, d) = (bibundlise_2cell(&s1), bibundlise_2cell(&s2), bibundlise_2cell(&t1), bibundlise_2cell(&t2));
    let lhs = lift(hcomp_bi(&lift(vcomp_bi(&a, &bb))?, &lift(vcomp_bi(&c, &d))?))?;
    let rhs = lift(vcomp_bi(&lift(hcomp_bi(&a, &c))?, &lift(hcomp_bi(&bb, &d))?))?;
    ensure(lhs == rhs, "interchange")?;

    // bibundlisation coherence
    let chi = f.functor(&gs[2], &gs[3]).expect("nonempty");
    let (bp, bq, bc) = (bibundlise(&phi), bibundlise(&psi), bibundlise(&chi));
    let lhs = lift(vcomp_bi(
        &lift(whisker_right_bi(&lift(gamma(&phi, &psi))?, &bc))?,
        &lift(gamma(&psi.after(&phi), &chi))?,
    ))?;
    let bpq = t(&bp, &bq)?;
    let rhs = lift(vcomp_bi(
        &lift(vcomp_bi(&lift(associator(&bp, &bq, &bc))?, &lift(whisker_left_bi(&bp, &lift(gamma(&psi, &chi))?))?))?,
        &lift(gamma(&phi, &chi.after(&psi)))?,
    ))?;
    ensure(lhs.source() == &lift(tensor(&bpq, &bc))?, "γ coherence source")?;
    ensure(lhs == rhs, "γ associativity coherence")?;
    let g0 = phi.dom();
    let lhs = lift(vcomp_bi(&lift(whisker_right_bi(&iota(g0), &bp))?, &lift(gamma(&Functor::identity(g0), &phi))?))?;
    ensure(lhs == lift(unitor_left_bi(&bp))?, "γ ∘ (ι ⊗ id) ≠ λ")?;
    let g1 = phi.cod();
    let rhs = lift(vcomp_bi(&lift(whisker_left_bi(&bp, &iota(g1)))?, &lift(gamma(&phi, &Functor::identity(g1)))?))?;
    ensure(rhs == lift(unitor_right_bi(&bp))?, "γ ∘ (id ⊗ ι) ≠ ρ")
}

fn canonical_case(f: &mut Fuzzer) -> CaseResult {
    let (g, h) = (f.groupoid(TINY), f.groupoid(TINY));
    let a = f.anafunctor(&g, &h, APEX).expect("nonempty");
    let c = f.diagram_from(a.as_gm(), true, APEX);
    let t = lift(canonical_2cell(&c))?;
    lift(t.check())?;
    let back = transformation_to_diagram(&t);
    ensure(lift(two_cells_equal(&back, &c))?, "canonical 2-cell is not equivalent to its diagram")?;
    let c2 = f.remediate(&c, APEX);
    ensure(lift(two_cells_equal(&c, &c2))?, "remediated diagram is not equivalent")?;
    ensure(lift(canonical_2cell(&c2))? == t, "equivalent diagrams give different canonical 2-cells")
}

fn roundtrip_case(f: &mut Fuzzer) -> CaseResult {
    let (g, h) = (f.groupoid(TINY), f.groupoid(TINY));
    let sub = f.coin(0.5);
    let gm = f.gm(&g, &h, sub, APEX).expect("nonempty");
    let gb = lift(gm_to_bibundle(&gm))?;
    lift(gb.witness.check())?;
    let m = lift(twocell_to_biequiv(&gb.witness))?;
    ensure(m.is_bijective(), "span and its action anafunctor are not 2-isomorphic")?;
    let again = lift(bibundle_to_anafunctor(&gb.bibundle))?;
    ensure(again.anafunctor == gb.action.anafunctor, "action anafunctor is not deterministic")?;
    let iso = lift(bibundle_roundtrip_iso(&gb.bibundle))?;
    ensure(iso.is_bijective(), "bibundle round trip is not an isomorphism")?;
    let back = lift(gm_to_bibundle(gb.action.anafunctor.as_gm()))?;
    let m2 = lift(twocell_to_biequiv(&back.witness))?;
    ensure(m2.is_bijective() && back.bibundle.len() == gb.bibundle.len(), "second round trip changes size")
}

fn quasi_inverse_case(f: &mut Fuzzer) -> CaseResult {
    let b = if f.coin(0.5) {
        f.biprincipal_bibundle(TINY, 12)
    } else {
        let (g, h) = (f.groupoid(TINY), f.groupoid(TINY));
        f.right_principal_bibundle(&g, &h, 12).expect("nonempty")
    };
    let flags = check_principality(&b).flags;
    ensure(flags.right_principal, "generated bibundle is not right principal")?;
    match quasi_inverse_bi(&b) {
        Ok(q) => {
            ensure(flags.biprincipal(), "quasi-inverse of a non-biprincipal bibundle")?;
            lift(q.unit.check())?;
            lift(q.counit.check())?;
            ensure(q.unit.is_bijective() && q.counit.is_bijective(), "bibundle witnesses not bijective")?;
            bi_triangles(&b, &q)?;
        }
        Err(e) => ensure(!flags.biprincipal(), &format!("biprincipal bibundle without quasi-inverse: {e}"))?,
    }

    let gm = if f.coin(0.5) {
        let m = f.groupoid(Bounds::new(2, 4));
        f.morita_span(&m, 4)
    } else {
        let (g, h) = (f.groupoid(Bounds::new(2, 6)), f.groupoid(Bounds::new(2, 6)));
        let sub = f.coin(0.5);
        f.gm(&g, &h, sub, 8).expect("nonempty")
    };
    let we = is_weak_equivalence(gm.right());
    match quasi_inverse_gm(&gm) {
        Ok(q) => {
            ensure(we, "quasi-inverse of a span with a bad right leg")?;
            lift(q.unit.check())?;
            lift(q.counit.check())
        }
        Err(e) => ensure(!we, &format!("span with weak-equivalence leg not inverted: {e}")),
    }
}

/// Both zig-zag identities for the unit and counit of a bibundle quasi-inverse.
fn bi_triangles(b: &Bibundle, q: &BiQuasiInverse) -> CaseResult {
    let v = |x: &BiequivariantMap, y: &BiequivariantMap| lift(vcomp_bi(x, y));
    let bb = &q.inverse;
    let lhs = v(&v(&lift(associator(b, bb, b))?, &lift(whisker_left_bi(b, &q.counit))?)?, &lift(unitor_right_bi(b))?)?;
    let rhs = v(&lift(whisker_right_bi(&q.unit, b))?, &lift(unitor_left_bi(b))?)?;
    ensure(lhs.map() == rhs.map(), "first triangle identity fails")?;
    let lhs = v(&v(&lift(associator(bb, b, bb))?, &lift(whisker_left_bi(bb, &q.unit))?)?, &lift(unitor_right_bi(bb))?)?;
    let rhs = v(&lift(whisker_right_bi(&q.counit, bb))?, &lift(unitor_left_bi(bb))?)?;
    ensure(lhs.map() == rhs.map(), "second triangle identity fails")
}

/// Pairs of groupoids that are not Morita equivalent, with a short name.
pub fn morita_negatives() -> Vec<(&'static str, Arc<FiniteGroupoid>, Arc<FiniteGroupoid>)> {
    let a = |g: FiniteGroupoid| Arc::new(g);
    let bg = |g: FiniteGroup| group_groupoid(&g);
    let c2 = || FiniteGroup::cyclic(2);
    let v4 = || FiniteGroup::product(&c2(), &c2());
    let du = |x: FiniteGroupoid, y: FiniteGroupoid| disjoint_union(&[&x, &y]);
    vec![
        ("BC2 vs Pt", a(cyclic_groupoid(2)), a(point())),
        ("Disc(2) vs Disc(3)", a(discrete(2)), a(discrete(3))),
        ("BC2 vs BC3", a(cyclic_groupoid(2)), a(cyclic_groupoid(3))),
        ("BC4 vs BV4", a(cyclic_groupoid(4)), a(bg(v4()))),
        ("BC6 vs BS3", a(cyclic_groupoid(6)), a(bg(FiniteGroup::symmetric(3)))),
        ("Pair(2) vs Disc(2)", a(pair(2)), a(discrete(2))),
        ("Pair(3) vs BC3", a(pair(3)), a(cyclic_groupoid(3))),
        ("Pt vs empty", a(point()), a(FiniteGroupoid::empty())),
        ("Disc(1) vs Disc(2)", a(discrete(1)), a(discrete(2))),
        ("BC2 ⊔ Pt vs BC2 ⊔ BC2", a(du(cyclic_groupoid(2), point())), a(du(cyclic_groupoid(2), cyclic_groupoid(2)))),
        ("BC2 ⊔ Pt vs Pt ⊔ Pt", a(du(cyclic_groupoid(2), point())), a(discrete(2))),
        ("BC3 ⊔ BC2 vs BC3 ⊔ BC3", a(du(cyclic_groupoid(3), cyclic_groupoid(2))), a(du(cyclic_groupoid(3), cyclic_groupoid(3)))),
        ("Pair(2) × C2 vs Pair(2)", a(base_change_of(&bg(c2()), 2)), a(pair(2))),
        ("Pair(3) × C3 vs BC2", a(base_change_of(&cyclic_groupoid(3), 3)), a(cyclic_groupoid(2))),
        ("BC4 vs Pair(4)", a(cyclic_groupoid(4)), a(pair(4))),
        ("BV4 vs BC2 ⊔ BC2", a(bg(v4())), a(du(cyclic_groupoid(2), cyclic_groupoid(2)))),
        ("BS3 vs Pair(6)", a(bg(FiniteGroup::symmetric(3))), a(pair(6))),
        ("Disc(3) vs Pair(3)", a(discrete(3)), a(pair(3))),
        ("BC3 vs Pt", a(cyclic_groupoid(3)), a(point())),
        ("Pair(2) ⊔ BC2 vs BC2 ⊔ BC3", a(du(pair(2), cyclic_groupoid(2))), a(du(cyclic_groupoid(2), cyclic_groupoid(3)))),
    ]
}

fn base_change_of(g: &FiniteGroupoid, n: usize) -> FiniteGroupoid {
    let g = Arc::new(g.clone());
    let xs: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let (b, _) = base_change(&g, &xs, &vec![Obj(0); n]).expect("distinct labels");
    (*b).clone()
}

fn morita_case(f: &mut Fuzzer, i: usize) -> CaseResult {
    let b = f.biprincipal_bibundle(TINY, APEX);
    ensure(check_principality(&b).flags.biprincipal(), "generated bibundle is not biprincipal")?;
    let (g, h) = (b.source().clone(), b.target().clone());
    ensure(orbit_space(&g).len() == orbit_space(&h).len(), "orbit counts differ")?;
    ensure(is_fibrating(&g) == is_fibrating(&h), "fibration flags differ")?;
    let w = lift(are_morita_equivalent(&g, &h))?;
    let wb = w.bibundle().ok_or_else(|| format!("decision says {w} for a biprincipal pair"))?;
    ensure(wb.is_biprincipal(), "witness is not biprincipal")?;
    ensure(same_groupoid(wb.source(), &g) && same_groupoid(wb.target(), &h), "witness has the wrong ends")?;
    let (ig, ih) = (inertia_groupoid(&g), inertia_groupoid(&h));
    ensure(lift(are_morita_equivalent(&ig, &ih))?.is_equivalent(), "inertia groupoids are not Morita equivalent")?;

    let y = identity_bibundle(&h).left_action().clone();
    let moved = lift(transport_action(&b, &y))?;
    let back = lift(transport_action(&opposite(&b), &moved))?;
    ensure(find_action_isomorphism(&y, &back).is_some(), "transport round trip is not isomorphic")?;

    let negatives = morita_negatives();
    let (name, x, z) = &negatives[i % negatives.len()];
    let w = lift(are_morita_equivalent(x, z))?;
    ensure(!w.is_equivalent(), &format!("{name} decided equivalent"))
}

fn fractions_case(f: &mut Fuzzer) -> CaseResult {
    let gs: Vec<Arc<FiniteGroupoid>> = (0..3).map(|_| f.groupoid(Bounds::new(2, 4))).collect();
    let (s1, s2) = (f.coin(0.5), f.coin(0.5));
    let a = f.gm(&gs[0], &gs[1], s1, 6).expect("nonempty");
    let b = f.gm(&gs[1], &gs[2], s2, 6).expect("nonempty");
    let (t1, t2) = (f.coin(0.5), f.coin(0.5));
    let c1 = f.diagram_from(&a, t1, 6);
    let c2 = f.diagram_from(&b, t2, 6);
    let h1 = lift(hcomp_gm(&c1, &c2))?;
    let h2 = lift(hcomp_gm_alt(&c1, &c2))?;
    ensure(lift(two_cells_equal(&h1, &h2))?, "the two horizontal composites differ")?;
    let v = lift(vcomp_gm(&c1, &c1.inverse()))?;
    ensure(lift(two_cells_equal(&v, &identity_2cell(&a)))?, "c ∘ c⁻¹ is not the identity")?;
    let l = lift(unitor_left_gm(&a))?;
    lift(l.check())?;
    ensure(lift(twocell_to_biequiv(&l))?.is_bijective(), "left unitor is not invertible")
}

fn ana_case(f: &mut Fuzzer) -> CaseResult {
    let gs: Vec<Arc<FiniteGroupoid>> = (0..3).map(|_| f.groupoid(Bounds::new(2, 8))).collect();
    let a = f.anafunctor(&gs[0], &gs[1], 12).expect("nonempty");
    let b = f.anafunctor(&gs[1], &gs[2], 12).expect("nonempty");
    let s = lift(canonical_2cell(&f.diagram_from(a.as_gm(), true, 12)))?;
    let t = lift(canonical_2cell(&f.diagram_from(b.as_gm(), true, 12)))?;
    let h1 = lift(hcomp_ana(&s, &t))?;
    lift(h1.check())?;
    ensure(h1 == lift(hcomp_ana_alt(&s, &t))?, "the two horizontal composites differ")?;
    ensure(lift(vcomp_ana(&s, &s.inverse()))?.is_identity(), "s ∘ s⁻¹ is not the identity")?;
    let l = lift(unitor_left_ana(&a))?;
    lift(l.check())?;
    let r = lift(unitor_right_ana(&a))?;
    lift(r.check())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn case_seeds_differ() {
        assert_ne!(case_seed(7, 0), case_seed(7, 1));
        assert_ne!(case_seed(7, 0), case_seed(8, 0));
    }

    #[test]
    fn oracle_matches_known_cases() {
        let p2 = Arc::new(pair(2));
        let pt = Arc::new(point());
        assert!(weq_oracle(&Functor::constant(&p2, &pt, Obj(0))));
        assert!(!weq_oracle(&Functor::constant(&pt, &Arc::new(cyclic_groupoid(2)), Obj(0))));
        assert!(!weq_oracle(&Functor::constant(&pt, &Arc::new(discrete(2)), Obj(0))));
    }

    #[test]
    fn negatives_are_twenty() {
        assert_eq!(morita_negatives().len(), 20);
    }

    #[test]
    fn small_runs_pass() {
        for s in Suite::ALL {
            let r = run_suite(s, 1, 3);
            assert!(r.all_passed(), "{}: {}", s.name(), r.transcript());
        }
    }
}
