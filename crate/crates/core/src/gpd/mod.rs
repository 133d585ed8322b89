//! Finite groupoids, functors, natural transformations, pullbacks and weak equivalences.

mod constructors;
mod functor;
mod group;
mod groupoid;
mod pullback;
mod weq;

pub use constructors::*;
pub use functor::{same_groupoid, Functor, NaturalTransformation};
pub use group::FiniteGroup;
pub(crate) use groupoid::{assemble, tuple_label};
pub use groupoid::{validate_groupoid, Arr, ArrowDecl, FiniteGroupoid, GroupoidData, Obj};
pub use pullback::{
    base_change, base_change_comparison, set_size_cap, size_cap, strict_into_weak, strict_pullback,
    strict_pullback_with_cap, weak_pullback, weak_pullback_mediator, weak_pullback_with_cap, StrictPullback,
    WeakPullback, DEFAULT_SIZE_CAP,
};
pub(crate) use pullback::enforce_cap;
pub use weq::{
    check_subductive_weak_equivalence, check_weak_equivalence, coff_factor, ff_inverse, is_weak_equivalence,
    rep_ff_factor, subductive_ff_inverse, FfInverse, FfViolation, WeakEquivalenceReport,
};
