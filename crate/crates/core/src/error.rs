use std::fmt;

use thiserror::Error;

/// Kind of a single defect found while validating raw groupoid data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    DuplicateId,
    DanglingReference,
    AxiomViolation,
}

/// One defect in raw input, naming the axiom and the offending elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub axiom: String,
    pub elements: Vec<String>,
}

impl Violation {
    pub fn new(kind: ViolationKind, axiom: impl Into<String>, elements: Vec<String>) -> Self {
        Violation { kind, axiom: axiom.into(), elements }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::DuplicateId => "DuplicateId",
            ViolationKind::DanglingReference => "DanglingReference",
            ViolationKind::AxiomViolation => "AxiomViolation",
        };
        write!(f, "{kind}({}) at [{}]", self.axiom, self.elements.join(", "))
    }
}

fn join(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GpdError {
    #[error("invalid groupoid: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("not a natural transformation: {0}")]
    NotNatural(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("not fully faithful: {0}")]
    NotFullyFaithful(String),
    #[error("not a subductive weak equivalence: {0}")]
    NotSubductive(String),
    #[error("not a weak equivalence: {0}")]
    NotWeakEquivalence(String),
    #[error("right leg is not a weak equivalence: {0}")]
    RightLegNotWeakEquivalence(String),
    #[error("not an anafunctor: {0}")]
    NotAnafunctor(String),
    #[error("action axiom violated: {0}")]
    ActionAxiomViolation(String),
    #[error("bibundle is not right principal: {0}")]
    NotRightPrincipal(String),
    #[error("bibundle is not biprincipal: {0}")]
    NotBiprincipal(String),
    #[error("map is not bijective: {0}")]
    NotBijective(String),
    #[error("map is not bi-equivariant: {0}")]
    NotEquivariant(String),
    #[error("size cap exceeded while building {what}: {size} > {cap}")]
    SizeCapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("group of order {order} exceeds the isomorphism search cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("group is not abelian")]
    GroupNotAbelian,
    #[error("charts do not cover the base: {0}")]
    NotCovering(String),
    #[error("well-definedness check failed: {0}")]
    InvariantBroken(String),
}

pub type Result<T> = std::result::Result<T, GpdError>;
