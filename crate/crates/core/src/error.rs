use thiserror::Error;

/// Violations of the bisequence axioms, or malformed text encodings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BisequenceError {
    #[error("a bisequence needs at least one part")]
    NoParts,
    #[error("part {index} is empty")]
    EmptyPart { index: usize },
    #[error("element {element} is outside the ground set 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("element {element} appears in no part")]
    ElementMissing { element: usize },
    #[error("element {element} appears in more than two parts")]
    ElementTriple { element: usize },
    #[error("every element appears in two parts; at least one must appear exactly once")]
    NoSingleOccurrence,
    #[error("a bipermutation of [{n}] has {expected} letters, got {got}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Errors raised by exact polynomial and series routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialError {
    #[error("f-vector has {got} entries but dimension {d} needs {expected}")]
    LengthMismatch { d: usize, expected: usize, got: usize },
    #[error("series truncation left a nonzero coefficient {value} at degree {degree}")]
    TruncationResidue { degree: usize, value: String },
    #[error("value {value} at {at} is not an integer")]
    NonIntegral { at: usize, value: String },
}

/// Failures of the sweep-hyperplane orientation check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("sweep functional ties on the edge {from} -- {to}")]
    NonGenericSweep { from: String, to: String },
}

/// Point location in the product of triangles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("point is not in the product of triangles: {0}")]
    NotInProduct(String),
    #[error("point projects onto a wall of the fan (bisequence {0}); resample")]
    TieOnBoundary(String),
    #[error("negative coefficient {value} for {vertex} in the simplex of {bipermutation}")]
    NegativeCoefficient { bipermutation: String, vertex: String, value: String },
    #[error("barycentric reconstruction failed for the simplex of {0}")]
    Reconstruction(String),
}

/// Problems with walls and wall-crossing inequalities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WallError {
    #[error("bisequence {bisequence} has {parts} parts; walls of the fan for n = {n} have {expected}")]
    NotAWall { bisequence: String, n: usize, parts: usize, expected: usize },
    #[error("wall {0} has the wrong kind for this inequality family")]
    KindMismatch(String),
    #[error("wall {wall}: {reason}")]
    DependenceNotUnique { wall: String, reason: String },
}

/// Errors from the Minkowski quotient computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("no positive multiple of Q is a summand: wall {wall} has I(Q) = {iq} > 0 but I(P) = {ip} < 0")]
    NotSummand { wall: String, ip: String, iq: String },
    #[error("P is not nef: wall {wall} has I(P) = {ip} < 0")]
    NotNef { wall: String, ip: String },
    #[error("no wall constrains the quotient (I(Q) <= 0 on every wall)")]
    Unbounded,
}

/// Malformed support-function input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SupportError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: {pair} is not a bisubset of [{n}]")]
    NotABisubset { line: usize, pair: String, n: usize },
    #[error("line {line}: duplicate value for {pair}")]
    Duplicate { line: usize, pair: String },
    #[error("no value given for bisubset {0}")]
    Missing(String),
}
