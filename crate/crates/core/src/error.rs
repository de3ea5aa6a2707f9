use alloc::string::String;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("a composition must have at least one part")]
    Empty,
    #[error("part {index} is zero; parts must be positive")]
    ZeroPart { index: usize },
    #[error("invalid part {0:?}; expected a positive decimal integer")]
    BadToken(String),
    #[error("parts are not weakly decreasing")]
    NotPartition,
    #[error("the near-concatenation power must be at least 1")]
    ZeroExponent,
    #[error("operands are equal; the comparison is only defined for distinct compositions")]
    EqualOperands,
    #[error("cannot enumerate compositions of {n} with parts >= {min_part}")]
    BadEnumeration { n: u32, min_part: u32 },
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    NoVertices,
    #[error("expected {expected} edges for {vertices} vertices, found {found}")]
    EdgeCount {
        vertices: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {u}-{v} references a vertex outside 0..{vertices}")]
    VertexOutOfRange { u: u32, v: u32, vertices: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("edge {0}-{1} closes a cycle")]
    Cycle(u32, u32),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {edges} edges; brute-force enumeration is capped at {cap} (cost 2^edges)")]
    TooManyEdges { edges: usize, cap: usize },
    #[error("free-tree enumeration is capped at {cap} vertices, requested {requested}")]
    OrderTooLarge { requested: u32, cap: u32 },
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CaterpillarError {
    #[error("not a caterpillar: {0}")]
    NotCaterpillar(&'static str),
    #[error("caterpillar is not proper: spine vertex {0} has no leaf")]
    Improper(usize),
    #[error("composition {0} has a part equal to 1; only compositions with all parts >= 2 correspond to proper caterpillars")]
    PartOne(String),
    #[error("composition {0} has a single part; a caterpillar spine needs at least two vertices")]
    SinglePart(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("gamma = {0} is a palindrome")]
    PalindromicGamma(String),
    #[error("alpha and beta are equal")]
    EqualAlphaBeta,
    #[error("alpha and beta have different sizes ({0} and {1})")]
    SizeMismatch(u32, u32),
    #[error("{name} = {value} is not proper (a part equals 1), so its caterpillar is undefined")]
    ImproperProduct { name: &'static str, value: String },
    #[error("gamma = {0} is not lexicographically below its reverse; normalize the triple first")]
    GammaNotNormalized(String),
    #[error("alpha = {0} is not lexicographically below beta = {1}; normalize the triple first")]
    AlphaBetaNotNormalized(String, String),
    #[error("coefficient check failed: {0}")]
    CoefficientMismatch(String),
}
