use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("malformed scalar `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left} vs {right}")]
    ShapeMismatch {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("map is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("map is singular: rank {rank} of {dim}")]
    Singular { rank: usize, dim: usize },
    #[error("index ({row}, {col}) out of bounds for a {rows}x{cols} map")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("element {element} violates the inverse identity: {detail}")]
    InverseViolation { element: usize, detail: String },
    #[error("non-associative structures need both antipodes supplied explicitly")]
    AntipodesRequired,
    #[error("{what} requires associative structures")]
    NotAssociative { what: String },
    #[error("{what} requires Hopf structures")]
    NotHopf { what: String },
    #[error("{what} failed verification:\n{report}")]
    VerificationFailed { what: String, report: Report },
    #[error(
        "HKer(α) ≠ LKer(α): dim HKer = {hker}, dim LKer = {lker}, dim RKer = {rker}, LKer = RKer: {lker_equals_rker}"
    )]
    KernelHypothesis {
        hker: usize,
        lker: usize,
        rker: usize,
        lker_equals_rker: bool,
    },
    #[error("{what} does not factor through the given subspace")]
    Factorization { what: String },
    #[error("no split extension possible: φ = m·(κ⊗e) has rank {rank} of {dim}")]
    NoSplitExtension { rank: usize, dim: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("catalog entry `{name}` is not defined in characteristic {characteristic}")]
    Characteristic { name: String, characteristic: u32 },
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
