//! Exact computation with the fundamental root systems of basic classical
//! Lie superalgebras.
//!
//! The crate enumerates the finite set of fundamental systems attached to a
//! fixed Cartan subalgebra, realizes even and odd reflections as an exact
//! permutation action on that set, and derives from it the Coxeter matrix of
//! the super Weyl group together with the defining-sequence codec for the
//! `gl` and `spo` families.
//!
//! Everything is exact: coordinates are arbitrary-precision rationals and the
//! `D(2,1;a)` family is handled with a generic formal parameter by default.

pub mod catalog;
pub mod coxeter;
pub mod defseq;
pub mod enumerator;
pub mod permgroup;
pub mod reflection;
pub mod rootspace;
pub mod verify;

pub use catalog::{build_catalog, parse_spec, AlgebraCatalog, AlgebraSpec, Family};
pub use coxeter::{coxeter_matrix, emit_dot, expected_graph, CoxeterGraph, CoxeterMatrix};
pub use defseq::{decode, encode, sequence_action, DefiningSequence};
pub use enumerator::{enumerate_borels, enumerate_borels_oracle, expected_count, BorelSet};
pub use permgroup::{
    build_generator_table, check_relations, element_order, evaluate_word, group_order,
    GeneratorTable, GroupOrderResult, Permutation,
};
pub use reflection::{apply_generator, even_reflect_vector, FundamentalSystem, SuperReflection};
pub use rootspace::{pairing, is_isotropic, GramForm, Rational, RootVector, Scalar};

use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse algebra spec {0:?}")]
    ParseSpec(String),
    #[error("invalid rank for {family}: {reason}")]
    InvalidRank { family: String, reason: String },
    #[error("spo(2m|1) has no isotropic roots; its super Weyl group coincides with the ordinary Weyl group")]
    NoIsotropicRoots,
    #[error("parameter alpha must avoid 0 and -1, got {0}")]
    BadAlpha(String),
    #[error("enumeration would exceed {limit} systems (expected {expected})")]
    TooLarge { expected: u128, limit: u128 },
    #[error("ordered system violates the telescoping shape: {0}")]
    ShapeViolation(String),
    #[error("sequence corresponds to no enumerated fundamental system")]
    UnknownSequence,
    #[error("defining sequences are not defined for {0}")]
    NoSequenceCodec(String),
    #[error("unknown generator label {0:?}")]
    UnknownLabel(String),
    #[error("cannot parse relation {0:?}")]
    ParseRelation(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
