//! Exact invariants of projectivized rank-two vector bundles on the
//! projective plane, and verdicts for the equivalence relations they decide.
//!
//! The ring and form arithmetic in [`chow`], [`chern`], [`orbits`] and
//! [`cubic`] is generic over any [`Scalar`]; the aliases below fix the
//! coefficient type to `i64` (checked) or [`BigInt`]. The numerology,
//! classification and oracle layers work with the `i64` aliases.

#![forbid(unsafe_code)]

pub mod chern;
pub mod chow;
pub mod classify;
pub mod cli;
pub mod cubic;
pub mod error;
pub mod moduli;
pub mod oracles;
pub mod orbits;
pub mod ruled;
pub mod scalar;
pub mod verify;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type ChernPair = chern::ChernPair<i64>;
pub type MonadSpec = chern::MonadSpec<i64>;
pub type NormalForm = orbits::NormalForm<i64>;
pub type P2Class = chow::P2Class<i64>;
pub type PbRing = chow::PbRing<i64>;
pub type PbClass = chow::PbClass<i64>;
pub type BinaryCubicForm = cubic::BinaryCubicForm<i64>;
pub type UnimodularMatrix = cubic::UnimodularMatrix<i64>;

pub type BigChernPair = chern::ChernPair<BigInt>;
pub type BigP2Class = chow::P2Class<BigInt>;
pub type BigPbRing = chow::PbRing<BigInt>;
pub type BigPbClass = chow::PbClass<BigInt>;
pub type BigCubicForm = cubic::BinaryCubicForm<BigInt>;
