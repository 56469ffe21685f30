//! Exact local arithmetic for genus-2 curves `y² = c·r(x)·s(x)·t(x)` carrying a
//! C2D4 structure: `r` rational, `s`, `t` monic quadratics over `ℚ(√m)` that the
//! conjugation swaps (or two independent rational quadratics when `m = 1`).
//!
//! The crate computes the invariant set of such a curve, its Richelot-dual
//! curve, cluster pictures at odd primes with Frobenius and twin-sign data,
//! local invariants (Tamagawa numbers, deficiency, root number, the local
//! term λ and the Hilbert-symbol error term E) at every bad place, and the
//! resulting global products. Everything is exact: big rationals, a quadratic
//! extension layer, and interval-free p-adic approximations whose precision
//! escalates until every decision is certified.

pub mod arith;
pub mod clusters;
pub mod model;
pub mod richelot;

pub use arith::{
    hilbert::{hilbert_symbol, Place},
    quad::Quad,
    Int, Rat,
};

/// Crate-wide failure modes; everything that is *expected* for some inputs
/// (unsupported reduction, degenerate invariants) is an `Err` here, while
/// partial results that can be reported stay inside the result types.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate invariants: {0}")]
    Degenerate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("p-adic precision exhausted (cap {0} digits): {1}")]
    Precision(u32, String),
}

pub type Result<T> = std::result::Result<T, Error>;
