pub mod curve;
pub mod error_term;
pub mod invariants;
pub mod mobius;
pub mod parse;

pub use curve::{C2D4Curve, MonicQuad};
