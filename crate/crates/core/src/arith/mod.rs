//! Exact scalar arithmetic: big rationals, the quadratic layer ℚ(√m),
//! integer factorization, Hilbert symbols, and p-adic approximations with
//! a square-root tower for odd residue characteristic.

pub mod factor;
pub mod ff;
pub mod hilbert;
pub mod padic;
pub mod quad;
pub mod rational;
pub mod tower;

pub type Int = num::BigInt;
pub type Rat = num::BigRational;

/// Starting relative precision (p-adic digits) for odd primes.
pub const START_PREC_ODD: u32 = 32;
/// Starting relative precision at p = 2.
pub const START_PREC_2: u32 = 64;
/// Hard precision cap; hitting it is a hard error.
pub const MAX_PREC: u32 = 4096;
