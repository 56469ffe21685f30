//! Hilbert symbols (a, b)_v over ℚ at the real place, at 2, and at odd
//! primes, plus square-class helpers shared with the local tables.

use super::rational::{pow_mod, unit_part, val_rat};
use super::{Int, Rat};
use num::{Integer, One, Signed, Zero};
use serde::Serialize;
use std::fmt;

/// A place of ℚ. `Finite` carries a prime (2 allowed).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "String")]
pub enum Place {
    Real,
    Finite(Int),
}

impl Place {
    pub fn odd(&self) -> Option<&Int> {
        match self {
            Place::Finite(p) if p != &Int::from(2) => Some(p),
            _ => None,
        }
    }

    pub fn is_two(&self) -> bool {
        matches!(self, Place::Finite(p) if p == &Int::from(2))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Place> for String {
    fn from(p: Place) -> String {
        p.to_string()
    }
}

/// Legendre symbol (u | p) for a p-unit u and odd prime p.
pub fn legendre(u: &Int, p: &Int) -> i8 {
    let e = (p - Int::one()) >> 1;
    let r = pow_mod(&u.mod_floor(p), &e, p);
    if r.is_one() {
        1
    } else if r == p - Int::one() {
        -1
    } else {
        panic!("legendre of non-unit {u} mod {p}")
    }
}

/// Legendre symbol of a p-unit rational.
pub fn legendre_rat(u: &Rat, p: &Int) -> i8 {
    debug_assert_eq!(val_rat(u, p), 0);
    let n = legendre(u.numer(), p);
    let d = legendre(u.denom(), p);
    n * d
}

/// Square class of x ∈ ℚ_p^× for odd p as (valuation parity, unit-part class).
/// `unit_square` is the Legendre symbol of the unit part.
pub fn square_class_odd(x: &Rat, p: &Int) -> (bool, i8) {
    let (v, u) = unit_part(x, p);
    (v.rem_euclid(2) == 1, legendre_rat(&u, p))
}

/// Is x a square in ℚ_p^× (p odd)?
pub fn is_square_odd(x: &Rat, p: &Int) -> bool {
    square_class_odd(x, p) == (false, 1)
}

/// Square class of x ∈ ℚ_2^×: (valuation mod 2, odd part mod 8).
pub fn square_class_2(x: &Rat) -> (bool, u8) {
    let two = Int::from(2);
    let (v, u) = unit_part(x, &two);
    let eight = Int::from(8);
    let num8 = u.numer().mod_floor(&eight);
    let den8 = u.denom().mod_floor(&eight);
    // odd residues mod 8 form the Klein group; division = multiplication
    let m = (num8 * super::rational::mod_inv(&den8, &eight)).mod_floor(&eight);
    (v.rem_euclid(2) == 1, u8::try_from(m).unwrap())
}

pub fn is_square_2(x: &Rat) -> bool {
    square_class_2(x) == (false, 1)
}

/// Is x a square in ℚ_v^×?
pub fn is_square_at(x: &Rat, place: &Place) -> bool {
    match place {
        Place::Real => x.is_positive(),
        Place::Finite(p) => {
            if p == &Int::from(2) {
                is_square_2(x)
            } else {
                is_square_odd(x, p)
            }
        }
    }
}

fn hilbert_real(a: &Rat, b: &Rat) -> i8 {
    if a.is_negative() && b.is_negative() {
        -1
    } else {
        1
    }
}

fn hilbert_odd(a: &Rat, b: &Rat, p: &Int) -> i8 {
    let (alpha, u) = unit_part(a, p);
    let (beta, v) = unit_part(b, p);
    let mut res = 1i8;
    if beta.rem_euclid(2) == 1 {
        res *= legendre_rat(&u, p);
    }
    if alpha.rem_euclid(2) == 1 {
        res *= legendre_rat(&v, p);
    }
    // (−1 | p) correction when both valuations are odd
    if alpha.rem_euclid(2) == 1 && beta.rem_euclid(2) == 1 {
        res *= legendre(&(p - Int::one()), p);
    }
    res
}

fn eps2(u: &Rat) -> u8 {
    // (u−1)/2 mod 2 for the odd rational u, i.e. u ≡ ±1 mod 4
    let four = Int::from(4);
    let n = u.numer().mod_floor(&four);
    let d = u.denom().mod_floor(&four);
    let m = (n * super::rational::mod_inv(&d, &four)).mod_floor(&four);
    u8::from(m == Int::from(3))
}

fn omega2(u: &Rat) -> u8 {
    // (u²−1)/8 mod 2, i.e. u ≡ ±1 mod 8 ↦ 0, u ≡ ±3 ↦ 1
    let (_, m8) = square_class_2(u);
    u8::from(m8 == 3 || m8 == 5)
}

fn hilbert_two(a: &Rat, b: &Rat) -> i8 {
    let two = Int::from(2);
    let (alpha, u) = unit_part(a, &two);
    let (beta, v) = unit_part(b, &two);
    let e = eps2(&u) * eps2(&v)
        + (alpha.rem_euclid(2) as u8) * omega2(&v)
        + (beta.rem_euclid(2) as u8) * omega2(&u);
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Hilbert symbol (a, b)_v for nonzero rationals.
pub fn hilbert_symbol(a: &Rat, b: &Rat, place: &Place) -> i8 {
    assert!(!a.is_zero() && !b.is_zero(), "hilbert symbol of zero");
    match place {
        Place::Real => hilbert_real(a, b),
        Place::Finite(p) => {
            if p == &Int::from(2) {
                hilbert_two(a, b)
            } else {
                hilbert_odd(a, b, p)
            }
        }
    }
}

/// All places where (a, b)_v could be nontrivial: real, 2, and odd primes
/// dividing a numerator or denominator.
pub fn relevant_places(vals: &[&Rat]) -> Vec<Place> {
    let mut primes = std::collections::BTreeSet::new();
    primes.insert(Int::from(2));
    for x in vals {
        for n in [x.numer(), x.denom()] {
            for p in super::factor::factor(n).keys() {
                primes.insert(p.clone());
            }
        }
    }
    let mut out = vec![Place::Real];
    out.extend(primes.into_iter().map(Place::Finite));
    out
}

/// Product of (a,b)_v over every place; must be 1 by reciprocity, and the
/// test suite leans on that.
pub fn hilbert_product(a: &Rat, b: &Rat) -> i8 {
    relevant_places(&[a, b])
        .iter()
        .map(|v| hilbert_symbol(a, b, v))
        .product()
}
