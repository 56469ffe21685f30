//! Scalar p-adic utilities: embedding exact rationals as (valuation, unit
//! mod p^N) pairs and Hensel square roots, including the 2-adic case used by
//! the good-ordinary detector.

use super::ff::sqrt_mod_p;
use super::rational::{mod_inv, unit_part, val_int};
use super::{Int, Rat};
use num::{Integer, One, Zero};

/// p^n for moduli.
pub fn pk(p: &Int, n: u32) -> Int {
    p.pow(n)
}

/// x = p^val · unit with the unit reduced mod p^n; None for x = 0.
pub fn embed_rat(x: &Rat, p: &Int, n: u32) -> Option<(i64, Int)> {
    if x.is_zero() {
        return None;
    }
    let (v, u) = unit_part(x, p);
    let m = pk(p, n);
    let unit = (u.numer().mod_floor(&m) * mod_inv(u.denom(), &m)).mod_floor(&m);
    Some((v, unit))
}

/// Hensel square root of a unit mod p^n for odd p; canonical (lex-least of
/// the pair). None if the residue is a non-square.
pub fn sqrt_unit_odd(u: &Int, p: &Int, n: u32) -> Option<Int> {
    debug_assert!(p.is_odd());
    let r0 = sqrt_mod_p(&u.mod_floor(p), p)?;
    if r0.is_zero() {
        return None; // not a unit
    }
    let mut x = r0;
    let mut k = 1u32;
    while k < n {
        k = (2 * k).min(n);
        let m = pk(p, k);
        let inv2x = mod_inv(&(&x + &x), &m);
        let fx = (&x * &x - u).mod_floor(&m);
        x = (&x - fx * inv2x).mod_floor(&m);
    }
    let m = pk(p, n);
    let neg = (-&x).mod_floor(&m);
    Some(if x <= neg { x } else { neg })
}

/// Hensel square root of an odd unit mod 2^n (needs u ≡ 1 mod 8); canonical
/// root is the one ≡ 1 mod 4.
pub fn sqrt_unit_2(u: &Int, n: u32) -> Option<Int> {
    let eight = Int::from(8);
    if u.mod_floor(&eight) != Int::one() {
        return None;
    }
    let mut x = Int::one();
    let mut k = 3u32; // x² ≡ u mod 2^3
    while k < n + 1 {
        // one Newton step roughly doubles the exponent; the division by 2x
        // is exact at the level below
        let knext = (2 * (k - 1)).min(n + 1);
        let m = pk(&Int::from(2), knext);
        let fx = (&x * &x - u).mod_floor(&m);
        // fx is divisible by 2^k ≥ 8; x odd, so (2x)^{-1} exists mod 2^{knext-1}
        let half: Int = fx >> 1u32;
        let minv = pk(&Int::from(2), knext - 1);
        let xinv = mod_inv(&x, &minv);
        x = (&x - (half * xinv).mod_floor(&minv)).mod_floor(&m);
        if k == knext {
            break;
        }
        k = knext;
    }
    let m = pk(&Int::from(2), n);
    x = x.mod_floor(&m);
    let four = Int::from(4);
    if x.mod_floor(&four) != Int::one() {
        x = (-&x).mod_floor(&m);
    }
    Some(x)
}

/// Square root of x in ℚ_p (p odd) as (valuation/2, unit root mod p^n);
/// None if x is not a square in ℚ_p.
pub fn sqrt_qp_odd(x: &Rat, p: &Int, n: u32) -> Option<(i64, Int)> {
    let (v, u) = embed_rat(x, p, n)?;
    if v.rem_euclid(2) == 1 {
        return None;
    }
    Some((v / 2, sqrt_unit_odd(&u, p, n)?))
}

/// Square root of x in ℚ_2 as (valuation/2, unit root mod 2^n).
pub fn sqrt_q2(x: &Rat, n: u32) -> Option<(i64, Int)> {
    let two = Int::from(2);
    let (v, u) = embed_rat(x, &two, n + 3)?;
    if v.rem_euclid(2) == 1 {
        return None;
    }
    Some((v / 2, sqrt_unit_2(&u, n)?))
}

/// v_2 of an integer ≠ 0 (convenience for the 2-adic module).
pub fn v2(n: &Int) -> i64 {
    val_int(n, &Int::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rat_int};

    #[test]
    fn embed() {
        let p = Int::from(5);
        let (v, u) = embed_rat(&rat(50, 3), &p, 4).unwrap();
        assert_eq!(v, 2);
        // 2/3 mod 625: 3·417 = 1251 ≡ 1
        assert_eq!((Int::from(3) * &u).mod_floor(&pk(&p, 4)), Int::from(2));
        assert_eq!(embed_rat(&Rat::zero(), &p, 4), None);
    }

    #[test]
    fn odd_sqrt_roundtrip() {
        let p = Int::from(13);
        for a in [1i64, 3, 4, 9, 10, 12] {
            let sq = Int::from(a * a);
            let r = sqrt_unit_odd(&sq, &p, 6).unwrap();
            let m = pk(&p, 6);
            assert_eq!((&r * &r).mod_floor(&m), sq.mod_floor(&m));
        }
        assert!(sqrt_unit_odd(&Int::from(2), &Int::from(13), 6).is_none());
    }

    #[test]
    fn two_adic_sqrt() {
        for a in [1i64, 9, 17, 25, 49, 89] {
            let r = sqrt_unit_2(&Int::from(a), 20).unwrap();
            let m = pk(&Int::from(2), 20);
            assert_eq!((&r * &r).mod_floor(&m), Int::from(a).mod_floor(&m));
            assert_eq!(r.mod_floor(&Int::from(4)), Int::one());
        }
        assert!(sqrt_unit_2(&Int::from(3), 10).is_none());
        assert!(sqrt_unit_2(&Int::from(5), 10).is_none());
        // 25 = 5²: root mod 2^20 should be ±5 (canonical 5 ≡ 1 mod 4)
        assert_eq!(sqrt_unit_2(&Int::from(25), 20), Some(Int::from(5)));
    }

    #[test]
    fn q2_sqrt() {
        // 4/9 is a 2-adic square
        let (v, u) = sqrt_q2(&rat(4, 9), 10).unwrap();
        assert_eq!(v, 1);
        let m = pk(&Int::from(2), 10);
        // canonical root of 1/9 is −1/3 (≡ 1 mod 4), so 3u ≡ −1
        assert_eq!((Int::from(3) * &u).mod_floor(&m), &m - Int::one());
        assert_eq!(u.mod_floor(&Int::from(4)), Int::one());
        assert!(sqrt_q2(&rat_int(2), 10).is_none());
    }
}
