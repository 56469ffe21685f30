//! Helpers on exact rationals: construction, p-adic valuations, unit parts,
//! exact square roots.

use super::{Int, Rat};
use num::{One, Signed, Zero};
use num_integer::Integer;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0);
    Rat::new(Int::from(n), Int::from(d))
}

/// p-adic valuation of a nonzero integer.
pub fn val_int(n: &Int, p: &Int) -> i64 {
    assert!(!n.is_zero());
    let mut v = 0i64;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return v;
        }
    }
}

/// p-adic valuation of a nonzero rational.
pub fn val_rat(x: &Rat, p: &Int) -> i64 {
    assert!(!x.is_zero());
    val_int(x.numer(), p) - val_int(x.denom(), p)
}

/// Strip all factors of p: returns (v, u) with x = p^v · u and u a p-unit.
pub fn unit_part(x: &Rat, p: &Int) -> (i64, Rat) {
    let v = val_rat(x, p);
    let pw = pow_rat(p, v);
    (v, x / pw)
}

/// p^e as a rational, e may be negative.
pub fn pow_rat(p: &Int, e: i64) -> Rat {
    let a = p.pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rat::from_integer(a)
    } else {
        Rat::new(Int::one(), a)
    }
}

/// Exact integer square root via Newton; returns None if not a perfect square.
pub fn sqrt_int(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(Int::zero());
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root, if one exists.
pub fn sqrt_rat(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    Some(Rat::new(sqrt_int(x.numer())?, sqrt_int(x.denom())?))
}

pub fn is_square_rat(x: &Rat) -> bool {
    sqrt_rat(x).is_some()
}

/// Modular inverse of a mod m (m > 1, gcd(a, m) = 1).
pub fn mod_inv(a: &Int, m: &Int) -> Int {
    let a = a.mod_floor(m);
    let e = Int::extended_gcd(&a, m);
    assert!(e.gcd.is_one(), "mod_inv of non-unit");
    e.x.mod_floor(m)
}

/// a^e mod m for e ≥ 0.
pub fn pow_mod(a: &Int, e: &Int, m: &Int) -> Int {
    a.modpow(e, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        let p = int(3);
        assert_eq!(val_rat(&rat(18, 5), &p), 2);
        assert_eq!(val_rat(&rat(5, 27), &p), -3);
        let (v, u) = unit_part(&rat(18, 5), &p);
        assert_eq!(v, 2);
        assert_eq!(u, rat(2, 5));
    }

    #[test]
    fn exact_sqrts() {
        assert_eq!(sqrt_rat(&rat(49, 64)), Some(rat(7, 8)));
        assert_eq!(sqrt_rat(&rat(50, 64)), None);
        assert_eq!(sqrt_rat(&rat(-4, 1)), None);
    }

    #[test]
    fn mod_inverse() {
        let p = int(101);
        for a in [1i64, 2, 57, 100] {
            let inv = mod_inv(&int(a), &p);
            assert_eq!((int(a) * inv).mod_floor(&p), int(1));
        }
    }
}
