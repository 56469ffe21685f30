//! Integer factorization sized for invariant numerators: trial division,
//! deterministic Miller–Rabin, and Brent's variant of Pollard rho with a
//! fixed parameter schedule so runs are reproducible.

use super::rational::pow_mod;
use super::Int;
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeMap;

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller–Rabin; the witness set is proven complete below
/// 3.3·10^24, far above anything the invariant pipeline produces.
pub fn is_prime(n: &Int) -> bool {
    let two = Int::from(2);
    if n < &two {
        return false;
    }
    for w in MR_WITNESSES {
        if *n == Int::from(w) {
            return true;
        }
        if (n % Int::from(w)).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - Int::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for w in MR_WITNESSES {
        let mut x = pow_mod(&Int::from(w), &d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &Int) -> Int {
    // Fixed (c, x0) schedule; n is odd, composite, and not a prime power of 2.
    for c in 1u64..64 {
        let c = Int::from(c);
        let mut x = Int::from(2);
        let mut y = x.clone();
        let mut d = Int::one();
        let f = |z: &Int| ((z * z) + &c) % n;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = (&x - &y).abs();
            if diff.is_zero() {
                break; // cycle without factor; try next c
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
    }
    panic!("pollard rho parameter schedule exhausted on {n}");
}

fn factor_into(n: Int, out: &mut BTreeMap<Int, u32>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent(&n);
    factor_into(d.clone(), out);
    factor_into(n / d, out);
}

/// Prime factorization of |n| for n ≠ 0 (unit sign discarded).
pub fn factor(n: &Int) -> BTreeMap<Int, u32> {
    assert!(!n.is_zero(), "factoring zero");
    let mut n = n.abs();
    let mut out = BTreeMap::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let p = Int::from(p);
        while (&n % &p).is_zero() {
            n /= &p;
            *out.entry(p.clone()).or_insert(0) += 1;
        }
    }
    factor_into(n, &mut out);
    out
}

/// Is |n| squarefree?
pub fn is_squarefree(n: &Int) -> bool {
    factor(n).values().all(|&e| e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(&Int::from(2)));
        assert!(is_prime(&Int::from(104729)));
        assert!(is_prime(&Int::from(1_000_000_007u64)));
        assert!(!is_prime(&Int::from(1)));
        assert!(!is_prime(&Int::from(561))); // Carmichael
        assert!(!is_prime(&Int::from(1_000_000_007u64 * 3)));
    }

    #[test]
    fn factors_multiply_back() {
        for n in [2u64 * 3 * 3 * 2549, 1_000_000_007, 84, 7056, 462000] {
            let n = Int::from(n);
            let f = factor(&n);
            let mut prod = Int::one();
            for (p, e) in &f {
                assert!(is_prime(p));
                prod *= p.pow(*e);
            }
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(&Int::from(30)));
        assert!(!is_squarefree(&Int::from(12)));
    }
}
