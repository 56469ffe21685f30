//! Residue-field towers 𝔽_p ⊂ 𝔽_{p²} ⊂ 𝔽_{p⁴} for odd p, represented by
//! iterated square-root adjunctions mirroring the p-adic ladder. Elements are
//! coordinate vectors of length 2^level; gen i squares to a level-i element.

use super::rational::mod_inv;
use super::Int;
use num::{Integer, One, Signed, Zero};

#[derive(Clone)]
pub struct FfCtx {
    pub p: Int,
    /// squares of the adjoined generators, gensq[i] has 2^i coordinates
    pub gensq: Vec<Vec<Int>>,
}

pub type FfElem = Vec<Int>;

impl FfCtx {
    pub fn new(p: Int) -> Self {
        assert!(p.is_odd() && p > Int::from(2), "residue tower needs odd p");
        FfCtx { p, gensq: vec![] }
    }

    pub fn level(&self) -> usize {
        self.gensq.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.level()
    }

    /// field size at a given level
    pub fn order(&self, level: usize) -> Int {
        let mut q = self.p.clone();
        for _ in 0..level {
            q = &q * &q;
        }
        q
    }

    pub fn scalar(&self, n: &Int, len: usize) -> FfElem {
        let mut v = vec![Int::zero(); len];
        v[0] = n.mod_floor(&self.p);
        v
    }

    pub fn zero(&self, len: usize) -> FfElem {
        vec![Int::zero(); len]
    }

    pub fn pad(&self, a: &FfElem, len: usize) -> FfElem {
        assert!(a.len() <= len);
        let mut v = a.clone();
        v.resize(len, Int::zero());
        v
    }

    pub fn is_zero(&self, a: &FfElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &FfElem, b: &FfElem) -> FfElem {
        let len = a.len().max(b.len());
        let (a, b) = (self.pad(a, len), self.pad(b, len));
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x + y).mod_floor(&self.p))
            .collect()
    }

    pub fn neg(&self, a: &FfElem) -> FfElem {
        a.iter().map(|x| (-x).mod_floor(&self.p)).collect()
    }

    pub fn sub(&self, a: &FfElem, b: &FfElem) -> FfElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FfElem, b: &FfElem) -> FfElem {
        let len = a.len().max(b.len());
        let (a, b) = (self.pad(a, len), self.pad(b, len));
        self.mul_level(&a, &b)
    }

    fn mul_level(&self, a: &[Int], b: &[Int]) -> FfElem {
        let len = a.len();
        if len == 1 {
            return vec![(&a[0] * &b[0]).mod_floor(&self.p)];
        }
        let h = len / 2;
        let level = len.trailing_zeros() as usize; // number of gens in play
        let g = self.pad(&self.gensq[level - 1], h);
        let (a0, a1) = a.split_at(h);
        let (b0, b1) = b.split_at(h);
        let p00 = self.mul_level(a0, b0);
        let p11 = self.mul_level(a1, b1);
        let c01 = self.mul_level(a0, b1);
        let c10 = self.mul_level(a1, b0);
        let low = self.add(&p00, &self.mul_level(&p11, &g));
        let high = self.add(&c01, &c10);
        let mut out = low;
        out.extend(high);
        out
    }

    pub fn pow(&self, a: &FfElem, e: &Int) -> FfElem {
        assert!(!e.is_negative());
        let mut base = a.clone();
        let mut e = e.clone();
        let mut acc = self.scalar(&Int::one(), a.len());
        while !e.is_zero() {
            if e.is_odd() {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FfElem) -> FfElem {
        assert!(!self.is_zero(a), "ff inverse of zero");
        if a.len() == 1 {
            return vec![mod_inv(&a[0], &self.p)];
        }
        let level = a.len().trailing_zeros() as usize;
        let q = self.order(level);
        self.pow(a, &(q - Int::from(2)))
    }

    fn is_one(&self, a: &FfElem) -> bool {
        a[0].is_one() && a[1..].iter().all(|c| c.is_zero())
    }

    /// Euler criterion at the element's own level.
    pub fn is_square(&self, a: &FfElem) -> bool {
        assert!(!self.is_zero(a));
        let level = a.len().trailing_zeros() as usize;
        let e = (self.order(level) - Int::one()) >> 1;
        self.is_one(&self.pow(a, &e))
    }

    /// Deterministic enumeration used for non-residue searches: scalar
    /// candidates first, then vectors with small coordinates.
    fn enumerate(&self, len: usize, k: u64) -> FfElem {
        let mut v = vec![Int::zero(); len];
        let mut k = k;
        let base = 16u64; // plenty: a non-residue appears among tiny vectors
        for slot in v.iter_mut() {
            *slot = Int::from(k % base).mod_floor(&self.p);
            k /= base;
        }
        v
    }

    /// Canonical non-square at `level` (lex-least in the enumeration order).
    pub fn nonresidue(&self, level: usize) -> FfElem {
        let len = 1usize << level;
        for k in 2u64..100_000 {
            let cand = self.enumerate(len, k);
            if !self.is_zero(&cand) && !self.is_square(&cand) {
                return cand;
            }
        }
        unreachable!("no non-residue found; field arithmetic is broken")
    }

    /// Tonelli–Shanks square root at the element's level; panics if `a` is a
    /// non-square (callers Euler-test first). Returns the lex-least root.
    pub fn sqrt(&self, a: &FfElem) -> FfElem {
        assert!(!self.is_zero(a));
        let level = a.len().trailing_zeros() as usize;
        let q = self.order(level);
        let one = Int::one();
        let mut t = &q - &one;
        let mut s = 0u32;
        while t.is_even() {
            t >>= 1;
            s += 1;
        }
        let z = self.pad(&self.nonresidue(level), a.len());
        let mut c = self.pow(&z, &t);
        let mut x = self.pow(a, &((&t + &one) >> 1));
        let mut r = self.pow(a, &t);
        let mut m = s;
        while !self.is_one(&r) {
            // find least i with r^(2^i) = 1
            let mut i = 0u32;
            let mut rr = r.clone();
            while !self.is_one(&rr) {
                rr = self.mul(&rr, &rr);
                i += 1;
                assert!(i < m, "tonelli-shanks on a non-square");
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = self.mul(&b, &b);
            }
            m = i;
            c = self.mul(&b, &b);
            x = self.mul(&x, &b);
            r = self.mul(&r, &c);
        }
        self.canonical_sign(&x)
    }

    /// Of x and −x, the one with the lex-least coordinate vector.
    pub fn canonical_sign(&self, x: &FfElem) -> FfElem {
        let nx = self.neg(x);
        if x <= &nx {
            x.clone()
        } else {
            nx
        }
    }

    /// x ↦ x^p, the residue Frobenius.
    pub fn frobenius(&self, a: &FfElem) -> FfElem {
        self.pow(a, &self.p.clone())
    }
}

/// Scalar square root mod an odd prime (level-0 convenience).
pub fn sqrt_mod_p(a: &Int, p: &Int) -> Option<Int> {
    let ctx = FfCtx::new(p.clone());
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(Int::zero());
    }
    let e = vec![a];
    if !ctx.is_square(&e) {
        return None;
    }
    Some(ctx.sqrt(&e)[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_sqrt() {
        let p = Int::from(97);
        for a in 1..97u32 {
            let sq = (Int::from(a) * Int::from(a)).mod_floor(&p);
            let r = sqrt_mod_p(&sq, &p).unwrap();
            assert_eq!((&r * &r).mod_floor(&p), sq);
        }
        assert_eq!(sqrt_mod_p(&Int::from(5), &Int::from(7)), None); // 5 is not a QR mod 7
    }

    #[test]
    fn quadratic_extension() {
        let p = Int::from(7);
        let mut ctx = FfCtx::new(p);
        let nr = ctx.nonresidue(0);
        assert_eq!(nr, vec![Int::from(3)]); // 3 is the least non-residue mod 7
        ctx.gensq.push(nr);
        // (a + b√3)² = a² + 3b² + 2ab√3 in F_49
        let x = vec![Int::from(2), Int::from(5)];
        let sq = ctx.mul(&x, &x);
        assert_eq!(sq, vec![Int::from((4 + 75) % 7), Int::from(20 % 7)]);
        // every element of F_49 of the form y² has a TS root
        let r = ctx.sqrt(&sq);
        assert!(ctx.is_square(&sq));
        let back = ctx.mul(&r, &r);
        assert_eq!(back, sq);
        // multiplicative order checks: x^(48) = 1
        let one = ctx.pow(&x, &Int::from(48));
        assert!(ctx.is_one(&one));
        // frobenius has order 2 on F_49
        let f1 = ctx.frobenius(&x);
        let f2 = ctx.frobenius(&f1);
        assert_eq!(f2, x);
        assert_ne!(f1, x);
    }

    #[test]
    fn degree_four() {
        let p = Int::from(5);
        let mut ctx = FfCtx::new(p);
        let c0 = ctx.nonresidue(0);
        ctx.gensq.push(c0);
        let c1 = ctx.nonresidue(1);
        assert!(!ctx.is_square(&c1));
        ctx.gensq.push(c1);
        // random-ish element of F_625
        let x: FfElem = [1, 2, 3, 4].map(Int::from).to_vec();
        let sq = ctx.mul(&x, &x);
        assert!(ctx.is_square(&sq));
        let r = ctx.sqrt(&sq);
        assert_eq!(ctx.mul(&r, &r), sq);
        // frobenius order 4
        let mut y = x.clone();
        for _ in 0..4 {
            y = ctx.frobenius(&y);
        }
        assert_eq!(y, x);
    }
}
