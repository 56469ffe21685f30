//! The curve type: y² = c·r(x)·s(x)·t(x), with r rational and s, t monic
//! quadratics over ℚ(√m) that conjugation swaps (independent rational
//! quadratics when m = 1). The labeling r, s, t is part of the data.

use crate::arith::factor::is_squarefree;
use crate::arith::quad::Quad;
use crate::arith::{Int, Rat};
use crate::{Error, Result};
use num::{One, Zero};

/// Monic quadratic x² + b·x + c over ℚ(√m).
#[derive(Clone, Debug, PartialEq)]
pub struct MonicQuad {
    pub b: Quad,
    pub c: Quad,
}

impl MonicQuad {
    pub fn new(b: Quad, c: Quad) -> Self {
        assert_eq!(b.m, c.m, "mixed quadratic layers in a polynomial");
        MonicQuad { b, c }
    }

    pub fn conj(&self) -> Self {
        MonicQuad {
            b: self.b.conj(),
            c: self.c.conj(),
        }
    }

    /// b² − 4c = (difference of the roots)².
    pub fn disc(&self) -> Quad {
        &(&self.b * &self.b) - &self.c.scale(&Rat::from_integer(Int::from(4)))
    }

    pub fn eval(&self, x: &Quad) -> Quad {
        &(&(x * x) + &(&self.b * x)) + &self.c
    }

    /// Substitute x ↦ x + z (shifts the roots by −z).
    pub fn translate(&self, z: &Quad) -> Self {
        let b = &(z + z) + &self.b;
        let c = &(&(z * z) + &(&self.b * z)) + &self.c;
        MonicQuad { b, c }
    }

    pub fn root_sum(&self) -> Quad {
        -self.b.clone()
    }

    pub fn root_prod(&self) -> Quad {
        self.c.clone()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_rational() && self.c.is_rational()
    }
}

/// Resultant of two monic quadratics: the product of all root differences
/// (first polynomial's roots minus the second's).
pub fn resultant(f: &MonicQuad, g: &MonicQuad) -> Quad {
    let db = &g.b - &f.b;
    let dc = &g.c - &f.c;
    &(&(&(&db * &db) * &f.c) - &(&(&f.b * &db) * &dc)) + &(&dc * &dc)
}

#[derive(Clone, Debug, PartialEq)]
pub struct C2D4Curve {
    pub c: Rat,
    pub m: Int,
    pub r: MonicQuad,
    pub s: MonicQuad,
    pub t: MonicQuad,
}

impl C2D4Curve {
    pub fn new(c: Rat, m: Int, r: MonicQuad, s: MonicQuad, t: MonicQuad) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Parse("leading constant c must be nonzero".into()));
        }
        if m.is_zero() || !is_squarefree(&m) {
            return Err(Error::Parse(format!("m = {m} must be a squarefree nonzero integer")));
        }
        for q in [&r, &s, &t] {
            if q.b.m != m || q.c.m != m {
                return Err(Error::Parse("coefficient layer does not match m".into()));
            }
        }
        if !r.is_rational() {
            return Err(Error::Parse("r must have rational coefficients".into()));
        }
        if !m.is_one() && t != s.conj() {
            return Err(Error::Parse(
                "t must be the ℚ(√m)-conjugate of s when m ≠ 1".into(),
            ));
        }
        Ok(C2D4Curve { c, m, r, s, t })
    }

    /// Centered means the roots of r are ±α₁, i.e. r has no linear term.
    pub fn is_centered(&self) -> bool {
        self.r.b.is_zero()
    }

    /// Substitute x ↦ x + z for rational z; c and m are untouched.
    pub fn translate(&self, z: &Rat) -> Self {
        let zq = Quad::from_rat(z.clone(), self.m.clone());
        C2D4Curve {
            c: self.c.clone(),
            m: self.m.clone(),
            r: self.r.translate(&zq),
            s: self.s.translate(&zq),
            t: self.t.translate(&zq),
        }
    }

    /// The centered model (translation by the midpoint of r's roots).
    pub fn centered(&self) -> Self {
        if self.is_centered() {
            return self.clone();
        }
        let half = Rat::new(Int::one(), Int::from(2));
        let z = self.r.b.expect_rat("linear coefficient of r") * half;
        let out = self.translate(&(-z));
        debug_assert!(out.is_centered());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rat_int};
    use crate::model::testutil::family_rep;

    fn q(n: i64) -> Quad {
        Quad::from_int(n, Int::one())
    }

    #[test]
    fn construction_checks() {
        assert!(family_rep().is_centered());
        // non-conjugate s, t over a real quadratic field is rejected
        let m = Int::from(5);
        let s = MonicQuad::new(Quad::new(rat_int(1), rat_int(1), m.clone()), Quad::from_int(3, m.clone()));
        let t = MonicQuad::new(Quad::new(rat_int(1), rat_int(1), m.clone()), Quad::from_int(3, m.clone()));
        let r = MonicQuad::new(Quad::zero(m.clone()), Quad::from_int(-1, m.clone()));
        assert!(matches!(
            C2D4Curve::new(rat_int(1), m.clone(), r.clone(), s.clone(), t),
            Err(Error::Parse(_))
        ));
        let t = s.conj();
        assert!(C2D4Curve::new(rat_int(1), m, r, s, t).is_ok());
    }

    #[test]
    fn centering() {
        let m = Int::one();
        let cur = C2D4Curve::new(
            rat_int(2),
            m,
            MonicQuad::new(q(6), q(4)), // roots −3 ± √5
            MonicQuad::new(q(1), q(-1)),
            MonicQuad::new(q(2), q(-3)),
        )
        .unwrap();
        let cen = cur.centered();
        assert!(cen.is_centered());
        assert_eq!(cen.r.c, q(-5)); // x² − 5 after shifting by the midpoint −3
        assert_eq!(cen.c, rat_int(2));
        // translation back recovers the original
        assert_eq!(cen.translate(&rat(3, 1)), cur);
    }

    #[test]
    fn resultant_of_split_quadratics() {
        // (x²−1, x²−5x+6): roots ±1 vs {2,3}: ∏ = (1−2)(1−3)(−1−2)(−1−3)
        let f = MonicQuad::new(q(0), q(-1));
        let g = MonicQuad::new(q(-5), q(6));
        assert_eq!(resultant(&f, &g), q(24));
        // shared root ⇒ 0
        let h = MonicQuad::new(q(-3), q(2));
        assert_eq!(resultant(&f, &h), q(0));
    }
}
