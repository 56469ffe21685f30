//! Rational Möbius substitutions acting on curve models. A matrix
//! [[a, b], [c, d]] moves every root ρ to (aρ + b)/(cρ + d) and rescales
//! the leading constant so the new model defines the same curve up to the
//! standard (x, y) change of coordinates.

use super::curve::{C2D4Curve, MonicQuad};
use crate::arith::quad::Quad;
use crate::arith::Rat;
use crate::{Error, Result};
use num::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct Mobius {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl Mobius {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Mobius { a, b, c, d }
    }

    /// ρ ↦ ρ + z.
    pub fn translation(z: Rat) -> Self {
        Mobius::new(Rat::one(), z, Rat::zero(), Rat::one())
    }

    /// ρ ↦ λρ.
    pub fn scaling(l: Rat) -> Self {
        Mobius::new(l, Rat::zero(), Rat::zero(), Rat::one())
    }

    /// ρ ↦ k/ρ.
    pub fn inversion(k: Rat) -> Self {
        Mobius::new(Rat::zero(), k, Rat::one(), Rat::zero())
    }

    /// ρ ↦ (ρ + wδ₁)/(wρ + 1), which keeps a centered model centered.
    pub fn pivot(w: Rat, delta1: &Rat) -> Self {
        Mobius::new(Rat::one(), &w * delta1, w, Rat::one())
    }

    pub fn det(&self) -> Rat {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    fn push_quad(&self, q: &MonicQuad) -> Result<(MonicQuad, Quad)> {
        let m = q.b.m.clone();
        let lift = |x: &Rat| Quad::from_rat(x.clone(), m.clone());
        let (a, b, c, d) = (lift(&self.a), lift(&self.b), lift(&self.c), lift(&self.d));
        // for q = x² + b_q x + c_q with roots ρᵢ, the image quadratic has
        //   root product (a²c_q − ab·b_q + b²)/D,
        //   root sum (2ac·c_q − (ad + bc)·b_q + 2bd)/D,
        // where D = c²c_q − cd·b_q + d² = ∏(cρᵢ + d)
        let denom = &(&(&c * &c) * &q.c) - &(&(&(&c * &d) * &q.b) - &(&d * &d));
        if denom.is_zero() {
            return Err(Error::Unsupported(
                "möbius substitution has a pole at a root".into(),
            ));
        }
        let prod = &(&(&(&a * &a) * &q.c) - &(&(&a * &b) * &q.b)) + &(&b * &b);
        let sum = &(&(&(&(&a * &c) * &q.c) + &(&(&a * &c) * &q.c)) - &(&(&(&a * &d) + &(&b * &c)) * &q.b))
            + &(&(&b * &d) + &(&b * &d));
        let out = MonicQuad::new(&(-sum) / &denom, &prod / &denom);
        Ok((out, denom))
    }

    /// Transform the model. Fails if the matrix is singular or a root maps
    /// to infinity.
    pub fn apply(&self, cur: &C2D4Curve) -> Result<C2D4Curve> {
        if self.det().is_zero() {
            return Err(Error::Unsupported("singular möbius matrix".into()));
        }
        let (r, dr) = self.push_quad(&cur.r)?;
        let (s, ds) = self.push_quad(&cur.s)?;
        let (t, dt) = self.push_quad(&cur.t)?;
        let factor = (&(&dr * &ds) * &dt).expect_rat("möbius leading factor");
        C2D4Curve::new(&cur.c * &factor, cur.m.clone(), r, s, t)
    }
}
