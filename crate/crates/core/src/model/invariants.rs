//! The invariant set of a C2D4 curve. Everything is computed on the
//! centered model from the coefficients of r, s, t via root sums sᵢ and
//! products pᵢ, entirely in exact arithmetic. Quantities that live in the
//! base field are extracted with `expect_rat`: a surviving √m component
//! there is a bug, not bad input.

use super::curve::{resultant, C2D4Curve};
use crate::arith::quad::Quad;
use crate::arith::{Int, Rat};
use crate::{Error, Result};
use num::Zero;

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSet {
    pub c: Rat,
    pub m: Int,
    // conjugation sends Δ ↦ −Δ, ℓ₁ ↦ −ℓ₁ and swaps the 2/3 pairs
    pub delta: Quad,
    pub l1: Quad,
    pub l2: Quad,
    pub l3: Quad,
    pub eta2: Quad,
    pub eta3: Quad,
    pub delta2: Quad,
    pub delta3: Quad,
    pub dhat2: Quad,
    pub dhat3: Quad,
    // base-field invariants
    pub delta1: Rat,
    pub eta1: Rat,
    pub xi: Rat,
    pub dhat1: Rat,
    pub delta_sq: Rat,
    pub l1_sq: Rat,
    pub l1_over_delta: Rat,
    pub l2l3: Rat,
    pub eta23: Rat,
    pub d2_plus_d3: Rat,
    pub d2e2_plus_d3e3: Rat,
    pub dh2e3_plus_dh3e2: Rat,
    pub d2d3: Rat,
    pub dh2dh3: Rat,
    pub delta_sq_dhat1: Rat,
    /// true when the product ℓ₁ℓ₂ℓ₃η₂η₃ξ(δ₂+δ₃)(δ₂η₂+δ₃η₃)(δ̂₂η₃+δ̂₃η₂)
    /// vanishes; the error term is then undefined
    pub p_vanishes: bool,
    pub p_zero_factors: Vec<&'static str>,
}

pub fn invariants(curve: &C2D4Curve) -> Result<InvariantSet> {
    let cur = curve.centered();
    let m = cur.m.clone();
    let c = cur.c.clone();

    let delta1 = -cur.r.c.expect_rat("constant coefficient of centered r");
    let d1q = Quad::from_rat(delta1.clone(), m.clone());

    let s2 = cur.s.root_sum();
    let s3 = cur.t.root_sum();
    let p2 = cur.s.root_prod();
    let p3 = cur.t.root_prod();

    // degenerate sextic: a repeated root somewhere
    let res_rs = resultant(&cur.r, &cur.s);
    let res_rt = resultant(&cur.r, &cur.t);
    let res_st = resultant(&cur.s, &cur.t);
    let delta2 = cur.s.disc();
    let delta3 = cur.t.disc();
    let mut collisions = Vec::new();
    if delta1.is_zero() {
        collisions.push("r has a double root");
    }
    if delta2.is_zero() {
        collisions.push("s has a double root");
    }
    if delta3.is_zero() {
        collisions.push("t has a double root");
    }
    if res_rs.is_zero() || res_rt.is_zero() {
        collisions.push("r shares a root with s or t");
    }
    if res_st.is_zero() {
        collisions.push("s and t share a root");
    }
    if !collisions.is_empty() {
        return Err(Error::Degenerate(collisions.join("; ")));
    }

    let two = |q: &Quad| q + q;
    let cq = Quad::from_rat(c.clone(), m.clone());

    // Δ = c(−δ₁(s₂−s₃) + p₂s₃ − p₃s₂)
    let l1 = &s2 - &s3;
    let delta = &cq * &(&(&(&p2 * &s3) - &(&p3 * &s2)) - &(&d1q * &l1));
    let l2 = s3.clone();
    let l3 = s2.clone();

    let s23 = &s2 * &s3;
    let eta1 = (&(&two(&(&p2 + &p3)) - &s23)).expect_rat("η₁");
    let eta2 = &(&(&s2 * &s2) - &two(&p2)) - &two(&d1q);
    let eta3 = &(&(&s3 * &s3) - &two(&p3)) - &two(&d1q);

    let four = Quad::from_int(4, m.clone());
    let dhat2 = &four * &res_rt;
    let dhat3 = &four * &res_rs;
    let xi = (&four * &(&(&(&p2 + &d1q) * &(&p3 + &d1q)) + &(&d1q * &s23)))
        .expect_rat("ξ");

    let delta_sq_dhat1 = res_st.expect_rat("Δ²δ̂₁");
    let delta_sq = (&delta * &delta).expect_rat("Δ²");
    debug_assert!(!delta_sq.is_zero());
    let dhat1 = &delta_sq_dhat1 / &delta_sq;
    let l1_sq = (&l1 * &l1).expect_rat("ℓ₁²");
    let l1_over_delta = (&l1 * &delta).expect_rat("ℓ₁Δ") / &delta_sq;
    let l2l3 = (&l2 * &l3).expect_rat("ℓ₂ℓ₃");
    let eta23 = (&eta2 * &eta3).expect_rat("η₂η₃");
    let d2_plus_d3 = (&delta2 + &delta3).expect_rat("δ₂+δ₃");
    let d2e2_plus_d3e3 =
        (&(&delta2 * &eta2) + &(&delta3 * &eta3)).expect_rat("δ₂η₂+δ₃η₃");
    let dh2e3_plus_dh3e2 =
        (&(&dhat2 * &eta3) + &(&dhat3 * &eta2)).expect_rat("δ̂₂η₃+δ̂₃η₂");
    let d2d3 = (&delta2 * &delta3).expect_rat("δ₂δ₃");
    let dh2dh3 = (&dhat2 * &dhat3).expect_rat("δ̂₂δ̂₃");

    let mut p_zero_factors = Vec::new();
    if l1.is_zero() {
        p_zero_factors.push("l1");
    }
    if l2.is_zero() {
        p_zero_factors.push("l2");
    }
    if l3.is_zero() {
        p_zero_factors.push("l3");
    }
    if eta2.is_zero() {
        p_zero_factors.push("eta2");
    }
    if eta3.is_zero() {
        p_zero_factors.push("eta3");
    }
    if xi.is_zero() {
        p_zero_factors.push("xi");
    }
    if d2_plus_d3.is_zero() {
        p_zero_factors.push("d2+d3");
    }
    if d2e2_plus_d3e3.is_zero() {
        p_zero_factors.push("d2*e2+d3*e3");
    }
    if dh2e3_plus_dh3e2.is_zero() {
        p_zero_factors.push("dh2*e3+dh3*e2");
    }

    Ok(InvariantSet {
        c,
        m,
        delta,
        l1,
        l2,
        l3,
        eta2,
        eta3,
        delta2,
        delta3,
        dhat2,
        dhat3,
        delta1,
        eta1,
        xi,
        dhat1,
        delta_sq,
        l1_sq,
        l1_over_delta,
        l2l3,
        eta23,
        d2_plus_d3,
        d2e2_plus_d3e3,
        dh2e3_plus_dh3e2,
        d2d3,
        dh2dh3,
        delta_sq_dhat1,
        p_vanishes: !p_zero_factors.is_empty(),
        p_zero_factors,
    })
}
