//! The local error term E: a product of eleven Hilbert symbols in the
//! invariants, one factor dropped when η₁ = 0. It is defined only when the
//! product 𝒫 of the auxiliary invariants is nonzero.

use super::invariants::InvariantSet;
use crate::arith::hilbert::{hilbert_symbol, relevant_places, Place};
use crate::arith::rational::rat_int;
use crate::arith::Rat;
use crate::{Error, Result};
use num::Zero;

/// The symbol arguments, in a fixed order. The η₁ factor is omitted when
/// η₁ = 0; everything else is nonzero once 𝒫 ≠ 0.
pub fn symbol_args(inv: &InvariantSet) -> Result<Vec<(Rat, Rat)>> {
    if inv.p_vanishes {
        return Err(Error::Degenerate(format!(
            "error term undefined: vanishing invariants {:?}",
            inv.p_zero_factors
        )));
    }
    let two = rat_int(2);
    let mut args = vec![
        (
            inv.d2_plus_d3.clone(),
            -(&inv.l1_sq * &inv.d2d3),
        ),
        (
            inv.d2e2_plus_d3e3.clone(),
            -(&(&inv.l1_sq * &inv.eta23) * &inv.d2d3),
        ),
        (
            inv.dh2e3_plus_dh3e2.clone(),
            -(&(&inv.l1_sq * &inv.eta23) * &inv.dh2dh3),
        ),
        (inv.xi.clone(), -(&inv.delta1 * &inv.dh2dh3)),
        (inv.eta23.clone(), -(&inv.d2d3 * &inv.dh2dh3)),
        (
            inv.c.clone(),
            &(&inv.delta1 * &inv.d2d3) * &inv.dh2dh3,
        ),
    ];
    if !inv.eta1.is_zero() {
        args.push((
            inv.eta1.clone(),
            -(&inv.d2d3 * &inv.delta_sq_dhat1),
        ));
    }
    args.push((inv.dhat1.clone(), -inv.l1_over_delta.clone()));
    args.push((inv.l1_sq.clone(), -inv.l2l3.clone()));
    args.push((two.clone(), -inv.l1_sq.clone()));
    args.push((inv.dh2dh3.clone(), -two));
    Ok(args)
}

pub fn error_term(inv: &InvariantSet, place: &Place) -> Result<i8> {
    let mut e = 1i8;
    for (a, b) in symbol_args(inv)? {
        e *= hilbert_symbol(&a, &b, place);
    }
    Ok(e)
}

/// Every place where some symbol argument is a non-unit, plus 2 and ∞.
/// E = 1 away from these.
pub fn error_places(inv: &InvariantSet) -> Result<Vec<Place>> {
    let args = symbol_args(inv)?;
    let refs: Vec<&Rat> = args.iter().flat_map(|(a, b)| [a, b]).collect();
    Ok(relevant_places(&refs))
}

/// ∏ᵥ Eᵥ over all places (finite product by the previous function).
pub fn error_term_product(inv: &InvariantSet) -> Result<i8> {
    let mut prod = 1i8;
    for place in error_places(inv)? {
        prod *= error_term(inv, &place)?;
    }
    Ok(prod)
}
