//! Local data at an odd prime. The curve is centered, its cluster picture
//! balanced, the picture classified against the type table, and the table
//! row checked against the error term of the input model.

use crate::arith::hilbert::Place;
use crate::arith::rational::val_rat;
use crate::arith::Int;
use crate::clusters::{analyze, balance, classify, rational_context, TypeLabel};
use crate::localdata::table::{table_row, TableRow};
use crate::localdata::LocalData;
use crate::model::curve::C2D4Curve;
use crate::model::error_term::error_term;
use crate::model::invariants::{invariants, InvariantSet};
use crate::{Error, Result};

pub fn local_data_odd(curve: &C2D4Curve, p: &Int) -> Result<LocalData> {
    let place = Place::Finite(p.clone());
    let centered = curve.centered();
    let inv = invariants(&centered)?;
    if inv.l1.is_zero() || inv.l2.is_zero() || inv.l3.is_zero() {
        return Err(Error::Degenerate(
            "the richelot kernel is degenerate (an ℓ invariant vanishes)".into(),
        ));
    }
    let e_def = match error_term(&inv, &place) {
        Ok(e) => Some(e),
        Err(Error::Degenerate(_)) => None,
        Err(err) => return Err(err),
    };
    let (lab, row) = match table_path(&centered, &inv, p) {
        Ok(pair) => pair,
        Err(Error::Unsupported(reason)) => {
            return Ok(LocalData::unsupported(place, reason, e_def))
        }
        Err(err) => return Err(err),
    };
    // The table's error term holds for every semistable curve of the given
    // type once 𝒫 and η₁ are nonzero (a change of model over an odd
    // unramified extension settles the valuation conditions without moving
    // either side of the equality). A computable error term that disagrees
    // with the row therefore means the classification or the table is wrong.
    let e_table = if inv.p_vanishes || inv.eta1.is_zero() {
        None
    } else {
        Some(row.e)
    };
    if let (Some(a), Some(b)) = (e_def, e_table) {
        if a != b {
            return Err(Error::Internal(format!(
                "error term disagrees with the {} row at p = {p}",
                lab.render()
            )));
        }
    }
    let verdict = e_def.map(|e| row.lambda * e == row.w);
    Ok(LocalData {
        place,
        supported: true,
        reason: None,
        type_label: Some(lab.render()),
        tamagawa: Some(row.c_j),
        tamagawa_dual: Some(row.c_jhat),
        deficient: Some(row.mu == -1),
        deficient_dual: Some(row.mu_hat == -1),
        components: None,
        components_dual: None,
        lambda: Some(row.lambda),
        w: Some(row.w),
        e: e_def,
        e_table,
        verdict,
    })
}

fn table_path(centered: &C2D4Curve, inv: &InvariantSet, p: &Int) -> Result<(TypeLabel, TableRow)> {
    let input = analyze(centered, p)?;
    input
        .pic
        .semistable(2 * val_rat(&inv.c, p))
        .map_err(Error::Unsupported)?;
    let bal = balance(centered, p)?;
    let binv = invariants(&bal.curve)?;
    let ctx = rational_context(&binv, p);
    let lab = classify(&bal.analysis, &ctx)?;
    bal.analysis
        .pic
        .semistable(2 * val_rat(&binv.c, p))
        .map_err(|why| Error::Internal(format!("balanced model lost semistability: {why}")))?;
    let row = table_row(&lab)?;
    Ok((lab, row))
}
