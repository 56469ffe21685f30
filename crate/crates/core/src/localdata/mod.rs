//! Per-place local data: type labels, Tamagawa numbers, deficiency, λ, the
//! root number and both error terms, with the conjecture verdict w = λ·E.

pub mod odd;
pub mod real;
pub mod table;
pub mod twoadic;

use crate::arith::hilbert::Place;
use crate::arith::Int;
use crate::model::curve::C2D4Curve;
use crate::Result;

/// Local data at one place. Fields a place kind does not define stay
/// `None`. `e` is the error term of the centered input model; `e_table` is
/// the independently predicted value when the place supports one.
#[derive(Clone, Debug)]
pub struct LocalData {
    pub place: Place,
    pub supported: bool,
    /// why the place fell outside the supported cases, when it did
    pub reason: Option<String>,
    pub type_label: Option<String>,
    pub tamagawa: Option<Int>,
    pub tamagawa_dual: Option<Int>,
    pub deficient: Option<bool>,
    pub deficient_dual: Option<bool>,
    /// real components of the curve and its dual (real place only)
    pub components: Option<i64>,
    pub components_dual: Option<i64>,
    pub lambda: Option<i8>,
    pub w: Option<i8>,
    pub e: Option<i8>,
    pub e_table: Option<i8>,
    pub verdict: Option<bool>,
}

impl LocalData {
    pub(crate) fn unsupported(place: Place, reason: String, e: Option<i8>) -> Self {
        LocalData {
            place,
            supported: false,
            reason: Some(reason),
            type_label: None,
            tamagawa: None,
            tamagawa_dual: None,
            deficient: None,
            deficient_dual: None,
            components: None,
            components_dual: None,
            lambda: None,
            w: None,
            e,
            e_table: None,
            verdict: None,
        }
    }
}

pub fn local_data(curve: &C2D4Curve, place: &Place) -> Result<LocalData> {
    match place {
        Place::Real => real::local_data_real(curve),
        Place::Finite(p) => {
            if place.is_two() {
                twoadic::local_data_two(curve)
            } else {
                odd::local_data_odd(curve, p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::testutil::family_rep;

    #[test]
    fn family_profile_across_places() {
        let cur = family_rep();
        for (p, label, lam, w, e) in [
            (5i64, "1_{2}^+(a)", -1i8, -1i8, 1i8),
            (11, "1_{2}^-(d)", -1, 1, -1),
            (17, "1_{2}^-(d)", -1, 1, -1),
        ] {
            let data = local_data(&cur, &Place::Finite(Int::from(p))).unwrap();
            assert!(data.supported, "p = {p}");
            assert_eq!(data.type_label.as_deref(), Some(label), "p = {p}");
            assert_eq!(data.lambda, Some(lam), "p = {p}");
            assert_eq!(data.w, Some(w), "p = {p}");
            assert_eq!(data.e, Some(e), "p = {p}");
            assert_eq!(data.e_table, Some(e), "p = {p}");
            assert_eq!(data.verdict, Some(true), "p = {p}");
        }
        for p in [3i64, 7] {
            let data = local_data(&cur, &Place::Finite(Int::from(p))).unwrap();
            assert!(!data.supported, "p = {p}");
            assert!(data.reason.is_some());
            assert!(data.e.is_some());
        }
    }
}
