//! The Richelot dual curve. For a centered model y² = c·r·s·t the dual is
//! y² = (ℓ₁ℓ₂ℓ₃/Δ)·r̂(x)·ŝ(x)·t̂(x), where r̂ ∝ ts′ − st′, ŝ ∝ rt′ − tr′, t̂ ∝ rs′ − sr′, each divided by its
//! leading coefficient (ℓ₁, ℓ₂, ℓ₃ respectively). Requires Δℓ₁ℓ₂ℓ₃ ≠ 0.

use crate::arith::quad::Quad;
use crate::model::curve::{C2D4Curve, MonicQuad};
use crate::model::invariants::{invariants, InvariantSet};
use crate::{Error, Result};

pub struct RichelotDual {
    pub dual: C2D4Curve,
    /// the centered model of the source that the construction used
    pub source: C2D4Curve,
    pub source_invariants: InvariantSet,
}

pub fn richelot_dual(curve: &C2D4Curve) -> Result<RichelotDual> {
    let inv = invariants(curve)?;
    for (l, name) in [(&inv.l1, "ℓ₁"), (&inv.l2, "ℓ₂"), (&inv.l3, "ℓ₃")] {
        if l.is_zero() {
            return Err(Error::Degenerate(format!("{name} = 0: dual undefined")));
        }
    }
    let cur = curve.centered();
    let (bs, cs) = (&cur.s.b, &cur.s.c);
    let (bt, ct) = (&cur.t.b, &cur.t.c);
    let cr = &cur.r.c;

    // ts′ − st′ = ℓ₁x² + 2(c_t − c_s)x + (b_s c_t − b_t c_s)
    let r_hat = MonicQuad::new(
        &two(&(ct - cs)) / &inv.l1,
        &(&(bs * ct) - &(bt * cs)) / &inv.l1,
    );
    // rt′ − tr′ = ℓ₂x² + 2(c_r − c_t)x + b_t c_r
    let s_hat = MonicQuad::new(&two(&(cr - ct)) / &inv.l2, &(bt * cr) / &inv.l2);
    // rs′ − sr′ = ℓ₃x² + 2(c_r − c_s)x + b_s c_r
    let t_hat = MonicQuad::new(&two(&(cr - cs)) / &inv.l3, &(bs * cr) / &inv.l3);

    let c_hat = (&(&(&inv.l1 * &inv.l2) * &inv.l3) * &inv.delta).expect_rat("ĉΔ²") / &inv.delta_sq;
    let dual = C2D4Curve::new(c_hat, cur.m.clone(), r_hat, s_hat, t_hat)?;
    Ok(RichelotDual {
        dual,
        source: cur,
        source_invariants: inv,
    })
}

fn two(q: &Quad) -> Quad {
    q + q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rat_int};
    use crate::arith::Int;
    use crate::model::curve::resultant;
    use crate::model::parse::parse_curve;
    use crate::model::testutil::family_rep;

    fn q(n: i64) -> Quad {
        Quad::from_int(n, Int::from(1))
    }

    #[test]
    fn family_dual_model() {
        let rd = richelot_dual(&family_rep()).unwrap();
        assert_eq!(rd.dual.c, rat(-64, 7));
        assert_eq!(rd.dual.r, MonicQuad::new(q(10), q(32)));
        assert_eq!(
            rd.dual.s,
            MonicQuad::new(
                Quad::from_rat(rat(13, 2), Int::from(1)),
                Quad::from_rat(rat_int(25), Int::from(1))
            )
        );
        assert_eq!(
            rd.dual.t,
            MonicQuad::new(
                Quad::from_rat(rat(73, 8), Int::from(1)),
                Quad::from_rat(rat_int(25), Int::from(1))
            )
        );
    }

    // the seven discriminant identities linking a curve and its dual
    fn check_disc_identities(cur: &C2D4Curve) {
        let rd = richelot_dual(cur).unwrap();
        let inv = &rd.source_invariants;
        let (src, dual) = (&rd.source, &rd.dual);
        let four = Quad::from_int(4, src.m.clone());
        let csq = Quad::from_rat(&src.c * &src.c, src.m.clone());

        // ℓᵢ² disc(q̂ᵢ) = 4·(cross resultant of the source pair)
        assert_eq!(
            &(&inv.l1 * &inv.l1) * &dual.r.disc(),
            &four * &resultant(&src.s, &src.t)
        );
        assert_eq!(
            &(&inv.l2 * &inv.l2) * &dual.s.disc(),
            &four * &resultant(&src.t, &src.r)
        );
        assert_eq!(
            &(&inv.l3 * &inv.l3) * &dual.t.disc(),
            &four * &resultant(&src.s, &src.r)
        );

        // disc(qᵢ)·Δ² = c²·(product of the two complementary ℓ²)·(dual cross resultant)
        let dsq = Quad::from_rat(inv.delta_sq.clone(), src.m.clone());
        assert_eq!(
            &src.r.disc() * &dsq,
            &(&csq * &(&(&inv.l2 * &inv.l2) * &(&inv.l3 * &inv.l3)))
                * &resultant(&dual.s, &dual.t)
        );
        assert_eq!(
            &src.s.disc() * &dsq,
            &(&csq * &(&(&inv.l1 * &inv.l1) * &(&inv.l3 * &inv.l3)))
                * &resultant(&dual.t, &dual.r)
        );
        assert_eq!(
            &src.t.disc() * &dsq,
            &(&csq * &(&(&inv.l1 * &inv.l1) * &(&inv.l2 * &inv.l2)))
                * &resultant(&dual.r, &dual.s)
        );

        // Δ(dual)·c² = −2Δ
        let dual_inv = invariants(dual).unwrap();
        let two_q = Quad::from_int(-2, src.m.clone());
        assert_eq!(&dual_inv.delta * &csq, &two_q * &inv.delta);
    }

    #[test]
    fn disc_identities_family() {
        check_disc_identities(&family_rep());
        // and on a curve over ℚ(√2)
        let cur = parse_curve(
            "c = 3\nm = 2\nr = [0, -4]\ns = [[1, 1], [1, -1]]\nt = [[1, -1], [1, 1]]",
        )
        .unwrap();
        check_disc_identities(&cur);
    }

    #[test]
    fn family_dual_discriminant_value() {
        let rd = richelot_dual(&family_rep()).unwrap();
        let dual_inv = invariants(&rd.dual).unwrap();
        // Δ(dual) = −2·84/(−1)² = −168
        assert_eq!(dual_inv.delta, Quad::from_rat(rat_int(-168), Int::from(1)));
        // ℓ₁² disc(r̂) = 4·Δ²δ̂₁ = −4032 on the family representative
        let lhs = (&(&rd.source_invariants.l1 * &rd.source_invariants.l1)
            * &rd.dual.r.disc())
            .expect_rat("ℓ₁²disc(r̂)");
        assert_eq!(lhs, rat_int(-4032));
    }

    #[test]
    fn dual_rejects_vanishing_l() {
        // s₂ = 0 forces ℓ₃ = 0
        let cur = parse_curve("c = 1\nm = 1\nr = [0, -1]\ns = [0, -4]\nt = [1, -6]").unwrap();
        assert!(matches!(richelot_dual(&cur), Err(Error::Degenerate(_))));
    }

    #[test]
    fn dual_roundtrip_renders() {
        use crate::model::parse::render_curve;
        let rd = richelot_dual(&family_rep()).unwrap();
        let text = render_curve(&rd.dual);
        assert_eq!(parse_curve(&text).unwrap(), rd.dual);
    }

    #[test]
    fn dual_dhat1_is_delta1_up_to_square() {
        // combining the disc identities: δ̂₁(dual) = δ₁·(c/ℓ₂ℓ₃)²
        let rd = richelot_dual(&family_rep()).unwrap();
        let i0 = &rd.source_invariants;
        let i1 = invariants(&rd.dual).unwrap();
        let ratio = &i1.dhat1 / &i0.delta1;
        let prod = ratio.numer() * ratio.denom();
        assert!(crate::arith::rational::sqrt_int(&prod).is_some());
    }
}
