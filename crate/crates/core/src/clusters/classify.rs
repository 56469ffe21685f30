//! Reading a balanced cluster picture off into a local type label.
//!
//! The dispatch is purely combinatorial: proper cluster sizes first, then
//! colour multisets, Frobenius twisting, and the twin signs. Depth data
//! comes doubled from the picture; subscripts that must be integral reject
//! the curve as unsupported rather than rounding.

use super::picture::{Cluster, ClusterPicture};
use super::roots::colour;
use super::signs::TwinSigns;
use super::Analysis;
use crate::arith::hilbert::is_square_odd;
use crate::arith::rational::val_rat;
use crate::arith::Int;
use crate::model::invariants::InvariantSet;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeKind {
    TwoA,
    TwoB,
    TwoC,
    TwoD,
    TwoE,
    TwoF,
    /// 1_n(a): ruby twin.
    OneA,
    /// 1_n(b): pure sapphire or turquoise twin.
    OneB,
    /// 1_{2n}(c): sapphire-turquoise twin.
    OneC,
    /// 1_{2n}(d): ruby-mixed twin.
    OneD,
    /// 1×_t1(a): two 3-clusters {A,B,B}+{A,C,C}, no substructure.
    OneOneA,
    /// 1×_t1(b): two 3-clusters {A,B,C}+{A,B,C}, δ̂₁ square.
    OneOneB,
    /// 1×_t1(c): as (b) with δ̂₁ non-square.
    OneOneC,
    /// 1×_tI_n(a): {A,A,B}+{B,C,C} with the ruby sub-twin.
    OneCrossIA,
    /// I_n×_tI_m(a): {A,B,B}+{A,C,C} with pure sub-twins.
    IxIA,
    /// I_{n,m}(a): separate pure twins.
    InmA,
    /// I_{n∼n}(a): Frobenius-swapped pure twins.
    InnA,
    /// I_{n,m}(b): two mixed twins.
    InmB,
    /// I_{n∼n}(b): Frobenius-swapped mixed twins.
    InnB,
    /// U(a): three pure twins.
    UA,
    /// U_{n∼n,l}(a): three pure twins, sapphire and turquoise swapped.
    UnnA,
}

/// A type label with its numeric decorations; unused slots stay zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeLabel {
    pub kind: TypeKind,
    pub twisted: bool,
    pub n: i64,
    pub m: i64,
    pub l: i64,
    pub t: i64,
    pub k: i64,
    pub r: i64,
    pub eps: i8,
    pub delta: i8,
}

impl TypeLabel {
    fn new(kind: TypeKind) -> Self {
        TypeLabel { kind, twisted: false, n: 0, m: 0, l: 0, t: 0, k: 0, r: 0, eps: 0, delta: 0 }
    }

    pub fn render(&self) -> String {
        let sg = |v: i8| if v >= 0 { '+' } else { '-' };
        let x = if self.twisted { "x~" } else { "x" };
        match self.kind {
            TypeKind::TwoA => "2(a)".into(),
            TypeKind::TwoB => "2(b)".into(),
            TypeKind::TwoC => "2(c)".into(),
            TypeKind::TwoD => "2(d)".into(),
            TypeKind::TwoE => "2(e)".into(),
            TypeKind::TwoF => "2(f)".into(),
            TypeKind::OneA => format!("1_{{{}}}^{}(a)", self.n, sg(self.eps)),
            TypeKind::OneB => format!("1_{{{}}}^{}(b)", self.n, sg(self.eps)),
            TypeKind::OneC => format!("1_{{{}}}^{}(c)", 2 * self.n, sg(self.eps)),
            TypeKind::OneD => format!("1_{{{}}}^{}(d)", 2 * self.n, sg(self.eps)),
            TypeKind::OneOneA => format!("1{}_{{{}}}1(a)", x, self.t),
            TypeKind::OneOneB => format!("1{}_{{{}}}1(b)", x, self.t),
            TypeKind::OneOneC => format!("1{}_{{{}}}1(c)", x, self.t),
            TypeKind::OneCrossIA => {
                format!("1x_{{{}}}I_{{{}}}^{}(a)", self.t, self.n, sg(self.eps))
            }
            TypeKind::IxIA if self.twisted => {
                format!("I_{{{}}}^{}x~_{{{}}}I_{{{}}}(a)", self.n, sg(self.eps), self.t, self.n)
            }
            TypeKind::IxIA => format!(
                "I_{{{}}}^{}x_{{{}}}I_{{{}}}^{}(a)",
                self.n,
                sg(self.eps),
                self.t,
                self.m,
                sg(self.delta)
            ),
            TypeKind::InmA => {
                format!("I_{{{},{}}}^{{{},{}}}(a)", self.n, self.m, sg(self.eps), sg(self.delta))
            }
            TypeKind::InnA => format!("I_{{{}~{}}}^{}(a)", self.n, self.n, sg(self.eps)),
            TypeKind::InmB => {
                format!("I_{{{},{}}}^{{{},{}}}(b)", self.n, self.m, sg(self.eps), sg(self.delta))
            }
            TypeKind::InnB => format!("I_{{{}~{}}}^{}(b)", self.n, self.n, sg(self.eps)),
            TypeKind::UA => {
                format!("U_{{{},{},{}}}^{}(a)", self.n, self.m, self.l, sg(self.eps))
            }
            TypeKind::UnnA => {
                format!("U_{{{}~{},{}}}^{}(a)", self.n, self.n, self.l, sg(self.eps))
            }
        }
    }
}

/// The rational inputs the dispatch needs, computed from the invariants of
/// the same (balanced) model the picture was built on.
#[derive(Clone, Debug)]
pub struct RationalContext {
    /// Doubled v(Δ/c).
    pub vdc2: i64,
    pub dhat1_square: bool,
    /// v(δ̂₂δ̂₃), pinned against the 3-cluster depth as a consistency check.
    pub v_dhat23: i64,
}

pub fn rational_context(inv: &InvariantSet, p: &Int) -> RationalContext {
    RationalContext {
        vdc2: val_rat(&inv.delta_sq, p) - 2 * val_rat(&inv.c, p),
        dhat1_square: is_square_odd(&inv.dhat1, p),
        v_dhat23: val_rat(&inv.dh2dh3, p),
    }
}

fn unbalanced() -> Error {
    Error::Internal("classifying an unbalanced picture".into())
}

fn residue_r(ctx: &RationalContext, used: i64) -> Result<i64> {
    if ctx.vdc2 % 2 != 0 {
        return Err(Error::Unsupported("non-integral v(Δ/c)".into()));
    }
    let r = ctx.vdc2 / 2 - used;
    if r < 0 {
        return Err(Error::Internal("v(Δ/c) below the minimum for the type".into()));
    }
    Ok(r)
}

fn blank_vdc(ctx: &RationalContext) -> Result<()> {
    if ctx.vdc2 != 0 {
        return Err(Error::Internal("v(Δ/c) nonzero on a depth-free type".into()));
    }
    Ok(())
}

fn idx(pic: &ClusterPicture, mask: u8) -> usize {
    pic.clusters.iter().position(|c| c.members == mask).expect("mask is a cluster")
}

fn subclusters_of<'p>(pic: &'p ClusterPicture, parent: &Cluster) -> Vec<&'p Cluster> {
    pic.proper_subclusters()
        .filter(|c| c.members != parent.members && c.members & parent.members == c.members)
        .collect()
}

pub fn classify(a: &Analysis, ctx: &RationalContext) -> Result<TypeLabel> {
    let pic = &a.pic;
    if pic.top_depth2 != 0 || !pic.of_size(4).is_empty() {
        return Err(unbalanced());
    }

    let fives = pic.of_size(5);
    if let Some(five) = fives.first() {
        if !subclusters_of(pic, five).is_empty() {
            return Err(unbalanced());
        }
        if five.depth2 % 2 != 0 {
            return Err(Error::Unsupported("5-cluster at non-integral depth".into()));
        }
        let k = five.depth2 / 2;
        let r = residue_r(ctx, 2 * k)?;
        let outside = (0..6).find(|&i| five.members >> i & 1 == 0).expect("one root outside");
        let kind = match (colour(outside) == 0, ctx.dhat1_square) {
            (true, true) => TypeKind::TwoB,
            (false, true) => TypeKind::TwoC,
            (true, false) => TypeKind::TwoE,
            (false, false) => TypeKind::TwoF,
        };
        let mut lab = TypeLabel::new(kind);
        lab.k = k;
        lab.r = r;
        return Ok(lab);
    }

    let threes = pic.of_size(3);
    match threes.len() {
        0 => {}
        2 => return two_threes(a, ctx, threes[0], threes[1]),
        _ => return Err(unbalanced()),
    }

    let twins = pic.of_size(2);
    match twins.len() {
        0 => {
            let r = residue_r(ctx, 0)?;
            let kind = if ctx.dhat1_square { TypeKind::TwoA } else { TypeKind::TwoD };
            let mut lab = TypeLabel::new(kind);
            lab.r = r;
            Ok(lab)
        }
        1 => one_twin(&a.signs, ctx, twins[0]),
        2 => two_twins(pic, &a.signs, ctx, twins[0], twins[1]),
        3 => three_twins(pic, &a.signs, ctx, &twins),
        _ => Err(Error::Internal("more than three twins among six roots".into())),
    }
}

fn two_threes(
    a: &Analysis,
    ctx: &RationalContext,
    c1: &Cluster,
    c2: &Cluster,
) -> Result<TypeLabel> {
    let pic = &a.pic;
    let signs = &a.signs;
    if c1.depth2 != c2.depth2 {
        return Err(unbalanced());
    }
    if c1.depth2 % 2 != 0 {
        return Err(Error::Unsupported("3-cluster at non-integral depth".into()));
    }
    let t = c1.depth2 / 2;
    let twisted = pic.frob[idx(pic, c1.members)] == idx(pic, c2.members);
    let resultant_pin = |want: i64| {
        if ctx.v_dhat23 != want {
            return Err(Error::Internal("resultant valuation disagrees with the depth".into()));
        }
        Ok(())
    };

    let m1 = ClusterPicture::colours(c1.members);
    let m2 = ClusterPicture::colours(c2.members);
    let subs1 = subclusters_of(pic, c1);
    let subs2 = subclusters_of(pic, c2);

    // {A,B,C} + {A,B,C}
    if m1 == [0, 1, 2] && m2 == [0, 1, 2] {
        if !subs1.is_empty() || !subs2.is_empty() {
            return Err(Error::Unsupported("substructure inside a mixed 3-cluster".into()));
        }
        resultant_pin(4 * t)?;
        let r = residue_r(ctx, 2 * t)?;
        let kind = if ctx.dhat1_square { TypeKind::OneOneB } else { TypeKind::OneOneC };
        let mut lab = TypeLabel::new(kind);
        lab.twisted = twisted;
        lab.t = t;
        lab.r = r;
        return Ok(lab);
    }

    // {A,B,B} + {A,C,C} in either order
    if (m1 == [0, 1, 1] && m2 == [0, 2, 2]) || (m1 == [0, 2, 2] && m2 == [0, 1, 1]) {
        resultant_pin(4 * t)?;
        return match (&subs1[..], &subs2[..]) {
            ([], []) => {
                blank_vdc(ctx)?;
                let mut lab = TypeLabel::new(TypeKind::OneOneA);
                lab.twisted = twisted;
                lab.t = t;
                Ok(lab)
            }
            ([s1], [s2]) => {
                let pure = |s: &Cluster, parent: &Vec<u8>| {
                    ClusterPicture::colours(s.members) == parent[1..]
                };
                if !pure(s1, &m1) || !pure(s2, &m2) {
                    return Err(Error::Unsupported("mixed sub-twin in a 3-cluster".into()));
                }
                let mut lab = TypeLabel::new(TypeKind::IxIA);
                lab.t = t;
                lab.twisted = twisted;
                lab.r = residue_r(ctx, 0)?;
                if twisted {
                    if s1.depth2 != s2.depth2 {
                        return Err(Error::Internal("swapped sub-twins at unequal depths".into()));
                    }
                    lab.n = s1.depth2 - c1.depth2;
                    lab.eps = signs.joint_sign(s1.members, s2.members)?;
                } else {
                    let mut pair = [
                        (s1.depth2 - c1.depth2, signs.fixed_sign(s1.members)?),
                        (s2.depth2 - c2.depth2, signs.fixed_sign(s2.members)?),
                    ];
                    pair.sort_by_key(|&(d, e)| (d, -e));
                    lab.n = pair[0].0;
                    lab.eps = pair[0].1;
                    lab.m = pair[1].0;
                    lab.delta = pair[1].1;
                }
                Ok(lab)
            }
            _ => Err(Error::Unsupported("sub-twin structure does not match a type".into())),
        };
    }

    // {A,A,B} + {B,C,C} up to relabeling
    if (m1 == [0, 0, 1] && m2 == [1, 2, 2]) || (m1 == [0, 0, 2] && m2 == [1, 1, 2]) {
        if twisted {
            return Err(Error::Internal("twisted clusters with unequal colours".into()));
        }
        resultant_pin(2 * t)?;
        let ([sub], []) = (&subs1[..], &subs2[..]) else {
            return Err(Error::Unsupported("3-cluster pair does not match a type".into()));
        };
        if ClusterPicture::colours(sub.members) != [0, 0] {
            return Err(Error::Unsupported("3-cluster pair does not match a type".into()));
        }
        let mut lab = TypeLabel::new(TypeKind::OneCrossIA);
        lab.t = t;
        lab.n = sub.depth2 - c1.depth2;
        lab.eps = signs.fixed_sign(sub.members)?;
        lab.r = residue_r(ctx, 0)?;
        return Ok(lab);
    }

    // the ruby cluster may come second
    if (m2 == [0, 0, 1] && m1 == [1, 2, 2]) || (m2 == [0, 0, 2] && m1 == [1, 1, 2]) {
        return two_threes(a, ctx, c2, c1);
    }

    Err(Error::Unsupported("3-cluster colours do not match a type".into()))
}

fn one_twin(signs: &TwinSigns, ctx: &RationalContext, tw: &Cluster) -> Result<TypeLabel> {
    let eps = signs.fixed_sign(tw.members)?;
    let cols = ClusterPicture::colours(tw.members);
    let (kind, halved) = match cols[..] {
        [0, 0] => (TypeKind::OneA, false),
        [1, 1] | [2, 2] => (TypeKind::OneB, false),
        [1, 2] => (TypeKind::OneC, true),
        [0, 1] | [0, 2] => (TypeKind::OneD, true),
        _ => unreachable!("twin colours"),
    };
    let mut lab = TypeLabel::new(kind);
    lab.eps = eps;
    if halved {
        if tw.depth2 % 2 != 0 {
            return Err(Error::Unsupported("mixed twin at non-integral depth".into()));
        }
        lab.n = tw.depth2 / 2;
        blank_vdc(ctx)?;
    } else {
        lab.n = tw.depth2;
        lab.r = residue_r(ctx, 0)?;
    }
    Ok(lab)
}

fn two_twins(
    pic: &ClusterPicture,
    signs: &TwinSigns,
    ctx: &RationalContext,
    a: &Cluster,
    b: &Cluster,
) -> Result<TypeLabel> {
    let ca = ClusterPicture::colours(a.members);
    let cb = ClusterPicture::colours(b.members);
    let swapped = pic.frob[idx(pic, a.members)] == idx(pic, b.members);

    let pure = (ca == [1, 1] && cb == [2, 2]) || (ca == [2, 2] && cb == [1, 1]);
    let mixed = ca == [1, 2] && cb == [1, 2];
    if !pure && !mixed {
        return Err(Error::Unsupported("twin pair colours do not match a type".into()));
    }
    if mixed && (a.depth2 % 2 != 0 || b.depth2 % 2 != 0) {
        return Err(Error::Unsupported("mixed twin at non-integral depth".into()));
    }

    let mut lab;
    if swapped {
        if a.depth2 != b.depth2 {
            return Err(Error::Internal("swapped twins at unequal depths".into()));
        }
        lab = TypeLabel::new(if pure { TypeKind::InnA } else { TypeKind::InnB });
        lab.n = a.depth2;
        lab.eps = signs.joint_sign(a.members, b.members)?;
    } else {
        lab = TypeLabel::new(if pure { TypeKind::InmA } else { TypeKind::InmB });
        let mut pair = [
            (a.depth2, signs.fixed_sign(a.members)?),
            (b.depth2, signs.fixed_sign(b.members)?),
        ];
        pair.sort_by_key(|&(d, e)| (d, -e));
        lab.n = pair[0].0;
        lab.eps = pair[0].1;
        lab.m = pair[1].0;
        lab.delta = pair[1].1;
    }
    lab.r = residue_r(ctx, if mixed { lab.n / 2 } else { 0 })?;
    Ok(lab)
}

fn three_twins(
    pic: &ClusterPicture,
    signs: &TwinSigns,
    ctx: &RationalContext,
    twins: &[&Cluster],
) -> Result<TypeLabel> {
    let by_colour = |want: [u8; 2]| {
        twins.iter().find(|c| ClusterPicture::colours(c.members) == want).copied()
    };
    let (Some(aa), Some(bb), Some(cc)) = (by_colour([0, 0]), by_colour([1, 1]), by_colour([2, 2]))
    else {
        return Err(Error::Unsupported("mixed twin triple".into()));
    };
    blank_vdc(ctx)?;
    let eps = signs.fixed_sign(aa.members)?;
    let (ib, ic) = (idx(pic, bb.members), idx(pic, cc.members));
    if pic.frob[idx(pic, aa.members)] != idx(pic, aa.members) {
        return Err(Error::Internal("ruby twin moved across colours".into()));
    }
    let mut lab;
    if pic.frob[ib] == ic {
        if bb.depth2 != cc.depth2 {
            return Err(Error::Internal("swapped twins at unequal depths".into()));
        }
        lab = TypeLabel::new(TypeKind::UnnA);
        lab.n = bb.depth2;
    } else {
        lab = TypeLabel::new(TypeKind::UA);
        lab.n = bb.depth2.min(cc.depth2);
        lab.m = bb.depth2.max(cc.depth2);
    }
    lab.l = aa.depth2;
    lab.eps = eps;
    Ok(lab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quad::Quad;
    use crate::arith::rational::rat_int;
    use crate::clusters::rebalance::balance;
    use crate::model::curve::{C2D4Curve, MonicQuad};
    use crate::model::invariants::invariants;
    use crate::model::testutil::family_rep;

    fn label_of(cur: &C2D4Curve, p: i64) -> Result<TypeLabel> {
        let p = Int::from(p);
        let b = balance(cur, &p)?;
        let inv = invariants(&b.curve)?;
        classify(&b.analysis, &rational_context(&inv, &p))
    }

    fn rational_curve(c: i64, pairs: [(i64, i64); 3]) -> C2D4Curve {
        let q = |n: i64| Quad::from_int(n, Int::from(1));
        let quad = |(x, y): (i64, i64)| MonicQuad::new(q(-(x + y)), q(x * y));
        C2D4Curve::new(rat_int(c), Int::from(1), quad(pairs[0]), quad(pairs[1]), quad(pairs[2]))
            .unwrap()
    }

    #[test]
    fn family_twin_types() {
        let cur = family_rep();
        let at5 = label_of(&cur, 5).unwrap();
        assert_eq!(at5.render(), "1_{2}^+(a)");
        assert_eq!(at5.r, 0);
        let at11 = label_of(&cur, 11).unwrap();
        assert_eq!(at11.render(), "1_{2}^-(d)");
        let at17 = label_of(&cur, 17).unwrap();
        assert_eq!(at17.kind, TypeKind::OneD);
        assert_eq!(at17.n, 1);
    }

    #[test]
    fn crossing_threes_with_a_unit_constant() {
        // y² = 3·x(x-1)(x-3)(x-4)(x+3)(x+2): two {A,B,C} clusters mod 3
        let cur = rational_curve(3, [(0, 1), (3, 4), (-3, -2)]);
        let lab = label_of(&cur, 3).unwrap();
        assert_eq!(lab.render(), "1x_{1}1(c)");
        assert_eq!(lab.r, 1);
    }

    #[test]
    fn twisted_crossing_threes() {
        // r = x²-2, s = x²-15x+(48+5√2), t = conj: the clusters sit at ±√2
        // and Frobenius at 5 swaps them
        let m = Int::from(2);
        let s = MonicQuad::new(
            Quad::from_int(-15, m.clone()),
            Quad::new(rat_int(48), rat_int(5), m.clone()),
        );
        let cur = C2D4Curve::new(
            rat_int(5),
            m.clone(),
            MonicQuad::new(Quad::zero(m.clone()), Quad::from_int(-2, m.clone())),
            s.clone(),
            s.conj(),
        )
        .unwrap();
        // δ̂₁ = 200/Δ² = 1/225 here, a square, hence subtype (b)
        let lab = label_of(&cur, 5).unwrap();
        assert_eq!(lab.render(), "1x~_{1}1(b)");
        assert_eq!((lab.t, lab.r), (1, 0));
    }

    #[test]
    fn three_pure_twins_make_u() {
        let cur = rational_curve(2, [(3, -3), (10, -8), (2, 14)]);
        let lab = label_of(&cur, 3).unwrap();
        assert_eq!(lab.render(), "U_{2,4,2}^-(a)");
    }

    #[test]
    fn separate_pure_twins() {
        let cur = rational_curve(1, [(3, -3), (1, 8), (2, 51)]);
        let lab = label_of(&cur, 7).unwrap();
        assert_eq!(lab.render(), "I_{2,4}^{-,+}(a)");
        assert_eq!(lab.r, 2);
    }

    #[test]
    fn crossed_twins_inside_threes() {
        let cur = rational_curve(3, [(0, 1), (3, 12), (4, 13)]);
        let lab = label_of(&cur, 3).unwrap();
        assert_eq!(lab.render(), "I_{2}^+x_{1}I_{2}^-(a)");
    }
}
