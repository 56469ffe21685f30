//! Möbius rebalancing: transform a model until its cluster picture is one
//! of the shapes the classifier reads directly.
//!
//! Clusters of size 4 or 5, and a lone or unevenly matched pair of
//! 3-clusters, are artifacts of the model rather than the curve. A size-4/5
//! cluster dissolves under the substitution x ↦ p^d/(x − z) with z a point
//! at its full depth d; a deep 3-cluster trades depth with the rest of the
//! picture under the same substitution with z at partial depth. Candidate
//! centers are swept over the residues inside the disc and a move is kept
//! only when the picture demonstrably simplifies.

use super::picture::ClusterPicture;
use super::roots;
use super::{analyze, Analysis};
use crate::arith::quad::Quad;
use crate::arith::rational::{pow_rat, rat_int};
use crate::arith::tower::escalating_default;
use crate::arith::{Int, Rat};
use crate::model::curve::C2D4Curve;
use crate::model::mobius::Mobius;
use crate::{Error, Result};
use num::ToPrimitive;

#[derive(Clone, Debug)]
pub struct Balanced {
    pub curve: C2D4Curve,
    pub analysis: Analysis,
    /// Inversions applied; 0 means the input picture was already readable.
    pub moves: usize,
}

fn has_substructure(pic: &ClusterPicture, mask: u8) -> bool {
    pic.proper_subclusters().any(|c| c.members != mask && c.members & mask == c.members)
}

/// Shapes the classifier accepts: normalized top depth, no 4- or 5-cluster
/// with structure to surface, 3-clusters only as an equal-depth pair.
fn direct(pic: &ClusterPicture) -> bool {
    if pic.top_depth2 != 0 || !pic.of_size(4).is_empty() {
        return false;
    }
    let fives = pic.of_size(5);
    if let [five] = fives[..] {
        return !has_substructure(pic, five.members);
    }
    let threes = pic.of_size(3);
    match threes[..] {
        [] => true,
        [a, b] => a.depth2 == b.depth2,
        _ => false,
    }
}

/// Lexicographic progress measure: size-5 count, size-4 count, 3-cluster
/// depth imbalance (all relative to the top, so scaling is neutral).
fn metric(pic: &ClusterPicture) -> (usize, usize, i64) {
    let threes = pic.of_size(3);
    let d3 = match threes[..] {
        [a] => a.depth2 - pic.top_depth2,
        [a, b] => (a.depth2 - b.depth2).abs(),
        _ => 0,
    };
    (pic.of_size(5).len(), pic.of_size(4).len(), d3)
}

/// Rescale so the top depth lands in {0, 1}.
fn normalize_scale(cur: C2D4Curve, a: Analysis, p: &Int) -> Result<(C2D4Curve, Analysis)> {
    let top2 = a.pic.top_depth2;
    let k = if top2 < 0 { (-top2 + 1) / 2 } else { -(top2 / 2) };
    if k == 0 {
        return Ok((cur, a));
    }
    let next = Mobius::scaling(pow_rat(p, k)).apply(&cur)?.centered();
    let na = analyze(&next, p)?;
    if na.pic.top_depth2 != top2 + 2 * k {
        return Err(Error::Internal("rescaling moved the top depth unexpectedly".into()));
    }
    Ok((next, na))
}

/// A truncated rational point at depth ≥ k inside the cluster of the given
/// size (and depth, when a tie is possible), located afresh at each
/// precision so the choice never leans on a stale root indexing.
fn center_of(
    cur: &C2D4Curve,
    p: &Int,
    size: u32,
    depth2: Option<i64>,
    k: u32,
) -> Result<Int> {
    escalating_default(p, |tw| {
        let emb = roots::embed(tw, cur)?;
        let d = roots::distance_matrix(tw, &emb.roots)?;
        let pic = ClusterPicture::build(&emb, d)?;
        let target = pic
            .clusters
            .iter()
            .find(|c| c.size() == size && depth2.map_or(true, |w| c.depth2 == w))
            .ok_or_else(|| Error::Internal("inversion target vanished".into()))?;
        roots::stable_center(tw, &emb, target.members, k)
    })
}

fn pole_mobius(p: &Int, e: i64, z: Int) -> Mobius {
    Mobius::new(rat_int(0), pow_rat(p, e), rat_int(1), -Rat::from(z))
}

fn is_root(cur: &C2D4Curve, z: &Int) -> bool {
    let zq = Quad::from_rat(Rat::from(z.clone()), cur.m.clone());
    [&cur.r, &cur.s, &cur.t].iter().any(|q| q.eval(&zq).is_zero())
}

/// Nudge a candidate center off an exact root. Steps of p^{e+1} stay inside
/// the same residue disc at level e and there are more steps than roots.
fn dodge(cur: &C2D4Curve, p: &Int, e: i64, mut z: Int) -> Int {
    let bump = pow_int(p, e + 1);
    for _ in 0..8 {
        if !is_root(cur, &z) {
            break;
        }
        z += &bump;
    }
    z
}

/// Candidate substitutions for one step, best guesses first.
fn candidates(cur: &C2D4Curve, pic: &ClusterPicture, p: &Int) -> Result<Vec<Mobius>> {
    let ucap = p.to_i64().unwrap_or(7).min(7);
    let mut out = Vec::new();

    let big = pic.of_size(5).into_iter().chain(pic.of_size(4)).next().cloned();
    if let Some(target) = big {
        if target.depth2 % 2 != 0 {
            return Ok(out);
        }
        let d = target.depth2 / 2;
        let z0 = center_of(cur, p, target.size(), None, d as u32)?;
        for u in 0..ucap {
            let z = dodge(cur, p, d, &z0 + Int::from(u) * pow_int(p, d));
            out.push(pole_mobius(p, d, z));
        }
        return Ok(out);
    }

    if pic.top_depth2 != 0 {
        return Ok(out);
    }
    let threes = pic.of_size(3);
    let (shallow2, deep2) = match threes[..] {
        [a] => (0, a.depth2),
        [a, b] if a.depth2 != b.depth2 => (a.depth2.min(b.depth2), a.depth2.max(b.depth2)),
        _ => return Ok(out),
    };
    let diff = deep2 - shallow2;
    if diff % 4 != 0 {
        return Ok(out);
    }
    let e = diff / 4;
    let z0 = center_of(cur, p, 3, Some(deep2), (e + 1) as u32)?;
    for u in 1..ucap {
        let z = dodge(cur, p, e, &z0 + Int::from(u) * pow_int(p, e));
        out.push(pole_mobius(p, e, z));
    }
    Ok(out)
}

fn pow_int(p: &Int, e: i64) -> Int {
    p.pow(e as u32)
}

pub fn balance(curve: &C2D4Curve, p: &Int) -> Result<Balanced> {
    let cur = curve.centered();
    let a = analyze(&cur, p)?;
    let (cur, a) = normalize_scale(cur, a, p)?;
    let budget = 6 * (p.to_i64().unwrap_or(7).min(7) + 1);
    let mut tried = 0;
    descend(cur, a, p, &mut tried, budget, 0)?
        .ok_or_else(|| Error::Unsupported("cluster picture does not balance".into()))
}

/// Depth-first over metric-decreasing moves, so a candidate that simplifies
/// the picture into a dead end is abandoned rather than fatal.
fn descend(
    cur: C2D4Curve,
    a: Analysis,
    p: &Int,
    tried: &mut i64,
    budget: i64,
    moves: usize,
) -> Result<Option<Balanced>> {
    if direct(&a.pic) {
        return Ok(Some(Balanced { curve: cur, analysis: a, moves }));
    }
    for mb in candidates(&cur, &a.pic, p)? {
        *tried += 1;
        if *tried > budget {
            return Err(Error::Unsupported("balancing budget exhausted".into()));
        }
        let next = match mb.apply(&cur) {
            Ok(c) => c.centered(),
            Err(Error::Internal(m)) => return Err(Error::Internal(m)),
            Err(_) => continue,
        };
        let (ncur, na) = match analyze(&next, p).and_then(|na| normalize_scale(next, na, p)) {
            Ok(pair) => pair,
            Err(Error::Internal(m)) => return Err(Error::Internal(m)),
            Err(_) => continue,
        };
        if metric(&na.pic) < metric(&a.pic) {
            if let Some(done) = descend(ncur, na, p, tried, budget, moves + 1)? {
                return Ok(Some(done));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quad::Quad;
    use crate::arith::rational::rat_int;
    use crate::model::curve::MonicQuad;
    use crate::model::testutil::family_rep;

    fn rational_curve(c: i64, pairs: [(i64, i64); 3]) -> C2D4Curve {
        let q = |n: i64| Quad::from_int(n, Int::from(1));
        let quad = |(x, y): (i64, i64)| MonicQuad::new(q(-(x + y)), q(x * y));
        C2D4Curve::new(
            rat_int(c),
            Int::from(1),
            quad(pairs[0]),
            quad(pairs[1]),
            quad(pairs[2]),
        )
        .unwrap()
    }

    #[test]
    fn already_direct_needs_no_moves() {
        let b = balance(&family_rep(), &Int::from(5)).unwrap();
        assert_eq!(b.moves, 0);
        assert_eq!(b.analysis.pic.of_size(2).len(), 1);
    }

    #[test]
    fn deep_top_is_rescaled_away() {
        let cur = Mobius::scaling(rat_int(5)).apply(&family_rep()).unwrap();
        let b = balance(&cur, &Int::from(5)).unwrap();
        assert_eq!(b.moves, 0);
        assert_eq!(b.analysis.pic.top_depth2, 0);
        assert_eq!(b.analysis.pic.of_size(2)[0].depth2, 2);
    }

    #[test]
    fn inverted_family_model_balances_back() {
        // a pole deep inside the ruby twin inflates the picture to a
        // 5-cluster enclosing a 4-cluster; balancing must surface the twin
        let mb = Mobius::new(rat_int(0), rat_int(25), rat_int(1), rat_int(-30));
        let cur = mb.apply(&family_rep()).unwrap();
        let b = balance(&cur, &Int::from(5)).unwrap();
        assert!(b.moves >= 1);
        let twins = b.analysis.pic.of_size(2);
        assert_eq!(twins.len(), 1);
        assert_eq!(twins[0].depth2, 2);
        assert_eq!(ClusterPicture::colours(twins[0].members), vec![0, 0]);
    }

    #[test]
    fn odd_imbalance_is_refused() {
        // lone 3-cluster at doubled depth 2: no substitution splits it evenly
        let cur = rational_curve(1, [(0, 5), (10, 1), (2, 3)]);
        assert!(matches!(
            balance(&cur, &Int::from(5)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn lone_three_cluster_splits_evenly() {
        // {0,25,50} at doubled depth 4 over ℚ₅ plus three separate singles
        let cur = rational_curve(1, [(0, 1), (25, 2), (50, 3)]);
        let b = balance(&cur, &Int::from(5)).unwrap();
        assert_eq!(b.moves, 1);
        let threes = b.analysis.pic.of_size(3);
        assert_eq!(threes.len(), 2);
        assert_eq!(threes[0].depth2, 2);
        assert_eq!(threes[1].depth2, 2);
    }
}
