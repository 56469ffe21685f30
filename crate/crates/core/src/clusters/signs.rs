//! Twin signs: the ± decorations attached to twins in the type labels.
//!
//! For a twin 𝔠 = {ρ_i, ρ_j} the quantity θ² = c·∏_{r∉𝔠}(z − r), with z the
//! midpoint of the twin, is Galois-stable whenever the twin is, and its
//! square class is the twin's sign. Frobenius-swapped twins only carry a
//! joint sign, the class of θ_𝔞²·θ_𝔟². When the whole root set splits into
//! three twins the signs degenerate: each equals the square class of c.

use std::collections::BTreeMap;

use super::picture::{ClusterPicture, ALL};
use super::roots::EmbeddedRoots;
use crate::arith::rational::{rat, unit_part};
use crate::arith::tower::{Elem, Tower};
use crate::model::curve::C2D4Curve;
use crate::{Error, Result};

/// Signs per twin mask. `None` means the class was not defined on this model
/// (odd valuation, or θ² not rational); the classifier decides whether that
/// is fatal.
#[derive(Clone, Debug, Default)]
pub struct TwinSigns {
    pub fixed: BTreeMap<u8, Option<i8>>,
    /// The Frobenius-swapped pair, if any, with its joint sign.
    pub joint: Option<(u8, u8, Option<i8>)>,
}

impl TwinSigns {
    pub fn fixed_sign(&self, mask: u8) -> Result<i8> {
        match self.fixed.get(&mask) {
            Some(Some(s)) => Ok(*s),
            Some(None) => Err(Error::Internal("twin sign has odd valuation".into())),
            None => Err(Error::Internal("no sign recorded for a fixed twin".into())),
        }
    }

    pub fn joint_sign(&self, a: u8, b: u8) -> Result<i8> {
        match self.joint {
            Some((x, y, s)) if (x, y) == (a, b) || (x, y) == (b, a) => {
                s.ok_or_else(|| Error::Internal("joint twin sign has odd valuation".into()))
            }
            _ => Err(Error::Internal("no sign recorded for a swapped twin pair".into())),
        }
    }
}

fn theta_sq(tw: &Tower, curve: &C2D4Curve, emb: &EmbeddedRoots, mask: u8) -> Result<Elem> {
    let inside: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
    let z = tw.mul_rat(&tw.add(&emb.roots[inside[0]], &emb.roots[inside[1]])?, &rat(1, 2));
    let mut acc = tw.from_rat(&curve.c);
    for k in 0..6 {
        if mask >> k & 1 == 0 {
            acc = tw.mul(&acc, &tw.sub(&z, &emb.roots[k])?);
        }
    }
    Ok(acc)
}

fn square_class(tw: &Tower, e: &Elem) -> Result<Option<i8>> {
    match tw.rational_square_class(e) {
        Ok((v, leg)) => Ok(if v % 2 == 0 { Some(leg) } else { None }),
        // θ² need not be rational on models outside the supported families;
        // undecided here, fatal only if the classifier ends up needing it.
        Err(Error::Internal(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn twin_signs(
    tw: &Tower,
    curve: &C2D4Curve,
    emb: &EmbeddedRoots,
    pic: &ClusterPicture,
) -> Result<TwinSigns> {
    let mut out = TwinSigns::default();
    let twins: Vec<usize> =
        (0..pic.clusters.len()).filter(|&i| pic.clusters[i].size() == 2).collect();
    if twins.is_empty() {
        return Ok(out);
    }

    let top_children = pic.children(ALL);
    if top_children.len() == 3 && top_children.iter().all(|m| m.count_ones() == 2) {
        let (vc, uc) = unit_part(&curve.c, &tw.p);
        let cls =
            if vc % 2 == 0 { Some(crate::arith::hilbert::legendre_rat(&uc, &tw.p)) } else { None };
        for &i in &twins {
            out.fixed.insert(pic.clusters[i].members, cls);
        }
        return Ok(out);
    }

    let mut done = vec![false; pic.clusters.len()];
    for &i in &twins {
        if done[i] {
            continue;
        }
        done[i] = true;
        let mask = pic.clusters[i].members;
        // A twin moved by inertia has no stable midpoint; such pictures are
        // rejected as non-semistable before any sign is needed.
        if pic.inertia[i] != i {
            continue;
        }
        let j = pic.frob[i];
        if j == i {
            let th = theta_sq(tw, curve, emb, mask)?;
            out.fixed.insert(mask, square_class(tw, &th)?);
        } else {
            done[j] = true;
            let other = pic.clusters[j].members;
            if pic.inertia[j] != j {
                continue;
            }
            let prod =
                tw.mul(&theta_sq(tw, curve, emb, mask)?, &theta_sq(tw, curve, emb, other)?);
            out.joint = Some((mask, other, square_class(tw, &prod)?));
        }
    }
    Ok(out)
}
