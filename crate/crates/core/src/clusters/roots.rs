//! Embedding the six roots into a p-adic square-root ladder and reading off
//! the Galois action as permutations.

use crate::arith::quad::Quad;
use crate::arith::tower::{Elem, Tower};
use crate::arith::Int;
use crate::model::C2D4Curve;
use crate::{Error, Result};

/// Colour classes by root index: 0,1 ruby (r), 2,3 sapphire (s), 4,5 turquoise (t).
pub fn colour(i: usize) -> u8 {
    (i / 2) as u8
}

pub const COLOUR_LETTER: [char; 3] = ['A', 'B', 'C'];

/// The six roots in the fixed order [α₁, β₁, α₂, β₂, α₃, β₃] together with
/// the permutations induced by the Frobenius lift and the inertia generator.
pub struct EmbeddedRoots {
    pub roots: Vec<Elem>,
    pub frob: [usize; 6],
    pub inertia: [usize; 6],
}

fn quad_elem(tw: &Tower, q: &Quad, sqrt_m: &Elem) -> Result<Elem> {
    let a = tw.from_rat(&q.a);
    let b = tw.from_rat(&q.b);
    tw.add(&a, &tw.mul(&b, sqrt_m))
}

/// Match an image element against the root list. A true match differs by an
/// exact zero, which the valuation reader reports as a hidden (precision)
/// value; a unique hidden candidate is the match, several demand more digits.
fn match_root(tw: &Tower, img: &Elem, roots: &[Elem]) -> Result<usize> {
    let mut hit = None;
    for (j, r) in roots.iter().enumerate() {
        let d = tw.sub(img, r)?;
        match tw.vhalf(&d) {
            Ok(_) => {}
            Err(Error::Precision(..)) => {
                if hit.replace(j).is_some() {
                    return Err(Error::Precision(0, "ambiguous galois root match".into()));
                }
            }
            Err(e) => return Err(e),
        }
    }
    hit.ok_or_else(|| Error::Internal("galois image matches no root".into()))
}

fn permutation(
    tw: &Tower,
    roots: &[Elem],
    mut image: impl FnMut(&Elem) -> Result<Elem>,
) -> Result<[usize; 6]> {
    let mut map = [0usize; 6];
    let mut seen = [false; 6];
    for i in 0..6 {
        let img = image(&roots[i])?;
        let j = match_root(tw, &img, roots)?;
        if std::mem::replace(&mut seen[j], true) {
            return Err(Error::Precision(0, "galois action is not a bijection yet".into()));
        }
        map[i] = j;
    }
    Ok(map)
}

/// Both σ and the inertia generator must preserve ruby and act on the
/// sapphire/turquoise pairs blockwise (fixing or swapping the two quadratics).
fn check_blocks(map: &[usize; 6], what: &str) -> Result<()> {
    let ok = map[0] < 2
        && map[1] < 2
        && (((2..4).contains(&map[2]) && (2..4).contains(&map[3]))
            || ((4..6).contains(&map[2]) && (4..6).contains(&map[3])))
        && (((2..4).contains(&map[4]) && (2..4).contains(&map[5]))
            || ((4..6).contains(&map[4]) && (4..6).contains(&map[5])));
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!("{what} does not respect the colour blocks: {map:?}")))
    }
}

/// Embed the roots of c·r·s·t into the ladder and freeze the Galois data.
/// The curve must have distinct roots (nonzero Δ); callers gate on that.
pub fn embed(tw: &mut Tower, curve: &C2D4Curve) -> Result<EmbeddedRoots> {
    let sqrt_m = {
        let m = tw.from_rat(&crate::arith::Rat::from_integer(curve.m.clone()));
        tw.sqrt(&m)?
    };
    let mut roots = Vec::with_capacity(6);
    for q in [&curve.r, &curve.s, &curve.t] {
        let b = quad_elem(tw, &q.b, &sqrt_m)?;
        let c = quad_elem(tw, &q.c, &sqrt_m)?;
        let (r1, r2) = tw.quad_roots(&b, &c)?;
        roots.push(r1);
        roots.push(r2);
    }
    tw.freeze_sigma()?;
    let frob = permutation(tw, &roots, |e| tw.frobenius(e))?;
    let inertia = permutation(tw, &roots, |e| Ok(tw.inertia(e)))?;
    check_blocks(&frob, "frobenius")?;
    check_blocks(&inertia, "inertia")?;
    Ok(EmbeddedRoots { roots, frob, inertia })
}

/// Doubled valuations of all pairwise root differences, indexed [i][j].
pub fn distance_matrix(tw: &Tower, roots: &[Elem]) -> Result<[[i64; 6]; 6]> {
    let mut d = [[0i64; 6]; 6];
    for i in 0..6 {
        for j in (i + 1)..6 {
            let v = tw.vhalf(&tw.sub(&roots[i], &roots[j])?)?;
            d[i][j] = v;
            d[j][i] = v;
        }
    }
    Ok(d)
}

/// Rational approximation of the centre of a Galois-stable set of roots,
/// good modulo p^k. Averages one member's orbit under the recorded
/// permutations; the orbit has 2-power size, so the division is exact.
pub fn stable_center(
    tw: &Tower,
    emb: &EmbeddedRoots,
    members: u8,
    k: u32,
) -> Result<Int> {
    let first = (0..6).find(|i| members >> i & 1 == 1).expect("nonempty member set");
    let mut orbit = 1u8 << first;
    loop {
        let mut next = orbit;
        for i in 0..6 {
            if orbit >> i & 1 == 1 {
                next |= 1 << emb.frob[i];
                next |= 1 << emb.inertia[i];
            }
        }
        if next == orbit {
            break;
        }
        orbit = next;
    }
    if orbit & !members != 0 {
        return Err(Error::Internal("orbit escapes the cluster".into()));
    }
    let mut sum = tw.zero();
    let mut n = 0i64;
    for i in 0..6 {
        if orbit >> i & 1 == 1 {
            sum = tw.add(&sum, &emb.roots[i])?;
            n += 1;
        }
    }
    debug_assert!(n.count_ones() == 1, "galois orbit size must be a 2-power");
    let avg = tw.mul_rat(&sum, &crate::arith::Rat::new(Int::from(1), Int::from(n)));
    tw.rational_approx(&avg, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat_int, val_rat};
    use crate::arith::tower::escalating_default;
    use crate::model::parse::parse_curve;
    use crate::model::testutil::family_rep;
    use num::{Integer, Zero};

    fn embed_at(curve: &C2D4Curve, p: i64) -> (Vec<i64>, [usize; 6], [usize; 6]) {
        let p = Int::from(p);
        escalating_default(&p, |tw| {
            let emb = embed(tw, curve)?;
            let vals: Vec<i64> = emb
                .roots
                .iter()
                .map(|r| tw.vhalf(r))
                .collect::<Result<_>>()?;
            Ok((vals, emb.frob, emb.inertia))
        })
        .unwrap()
    }

    #[test]
    fn family_roots_at_five() {
        // centered family model: r = x² − 25, s = x² + 16x + 48, t = x² + 4x − 12
        let cur = family_rep().centered();
        let (vals, frob, inertia) = embed_at(&cur, 5);
        // ruby roots ±5 have valuation 1 (doubled 2), the others are units
        let mut doubled: Vec<i64> = vals;
        doubled.sort();
        assert_eq!(doubled, vec![0, 0, 0, 0, 2, 2]);
        // everything is rational over ℚ₅, both actions are trivial
        assert_eq!(frob, [0, 1, 2, 3, 4, 5]);
        assert_eq!(inertia, [0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn conjugate_quadratics_swap_under_frobenius() {
        // m = 2 is a non-residue mod 5, so σ swaps s and t
        let cur = parse_curve(
            "c = 1\nm = 2\nr = [0, -1]\ns = [[0,1], [1,0]]\nt = [[0,-1], [1,0]]\n",
        )
        .unwrap();
        let (_, frob, inertia) = embed_at(&cur, 5);
        assert!(frob[2] >= 4 && frob[3] >= 4, "frobenius must swap s and t: {frob:?}");
        assert_eq!(inertia, [0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn ramified_twin_distances() {
        // s = x² − 3 over ℚ₃: roots ±√3 at doubled valuation 1
        let cur = parse_curve(
            "c = 1\nm = 1\nr = [-5, 4]\ns = [0, -3]\nt = [-7, 10]\n",
        )
        .unwrap();
        let p = Int::from(3);
        let (d, inertia) = escalating_default(&p, |tw| {
            let emb = embed(tw, &cur)?;
            Ok((distance_matrix(tw, &emb.roots)?, emb.inertia))
        })
        .unwrap();
        assert_eq!(d[2][3], 1, "±√3 differ by valuation 1/2 (doubled 1)");
        assert_eq!(inertia[2], 3, "inertia swaps ±√3");
        assert_eq!(d[0][1], 2, "ruby roots 1, 4 differ by valuation 1");
    }

    #[test]
    fn stable_center_lands_in_the_disc() {
        // family at 5, ruby twin {5, −5}: split roots give a one-element
        // orbit, so the centre is one of the roots mod 5³
        let cur = family_rep().centered();
        let p = Int::from(5);
        let z = escalating_default(&p, |tw| {
            let emb = embed(tw, &cur)?;
            stable_center(tw, &emb, 0b000011, 3)
        })
        .unwrap();
        let m125 = Int::from(125);
        let hits_root = [Int::from(5), Int::from(120)].contains(&z.mod_floor(&m125));
        assert!(hits_root, "centre {z} is not a twin root mod 125");
        // a frobenius-glued pair averages to the rational midpoint:
        // s = x² − 2 has roots ±√2, irrational over ℚ₅ (2 is a non-residue)
        let cur2 = parse_curve("c = 1\nm = 1\nr = [0, -1]\ns = [0, -2]\nt = [9, 14]\n").unwrap();
        let z2 = escalating_default(&p, |tw| {
            let emb = embed(tw, &cur2)?;
            stable_center(tw, &emb, 0b001100, 3)
        })
        .unwrap();
        assert_eq!(z2, Int::zero());
        let _ = val_rat(&rat_int(1), &p);
    }
}
