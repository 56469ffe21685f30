//! Cluster pictures: which subsets of the six roots cut out discs, at what
//! depths, and how the Galois action permutes them. Valuations are doubled
//! throughout so one ramified step stays integral.

use super::roots::{colour, EmbeddedRoots, COLOUR_LETTER};
use crate::{Error, Result};

pub const ALL: u8 = 0b11_1111;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub members: u8,
    /// Doubled absolute depth: min pairwise valuation inside.
    pub depth2: i64,
}

impl Cluster {
    pub fn size(&self) -> u32 {
        self.members.count_ones()
    }
}

#[derive(Clone, Debug)]
pub struct ClusterPicture {
    /// Proper clusters (size ≥ 2) including the full root set, sorted by
    /// descending size then member mask.
    pub clusters: Vec<Cluster>,
    pub top_depth2: i64,
    /// Index maps induced by the root permutations.
    pub frob: Vec<usize>,
    pub inertia: Vec<usize>,
    /// Doubled valuations of root differences.
    pub dist2: [[i64; 6]; 6],
}

fn apply_perm_mask(perm: &[usize; 6], mask: u8) -> u8 {
    let mut out = 0u8;
    for i in 0..6 {
        if mask >> i & 1 == 1 {
            out |= 1 << perm[i];
        }
    }
    out
}

impl ClusterPicture {
    pub fn build(emb: &EmbeddedRoots, dist2: [[i64; 6]; 6]) -> Result<ClusterPicture> {
        let mut clusters = Vec::new();
        for mask in 3u8..=ALL {
            let n = mask.count_ones();
            if n < 2 {
                continue;
            }
            let inside: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
            let mut inner = i64::MAX;
            for (k, &i) in inside.iter().enumerate() {
                for &j in &inside[k + 1..] {
                    inner = inner.min(dist2[i][j]);
                }
            }
            let mut outer = i64::MIN;
            for &i in &inside {
                for j in 0..6 {
                    if mask >> j & 1 == 0 {
                        outer = outer.max(dist2[i][j]);
                    }
                }
            }
            if mask == ALL || inner > outer {
                clusters.push(Cluster { members: mask, depth2: inner });
            }
        }
        clusters.sort_by_key(|c| (std::cmp::Reverse(c.size()), c.members));
        let top_depth2 = clusters
            .iter()
            .find(|c| c.members == ALL)
            .expect("full set is always a cluster")
            .depth2;
        let index_map = |perm: &[usize; 6]| -> Result<Vec<usize>> {
            clusters
                .iter()
                .map(|c| {
                    let img = apply_perm_mask(perm, c.members);
                    clusters
                        .iter()
                        .position(|d| d.members == img)
                        .ok_or_else(|| Error::Internal("galois image of a cluster is not a cluster".into()))
                })
                .collect()
        };
        let frob = index_map(&emb.frob)?;
        let inertia = index_map(&emb.inertia)?;
        Ok(ClusterPicture { clusters, top_depth2, frob, inertia, dist2 })
    }

    pub fn proper_subclusters(&self) -> impl Iterator<Item = &Cluster> {
        self.clusters.iter().filter(|c| c.members != ALL)
    }

    /// Clusters of exactly the given size, top included when size = 6.
    pub fn of_size(&self, n: u32) -> Vec<&Cluster> {
        self.clusters.iter().filter(|c| c.size() == n).collect()
    }

    /// Maximal proper subclusters of `parent`, plus uncovered singleton
    /// member masks; together these are the children.
    pub fn children(&self, parent: u8) -> Vec<u8> {
        let mut out: Vec<u8> = Vec::new();
        for c in &self.clusters {
            if c.members != parent && c.members & parent == c.members {
                if !self
                    .clusters
                    .iter()
                    .any(|d| d.members != parent && d.members != c.members
                        && d.members & parent == d.members
                        && c.members & d.members == c.members)
                {
                    out.push(c.members);
                }
            }
        }
        let covered: u8 = out.iter().fold(0, |a, m| a | m);
        for i in 0..6 {
            if parent >> i & 1 == 1 && covered >> i & 1 == 0 {
                out.push(1 << i);
            }
        }
        out.sort();
        out
    }

    /// A cluster is principal if it has at least 3 roots, except the full
    /// set when it splits into exactly two children.
    pub fn is_principal(&self, c: &Cluster) -> bool {
        c.size() >= 3 && !(c.members == ALL && self.children(ALL).len() == 2)
    }

    /// Doubled valuation v(x − 𝔰) for a root x outside the cluster; the
    /// choice of member is immaterial by the ultrametric inequality.
    pub fn dist2_to(&self, x: usize, members: u8) -> i64 {
        (0..6)
            .filter(|i| members >> i & 1 == 1)
            .map(|i| self.dist2[x][i])
            .min()
            .expect("nonempty cluster")
    }

    /// Colour multiset of a mask as sorted colour codes (0 ruby, 1, 2).
    pub fn colours(mask: u8) -> Vec<u8> {
        let mut v: Vec<u8> = (0..6).filter(|i| mask >> i & 1 == 1).map(colour).collect();
        v.sort();
        v
    }

    /// Semistability of the curve the picture came from: every cluster is
    /// inertia-stable, and principal clusters have integral depth and even
    /// total contribution v(c) + |𝔰|·d_𝔰 + Σ_outside v(r − 𝔰). `vc2` is the
    /// doubled valuation of the leading constant. Returns the failure
    /// reason, if any.
    pub fn semistable(&self, vc2: i64) -> std::result::Result<(), String> {
        for (idx, c) in self.clusters.iter().enumerate() {
            if self.inertia[idx] != idx {
                return Err(format!(
                    "cluster {} moves under inertia",
                    render_mask(c.members)
                ));
            }
        }
        for c in &self.clusters {
            if !self.is_principal(c) {
                continue;
            }
            if c.depth2 % 2 != 0 {
                return Err(format!(
                    "principal cluster {} has non-integral depth {}/2",
                    render_mask(c.members),
                    c.depth2
                ));
            }
            let mut nu2 = vc2 + c.size() as i64 * c.depth2;
            for x in 0..6 {
                if c.members >> x & 1 == 0 {
                    nu2 += self.dist2_to(x, c.members);
                }
            }
            if nu2 % 4 != 0 {
                return Err(format!(
                    "principal cluster {} has odd contribution {}/2",
                    render_mask(c.members),
                    nu2
                ));
            }
        }
        Ok(())
    }
}

pub fn render_mask(mask: u8) -> String {
    (0..6)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| COLOUR_LETTER[colour(i) as usize])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::tower::escalating_default;
    use crate::arith::Int;
    use crate::clusters::roots::{distance_matrix, embed};
    use crate::model::parse::parse_curve;
    use crate::model::testutil::family_rep;
    use crate::model::C2D4Curve;

    pub fn picture_of(cur: &C2D4Curve, p: i64) -> ClusterPicture {
        let p = Int::from(p);
        escalating_default(&p, |tw| {
            let emb = embed(tw, cur)?;
            let d = distance_matrix(tw, &emb.roots)?;
            ClusterPicture::build(&emb, d)
        })
        .unwrap()
    }

    #[test]
    fn family_picture_at_five() {
        let pic = picture_of(&family_rep().centered(), 5);
        let proper: Vec<_> = pic.proper_subclusters().collect();
        assert_eq!(proper.len(), 1);
        assert_eq!(proper[0].members, 0b000011);
        assert_eq!(proper[0].depth2, 2);
        assert_eq!(pic.top_depth2, 0);
        assert!(pic.semistable(0).is_ok());
    }

    #[test]
    fn family_picture_at_seven_is_not_semistable() {
        let pic = picture_of(&family_rep().centered(), 7);
        // lone ruby–sapphire–turquoise 3-cluster {−5, −12, 2} at depth 1
        let threes = pic.of_size(3);
        assert_eq!(threes.len(), 1);
        assert_eq!(threes[0].depth2, 2);
        assert_eq!(ClusterPicture::colours(threes[0].members), vec![0, 1, 2]);
        let err = pic.semistable(0).unwrap_err();
        assert!(err.contains("odd contribution"), "{err}");
    }

    #[test]
    fn family_picture_at_three_is_not_semistable() {
        let pic = picture_of(&family_rep().centered(), 3);
        let threes = pic.of_size(3);
        assert_eq!(threes.len(), 1);
        // {5, −4, 2} at depth 1 with the sub-twin {5, −4} at depth 2
        assert_eq!(threes[0].depth2, 2);
        let twins = pic.of_size(2);
        assert_eq!(twins.len(), 2);
        assert!(pic.semistable(0).is_err());
    }

    #[test]
    fn spec_two_threes_example() {
        // y² = x(x−1)(x−3)(x−4)(x+3)(x+2) over ℚ₃: clusters {0,3,−3} and
        // {1,4,−2} at depth 1
        let cur = parse_curve("c = 1\nm = 1\nr = [-1, 0]\ns = [-7, 12]\nt = [5, 6]\n").unwrap();
        let pic = picture_of(&cur, 3);
        let threes = pic.of_size(3);
        assert_eq!(threes.len(), 2);
        assert_eq!(threes[0].depth2, 2);
        assert_eq!(threes[1].depth2, 2);
        assert_eq!(ClusterPicture::colours(threes[0].members), vec![0, 1, 2]);
        assert_eq!(pic.top_depth2, 0);
        assert_eq!(pic.children(ALL).len(), 2);
        let three = threes[0].clone();
        assert!(pic.is_principal(&three));
        let top = pic.clusters.iter().find(|c| c.members == ALL).unwrap().clone();
        assert!(!pic.is_principal(&top));
        // with a unit constant the 3-cluster contributes ν = 3, so this
        // model is not semistable; v(c) = 1 repairs the parity
        assert!(pic.semistable(0).is_err());
        assert!(pic.semistable(2).is_ok());
    }

    #[test]
    fn ramified_twin_half_depth() {
        let cur = parse_curve("c = 1\nm = 1\nr = [-5, 4]\ns = [0, -3]\nt = [-7, 10]\n").unwrap();
        let pic = picture_of(&cur, 3);
        let twins = pic.of_size(2);
        assert_eq!(twins.len(), 3);
        let sapphire = twins
            .iter()
            .find(|c| ClusterPicture::colours(c.members) == [1, 1])
            .unwrap();
        assert_eq!(sapphire.depth2, 1, "twin {{±√3}} sits at depth 1/2");
        // inertia permutes ±√3 inside the twin, so the picture is stable
        assert!(pic.semistable(0).is_ok());
    }
}
