//! Cluster pictures of the six roots at odd primes: construction, twin
//! signs, balancing transformations, and classification into the local
//! type families.

pub mod classify;
pub mod picture;
pub mod rebalance;
pub mod roots;
pub mod signs;

pub use classify::{classify, rational_context, RationalContext, TypeKind, TypeLabel};
pub use picture::{Cluster, ClusterPicture};
pub use rebalance::{balance, Balanced};
pub use signs::TwinSigns;

use crate::arith::tower::escalating_default;
use crate::arith::Int;
use crate::model::C2D4Curve;
use crate::Result;

/// Picture plus twin signs for one model, built at whatever precision the
/// ladder ends up needing.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub pic: ClusterPicture,
    pub signs: TwinSigns,
}

pub fn analyze(curve: &C2D4Curve, p: &Int) -> Result<Analysis> {
    escalating_default(p, |tw| {
        let emb = roots::embed(tw, curve)?;
        let d = roots::distance_matrix(tw, &emb.roots)?;
        let pic = ClusterPicture::build(&emb, d)?;
        let signs = signs::twin_signs(tw, curve, &emb, &pic)?;
        Ok(Analysis { pic, signs })
    })
}
