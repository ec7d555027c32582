//! Pullback of Mukai vectors to the K3 double cover.
//!
//! Only the image of the Enriques numerical lattice is modeled: coordinates
//! stay in the rank-10 basis while the intersection form doubles (a degree-2
//! cover doubles every intersection number). The last component becomes a
//! genuine integer because `χ(O) = 2` upstairs, and the torsion bit dies
//! (`π*K ~ 0`). Squares double under pullback, which is what feeds the
//! rank-coprimality transfer.

use crate::arith::gcd_i64;
use crate::divisor::DivisorClass;
use crate::lattice::{GramLattice, NumClass};
use crate::mukai::MukaiVector;
use crate::{Error, Result};

/// A Mukai vector on the covering K3, expressed in the downstairs basis
/// with the form doubled.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct K3MukaiVector {
    r: i64,
    d_num: NumClass,
    s: i64,
}

impl K3MukaiVector {
    pub fn new(r: i64, d_num: NumClass, s: i64) -> Self {
        Self { r, d_num, s }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d_num(&self) -> &NumClass {
        &self.d_num
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// `v² = 2rs - (D')²` with `(D')²` computed in the doubled form.
    pub fn k3_square(&self, lat: &GramLattice) -> i64 {
        let d2 = lat.pair(&self.d_num, &self.d_num);
        i64::try_from(2 * (self.r as i128) * (self.s as i128) - 2 * (d2 as i128))
            .expect("square exceeds i64")
    }
}

/// `π*(r, D, s) = (r, D', 2s)`: same coordinates, doubled form, `s' = t`.
pub fn pullback(v: &MukaiVector) -> K3MukaiVector {
    K3MukaiVector { r: v.r(), d_num: v.divisor().num.clone(), s: v.t() }
}

/// Hypotheses of the K3 existence theorem: positive rank and square 2.
pub fn kuleshov_realizable(lat: &GramLattice, w: &K3MukaiVector) -> bool {
    w.r > 0 && w.k3_square(lat) == 2
}

/// For odd rank, coprimality upstairs and downstairs agree:
/// `gcd(2·H·D, r) = 1` iff `gcd(H·D, r) = 1`.
pub fn coprime_transfer(
    lat: &GramLattice,
    h: &DivisorClass,
    d: &DivisorClass,
    r: i64,
) -> Result<bool> {
    if r.rem_euclid(2) == 0 {
        return Err(Error::EvenRank { r });
    }
    let hd = lat.pair(&h.num, &d.num);
    let upstairs = gcd_i64(2 * hd, r) == 1;
    debug_assert_eq!(upstairs, gcd_i64(hd, r) == 1);
    Ok(upstairs)
}
