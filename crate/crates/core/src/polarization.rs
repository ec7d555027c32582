//! Constructive search for a polarization pairing coprimely to the rank.
//!
//! Given an exceptional vector `v = (r, D, t)`, the square-1 identity
//! `r·t - D² = 1` forces `gcd(divisibility(D), r) = 1`: the divisibility
//! divides `D²` which is `-1 mod r`. So solving `X·D = divisibility(D)`
//! already gives a class whose pairing with `D` is coprime to `r`, and
//! adding multiples of `k·r·H` for an ample seed `H` never changes that
//! pairing mod `r`. The first multiple that passes the ample test with
//! square at least 6 is returned, wrapped in a certificate that can be
//! re-verified independently.

use alloc::vec::Vec;

use crate::arith::gcd_i64;
use crate::divisor::{is_ample_wrt, CurveTestSet, DivisorClass};
use crate::error::AmpleObstruction;
use crate::lattice::{GramLattice, NumClass};
use crate::mukai::MukaiVector;
use crate::{Error, Result};

/// `gcd(|H·D|, r) = 1`, with `gcd(0, r) = r`.
pub fn gcd_condition(lat: &GramLattice, h: &DivisorClass, d: &DivisorClass, r: i64) -> bool {
    assert!(r >= 1, "rank must be positive");
    gcd_i64(lat.pair(&h.num, &d.num), r) == 1
}

/// Everything needed to re-check a coprime-polarization claim.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolarizationCertificate {
    /// Solution of `X·D = divisibility(D)`.
    pub x: NumClass,
    /// Chosen multiple: `H' = X + k·r·Hseed`.
    pub k: i64,
    /// The certified polarization.
    pub h_prime: DivisorClass,
    /// Divisibility of `D` (0 only in the degenerate `D = 0` case).
    pub divisibility: i64,
    /// `gcd(H'·D, r)`; always 1 for a valid certificate.
    pub gcd_value: i64,
}

impl PolarizationCertificate {
    /// Re-derives every claim from scratch: the linear combination, the
    /// divisibility, the gcd, the mod-`r` stability of the pairing, and
    /// (outside the degenerate case) ampleness with square at least 6.
    pub fn verify(
        &self,
        lat: &GramLattice,
        v: &MukaiVector,
        hseed: &DivisorClass,
        tset: &CurveTestSet,
    ) -> bool {
        let r = v.r();
        if r <= 0 {
            return false;
        }
        let dnum = &v.divisor().num;
        let rebuilt = &self.x + &hseed.num.scaled(self.k * r);
        if rebuilt != self.h_prime.num {
            return false;
        }
        if lat.divisibility(dnum) != self.divisibility {
            return false;
        }
        let xd = lat.pair(&self.x, dnum);
        if xd != self.divisibility {
            return false;
        }
        let hd = lat.pair(&self.h_prime.num, dnum);
        if (hd - xd).rem_euclid(r) != 0 {
            return false;
        }
        if gcd_i64(hd, r) != 1 || self.gcd_value != 1 {
            return false;
        }
        if dnum.is_zero() {
            // r·t = 1 forces r = 1; any pairing is coprime to 1 and no
            // ampleness claim is made.
            return true;
        }
        is_ample_wrt(lat, &self.h_prime, tset) && self.h_prime.square(lat) >= 6
    }
}

/// Produces a certificate for an exceptional `v` and an ample seed, scanning
/// `H_k = X + k·r·Hseed` for `k = 0..=kmax`.
pub fn find_coprime_ample(
    lat: &GramLattice,
    v: &MukaiVector,
    hseed: &DivisorClass,
    tset: &CurveTestSet,
    kmax: i64,
) -> Result<PolarizationCertificate> {
    if !v.is_exceptional(lat) {
        return Err(Error::NotExceptional { r: v.r(), square: v.square(lat) });
    }
    if !is_ample_wrt(lat, hseed, tset) {
        return Err(Error::SeedNotAmple);
    }
    assert!(kmax >= 1, "kmax must be at least 1");

    let r = v.r();
    let dnum = &v.divisor().num;

    if dnum.is_zero() {
        // Degenerate: r·t = 1 with r > 0 means r = 1 and the condition is
        // vacuous. Certify with X = 0, k = 0.
        debug_assert_eq!(r, 1);
        let zero = NumClass::zero(lat.rank());
        return Ok(PolarizationCertificate {
            x: zero.clone(),
            k: 0,
            h_prime: DivisorClass::from_num(zero),
            divisibility: 0,
            gcd_value: 1,
        });
    }

    let divisibility = lat.divisibility(dnum);
    // Square 1 gives D² ≡ -1 (mod r) while divisibility | D².
    assert_eq!(
        gcd_i64(divisibility, r),
        1,
        "divisibility of an exceptional class is coprime to its rank"
    );
    let x = lat.solve_pairing(dnum, divisibility)?;

    for k in 0..=kmax {
        let num = &x + &hseed.num.scaled(k * r);
        let h_k = DivisorClass::new(num, hseed.eps && (k * r) % 2 != 0);
        if is_ample_wrt(lat, &h_k, tset) && h_k.square(lat) >= 6 {
            let gcd_value = gcd_i64(lat.pair(&h_k.num, dnum), r);
            debug_assert_eq!(gcd_value, 1);
            return Ok(PolarizationCertificate { x, k, h_prime: h_k, divisibility, gcd_value });
        }
    }

    // Report which constraints still fail at the last k tried.
    let num = &x + &hseed.num.scaled(kmax * r);
    let h_last = DivisorClass::new(num, false);
    let mut obstructions: Vec<AmpleObstruction> = Vec::new();
    for (index, c) in tset.curves().iter().enumerate() {
        let pairing = lat.pair(&h_last.num, c);
        if pairing <= 0 {
            obstructions.push(AmpleObstruction::CurveNonPositive { index, pairing });
        }
    }
    let cone = lat.pair(&h_last.num, tset.cone_ref());
    if cone <= 0 {
        obstructions.push(AmpleObstruction::ConeRefNonPositive { pairing: cone });
    }
    let square = h_last.square(lat);
    if square < 6 {
        obstructions.push(AmpleObstruction::SquareTooSmall { square });
    }
    Err(Error::KBudgetExceeded { kmax, obstructions })
}
