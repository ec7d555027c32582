//! Divisor classes on an Enriques surface.
//!
//! A class is a numerical vector plus a torsion bit `eps` recording the
//! coefficient of the 2-torsion canonical class `K` (so `2K ~ 0` and class
//! addition adds `eps` mod 2). Nef and ample are tested against a finite,
//! caller-supplied set of candidate curves together with a reference class
//! fixing the positive-cone component; every predicate here is relative to
//! that test set.

use alloc::vec::Vec;

use crate::lattice::{GramLattice, NumClass};
use crate::{Error, Result};

/// Numerical class plus the 2-torsion canonical coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DivisorClass {
    pub num: NumClass,
    /// Coefficient of the canonical class, mod 2.
    pub eps: bool,
}

impl DivisorClass {
    pub fn new(num: NumClass, eps: bool) -> Self {
        Self { num, eps }
    }

    /// A purely numerical class (`eps = 0`).
    pub fn from_num(num: NumClass) -> Self {
        Self { num, eps: false }
    }

    pub fn zero(rank: usize) -> Self {
        Self { num: NumClass::zero(rank), eps: false }
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    /// Self-intersection of the numerical part.
    pub fn square(&self, lat: &GramLattice) -> i64 {
        lat.pair(&self.num, &self.num)
    }

    pub fn scaled(&self, n: i64) -> Self {
        Self { num: self.num.scaled(n), eps: self.eps && n % 2 != 0 }
    }
}

impl core::ops::Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass { num: &self.num + &rhs.num, eps: self.eps ^ rhs.eps }
    }
}

impl core::ops::Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        // -K ~ K, so eps still adds mod 2.
        DivisorClass { num: &self.num - &rhs.num, eps: self.eps ^ rhs.eps }
    }
}

impl core::ops::Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass { num: -&self.num, eps: self.eps }
    }
}

/// The canonical class: numerically trivial, torsion bit set.
pub fn canonical_class(rank: usize) -> DivisorClass {
    DivisorClass::new(NumClass::zero(rank), true)
}

/// `χ(O(D)) = 1 + D²/2`; independent of the torsion bit.
pub fn rr_line_bundle(lat: &GramLattice, d: &DivisorClass) -> i64 {
    let sq = d.square(lat);
    assert!(sq % 2 == 0, "odd self-intersection {sq} in an even lattice");
    1 + sq / 2
}

/// A finite surrogate for "every curve on the surface": candidate effective
/// classes plus a positive-square class fixing the cone orientation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveTestSet {
    curves: Vec<NumClass>,
    cone_ref: NumClass,
}

impl CurveTestSet {
    /// Validates that each curve has even square at least -2 and that the
    /// cone reference has positive square.
    pub fn new(lat: &GramLattice, curves: Vec<NumClass>, cone_ref: NumClass) -> Result<Self> {
        for (index, c) in curves.iter().enumerate() {
            if c.rank() != lat.rank() {
                return Err(Error::DimensionMismatch { expected: lat.rank(), got: c.rank() });
            }
            let square = lat.pair(c, c);
            if square < -2 || square % 2 != 0 {
                return Err(Error::InvalidCurve { index, square });
            }
        }
        if cone_ref.rank() != lat.rank() {
            return Err(Error::DimensionMismatch { expected: lat.rank(), got: cone_ref.rank() });
        }
        let square = lat.pair(&cone_ref, &cone_ref);
        if square <= 0 {
            return Err(Error::InvalidConeRef { square });
        }
        Ok(Self { curves, cone_ref })
    }

    /// The standard set for the rank-10 preset: the ten basis classes
    /// (two isotropic, eight of square -2) with `e + f` as cone reference.
    pub fn e10_standard(lat: &GramLattice) -> Result<Self> {
        let curves = (0..lat.rank()).map(|i| NumClass::basis(lat.rank(), i)).collect();
        let cone_ref = &NumClass::basis(lat.rank(), 0) + &NumClass::basis(lat.rank(), 1);
        Self::new(lat, curves, cone_ref)
    }

    pub fn curves(&self) -> &[NumClass] {
        &self.curves
    }

    pub fn cone_ref(&self) -> &NumClass {
        &self.cone_ref
    }
}

/// Nonnegative pairing with every test curve and with the cone reference.
pub fn is_nef_wrt(lat: &GramLattice, d: &DivisorClass, t: &CurveTestSet) -> bool {
    t.curves.iter().all(|c| lat.pair(&d.num, c) >= 0) && lat.pair(&d.num, &t.cone_ref) >= 0
}

/// Strictly positive pairings and positive self-intersection.
pub fn is_ample_wrt(lat: &GramLattice, d: &DivisorClass, t: &CurveTestSet) -> bool {
    t.curves.iter().all(|c| lat.pair(&d.num, c) > 0)
        && lat.pair(&d.num, &t.cone_ref) > 0
        && d.square(lat) > 0
}

/// Outcome of classifying a fixed-component-free complete linear system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FreeSystemClass {
    /// Positive square: the system contains an irreducible curve.
    Irreducible,
    /// Square zero: the class is `k` times a primitive isotropic `P`, a
    /// genus-1 pencil multiple.
    Pencil { k: i64, primitive: NumClass },
}

/// Dichotomy for a system assumed (by the caller; this is geometric input
/// the lattice cannot check) to have no fixed components.
pub fn classify_free_system(lat: &GramLattice, d: &DivisorClass) -> Result<FreeSystemClass> {
    if d.num.is_zero() {
        return Err(Error::ZeroClass);
    }
    let square = d.square(lat);
    if square < 0 {
        return Err(Error::NegativeSquare { square });
    }
    if square > 0 {
        return Ok(FreeSystemClass::Irreducible);
    }
    // Unimodularity makes divisibility equal the coordinate content, so the
    // quotient below is exact.
    let k = lat.divisibility(&d.num);
    let primitive = d.num.scaled_down_exact(k);
    Ok(FreeSystemClass::Pencil { k, primitive })
}

/// Report of the numerical ampleness criteria: nef plus `D² >= 6` upgrades
/// to ample, with `2D` globally generated and `3D` very ample.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AmpleCriteriaReport {
    pub criteria_met: bool,
    pub ample: bool,
    pub two_d_globally_generated: bool,
    pub three_d_very_ample: bool,
}

pub fn ample_criteria(
    lat: &GramLattice,
    d: &DivisorClass,
    t: &CurveTestSet,
) -> AmpleCriteriaReport {
    let met = is_nef_wrt(lat, d, t) && d.square(lat) >= 6;
    AmpleCriteriaReport {
        criteria_met: met,
        ample: met,
        two_d_globally_generated: met,
        three_d_very_ample: met,
    }
}
