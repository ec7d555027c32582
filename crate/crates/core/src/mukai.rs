//! Mukai vectors `(r, D, s)` on an Enriques surface.
//!
//! The half-integer component `s = D²/2 - c₂ + r/2` is stored exactly as
//! `t = 2s`, an integer constrained by `t ≡ r (mod 2)`; that parity is
//! precisely the condition for the triple to arise from a sheaf. The
//! canonical torsion bit rides on `D` but is invisible to the pairing,
//! since `K` is numerically trivial.

use crate::divisor::DivisorClass;
use crate::lattice::{GramLattice, NumClass};
use crate::{Error, Result};

/// A Mukai vector with doubled last component (`t = 2s`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MukaiVector {
    r: i64,
    d: DivisorClass,
    t: i64,
}

impl MukaiVector {
    /// Requires `t ≡ r (mod 2)`. Negative ranks are allowed: differences of
    /// sheaf vectors are legitimate K-theory classes.
    pub fn new(r: i64, d: DivisorClass, t: i64) -> Result<Self> {
        if (r - t) % 2 != 0 {
            return Err(Error::ParityViolation { r, t });
        }
        Ok(Self { r, d, t })
    }

    pub fn zero(rank: usize) -> Self {
        Self { r: 0, d: DivisorClass::zero(rank), t: 0 }
    }

    /// `v(O) = (1, 0, 1)`: the structure sheaf with `s = 1/2`.
    pub fn structure_sheaf(rank: usize) -> Self {
        Self { r: 1, d: DivisorClass::zero(rank), t: 1 }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn divisor(&self) -> &DivisorClass {
        &self.d
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn rank(&self) -> usize {
        self.d.rank()
    }

    /// `v² = r·t - D²` (equivalently `2rs - D²`), the self-pairing.
    pub fn square(&self, lat: &GramLattice) -> i64 {
        let d2 = lat.pair(&self.d.num, &self.d.num);
        i64::try_from((self.r as i128) * (self.t as i128) - (d2 as i128))
            .expect("square exceeds i64")
    }

    /// Euler pairing `<v, w> = r s' + r' s - D·D'`, an integer by parity.
    pub fn mukai_pair(&self, lat: &GramLattice, other: &MukaiVector) -> i64 {
        let cross = (self.r as i128) * (other.t as i128) + (other.r as i128) * (self.t as i128);
        debug_assert_eq!(cross % 2, 0);
        let dd = lat.pair(&self.d.num, &other.d.num);
        i64::try_from(cross / 2 - (dd as i128)).expect("pairing exceeds i64")
    }

    /// `v(E*) = (r, -D, s)`: ch₂ has even degree, and `-K ~ K`.
    pub fn dual(&self) -> Self {
        Self { r: self.r, d: DivisorClass { num: -&self.d.num, eps: self.d.eps }, t: self.t }
    }

    /// `v(E ⊗ O(M)) = (r, D + rM, s + D·M + rM²/2)`; preserves the square.
    pub fn twist(&self, lat: &GramLattice, m: &DivisorClass) -> Self {
        let num = &self.d.num + &m.num.scaled(self.r);
        let eps = self.d.eps ^ (m.eps && self.r % 2 != 0);
        let t = self.t + 2 * lat.pair(&self.d.num, &m.num) + self.r * lat.pair(&m.num, &m.num);
        Self { r: self.r, d: DivisorClass { num, eps }, t }
    }

    /// `r > 0` and `v² = 1`; forces both `r` and `t` odd.
    pub fn is_exceptional(&self, lat: &GramLattice) -> bool {
        self.r > 0 && self.square(lat) == 1
    }

    /// `χ(E) = <v(O), v> = (t + r)/2`.
    pub fn euler_chi(&self) -> i64 {
        (self.t + self.r) / 2
    }

    pub fn scaled(&self, n: i64) -> Self {
        Self { r: self.r * n, d: self.d.scaled(n), t: self.t * n }
    }
}

impl core::ops::Add for &MukaiVector {
    type Output = MukaiVector;
    fn add(self, rhs: &MukaiVector) -> MukaiVector {
        MukaiVector { r: self.r + rhs.r, d: &self.d + &rhs.d, t: self.t + rhs.t }
    }
}

impl core::ops::Sub for &MukaiVector {
    type Output = MukaiVector;
    fn sub(self, rhs: &MukaiVector) -> MukaiVector {
        MukaiVector { r: self.r - rhs.r, d: &self.d - &rhs.d, t: self.t - rhs.t }
    }
}

/// Vector of a sheaf from Chern data: `t = D² - 2c₂ + r`.
pub fn from_chern(lat: &GramLattice, r: i64, d: DivisorClass, c2: i64) -> Result<MukaiVector> {
    if r < 0 {
        return Err(Error::NegativeRank { r });
    }
    let d2 = lat.pair(&d.num, &d.num);
    Ok(MukaiVector { r, d, t: d2 - 2 * c2 + r })
}

/// `χ(E, E) = r² + (r - 1)c₁² - 2rc₂` for a sheaf with the given Chern data.
pub fn chi_self_formula(r: i64, c1_sq: i64, c2: i64) -> i64 {
    debug_assert_eq!(c1_sq % 2, 0, "c₁² must be even");
    i64::try_from(
        (r as i128) * (r as i128) + ((r - 1) as i128) * (c1_sq as i128)
            - 2 * (r as i128) * (c2 as i128),
    )
    .expect("chi exceeds i64")
}

/// `v(O(D)) = (1, D, D² + 1)`.
pub fn line_bundle_vector(lat: &GramLattice, d: DivisorClass) -> MukaiVector {
    let d2 = lat.pair(&d.num, &d.num);
    MukaiVector { r: 1, d, t: d2 + 1 }
}

/// Vector of `O_C(A)` for a curve `C` and a degree-`deg_a` divisor on it:
/// rank 0 with `t = 2·deg_a - C²` (from `χ(O_C(A)) = deg A - C²/2`).
pub fn curve_sheaf_vector(lat: &GramLattice, c: NumClass, deg_a: i64) -> MukaiVector {
    let c2 = lat.pair(&c, &c);
    assert!(c2 % 2 == 0, "curve class must have even square");
    MukaiVector { r: 0, d: DivisorClass::from_num(c), t: 2 * deg_a - c2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::{canonical_class, rr_line_bundle};

    fn lat() -> GramLattice {
        GramLattice::e10()
    }

    fn e() -> NumClass {
        NumClass::basis(10, 0)
    }

    fn f() -> NumClass {
        NumClass::basis(10, 1)
    }

    fn ef() -> DivisorClass {
        DivisorClass::from_num(&e() + &f())
    }

    #[test]
    fn parity_is_enforced() {
        assert!(MukaiVector::new(1, DivisorClass::zero(10), 1).is_ok());
        assert_eq!(
            MukaiVector::new(1, DivisorClass::zero(10), 2),
            Err(Error::ParityViolation { r: 1, t: 2 })
        );
    }

    #[test]
    fn structure_sheaf_pairs_to_one() {
        let l = lat();
        let o = MukaiVector::structure_sheaf(10);
        assert_eq!(o.mukai_pair(&l, &o), 1);
        assert_eq!(o.square(&l), 1);
    }

    #[test]
    fn half_pencil_line_bundles_are_orthogonal() {
        let l = lat();
        let vi = line_bundle_vector(&l, DivisorClass::from_num(e()));
        let vj = line_bundle_vector(&l, DivisorClass::from_num(f()));
        assert_eq!(vi.mukai_pair(&l, &vj), 0);
    }

    #[test]
    fn from_chern_examples() {
        let l = lat();
        let o = from_chern(&l, 1, DivisorClass::zero(10), 0).unwrap();
        assert_eq!(o, MukaiVector::structure_sheaf(10));

        // Extremal data: rank 2, c₁² = 4n - 2, c₂ = n has square 2.
        for n in 5..=20i64 {
            // c₁² = 4n - 2 = 2ab with a = 2n - 1, b = 1 in the hyperbolic plane.
            let d = DivisorClass::from_num(&e().scaled(2 * n - 1) + &f());
            assert_eq!(l.pair(&d.num, &d.num), 4 * n - 2);
            let v = from_chern(&l, 2, d, n).unwrap();
            assert_eq!(v.square(&l), 2);
            assert!(!v.is_exceptional(&l));
            assert_eq!(v.t(), 2 * n);
        }

        let v = from_chern(&l, 3, ef(), 2).unwrap();
        assert_eq!(v.t(), 1);
        assert_eq!(v.square(&l), 1);
        assert!(v.is_exceptional(&l));

        assert_eq!(
            from_chern(&l, -1, DivisorClass::zero(10), 0),
            Err(Error::NegativeRank { r: -1 })
        );
    }

    #[test]
    fn chi_self_examples() {
        assert_eq!(chi_self_formula(1, 0, 0), 1);
        for n in 5..=20 {
            assert_eq!(chi_self_formula(2, 4 * n - 2, n), 2);
        }
    }

    #[test]
    fn dual_examples() {
        let l = lat();
        let o = MukaiVector::structure_sheaf(10);
        assert_eq!(o.dual(), o);
        let v = line_bundle_vector(&l, ef());
        let dv = v.dual();
        assert_eq!(dv.r(), 1);
        assert_eq!(dv.t(), 3);
        assert_eq!(dv.divisor().num, -&ef().num);
    }

    #[test]
    fn twist_examples() {
        let l = lat();
        let v = from_chern(&l, 3, ef(), 2).unwrap();
        let zero = DivisorClass::zero(10);
        assert_eq!(v.twist(&l, &zero), v);

        let m = DivisorClass::from_num(&e().scaled(2) + &f());
        let o = MukaiVector::structure_sheaf(10);
        let tw = o.twist(&l, &m);
        assert_eq!(tw, line_bundle_vector(&l, m.clone()));

        // Twist back undoes the twist.
        let back = v.twist(&l, &m).twist(&l, &-&m);
        assert_eq!(back, v);
    }

    #[test]
    fn line_bundle_examples() {
        let l = lat();
        assert_eq!(
            line_bundle_vector(&l, DivisorClass::zero(10)),
            MukaiVector::structure_sheaf(10)
        );
        let v = line_bundle_vector(&l, ef());
        assert_eq!(v.t(), 3);
        for a in 0..=4i64 {
            for b in 0..=4i64 {
                let d = DivisorClass::from_num(&e().scaled(a) + &f().scaled(b));
                assert_eq!(line_bundle_vector(&l, d).t(), 2 * a * b + 1);
            }
        }
    }

    #[test]
    fn curve_sheaf_examples() {
        let l = lat();
        // (-2)-curve with the trivial twist: χ(O_C) = 1.
        let c = NumClass::basis(10, 2);
        let v = curve_sheaf_vector(&l, c.clone(), 0);
        assert_eq!((v.r(), v.t()), (0, 2));
        assert_eq!(v.divisor().num, c);

        // Half-pencil: arithmetic genus 1, χ(O_C) = 0.
        let h = curve_sheaf_vector(&l, e(), 0);
        assert_eq!((h.r(), h.t()), (0, 0));

        // Linear in deg A.
        let c = NumClass::basis(10, 2);
        for deg in -3..=3i64 {
            let va = curve_sheaf_vector(&l, c.clone(), deg);
            let v0 = curve_sheaf_vector(&l, c.clone(), 0);
            let diff = &va - &v0;
            assert_eq!((diff.r(), diff.t()), (0, 2 * deg));
            assert!(diff.divisor().num.is_zero());
        }
    }

    /// Independent adjunction oracle: `χ(O_C(A)) = deg A + 1 - g` with
    /// `g = 1 + C²/2` (K·C = 0), so `euler_chi` must reproduce it.
    #[test]
    fn curve_sheaf_matches_adjunction_oracle() {
        let l = lat();
        let candidates =
            [NumClass::basis(10, 2), e(), &e() + &f(), &(&e() + &f()) + &NumClass::basis(10, 3)];
        for c in candidates {
            let genus = 1 + l.pair(&c, &c) / 2;
            for deg_a in -4..=4i64 {
                let v = curve_sheaf_vector(&l, c.clone(), deg_a);
                assert_eq!(v.euler_chi(), deg_a + 1 - genus);
            }
        }
    }

    #[test]
    fn addition_examples() {
        let l = lat();
        let v = from_chern(&l, 3, ef(), 2).unwrap();
        let sum = &v + &MukaiVector::zero(10);
        assert_eq!(sum, v);

        // Ideal-sheaf piece plus twice the canonical bundle.
        let j = MukaiVector::new(1, ef(), -1).unwrap();
        let k = MukaiVector::new(1, canonical_class(10), 1).unwrap();
        let built = &j + &k.scaled(2);
        assert_eq!((built.r(), built.t()), (3, 1));
        assert_eq!(built.divisor(), &ef());
        assert!(!built.divisor().eps);

        // Squares are not additive: cross terms survive.
        let o = MukaiVector::structure_sheaf(10);
        let w = &o + &o;
        assert_ne!(w.square(&l), o.square(&l) + o.square(&l));
    }

    #[test]
    fn exceptional_examples() {
        let l = lat();
        assert!(MukaiVector::structure_sheaf(10).is_exceptional(&l));
        let v = MukaiVector::new(3, ef(), 1).unwrap();
        assert!(v.is_exceptional(&l));
        // Odd rank and odd t are forced.
        assert!(v.r() % 2 != 0);
        assert!(v.t() % 2 != 0);

        let n = 6;
        let d = DivisorClass::from_num(&e().scaled(2 * n - 1) + &f());
        let extremal = from_chern(&l, 2, d, n).unwrap();
        assert!(!extremal.is_exceptional(&l));
        assert_eq!(extremal.square(&l), 2);
    }

    #[test]
    fn euler_chi_examples() {
        let l = lat();
        assert_eq!(MukaiVector::structure_sheaf(10).euler_chi(), 1);
        let v = line_bundle_vector(&l, ef());
        assert_eq!(v.euler_chi(), 2);
        assert_eq!(v.euler_chi(), rr_line_bundle(&l, &ef()));
        let w = MukaiVector::new(3, ef(), 1).unwrap();
        assert_eq!(w.euler_chi(), 2);
        // χ(v) = <v(O), v>.
        assert_eq!(w.euler_chi(), MukaiVector::structure_sheaf(10).mukai_pair(&l, &w));
    }
}
