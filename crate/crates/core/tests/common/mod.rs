//! Shared helpers for the integration test binaries.

#![allow(dead_code)]

use enriques_core::{DivisorClass, GramLattice, MukaiVector, NumClass};
use rand::rngs::StdRng;
use rand::Rng;

pub fn e10() -> GramLattice {
    GramLattice::e10()
}

pub fn e() -> NumClass {
    NumClass::basis(10, 0)
}

pub fn f() -> NumClass {
    NumClass::basis(10, 1)
}

/// An ample class for the standard test set: 18(e + f) minus the Weyl
/// vector of the E8 block, pairing (18, 18, 1, ..., 1) with the basis and
/// of square 28.
pub fn ample_seed() -> DivisorClass {
    DivisorClass::from_num(NumClass::new(vec![18, 18, -29, -57, -84, -110, -135, -91, -46, -68]))
}

pub fn rand_numclass(rng: &mut StdRng, bound: i64) -> NumClass {
    NumClass::new((0..10).map(|_| rng.gen_range(-bound..=bound)).collect())
}

pub fn rand_divisor(rng: &mut StdRng, bound: i64) -> DivisorClass {
    DivisorClass::new(rand_numclass(rng, bound), rng.gen_bool(0.5))
}

/// Parity-valid vector with `|coords| <= 5` and `|r|, |t| <= 99`.
pub fn rand_mukai(rng: &mut StdRng) -> MukaiVector {
    let r: i64 = rng.gen_range(-99..=99);
    let mut t: i64 = rng.gen_range(-99..=99);
    if (r - t) % 2 != 0 {
        t += if t < 99 { 1 } else { -1 };
    }
    MukaiVector::new(r, rand_divisor(rng, 5), t).expect("parity was fixed up")
}

/// Random exceptional vector: random nonzero `D` with small coordinates, an
/// odd positive rank dividing `1 + D²`, and `t` solved from `r·t - D² = 1`.
pub fn rand_exceptional(lat: &GramLattice, rng: &mut StdRng) -> MukaiVector {
    loop {
        let num = rand_numclass(rng, 3);
        if num.is_zero() {
            continue;
        }
        let d2 = lat.pair(&num, &num);
        let target = 1 + d2; // odd, since the lattice is even
        let mut choices = [1i64, 3, 5, 7, 9];
        // Try ranks in random order so the sample is not all rank 1.
        for i in (1..choices.len()).rev() {
            let j = rng.gen_range(0..=i);
            choices.swap(i, j);
        }
        for r in choices {
            if target % r == 0 {
                let v = MukaiVector::new(r, DivisorClass::new(num, rng.gen_bool(0.5)), target / r)
                    .expect("r and t odd");
                debug_assert_eq!(v.square(lat), 1);
                return v;
            }
        }
    }
}
