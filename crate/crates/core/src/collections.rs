//! Isotropic sequences and the numerical exceptional-collection test.
//!
//! An isotropic sequence is a list of primitive square-zero classes pairing
//! pairwise to 1, the lattice shadow of a system of elliptic half-pencils.
//! The search backtracks over the isotropic classes within a coordinate
//! bound, in their lexicographic order, and returns the first complete
//! sequence; exhaustion within the bound is reported as an error, not as a
//! proof of nonexistence.

use alloc::vec::Vec;

use crate::lattice::{GramLattice, NumClass};
use crate::mukai::MukaiVector;
use crate::{Error, Result};

/// Primitive isotropic classes with all pairwise pairings equal to 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotropicSequence {
    classes: Vec<NumClass>,
}

impl IsotropicSequence {
    /// Validates both defining invariants verbatim.
    pub fn new(lat: &GramLattice, classes: Vec<NumClass>) -> Result<Self> {
        for (index, c) in classes.iter().enumerate() {
            let square = lat.pair(c, c);
            if square != 0 {
                return Err(Error::NotIsotropic { index, square });
            }
            if c.content() != 1 {
                return Err(Error::NotPrimitiveClass { index });
            }
        }
        for a in 0..classes.len() {
            for b in a + 1..classes.len() {
                let pairing = lat.pair(&classes[a], &classes[b]);
                if pairing != 1 {
                    return Err(Error::PairingNotOne { a, b, pairing });
                }
            }
        }
        Ok(Self { classes })
    }

    pub fn classes(&self) -> &[NumClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Backtracking search for an isotropic sequence of the given length among
/// the classes with coordinates bounded by `bound`.
pub fn find_isotropic_sequence(
    lat: &GramLattice,
    length: usize,
    bound: i64,
) -> Result<IsotropicSequence> {
    if !(1..=10).contains(&length) {
        return Err(Error::InvalidSequenceLength { length });
    }
    assert!(bound >= 1, "bound must be at least 1");
    let candidates = lat.enumerate_isotropic(bound);
    let mut chosen: Vec<usize> = Vec::with_capacity(length);
    let available: Vec<usize> = (0..candidates.len()).collect();
    if search(lat, &candidates, length, &available, &mut chosen) {
        let classes = chosen.into_iter().map(|i| candidates[i].clone()).collect();
        // Post-hoc re-check of the invariants.
        IsotropicSequence::new(lat, classes)
    } else {
        Err(Error::SequenceNotFound { length, bound })
    }
}

/// Depth-first extension in ascending candidate order. The constraints are
/// symmetric, so every valid sequence can be sorted; visiting only sorted
/// prefixes finds each candidate set exactly once and returns the
/// lexicographically least sequence overall. `available` holds the indices
/// above the last chosen one that are compatible with everything chosen.
fn search(
    lat: &GramLattice,
    candidates: &[NumClass],
    length: usize,
    available: &[usize],
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == length {
        return true;
    }
    if available.len() < length - chosen.len() {
        return false; // cannot possibly be completed
    }
    for (pos, &i) in available.iter().enumerate() {
        let mut rest: Vec<usize> = Vec::with_capacity(available.len() - pos);
        for &j in &available[pos + 1..] {
            if lat.pair(&candidates[i], &candidates[j]) == 1 {
                rest.push(j);
            }
        }
        chosen.push(i);
        if search(lat, candidates, length, &rest, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// The chi matrix of a would-be exceptional collection plus the verdict:
/// diagonal 1, off-diagonal 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollectionReport {
    pub chi_matrix: Vec<Vec<i64>>,
    pub pass: bool,
}

/// Necessary numerical conditions for an exceptional collection: on an
/// Enriques surface the pairing is symmetric, so `χ(E_a, E_b)` must vanish
/// for all `a ≠ b`, and each `χ(E_a, E_a)` must be 1.
pub fn check_exceptional_collection_necessary(
    lat: &GramLattice,
    vs: &[MukaiVector],
) -> CollectionReport {
    let n = vs.len();
    let mut chi_matrix = Vec::with_capacity(n);
    let mut pass = true;
    for a in 0..n {
        let mut row = Vec::with_capacity(n);
        for b in 0..n {
            let chi = vs[a].mukai_pair(lat, &vs[b]);
            let expected = if a == b { 1 } else { 0 };
            if chi != expected {
                pass = false;
            }
            row.push(chi);
        }
        chi_matrix.push(row);
    }
    CollectionReport { chi_matrix, pass }
}
