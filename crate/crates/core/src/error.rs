use alloc::vec::Vec;
use core::fmt;

/// One ample-test constraint that a candidate polarization failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmpleObstruction {
    /// Pairing with the indexed test curve was not positive.
    CurveNonPositive { index: usize, pairing: i64 },
    /// Pairing with the positive-cone reference was not positive.
    ConeRefNonPositive { pairing: i64 },
    /// Self-intersection below the threshold 6.
    SquareTooSmall { square: i64 },
}

impl fmt::Display for AmpleObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmpleObstruction::CurveNonPositive { index, pairing } => {
                write!(f, "pairing {pairing} with test curve #{index} is not positive")
            }
            AmpleObstruction::ConeRefNonPositive { pairing } => {
                write!(f, "pairing {pairing} with the cone reference is not positive")
            }
            AmpleObstruction::SquareTooSmall { square } => {
                write!(f, "self-intersection {square} is below 6")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Gram matrix is not square.
    NonSquareGram { rows: usize, row: usize, cols: usize },
    /// Gram matrix entry `(i, j)` differs from `(j, i)`.
    AsymmetricGram { i: usize, j: usize },
    /// A coordinate vector does not match the lattice rank.
    DimensionMismatch { expected: usize, got: usize },
    /// The zero class was passed where a nonzero one is required.
    ZeroClass,
    /// The divisibility of the class does not divide the requested pairing.
    NotDivisible { divisibility: i64, target: i64 },
    /// `t` and `r` have different parities (`t = 2s` must satisfy `t ≡ r mod 2`).
    ParityViolation { r: i64, t: i64 },
    /// Chern input with negative rank.
    NegativeRank { r: i64 },
    /// A fixed-component-free system cannot have negative self-intersection.
    NegativeSquare { square: i64 },
    /// Euler characteristic is not positive, so the evaluation presentation
    /// does not apply.
    NotGloballyPresentable { chi: i64 },
    /// The rank-coprimality transfer requires odd rank.
    EvenRank { r: i64 },
    /// The vector is not exceptional (`r > 0` and square 1).
    NotExceptional { r: i64, square: i64 },
    /// The seed divisor is not ample with respect to the test set.
    SeedNotAmple,
    /// No multiple of the seed within the budget made the candidate ample.
    KBudgetExceeded { kmax: i64, obstructions: Vec<AmpleObstruction> },
    /// Backtracking exhausted all candidates within the coordinate bound.
    SequenceNotFound { length: usize, bound: i64 },
    /// Isotropic sequences have length between 1 and 10.
    InvalidSequenceLength { length: usize },
    /// Test-set curve with square below -2 or odd square.
    InvalidCurve { index: usize, square: i64 },
    /// Cone reference must have positive square.
    InvalidConeRef { square: i64 },
    /// Sequence member with nonzero square.
    NotIsotropic { index: usize, square: i64 },
    /// Sequence member with coordinate gcd above 1.
    NotPrimitiveClass { index: usize },
    /// Sequence members must pair to exactly 1.
    PairingNotOne { a: usize, b: usize, pairing: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquareGram { rows, row, cols } => {
                write!(f, "gram matrix is not square: {rows} rows but row {row} has {cols} entries")
            }
            Error::AsymmetricGram { i, j } => {
                write!(f, "gram matrix is not symmetric at ({i}, {j})")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: lattice rank {expected}, vector length {got}")
            }
            Error::ZeroClass => write!(f, "zero class"),
            Error::NotDivisible { divisibility, target } => {
                write!(
                    f,
                    "not divisible: divisibility {divisibility} does not divide target {target}"
                )
            }
            Error::ParityViolation { r, t } => {
                write!(f, "parity violation: t = {t} and r = {r} differ mod 2")
            }
            Error::NegativeRank { r } => write!(f, "negative rank {r}"),
            Error::NegativeSquare { square } => write!(f, "negative square {square}"),
            Error::NotGloballyPresentable { chi } => {
                write!(f, "not globally presentable: chi = {chi} is not positive")
            }
            Error::EvenRank { r } => write!(f, "even rank {r}"),
            Error::NotExceptional { r, square } => {
                write!(f, "not exceptional: r = {r}, square = {square}")
            }
            Error::SeedNotAmple => write!(f, "seed divisor is not ample for the test set"),
            Error::KBudgetExceeded { kmax, obstructions } => {
                write!(f, "k budget exceeded: no k <= {kmax} works; at k = {kmax}:")?;
                for o in obstructions {
                    write!(f, " [{o}]")?;
                }
                Ok(())
            }
            Error::SequenceNotFound { length, bound } => {
                write!(f, "not found within bound: no length-{length} sequence with coordinates bounded by {bound}")
            }
            Error::InvalidSequenceLength { length } => {
                write!(f, "invalid sequence length {length}: must be between 1 and 10")
            }
            Error::InvalidCurve { index, square } => {
                write!(
                    f,
                    "test curve #{index} has invalid square {square} (must be even and >= -2)"
                )
            }
            Error::InvalidConeRef { square } => {
                write!(f, "cone reference has square {square} (must be positive)")
            }
            Error::NotIsotropic { index, square } => {
                write!(f, "sequence member #{index} has square {square}, expected 0")
            }
            Error::NotPrimitiveClass { index } => {
                write!(f, "sequence member #{index} is not primitive")
            }
            Error::PairingNotOne { a, b, pairing } => {
                write!(f, "members #{a} and #{b} pair to {pairing}, expected 1")
            }
        }
    }
}

impl core::error::Error for Error {}
