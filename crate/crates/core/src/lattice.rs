//! Integral symmetric bilinear forms on `Z^n`.
//!
//! The canonical preset is the rank-10 Enriques numerical lattice
//! `U ⊕ E8(-1)`: a hyperbolic plane spanned by `e, f` with `e·f = 1`
//! followed by eight classes `a1..a8` carrying the negated E8 form
//! (`ai² = -2`, `+1` on Dynkin adjacencies). The basis is ordered
//! `(e, f, a1, ..., a8)` with the E8 diagram fixed as the chain
//! `a1-a2-a3-a4-a5-a6-a7` plus `a8` attached to `a5`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{ext_gcd, gcd_i64, perfect_sqrt};
use crate::{Error, Result};

/// An integer coordinate vector in a fixed lattice basis (a numerical
/// divisor class).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NumClass {
    coords: Vec<i64>,
}

impl fmt::Debug for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumClass{:?}", self.coords)
    }
}

impl NumClass {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self { coords: vec![0; rank] }
    }

    /// The `i`-th standard basis vector.
    pub fn basis(rank: usize, i: usize) -> Self {
        assert!(i < rank, "basis index {i} out of range for rank {rank}");
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Self { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// gcd of all coordinates (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.coords.iter().fold(0, |g, &c| gcd_i64(g, c))
    }

    pub fn scaled(&self, n: i64) -> Self {
        Self { coords: self.coords.iter().map(|&c| c * n).collect() }
    }

    /// Exact division of every coordinate; panics if any is not divisible.
    pub(crate) fn scaled_down_exact(&self, n: i64) -> Self {
        assert!(n != 0);
        Self {
            coords: self
                .coords
                .iter()
                .map(|&c| {
                    assert!(c % n == 0, "coordinate {c} not divisible by {n}");
                    c / n
                })
                .collect(),
        }
    }
}

impl core::ops::Add for &NumClass {
    type Output = NumClass;
    fn add(self, rhs: &NumClass) -> NumClass {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in class addition");
        NumClass { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl core::ops::Sub for &NumClass {
    type Output = NumClass;
    fn sub(self, rhs: &NumClass) -> NumClass {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in class subtraction");
        NumClass { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl core::ops::Neg for &NumClass {
    type Output = NumClass;
    fn neg(self) -> NumClass {
        NumClass { coords: self.coords.iter().map(|&c| -c).collect() }
    }
}

/// An integral symmetric bilinear form given by its Gram matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramLattice {
    rank: usize,
    gram: Vec<Vec<i64>>,
}

impl GramLattice {
    /// Builds a lattice from a square symmetric integer matrix.
    #[allow(clippy::needless_range_loop)]
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let rank = gram.len();
        for (row, r) in gram.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::NonSquareGram { rows: rank, row, cols: r.len() });
            }
        }
        for i in 0..rank {
            for j in i + 1..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::AsymmetricGram { i, j });
                }
            }
        }
        Ok(Self { rank, gram })
    }

    /// The Enriques numerical lattice `U ⊕ E8(-1)` in the fixed basis
    /// `(e, f, a1..a8)`; even and unimodular of rank 10.
    pub fn e10() -> Self {
        // E8 Dynkin edges on 0-based a-indices: chain 1-2-3-4-5-6-7 plus
        // 8 attached to 5.
        const E8_EDGES: [(usize, usize); 7] =
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
        let mut g = vec![vec![0i64; 10]; 10];
        g[0][1] = 1;
        g[1][0] = 1;
        for i in 0..8 {
            g[2 + i][2 + i] = -2;
        }
        for (a, b) in E8_EDGES {
            g[2 + a][2 + b] = 1;
            g[2 + b][2 + a] = 1;
        }
        Self { rank: 10, gram: g }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// True when every diagonal entry is even, i.e. `x·x` is always even.
    pub fn is_even(&self) -> bool {
        (0..self.rank).all(|i| self.gram[i][i] % 2 == 0)
    }

    /// The bilinear pairing `xᵀ·G·y`; symmetric in its arguments.
    pub fn pair(&self, x: &NumClass, y: &NumClass) -> i64 {
        assert_eq!(x.rank(), self.rank, "dimension mismatch: x has length {}", x.rank());
        assert_eq!(y.rank(), self.rank, "dimension mismatch: y has length {}", y.rank());
        let mut acc: i128 = 0;
        for (i, &xi) in x.coords.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for (j, &yj) in y.coords.iter().enumerate() {
                row += (self.gram[i][j] as i128) * (yj as i128);
            }
            acc += (xi as i128) * row;
        }
        i64::try_from(acc).expect("pairing exceeds i64")
    }

    /// The vector of pairings with all basis vectors, i.e. `G·x`.
    pub fn basis_pairings(&self, x: &NumClass) -> Vec<i64> {
        assert_eq!(x.rank(), self.rank, "dimension mismatch: x has length {}", x.rank());
        self.gram
            .iter()
            .map(|row| {
                let acc: i128 =
                    row.iter().zip(&x.coords).map(|(&g, &c)| (g as i128) * (c as i128)).sum();
                i64::try_from(acc).expect("pairing exceeds i64")
            })
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        let n = self.rank;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> =
            self.gram.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&i| m[i][k] != 0) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    // Exact by the Bareiss identity.
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }

    /// gcd over all basis vectors `b` of `|x·b|`. Zero only for the zero
    /// class when the lattice is nondegenerate.
    pub fn divisibility(&self, x: &NumClass) -> i64 {
        self.basis_pairings(x).into_iter().fold(0, gcd_i64)
    }

    /// Finds `X` with `X·d = target` by extended gcd over the basis
    /// pairings of `d`.
    pub fn solve_pairing(&self, d: &NumClass, target: i64) -> Result<NumClass> {
        if d.is_zero() {
            return Err(Error::ZeroClass);
        }
        let w = self.basis_pairings(d);
        let mut g: i64 = 0;
        let mut coeffs = vec![0i64; self.rank];
        for (j, &wj) in w.iter().enumerate() {
            if wj == 0 {
                continue;
            }
            if g == 0 {
                g = wj.abs();
                coeffs[j] = wj.signum();
                continue;
            }
            let (g2, s, t) = ext_gcd(g, wj);
            if g2 == g {
                // Already a divisor of wj; (s, t) = (1, 0), nothing to fold.
                continue;
            }
            for c in coeffs.iter_mut() {
                *c *= s;
            }
            coeffs[j] = t;
            g = g2;
        }
        if g == 0 {
            // Degenerate form: d pairs to zero with everything.
            return if target == 0 {
                Ok(NumClass::zero(self.rank))
            } else {
                Err(Error::NotDivisible { divisibility: 0, target })
            };
        }
        if target % g != 0 {
            return Err(Error::NotDivisible { divisibility: g, target });
        }
        let q = target / g;
        let x = NumClass::new(coeffs.into_iter().map(|c| c * q).collect());
        debug_assert_eq!(self.pair(&x, d), target);
        Ok(x)
    }

    /// All primitive isotropic classes with coordinates in `[-bound, bound]`,
    /// one representative per `±` pair (first nonzero coordinate positive),
    /// sorted lexicographically.
    ///
    /// The search walks coordinates depth-first, keeping the partial value
    /// of the quadratic form incrementally; the final coordinate is solved
    /// from the resulting quadratic equation instead of scanned.
    pub fn enumerate_isotropic(&self, bound: i64) -> Vec<NumClass> {
        assert!(bound >= 1, "bound must be at least 1");
        let n = self.rank;
        let mut found: Vec<NumClass> = Vec::new();
        if n == 0 {
            return found;
        }
        if n == 1 {
            if self.gram[0][0] == 0 {
                found.push(NumClass::new(vec![1]));
            }
            return found;
        }
        let mut coords = vec![0i64; n];
        // cross[j] = Σ_{i < depth} gram[i][j]·coords[i]
        let mut cross = vec![0i128; n];
        self.isotropic_rec(0, 0, bound, true, &mut coords, &mut cross, &mut found);
        found.sort_unstable();
        debug_assert!(found.windows(2).all(|w| w[0] < w[1]));
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn isotropic_rec(
        &self,
        depth: usize,
        q: i128,
        bound: i64,
        leading_zero: bool,
        coords: &mut Vec<i64>,
        cross: &mut Vec<i128>,
        found: &mut Vec<NumClass>,
    ) {
        let n = self.rank;
        if depth == n - 1 {
            self.solve_last_coordinate(q, bound, leading_zero, coords, cross, found);
            return;
        }
        let row = &self.gram[depth];
        let g_dd = row[depth] as i128;
        for v in -bound..=bound {
            if leading_zero && v < 0 {
                continue; // sign normalization: first nonzero coordinate positive
            }
            let vi = v as i128;
            let q2 = q + 2 * vi * cross[depth] + g_dd * vi * vi;
            coords[depth] = v;
            if v != 0 {
                for j in depth + 1..n {
                    cross[j] += vi * (row[j] as i128);
                }
            }
            self.isotropic_rec(depth + 1, q2, bound, leading_zero && v == 0, coords, cross, found);
            if v != 0 {
                for j in depth + 1..n {
                    cross[j] -= vi * (row[j] as i128);
                }
            }
            coords[depth] = 0;
        }
    }

    /// Roots of `g·z² + 2·w·z + q = 0` for the last coordinate `z`.
    fn solve_last_coordinate(
        &self,
        q: i128,
        bound: i64,
        leading_zero: bool,
        coords: &mut Vec<i64>,
        cross: &[i128],
        found: &mut Vec<NumClass>,
    ) {
        let depth = self.rank - 1;
        let g = self.gram[depth][depth] as i128;
        let w = cross[depth];
        let mut take = |z: i128, coords: &mut Vec<i64>| {
            if z.unsigned_abs() > bound as u128 {
                return;
            }
            if leading_zero && z <= 0 {
                return; // zero vector or wrong sign representative
            }
            coords[depth] = z as i64;
            let class = NumClass::new(coords.clone());
            coords[depth] = 0;
            if class.content() == 1 {
                found.push(class);
            }
        };
        if g != 0 {
            let disc = w * w - g * q;
            if let Some(s) = perfect_sqrt(disc) {
                let mut num = -w + s;
                if num % g == 0 {
                    take(num / g, coords);
                }
                if s != 0 {
                    num = -w - s;
                    if num % g == 0 {
                        take(num / g, coords);
                    }
                }
            }
        } else if w != 0 {
            if q % (2 * w) == 0 {
                take(-q / (2 * w), coords);
            }
        } else if q == 0 {
            // Whole line of solutions.
            for z in -bound..=bound {
                take(z as i128, coords);
            }
        }
    }
}
