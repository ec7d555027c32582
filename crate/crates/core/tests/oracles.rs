//! Independent-oracle checks: every closed-form routine in the crate is
//! compared against a brute-force or textbook reimplementation that shares
//! no code with it.

mod common;

use std::collections::{BTreeSet, HashMap};

use common::*;
use enriques_core::mukai::line_bundle_vector;
use enriques_core::{DivisorClass, GramLattice, NumClass};
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Plain double sum over all index pairs, no skips, no i128 shortcuts.
#[allow(clippy::needless_range_loop)]
fn pair_oracle(lat: &GramLattice, x: &NumClass, y: &NumClass) -> i64 {
    let g = lat.gram();
    let mut acc = 0i64;
    for i in 0..lat.rank() {
        for j in 0..lat.rank() {
            acc += x.coords()[i] * g[i][j] * y.coords()[j];
        }
    }
    acc
}

#[test]
fn pair_matches_double_sum_on_random_classes() {
    let lat = e10();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let x = rand_numclass(&mut rng, 9);
        let y = rand_numclass(&mut rng, 9);
        assert_eq!(lat.pair(&x, &y), pair_oracle(&lat, &x, &y));
    }
}

/// Laplace expansion along the first remaining row, memoized on the column
/// mask; exact, and entirely independent of the Bareiss elimination.
fn det_oracle(m: &[Vec<i64>]) -> i128 {
    fn go(m: &[Vec<i64>], row: usize, mask: u32, memo: &mut HashMap<(usize, u32), i128>) -> i128 {
        if mask == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(row, mask)) {
            return v;
        }
        let mut acc = 0i128;
        let mut sign = 1i128;
        for j in 0..m.len() {
            if mask & (1 << j) == 0 {
                continue;
            }
            if m[row][j] != 0 {
                acc += sign * (m[row][j] as i128) * go(m, row + 1, mask & !(1 << j), memo);
            }
            sign = -sign;
        }
        memo.insert((row, mask), acc);
        acc
    }
    let mask = (1u32 << m.len()) - 1;
    go(m, 0, mask, &mut HashMap::new())
}

#[test]
#[allow(clippy::needless_range_loop)]
fn determinant_matches_cofactor_expansion() {
    let lat = e10();
    let oracle = det_oracle(lat.gram());
    assert_eq!(lat.determinant(), oracle);
    assert_eq!(oracle.abs(), 1);

    // A few random symmetric matrices too.
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..20 {
        let mut m = vec![vec![0i64; 6]; 6];
        for i in 0..6 {
            for j in i..6 {
                let v = rand_numclass(&mut rng, 4).coords()[0];
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        let l = GramLattice::new(m.clone()).unwrap();
        assert_eq!(l.determinant(), det_oracle(&m));
    }
}

#[test]
fn divisibility_matches_basis_pairing_gcd() {
    let lat = e10();
    let mut rng = StdRng::seed_from_u64(13);
    fn gcd(a: i64, b: i64) -> i64 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    for _ in 0..200 {
        let x = rand_numclass(&mut rng, 9);
        let mut g = 0;
        for i in 0..10 {
            g = gcd(g, lat.pair(&x, &NumClass::basis(10, i)));
        }
        assert_eq!(lat.divisibility(&x), g);
        // The divisibility divides every pairing.
        if !x.is_zero() {
            let y = rand_numclass(&mut rng, 9);
            assert_eq!(lat.pair(&x, &y) % g, 0);
        }
    }
}

/// Exhaustive scan of the coordinate box, keeping primitive isotropic
/// vectors normalized to a positive leading coordinate.
fn isotropic_box_oracle(lat: &GramLattice, bound: i64) -> BTreeSet<Vec<i64>> {
    let n = lat.rank();
    let width = (2 * bound + 1) as u64;
    let total = width.pow(n as u32);
    let mut out = BTreeSet::new();
    let mut coords = vec![0i64; n];
    for idx in 0..total {
        let mut rest = idx;
        for c in coords.iter_mut() {
            *c = (rest % width) as i64 - bound;
            rest /= width;
        }
        if coords.iter().all(|&c| c == 0) {
            continue;
        }
        let x = NumClass::new(coords.clone());
        if pair_oracle(lat, &x, &x) != 0 {
            continue;
        }
        let mut g = 0i64;
        for &c in &coords {
            let (mut a, mut b) = (g, c.abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            g = a;
        }
        if g != 1 {
            continue;
        }
        let mut rep = coords.clone();
        if rep.iter().find(|&&c| c != 0).copied().unwrap() < 0 {
            for c in rep.iter_mut() {
                *c = -*c;
            }
        }
        out.insert(rep);
    }
    out
}

#[test]
fn isotropic_enumeration_matches_box_scan() {
    let lat = e10();
    for bound in 1..=2i64 {
        let fast: BTreeSet<Vec<i64>> =
            lat.enumerate_isotropic(bound).into_iter().map(|c| c.coords().to_vec()).collect();
        let slow = isotropic_box_oracle(&lat, bound);
        assert_eq!(fast.len(), slow.len(), "count mismatch at bound {bound}");
        assert_eq!(fast, slow, "set mismatch at bound {bound}");
    }
}

/// The enumeration must stay correct on arbitrary symmetric forms,
/// including degenerate ones where the last diagonal entry or a whole row
/// vanishes (the linear and whole-line branches of the solver).
#[test]
#[allow(clippy::needless_range_loop)]
fn isotropic_enumeration_on_random_lattices() {
    use rand::Rng;
    let mut rng = StdRng::seed_from_u64(15);
    for case in 0..40 {
        let n = rng.gen_range(2..=5usize);
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-3..=3i64);
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        // Push some cases into the degenerate branches.
        if case % 4 == 0 {
            let last = n - 1;
            m[last][last] = 0;
        }
        if case % 8 == 0 {
            for j in 0..n {
                m[n - 1][j] = 0;
                m[j][n - 1] = 0;
            }
        }
        let lat = GramLattice::new(m).unwrap();
        for bound in 1..=2i64 {
            let fast: BTreeSet<Vec<i64>> =
                lat.enumerate_isotropic(bound).into_iter().map(|c| c.coords().to_vec()).collect();
            let slow = isotropic_box_oracle(&lat, bound);
            assert_eq!(fast, slow, "case {case} bound {bound} gram {:?}", lat.gram());
        }
    }
}

/// Fully degenerate form: every primitive class is isotropic.
#[test]
fn isotropic_enumeration_on_the_zero_form() {
    let lat = GramLattice::new(vec![vec![0, 0], vec![0, 0]]).unwrap();
    let got: Vec<Vec<i64>> =
        lat.enumerate_isotropic(2).into_iter().map(|c| c.coords().to_vec()).collect();
    assert_eq!(
        got,
        vec![
            vec![0, 1],
            vec![1, -2],
            vec![1, -1],
            vec![1, 0],
            vec![1, 1],
            vec![1, 2],
            vec![2, -1],
            vec![2, 1],
        ]
    );
}

/// A single hyperbolic plane: the only primitive isotropic classes are the
/// two basis rays, whatever the bound.
#[test]
fn isotropic_enumeration_on_hyperbolic_plane() {
    let lat = GramLattice::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
    for bound in 1..=4i64 {
        let got: Vec<Vec<i64>> =
            lat.enumerate_isotropic(bound).into_iter().map(|c| c.coords().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0]], "bound {bound}");
    }
}

/// Exact rational evaluation of `r s' + r' s - D·D'` with `s = t/2`.
fn mukai_pair_oracle(
    lat: &GramLattice,
    v: &enriques_core::MukaiVector,
    w: &enriques_core::MukaiVector,
) -> Rational64 {
    let s_v = Rational64::new(v.t(), 2);
    let s_w = Rational64::new(w.t(), 2);
    let dd = Rational64::from_integer(pair_oracle(lat, &v.divisor().num, &w.divisor().num));
    Rational64::from_integer(v.r()) * s_w + Rational64::from_integer(w.r()) * s_v - dd
}

#[test]
fn mukai_pair_matches_rational_formula() {
    let lat = e10();
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..100 {
        let v = rand_mukai(&mut rng);
        let w = rand_mukai(&mut rng);
        let exact = mukai_pair_oracle(&lat, &v, &w);
        assert!(exact.is_integer(), "parity forces an integer pairing");
        assert_eq!(v.mukai_pair(&lat, &w), exact.to_integer());
    }
}

/// The line-bundle vector of `aF + bG` has `t = 2ab + 1`, so its Euler
/// characteristic matches Riemann-Roch directly.
#[test]
fn line_bundle_euler_matches_riemann_roch() {
    let lat = e10();
    for a in -6..=6i64 {
        for b in -6..=6i64 {
            let d = DivisorClass::from_num(&e().scaled(a) + &f().scaled(b));
            let v = line_bundle_vector(&lat, d.clone());
            assert_eq!(v.euler_chi(), 1 + a * b);
            assert_eq!(v.euler_chi(), enriques_core::divisor::rr_line_bundle(&lat, &d));
        }
    }
}
