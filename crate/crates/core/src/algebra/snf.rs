//! Smith normal form with transformation matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u · a · v = s` with `s` diagonal, d₁ | d₂ | …, and `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero() && *d != BigInt::from(1)).collect()
    }
}

fn swap_rows(a: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols() {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
}

fn swap_cols(a: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in 0..a.rows() {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

/// row_i += q·row_j
fn add_row(a: &mut IntMatrix, i: usize, j: usize, q: &BigInt) {
    for c in 0..a.cols() {
        let v = &a[(j, c)] * q;
        a[(i, c)] += v;
    }
}

/// col_i += q·col_j
fn add_col(a: &mut IntMatrix, i: usize, j: usize, q: &BigInt) {
    for r in 0..a.rows() {
        let v = &a[(r, j)] * q;
        a[(r, i)] += v;
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Snf { s, u, v };
            };
            swap_rows(&mut s, t, bi);
            swap_rows(&mut u, t, bi);
            swap_cols(&mut s, t, bj);
            swap_cols(&mut v, t, bj);

            let mut clean = true;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&s[(t, t)]);
                add_row(&mut s, i, t, &q);
                add_row(&mut u, i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&s[(t, t)]);
                add_col(&mut s, j, t, &q);
                add_col(&mut v, j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !s[(i, j)].is_multiple_of(&s[(t, t)]));
            if let Some((i, _)) = bad {
                let one = BigInt::from(1);
                add_row(&mut s, t, i, &one);
                add_row(&mut u, t, i, &one);
                continue;
            }
            if s[(t, t)].is_negative() {
                let neg = BigInt::from(-1);
                for c in 0..n {
                    s[(t, c)] = &s[(t, c)] * &neg;
                }
                for c in 0..m {
                    u[(t, c)] = &u[(t, c)] * &neg;
                }
            }
            break;
        }
    }
    Snf { s, u, v }
}
