//! Dense matrices over ℤ with exact determinants, ranks, kernels and
//! characteristic polynomials.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn from_cols(cols: &[Vec<BigInt>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = BigInt::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() {
                        s += a * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    /// Power by repeated squaring, non-negative exponents only.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let (x, y) = (a[r][c].clone(), a[i][c].clone());
                for j in c..n {
                    let v = &x * &a[i][j] - &y * &a[r][j];
                    a[i][j] = v;
                }
                let g = a[i].iter().fold(BigInt::zero(), |g, v| g.gcd(v));
                if !g.is_zero() && !g.is_one() {
                    for v in a[i].iter_mut() {
                        *v /= &g;
                    }
                }
            }
            r += 1;
            if r == m {
                break;
            }
        }
        r
    }

    /// Characteristic polynomial det(X·I − A), by Bareiss elimination over
    /// ℤ[X]. The pivots are leading principal minors of X·I − A, which are
    /// monic, so every division is exact and no pivoting is needed.
    pub fn charpoly(&self) -> Result<IntPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        let mut m: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = IntPoly::constant(-self[(i, j)].clone());
                        if i == j {
                            a + IntPoly::from_i64(&[0, 1])
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect();
        let mut prev = IntPoly::one();
        for k in 0..n - 1 {
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        Ok(m[n - 1][n - 1].clone())
    }

    /// Primitive integral basis of the rational kernel, in row Hermite form.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        if self.cols == 0 {
            return vec![];
        }
        let snf = smith_normal_form(self);
        let r = snf.rank();
        let basis: Vec<Vec<BigInt>> = (r..self.cols).map(|j| snf.v.col(j)).collect();
        hnf_rows(&basis)
    }

    /// Hermite basis of the lattice spanned by the columns.
    pub fn image_lattice(&self) -> Vec<Vec<BigInt>> {
        hnf_rows(&self.transpose().to_rows())
    }

    pub fn to_rational(&self) -> Vec<Vec<BigRational>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect()
    }

    /// Inverse over ℚ; `None` when singular.
    pub fn inverse_rational(&self) -> Option<Vec<Vec<BigRational>>> {
        let id = IntMatrix::identity(self.rows).to_rational();
        solve_rational(&self.to_rational(), &id)
    }

    /// Inverse over ℤ; `None` unless |det| = 1.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        let inv = self.inverse_rational()?;
        rational_to_int(&inv)
    }

    /// Aᵀ·Ω·A = Ω.
    pub fn preserves_form(&self, omega: &IntMatrix) -> bool {
        &(&self.transpose() * omega) * self == *omega
    }
}

/// Converts a rational matrix with integral entries.
pub fn rational_to_int(m: &[Vec<BigRational>]) -> Option<IntMatrix> {
    let mut rows = Vec::with_capacity(m.len());
    for r in m {
        let mut row = Vec::with_capacity(r.len());
        for x in r {
            if !x.is_integer() {
                return None;
            }
            row.push(x.to_integer());
        }
        rows.push(row);
    }
    Some(IntMatrix::from_rows(rows))
}

/// Solves A·X = B over ℚ for square nonsingular A.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let k = b.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> =
        a.iter().zip(b).map(|(ra, rb)| ra.iter().chain(rb.iter()).cloned().collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..n + k {
                    let v = &m[c][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row Hermite normal form of the lattice spanned by `rows`: zero rows
/// dropped, pivots positive, entries above each pivot reduced into
/// [0, pivot).
pub fn hnf_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..m).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                for j in c..n {
                    let v = &q * &a[r][j];
                    a[i][j] -= v;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[c].is_zero()) {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if !q.is_zero() {
                for j in c..n {
                    let v = &q * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    a
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>w$}", cells[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
