//! Dense univariate polynomials over ℤ, coefficients low to high.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients given high to low, as printed in most texts.
    pub fn from_high(coeffs: &[i64]) -> Self {
        let mut c: Vec<i64> = coeffs.to_vec();
        c.reverse();
        Self::from_i64(&c)
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c·Xᵈ.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut v = vec![BigInt::zero(); d + 1];
        v[d] = c;
        Self::new(v)
    }

    /// X − a.
    pub fn linear_root(a: &BigInt) -> Self {
        Self::new(vec![-a.clone(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// p(a·X): used to make a polynomial monic after scaling roots.
    pub fn compose_scale(&self, a: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= a;
        }
        Self::new(out)
    }

    /// Exact division by a polynomial whose leading coefficient divides
    /// everything it needs to. Returns `None` when the remainder is nonzero
    /// or a non-integral quotient coefficient appears.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_z(d)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Long division over ℤ; `None` if a quotient coefficient is not integral.
    pub fn div_rem_z(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        Some((IntPoly::new(q), IntPoly::new(r)))
    }

    /// Pseudo-remainder: lc(d)^(deg f − deg d + 1)·f mod d.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return self.clone();
        }
        let lc = d.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let top = r.leading();
            let lhs = r.scale(&lc);
            let rhs = IntPoly::monomial(top, shift) * d;
            r = lhs - rhs;
        }
        r
    }

    /// Gcd over ℚ, returned primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.deg() == 0 {
            return true;
        }
        self.gcd(&self.derivative()).deg() == 0
    }

    /// c_i = c_{d−i} for all i.
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Resultant as the determinant of the Sylvester matrix.
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        let (m, n) = (self.deg(), other.deg());
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        if m == 0 && n == 0 {
            return BigInt::one();
        }
        let size = m + n;
        let mut s = IntMatrix::zeros(size, size);
        for r in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                s[(r, r + j)] = c.clone();
            }
        }
        for r in 0..m {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                s[(n + r, r + j)] = c.clone();
            }
        }
        s.det()
    }

    /// (−1)^(n(n−1)/2)·Res(f, f′)/lc(f).
    pub fn discriminant(&self) -> BigInt {
        let n = self.deg();
        if n == 0 {
            return BigInt::zero();
        }
        if n == 1 {
            return BigInt::one();
        }
        let r = self.resultant(&self.derivative()) / self.leading();
        if (n * (n - 1) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// f(g(X)).
    pub fn compose(&self, g: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &IntPoly::constant(c.clone());
        }
        acc
    }

    /// Coefficients as decimal strings, low to high.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings(s: &[String]) -> Option<IntPoly> {
        let mut v = Vec::with_capacity(s.len());
        for x in s {
            v.push(x.parse::<BigInt>().ok()?);
        }
        Some(IntPoly::new(v))
    }

    /// Rendering in the variable `var`, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("X"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, o: IntPoly) -> IntPoly {
                (&self).$m(&o)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, o: &IntPoly) -> IntPoly {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn quadratic_discriminant() {
        // X² + 3X + 1
        assert_eq!(p(&[1, 3, 1]).discriminant(), BigInt::from(5));
        // X² + bX + c with b = −4, c = 7
        assert_eq!(p(&[7, -4, 1]).discriminant(), BigInt::from(16 - 28));
    }

    #[test]
    fn cubic_discriminant() {
        assert_eq!(p(&[0, -4, 0, 1]).discriminant(), BigInt::from(256));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]) * p(&[2, 1]);
        let b = p(&[-1, 1]) * p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert!(!(p(&[-1, 1]) * p(&[-1, 1])).is_squarefree());
        assert!(p(&[-5, 0, 1]).is_squarefree());
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 1]) * p(&[1, 2, 3]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 2, 3])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])), None);
    }

    #[test]
    fn compose_and_display() {
        let f = p(&[0, 0, 1]);
        assert_eq!(f.compose(&p(&[1, 1])), p(&[1, 2, 1]));
        assert_eq!(p(&[16, 6, 1, 0, 4, 1]).display_with("Y"), "Y^5 + 4Y^4 + Y^2 + 6Y + 16");
    }
}
