//! Complex roots to arbitrary precision: f64 Aberth iteration for starting
//! values, then Newton polishing in binary fixed point.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::IntPoly;
use crate::error::{Error, Result};

/// re + i·im scaled by 2^bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFix {
    pub re: BigInt,
    pub im: BigInt,
}

impl CFix {
    pub fn zero() -> Self {
        CFix { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn from_int(x: &BigInt, bits: u32) -> Self {
        CFix { re: x << bits, im: BigInt::zero() }
    }

    fn from_f64(z: Complex64, bits: u32) -> Self {
        let conv = |x: f64| {
            let (m, e) = decompose_f64(x);
            let shift = e + bits as i64;
            if shift >= 0 {
                BigInt::from(m) << shift as u32
            } else {
                BigInt::from(m) >> (-shift) as u32
            }
        };
        CFix { re: conv(z.re), im: conv(z.im) }
    }

    pub fn add(&self, o: &CFix) -> CFix {
        CFix { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &CFix) -> CFix {
        CFix { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &CFix, bits: u32) -> CFix {
        let re = (&self.re * &o.re - &self.im * &o.im) >> bits;
        let im = (&self.re * &o.im + &self.im * &o.re) >> bits;
        CFix { re, im }
    }

    pub fn div(&self, o: &CFix, bits: u32) -> Option<CFix> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let re = ((&self.re * &o.re + &self.im * &o.im) << bits) / &den;
        let im = ((&self.im * &o.re - &self.re * &o.im) << bits) / &den;
        Some(CFix { re, im })
    }

    /// max(|re|, |im|) in fixed units.
    pub fn norm_inf(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }

    pub fn to_c64(&self, bits: u32) -> Complex64 {
        Complex64::new(fix_to_f64(&self.re, bits), fix_to_f64(&self.im, bits))
    }

    /// Rescales from `from` bits to `to` bits.
    pub fn rescale(&self, from: u32, to: u32) -> CFix {
        if to >= from {
            CFix { re: &self.re << (to - from), im: &self.im << (to - from) }
        } else {
            CFix { re: &self.re >> (from - to), im: &self.im >> (from - to) }
        }
    }
}

fn decompose_f64(x: f64) -> (i64, i64) {
    if x == 0.0 {
        return (0, 0);
    }
    let e = x.abs().log2().floor() as i64 - 52;
    let m = (x / 2f64.powi(e as i32)).round() as i64;
    (m, e)
}

pub fn fix_to_f64(x: &BigInt, bits: u32) -> f64 {
    let b = x.bits();
    if b < 1000 {
        x.to_f64().unwrap_or(f64::NAN) / 2f64.powi(bits as i32)
    } else {
        let shift = b - 60;
        (x >> shift).to_f64().unwrap() * 2f64.powi(shift as i32 - bits as i32)
    }
}

fn horner_c64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut f = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        d = d * z + f;
        f = f * z + a;
    }
    (f, d)
}

/// Approximate roots in double precision by Aberth–Ehrlich iteration.
pub fn aberth_f64(f: &IntPoly) -> Vec<Complex64> {
    let n = f.deg();
    if n == 0 {
        return vec![];
    }
    let lc = fix_to_f64(&f.leading(), 0);
    let c: Vec<f64> = f.coeffs().iter().map(|x| fix_to_f64(x, 0) / lc).collect();
    let radius = 1.0 + c[..n].iter().fold(0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0f64;
        for i in 0..n {
            let (fv, dv) = horner_c64(&c, z[i]);
            if fv == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = fv / dv;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn eval_fix(c: &[BigInt], z: &CFix, bits: u32) -> (CFix, CFix) {
    let mut f = CFix::zero();
    let mut d = CFix::zero();
    for a in c.iter().rev() {
        d = d.mul(z, bits).add(&f);
        f = f.mul(z, bits).add(&CFix { re: a.clone(), im: BigInt::zero() });
    }
    (f, d)
}

/// All complex roots of a squarefree polynomial, accurate to roughly
/// 2^(−bits + 32) absolutely.
pub fn complex_roots(f: &IntPoly, bits: u32) -> Result<Vec<CFix>> {
    let n = f.deg();
    let starts = aberth_f64(f);
    let c: Vec<BigInt> = f.coeffs().iter().map(|x| x << bits).collect();
    let tol = BigInt::from(1u64) << 24u32;
    let mut out = Vec::with_capacity(n);
    for z0 in starts {
        let mut z = CFix::from_f64(z0, bits);
        let mut ok = false;
        for _ in 0..(bits as usize + 200) {
            let (fv, dv) = eval_fix(&c, &z, bits);
            let Some(step) = fv.div(&dv, bits) else {
                return Err(Error::Numeric("vanishing derivative".into()));
            };
            z = z.sub(&step);
            if step.norm_inf() < tol {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::Numeric(format!("Newton did not converge at {bits} bits")));
        }
        out.push(z);
    }
    // Newton may send two starts to the same root.
    let sep = BigInt::from(1u64) << (bits / 2);
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if out[i].sub(&out[j]).norm_inf() < sep {
                return Err(Error::Numeric("roots not separated".into()));
            }
        }
    }
    Ok(out)
}

/// Nearest integer to a fixed-point real, with the distance in fixed units.
pub fn round_fix(x: &BigInt, bits: u32) -> (BigInt, BigInt) {
    let half = BigInt::from(1u64) << (bits - 1);
    let r = (x + &half) >> bits;
    let dist = (x - (&r << bits)).abs();
    (r, dist)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let bits = 200;
        let mut r: Vec<f64> = complex_roots(&f, bits).unwrap().iter().map(|z| z.to_c64(bits).re).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((r[1] - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!((r[0] + std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn high_precision_residual() {
        // X^5 − X − 1 at 400 bits: f(z) tiny relative to the scale.
        let f = IntPoly::from_i64(&[-1, -1, 0, 0, 0, 1]);
        let bits = 400;
        let c: Vec<BigInt> = f.coeffs().iter().map(|x| x << bits).collect();
        for z in complex_roots(&f, bits).unwrap() {
            let (v, _) = eval_fix(&c, &z, bits);
            assert!(v.norm_inf().bits() < 40);
        }
    }
}
