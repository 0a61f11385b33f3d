//! Polynomials over 𝔽_p and their factorization: squarefree
//! decomposition, distinct-degree splitting, then Cantor–Zassenhaus.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::IntPoly;
use crate::error::{Error, Result};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed_0f_0a1a;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(bound: u64) -> impl Iterator<Item = u64> {
    (2..=bound).filter(|&p| is_prime(p))
}

/// Dense polynomial over 𝔽_p, coefficients low to high, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = f
            .coeffs()
            .iter()
            .map(|x| {
                let r = ((x % &pb) + &pb) % &pb;
                r.to_u64().unwrap()
            })
            .collect();
        FpPoly::new(p, c)
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: vec![] }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.lc(), self.p);
        FpPoly::new(self.p, self.c.iter().map(|&x| mulmod(x, inv, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let g = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        FpPoly::new(self.p, (0..n).map(|i| (g(&self.c, i) + g(&o.c, i)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let g = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        FpPoly::new(self.p, (0..n).map(|i| (g(&self.c, i) + self.p - g(&o.c, i)) % self.p).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut v = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % self.p as u128;
            }
        }
        FpPoly::new(self.p, v.into_iter().map(|x| x as u64).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero");
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (FpPoly::zero(p), self.clone());
        }
        let inv = invmod(d.lc(), p);
        let mut r = self.c.clone();
        let dd = d.deg();
        let mut q = vec![0; r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = mulmod(r[i + dd], inv, p);
            if t == 0 {
                continue;
            }
            q[i] = t;
            for (j, &dc) in d.c.iter().enumerate() {
                r[i + j] = (r[i + j] + p - mulmod(t, dc, p)) % p;
            }
        }
        (FpPoly::new(p, q), FpPoly::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        FpPoly::new(self.p, self.c.iter().enumerate().skip(1).map(|(i, &x)| mulmod(x, i as u64 % self.p, self.p)).collect())
    }

    /// self^e mod m.
    pub fn pow_mod(&self, e: &BigInt, m: &Self) -> Self {
        let mut result = FpPoly::one(self.p).rem(m);
        let base = self.rem(m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    /// p-th root of a polynomial in X^p.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        FpPoly::new(self.p, self.c.iter().step_by(p).copied().collect())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && (self.deg() == 0 || self.gcd(&self.derivative()).deg() == 0)
    }

    pub fn is_irreducible(&self) -> bool {
        let f = self.factor(DEFAULT_SEED);
        f.len() == 1 && f[0].1 == 1
    }

    /// Monic irreducible factors with multiplicities, sorted by degree and
    /// then coefficients.
    pub fn factor(&self, seed: u64) -> Vec<(FpPoly, usize)> {
        assert!(!self.is_zero(), "factoring zero");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (sf, mult) in self.monic().squarefree_decomposition() {
            for (g, d) in sf.distinct_degree() {
                for f in g.equal_degree(d, &mut rng) {
                    out.push((f, mult));
                }
            }
        }
        out.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
        out
    }

    /// Monic squarefree g_i with self = ∏ g_i^i (Yun, with p-th roots).
    pub fn squarefree_decomposition(&self) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        self.sqf_into(1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out
    }

    fn sqf_into(&self, mult: usize, out: &mut Vec<(FpPoly, usize)>) {
        let f = self.monic();
        if f.deg() == 0 {
            return;
        }
        let d = f.derivative();
        if d.is_zero() {
            f.pth_root().sqf_into(mult * self.p as usize, out);
            return;
        }
        let mut c = f.gcd(&d);
        let mut w = f.div_rem(&c).0;
        let mut i = 1;
        while w.deg() > 0 {
            let y = w.gcd(&c);
            let z = w.div_rem(&y).0;
            if z.deg() > 0 {
                out.push((z.monic(), i * mult));
            }
            i += 1;
            w = y;
            c = c.div_rem(&w).0;
        }
        if c.deg() > 0 {
            c.pth_root().sqf_into(mult * self.p as usize, out);
        }
    }

    /// Splits a monic squarefree polynomial into products of irreducibles
    /// of equal degree.
    pub fn distinct_degree(&self) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = FpPoly::x(self.p);
        let mut h = x.clone();
        let pb = BigInt::from(self.p);
        let mut d = 0;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(&pb, &f);
            let g = f.gcd(&h.sub(&x));
            if g.deg() > 0 {
                out.push((g.clone(), d));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
        }
        if f.deg() > 0 {
            let dd = f.deg();
            out.push((f, dd));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a product of degree-d irreducibles.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let f = self.monic();
        if f.deg() == d {
            return vec![f];
        }
        let p = self.p;
        let n = f.deg();
        loop {
            let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.deg() == 0 {
                continue;
            }
            let b = if p == 2 {
                // trace map a + a² + … + a^(2^(d−1))
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(&f);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (num_traits::pow(BigInt::from(p), d) - 1u32) / 2u32;
                a.pow_mod(&e, &f).sub(&FpPoly::one(p))
            };
            let g = f.gcd(&b);
            if g.deg() > 0 && g.deg() < n {
                let mut out = g.equal_degree(d, rng);
                out.extend(f.div_rem(&g).0.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Renders with the variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        let ip = IntPoly::new(self.c.iter().map(|&x| BigInt::from(x)).collect());
        ip.display_with(var)
    }
}

fn cmp_poly(a: &FpPoly, b: &FpPoly) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.c.iter().rev().cmp(b.c.iter().rev()))
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("X"))
    }
}

/// Factorization of an integer polynomial mod p.
pub fn factor_mod_p(f: &IntPoly, p: u64, seed: u64) -> Result<Vec<(FpPoly, usize)>> {
    if !is_prime(p) {
        return Err(Error::BadPrime(p));
    }
    if (f.leading() % BigInt::from(p)).is_zero() {
        return Err(Error::BadPrime(p));
    }
    Ok(FpPoly::from_int(f, p).factor(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x2_minus_1_mod_5() {
        let f = factor_mod_p(&IntPoly::from_i64(&[-1, 0, 1]), 5, DEFAULT_SEED).unwrap();
        let got: Vec<Vec<u64>> = f.iter().map(|(g, _)| g.coeffs().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 1], vec![4, 1]]);
    }

    #[test]
    fn bad_prime() {
        assert_eq!(factor_mod_p(&IntPoly::from_i64(&[1, 1]), 9, 0), Err(Error::BadPrime(9)));
        assert_eq!(factor_mod_p(&IntPoly::from_i64(&[1, 5]), 5, 0), Err(Error::BadPrime(5)));
    }

    #[test]
    fn repeated_and_pth_power_factors() {
        // (X+1)^3 (X^2+1) over 𝔽_3: the cube has zero derivative part.
        let p = 3;
        let a = FpPoly::new(p, vec![1, 1]);
        let b = FpPoly::new(p, vec![1, 0, 1]);
        let f = a.mul(&a).mul(&a).mul(&b);
        let fac = f.factor(7);
        assert_eq!(fac, vec![(a, 3), (b, 1)]);
    }

    #[test]
    fn char_two_splitting() {
        // X^4 + X = X (X+1)(X^2+X+1) over 𝔽_2
        let f = FpPoly::new(2, vec![0, 1, 0, 0, 1]);
        let fac = f.factor(1);
        let degs: Vec<usize> = fac.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
    }

    #[test]
    fn seed_does_not_change_result() {
        let f = FpPoly::new(13, vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12]);
        assert_eq!(f.factor(1), f.factor(99));
    }
}
