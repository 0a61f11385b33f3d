//! Sturm sequences: exact real-root counting and isolation, and the
//! rational roots of integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

fn to_q(f: &IntPoly) -> Vec<BigRational> {
    f.coeffs().iter().cloned().map(BigRational::from_integer).collect()
}

/// Clears denominators with a positive factor, so signs are untouched.
fn from_q(f: &[BigRational]) -> IntPoly {
    let den = f.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let p = IntPoly::new(f.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect());
    let g = p.content();
    if g.is_zero() {
        p
    } else {
        IntPoly::new(p.coeffs().iter().map(|c| c / &g).collect())
    }
}

fn rem_q(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r = to_q(a);
    let d = to_q(b);
    let db = d.len() - 1;
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = r.last().unwrap() / d.last().unwrap();
        for (j, c) in d.iter().enumerate() {
            let v = c * &f;
            r[shift + j] -= v;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    from_q(&r)
}

/// f, f′, −rem(f, f′), … with positive rescaling at each step.
pub fn sturm_sequence(f: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![f.clone()];
    let d = f.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = rem_q(&seq[n - 2], &seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sgn(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn changes_at(seq: &[IntPoly], x: &BigRational) -> usize {
    sign_changes(seq.iter().map(|p| sgn(&p.eval_rational(x))))
}

fn changes_at_inf(seq: &[IntPoly], positive: bool) -> usize {
    sign_changes(seq.iter().map(|p| {
        let s: i8 = if p.leading().is_positive() { 1 } else { -1 };
        if positive || p.deg() % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Number of distinct real roots in the open interval (lo, hi), or on all
/// of ℝ when no interval is given.
pub fn sturm_real_roots(q: &IntPoly, interval: Option<(&BigRational, &BigRational)>) -> Result<usize> {
    if q.is_zero() {
        return Err(Error::NotSquarefree);
    }
    if !q.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let seq = sturm_sequence(q);
    match interval {
        None => Ok(changes_at_inf(&seq, false) - changes_at_inf(&seq, true)),
        Some((lo, hi)) => {
            if lo >= hi {
                return Ok(0);
            }
            let half_open = changes_at(&seq, lo) - changes_at(&seq, hi);
            let hi_root = q.eval_rational(hi).is_zero();
            Ok(half_open - usize::from(hi_root))
        }
    }
}

/// Cauchy bound: every complex root has modulus below it.
pub fn root_bound(f: &IntPoly) -> BigRational {
    let lc = f.leading().abs();
    let m = f.coeffs()[..f.deg()].iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::one() + BigRational::new(m, lc)
}

/// Disjoint intervals (lo, hi], each containing exactly one real root of
/// the squarefree polynomial `f`, refined until hi − lo ≤ `width`.
pub fn isolate_real_roots(f: &IntPoly, width: &BigRational) -> Result<Vec<(BigRational, BigRational)>> {
    if f.is_zero() || !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if f.deg() == 0 {
        return Ok(vec![]);
    }
    let seq = sturm_sequence(f);
    let b = root_bound(f);
    let mut stack = vec![(-b.clone(), b)];
    let mut out = Vec::new();
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        let n = changes_at(&seq, &lo) - changes_at(&seq, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= *width {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    Ok(out)
}

/// All rational roots of `f`, ascending and without multiplicity.
pub fn rational_roots(f: &IntPoly) -> Vec<BigRational> {
    if f.deg() == 0 {
        return vec![];
    }
    let g = f.gcd(&f.derivative());
    let sq = f.primitive_part().div_exact(&g).expect("gcd divides f");
    let n = sq.deg();
    let a = sq.leading();
    // h(y) = a^(n−1)·sq(y/a) is monic; rational roots of sq are y/a with y
    // an integer root of h.
    let h = IntPoly::new(
        sq.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i == n { BigInt::one() } else { c * num_traits::pow(a.clone(), n - 1 - i) })
            .collect(),
    );
    let one = BigRational::one();
    let mut out = Vec::new();
    for (lo, hi) in isolate_real_roots(&h, &one).expect("squarefree by construction") {
        let mut y = lo.floor().to_integer();
        let top = hi.ceil().to_integer();
        while y <= top {
            if h.eval(&y).is_zero() {
                out.push(BigRational::new(y.clone(), a.clone()));
            }
            y += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}
