//! Reciprocal polynomials and their trace polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::IntPoly;
use crate::error::{Error, Result};

/// P of degree 2k and Q of degree k with X⁻ᵏ·P(X) = Q(X + 1/X + 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePolyPair {
    pub p: IntPoly,
    pub q: IntPoly,
}

impl TracePolyPair {
    pub fn k(&self) -> usize {
        self.q.deg()
    }

    /// Xᵏ·Q(X + 1/X + 2) = Σ_i q_i (X+1)^(2i) X^(k−i).
    pub fn expand(q: &IntPoly) -> IntPoly {
        let k = q.deg();
        let sq = IntPoly::from_i64(&[1, 2, 1]);
        let mut acc = IntPoly::zero();
        for (i, c) in q.coeffs().iter().enumerate() {
            let term = &sq.pow(i as u32) * &IntPoly::monomial(c.clone(), k - i);
            acc = acc + term;
        }
        acc
    }

    pub fn check(&self) -> bool {
        Self::expand(&self.q) == self.p
    }
}

/// Q from a reciprocal P, via X^j + X^(−j) = s_j(t) with t = X + 1/X,
/// s_0 = 2, s_1 = t, s_{j+1} = t·s_j − s_{j−1}, then t = Y − 2.
pub fn trace_polynomial(p: &IntPoly) -> Result<TracePolyPair> {
    let n = p.deg();
    if p.is_zero() || n % 2 == 1 || !p.is_reciprocal() {
        return Err(Error::NotReciprocal);
    }
    let k = n / 2;
    let t = IntPoly::from_i64(&[-2, 1]);
    let mut s_prev = IntPoly::from_i64(&[2]);
    let mut s_cur = t.clone();
    let mut q = IntPoly::constant(p.coeff(k));
    for j in 1..=k {
        if j > 1 {
            let next = &(&t * &s_cur) - &s_prev;
            s_prev = s_cur;
            s_cur = next;
        }
        q = q + s_cur.scale(&p.coeff(k + j));
    }
    let pair = TracePolyPair { p: p.clone(), q };
    debug_assert!(pair.check());
    Ok(pair)
}

/// Δ₁ = Q(0)·Q(4), Δ₂ = Disc(Q)·Δ₁.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaInvariants {
    #[serde(with = "crate::report::rational")]
    pub delta1: BigRational,
    #[serde(with = "crate::report::rational")]
    pub delta2: BigRational,
    #[serde(with = "crate::report::rational")]
    pub disc_q: BigRational,
}

pub fn delta_invariants(pair: &TracePolyPair) -> DeltaInvariants {
    let q = &pair.q;
    let d1 = q.eval(&BigInt::zero()) * q.eval(&BigInt::from(4));
    let disc = q.discriminant();
    let one = BigInt::one();
    DeltaInvariants {
        delta1: BigRational::new(d1.clone(), one.clone()),
        delta2: BigRational::new(&disc * &d1, one.clone()),
        disc_q: BigRational::new(disc, one),
    }
}
