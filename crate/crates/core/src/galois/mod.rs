//! Galois theory of reciprocal characteristic polynomials: reductions mod
//! p, Dedekind types, resolvents, and the hyperoctahedral certificate.

pub mod fp;
pub mod hyperoct;
pub mod resolvent;
pub mod roots;
pub mod trace;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use fp::{factor_mod_p, is_prime, primes_up_to, FpPoly, DEFAULT_SEED};
pub use hyperoct::{h_k3_type_table, hyperoctahedral_certificate, HyperGroup, HyperoctahedralVerdict};
pub use resolvent::{
    cubic_resolvent, galois_group_quartic, quintic_group_is_s5, quintic_is_solvable, weber_sextic_resolvent,
    QuarticGroup, QuinticEvidence, WeberResolvent,
};
pub use trace::{delta_invariants, trace_polynomial, DeltaInvariants, TracePolyPair};

use crate::algebra::{rational_roots, sturm_real_roots, IntMatrix, IntPoly};
use crate::error::Result;
use crate::perm::CycleType;
use crate::report::Outcome;

/// Primes scanned when the caller gives no budget.
pub const DEFAULT_PRIME_BUDGET: u64 = 500;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DedekindType {
    Valid(CycleType),
    Invalid,
}

/// Degrees of the irreducible factors of f mod p. Invalid when p is not
/// a prime, divides the leading coefficient, or f mod p has a repeated
/// factor.
pub fn dedekind_type(f: &IntPoly, p: u64) -> DedekindType {
    if !is_prime(p) || (f.leading() % BigInt::from(p)).is_zero() {
        return DedekindType::Invalid;
    }
    let fp = FpPoly::from_int(f, p);
    if !fp.is_squarefree() {
        return DedekindType::Invalid;
    }
    let mut parts = Vec::new();
    for (g, d) in fp.distinct_degree() {
        parts.extend(std::iter::repeat(d).take(g.deg() / d));
    }
    DedekindType::Valid(CycleType::new(parts))
}

/// Smallest prime ≤ budget modulo which f stays irreducible of full degree.
pub fn irreducibility_prime(f: &IntPoly, budget: u64) -> Option<u64> {
    let n = f.deg();
    if n == 0 {
        return None;
    }
    primes_up_to(budget).find(|&p| {
        let fp = FpPoly::from_int(f, p);
        fp.deg() == n && fp.is_irreducible()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Unknown,
}

/// Irreducibility over ℚ. Decided exactly up to degree 5; above that
/// only a mod-p witness or incompatible factor-degree patterns prove it.
pub fn irreducibility_over_q(f: &IntPoly, budget: u64) -> Irreducibility {
    let f = f.primitive_part();
    let n = f.deg();
    if n <= 1 {
        return Irreducibility::Irreducible;
    }
    if irreducibility_prime(&f, budget).is_some() {
        return Irreducibility::Irreducible;
    }
    if !f.is_squarefree() || !rational_roots(&f).is_empty() {
        return Irreducibility::Reducible;
    }
    match n {
        2 | 3 => Irreducibility::Irreducible,
        4 | 5 => match has_quadratic_factor(&f) {
            Some(true) => Irreducibility::Reducible,
            Some(false) => Irreducibility::Irreducible,
            None => Irreducibility::Unknown,
        },
        _ => {
            if degree_patterns_exclude_factors(&f, budget) {
                Irreducibility::Irreducible
            } else {
                Irreducibility::Unknown
            }
        }
    }
}

/// a^(n−1)·f(y/a): monic with the same splitting behaviour.
fn monic_model(f: &IntPoly) -> IntPoly {
    let n = f.deg();
    let a = f.leading();
    IntPoly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i == n { BigInt::one() } else { c * num_traits::pow(a.clone(), n - 1 - i) })
            .collect(),
    )
}

/// Quadratic factors over ℤ, found from pairs of numerical roots and
/// confirmed by exact division. None if the roots could not be refined.
fn has_quadratic_factor(f: &IntPoly) -> Option<bool> {
    let h = monic_model(f);
    let r = roots::aberth_f64(&h).iter().fold(1f64, |m, z| m.max(z.norm()));
    let bits = 8 * (r.log2().ceil().max(1.0) as u32 + 4) + 128;
    let z = roots::complex_roots(&h, bits).ok()?;
    let tol = BigInt::one() << (bits - 8);
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            let s = z[i].add(&z[j]);
            let pr = z[i].mul(&z[j], bits);
            if s.im.abs() > tol || pr.im.abs() > tol {
                continue;
            }
            let (s0, ds) = roots::round_fix(&s.re, bits);
            let (p0, dp) = roots::round_fix(&pr.re, bits);
            if ds > tol || dp > tol {
                continue;
            }
            let quad = IntPoly::new(vec![p0, -s0, BigInt::one()]);
            if h.div_exact(&quad).is_some() {
                return Some(true);
            }
        }
    }
    Some(false)
}

/// True when no proper factor degree is compatible with the factor
/// patterns of f modulo the primes ≤ budget.
fn degree_patterns_exclude_factors(f: &IntPoly, budget: u64) -> bool {
    let n = f.deg();
    let mut possible = vec![true; n + 1];
    for p in primes_up_to(budget) {
        let DedekindType::Valid(t) = dedekind_type(f, p) else { continue };
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for &d in t.parts() {
            for s in (d..=n).rev() {
                sums[s] |= sums[s - d];
            }
        }
        for s in 0..=n {
            possible[s] &= sums[s];
        }
        if (1..n).all(|s| !possible[s]) {
            return true;
        }
    }
    false
}

/// Outcome of the Galois-pinching test for one matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinchingReport {
    pub charpoly: IntPoly,
    pub reciprocal: bool,
    pub trace_poly: Option<IntPoly>,
    /// Q squarefree with k real roots, none in [0, 4].
    pub real_split: Option<bool>,
    pub hyperoctahedral: Option<HyperoctahedralVerdict>,
    pub outcome: Outcome,
    pub reason: Option<String>,
}

/// P splits over ℝ with simple roots iff its trace polynomial is
/// squarefree and real-rooted with no root in [0, 4].
pub fn real_split(pair: &TracePolyPair) -> Result<bool> {
    let q = &pair.q;
    if !q.is_squarefree() {
        return Ok(false);
    }
    let zero = BigInt::zero();
    let four = BigInt::from(4);
    if q.eval(&zero).is_zero() || q.eval(&four).is_zero() {
        return Ok(false);
    }
    let total = sturm_real_roots(q, None)?;
    let inside =
        sturm_real_roots(q, Some((&BigRational::from_integer(zero), &BigRational::from_integer(four))))?;
    Ok(total == pair.k() && inside == 0)
}

/// Irreducible, real-split, and with hyperoctahedral Galois group.
pub fn galois_pinching_certificate(a: &IntMatrix, prime_budget: u64, seed: u64) -> Result<PinchingReport> {
    let p = a.charpoly()?;
    let mut rep = PinchingReport {
        charpoly: p.clone(),
        reciprocal: false,
        trace_poly: None,
        real_split: None,
        hyperoctahedral: None,
        outcome: Outcome::Fail,
        reason: None,
    };
    let Ok(pair) = trace_polynomial(&p) else {
        rep.reason = Some("characteristic polynomial is not reciprocal".into());
        return Ok(rep);
    };
    rep.reciprocal = true;
    rep.trace_poly = Some(pair.q.clone());
    let split = real_split(&pair)?;
    rep.real_split = Some(split);
    let verdict = hyperoctahedral_certificate(&pair, prime_budget, seed);
    let group = verdict.group;
    rep.hyperoctahedral = Some(verdict);
    if !split {
        rep.reason = Some("does not split over ℝ with simple roots".into());
        return Ok(rep);
    }
    match group {
        HyperGroup::Gk => rep.outcome = Outcome::Pass,
        HyperGroup::Unknown => {
            rep.outcome = Outcome::Inconclusive;
            rep.reason = Some("Galois group not determined within the prime budget".into());
        }
        g => rep.reason = Some(format!("Galois group is contained in {}", g.name(pair.k()))),
    }
    if rep.outcome == Outcome::Inconclusive && irreducibility_over_q(&p, prime_budget) == Irreducibility::Reducible {
        rep.outcome = Outcome::Fail;
        rep.reason = Some("characteristic polynomial is reducible".into());
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedekind_basics() {
        assert_eq!(dedekind_type(&IntPoly::from_i64(&[1, -2, 1]), 5), DedekindType::Invalid);
        assert_eq!(
            dedekind_type(&IntPoly::from_i64(&[-1, 0, 1]), 5),
            DedekindType::Valid(CycleType::new(vec![1, 1]))
        );
    }

    #[test]
    fn irreducibility() {
        use Irreducibility::*;
        // X⁴ + 1 is reducible mod every prime but irreducible over ℚ.
        assert_eq!(irreducibility_prime(&IntPoly::from_i64(&[1, 0, 0, 0, 1]), 500), None);
        assert_eq!(irreducibility_over_q(&IntPoly::from_i64(&[1, 0, 0, 0, 1]), 500), Irreducible);
        let prod = IntPoly::from_i64(&[2, 0, 1]) * IntPoly::from_i64(&[3, 1, 1]);
        assert_eq!(irreducibility_over_q(&prod, 500), Reducible);
        let five = IntPoly::from_i64(&[2, 0, 1]) * IntPoly::from_i64(&[1, 1, 0, 1]);
        assert_eq!(irreducibility_over_q(&five, 500), Reducible);
        assert_eq!(irreducibility_over_q(&IntPoly::from_i64(&[-1, -1, 0, 0, 0, 1]), 500), Irreducible);
    }

    #[test]
    fn identity_is_not_pinching() {
        let r = galois_pinching_certificate(&IntMatrix::identity(4), 100, DEFAULT_SEED).unwrap();
        assert_eq!(r.outcome, Outcome::Fail);
    }
}
