//! Cubic resolvent of a quartic, Weber's sextic resolvent of a quintic,
//! and the Galois-group decisions built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::fp::{primes_up_to, FpPoly};
use super::roots::{complex_roots, round_fix, CFix};
use super::{dedekind_type, irreducibility_over_q, irreducibility_prime, DedekindType, Irreducibility};
use crate::algebra::{is_rational_square, rational_roots, IntPoly};
use crate::error::{Error, Result};

/// Y³ − b₂Y² + (b₁b₃ − 4b₀)Y − (b₀b₃² − 4b₀b₂ + b₁²) for the monic
/// quartic Y⁴ + b₃Y³ + b₂Y² + b₁Y + b₀.
pub fn cubic_resolvent(q: &IntPoly) -> Result<IntPoly> {
    if q.deg() != 4 || !q.is_monic() {
        return Err(Error::Dimension("cubic resolvent needs a monic quartic".into()));
    }
    let (b0, b1, b2, b3) = (q.coeff(0), q.coeff(1), q.coeff(2), q.coeff(3));
    let c0 = -(&b0 * &b3 * &b3 - BigInt::from(4) * &b0 * &b2 + &b1 * &b1);
    let c1 = &b1 * &b3 - BigInt::from(4) * &b0;
    Ok(IntPoly::new(vec![c0, c1, -b2, BigInt::one()]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuarticGroup {
    S4,
    A4,
    #[serde(rename = "D4-or-C4")]
    D4OrC4,
    V4,
}

/// Galois group of an irreducible quartic from the rational roots of its
/// cubic resolvent and the squareness of the discriminant.
pub fn galois_group_quartic(q: &IntPoly) -> Result<QuarticGroup> {
    if irreducibility_over_q(q, 500) != Irreducibility::Irreducible {
        return Err(Error::NotIrreducible);
    }
    let cr = cubic_resolvent(q)?;
    let disc = BigRational::from_integer(q.discriminant());
    Ok(match rational_roots(&cr).len() {
        0 if is_rational_square(&disc) => QuarticGroup::A4,
        0 => QuarticGroup::S4,
        1 => QuarticGroup::D4OrC4,
        _ => QuarticGroup::V4,
    })
}

/// Weber's sextic resolvent together with how it was validated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeberResolvent {
    pub poly: IntPoly,
    pub bits: u32,
    /// Disc(SWR)·Disc(Q) is a nonzero rational square; None if Disc(SWR) = 0.
    pub disc_check: Option<bool>,
}

/// Index pairs of the pentagon and the pentagram on five roots.
const PENTAGON: [(usize, usize); 5] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
const PENTAGRAM: [(usize, usize); 5] = [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)];

fn permutations5() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let mut a = [0, 1, 2, 3, 4];
    heap(&mut a, 5, &mut out);
    out
}

fn heap(a: &mut [usize; 5], k: usize, out: &mut Vec<[usize; 5]>) {
    if k == 1 {
        out.push(*a);
        return;
    }
    for i in 0..k {
        heap(a, k - 1, out);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

/// One permutation per coset of the order-20 stabilizer of θ: the
/// stabilizer maps the pentagon to itself or to the pentagram.
fn coset_representatives() -> Vec<[usize; 5]> {
    let norm = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
    let mut seen = Vec::new();
    let mut reps = Vec::new();
    for s in permutations5() {
        let mut img: Vec<(usize, usize)> = PENTAGON.iter().map(|&(a, b)| norm((s[a], s[b]))).collect();
        img.sort();
        let mut comp: Vec<(usize, usize)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).filter(|e| !img.contains(e)).collect();
        comp.sort();
        let key = img.clone().min(comp);
        if !seen.contains(&key) {
            seen.push(key);
            reps.push(s);
        }
    }
    debug_assert_eq!(reps.len(), 6);
    reps
}

fn swr_at(q: &IntPoly, bits: u32) -> Result<IntPoly> {
    let roots = complex_roots(q, bits)?;
    let mut coeffs = vec![CFix::from_int(&BigInt::one(), bits)];
    for s in coset_representatives() {
        let x: Vec<&CFix> = s.iter().map(|&i| &roots[i]).collect();
        let mut t = CFix::zero();
        for &(a, b) in &PENTAGON {
            t = t.add(&x[a].mul(x[b], bits));
        }
        for &(a, b) in &PENTAGRAM {
            t = t.sub(&x[a].mul(x[b], bits));
        }
        let theta = t.mul(&t, bits);
        // multiply by (Y − θ)
        let mut next = vec![CFix::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(&theta, bits));
        }
        coeffs = next;
    }
    let tol = BigInt::one() << (bits - 24);
    let mut out = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        let (r, dist) = round_fix(&c.re, bits);
        if dist > tol || c.im.abs() > tol {
            return Err(Error::Numeric(format!("resolvent coefficient not integral at {bits} bits")));
        }
        out.push(r);
    }
    Ok(IntPoly::new(out))
}

/// θ = (x₁x₂ + x₂x₃ + x₃x₄ + x₄x₅ + x₅x₁ − x₁x₃ − x₃x₅ − x₅x₂ − x₂x₄ − x₄x₁)²
/// takes six values on the roots of Q; SWR is the monic sextic with those
/// roots. Computed numerically, accepted only if it is stable under
/// precision doubling.
pub fn weber_sextic_resolvent(q: &IntPoly) -> Result<WeberResolvent> {
    if q.deg() != 5 || !q.is_monic() {
        return Err(Error::Dimension("Weber resolvent needs a monic quintic".into()));
    }
    if !q.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let r = super::roots::aberth_f64(q).iter().fold(1f64, |m, z| m.max(z.norm()));
    let l = r.log2().ceil().max(1.0) as u32;
    let bits = 32 * (l + 4) + 128;
    let a = swr_at(q, bits)?;
    let b = swr_at(q, 2 * bits)?;
    if a != b {
        return Err(Error::Numeric("resolvent changed under precision doubling".into()));
    }
    let d = a.discriminant();
    let disc_check = if d.is_zero() {
        None
    } else {
        Some(is_rational_square(&BigRational::from_integer(d * q.discriminant())))
    };
    if disc_check == Some(false) {
        return Err(Error::Verification("Disc(SWR)·Disc(Q) is not a square".into()));
    }
    Ok(WeberResolvent { poly: a, bits, disc_check })
}

/// A monic irreducible quintic is solvable iff its Weber resolvent has a
/// rational root.
pub fn quintic_is_solvable(q: &IntPoly) -> Result<bool> {
    if q.deg() != 5 || !q.is_monic() {
        return Err(Error::Dimension("expected a monic quintic".into()));
    }
    if irreducibility_over_q(q, 500) != Irreducibility::Irreducible {
        return Err(Error::NotIrreducible);
    }
    let swr = weber_sextic_resolvent(q)?;
    Ok(!rational_roots(&swr.poly).is_empty())
}

/// Everything learned while deciding Gal(Q) = S₅.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuinticEvidence {
    pub irreducible: bool,
    pub irreducible_prime: Option<u64>,
    pub disc_square: bool,
    /// A prime where Q factors with type (2,1,1,1).
    pub transposition_prime: Option<u64>,
    pub swr: Option<IntPoly>,
    /// A prime where SWR is irreducible, ruling out a rational root.
    pub swr_irreducible_prime: Option<u64>,
    pub solvable: Option<bool>,
    pub is_s5: bool,
}

/// Gal(Q) = S₅ iff Q is irreducible, Disc(Q) is not a square and Q is not
/// solvable. The Dedekind route (a transposition type) and the resolvent
/// route are both run; they must agree.
pub fn quintic_group_is_s5(q: &IntPoly, prime_budget: u64) -> Result<QuinticEvidence> {
    let mut ev = QuinticEvidence {
        irreducible: false,
        irreducible_prime: None,
        disc_square: false,
        transposition_prime: None,
        swr: None,
        swr_irreducible_prime: None,
        solvable: None,
        is_s5: false,
    };
    if q.deg() != 5 {
        return Ok(ev);
    }
    ev.irreducible_prime = irreducibility_prime(q, prime_budget);
    ev.irreducible = irreducibility_over_q(q, prime_budget) == Irreducibility::Irreducible;
    if !ev.irreducible {
        return Ok(ev);
    }
    ev.disc_square = is_rational_square(&BigRational::from_integer(q.discriminant()));
    if ev.disc_square {
        return Ok(ev);
    }
    ev.transposition_prime = primes_up_to(prime_budget).find(|&p| {
        matches!(dedekind_type(q, p), DedekindType::Valid(t) if t.parts() == [2, 1, 1, 1])
    });
    if q.is_monic() {
        if let Ok(w) = weber_sextic_resolvent(q) {
            ev.swr_irreducible_prime = primes_up_to(prime_budget).find(|&p| {
                let f = FpPoly::from_int(&w.poly, p);
                f.deg() == 6 && f.is_irreducible()
            });
            ev.solvable = Some(!rational_roots(&w.poly).is_empty());
            ev.swr = Some(w.poly);
        }
    }
    if ev.transposition_prime.is_some() && ev.solvable == Some(true) {
        return Err(Error::Verification("transposition found in a solvable quintic".into()));
    }
    ev.is_s5 = ev.transposition_prime.is_some() || ev.solvable == Some(false);
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_cr(r: [i64; 4]) -> Vec<i64> {
        let mut v = vec![r[0] * r[1] + r[2] * r[3], r[0] * r[2] + r[1] * r[3], r[0] * r[3] + r[1] * r[2]];
        v.sort();
        v
    }

    #[test]
    fn resolvent_of_split_quartic() {
        let q = IntPoly::from_i64(&[24, -50, 35, -10, 1]);
        let cr = cubic_resolvent(&q).unwrap();
        let mut got: Vec<i64> =
            rational_roots(&cr).iter().map(|r| r.to_integer().try_into().unwrap()).collect();
        got.sort();
        assert_eq!(got, roots_cr([1, 2, 3, 4]));
        assert_eq!(cr.discriminant(), q.discriminant());
    }

    #[test]
    fn depressed_form() {
        // Y⁴ + pY² + qY + r → Y³ − pY² − 4rY + (4pr − q²)
        let (p, q, r) = (3i64, -5, 7);
        let cr = cubic_resolvent(&IntPoly::from_i64(&[r, q, p, 0, 1])).unwrap();
        assert_eq!(cr, IntPoly::from_i64(&[4 * p * r - q * q, -4 * r, -p, 1]));
    }

    #[test]
    fn quartic_groups() {
        assert_eq!(galois_group_quartic(&IntPoly::from_i64(&[1, 0, 0, 0, 1])).unwrap(), QuarticGroup::V4);
        assert_eq!(galois_group_quartic(&IntPoly::from_i64(&[-2, 0, 0, 0, 1])).unwrap(), QuarticGroup::D4OrC4);
        assert_eq!(galois_group_quartic(&IntPoly::from_i64(&[-1, -1, 0, 0, 1])).unwrap(), QuarticGroup::S4);
        // X⁴ + 8X + 12 has group A4
        assert_eq!(galois_group_quartic(&IntPoly::from_i64(&[12, 8, 0, 0, 1])).unwrap(), QuarticGroup::A4);
        assert_eq!(
            galois_group_quartic(&IntPoly::from_i64(&[-1, 0, 0, 0, 1])),
            Err(Error::NotIrreducible)
        );
    }

    #[test]
    fn six_cosets() {
        assert_eq!(coset_representatives().len(), 6);
    }

    #[test]
    fn binomial_quintic_is_solvable() {
        let q = IntPoly::from_i64(&[-2, 0, 0, 0, 0, 1]);
        assert!(quintic_is_solvable(&q).unwrap());
        let ev = quintic_group_is_s5(&q, 200).unwrap();
        assert!(!ev.is_s5);
        assert_eq!(ev.transposition_prime, None);
    }

    #[test]
    fn bring_jerrard_is_s5() {
        let q = IntPoly::from_i64(&[-1, -1, 0, 0, 0, 1]);
        assert!(!quintic_is_solvable(&q).unwrap());
        let ev = quintic_group_is_s5(&q, 200).unwrap();
        assert!(ev.is_s5 && ev.transposition_prime.is_some() && ev.solvable == Some(false));
        assert_eq!(ev.swr.as_ref().map(|s| s.deg()), Some(6));
    }

    #[test]
    fn other_solvable_quintics() {
        // X⁵ − 5X + 12 has group D5; X⁵ + 20X + 16 has group A5.
        assert!(quintic_is_solvable(&IntPoly::from_i64(&[12, -5, 0, 0, 0, 1])).unwrap());
        assert!(!quintic_is_solvable(&IntPoly::from_i64(&[16, 20, 0, 0, 0, 1])).unwrap());
    }
}
