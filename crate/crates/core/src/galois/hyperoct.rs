//! Where Gal(P) sits inside the hyperoctahedral group G_k = ℤ₂ᵏ ⋊ S_k.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::resolvent::{galois_group_quartic, quintic_group_is_s5, QuarticGroup};
use super::trace::{delta_invariants, DeltaInvariants, TracePolyPair};
use super::{dedekind_type, factor_mod_p, irreducibility_prime, DedekindType};
use crate::algebra::is_rational_square;
use crate::perm::{cycle_type, CycleType, Permutation};
use crate::report::{Evidence, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HyperGroup {
    #[serde(rename = "G_k")]
    Gk,
    #[serde(rename = "S_k")]
    Sk,
    #[serde(rename = "H_k1")]
    Hk1,
    #[serde(rename = "H_k2")]
    Hk2,
    #[serde(rename = "H_k3")]
    Hk3,
    #[serde(rename = "unknown")]
    Unknown,
}

impl HyperGroup {
    pub fn name(self, k: usize) -> String {
        match self {
            HyperGroup::Gk => format!("G_{k}"),
            HyperGroup::Sk => format!("S_{k}"),
            HyperGroup::Hk1 => format!("H_{{{k},1}}"),
            HyperGroup::Hk2 => format!("H_{{{k},2}}"),
            HyperGroup::Hk3 => format!("H_{{{k},3}}"),
            HyperGroup::Unknown => "unknown".into(),
        }
    }
}

/// The group reached, the witnesses that got there, and for a failed
/// step the subgroup Gal(P) is then known to lie in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperoctahedralVerdict {
    pub k: usize,
    pub group: HyperGroup,
    pub irreducibility_prime: Option<u64>,
    /// Prime and cycle type of P outside H_{k,3} and the diagonal S_k.
    pub type_witness: Option<(u64, CycleType)>,
    pub delta: DeltaInvariants,
    pub evidence: Vec<Evidence>,
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Points (i, +) ↦ i and (i, −) ↦ i + k, 1-based.
fn signed_action(tau: &[usize], eps: bool) -> Permutation {
    let k = tau.len();
    let mut img = vec![0; 2 * k];
    for i in 0..k {
        let (a, b) = (tau[i], tau[i] + k);
        img[i] = if eps { b } else { a } + 1;
        img[i + k] = if eps { a } else { b } + 1;
    }
    Permutation::new(img).expect("signed permutation")
}

/// Cycle types on 2k points of H_{k,3} = {±1} × S_k, the identity included.
pub fn h_k3_type_table(k: usize) -> BTreeSet<CycleType> {
    let mut out = BTreeSet::new();
    for tau in permutations(k) {
        for eps in [false, true] {
            out.insert(cycle_type(&signed_action(&tau, eps)));
        }
    }
    out
}

/// The ε = +1 half: S_k acting diagonally on the pairs.
pub fn diagonal_type_table(k: usize) -> BTreeSet<CycleType> {
    permutations(k).iter().map(|t| cycle_type(&signed_action(t, false))).collect()
}

/// Runs the five exclusion steps in order and stops at the first one
/// that fails or runs out of primes.
pub fn hyperoctahedral_certificate(pair: &TracePolyPair, prime_budget: u64, seed: u64) -> HyperoctahedralVerdict {
    let k = pair.k();
    let delta = delta_invariants(pair);
    let mut v = HyperoctahedralVerdict {
        k,
        group: HyperGroup::Unknown,
        irreducibility_prime: None,
        type_witness: None,
        delta: delta.clone(),
        evidence: Vec::new(),
    };
    if !(2..=5).contains(&k) {
        v.evidence.push(Evidence::new("degree in range", format!("k = {k}"), Outcome::Inconclusive));
        return v;
    }

    // (1) P irreducible
    let p = &pair.p;
    match irreducibility_prime(p, prime_budget) {
        Some(q) => {
            let f = factor_mod_p(p, q, seed).map(|f| f[0].0.to_string()).unwrap_or_default();
            v.irreducibility_prime = Some(q);
            v.evidence.push(Evidence::new("P irreducible mod p", format!("p = {q}: {f}"), Outcome::Pass));
        }
        None => {
            v.evidence.push(Evidence::new(
                "P irreducible mod p",
                format!("no prime ≤ {prime_budget}"),
                Outcome::Inconclusive,
            ));
            return v;
        }
    }

    // (2) Gal(Q) = S_k
    let q = &pair.q;
    let step2 = match k {
        2 => Evidence::new("Gal(Q) = S_2", "Q irreducible since P is", Outcome::Pass),
        3 => {
            let d = q.discriminant();
            let sq = is_rational_square(&BigRational::from_integer(d.clone()));
            Evidence::new("Gal(Q) = S_3: Disc(Q) nonsquare", d, Outcome::from_bool(!sq))
        }
        4 => match galois_group_quartic(q) {
            Ok(g) => Evidence::new("Gal(Q) = S_4 via cubic resolvent", format!("{g:?}"), Outcome::from_bool(g == QuarticGroup::S4)),
            Err(e) => Evidence::new("Gal(Q) = S_4 via cubic resolvent", e, Outcome::Inconclusive),
        },
        _ => match quintic_group_is_s5(q, prime_budget) {
            Ok(ev) => {
                let mut w = Vec::new();
                if let Some(p) = ev.irreducible_prime {
                    w.push(format!("Q irreducible mod {p}"));
                }
                if ev.disc_square {
                    w.push("Disc(Q) square".into());
                }
                if let Some(p) = ev.transposition_prime {
                    w.push(format!("type (2,1,1,1) mod {p}"));
                }
                if let Some(p) = ev.swr_irreducible_prime {
                    w.push(format!("SWR irreducible mod {p}"));
                }
                if let Some(s) = ev.solvable {
                    w.push(format!("solvable = {s}"));
                }
                let outcome = if ev.is_s5 {
                    Outcome::Pass
                } else if !ev.irreducible || ev.disc_square || ev.solvable == Some(true) {
                    Outcome::Fail
                } else {
                    Outcome::Inconclusive
                };
                Evidence::new("Gal(Q) = S_5", w.join("; "), outcome)
            }
            Err(e) => Evidence::new("Gal(Q) = S_5", e, Outcome::Inconclusive),
        },
    };
    let ok2 = step2.outcome;
    v.evidence.push(step2);
    if !ok2.is_pass() {
        return v;
    }

    // (3) Δ₁ nonsquare
    let sq1 = is_rational_square(&delta.delta1);
    v.evidence.push(Evidence::new("Δ1 nonsquare", &delta.delta1, Outcome::from_bool(!sq1)));
    if sq1 {
        v.group = HyperGroup::Hk1;
        return v;
    }

    // (4) Δ₂ nonsquare
    let sq2 = is_rational_square(&delta.delta2);
    v.evidence.push(Evidence::new("Δ2 nonsquare", &delta.delta2, Outcome::from_bool(!sq2)));
    if sq2 {
        v.group = HyperGroup::Hk2;
        return v;
    }

    // (5) a cycle type outside H_{k,3} (which contains the diagonal S_k)
    let table = h_k3_type_table(k);
    let lc = p.leading();
    for prime in super::primes_up_to(prime_budget) {
        if (&lc % BigInt::from(prime)) == BigInt::from(0) {
            continue;
        }
        if let DedekindType::Valid(t) = dedekind_type(p, prime) {
            if !table.contains(&t) {
                v.evidence.push(Evidence::new(
                    "Dedekind type outside H_k3 and S_k",
                    format!("p = {prime}: {t}"),
                    Outcome::Pass,
                ));
                v.type_witness = Some((prime, t));
                v.group = HyperGroup::Gk;
                return v;
            }
        }
    }
    v.evidence.push(Evidence::new(
        "Dedekind type outside H_k3 and S_k",
        format!("no prime ≤ {prime_budget}"),
        Outcome::Inconclusive,
    ));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;
    use crate::galois::trace_polynomial;

    fn types(v: &[&[usize]]) -> BTreeSet<CycleType> {
        v.iter().map(|p| CycleType::new(p.to_vec())).collect()
    }

    #[test]
    fn table_k2() {
        assert_eq!(h_k3_type_table(2), types(&[&[1, 1, 1, 1], &[2, 2]]));
    }

    #[test]
    fn diagonal_inside_table() {
        for k in 2..=5 {
            assert!(diagonal_type_table(k).is_subset(&h_k3_type_table(k)));
        }
    }

    #[test]
    fn product_of_reciprocals_is_never_gk() {
        let p = IntPoly::from_i64(&[1, 0, 1]) * IntPoly::from_i64(&[1, 3, 1]);
        let pair = trace_polynomial(&p).unwrap();
        let v = hyperoctahedral_certificate(&pair, 200, 1);
        assert_ne!(v.group, HyperGroup::Gk);
    }
}
