//! Galois-pinching test for A = M_h·M_v: trace polynomial, Δ invariants,
//! Dedekind types, and the hyperoctahedral verdict.
//!
//!     cargo run --release --example galois_pinching -- 6 2

use origami_monodromy::certify::family_twists;
use origami_monodromy::galois::{
    dedekind_type, delta_invariants, galois_pinching_certificate, primes_up_to, trace_polynomial,
    DedekindType, DEFAULT_PRIME_BUDGET, DEFAULT_SEED,
};
use origami_monodromy::homology::build_homology;
use origami_monodromy::origami::FamilyMember;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let genus: u32 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let m: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let f = FamilyMember::new(genus, m, None)?;
    let model = build_homology(&f.origami)?;
    let (mh, mv, _, _) = family_twists(&f, &model)?;
    let a = &mh * &mv;

    let p = a.charpoly()?;
    let pair = trace_polynomial(&p)?;
    println!("P = {p}");
    println!("Q = {}", pair.q.display_with("Y"));
    let d = delta_invariants(&pair);
    println!("Δ1 = {}\nΔ2 = {}", d.delta1, d.delta2);

    let types: Vec<String> = primes_up_to(60)
        .filter_map(|q| match dedekind_type(&p, q) {
            DedekindType::Valid(t) => Some(format!("{q}:{t}")),
            DedekindType::Invalid => None,
        })
        .collect();
    println!("types  {}", types.join(" "));

    let r = galois_pinching_certificate(&a, DEFAULT_PRIME_BUDGET, DEFAULT_SEED)?;
    println!("real split {:?}", r.real_split);
    if let Some(v) = &r.hyperoctahedral {
        for e in &v.evidence {
            println!("  [{}] {}: {}", e.outcome, e.test, e.witness);
        }
        println!("group {}", v.group.name(v.k));
    }
    println!("pinching {}", r.outcome);
    Ok(())
}
