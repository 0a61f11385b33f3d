//! Runs the full density + arithmeticity pipeline on one family member and
//! re-verifies the report from scratch.
//!
//!     cargo run --release --example certify_family -- 4 144

use origami_monodromy::certify::{arithmeticity_certificate, verify_report, CertifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let genus: u32 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let m: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(144);

    let report = arithmeticity_certificate(genus, m, &CertifyOptions::default())?;
    println!("genus {genus}, m = {m}: N = {}, M = {}", report.origami.n_param, report.origami.m_param);
    println!("  charpoly(A) = {}", report.density.pinching.charpoly);
    if let Some(v) = &report.density.pinching.hyperoctahedral {
        for e in &v.evidence {
            println!("  [{}] {}: {}", e.outcome, e.test, e.witness);
        }
    }
    println!("  density       {}", report.density.outcome);
    if let Some(t) = &report.arithmeticity.triple {
        println!("  (a, b, c)     ({}, {}, {})", t.a, t.b, t.c);
    }
    if let Some(w) = &report.arithmeticity.witness {
        let word: Vec<String> = w.word.iter().map(|l| format!("R{}^{}", l.generator + 1, l.exponent)).collect();
        println!("  radical word  {}", word.join("·"));
    }
    println!("  arithmeticity {}", report.arithmeticity.outcome);
    println!("  verdict       {}", report.verdict.as_str());
    if let Some(why) = report.failure() {
        println!("  failed: {why}");
    }
    verify_report(&report)?;
    println!("  re-verified   ok ({} ms)", report.timings_ms["total"]);
    Ok(())
}
