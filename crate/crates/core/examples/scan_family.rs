//! Certifies a short range of one family in parallel and tallies the
//! verdicts. The CLI `scan` command does the same with a resumable JSONL
//! file.
//!
//!     cargo run --release --example scan_family -- 4 1 40

use std::collections::BTreeMap;

use origami_monodromy::certify::{arithmeticity_certificate, CertifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let genus: u32 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let from: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let to: usize = args.get(2).map(|s| s.parse()).transpose()?.unwrap_or(20);
    let opts = CertifyOptions::default();

    let ms: Vec<usize> = (from..=to).collect();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(ms.len().max(1));
    let mut results: Vec<(usize, String)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (ms, opts) = (&ms, &opts);
                s.spawn(move || {
                    ms.iter()
                        .skip(w)
                        .step_by(workers)
                        .map(|&m| match arithmeticity_certificate(genus, m, opts) {
                            Ok(r) => (m, r.verdict.as_str().to_string()),
                            Err(e) => (m, format!("error: {e}")),
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    results.sort();

    let mut tally = BTreeMap::new();
    for (m, v) in &results {
        println!("m = {m:>4}: {v}");
        *tally.entry(v.clone()).or_insert(0) += 1;
    }
    println!("{tally:?}");
    Ok(())
}
