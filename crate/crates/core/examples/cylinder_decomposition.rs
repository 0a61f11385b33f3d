//! Maximal cylinders of a stairs origami in a few rational directions.
//!
//!     cargo run --example cylinder_decomposition -- 6 2

use origami_monodromy::cylinders::{decompose, Direction};
use origami_monodromy::origami::FamilyMember;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let genus: u32 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(6);
    let m: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(2);
    let f = FamilyMember::new(genus, m, None)?;
    println!("genus {genus}, m = {m}, N = {}, M = {}, {} squares", f.n_param, f.m_param, f.origami.n());

    for (p, q) in [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (1, -2), (1, 4), (1, -4)] {
        let d = Direction::new(p, q)?;
        let cyls = decompose(&f.origami, d);
        let area: usize = cyls.iter().map(|c| c.length * c.height).sum();
        let desc: Vec<String> =
            cyls.iter().map(|c| format!("{}×{} (μ = {})", c.length, c.height, c.modulus())).collect();
        println!("{d:>6}: {} cylinders, area {area}: {}", cyls.len(), desc.join(", "));
    }
    Ok(())
}
