//! Builds an origami from two permutations (or a stairs family member) and
//! prints its basic topology and homology.
//!
//!     cargo run --example inspect_origami -- "(1 2 3)(4 5)" "(1 4)(2 5)(3)"

use origami_monodromy::homology::build_homology;
use origami_monodromy::origami::{FamilyMember, Origami};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let o = match args.as_slice() {
        [h, v] => Origami::parse(h, v)?,
        _ => FamilyMember::new(5, 1, None)?.origami,
    };
    println!("squares   {}", o.n());
    println!("h         {}", o.h());
    println!("v         {}", o.v());
    println!("connected {}", o.is_connected());
    o.require_connected()?;
    println!("genus     {}", o.genus()?);
    println!("stratum   {:?}", o.stratum()?);

    let model = build_homology(&o)?;
    println!("H1 basis  {}", model.labels().join(", "));
    println!("Ω on H1:\n{}", model.gram());
    println!("H1⁽⁰⁾ basis {}", model.h0_labels().join(", "));
    println!("Ω on H1⁽⁰⁾ (det {}):\n{}", model.omega0().det(), model.omega0());
    Ok(())
}
