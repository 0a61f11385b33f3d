//! Quintic Galois groups: Weber's sextic resolvent on a solvable and a
//! non-solvable quintic, and the Dedekind route to S5.
//!
//!     cargo run --release --example weber_resolvent

use origami_monodromy::algebra::IntPoly;
use origami_monodromy::galois::{quintic_group_is_s5, weber_sextic_resolvent, DEFAULT_PRIME_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("X⁵ − 2 (solvable, F20)", IntPoly::from_i64(&[-2, 0, 0, 0, 0, 1])),
        ("X⁵ − X − 1 (S5)", IntPoly::from_i64(&[-1, -1, 0, 0, 0, 1])),
        ("X⁵ + 15X + 12 (solvable)", IntPoly::from_i64(&[12, 15, 0, 0, 0, 1])),
    ];
    for (name, q) in cases {
        println!("{name}");
        let w = weber_sextic_resolvent(&q)?;
        println!("  SWR = {}  ({} bits, disc check {:?})", w.poly.display_with("Y"), w.bits, w.disc_check);
        let ev = quintic_group_is_s5(&q, DEFAULT_PRIME_BUDGET)?;
        println!(
            "  irreducible mod {:?}, transposition mod {:?}, solvable {:?}, S5 {}",
            ev.irreducible_prime, ev.transposition_prime, ev.solvable, ev.is_s5
        );
    }
    Ok(())
}
