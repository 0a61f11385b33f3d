//! Three-transvection setup and unipotent radical witnesses, on and off the
//! c = 0 parameter lock.
//!
//!     cargo run --example radical_witness -- 5 3

use origami_monodromy::certify::{radical_vector, three_transvection_setup, unipotent_radical_witness};
use origami_monodromy::homology::build_homology;
use origami_monodromy::origami::FamilyMember;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let genus: u32 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let m: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(2);

    let locked = FamilyMember::new(genus, m, None)?;
    let lock_n = locked.n_param;
    for n in lock_n.saturating_sub(3).max(genus as usize)..=lock_n + 3 {
        let member = match FamilyMember::new(genus, m, Some((n, locked.m_param))) {
            Ok(x) => x,
            Err(e) => {
                println!("N = {n}: {e}");
                continue;
            }
        };
        let model = build_homology(&member.origami)?;
        let t = match three_transvection_setup(&model, member.family.triple_directions()) {
            Ok(t) => t,
            Err(e) => {
                println!("N = {n}: {e}");
                continue;
            }
        };
        let e = radical_vector(&t)?;
        let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        print!("N = {n:>3}  (a, b, c) = ({}, {}, {})  e = ({})", t.a, t.b, t.c, e.join(", "));
        match unipotent_radical_witness(&t) {
            Some(w) => {
                let word: Vec<String> =
                    w.word.iter().map(|l| format!("R{}^{}", l.generator + 1, l.exponent)).collect();
                println!("  U = {}{}", word.join("·"), if w.closed_form { "  (closed form)" } else { "" });
            }
            None => println!("  no witness"),
        }
    }
    Ok(())
}
