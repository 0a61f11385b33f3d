//! Horizontal and vertical multitwists on H1⁽⁰⁾ at the family scale, and a
//! check that both preserve the intersection form.
//!
//!     cargo run --example twist_matrices -- 4 1

use origami_monodromy::certify::family_twists;
use origami_monodromy::homology::build_homology;
use origami_monodromy::origami::FamilyMember;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let genus: u32 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let m: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let f = FamilyMember::new(genus, m, None)?;
    let model = build_homology(&f.origami)?;
    let (mh, mv, sh, sv) = family_twists(&f, &model)?;

    println!("basis: {}", model.h0_labels().join(", "));
    println!("M_h (scale {sh}):\n{mh}");
    println!("M_v (scale {sv}):\n{mv}");
    let omega = model.omega0();
    println!("symplectic: {} {}", mh.preserves_form(omega), mv.preserves_form(omega));
    let a = &mh * &mv;
    println!("charpoly(M_h·M_v) = {}", a.charpoly()?);
    Ok(())
}
