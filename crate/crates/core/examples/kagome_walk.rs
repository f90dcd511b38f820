//! Kagome walk from a p-site: the support cycles p → q → o → p.

use pauliwalk::analysis::probabilities;
use pauliwalk::walk::{kagome_site_type, make_program, support_sublattice, InitialState, Lattice, LatticeField};

fn main() -> pauliwalk::Result<()> {
    let origin = [2, 0, 0];
    let thetas = [0.3, 0.0, 0.0];
    let program = make_program(Lattice::Kagome, &thetas)?;
    let mut field = LatticeField::start(&program, 20, &InitialState::new(0.0, 0.0, origin))?;
    println!("origin is {}", kagome_site_type(origin[0], origin[1])?);

    let subs = pauliwalk::walk::KagomeSite::P.sub_steps(&thetas).unwrap();
    for s in &subs {
        field.step_axis(s)?;
        println!("after {} sub-step: {:?}", s.basis, support_sublattice(&field)?);
    }
    for _ in 1..20 {
        field.apply_program(&program)?;
    }
    let d = probabilities(&field);
    println!("t=20 sublattice {:?} sites {} norm {:.15}", support_sublattice(&field)?, d.len(), d.total());
    Ok(())
}
