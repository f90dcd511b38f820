//! Three-dimensional walk: norm and spread per axis.

use std::f64::consts::PI;

use pauliwalk::analysis::{moments, probabilities};
use pauliwalk::walk::{make_program, run_walk, InitialState, Lattice};

fn main() -> pauliwalk::Result<()> {
    let steps = std::env::args().nth(1).map_or(30, |s| s.parse().expect("STEPS"));
    let program = make_program(Lattice::Cubic, &[PI / 12.0, PI / 4.0, 0.0])?;
    let field = run_walk(&program, steps, &InitialState::new(PI / 3.0, 0.4, [0, 0, 0]))?;
    let d = probabilities(&field);
    let m = moments(&d);
    println!("t={steps} sites={} norm={:.15}", d.len(), field.norm_sqr());
    for (a, label) in d.labels().iter().enumerate() {
        println!("{label}: mean {:+.4} variance {:.4}", m.mean[a], m.variance[a]);
    }
    Ok(())
}
