//! One-dimensional walk: ballistic limit at θ = 0 and variance falling with θ.

use std::f64::consts::PI;

use pauliwalk::analysis::{moments, probabilities};
use pauliwalk::walk::{make_program, run_walk, InitialState, Lattice};
use pauliwalk::PauliAxis;

fn main() -> pauliwalk::Result<()> {
    let line = Lattice::Line { axis: PauliAxis::Z };
    let steps = 100;

    let p = make_program(line, &[0.0])?;
    let down = probabilities(&run_walk(&p, steps, &InitialState::new(0.0, 0.0, [0, 0, 0]))?);
    println!("theta=0 |down>: P(z=-{steps}) = {}", down.get(&[-(steps as i64), 0, 0]));

    println!("theta      variance   norm");
    for j in 1..=5 {
        let theta = j as f64 * PI / 12.0;
        let p = make_program(line, &[theta])?;
        let init = InitialState::new(PI / 2.0, PI / 2.0, [0, 0, 0]);
        let f = run_walk(&p, steps, &init)?;
        let m = moments(&probabilities(&f));
        println!("{theta:.4}  {:>10.4}  {:.15}", m.variance[0], f.norm_sqr());
    }
    Ok(())
}
