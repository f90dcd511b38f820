//! Coin-and-shift walk engine for line, square, cubic, triangular and
//! kagome lattices, plus the four-state Grover walk on the square lattice.

mod field;
mod grover;
mod kagome;
mod lattice;
mod program;

pub use field::LatticeField;
pub use grover::{grover_coin, grover_initial_state, GroverField, Quad, GROVER_SHIFTS};
pub use kagome::{kagome_site_type, step_kagome, support_sublattice, KagomeSite};
pub use lattice::{Bounds, Coord, Lattice};
pub use program::{
    axis_order, build_coin, displacement, make_program, AxisStep, InitialState, WalkProgram,
};

use crate::error::Result;

/// Runs `program` for `steps` steps from `init` on a freshly sized field.
pub fn run_walk(program: &WalkProgram, steps: usize, init: &InitialState) -> Result<LatticeField> {
    let mut f = LatticeField::start(program, steps, init)?;
    f.evolve(program, steps)?;
    Ok(f)
}
