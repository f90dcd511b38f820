//! Two-state discrete-time quantum walks that use Pauli eigenbases as
//! position-translation states, on line, square, cubic, triangular and
//! kagome lattices, together with the effective two-component Dirac-like
//! Hamiltonians generated by their step unitaries.
//!
//! * [`algebra`]: closed-form 2×2 linear algebra (Pauli matrices,
//!   exponential and principal logarithm of unitaries, rotations).
//! * [`walk`]: coin/shift stepping on dense lattice fields and the
//!   four-state Grover reference walk.
//! * [`hamiltonian`]: momentum-space step unitaries, effective
//!   Hamiltonians, Dirac α/β algebra and the triangular second-order terms.
//! * [`analysis`]: distributions, moments, comparison metrics, reflection
//!   symmetry and independent amplitude-recurrence oracles.
//! * [`io`], [`heatmap`], [`cli`]: serialization, SVG rendering and the
//!   `pauliwalk` command line.
//!
//! ```
//! use pauliwalk::walk::{make_program, run_walk, InitialState, Lattice};
//!
//! let program = make_program(Lattice::Square, &[0.0, 0.0]).unwrap();
//! let init = InitialState::new(std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2, [0; 3]);
//! let field = run_walk(&program, 10, &init).unwrap();
//! assert!((field.norm_sqr() - 1.0).abs() < 1e-12);
//! ```

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod error;
pub mod hamiltonian;
pub mod heatmap;
pub mod io;
pub mod walk;

pub use algebra::{Mat2, PauliAxis, Spinor, C64};
pub use error::{Error, Result};
