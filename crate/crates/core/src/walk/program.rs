use serde::{Deserialize, Serialize};

use crate::algebra::{basis_states, projectors, Mat2, PauliAxis, Spinor, C64};
use crate::error::{Error, Result};

use super::lattice::{Coord, Lattice};

/// Coin `B(θ)`: `[[cosθ, sinθ], [−sinθ, cosθ]]` in the eigenbasis of
/// `pauli(basis)`, returned in the σz computational basis.
pub fn build_coin(basis: PauliAxis, theta: f64) -> Mat2 {
    let (c, s) = (theta.cos(), theta.sin());
    let (plus, minus) = basis_states(basis);
    let c = C64::new(c, 0.0);
    let s = C64::new(s, 0.0);
    Mat2::outer(&plus, &plus).scale(c) + Mat2::outer(&plus, &minus).scale(s)
        - Mat2::outer(&minus, &plus).scale(s)
        + Mat2::outer(&minus, &minus).scale(c)
}

/// One coin-then-shift sub-step along a single quantization axis.
///
/// The `+` eigencomponent moves by `displacement`, the `−` eigencomponent
/// by `-displacement`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxisStep {
    pub basis: PauliAxis,
    pub theta: f64,
    pub displacement: Coord,
}

impl AxisStep {
    pub fn new(basis: PauliAxis, theta: f64, displacement: Coord) -> Self {
        AxisStep {
            basis,
            theta,
            displacement,
        }
    }

    pub fn displacement_plus(&self) -> Coord {
        self.displacement
    }

    pub fn displacement_minus(&self) -> Coord {
        self.displacement.map(|d| -d)
    }

    /// `(P₊·B, P₋·B)`: the coin followed by projection on each translation
    /// state. One sub-step is `ψ'(r) = M₊·ψ(r − d₊) + M₋·ψ(r − d₋)`.
    pub fn transfer_matrices(&self) -> (Mat2, Mat2) {
        let coin = build_coin(self.basis, self.theta);
        let (pp, pm) = projectors(self.basis);
        (pp * coin, pm * coin)
    }
}

/// `+` displacement for a basis on a given lattice.
pub fn displacement(lattice: Lattice, basis: PauliAxis) -> Coord {
    match lattice {
        Lattice::Line { .. } => [-1, 0, 0],
        Lattice::Square => match basis {
            PauliAxis::X => [-1, 0, 0],
            PauliAxis::Z => [0, -1, 0],
            // not a square-lattice axis; make_program never asks for it
            PauliAxis::Y => [0, 0, 0],
        },
        Lattice::Cubic => match basis {
            PauliAxis::X => [-1, 0, 0],
            PauliAxis::Y => [0, -1, 0],
            PauliAxis::Z => [0, 0, -1],
        },
        Lattice::Triangular | Lattice::Kagome => match basis {
            PauliAxis::Z => [2, 0, 0],
            PauliAxis::X => [1, 1, 0],
            PauliAxis::Y => [1, -1, 0],
        },
    }
}

/// Ordered sub-steps making one full walk step, applied first to last.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WalkProgram {
    pub lattice: Lattice,
    pub steps: Vec<AxisStep>,
}

impl WalkProgram {
    /// Per-axis maximum distance covered by one full step.
    pub fn reach(&self) -> Coord {
        let mut r = [0i64; 3];
        for s in &self.steps {
            for (a, d) in s.displacement.iter().enumerate() {
                r[a] += d.abs();
            }
        }
        r
    }

    pub fn thetas(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.theta).collect()
    }

    /// Coin angle attached to a basis, if the program has that axis.
    pub fn theta_for(&self, basis: PauliAxis) -> Option<f64> {
        self.steps.iter().find(|s| s.basis == basis).map(|s| s.theta)
    }
}

/// Basis order of one full step: Z first, then X, then Y where present.
pub fn axis_order(lattice: Lattice) -> Vec<PauliAxis> {
    match lattice {
        Lattice::Line { axis } => vec![axis],
        Lattice::Square => vec![PauliAxis::Z, PauliAxis::X],
        Lattice::Cubic | Lattice::Triangular | Lattice::Kagome => {
            vec![PauliAxis::Z, PauliAxis::X, PauliAxis::Y]
        }
    }
}

/// Builds the walk program for a lattice; `thetas` are given in
/// application order (`[θz, θx]` square, `[θz, θx, θy]` cubic,
/// `[θR, θS, θT]` triangular/kagome).
///
/// Kagome programs list the three axes in R, S, T order; the per-step
/// order is chosen from the occupied sublattice when the walk runs.
pub fn make_program(lattice: Lattice, thetas: &[f64]) -> Result<WalkProgram> {
    let order = axis_order(lattice);
    if thetas.len() != order.len() {
        return Err(Error::BadAxisCount {
            lattice: lattice.name().to_string(),
            expected: order.len(),
            got: thetas.len(),
        });
    }
    let steps = order
        .iter()
        .zip(thetas)
        .map(|(&b, &t)| AxisStep::new(b, t, displacement(lattice, b)))
        .collect();
    Ok(WalkProgram { lattice, steps })
}

/// `cos(δ/2)|↓⟩ + e^{iη} sin(δ/2)|↑⟩` placed at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InitialState {
    pub delta: f64,
    pub eta: f64,
    pub position: Coord,
}

impl InitialState {
    pub fn new(delta: f64, eta: f64, position: Coord) -> Self {
        InitialState {
            delta,
            eta,
            position,
        }
    }

    pub fn spinor(&self) -> Spinor {
        Spinor::new(
            C64::new((self.delta / 2.0).cos(), 0.0),
            C64::from_polar((self.delta / 2.0).sin(), self.eta),
        )
    }
}
