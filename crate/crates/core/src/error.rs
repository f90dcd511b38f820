use std::io;

use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Error, Debug)]
pub enum Error {
    #[error("matrix is not unitary (max |U†U - I| = {0:.3e})")]
    NotUnitary(f64),

    #[error("matrix is not Hermitian (max |H - H†| = {0:.3e})")]
    NotHermitian(f64),

    #[error("amplitude would leave the lattice along axis {axis} (half-width {half_width}, needed {needed})")]
    ExtentOverflow {
        axis: usize,
        half_width: usize,
        needed: i64,
    },

    #[error("{lattice} lattice takes {expected} coin angle(s), got {got}")]
    BadAxisCount {
        lattice: String,
        expected: usize,
        got: usize,
    },

    #[error("site ({x}, {y}) has odd x+y and is not on the triangular sublattice")]
    OffSublattice { x: i64, y: i64 },

    #[error("kagome field support is not on a single o/p/q sublattice: {0}")]
    MixedSublatticeSupport(String),

    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),

    #[error("form is not the transcribed Dirac form for basis {0}")]
    NotFromDiracForm(String),

    #[error("expected a {expected}-dimensional distribution, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("{0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
