//! Distributions, moments, comparison, reflection symmetry and recurrence
//! oracles.

mod distribution;
mod oracles;
mod symmetry;

pub use distribution::{
    compare, moments, probabilities, Distribution, Metric, Moments, ProbabilitySource,
};
pub use oracles::{
    grover_recurrence_derived, grover_recurrence_oracle, iterate, square_recurrence_oracle,
    term_discrepancies, AmplitudeGrid, GroverOracle, Term, TermDiscrepancy,
    GROVER_RECURRENCE_PRINTED, ORACLE_MAX_STEPS, SQUARE_RECURRENCE,
};
pub use symmetry::{detect_symmetry, unique_match, SymmetryMap, SymmetryReport};
