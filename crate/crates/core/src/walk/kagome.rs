//! Kagome lattice: the triangular lattice with one coset of the doubled
//! cell removed.
//!
//! With `u = (x − y)/2` and `v = y`, the site class is fixed by
//! `(u mod 2, v mod 2)`: `(0,0)` hole, `(1,0)` p, `(0,1)` q, `(1,1)` o.
//! R, S and T moves change `(u, v)` by `(±1, 0)`, `(0, ±1)` and `(±1, ∓1)`,
//! so every site keeps exactly two axes that avoid holes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::PauliAxis;
use crate::error::{Error, Result};

use super::field::LatticeField;
use super::lattice::Lattice;
use super::program::{displacement, AxisStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KagomeSite {
    O,
    P,
    Q,
    Hole,
}

impl KagomeSite {
    /// The two quantization axes available at this site (R = σz, S = σx,
    /// T = σy). Holes have none.
    pub fn axes(&self) -> &'static [PauliAxis] {
        match self {
            KagomeSite::O => &[PauliAxis::Z, PauliAxis::X],
            KagomeSite::P => &[PauliAxis::X, PauliAxis::Y],
            KagomeSite::Q => &[PauliAxis::Y, PauliAxis::Z],
            KagomeSite::Hole => &[],
        }
    }

    /// Basis order of one full step starting on this sublattice.
    ///
    /// p: T, R, S; q: R, S, T; o: S, T, R. Each sub-step carries the support
    /// p → q → o → p.
    pub fn cycle(&self) -> Option<[PauliAxis; 3]> {
        use PauliAxis::{X, Y, Z};
        match self {
            KagomeSite::P => Some([Y, Z, X]),
            KagomeSite::Q => Some([Z, X, Y]),
            KagomeSite::O => Some([X, Y, Z]),
            KagomeSite::Hole => None,
        }
    }

    /// Sublattice reached after one sub-step.
    pub fn next(&self) -> KagomeSite {
        match self {
            KagomeSite::P => KagomeSite::Q,
            KagomeSite::Q => KagomeSite::O,
            KagomeSite::O => KagomeSite::P,
            KagomeSite::Hole => KagomeSite::Hole,
        }
    }

    /// The three sub-steps of one full step; `thetas` is `[θR, θS, θT]`.
    pub fn sub_steps(&self, thetas: &[f64; 3]) -> Option<[AxisStep; 3]> {
        let theta = |b: PauliAxis| match b {
            PauliAxis::Z => thetas[0],
            PauliAxis::X => thetas[1],
            PauliAxis::Y => thetas[2],
        };
        self.cycle().map(|order| {
            order.map(|b| AxisStep::new(b, theta(b), displacement(Lattice::Kagome, b)))
        })
    }
}

impl fmt::Display for KagomeSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KagomeSite::O => "o",
            KagomeSite::P => "p",
            KagomeSite::Q => "q",
            KagomeSite::Hole => "hole",
        })
    }
}

pub fn kagome_site_type(x: i64, y: i64) -> Result<KagomeSite> {
    if (x + y).rem_euclid(2) != 0 {
        return Err(Error::OffSublattice { x, y });
    }
    let u = (x - y).div_euclid(2);
    Ok(match (u.rem_euclid(2), y.rem_euclid(2)) {
        (0, 0) => KagomeSite::Hole,
        (1, 0) => KagomeSite::P,
        (0, 1) => KagomeSite::Q,
        _ => KagomeSite::O,
    })
}

/// Sublattice class shared by every nonzero site of a kagome field.
pub fn support_sublattice(field: &LatticeField) -> Result<Option<KagomeSite>> {
    let mut found: Option<KagomeSite> = None;
    for (c, _) in field.nonzero_sites() {
        let t = kagome_site_type(c[0], c[1])?;
        if t == KagomeSite::Hole {
            return Err(Error::MixedSublatticeSupport(format!(
                "amplitude on hole site ({}, {})",
                c[0], c[1]
            )));
        }
        match found {
            None => found = Some(t),
            Some(f) if f != t => {
                return Err(Error::MixedSublatticeSupport(format!(
                    "sites of type {f} and {t}"
                )))
            }
            _ => {}
        }
    }
    Ok(found)
}

/// One full kagome step. The sub-step order is picked from the sublattice
/// the support currently occupies; returns that starting sublattice.
pub fn step_kagome(field: &mut LatticeField, thetas: &[f64; 3]) -> Result<Option<KagomeSite>> {
    if field.lattice() != Lattice::Kagome {
        return Err(Error::LatticeMismatch(format!(
            "step_kagome on a {} field",
            field.lattice()
        )));
    }
    let Some(start) = support_sublattice(field)? else {
        return Ok(None);
    };
    for s in start.sub_steps(thetas).expect("non-hole site") {
        field.step_axis(&s)?;
    }
    Ok(Some(start))
}
