use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::walk::Coord;

use super::distribution::Distribution;

/// Candidate reflections of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryMap {
    /// `(a, b) → (−a, −b)`
    Point,
    /// `(a, b) → (−a, b)`
    MirrorX,
    /// `(a, b) → (a, −b)`
    MirrorY,
}

impl SymmetryMap {
    pub const ALL: [SymmetryMap; 3] = [SymmetryMap::Point, SymmetryMap::MirrorX, SymmetryMap::MirrorY];

    pub fn apply(&self, c: &Coord) -> Coord {
        match self {
            SymmetryMap::Point => [-c[0], -c[1], c[2]],
            SymmetryMap::MirrorX => [-c[0], c[1], c[2]],
            SymmetryMap::MirrorY => [c[0], -c[1], c[2]],
        }
    }
}

impl fmt::Display for SymmetryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryMap::Point => "point",
            SymmetryMap::MirrorX => "mirror_x",
            SymmetryMap::MirrorY => "mirror_y",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub map: SymmetryMap,
    /// `max |d1(r) − d2(map(r))|` over both supports.
    pub max_abs_error: f64,
    pub matched: bool,
}

/// Tests whether `d2` is `d1` carried through each candidate reflection.
pub fn detect_symmetry(d1: &Distribution, d2: &Distribution, tol: f64) -> Result<Vec<SymmetryReport>> {
    for d in [d1, d2] {
        if d.dim() != 2 {
            return Err(Error::Dimension {
                expected: 2,
                got: d.dim(),
            });
        }
    }
    Ok(SymmetryMap::ALL
        .iter()
        .map(|&map| {
            // Each map is an involution, so the inverse image is map(r) too.
            let forward = d1
                .iter()
                .map(|(c, &p)| (p - d2.get(&map.apply(c))).abs());
            let backward = d2
                .iter()
                .map(|(c, &p)| (p - d1.get(&map.apply(c))).abs());
            let err = forward.chain(backward).fold(0.0, f64::max);
            SymmetryReport {
                map,
                max_abs_error: err,
                matched: err <= tol,
            }
        })
        .collect())
}

/// The single matching map, if exactly one candidate matched.
pub fn unique_match(reports: &[SymmetryReport]) -> Option<SymmetryMap> {
    let mut it = reports.iter().filter(|r| r.matched);
    match (it.next(), it.next()) {
        (Some(r), None) => Some(r.map),
        _ => None,
    }
}
