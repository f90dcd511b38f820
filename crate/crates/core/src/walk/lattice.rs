use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::PauliAxis;
use crate::error::{Error, Result};

/// Integer lattice coordinates, padded with zeros past the lattice dimension.
pub type Coord = [i64; 3];

/// Lattice geometry a walk runs on.
///
/// Array axes: line `[s]` (`s` is the coordinate along the walk's basis
/// axis), square `[x, z]`, cubic `[x, y, z]`, triangular and kagome `[x, y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Lattice {
    Line { axis: PauliAxis },
    Square,
    Cubic,
    Triangular,
    Kagome,
}

impl Lattice {
    pub fn dim(&self) -> usize {
        match self {
            Lattice::Line { .. } => 1,
            Lattice::Square | Lattice::Triangular | Lattice::Kagome => 2,
            Lattice::Cubic => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Lattice::Line { .. } => "line",
            Lattice::Square => "square",
            Lattice::Cubic => "cubic",
            Lattice::Triangular => "triangular",
            Lattice::Kagome => "kagome",
        }
    }

    /// Number of coin angles a full step takes.
    pub fn axis_count(&self) -> usize {
        match self {
            Lattice::Line { .. } => 1,
            Lattice::Square => 2,
            Lattice::Cubic | Lattice::Triangular | Lattice::Kagome => 3,
        }
    }

    /// Spatial coordinate names of the array axes.
    pub fn axis_labels(&self) -> Vec<&'static str> {
        match self {
            Lattice::Line { axis } => vec![match axis {
                PauliAxis::X => "x",
                PauliAxis::Y => "y",
                PauliAxis::Z => "z",
            }],
            Lattice::Square => vec!["x", "z"],
            Lattice::Cubic => vec!["x", "y", "z"],
            Lattice::Triangular | Lattice::Kagome => vec!["x", "y"],
        }
    }

    /// Triangular and kagome sites live on `x + y` even.
    pub fn has_parity_constraint(&self) -> bool {
        matches!(self, Lattice::Triangular | Lattice::Kagome)
    }

    /// Checks that `origin` is a legal starting site.
    pub fn check_site(&self, site: &Coord) -> Result<()> {
        if self.has_parity_constraint() && (site[0] + site[1]).rem_euclid(2) != 0 {
            return Err(Error::OffSublattice {
                x: site[0],
                y: site[1],
            });
        }
        if *self == Lattice::Kagome
            && super::kagome::kagome_site_type(site[0], site[1])? == super::kagome::KagomeSite::Hole
        {
            return Err(Error::MixedSublatticeSupport(format!(
                "({}, {}) is a hole site",
                site[0], site[1]
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lattice::Line { axis } => write!(f, "line({axis})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Lattice {
    type Err = Error;

    /// Accepts `line` (Z basis), `line-x`, `line-y`, `line-z`, `square`,
    /// `cubic`, `triangular`, `kagome`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Ok(match s.as_str() {
            "line" => Lattice::Line { axis: PauliAxis::Z },
            "square" => Lattice::Square,
            "cubic" => Lattice::Cubic,
            "triangular" => Lattice::Triangular,
            "kagome" => Lattice::Kagome,
            _ => match s.strip_prefix("line-").or_else(|| s.strip_prefix("line:")) {
                Some(a) => Lattice::Line { axis: a.parse()? },
                None => return Err(Error::Parse(format!("unknown lattice `{s}`"))),
            },
        })
    }
}

/// Inclusive per-axis coordinate bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lo: Coord,
    pub hi: Coord,
}

impl Bounds {
    pub fn point(c: Coord) -> Self {
        Bounds { lo: c, hi: c }
    }

    pub fn include(&mut self, c: &Coord) {
        self.lo = std::array::from_fn(|a| self.lo[a].min(c[a]));
        self.hi = std::array::from_fn(|a| self.hi[a].max(c[a]));
    }

    pub fn contains(&self, c: &Coord) -> bool {
        (0..3).all(|a| self.lo[a] <= c[a] && c[a] <= self.hi[a])
    }

    /// Grow symmetrically by `|d|` along each axis.
    pub fn expanded(&self, d: &Coord) -> Bounds {
        Bounds {
            lo: std::array::from_fn(|a| self.lo[a] - d[a].abs()),
            hi: std::array::from_fn(|a| self.hi[a] + d[a].abs()),
        }
    }

    pub fn site_count(&self) -> usize {
        (0..3)
            .map(|a| (self.hi[a] - self.lo[a] + 1) as usize)
            .product()
    }
}
