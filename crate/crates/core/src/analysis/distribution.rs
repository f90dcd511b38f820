use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::walk::{Coord, GroverField, Lattice, LatticeField};

/// Site probabilities over an integer lattice.
///
/// Coordinates are padded with zeros past `dim`; sites with `p = 0` are not
/// stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    dim: usize,
    labels: Vec<String>,
    probs: BTreeMap<Coord, f64>,
}

impl Distribution {
    pub fn new(dim: usize, labels: &[&str]) -> Self {
        Distribution {
            dim,
            labels: labels.iter().map(|s| s.to_string()).collect(),
            probs: BTreeMap::new(),
        }
    }

    /// Empty distribution labelled with `lattice`'s axes.
    pub fn for_lattice(lattice: Lattice) -> Self {
        Distribution::new(lattice.dim(), &lattice.axis_labels())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Adds `p` at `c`.
    pub fn add(&mut self, c: Coord, p: f64) {
        if p != 0.0 {
            *self.probs.entry(c).or_insert(0.0) += p;
        }
    }

    pub fn get(&self, c: &Coord) -> f64 {
        self.probs.get(c).copied().unwrap_or(0.0)
    }

    /// Sites in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Coord, &f64)> {
        self.probs.iter()
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.probs.values().sum()
    }

    /// Site carrying the largest probability (first in order on ties).
    pub fn argmax(&self) -> Option<(Coord, f64)> {
        self.probs
            .iter()
            .fold(None, |best: Option<(Coord, f64)>, (c, &p)| match best {
                Some((_, bp)) if bp >= p => best,
                _ => Some((*c, p)),
            })
    }

    /// Per-axis inclusive bounds of the support.
    pub fn extent(&self) -> Option<(Coord, Coord)> {
        let mut it = self.probs.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(mut lo, mut hi), c| {
            for a in 0..3 {
                lo[a] = lo[a].min(c[a]);
                hi[a] = hi[a].max(c[a]);
            }
            (lo, hi)
        }))
    }

    /// Applies `f` to every coordinate.
    pub fn map_coords(&self, f: impl Fn(&Coord) -> Coord) -> Distribution {
        let mut out = Distribution {
            dim: self.dim,
            labels: self.labels.clone(),
            probs: BTreeMap::new(),
        };
        for (c, &p) in &self.probs {
            out.add(f(c), p);
        }
        out
    }
}

/// Anything that yields site probabilities.
pub trait ProbabilitySource {
    fn probabilities(&self) -> Distribution;
}

impl ProbabilitySource for LatticeField {
    fn probabilities(&self) -> Distribution {
        let mut d = Distribution::for_lattice(self.lattice());
        for (c, s) in self.sites() {
            d.add(c, s.norm_sqr());
        }
        d
    }
}

impl ProbabilitySource for GroverField {
    fn probabilities(&self) -> Distribution {
        let mut d = Distribution::for_lattice(Lattice::Square);
        for (x, z, q) in self.sites() {
            d.add([x, z, 0], q.iter().map(|a| a.norm_sqr()).sum());
        }
        d
    }
}

/// `p(site) = Σ |amplitude|²`.
pub fn probabilities<S: ProbabilitySource + ?Sized>(source: &S) -> Distribution {
    source.probabilities()
}

/// Per-axis mean and variance, in lattice units.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Moments {
    pub mean: Vec<f64>,
    pub variance: Vec<f64>,
}

pub fn moments(d: &Distribution) -> Moments {
    let total = d.total();
    let n = d.dim();
    let mut mean = vec![0.0; n];
    let mut variance = vec![0.0; n];
    if total == 0.0 {
        return Moments { mean, variance };
    }
    for (c, &p) in d.iter() {
        for a in 0..n {
            mean[a] += p * c[a] as f64;
        }
    }
    mean.iter_mut().for_each(|m| *m /= total);
    for (c, &p) in d.iter() {
        for a in 0..n {
            let dx = c[a] as f64 - mean[a];
            variance[a] += p * dx * dx;
        }
    }
    variance.iter_mut().for_each(|v| *v /= total);
    Moments { mean, variance }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Metric {
    /// `max |p1 − p2|` over the union of supports.
    MaxAbs,
    /// `½ Σ |p1 − p2|`.
    TotalVariation,
}

impl std::str::FromStr for Metric {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "max_abs" | "max-abs" => Ok(Metric::MaxAbs),
            "total_variation" | "total-variation" | "tv" => Ok(Metric::TotalVariation),
            _ => Err(crate::error::Error::Parse(format!("unknown metric `{s}`"))),
        }
    }
}

pub fn compare(d1: &Distribution, d2: &Distribution, metric: Metric) -> f64 {
    // Sorted union of supports, so the result is exactly symmetric.
    let sites: BTreeSet<&Coord> = d1.probs.keys().chain(d2.probs.keys()).collect();
    let diffs = sites.into_iter().map(|c| (d1.get(c) - d2.get(c)).abs());
    match metric {
        Metric::MaxAbs => diffs.fold(0.0, f64::max),
        Metric::TotalVariation => 0.5 * diffs.sum::<f64>(),
    }
}
