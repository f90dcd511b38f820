//! Amplitude recurrences iterated directly on sparse grids, independent of
//! the stepping engine.
//!
//! A recurrence is a term table: component `out` at `(a, b, t)` collects
//! `coeff · component src at (a + offset, t − 1)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::C64;
use crate::error::{Error, Result};
use crate::walk::GROVER_SHIFTS;

/// Largest `t` an oracle accepts.
pub const ORACLE_MAX_STEPS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Term {
    pub out: usize,
    pub src: usize,
    pub offset: [i64; 2],
    pub coeff: f64,
}

const fn term(out: usize, src: usize, offset: [i64; 2], coeff: f64) -> Term {
    Term {
        out,
        src,
        offset,
        coeff,
    }
}

/// `N`-component amplitudes on a 2D grid at one time.
#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeGrid<const N: usize> {
    pub t: usize,
    pub cells: BTreeMap<[i64; 2], [C64; N]>,
}

impl<const N: usize> AmplitudeGrid<N> {
    pub fn get(&self, a: i64, b: i64) -> [C64; N] {
        self.cells
            .get(&[a, b])
            .copied()
            .unwrap_or([C64::new(0.0, 0.0); N])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.cells
            .values()
            .flat_map(|v| v.iter())
            .map(|a| a.norm_sqr())
            .sum()
    }

    /// Largest component difference over both supports.
    pub fn max_abs_diff(&self, other: &AmplitudeGrid<N>) -> f64 {
        self.cells
            .keys()
            .chain(other.cells.keys())
            .map(|k| {
                let (x, y) = (self.get(k[0], k[1]), other.get(k[0], k[1]));
                (0..N).map(|i| (x[i] - y[i]).norm()).fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}

fn check_steps(t: usize) -> Result<()> {
    if t > ORACLE_MAX_STEPS {
        return Err(Error::Usage(format!(
            "recurrence oracles accept t <= {ORACLE_MAX_STEPS}, got {t}"
        )));
    }
    Ok(())
}

/// Iterates a term table `t` times from `init` at the origin.
pub fn iterate<const N: usize>(table: &[Term], init: [C64; N], t: usize) -> AmplitudeGrid<N> {
    let zero = [C64::new(0.0, 0.0); N];
    let mut cur: BTreeMap<[i64; 2], [C64; N]> = BTreeMap::new();
    cur.insert([0, 0], init);
    for _ in 0..t {
        let mut next: BTreeMap<[i64; 2], [C64; N]> = BTreeMap::new();
        // Every site whose stencil touches the current support.
        for src_site in cur.keys() {
            for tm in table {
                let dest = [src_site[0] - tm.offset[0], src_site[1] - tm.offset[1]];
                next.entry(dest).or_insert(zero);
            }
        }
        for (dest, v) in next.iter_mut() {
            for tm in table {
                if let Some(s) = cur.get(&[dest[0] + tm.offset[0], dest[1] + tm.offset[1]]) {
                    v[tm.out] += s[tm.src] * tm.coeff;
                }
            }
        }
        cur = next;
    }
    AmplitudeGrid { t, cells: cur }
}

/// Two-state square walk at `θ = 0`, grid coordinates `(a, b)`:
///
/// ```text
/// α1(a,b) = ½[α1(a+1,b+1) + α1(a+1,b−1) + α2(a−1,b+1) − α2(a−1,b−1)]
/// α2(a,b) = ½[α1(a+1,b+1) − α1(a+1,b−1) + α2(a−1,b+1) + α2(a−1,b−1)]
/// ```
///
/// `α1`/`α2` are the `|↓⟩`/`|↑⟩` amplitudes; `a` runs along the walk's `z`
/// axis and `b` along `x`.
pub const SQUARE_RECURRENCE: [Term; 8] = [
    term(0, 0, [1, 1], 0.5),
    term(0, 0, [1, -1], 0.5),
    term(0, 1, [-1, 1], 0.5),
    term(0, 1, [-1, -1], -0.5),
    term(1, 0, [1, 1], 0.5),
    term(1, 0, [1, -1], -0.5),
    term(1, 1, [-1, 1], 0.5),
    term(1, 1, [-1, -1], 0.5),
];

pub fn square_recurrence_oracle(init: [C64; 2], t: usize) -> Result<AmplitudeGrid<2>> {
    check_steps(t)?;
    Ok(iterate(&SQUARE_RECURRENCE, init, t))
}

/// The four-state relations as printed, coordinates `(x, z)`.
pub const GROVER_RECURRENCE_PRINTED: [Term; 16] = [
    term(0, 0, [1, 1], -0.5),
    term(0, 1, [1, 1], 0.5),
    term(0, 2, [1, 1], 0.5),
    term(0, 3, [1, 1], 0.5),
    term(1, 0, [1, -1], 0.5),
    term(1, 1, [1, -1], -0.5),
    term(1, 2, [-1, -1], 0.5),
    term(1, 3, [1, -1], 0.5),
    term(2, 0, [-1, 1], 0.5),
    term(2, 1, [-1, 1], 0.5),
    term(2, 2, [-1, 1], -0.5),
    term(2, 3, [-1, 1], 0.5),
    term(3, 0, [-1, -1], 0.5),
    term(3, 1, [-1, -1], 0.5),
    term(3, 2, [-1, -1], 0.5),
    term(3, 3, [-1, -1], -0.5),
];

/// Term table of `S^G·(G ⊗ 1)` with `G = ½J − I`.
pub fn grover_recurrence_derived() -> Vec<Term> {
    let mut out = Vec::with_capacity(16);
    for (j, s) in GROVER_SHIFTS.iter().enumerate() {
        for i in 0..4 {
            let coeff = if i == j { -0.5 } else { 0.5 };
            out.push(term(j, i, [-s[0], -s[1]], coeff));
        }
    }
    out
}

/// A term present in one table but not the other.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TermDiscrepancy {
    /// Relation letter, `a` for `β^(1)` through `d` for `β^(4)`.
    pub relation: char,
    /// 1-based source amplitude index.
    pub source: usize,
    pub printed_offset: Option<[i64; 2]>,
    pub derived_offset: Option<[i64; 2]>,
}

/// Both Grover recurrence variants after `t` steps and how they differ.
#[derive(Clone, Debug)]
pub struct GroverOracle {
    pub printed: AmplitudeGrid<4>,
    pub derived: AmplitudeGrid<4>,
    pub discrepancies: Vec<TermDiscrepancy>,
    /// `max |printed − derived|` over the grids.
    pub amplitude_gap: f64,
}

/// Term-by-term difference between two tables, matched on `(out, src)`.
pub fn term_discrepancies(printed: &[Term], derived: &[Term]) -> Vec<TermDiscrepancy> {
    let key = |t: &Term| (t.out, t.src);
    let mut out = Vec::new();
    for d in derived {
        let p = printed.iter().find(|p| key(p) == key(d));
        let same = p.is_some_and(|p| p.offset == d.offset && p.coeff == d.coeff);
        if !same {
            out.push(TermDiscrepancy {
                relation: (b'a' + d.out as u8) as char,
                source: d.src + 1,
                printed_offset: p.map(|p| p.offset),
                derived_offset: Some(d.offset),
            });
        }
    }
    for p in printed {
        if !derived.iter().any(|d| key(d) == key(p)) {
            out.push(TermDiscrepancy {
                relation: (b'a' + p.out as u8) as char,
                source: p.src + 1,
                printed_offset: Some(p.offset),
                derived_offset: None,
            });
        }
    }
    out
}

pub fn grover_recurrence_oracle(init: [C64; 4], t: usize) -> Result<GroverOracle> {
    check_steps(t)?;
    let derived_table = grover_recurrence_derived();
    let printed = iterate(&GROVER_RECURRENCE_PRINTED, init, t);
    let derived = iterate(&derived_table, init, t);
    let amplitude_gap = printed.max_abs_diff(&derived);
    Ok(GroverOracle {
        discrepancies: term_discrepancies(&GROVER_RECURRENCE_PRINTED, &derived_table),
        printed,
        derived,
        amplitude_gap,
    })
}
