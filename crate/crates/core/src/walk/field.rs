use rayon::prelude::*;

use crate::algebra::{Mat2, Spinor, C64};
use crate::error::{Error, Result};

use super::kagome::step_kagome;
use super::lattice::{Bounds, Coord, Lattice};
use super::program::{AxisStep, InitialState, WalkProgram};

/// Below this many destination sites a sub-step runs on the calling thread.
const PARALLEL_MIN_SITES: usize = 1 << 14;

/// Dense, origin-centered spinor field over a finite lattice patch.
///
/// Sites span `[-R, R]` per axis. Stepping is double-buffered: each
/// sub-step gathers from the current buffer into the scratch buffer and
/// swaps them. Only the bounding box of the support is swept.
#[derive(Clone, Debug)]
pub struct LatticeField {
    lattice: Lattice,
    half_width: Coord,
    strides: [usize; 3],
    data: Vec<Spinor>,
    scratch: Vec<Spinor>,
    support: Option<Bounds>,
    /// Parity of `x + y + z` shared by every nonzero site, when known.
    parity: Option<i64>,
}

impl LatticeField {
    /// Zero field; `half_width` has one entry per lattice dimension.
    pub fn new(lattice: Lattice, half_width: &[usize]) -> Result<Self> {
        let dim = lattice.dim();
        if half_width.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                got: half_width.len(),
            });
        }
        let mut hw = [0i64; 3];
        for (a, &r) in half_width.iter().enumerate() {
            hw[a] = r as i64;
        }
        let shape = hw.map(|r| (2 * r + 1) as usize);
        let strides = [shape[1] * shape[2], shape[2], 1];
        let len = shape.iter().product();
        Ok(LatticeField {
            lattice,
            half_width: hw,
            strides,
            data: vec![Spinor::zero(); len],
            scratch: vec![Spinor::zero(); len],
            support: None,
            parity: None,
        })
    }

    /// Field just large enough for `steps` full steps of `program` from
    /// `origin`.
    pub fn for_walk(program: &WalkProgram, steps: usize, origin: &Coord) -> Result<Self> {
        let reach = program.reach();
        let dim = program.lattice.dim();
        let hw: Vec<usize> = (0..dim)
            .map(|a| (origin[a].unsigned_abs() as usize) + steps * reach[a] as usize)
            .collect();
        LatticeField::new(program.lattice, &hw)
    }

    /// Field sized for the walk with the initial state already placed.
    pub fn start(program: &WalkProgram, steps: usize, init: &InitialState) -> Result<Self> {
        program.lattice.check_site(&init.position)?;
        let mut f = LatticeField::for_walk(program, steps, &init.position)?;
        f.set(&init.position, init.spinor())?;
        Ok(f)
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn half_width(&self) -> Coord {
        self.half_width
    }

    /// Bounding box of every site that may carry amplitude.
    pub fn support_bounds(&self) -> Option<Bounds> {
        self.support
    }

    fn in_extent(&self, c: &Coord) -> bool {
        (0..3).all(|a| c[a].abs() <= self.half_width[a])
    }

    fn index(&self, c: &Coord) -> usize {
        (0..3)
            .map(|a| (c[a] + self.half_width[a]) as usize * self.strides[a])
            .sum()
    }

    pub fn get(&self, c: &Coord) -> Spinor {
        match self.support {
            Some(b) if b.contains(c) => self.data[self.index(c)],
            _ => Spinor::zero(),
        }
    }

    pub fn set(&mut self, c: &Coord, v: Spinor) -> Result<()> {
        if !self.in_extent(c) {
            let axis = (0..3).find(|&a| c[a].abs() > self.half_width[a]).unwrap();
            return Err(Error::ExtentOverflow {
                axis,
                half_width: self.half_width[axis] as usize,
                needed: c[axis],
            });
        }
        if self.lattice.has_parity_constraint() && (c[0] + c[1]).rem_euclid(2) != 0 {
            return Err(Error::OffSublattice { x: c[0], y: c[1] });
        }
        let i = self.index(c);
        self.data[i] = v;
        let p = site_parity(c);
        match &mut self.support {
            Some(b) => {
                b.include(c);
                if self.parity != Some(p) {
                    self.parity = None;
                }
            }
            None => {
                self.support = Some(Bounds::point(*c));
                self.parity = Some(p);
            }
        }
        Ok(())
    }

    /// Every site of the support box, in lexicographic coordinate order.
    pub fn sites(&self) -> impl Iterator<Item = (Coord, Spinor)> + '_ {
        let b = self.support;
        let coords: Box<dyn Iterator<Item = Coord>> = match b {
            None => Box::new(std::iter::empty()),
            Some(b) => Box::new((b.lo[0]..=b.hi[0]).flat_map(move |x| {
                (b.lo[1]..=b.hi[1])
                    .flat_map(move |y| (b.lo[2]..=b.hi[2]).map(move |z| [x, y, z]))
            })),
        };
        coords.map(move |c| (c, self.data[self.index(&c)]))
    }

    /// Sites with a nonzero amplitude.
    pub fn nonzero_sites(&self) -> impl Iterator<Item = (Coord, Spinor)> + '_ {
        self.sites().filter(|(_, s)| !s.is_zero())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.sites().map(|(_, s)| s.norm_sqr()).sum()
    }

    /// `a·self + b·other` on the same lattice and extent.
    pub fn linear_combination(&self, a: C64, other: &LatticeField, b: C64) -> Result<LatticeField> {
        if self.lattice != other.lattice || self.half_width != other.half_width {
            return Err(Error::LatticeMismatch(format!(
                "{} {:?} vs {} {:?}",
                self.lattice, self.half_width, other.lattice, other.half_width
            )));
        }
        let mut out = LatticeField {
            lattice: self.lattice,
            half_width: self.half_width,
            strides: self.strides,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x.scale(a) + y.scale(b))
                .collect(),
            scratch: vec![Spinor::zero(); self.data.len()],
            support: None,
            parity: None,
        };
        out.parity = match (self.support, other.support) {
            (Some(_), Some(_)) if self.parity == other.parity => self.parity,
            (Some(_), None) => self.parity,
            (None, Some(_)) => other.parity,
            _ => None,
        };
        out.support = match (self.support, other.support) {
            (Some(mut p), Some(q)) => {
                p.include(&q.lo);
                p.include(&q.hi);
                Some(p)
            }
            (p, q) => p.or(q),
        };
        Ok(out)
    }

    /// Largest per-component amplitude difference over both supports.
    pub fn max_abs_diff(&self, other: &LatticeField) -> f64 {
        let a = self
            .sites()
            .map(|(c, s)| s.max_abs_diff(&other.get(&c)))
            .fold(0.0, f64::max);
        let b = other
            .sites()
            .map(|(c, s)| s.max_abs_diff(&self.get(&c)))
            .fold(0.0, f64::max);
        a.max(b)
    }

    /// Applies one coin-then-shift sub-step.
    pub fn step_axis(&mut self, step: &AxisStep) -> Result<()> {
        let Some(old) = self.support else {
            return Ok(());
        };
        let new = old.expanded(&step.displacement);
        for a in 0..3 {
            let needed = if new.lo[a].abs() > new.hi[a].abs() {
                new.lo[a]
            } else {
                new.hi[a]
            };
            if needed.abs() > self.half_width[a] {
                return Err(Error::ExtentOverflow {
                    axis: a,
                    half_width: self.half_width[a] as usize,
                    needed,
                });
            }
        }
        let (m_plus, m_minus) = step.transfer_matrices();
        let kernel = Gather::new(
            &self.data,
            old,
            self.half_width,
            self.strides,
            step,
            m_plus,
            m_minus,
        );

        let hw = self.half_width;
        let slab_len = self.strides[0];
        let flip = site_parity(&step.displacement_plus());
        let parity = self.parity.map(|p| (p + flip) & 1);
        let fill_slab =
            |x0: i64, slab: &mut [Spinor]| kernel.fill_slab(x0, &new, parity, flip == 1, slab);
        let parallel = new.site_count() >= PARALLEL_MIN_SITES && self.lattice.dim() > 1;
        let lo = (new.lo[0] + hw[0]) as usize;
        let hi = (new.hi[0] + hw[0]) as usize;
        let slabs = self.scratch[lo * slab_len..(hi + 1) * slab_len].chunks_mut(slab_len);
        if parallel {
            let slabs: Vec<(usize, &mut [Spinor])> = slabs.enumerate().collect();
            slabs
                .into_par_iter()
                .for_each(|(i, slab)| fill_slab(new.lo[0] + i as i64, slab));
        } else {
            for (i, slab) in slabs.enumerate() {
                fill_slab(new.lo[0] + i as i64, slab);
            }
        }

        std::mem::swap(&mut self.data, &mut self.scratch);
        self.support = Some(new);
        self.parity = parity;
        Ok(())
    }

    /// Applies each sub-step of one full program step, in order.
    pub fn apply_program(&mut self, program: &WalkProgram) -> Result<()> {
        if program.lattice != self.lattice {
            return Err(Error::LatticeMismatch(format!(
                "field is {}, program is {}",
                self.lattice, program.lattice
            )));
        }
        if self.lattice == Lattice::Kagome {
            let thetas = kagome_thetas(program);
            step_kagome(self, &thetas)?;
            return Ok(());
        }
        for s in &program.steps {
            self.step_axis(s)?;
        }
        Ok(())
    }

    /// `t` full steps of `program`.
    pub fn evolve(&mut self, program: &WalkProgram, t: usize) -> Result<()> {
        for _ in 0..t {
            self.apply_program(program)?;
        }
        Ok(())
    }
}

/// `[θR, θS, θT]` read by basis from a kagome program.
pub(crate) fn kagome_thetas(program: &WalkProgram) -> [f64; 3] {
    use crate::algebra::PauliAxis;
    [
        program.theta_for(PauliAxis::Z).unwrap_or(0.0),
        program.theta_for(PauliAxis::X).unwrap_or(0.0),
        program.theta_for(PauliAxis::Y).unwrap_or(0.0),
    ]
}

/// Source buffer and transfer matrices of one sub-step.
///
/// `ψ'(r) = M₊·ψ(r − d₊) + M₋·ψ(r − d₋)`, where a term is dropped when its
/// source lies outside the old support box.
struct Gather<'a> {
    src: &'a [Spinor],
    half_width: Coord,
    strides: [usize; 3],
    /// Destination ranges whose `+` (`−`) source lies in the old box.
    plus_range: Bounds,
    minus_range: Bounds,
    /// Flat index offsets of the two sources.
    plus_offset: isize,
    minus_offset: isize,
    m_plus: Mat2,
    m_minus: Mat2,
}

impl<'a> Gather<'a> {
    fn new(
        src: &'a [Spinor],
        old: Bounds,
        half_width: Coord,
        strides: [usize; 3],
        step: &AxisStep,
        m_plus: Mat2,
        m_minus: Mat2,
    ) -> Self {
        let shifted = |d: Coord| Bounds {
            lo: [0, 1, 2].map(|a| old.lo[a] + d[a]),
            hi: [0, 1, 2].map(|a| old.hi[a] + d[a]),
        };
        let offset = |d: Coord| -> isize { (0..3).map(|a| -d[a] as isize * strides[a] as isize).sum() };
        let (dp, dm) = (step.displacement_plus(), step.displacement_minus());
        Gather {
            src,
            half_width,
            strides,
            plus_range: shifted(dp),
            minus_range: shifted(dm),
            plus_offset: offset(dp),
            minus_offset: offset(dm),
            m_plus,
            m_minus,
        }
    }

    /// Fills the destination slab `x0` over `new`. With a known `parity`
    /// only sites of that parity are computed; the rest are zeroed when
    /// `clear` is set and left alone otherwise.
    fn fill_slab(&self, x0: i64, new: &Bounds, parity: Option<i64>, clear: bool, slab: &mut [Spinor]) {
        let (pr, mr) = (&self.plus_range, &self.minus_range);
        let p0 = pr.lo[0] <= x0 && x0 <= pr.hi[0];
        let m0 = mr.lo[0] <= x0 && x0 <= mr.hi[0];
        let slab_base = (x0 + self.half_width[0]) as usize * self.strides[0];
        for x1 in new.lo[1]..=new.hi[1] {
            let p1 = p0 && pr.lo[1] <= x1 && x1 <= pr.hi[1];
            let m1 = m0 && mr.lo[1] <= x1 && x1 <= mr.hi[1];
            let row = (x1 + self.half_width[1]) as usize * self.strides[1];
            for x2 in new.lo[2]..=new.hi[2] {
                let local = row + (x2 + self.half_width[2]) as usize;
                if parity.is_some_and(|p| (x0 + x1 + x2 + p) & 1 != 0) {
                    if clear {
                        slab[local] = Spinor::zero();
                    }
                    continue;
                }
                let global = (slab_base + local) as isize;
                let mut out = Spinor::zero();
                if p1 && pr.lo[2] <= x2 && x2 <= pr.hi[2] {
                    out += self.m_plus.apply(&self.src[(global + self.plus_offset) as usize]);
                }
                if m1 && mr.lo[2] <= x2 && x2 <= mr.hi[2] {
                    out += self.m_minus.apply(&self.src[(global + self.minus_offset) as usize]);
                }
                slab[local] = out;
            }
        }
    }
}

fn site_parity(c: &Coord) -> i64 {
    (c[0] + c[1] + c[2]) & 1
}
