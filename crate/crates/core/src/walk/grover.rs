use crate::algebra::C64;
use crate::error::{Error, Result};

use super::lattice::Bounds;

/// Four-state amplitudes `β^{(1..4)}` for coin states `|0⟩..|3⟩`.
pub type Quad = [C64; 4];

/// Diagonal moves of `|0⟩..|3⟩` in `(x, z)`.
pub const GROVER_SHIFTS: [[i64; 2]; 4] = [[-1, -1], [-1, 1], [1, -1], [1, 1]];

/// `½(|0⟩ − |1⟩ − |2⟩ + |3⟩)`, the localized initial state whose
/// distribution the two-state square walk reproduces.
pub fn grover_initial_state() -> Quad {
    let h = 0.5;
    [
        C64::new(h, 0.0),
        C64::new(-h, 0.0),
        C64::new(-h, 0.0),
        C64::new(h, 0.0),
    ]
}

/// Grover diffusion `G = ½·J − I` applied to one site.
pub fn grover_coin(b: &Quad) -> Quad {
    let half_sum = (b[0] + b[1] + b[2] + b[3]) * 0.5;
    [half_sum - b[0], half_sum - b[1], half_sum - b[2], half_sum - b[3]]
}

/// Four-state field on the square lattice, coordinates `(x, z)`.
#[derive(Clone, Debug)]
pub struct GroverField {
    half_width: i64,
    data: Vec<Quad>,
    scratch: Vec<Quad>,
    support: Option<Bounds>,
}

impl GroverField {
    pub fn new(half_width: usize) -> Self {
        let n = (2 * half_width + 1).pow(2);
        GroverField {
            half_width: half_width as i64,
            data: vec![[C64::new(0.0, 0.0); 4]; n],
            scratch: vec![[C64::new(0.0, 0.0); 4]; n],
            support: None,
        }
    }

    /// `grover_initial_state()` at the origin, sized for `steps` steps.
    pub fn start(steps: usize) -> Self {
        let mut g = GroverField::new(steps);
        g.set(0, 0, grover_initial_state()).expect("origin is in range");
        g
    }

    pub fn half_width(&self) -> usize {
        self.half_width as usize
    }

    fn index(&self, x: i64, z: i64) -> usize {
        let w = 2 * self.half_width + 1;
        ((x + self.half_width) * w + (z + self.half_width)) as usize
    }

    pub fn get(&self, x: i64, z: i64) -> Quad {
        match self.support {
            Some(b) if b.contains(&[x, z, 0]) => self.data[self.index(x, z)],
            _ => [C64::new(0.0, 0.0); 4],
        }
    }

    pub fn set(&mut self, x: i64, z: i64, v: Quad) -> Result<()> {
        let hw = self.half_width;
        if x.abs() > hw || z.abs() > hw {
            let (axis, needed) = if x.abs() > hw { (0, x) } else { (1, z) };
            return Err(Error::ExtentOverflow {
                axis,
                half_width: hw as usize,
                needed,
            });
        }
        let i = self.index(x, z);
        self.data[i] = v;
        let c = [x, z, 0];
        match &mut self.support {
            Some(b) => b.include(&c),
            None => self.support = Some(Bounds::point(c)),
        }
        Ok(())
    }

    /// Sites of the support box, `(x, z, β)`, lexicographic in `(x, z)`.
    pub fn sites(&self) -> Vec<(i64, i64, Quad)> {
        let Some(b) = self.support else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(b.site_count());
        for x in b.lo[0]..=b.hi[0] {
            for z in b.lo[1]..=b.hi[1] {
                out.push((x, z, self.data[self.index(x, z)]));
            }
        }
        out
    }

    pub fn norm_sqr(&self) -> f64 {
        self.sites()
            .iter()
            .map(|(_, _, q)| q.iter().map(|a| a.norm_sqr()).sum::<f64>())
            .sum()
    }

    /// `S^G·(G ⊗ 1)`: diffusion coin at every site, then the diagonal shift.
    pub fn grover_step(&mut self) -> Result<()> {
        let Some(old) = self.support else {
            return Ok(());
        };
        let new = old.expanded(&[1, 1, 0]);
        let hw = self.half_width;
        for (axis, needed) in [(0, new.lo[0]), (0, new.hi[0]), (1, new.lo[1]), (1, new.hi[1])] {
            if needed.abs() > hw {
                return Err(Error::ExtentOverflow {
                    axis,
                    half_width: hw as usize,
                    needed,
                });
            }
        }
        for x in new.lo[0]..=new.hi[0] {
            for z in new.lo[1]..=new.hi[1] {
                let mut out = [C64::new(0.0, 0.0); 4];
                for (j, d) in GROVER_SHIFTS.iter().enumerate() {
                    let (sx, sz) = (x - d[0], z - d[1]);
                    if old.contains(&[sx, sz, 0]) {
                        out[j] = grover_coin(&self.data[self.index(sx, sz)])[j];
                    }
                }
                let i = self.index(x, z);
                self.scratch[i] = out;
            }
        }
        std::mem::swap(&mut self.data, &mut self.scratch);
        self.support = Some(new);
        Ok(())
    }

    pub fn evolve(&mut self, t: usize) -> Result<()> {
        for _ in 0..t {
            self.grover_step()?;
        }
        Ok(())
    }
}
