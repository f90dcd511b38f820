//! ω(k) = arccos(cosθ cos k) for a few coin angles, as CSV.

use std::f64::consts::PI;
use std::io::{self, Write};

use pauliwalk::hamiltonian::dispersion_curve;

fn main() -> io::Result<()> {
    let thetas = [0.0, PI / 12.0, PI / 4.0, PI / 3.0];
    let curves: Vec<_> = thetas.iter().map(|&t| dispersion_curve(t, 63)).collect();
    let mut out = io::stdout().lock();
    write!(out, "k")?;
    for t in thetas {
        write!(out, ",omega_{t:.4}")?;
    }
    writeln!(out)?;
    for j in 0..63 {
        write!(out, "{:.6}", curves[0].samples[j].0)?;
        for c in &curves {
            write!(out, ",{:.6}", c.samples[j].1)?;
        }
        writeln!(out)?;
    }
    Ok(())
}
