//! Triangular lattice: |↓⟩ and |↑⟩ patterns are point reflections of each
//! other, and a coin on the S axis reshapes the pattern.
//!
//!     cargo run --release --example triangular_symmetry -- [OUT_DIR]

use std::f64::consts::FRAC_PI_4;
use std::path::PathBuf;

use pauliwalk::analysis::{compare, detect_symmetry, probabilities, unique_match, Metric};
use pauliwalk::cli::{InitKind, WalkSpec};
use pauliwalk::heatmap::{write_heatmap, HeatmapOptions};
use pauliwalk::walk::Lattice;

fn main() -> pauliwalk::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    let steps = 40;

    let mut runs = Vec::new();
    for (name, thetas, init) in [
        ("tri_down", vec![0.0; 3], InitKind::Down),
        ("tri_up", vec![0.0; 3], InitKind::Up),
        ("tri_up_s45", vec![0.0, FRAC_PI_4, 0.0], InitKind::Up),
    ] {
        let spec = WalkSpec::new(Lattice::Triangular, steps, thetas, init)?;
        let d = probabilities(&spec.run()?);
        let opts = HeatmapOptions { cell_px: 4, metadata: Some(name.into()), ..Default::default() };
        write_heatmap(&d, &dir.join(format!("{name}.svg")), &opts)?;
        runs.push(d);
    }

    let reports = detect_symmetry(&runs[0], &runs[1], 1e-12)?;
    for r in &reports {
        println!("{:<9} {:.3e} {}", r.map.to_string(), r.max_abs_error, r.matched);
    }
    println!("unique match: {:?}", unique_match(&reports));
    println!("theta_S = pi/4 vs 0: max_abs {:.4}", compare(&runs[1], &runs[2], Metric::MaxAbs));
    Ok(())
}
