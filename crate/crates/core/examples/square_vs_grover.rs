//! The two-state square walk from (|↓⟩ + i|↑⟩)/√2 and the four-state Grover
//! walk give the same distribution. Writes both as CSV plus an SVG heatmap.
//!
//!     cargo run --release --example square_vs_grover -- [STEPS] [OUT_DIR]

use std::path::PathBuf;

use pauliwalk::analysis::{compare, detect_symmetry, probabilities, Metric};
use pauliwalk::cli::{InitKind, WalkSpec};
use pauliwalk::heatmap::{write_heatmap, HeatmapOptions};
use pauliwalk::io::{Format, RunMeta, Table};
use pauliwalk::walk::{GroverField, Lattice};

fn main() -> pauliwalk::Result<()> {
    let mut args = std::env::args().skip(1);
    let steps: usize = args.next().map_or(50, |s| s.parse().expect("STEPS"));
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;

    let spec = WalkSpec::new(Lattice::Square, steps, vec![0.0, 0.0], InitKind::Symmetric)?;
    let field = spec.run()?;
    let two = probabilities(&field);

    let mut g = GroverField::start(steps);
    g.evolve(steps)?;
    let four = probabilities(&g);

    println!("max_abs  {:.3e}", compare(&two, &four, Metric::MaxAbs));
    println!("tv       {:.3e}", compare(&two, &four, Metric::TotalVariation));
    for r in detect_symmetry(&two, &two, 1e-12)? {
        println!("self {:<9} error {:.3e}", r.map.to_string(), r.max_abs_error);
    }

    Table::from_field(&field, spec.meta()).write_file(Format::Csv, &dir.join("square.csv"))?;
    let meta = RunMeta { lattice: "grover".into(), steps, ..Default::default() };
    Table::from_distribution(&four, meta).write_file(Format::Csv, &dir.join("grover.csv"))?;
    let opts = HeatmapOptions { metadata: Some(format!("square t={steps} symmetric")), ..Default::default() };
    write_heatmap(&two, &dir.join("square.svg"), &opts)?;
    println!("wrote {}", dir.display());
    Ok(())
}
