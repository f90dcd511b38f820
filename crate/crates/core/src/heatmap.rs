//! Deterministic SVG heatmaps of 2D distributions.
//!
//! The first coordinate runs left to right, the second bottom to top, and
//! the view is centered on the origin. Darker cells mean higher
//! probability in grayscale; the blue-yellow map runs from dark blue (low)
//! to yellow (high).

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::analysis::Distribution;
use crate::error::{Error, Result};

/// Lower clamp of `log10 p` in log scale.
pub const LOG_FLOOR: f64 = -8.0;

/// Seven-stop blue-yellow lookup table, low to high.
pub const BLUE_YELLOW: [[u8; 3]; 7] = [
    [12, 7, 74],
    [24, 52, 150],
    [16, 104, 186],
    [36, 150, 170],
    [112, 188, 122],
    [206, 214, 64],
    [253, 238, 36],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Colormap {
    Gray,
    BlueYellow,
}

impl FromStr for Colormap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gray" | "grey" | "grayscale" => Ok(Colormap::Gray),
            "blue-yellow" | "blue_yellow" => Ok(Colormap::BlueYellow),
            other => Err(Error::Parse(format!(
                "unknown colormap `{other}` (gray|blue-yellow)"
            ))),
        }
    }
}

impl Colormap {
    /// Color for an intensity `v ∈ [0, 1]`.
    pub fn color(&self, v: f64) -> [u8; 3] {
        let v = v.clamp(0.0, 1.0);
        match self {
            Colormap::Gray => {
                let g = (255.0 * (1.0 - v)).round() as u8;
                [g, g, g]
            }
            Colormap::BlueYellow => {
                let pos = v * (BLUE_YELLOW.len() - 1) as f64;
                let i = (pos.floor() as usize).min(BLUE_YELLOW.len() - 2);
                let f = pos - i as f64;
                let (a, b) = (BLUE_YELLOW[i], BLUE_YELLOW[i + 1]);
                [0, 1, 2].map(|c| (a[c] as f64 + f * (b[c] as f64 - a[c] as f64)).round() as u8)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct HeatmapOptions {
    /// Shade by `log10 p` clamped to `[LOG_FLOOR, 0]` instead of `p / p_max`.
    pub log_scale: bool,
    pub cell_px: u32,
    pub colormap: Colormap,
    /// Embedded as an XML comment.
    pub metadata: Option<String>,
}

impl Default for HeatmapOptions {
    fn default() -> Self {
        HeatmapOptions {
            log_scale: false,
            cell_px: 6,
            colormap: Colormap::Gray,
            metadata: None,
        }
    }
}

fn intensity(p: f64, p_max: f64, log_scale: bool) -> f64 {
    if log_scale {
        if p <= 0.0 {
            return 0.0;
        }
        (p.log10().clamp(LOG_FLOOR, 0.0) - LOG_FLOOR) / -LOG_FLOOR
    } else if p_max > 0.0 {
        p / p_max
    } else {
        0.0
    }
}

/// SVG text for `d`, one `<rect>` per support site.
pub fn render_heatmap(d: &Distribution, opts: &HeatmapOptions) -> Result<String> {
    if d.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: d.dim(),
        });
    }
    let r = d
        .iter()
        .map(|(c, _)| c[0].abs().max(c[1].abs()))
        .max()
        .unwrap_or(0);
    let cells = 2 * r + 1;
    let px = opts.cell_px.max(1) as i64;
    let size = cells * px;
    let p_max = d.iter().map(|(_, &p)| p).fold(0.0, f64::max);
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    )
    .unwrap();
    if let Some(m) = &opts.metadata {
        writeln!(s, "<!-- {} -->", m.replace("--", "- -")).unwrap();
    }
    let labels = d.labels();
    writeln!(
        s,
        "<!-- axes: {} right, {} up; half-width {r}; p_max {:.16e}; scale {} -->",
        labels.first().map_or("a", |l| l.as_str()),
        labels.get(1).map_or("b", |l| l.as_str()),
        p_max,
        if opts.log_scale { "log10" } else { "linear" }
    )
    .unwrap();
    let bg = opts.colormap.color(0.0);
    writeln!(
        s,
        "<rect width=\"{size}\" height=\"{size}\" fill=\"#{:02x}{:02x}{:02x}\"/>",
        bg[0], bg[1], bg[2]
    )
    .unwrap();
    for (c, &p) in d.iter() {
        let col = opts.colormap.color(intensity(p, p_max, opts.log_scale));
        let x = (c[0] + r) * px;
        let y = (r - c[1]) * px;
        writeln!(
            s,
            "<rect x=\"{x}\" y=\"{y}\" width=\"{px}\" height=\"{px}\" fill=\"#{:02x}{:02x}{:02x}\"/>",
            col[0], col[1], col[2]
        )
        .unwrap();
    }
    let mid = r * px + px / 2;
    writeln!(
        s,
        "<g stroke=\"#d04040\" stroke-width=\"0.5\" stroke-opacity=\"0.5\"><line x1=\"0\" y1=\"{mid}\" x2=\"{size}\" y2=\"{mid}\"/><line x1=\"{mid}\" y1=\"0\" x2=\"{mid}\" y2=\"{size}\"/></g>"
    )
    .unwrap();
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn write_heatmap(d: &Distribution, path: &Path, opts: &HeatmapOptions) -> Result<()> {
    fs::write(path, render_heatmap(d, opts)?)?;
    Ok(())
}
