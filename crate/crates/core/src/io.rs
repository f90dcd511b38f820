//! CSV and JSON serialization of fields and distributions.
//!
//! Both formats carry the same columns: the lattice's coordinate labels,
//! `p`, then `re_down, im_down, re_up, im_up`. Reals are written with 17
//! significant digits so a read reproduces them bit for bit. Sites with
//! `p < 1e-30` are dropped.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Spinor, C64};
use crate::analysis::Distribution;
use crate::error::{Error, Result};
use crate::walk::{Coord, LatticeField};

/// Sites below this probability are not written.
pub const SUPPORT_THRESHOLD: f64 = 1e-30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// `.json` means JSON, anything else CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format `{other}` (csv|json)"))),
        }
    }
}

/// Description of the run that produced a table.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunMeta {
    pub lattice: String,
    pub steps: usize,
    pub thetas: Vec<f64>,
    pub init: String,
}

/// One output row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Record {
    pub coord: Coord,
    pub p: f64,
    pub amplitude: Option<Spinor>,
}

/// Rows sorted lexicographically by coordinate, plus run metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub labels: Vec<String>,
    pub records: Vec<Record>,
    pub meta: RunMeta,
}

impl Table {
    pub fn from_field(field: &LatticeField, meta: RunMeta) -> Table {
        let labels = field.lattice().axis_labels().iter().map(|s| s.to_string()).collect();
        let records = field
            .sites()
            .filter_map(|(c, s)| {
                let p = s.norm_sqr();
                (p >= SUPPORT_THRESHOLD).then_some(Record {
                    coord: c,
                    p,
                    amplitude: Some(s),
                })
            })
            .collect();
        Table {
            labels,
            records,
            meta,
        }
    }

    pub fn from_distribution(d: &Distribution, meta: RunMeta) -> Table {
        let records = d
            .iter()
            .filter(|(_, &p)| p >= SUPPORT_THRESHOLD)
            .map(|(c, &p)| Record {
                coord: *c,
                p,
                amplitude: None,
            })
            .collect();
        Table {
            labels: d.labels().to_vec(),
            records,
            meta,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn to_distribution(&self) -> Distribution {
        let labels: Vec<&str> = self.labels.iter().map(|s| s.as_str()).collect();
        let mut d = Distribution::new(self.dim(), &labels);
        for r in &self.records {
            d.add(r.coord, r.p);
        }
        d
    }

    pub fn total(&self) -> f64 {
        self.records.iter().map(|r| r.p).sum()
    }

    pub fn write_csv(&self, w: &mut dyn Write) -> Result<()> {
        let mut s = String::new();
        for l in &self.labels {
            s.push_str(l);
            s.push(',');
        }
        s.push_str("p,re_down,im_down,re_up,im_up\n");
        for r in &self.records {
            for a in 0..self.dim() {
                write!(s, "{},", r.coord[a]).unwrap();
            }
            write!(s, "{}", num(r.p)).unwrap();
            match r.amplitude {
                Some(a) => {
                    for v in [a.down.re, a.down.im, a.up.re, a.up.im] {
                        write!(s, ",{}", num(v)).unwrap();
                    }
                }
                None => s.push_str(",,,,"),
            }
            s.push('\n');
        }
        w.write_all(s.as_bytes())?;
        Ok(())
    }

    pub fn write_json(&self, w: &mut dyn Write) -> Result<()> {
        let mut s = String::from("{\n  \"meta\": {");
        write!(
            s,
            "\"lattice\": {}, \"steps\": {}, \"thetas\": [{}], \"init\": {}",
            serde_json::to_string(&self.meta.lattice)?,
            self.meta.steps,
            self.meta.thetas.iter().map(|t| num(*t)).collect::<Vec<_>>().join(", "),
            serde_json::to_string(&self.meta.init)?,
        )
        .unwrap();
        s.push_str("},\n  \"sites\": [");
        for (i, r) in self.records.iter().enumerate() {
            s.push_str(if i == 0 { "\n    {" } else { ",\n    {" });
            for a in 0..self.dim() {
                write!(s, "{}: {}, ", serde_json::to_string(&self.labels[a])?, r.coord[a]).unwrap();
            }
            write!(s, "\"p\": {}", num(r.p)).unwrap();
            if let Some(a) = r.amplitude {
                let names = ["re_down", "im_down", "re_up", "im_up"];
                for (n, v) in names.iter().zip([a.down.re, a.down.im, a.up.re, a.up.im]) {
                    write!(s, ", \"{n}\": {}", num(v)).unwrap();
                }
            }
            s.push('}');
        }
        s.push_str(if self.records.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
        w.write_all(s.as_bytes())?;
        Ok(())
    }

    pub fn write(&self, format: Format, w: &mut dyn Write) -> Result<()> {
        match format {
            Format::Csv => self.write_csv(w),
            Format::Json => self.write_json(w),
        }
    }

    pub fn write_file(&self, format: Format, path: &Path) -> Result<()> {
        let mut f = std::io::BufWriter::new(fs::File::create(path)?);
        self.write(format, &mut f)?;
        f.flush()?;
        Ok(())
    }

    pub fn parse_csv(text: &str) -> Result<Table> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty CSV".into()))?;
        let cols: Vec<&str> = header.split(',').map(str::trim).collect();
        let p_col = cols
            .iter()
            .position(|c| *c == "p")
            .ok_or_else(|| Error::Parse("CSV header has no `p` column".into()))?;
        if p_col > 3 || cols.len() != p_col + 5 {
            return Err(Error::Parse(format!("unexpected CSV header `{header}`")));
        }
        let labels: Vec<String> = cols[..p_col].iter().map(|s| s.to_string()).collect();
        let mut records = Vec::new();
        for (n, line) in lines.enumerate() {
            let f: Vec<&str> = line.split(',').map(str::trim).collect();
            if f.len() != cols.len() {
                return Err(Error::Parse(format!("CSV row {} has {} fields", n + 2, f.len())));
            }
            let mut coord = [0i64; 3];
            for a in 0..p_col {
                coord[a] = f[a]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coordinate `{}`", f[a])))?;
            }
            let p = parse_f64(f[p_col])?;
            let amp = &f[p_col + 1..];
            let amplitude = if amp.iter().all(|v| v.is_empty()) {
                None
            } else {
                let v: Vec<f64> = amp.iter().map(|s| parse_f64(s)).collect::<Result<_>>()?;
                Some(Spinor::new(C64::new(v[0], v[1]), C64::new(v[2], v[3])))
            };
            records.push(Record {
                coord,
                p,
                amplitude,
            });
        }
        Ok(Table {
            labels,
            records,
            meta: RunMeta::default(),
        })
    }

    pub fn parse_json(text: &str) -> Result<Table> {
        #[derive(Deserialize)]
        struct Doc {
            #[serde(default)]
            meta: RunMeta,
            sites: Vec<serde_json::Map<String, serde_json::Value>>,
        }
        let doc: Doc = serde_json::from_str(text)?;
        let amp_keys = ["re_down", "im_down", "re_up", "im_up"];
        let mut labels: Option<Vec<String>> = None;
        let mut records = Vec::new();
        for site in &doc.sites {
            let these: Vec<String> = site
                .keys()
                .filter(|k| *k != "p" && !amp_keys.contains(&k.as_str()))
                .cloned()
                .collect();
            let labels = labels.get_or_insert_with(|| order_labels(these.clone()));
            if these.len() != labels.len() {
                return Err(Error::Parse("sites disagree on coordinate keys".into()));
            }
            let mut coord = [0i64; 3];
            for (a, l) in labels.iter().enumerate() {
                coord[a] = site
                    .get(l)
                    .and_then(|v| v.as_i64())
                    .ok_or_else(|| Error::Parse(format!("site missing integer `{l}`")))?;
            }
            let p = site
                .get("p")
                .and_then(|v| v.as_f64())
                .ok_or_else(|| Error::Parse("site missing `p`".into()))?;
            let amplitude = if amp_keys.iter().all(|k| site.contains_key(*k)) {
                let v: Vec<f64> = amp_keys
                    .iter()
                    .map(|k| site[*k].as_f64().unwrap_or(f64::NAN))
                    .collect();
                Some(Spinor::new(C64::new(v[0], v[1]), C64::new(v[2], v[3])))
            } else {
                None
            };
            records.push(Record {
                coord,
                p,
                amplitude,
            });
        }
        Ok(Table {
            labels: labels.unwrap_or_default(),
            records,
            meta: doc.meta,
        })
    }

    /// Reads a file, choosing the parser by extension.
    pub fn read_file(path: &Path) -> Result<Table> {
        let text = fs::read_to_string(path)?;
        match Format::from_path(path) {
            Format::Csv => Table::parse_csv(&text),
            Format::Json => Table::parse_json(&text),
        }
    }
}

/// Coordinate keys in `x, y, z` order; a lone key (line lattice) as is.
fn order_labels(mut keys: Vec<String>) -> Vec<String> {
    keys.sort_by_key(|k| match k.as_str() {
        "x" => 0,
        "y" => 1,
        "z" => 2,
        _ => 3,
    });
    keys
}

fn parse_f64(s: &str) -> Result<f64> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad number `{s}`")))
}

/// 17 significant digits, scientific notation.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes `table` to `path`, or to standard output when `path` is `None`.
pub fn write_distribution(table: &Table, format: Format, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => table.write_file(format, p),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            table.write(format, &mut lock)
        }
    }
}
