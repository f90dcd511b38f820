//! Command-line front end: argument parsing into a [`RunConfig`] and
//! dispatch to the engine, Hamiltonian and analysis modules.
//!
//! Exit codes: 0 success, 1 failed verification or runtime error, 2 usage
//! error.

mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{PauliAxis, Spinor, C64};
use crate::analysis::{compare, probabilities, Distribution, Metric};
use crate::error::{Error, Result};
use crate::hamiltonian::{
    closed_form_hamiltonian_k, composite_hamiltonian, dirac_form, dispersion, dispersion_curve,
    effective_hamiltonian_k, momentum_step_unitary, rotate_to_dirac,
};
use crate::heatmap::{render_heatmap, Colormap, HeatmapOptions};
use crate::io::{num, write_distribution, Format, RunMeta, Table};
use crate::walk::{make_program, Coord, GroverField, Lattice, LatticeField, WalkProgram};

pub use verify::{verify, VerifyReport};

/// Environment variable capping kernel threads; `0` or unset means auto.
pub const THREADS_ENV: &str = "PAULIWALK_THREADS";

/// Initial coin state at the origin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InitKind {
    Down,
    Up,
    /// `(|↓⟩ + i|↑⟩)/√2`
    Symmetric,
    /// `cos(δ/2)|↓⟩ + e^{iη} sin(δ/2)|↑⟩`
    Custom { delta: f64, eta: f64 },
}

impl InitKind {
    pub fn spinor(&self) -> Spinor {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        match *self {
            InitKind::Down => Spinor::spin_down(),
            InitKind::Up => Spinor::spin_up(),
            InitKind::Symmetric => Spinor::new(C64::new(h, 0.0), C64::new(0.0, h)),
            InitKind::Custom { delta, eta } => Spinor::new(
                C64::new((delta / 2.0).cos(), 0.0),
                C64::from_polar((delta / 2.0).sin(), eta),
            ),
        }
    }
}

impl std::fmt::Display for InitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InitKind::Down => f.write_str("down"),
            InitKind::Up => f.write_str("up"),
            InitKind::Symmetric => f.write_str("symmetric"),
            InitKind::Custom { delta, eta } => write!(f, "custom({delta},{eta})"),
        }
    }
}

/// A fully validated two-state walk.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkSpec {
    pub lattice: Lattice,
    pub steps: usize,
    pub thetas: Vec<f64>,
    pub init: InitKind,
    pub origin: Coord,
}

impl WalkSpec {
    pub fn new(lattice: Lattice, steps: usize, thetas: Vec<f64>, init: InitKind) -> Result<Self> {
        let origin = default_origin(lattice);
        Self::with_origin(lattice, steps, thetas, init, origin)
    }

    pub fn with_origin(
        lattice: Lattice,
        steps: usize,
        thetas: Vec<f64>,
        init: InitKind,
        origin: Coord,
    ) -> Result<Self> {
        make_program(lattice, &thetas)?;
        lattice.check_site(&origin)?;
        Ok(WalkSpec {
            lattice,
            steps,
            thetas,
            init,
            origin,
        })
    }

    pub fn program(&self) -> Result<WalkProgram> {
        make_program(self.lattice, &self.thetas)
    }

    pub fn meta(&self) -> RunMeta {
        RunMeta {
            lattice: self.lattice.to_string(),
            steps: self.steps,
            thetas: self.thetas.clone(),
            init: self.init.to_string(),
        }
    }

    pub fn run(&self) -> Result<LatticeField> {
        let program = self.program()?;
        let mut field = LatticeField::for_walk(&program, self.steps, &self.origin)?;
        field.set(&self.origin, self.init.spinor())?;
        field.evolve(&program, self.steps)?;
        Ok(field)
    }
}

/// Kagome walks start on the p-site `(2, 0)`; everything else at the origin.
pub fn default_origin(lattice: Lattice) -> Coord {
    match lattice {
        Lattice::Kagome => [2, 0, 0],
        _ => [0, 0, 0],
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum VerifyTarget {
    Dirac { basis: PauliAxis, theta: f64 },
    GroverEquivalence { steps: usize, tol: f64 },
    Recurrence { steps: usize },
    Symmetry { steps: usize },
    Kagome { steps: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum HeatSource {
    File(PathBuf),
    Walk(WalkSpec),
    Grover { steps: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Simulate(WalkSpec),
    Grover { steps: usize },
    Compare { a: PathBuf, b: PathBuf, metric: Metric, tol: Option<f64> },
    Hamiltonian { basis: PauliAxis, theta: f64, k: f64, lattice: Option<Lattice> },
    Dispersion { theta: f64, samples: usize },
    Verify(VerifyTarget),
    Heatmap { source: HeatSource, log_scale: bool, cell_px: u32, colormap: Colormap },
    Bench { steps_2d: usize, steps_3d: usize },
}

/// Everything one invocation needs; all runs are deterministic.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` picks the command's default (CSV for data, text for reports).
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

// ---------------------------------------------------------------- parsing

#[derive(Parser, Debug)]
#[command(name = "pauliwalk", version, about = "Split-step Pauli quantum walks on line, square, cubic, triangular and kagome lattices")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format: csv or json (default: csv for data, text for reports).
    #[arg(long, value_name = "csv|json", global = true)]
    format: Option<Format>,
    /// Write to PATH instead of standard output.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct WalkArgs {
    /// line, line-x, line-y, line-z, square, cubic, triangular, kagome.
    #[arg(long, default_value = "line")]
    lattice: Lattice,
    #[arg(long, default_value_t = 10)]
    steps: usize,
    /// Comma-separated coin angles in step order (default: all zero).
    #[arg(long, value_name = "T1,T2,..", allow_hyphen_values = true)]
    theta: Option<String>,
    /// down, up, symmetric or custom (with --delta, --eta).
    #[arg(long, default_value = "down")]
    init: String,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    delta: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    eta: f64,
    /// Comma-separated start site (default: origin; kagome 2,0).
    #[arg(long, value_name = "X,Y[,Z]", allow_hyphen_values = true)]
    origin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run a two-state walk and write its final distribution.
    Simulate {
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the four-state Grover walk on the square lattice.
    Grover {
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare two distribution files.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// max_abs or total_variation.
        #[arg(long, default_value = "max_abs")]
        metric: Metric,
        /// Exit 1 if the distance exceeds TOL.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Step unitary, effective Hamiltonian and Dirac form at one momentum.
    Hamiltonian {
        #[arg(long, default_value = "z")]
        basis: PauliAxis,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        k: f64,
        /// Also report the composite square or cubic Hamiltonian.
        #[arg(long)]
        lattice: Option<Lattice>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sample ω(k) = arccos(cosθ cos k) as `k,omega` rows.
    Dispersion {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Executable checks; exit 1 when a check fails.
    Verify {
        #[command(subcommand)]
        target: VerifyCmd,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Render a 2D distribution as SVG.
    Heatmap {
        /// Distribution file (csv or json); otherwise the walk below is run.
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        /// Render the Grover walk for --steps instead of a two-state walk.
        #[arg(long)]
        grover: bool,
        #[command(flatten)]
        walk: WalkArgs,
        /// Shade by log10 p clamped to [-8, 0].
        #[arg(long)]
        log: bool,
        #[arg(long, default_value_t = 6)]
        cell_px: u32,
        /// gray or blue-yellow.
        #[arg(long, default_value = "gray")]
        colormap: Colormap,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Sites-per-second for a 2D and a 3D sweep.
    Bench {
        #[arg(long, default_value_t = 200)]
        steps_2d: usize,
        #[arg(long, default_value_t = 60)]
        steps_3d: usize,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Clifford flags and Pauli rotation of one basis's Dirac form.
    Dirac {
        #[arg(long, default_value = "z")]
        basis: PauliAxis,
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Two-state square walk vs four-state Grover walk.
    GroverEquivalence {
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Engine vs independent amplitude recurrences.
    Recurrence {
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Triangular |↓⟩/|↑⟩ reflection and θ_S sensitivity.
    Symmetry {
        #[arg(long, default_value_t = 40)]
        steps: usize,
    },
    /// Kagome sublattice structure from a p-site.
    Kagome {
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
}

fn parse_list<T: FromStr>(s: &str, flag: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| Error::Usage(format!("--{flag}: cannot parse `{v}`")))
        })
        .collect()
}

fn parse_init(a: &WalkArgs) -> Result<InitKind> {
    Ok(match a.init.as_str() {
        "down" => InitKind::Down,
        "up" => InitKind::Up,
        "symmetric" => InitKind::Symmetric,
        "custom" => InitKind::Custom {
            delta: a.delta,
            eta: a.eta,
        },
        other => {
            return Err(Error::Usage(format!(
                "--init: unknown state `{other}` (down|up|symmetric|custom)"
            )))
        }
    })
}

fn walk_spec(a: &WalkArgs) -> Result<WalkSpec> {
    let thetas = match &a.theta {
        Some(s) => parse_list(s, "theta")?,
        None => vec![0.0; a.lattice.axis_count()],
    };
    let origin = match &a.origin {
        Some(s) => {
            let v: Vec<i64> = parse_list(s, "origin")?;
            if v.len() != a.lattice.dim() {
                return Err(Error::Usage(format!(
                    "--origin: {} lattice needs {} coordinate(s), got {}",
                    a.lattice,
                    a.lattice.dim(),
                    v.len()
                )));
            }
            let mut c = [0; 3];
            c[..v.len()].copy_from_slice(&v);
            c
        }
        None => default_origin(a.lattice),
    };
    WalkSpec::with_origin(a.lattice, a.steps, thetas, parse_init(a)?, origin)
}

/// Parses `argv` (program name first). Help and version requests come back
/// as `Err(Usage)` carrying clap's rendered text; see [`main_from`].
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Usage(e.to_string()))?;
    config_from(cli)
}

fn config_from(cli: Cli) -> Result<RunConfig> {
    let none = |command| RunConfig {
        command,
        format: None,
        out: None,
    };
    let with = |command, o: OutputArgs| RunConfig {
        command,
        format: o.format,
        out: o.out,
    };
    Ok(match cli.command {
        Cmd::Simulate { walk, output } => with(Command::Simulate(walk_spec(&walk)?), output),
        Cmd::Grover { steps, output } => with(Command::Grover { steps }, output),
        Cmd::Compare {
            a,
            b,
            metric,
            tol,
            output,
        } => with(Command::Compare { a, b, metric, tol }, output),
        Cmd::Hamiltonian {
            basis,
            theta,
            k,
            lattice,
            output,
        } => with(
            Command::Hamiltonian {
                basis,
                theta,
                k,
                lattice,
            },
            output,
        ),
        Cmd::Dispersion {
            theta,
            samples,
            output,
        } => with(Command::Dispersion { theta, samples }, output),
        Cmd::Verify { target, output } => {
            let t = match target {
                VerifyCmd::Dirac { basis, theta } => VerifyTarget::Dirac { basis, theta },
                VerifyCmd::GroverEquivalence { steps, tol } => {
                    VerifyTarget::GroverEquivalence { steps, tol }
                }
                VerifyCmd::Recurrence { steps } => VerifyTarget::Recurrence { steps },
                VerifyCmd::Symmetry { steps } => VerifyTarget::Symmetry { steps },
                VerifyCmd::Kagome { steps } => VerifyTarget::Kagome { steps },
            };
            with(Command::Verify(t), output)
        }
        Cmd::Heatmap {
            input,
            grover,
            walk,
            log,
            cell_px,
            colormap,
            out,
        } => {
            let source = match (input, grover) {
                (Some(_), true) => {
                    return Err(Error::Usage("--in and --grover are exclusive".into()))
                }
                (Some(p), false) => HeatSource::File(p),
                (None, true) => HeatSource::Grover { steps: walk.steps },
                (None, false) => HeatSource::Walk(walk_spec(&walk)?),
            };
            RunConfig {
                command: Command::Heatmap {
                    source,
                    log_scale: log,
                    cell_px,
                    colormap,
                },
                format: None,
                out,
            }
        }
        Cmd::Bench { steps_2d, steps_3d } => none(Command::Bench { steps_2d, steps_3d }),
    })
}

// ---------------------------------------------------------------- running

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn grover_distribution(steps: usize) -> Result<Distribution> {
    let mut g = GroverField::start(steps);
    g.evolve(steps)?;
    Ok(probabilities(&g))
}

fn grover_meta(steps: usize) -> RunMeta {
    RunMeta {
        lattice: "grover".into(),
        steps,
        thetas: vec![],
        init: "(|0>-|1>-|2>+|3>)/2".into(),
    }
}

fn mat_rows(name: &str, m: &crate::algebra::Mat2, s: &mut String) {
    for (i, e) in m.entries().iter().enumerate() {
        s.push_str(&format!("{name},{},{},{},{}\n", i / 2, i % 2, num(e.re), num(e.im)));
    }
}

fn hamiltonian_report(
    basis: PauliAxis,
    theta: f64,
    k: f64,
    lattice: Option<Lattice>,
    format: Option<Format>,
) -> Result<String> {
    let w = momentum_step_unitary(basis, theta, k);
    let eff = effective_hamiltonian_k(basis, theta, k);
    let closed = closed_form_hamiltonian_k(basis, theta, k);
    let omega = dispersion(theta, k);
    let form = dirac_form(basis, theta);
    let rot = rotate_to_dirac(&form, theta)?;
    let composite = lattice.map(|l| composite_hamiltonian(l, theta)).transpose()?;
    Ok(match format {
        Some(Format::Json) => {
            let m = |m: &crate::algebra::Mat2| {
                m.entries().iter().map(|e| [e.re, e.im]).collect::<Vec<_>>()
            };
            let mut v = serde_json::json!({
                "basis": basis.to_string(),
                "theta": theta,
                "k": k,
                "omega": omega,
                "degenerate": eff.degenerate,
                "step_unitary": m(&w),
                "effective_hamiltonian": m(&eff.h),
                "closed_form": m(&closed),
                "alpha": m(&form.alpha),
                "beta": m(&form.beta),
                "rotated_alpha": m(&rot.alpha_pauli),
                "partner": rot.partner.to_string(),
                "mass": rot.mass,
            });
            if let Some(c) = &composite {
                v["beta_sum"] = serde_json::json!(m(&c.beta_sum));
                v["rotated_mass_term"] = serde_json::json!(m(&c.rotated_mass_term));
            }
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Some(Format::Csv) => {
            let mut s = String::from("matrix,row,col,re,im\n");
            mat_rows("step_unitary", &w, &mut s);
            mat_rows("effective_hamiltonian", &eff.h, &mut s);
            mat_rows("closed_form", &closed, &mut s);
            mat_rows("alpha", &form.alpha, &mut s);
            mat_rows("beta", &form.beta, &mut s);
            if let Some(c) = &composite {
                mat_rows("beta_sum", &c.beta_sum, &mut s);
                mat_rows("rotated_mass_term", &c.rotated_mass_term, &mut s);
            }
            s
        }
        None => {
            let mut s = format!("basis {basis}  theta {theta}  k {k}\n");
            s += &format!("W(k) =\n{w}\n");
            s += &format!(
                "H(k) = i log W{} =\n{}\n",
                if eff.degenerate { " (degenerate)" } else { "" },
                eff.h
            );
            s += &format!("closed form =\n{closed}\n");
            s += &format!("omega = {}\n", num(omega));
            s += &format!("alpha =\n{}\nbeta =\n{}\n", form.alpha, form.beta);
            s += &format!(
                "rotated: alpha -> sigma_{basis}, beta -> sigma_{}, mass {}\n",
                rot.partner,
                num(rot.mass)
            );
            if let Some(c) = &composite {
                s += &format!(
                    "{} composite: sum beta =\n{}\nrotated mass term =\n{}\n",
                    c.lattice, c.beta_sum, c.rotated_mass_term
                );
            }
            s
        }
    })
}

fn bench_line(name: &str, spec: &WalkSpec) -> Result<String> {
    let program = spec.program()?;
    let mut field = LatticeField::for_walk(&program, spec.steps, &spec.origin)?;
    field.set(&spec.origin, spec.init.spinor())?;
    let mut updates = 0usize;
    let start = Instant::now();
    for _ in 0..spec.steps {
        for s in &program.steps {
            field.step_axis(s)?;
            updates += field.support_bounds().map_or(0, |b| b.site_count());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(format!(
        "{name}: t={} {} site-updates in {:.3} s ({:.3e} sites/s, norm defect {:.1e})\n",
        spec.steps,
        updates,
        secs,
        updates as f64 / secs.max(1e-12),
        (1.0 - field.norm_sqr()).abs()
    ))
}

/// Executes `config`; `Ok(false)` means a check ran and failed.
pub fn execute(config: &RunConfig) -> Result<bool> {
    let out = config.out.as_deref();
    match &config.command {
        Command::Simulate(spec) => {
            let field = spec.run()?;
            let table = Table::from_field(&field, spec.meta());
            write_distribution(&table, config.format.unwrap_or(Format::Csv), out)?;
        }
        Command::Grover { steps } => {
            let table = Table::from_distribution(&grover_distribution(*steps)?, grover_meta(*steps));
            write_distribution(&table, config.format.unwrap_or(Format::Csv), out)?;
        }
        Command::Compare { a, b, metric, tol } => {
            let (da, db) = (
                Table::read_file(a)?.to_distribution(),
                Table::read_file(b)?.to_distribution(),
            );
            let d = compare(&da, &db, *metric);
            let pass = tol.is_none_or(|t| d <= t);
            let text = match config.format {
                Some(Format::Json) => {
                    serde_json::json!({"metric": metric, "distance": d, "tol": tol, "pass": pass})
                        .to_string()
                        + "\n"
                }
                _ => format!("{metric:?} {}\n", num(d)),
            };
            emit(out, &text)?;
            return Ok(pass);
        }
        Command::Hamiltonian {
            basis,
            theta,
            k,
            lattice,
        } => emit(out, &hamiltonian_report(*basis, *theta, *k, *lattice, config.format)?)?,
        Command::Dispersion { theta, samples } => {
            let curve = dispersion_curve(*theta, *samples);
            let text = match config.format {
                Some(Format::Json) => serde_json::to_string(&curve)? + "\n",
                _ => {
                    let mut s = String::from("k,omega\n");
                    for (k, w) in &curve.samples {
                        s += &format!("{},{}\n", num(*k), num(*w));
                    }
                    s
                }
            };
            emit(out, &text)?;
        }
        Command::Verify(target) => {
            let report = verify(target)?;
            let text = match config.format {
                Some(Format::Json) => serde_json::to_string_pretty(&report)? + "\n",
                _ => report.to_string(),
            };
            emit(out, &text)?;
            return Ok(report.passed);
        }
        Command::Heatmap {
            source,
            log_scale,
            cell_px,
            colormap,
        } => {
            let (d, meta) = match source {
                HeatSource::File(p) => {
                    let t = Table::read_file(p)?;
                    (t.to_distribution(), t.meta)
                }
                HeatSource::Walk(spec) => (probabilities(&spec.run()?), spec.meta()),
                HeatSource::Grover { steps } => (grover_distribution(*steps)?, grover_meta(*steps)),
            };
            let opts = HeatmapOptions {
                log_scale: *log_scale,
                cell_px: *cell_px,
                colormap: *colormap,
                metadata: Some(serde_json::to_string(&meta)?),
            };
            emit(out, &render_heatmap(&d, &opts)?)?;
        }
        Command::Bench { steps_2d, steps_3d } => {
            let theta = std::f64::consts::PI / 12.0;
            let mut s = format!("threads: {}\n", rayon::current_num_threads());
            let sq = WalkSpec::new(Lattice::Square, *steps_2d, vec![theta; 2], InitKind::Symmetric)?;
            s += &bench_line("square", &sq)?;
            let cu = WalkSpec::new(Lattice::Cubic, *steps_3d, vec![theta; 3], InitKind::Symmetric)?;
            s += &bench_line("cubic", &cu)?;
            emit(out, &s)?;
        }
    }
    Ok(true)
}

fn thread_count() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("{THREADS_ENV}: expected a thread count, got `{v}`"))),
    }
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Usage(_) | Error::Parse(_) | Error::BadAxisCount { .. } | Error::OffSublattice { .. }
    )
}

/// Runs `config` under the thread cap; returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    let result = thread_count().and_then(|n| {
        if n == 0 {
            execute(config)
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Usage(format!("{THREADS_ENV}: {e}")))?;
            pool.install(|| execute(config))
        }
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("pauliwalk: {e}");
            if is_usage(&e) {
                2
            } else {
                1
            }
        }
    }
}

/// Parses and runs; help and version go to standard output with exit 0.
pub fn main_from<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match config_from(cli) {
        Ok(config) => run(&config),
        Err(e) => {
            eprintln!("pauliwalk: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<RunConfig> {
        parse_args(std::iter::once("pauliwalk").chain(s.split_whitespace()))
    }

    #[test]
    fn square_simulation_config() {
        let c = parse("simulate --lattice square --steps 50 --theta 0,0 --init symmetric").unwrap();
        let Command::Simulate(spec) = c.command else {
            panic!("wrong command")
        };
        assert_eq!(spec.lattice, Lattice::Square);
        assert_eq!(spec.steps, 50);
        assert_eq!(spec.thetas, vec![0.0, 0.0]);
        assert_eq!(spec.init, InitKind::Symmetric);
        assert_eq!(spec.origin, [0, 0, 0]);
    }

    #[test]
    fn triangular_theta_list() {
        let c = parse("simulate --lattice triangular --steps 40 --theta 0,0.7853981633974483,0 --init up")
            .unwrap();
        let Command::Simulate(spec) = c.command else {
            panic!("wrong command")
        };
        assert_eq!(spec.thetas[1], std::f64::consts::FRAC_PI_4);
        assert_eq!(spec.init, InitKind::Up);
    }

    #[test]
    fn negative_values_parse() {
        let c = parse("simulate --lattice line --theta -0.5 --origin -3").unwrap();
        let Command::Simulate(spec) = c.command else {
            panic!("wrong command")
        };
        assert_eq!(spec.thetas, vec![-0.5]);
        assert_eq!(spec.origin, [-3, 0, 0]);
    }

    #[test]
    fn odd_kagome_origin_is_a_parity_error() {
        assert!(matches!(
            parse("simulate --lattice kagome --origin 1,0"),
            Err(Error::OffSublattice { x: 1, y: 0 })
        ));
    }

    #[test]
    fn wrong_theta_count_and_unknown_flags() {
        assert!(matches!(
            parse("simulate --lattice cubic --theta 0,0"),
            Err(Error::BadAxisCount { expected: 3, got: 2, .. })
        ));
        let Err(Error::Usage(msg)) = parse("simulate --bogus 1") else {
            panic!("expected usage error")
        };
        assert!(msg.contains("--bogus"));
    }

    #[test]
    fn kagome_defaults_to_a_p_site() {
        let c = parse("simulate --lattice kagome").unwrap();
        let Command::Simulate(spec) = c.command else {
            panic!("wrong command")
        };
        assert_eq!(spec.origin, [2, 0, 0]);
        assert_eq!(spec.thetas.len(), 3);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(main_from(["pauliwalk", "--help"]), 0);
        assert_eq!(main_from(["pauliwalk", "frobnicate"]), 2);
    }
}
