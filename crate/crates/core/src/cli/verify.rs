//! Checks behind `pauliwalk verify`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{pauli, rotate_conjugate, PauliAxis, C64};
use crate::analysis::{
    compare, detect_symmetry, grover_recurrence_oracle, probabilities, square_recurrence_oracle,
    unique_match, Metric, SymmetryMap,
};
use crate::error::Result;
use crate::hamiltonian::{
    clifford_report, dirac_form, dirac_rotation, rotate_to_dirac, CLIFFORD_TOL,
};
use crate::io::SUPPORT_THRESHOLD;
use crate::walk::{
    grover_initial_state, kagome_site_type, GroverField, KagomeSite, Lattice, LatticeField,
};

use super::{InitKind, VerifyTarget, WalkSpec};

/// Amplitude tolerance against the recurrence oracles.
pub const ORACLE_TOL: f64 = 1e-12;
/// Reflection tolerance for the triangular pair.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// The pinned reflection relating the triangular |↓⟩ and |↑⟩ runs.
pub const TRIANGULAR_SYMMETRY: SymmetryMap = SymmetryMap::Point;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// `None` for informational lines.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(title: impl Into<String>) -> Self {
        VerifyReport {
            title: title.into(),
            passed: true,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.passed &= ok;
        self.checks.push(Check {
            name: name.into(),
            passed: Some(ok),
            detail: detail.into(),
        });
    }

    fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: None,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let tag = match c.passed {
                Some(true) => "[PASS]",
                Some(false) => "[FAIL]",
                None => "[INFO]",
            };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        writeln!(f, "{}", if self.passed { "ok" } else { "FAILED" })
    }
}

pub fn verify(target: &VerifyTarget) -> Result<VerifyReport> {
    match *target {
        VerifyTarget::Dirac { basis, theta } => dirac(basis, theta),
        VerifyTarget::GroverEquivalence { steps, tol } => grover_equivalence(steps, tol),
        VerifyTarget::Recurrence { steps } => recurrence(steps),
        VerifyTarget::Symmetry { steps } => symmetry(steps),
        VerifyTarget::Kagome { steps } => kagome(steps),
    }
}

fn dirac(basis: PauliAxis, theta: f64) -> Result<VerifyReport> {
    let mut r = VerifyReport::new(format!("dirac form, basis {basis}, theta {theta}"));
    let form = dirac_form(basis, theta);
    let cl = clifford_report(&form.alpha, &form.beta);
    r.check("hermitian_a", cl.hermitian_a, "alpha = alpha^dagger");
    r.check("hermitian_b", cl.hermitian_b, "beta = beta^dagger");
    r.check("a_squares_to_identity", cl.a_squares_to_identity, "alpha^2 = I");
    r.check("b_squares_to_identity", cl.b_squares_to_identity, "beta^2 = I");
    r.check("anticommute", cl.anticommute, "{alpha, beta} = 0");
    let rot = rotate_to_dirac(&form, theta)?;
    let da = rot.alpha_pauli.max_abs_diff(&pauli(basis));
    r.check(
        "rotated_alpha",
        da <= CLIFFORD_TOL,
        format!("alpha -> sigma_{basis}, deviation {da:.3e}"),
    );
    let (axis, side) = dirac_rotation(basis);
    let beta_rot = rotate_conjugate(&form.beta, axis, theta / 2.0, side);
    let db = beta_rot
        .scale_real(theta.sin())
        .max_abs_diff(&rot.beta_pauli.scale_real(rot.mass));
    r.check(
        "rotated_mass",
        db <= CLIFFORD_TOL,
        format!("beta sin(theta) -> {:+.6} sigma_{}, deviation {db:.3e}", rot.mass, rot.partner),
    );
    Ok(r)
}

/// Two-state square walk from the symmetric state.
fn square_symmetric(steps: usize) -> Result<LatticeField> {
    WalkSpec::new(Lattice::Square, steps, vec![0.0, 0.0], InitKind::Symmetric)?.run()
}

fn grover_equivalence(steps: usize, tol: f64) -> Result<VerifyReport> {
    let mut r = VerifyReport::new(format!("two-state square walk vs Grover walk, t = {steps}"));
    let two = probabilities(&square_symmetric(steps)?);
    let mut g = GroverField::start(steps);
    g.evolve(steps)?;
    let four = probabilities(&g);
    let d = compare(&two, &four, Metric::MaxAbs);
    r.check("max_abs", d <= tol, format!("{d:.3e} (tol {tol:.1e})"));
    r.info("total", format!("two-state {:.15} four-state {:.15}", two.total(), four.total()));
    Ok(r)
}

fn recurrence(steps: usize) -> Result<VerifyReport> {
    let mut r = VerifyReport::new(format!("engine vs amplitude recurrences, t <= {steps}"));
    let inits = [
        ("down", InitKind::Down),
        ("symmetric", InitKind::Symmetric),
        ("custom", InitKind::Custom { delta: 1.1, eta: -0.4 }),
    ];
    for (name, init) in inits {
        let s = init.spinor();
        let mut worst: f64 = 0.0;
        for t in 0..=steps {
            let oracle = square_recurrence_oracle([s.down, s.up], t)?;
            let field = WalkSpec::new(Lattice::Square, t, vec![0.0, 0.0], init)?.run()?;
            // Oracle grid (a, b) is engine site (x = b, z = a).
            for (c, amp) in field.sites() {
                let o = oracle.get(c[1], c[0]);
                worst = worst.max((amp.down - o[0]).norm()).max((amp.up - o[1]).norm());
            }
            for (k, o) in &oracle.cells {
                let amp = field.get(&[k[1], k[0], 0]);
                worst = worst.max((amp.down - o[0]).norm()).max((amp.up - o[1]).norm());
            }
        }
        r.check(
            format!("square_{name}"),
            worst <= ORACLE_TOL,
            format!("max amplitude difference {worst:.3e}"),
        );
    }
    let mut worst: f64 = 0.0;
    let mut gap: f64 = 0.0;
    let mut discrepancies = Vec::new();
    for t in 0..=steps {
        let oracle = grover_recurrence_oracle(grover_initial_state(), t)?;
        let mut g = GroverField::start(t);
        g.evolve(t)?;
        for (x, z, q) in g.sites() {
            let o = oracle.derived.get(x, z);
            for i in 0..4 {
                worst = worst.max((q[i] - o[i]).norm());
            }
        }
        for (k, o) in &oracle.derived.cells {
            let q = if k[0].unsigned_abs() as usize <= t && k[1].unsigned_abs() as usize <= t {
                g.get(k[0], k[1])
            } else {
                [C64::new(0.0, 0.0); 4]
            };
            for i in 0..4 {
                worst = worst.max((q[i] - o[i]).norm());
            }
        }
        gap = gap.max(oracle.amplitude_gap);
        discrepancies = oracle.discrepancies;
    }
    r.check(
        "grover_derived",
        worst <= ORACLE_TOL,
        format!("max amplitude difference {worst:.3e}"),
    );
    r.info(
        "grover_printed_terms",
        format!("{} term(s) differ from the operator-derived relations", discrepancies.len()),
    );
    for d in &discrepancies {
        r.info(
            format!("relation_{}_source_{}", d.relation, d.source),
            format!(
                "printed offset {:?}, derived offset {:?}",
                d.printed_offset, d.derived_offset
            ),
        );
    }
    r.info("grover_printed_gap", format!("max |printed - derived| amplitude {gap:.3e}"));
    Ok(r)
}

fn symmetry(steps: usize) -> Result<VerifyReport> {
    let mut r = VerifyReport::new(format!("triangular reflection symmetry, t = {steps}"));
    let run = |thetas: Vec<f64>, init| -> Result<_> {
        Ok(probabilities(&WalkSpec::new(Lattice::Triangular, steps, thetas, init)?.run()?))
    };
    let down = run(vec![0.0; 3], InitKind::Down)?;
    let up = run(vec![0.0; 3], InitKind::Up)?;
    let reports = detect_symmetry(&down, &up, SYMMETRY_TOL)?;
    for rep in &reports {
        r.info(
            format!("map_{}", rep.map),
            format!("max error {:.3e} matched {}", rep.max_abs_error, rep.matched),
        );
    }
    let found = unique_match(&reports);
    r.check(
        "unique_reflection",
        found == Some(TRIANGULAR_SYMMETRY),
        format!(
            "matched {}, pinned {TRIANGULAR_SYMMETRY}",
            found.map_or("none or several".to_string(), |m| m.to_string())
        ),
    );
    let tilted = run(vec![0.0, std::f64::consts::FRAC_PI_4, 0.0], InitKind::Up)?;
    let d = compare(&up, &tilted, Metric::MaxAbs);
    r.check("theta_s_sensitivity", d > 0.01, format!("max_abs {d:.4} (> 0.01)"));
    Ok(r)
}

fn kagome(steps: usize) -> Result<VerifyReport> {
    let mut r = VerifyReport::new(format!("kagome sublattice structure, t = {steps}"));
    let spec = WalkSpec::new(Lattice::Kagome, steps, vec![0.0; 3], InitKind::Down)?;
    let program = spec.program()?;
    let mut field = LatticeField::for_walk(&program, steps, &spec.origin)?;
    field.set(&spec.origin, spec.init.spinor())?;
    let thetas = [spec.thetas[0], spec.thetas[1], spec.thetas[2]];

    // Classes occupied by sites carrying p > threshold; holes are recorded
    // as a class so that any leak shows up.
    let classes = |f: &LatticeField| -> Result<Vec<KagomeSite>> {
        let mut v: Vec<KagomeSite> = Vec::new();
        for (c, s) in f.sites() {
            if s.norm_sqr() > SUPPORT_THRESHOLD {
                let k = kagome_site_type(c[0], c[1])?;
                if !v.contains(&k) {
                    v.push(k);
                }
            }
        }
        Ok(v)
    };

    let (mut on_p, mut order_ok, mut hole_free) = (true, true, true);
    let mut first_bad = None;
    for t in 0..steps {
        let subs = KagomeSite::P.sub_steps(&thetas).expect("p has a cycle");
        for (i, (s, want)) in subs
            .iter()
            .zip([KagomeSite::Q, KagomeSite::O, KagomeSite::P])
            .enumerate()
        {
            field.step_axis(s)?;
            let cls = classes(&field)?;
            if cls.contains(&KagomeSite::Hole) {
                hole_free = false;
            }
            if cls != [want] {
                if i < 2 {
                    order_ok = false;
                } else {
                    on_p = false;
                }
                first_bad.get_or_insert((t + 1, i + 1, cls));
            }
        }
    }
    r.check("full_steps_on_p", on_p, "support after every full step is p-type only");
    r.check("sub_step_order", order_ok, "sub-steps visit q then o");
    r.check("holes_empty", hole_free, "no hole site above 1e-30");
    let defect = (1.0 - field.norm_sqr()).abs();
    r.check("norm", defect <= 1e-12, format!("|1 - norm| = {defect:.3e}"));
    if let Some((t, i, cls)) = first_bad {
        r.info("first_violation", format!("step {t} sub-step {i} classes {cls:?}"));
    }
    Ok(r)
}
