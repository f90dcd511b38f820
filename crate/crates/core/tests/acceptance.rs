//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion, exit status
//! nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pauliwalk::algebra::{exp_hermitian, pauli, rotation};
use pauliwalk::analysis::{
    compare, detect_symmetry, grover_recurrence_oracle, moments, probabilities,
    square_recurrence_oracle, unique_match, Metric, SymmetryMap,
};
use pauliwalk::hamiltonian::{
    clifford_report, closed_form_hamiltonian_k, composite_hamiltonian, dirac_form, dispersion,
    effective_hamiltonian_k, momentum_step_unitary, rotate_to_dirac, transcription_check,
    triangular_terms,
};
use pauliwalk::walk::{
    grover_initial_state, kagome_site_type, make_program, GroverField, KagomeSite, Lattice,
    LatticeField,
};
use pauliwalk::{Mat2, PauliAxis, Spinor, C64};

const SEED: u64 = 0x5eed_2024;
const BASES: [PauliAxis; 3] = [PauliAxis::Z, PauliAxis::X, PauliAxis::Y];

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }
}

/// `k_j = −π + 2π(j+1)/64`, `j = 0..63`.
fn k_grid() -> Vec<f64> {
    (0..64).map(|j| -PI + 2.0 * PI * (j as f64 + 1.0) / 64.0).collect()
}

fn run(lattice: Lattice, thetas: &[f64], init: Spinor, origin: [i64; 3], steps: usize) -> LatticeField {
    let program = make_program(lattice, thetas).unwrap();
    let mut f = LatticeField::for_walk(&program, steps, &origin).unwrap();
    f.set(&origin, init).unwrap();
    f.evolve(&program, steps).unwrap();
    f
}

fn origin_of(lattice: Lattice) -> [i64; 3] {
    if lattice == Lattice::Kagome {
        [2, 0, 0]
    } else {
        [0, 0, 0]
    }
}

fn random_unit(rng: &mut StdRng) -> Spinor {
    let mut c = || C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    Spinor::new(c(), c()).normalized()
}

fn symmetric() -> Spinor {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Spinor::new(C64::new(h, 0.0), C64::new(0.0, h))
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

fn unitarity() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let lattices = [
        Lattice::Line { axis: PauliAxis::Z },
        Lattice::Line { axis: PauliAxis::X },
        Lattice::Line { axis: PauliAxis::Y },
        Lattice::Square,
        Lattice::Cubic,
        Lattice::Triangular,
        Lattice::Kagome,
    ];
    let values = [0.0, PI / 12.0, FRAC_PI_4];
    let (mut worst, mut runs) = (0.0f64, 0);
    let mut worst_case = String::new();
    for lattice in lattices {
        let steps = if lattice == Lattice::Cubic { 60 } else { 100 };
        let n = lattice.axis_count();
        // Every assignment of the three values to the axes.
        for code in 0..3usize.pow(n as u32) {
            let thetas: Vec<f64> = (0..n).map(|a| values[(code / 3usize.pow(a as u32)) % 3]).collect();
            let f = run(lattice, &thetas, random_unit(&mut rng), origin_of(lattice), steps);
            let defect = (1.0 - f.norm_sqr()).abs();
            runs += 1;
            if defect >= worst {
                worst = defect;
                worst_case = format!("{lattice} {thetas:?}");
            }
        }
    }
    let el = start.elapsed();
    Outcome::new(
        worst <= 1e-12 && within(el, 60.0),
        format!("{runs} runs, max |1 - norm| {worst:.2e} ({worst_case}), {:.1} s", el.as_secs_f64()),
    )
}

fn hamiltonian_identity() -> Outcome {
    let start = Instant::now();
    let thetas = [0.0, PI / 12.0, FRAC_PI_4, FRAC_PI_3, FRAC_PI_2 - 0.01];
    let (mut exp_err, mut closed_err, mut skipped) = (0.0f64, 0.0f64, 0);
    for basis in BASES {
        for &theta in &thetas {
            for k in k_grid() {
                let w = momentum_step_unitary(basis, theta, k);
                let eff = effective_hamiltonian_k(basis, theta, k);
                exp_err = exp_err.max(exp_hermitian(&eff.h).unwrap().dist(&w));
                if eff.degenerate {
                    skipped += 1;
                    continue;
                }
                closed_err = closed_err.max(closed_form_hamiltonian_k(basis, theta, k).dist(&eff.h));
            }
        }
    }
    let el = start.elapsed();
    Outcome::new(
        exp_err <= 1e-10 && closed_err <= 1e-10 && within(el, 5.0),
        format!(
            "max |exp(-iH) - W|_F {exp_err:.2e}, max |H_closed - H_log|_F {closed_err:.2e} ({skipped} degenerate points skipped), {:.3} s",
            el.as_secs_f64()
        ),
    )
}

/// Eigenvalues of a Hermitian 2×2 matrix, ascending.
fn hermitian_eigs(h: &Mat2) -> [f64; 2] {
    let [a, b, _, d] = h.entries();
    let mean = 0.5 * (a.re + d.re);
    let half = (0.25 * (a.re - d.re).powi(2) + b.norm_sqr()).sqrt();
    [mean - half, mean + half]
}

fn dispersion_check() -> Outcome {
    let thetas = [0.0, PI / 12.0, FRAC_PI_4, FRAC_PI_3, FRAC_PI_2 - 0.01];
    let mut worst = 0.0f64;
    for basis in BASES {
        for &theta in &thetas {
            for k in k_grid() {
                let e = hermitian_eigs(&effective_hamiltonian_k(basis, theta, k).h);
                let w = (theta.cos() * k.cos()).acos();
                worst = worst.max((e[0] + w).abs()).max((e[1] - w).abs());
                worst = worst.max((dispersion(theta, k) - w).abs());
            }
        }
    }
    Outcome::new(worst <= 1e-12, format!("max eigenvalue error {worst:.2e}"))
}

fn dirac_algebra() -> Outcome {
    // (basis, rotation axis, dagger on the left, partner, mass sign)
    let expected = [
        (PauliAxis::Z, PauliAxis::Y, true, PauliAxis::Y, 1.0),
        (PauliAxis::X, PauliAxis::Y, false, PauliAxis::Y, -1.0),
        (PauliAxis::Y, PauliAxis::X, true, PauliAxis::X, 1.0),
    ];
    let (mut flags_ok, mut worst) = (true, 0.0f64);
    let mut samples = 0;
    for (basis, rot_axis, left, partner, sign) in expected {
        for j in 0..20 {
            let theta = -PI + 2.0 * PI * (j as f64 + 0.5) / 20.0;
            let form = dirac_form(basis, theta);
            flags_ok &= clifford_report(&form.alpha, &form.beta).all();
            let r = rotation(rot_axis, theta / 2.0);
            let conj = |m: &Mat2| if left { r.dagger() * *m * r } else { r * *m * r.dagger() };
            let mass = sign * theta.sin();
            worst = worst.max(conj(&form.alpha).max_abs_diff(&pauli(basis)));
            worst = worst.max(
                conj(&form.beta)
                    .scale_real(theta.sin())
                    .max_abs_diff(&pauli(partner).scale_real(mass)),
            );
            let rot = rotate_to_dirac(&form, theta).unwrap();
            flags_ok &= rot.partner == partner;
            worst = worst.max(rot.alpha_pauli.max_abs_diff(&pauli(basis)));
            worst = worst.max((rot.mass - mass).abs());
            samples += 1;
        }
    }
    Outcome::new(
        flags_ok && worst <= 1e-13,
        format!("{samples} (basis, theta) samples, all Clifford flags {flags_ok}, max rotation error {worst:.2e}"),
    )
}

fn massless_square() -> Outcome {
    let theta = 0.37;
    let sum = dirac_form(PauliAxis::X, theta).beta + dirac_form(PauliAxis::Z, theta).beta;
    let composite = composite_hamiltonian(Lattice::Square, theta).unwrap().beta_sum;
    let exact = sum == Mat2::zero() && composite == Mat2::zero();
    Outcome::new(exact, format!("beta_x + beta_z = {sum}"))
}

fn grover_equivalence() -> Outcome {
    let start = Instant::now();
    let two = probabilities(&run(Lattice::Square, &[0.0, 0.0], symmetric(), [0, 0, 0], 50));
    let mut g = GroverField::start(50);
    g.evolve(50).unwrap();
    let four = probabilities(&g);
    let d = compare(&two, &four, Metric::MaxAbs);
    let el = start.elapsed();
    Outcome::new(
        d <= 1e-10 && within(el, 10.0),
        format!("t=50 sitewise max_abs {d:.2e}, {:.3} s", el.as_secs_f64()),
    )
}

fn recurrences() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 7);
    let inits = [Spinor::spin_down(), symmetric(), random_unit(&mut rng)];
    let mut sq = 0.0f64;
    for s in inits {
        for t in 0..=10 {
            let f = run(Lattice::Square, &[0.0, 0.0], s, [0, 0, 0], t);
            let o = square_recurrence_oracle([s.down, s.up], t).unwrap();
            for (k, v) in &o.cells {
                let e = f.get(&[k[1], k[0], 0]);
                sq = sq.max((e.down - v[0]).norm()).max((e.up - v[1]).norm());
            }
            for (r, e) in f.sites() {
                let v = o.get(r[1], r[0]);
                sq = sq.max((e.down - v[0]).norm()).max((e.up - v[1]).norm());
            }
        }
    }
    let mut gr = 0.0f64;
    let mut report = None;
    for t in 0..=10 {
        let mut g = GroverField::start(t);
        g.evolve(t).unwrap();
        let o = grover_recurrence_oracle(grover_initial_state(), t).unwrap();
        for (x, z, q) in g.sites() {
            let v = o.derived.get(x, z);
            for i in 0..4 {
                gr = gr.max((q[i] - v[i]).norm());
            }
        }
        report = Some(o);
    }
    let report = report.unwrap();
    let mut out = Outcome::new(
        sq <= 1e-12 && gr <= 1e-12 && !report.discrepancies.is_empty(),
        format!(
            "square oracle {sq:.2e}, Grover derived {gr:.2e}, printed-vs-derived report: {} term(s), amplitude gap {:.3} at t=10",
            report.discrepancies.len(),
            report.amplitude_gap
        ),
    );
    for d in &report.discrepancies {
        out.notes.push(format!(
            "relation ({}) source beta{}: printed offset {:?}, derived offset {:?}",
            d.relation, d.source, d.printed_offset, d.derived_offset
        ));
    }
    out
}

fn ballistic() -> Outcome {
    let line = Lattice::Line { axis: PauliAxis::Z };
    let down = probabilities(&run(line, &[0.0], Spinor::spin_down(), [0, 0, 0], 100));
    let up = probabilities(&run(line, &[0.0], Spinor::spin_up(), [0, 0, 0], 100));
    let (pd, pu) = (down.get(&[-100, 0, 0]), up.get(&[100, 0, 0]));
    Outcome::new(
        pd == 1.0 && pu == 1.0 && down.len() == 1 && up.len() == 1,
        format!("P_down(z=-100) = {pd}, P_up(z=+100) = {pu}"),
    )
}

fn triangular_one_step() -> Outcome {
    let f = run(Lattice::Triangular, &[0.0; 3], Spinor::spin_down(), [0, 0, 0], 1);
    let d = probabilities(&f);
    let sites = [[4, 0, 0], [2, 2, 0], [2, -2, 0], [0, 0, 0]];
    let worst = sites.iter().map(|r| (d.get(r) - 0.25).abs()).fold(0.0, f64::max);
    let support = d.iter().filter(|(_, &p)| p > 1e-30).count();
    Outcome::new(
        worst <= 1e-14 && support == 4,
        format!("max |p - 1/4| {worst:.2e} on {sites:?}, support {support} sites"),
    )
}

fn triangular_symmetry() -> Outcome {
    let start = Instant::now();
    let down = probabilities(&run(Lattice::Triangular, &[0.0; 3], Spinor::spin_down(), [0, 0, 0], 40));
    let up = probabilities(&run(Lattice::Triangular, &[0.0; 3], Spinor::spin_up(), [0, 0, 0], 40));
    let tilted = probabilities(&run(
        Lattice::Triangular,
        &[0.0, FRAC_PI_4, 0.0],
        Spinor::spin_up(),
        [0, 0, 0],
        40,
    ));
    let reports = detect_symmetry(&down, &up, 1e-12).unwrap();
    let found = unique_match(&reports);
    let diff = compare(&up, &tilted, Metric::MaxAbs);
    let el = start.elapsed();
    let mut out = Outcome::new(
        found == Some(SymmetryMap::Point) && diff > 0.01 && within(el, 20.0),
        format!(
            "unique map {:?} (pinned point), theta_S = pi/4 max_abs {diff:.4}, {:.3} s",
            found,
            el.as_secs_f64()
        ),
    );
    for r in reports {
        out.notes.push(format!("{}: max error {:.2e}", r.map, r.max_abs_error));
    }
    out
}

fn kagome_structure() -> Outcome {
    let thetas = [PI / 12.0, FRAC_PI_6, FRAC_PI_4];
    let program = make_program(Lattice::Kagome, &thetas).unwrap();
    let origin = [2, 0, 0];
    let mut f = LatticeField::for_walk(&program, 50, &origin).unwrap();
    f.set(&origin, Spinor::spin_down()).unwrap();
    let classes = |f: &LatticeField| {
        let mut v: Vec<KagomeSite> = Vec::new();
        let (mut hole_max, mut off_max) = (0.0f64, 0.0f64);
        for (c, s) in f.sites() {
            let p = s.norm_sqr();
            let Ok(k) = kagome_site_type(c[0], c[1]) else {
                off_max = off_max.max(p);
                continue;
            };
            if k == KagomeSite::Hole {
                hole_max = hole_max.max(p);
            }
            if p > 1e-30 && !v.contains(&k) {
                v.push(k);
            }
        }
        (v, hole_max.max(off_max))
    };
    let (mut ok, mut hole_max) = (true, 0.0f64);
    for _ in 0..50 {
        for (s, want) in KagomeSite::P
            .sub_steps(&thetas)
            .unwrap()
            .iter()
            .zip([KagomeSite::Q, KagomeSite::O, KagomeSite::P])
        {
            f.step_axis(s).unwrap();
            let (v, h) = classes(&f);
            ok &= v == [want];
            hole_max = hole_max.max(h);
        }
    }
    let defect = (1.0 - f.norm_sqr()).abs();
    Outcome::new(
        ok && hole_max <= 1e-30 && defect <= 1e-12,
        format!("50 steps: sub-steps q, o, p every step {ok}, max hole probability {hole_max:.1e}, |1 - norm| {defect:.1e}"),
    )
}

fn variance_control() -> Outcome {
    let line = Lattice::Line { axis: PauliAxis::Z };
    let variances: Vec<f64> = (1..=5)
        .map(|j| {
            let theta = j as f64 * PI / 12.0;
            moments(&probabilities(&run(line, &[theta], symmetric(), [0, 0, 0], 100))).variance[0]
        })
        .collect();
    let decreasing = variances.windows(2).all(|w| w[1] < w[0]);
    Outcome::new(
        decreasing,
        format!(
            "t=100 symmetric start, variance over theta = pi/12..5pi/12: {}",
            variances.iter().map(|v| format!("{v:.2}")).collect::<Vec<_>>().join(", ")
        ),
    )
}

/// `(axis, alpha index, failing flags)` of the audit at generic θ.
const KNOWN_FAILING: [(char, usize, &[&str]); 5] = [
    ('R', 2, &["hermitian_a", "a_squares_to_identity", "anticommute"]),
    ('S', 3, &["a_squares_to_identity", "anticommute"]),
    ('T', 1, &["hermitian_b", "b_squares_to_identity", "anticommute"]),
    ('T', 2, &["hermitian_b", "b_squares_to_identity", "anticommute"]),
    ('T', 3, &["hermitian_b", "a_squares_to_identity", "b_squares_to_identity", "anticommute"]),
];

fn triangular_audit() -> Outcome {
    let theta = PI / 12.0;
    let audit = triangular_terms(theta).audit();
    let mut observed = Vec::new();
    let mut notes = Vec::new();
    for e in &audit {
        let r = e.report;
        let failing: Vec<&str> = [
            ("hermitian_a", r.hermitian_a),
            ("hermitian_b", r.hermitian_b),
            ("a_squares_to_identity", r.a_squares_to_identity),
            ("b_squares_to_identity", r.b_squares_to_identity),
            ("anticommute", r.anticommute),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n)
        .collect();
        notes.push(format!("{} alpha{} ({}): {}", e.axis, e.alpha_index, e.derivative, r));
        if !failing.is_empty() {
            observed.push((e.axis, e.alpha_index, failing));
        }
    }
    let documented = KNOWN_FAILING.len() == observed.len()
        && KNOWN_FAILING
            .iter()
            .zip(&observed)
            .all(|(k, o)| k.0 == o.0 && k.1 == o.1 && k.2 == o.2.as_slice());
    let mismatches = transcription_check(theta);
    for m in &mismatches {
        notes.push(format!(
            "step-matrix transcription: basis {} {:?} block entry ({},{}) printed {:.6} derived {:.6}",
            m.basis, m.block, m.row, m.col, m.printed, m.derived
        ));
    }
    let mut out = Outcome::new(
        audit.len() == 8 && documented,
        format!(
            "{} (alpha, beta) pairs audited, {} with failing flags, all matching the documented set {documented}",
            audit.len(),
            observed.len()
        ),
    );
    out.notes = notes;
    out
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("unitarity on every lattice", unitarity),
        ("momentum-space Hamiltonian identity", hamiltonian_identity),
        ("dispersion", dispersion_check),
        ("Dirac algebra and rotations", dirac_algebra),
        ("square massless sum", massless_square),
        ("Grover equivalence", grover_equivalence),
        ("recurrence oracles", recurrences),
        ("ballistic limit", ballistic),
        ("triangular one step", triangular_one_step),
        ("triangular symmetry", triangular_symmetry),
        ("kagome structure", kagome_structure),
        ("variance control", variance_control),
        ("triangular coefficient audit", triangular_audit),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!(
            "[{}] criterion {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
        for n in &o.notes {
            println!("         {n}");
        }
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
