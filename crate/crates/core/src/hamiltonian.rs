//! Momentum-space step unitaries and their effective Hamiltonians.
//!
//! Under a plane wave `e^{±iP̂} → e^{±ik}` a single-axis step becomes the
//! 2×2 unitary `W(k) = e^{−ik}·P₊B + e^{+ik}·P₋B`, and `H(k)` is its
//! principal logarithm, `W = e^{−iH}`. The lab cross-checks that path
//! against the closed forms, the Dirac-form α/β matrices and the
//! second-order triangular terms.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::algebra::{
    log_unitary, pauli, projectors, rotate_conjugate, DaggerSide, Mat2, PauliAxis, C64,
    DEGENERACY_THRESHOLD, I, ONE, ZERO,
};
use crate::error::{Error, Result};
use crate::walk::{build_coin, Lattice, WalkProgram};

/// Entry tolerance used by [`clifford_report`].
pub const CLIFFORD_TOL: f64 = 1e-13;

/// `W(k)` for one axis: `e^{−ik}·P₊B(θ) + e^{+ik}·P₋B(θ)`.
pub fn momentum_step_unitary(basis: PauliAxis, theta: f64, k: f64) -> Mat2 {
    let (pp, pm) = projectors(basis);
    let b = build_coin(basis, theta);
    (pp * b).scale(C64::from_polar(1.0, -k)) + (pm * b).scale(C64::from_polar(1.0, k))
}

/// `H(k)` together with a flag for the degenerate points `cosθ·cos k = ±1`.
#[derive(Clone, Copy, Debug)]
pub struct EffectiveHamiltonian {
    pub h: Mat2,
    /// `W(k) = ±I`; at `W = −I` the branch is `π·σ_basis`.
    pub degenerate: bool,
}

pub fn effective_hamiltonian_k(basis: PauliAxis, theta: f64, k: f64) -> EffectiveHamiltonian {
    let w = momentum_step_unitary(basis, theta, k);
    let x = theta.cos() * k.cos();
    let degenerate = w.max_abs_diff(&Mat2::identity().scale_real(x.signum())) < DEGENERACY_THRESHOLD;
    if degenerate && x < 0.0 {
        return EffectiveHamiltonian {
            h: pauli(basis).scale_real(PI),
            degenerate,
        };
    }
    let h = log_unitary(&w).expect("W(k) is unitary by construction");
    EffectiveHamiltonian { h, degenerate }
}

/// `ω = arccos(cosθ·cos k) ∈ [0, π]`.
pub fn dispersion(theta: f64, k: f64) -> f64 {
    (theta.cos() * k.cos()).clamp(-1.0, 1.0).acos()
}

/// `ω / sin ω`, with its series near `ω = 0`.
fn omega_over_sin(omega: f64) -> f64 {
    if omega < 1e-3 {
        let w2 = omega * omega;
        1.0 + w2 / 6.0 + 7.0 * w2 * w2 / 360.0
    } else {
        omega / omega.sin()
    }
}

/// The printed closed form `(ω/sin ω)·[…]·σ_basis` with `P̂ → k`.
pub fn closed_form_hamiltonian_k(basis: PauliAxis, theta: f64, k: f64) -> Mat2 {
    let omega = dispersion(theta, k);
    if omega > PI / 2.0 && omega.sin() < DEGENERACY_THRESHOLD {
        return pauli(basis).scale_real(PI);
    }
    let (c, s) = (theta.cos(), theta.sin());
    let (sk, ck) = (k.sin(), k.cos());
    let re = |v: f64| C64::new(v, 0.0);
    let inner = match basis {
        PauliAxis::Z => Mat2::new(
            re(c * sk),
            -I * s * C64::from_polar(1.0, -k),
            -I * s * C64::from_polar(1.0, k),
            re(c * sk),
        ),
        PauliAxis::X => Mat2::new(
            C64::new(c * sk, -s * ck),
            re(s * sk),
            re(-s * sk),
            C64::new(c * sk, s * ck),
        ),
        PauliAxis::Y => Mat2::new(
            C64::new(c * sk, -s * ck),
            C64::new(0.0, -s * sk),
            C64::new(0.0, -s * sk),
            C64::new(c * sk, s * ck),
        ),
    };
    (inner * pauli(basis)).scale_real(omega_over_sin(omega))
}

/// Sampled `ω(k)` for one coin angle.
#[derive(Clone, Debug, Serialize)]
pub struct DispersionCurve {
    pub theta: f64,
    /// `(k, ω)` pairs, increasing in `k`.
    pub samples: Vec<(f64, f64)>,
}

/// `samples` points `k_j = −π + 2π(j+1)/(samples+1)`, symmetric about 0.
pub fn dispersion_curve(theta: f64, samples: usize) -> DispersionCurve {
    let n = samples as f64 + 1.0;
    let samples = (0..samples)
        .map(|j| {
            let k = -PI + 2.0 * PI * (j as f64 + 1.0) / n;
            (k, dispersion(theta, k))
        })
        .collect();
    DispersionCurve { theta, samples }
}

/// `H = −i·α·∂ + β·m` with velocity `c`, for one translation basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiracForm {
    pub basis: PauliAxis,
    pub alpha: Mat2,
    pub beta: Mat2,
    pub mass: Option<f64>,
    pub velocity: Option<f64>,
}

/// The α, β pair of the first-order differential form for `basis`.
pub fn dirac_form(basis: PauliAxis, theta: f64) -> DiracForm {
    let (c, s) = (theta.cos(), theta.sin());
    let (alpha, beta) = match basis {
        PauliAxis::Z => (
            Mat2::real(c, s, s, -c),
            Mat2::new(ZERO, -I, I, ZERO),
        ),
        PauliAxis::X => (
            Mat2::real(s, c, c, -s),
            Mat2::new(ZERO, I, -I, ZERO),
        ),
        PauliAxis::Y => (
            Mat2::new(C64::new(s, 0.0), -I * c, I * c, C64::new(-s, 0.0)),
            Mat2::new(ZERO, ONE, ONE, ZERO),
        ),
    };
    DiracForm {
        basis,
        alpha,
        beta,
        mass: None,
        velocity: None,
    }
}

/// A Dirac form after rotating α onto its Pauli matrix.
#[derive(Clone, Copy, Debug)]
pub struct DiracRotation {
    /// The rotated α; equals `pauli(basis)`.
    pub alpha_pauli: Mat2,
    /// The partner Pauli matrix, positive orientation.
    pub beta_pauli: Mat2,
    pub partner: PauliAxis,
    /// Signed, so that `beta_pauli·mass` is the rotated `β·sinθ`.
    pub mass: f64,
    pub velocity: f64,
}

/// Conjugation used to turn α into a Pauli matrix.
pub fn dirac_rotation(basis: PauliAxis) -> (PauliAxis, DaggerSide) {
    match basis {
        PauliAxis::Z => (PauliAxis::Y, DaggerSide::Left),
        PauliAxis::X => (PauliAxis::Y, DaggerSide::Right),
        PauliAxis::Y => (PauliAxis::X, DaggerSide::Left),
    }
}

pub fn rotate_to_dirac(form: &DiracForm, theta: f64) -> Result<DiracRotation> {
    let expected = dirac_form(form.basis, theta);
    let defect = form
        .alpha
        .max_abs_diff(&expected.alpha)
        .max(form.beta.max_abs_diff(&expected.beta));
    if defect > 1e-12 {
        return Err(Error::NotFromDiracForm(format!(
            "{} at theta = {theta} (max entry deviation {defect:.3e})",
            form.basis
        )));
    }
    let (axis, side) = dirac_rotation(form.basis);
    let alpha = rotate_conjugate(&form.alpha, axis, theta / 2.0, side);
    let beta = rotate_conjugate(&form.beta, axis, theta / 2.0, side);
    let (partner, sign) = PauliAxis::ALL
        .iter()
        .flat_map(|&p| [(p, 1.0), (p, -1.0)])
        .min_by(|a, b| {
            let da = beta.max_abs_diff(&pauli(a.0).scale_real(a.1));
            let db = beta.max_abs_diff(&pauli(b.0).scale_real(b.1));
            da.total_cmp(&db)
        })
        .expect("six candidates");
    Ok(DiracRotation {
        alpha_pauli: alpha,
        beta_pauli: pauli(partner),
        partner,
        mass: sign * theta.sin(),
        velocity: 1.0,
    })
}

/// Flags of the Clifford conditions `A = A†`, `B = B†`, `A² = B² = I`,
/// `{A, B} = 0`, each within [`CLIFFORD_TOL`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordReport {
    pub hermitian_a: bool,
    pub hermitian_b: bool,
    pub a_squares_to_identity: bool,
    pub b_squares_to_identity: bool,
    pub anticommute: bool,
}

impl CliffordReport {
    pub fn all(&self) -> bool {
        self.hermitian_a
            && self.hermitian_b
            && self.a_squares_to_identity
            && self.b_squares_to_identity
            && self.anticommute
    }
}

impl fmt::Display for CliffordReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "hermitian_a={} hermitian_b={} a_squares_to_identity={} b_squares_to_identity={} anticommute={}",
            self.hermitian_a,
            self.hermitian_b,
            self.a_squares_to_identity,
            self.b_squares_to_identity,
            self.anticommute
        )
    }
}

pub fn clifford_report(a: &Mat2, b: &Mat2) -> CliffordReport {
    let id = Mat2::identity();
    CliffordReport {
        hermitian_a: a.is_hermitian(CLIFFORD_TOL),
        hermitian_b: b.is_hermitian(CLIFFORD_TOL),
        a_squares_to_identity: (*a * *a).max_abs_diff(&id) <= CLIFFORD_TOL,
        b_squares_to_identity: (*b * *b).max_abs_diff(&id) <= CLIFFORD_TOL,
        anticommute: a.anticommutator(b).max_abs_diff(&Mat2::zero()) <= CLIFFORD_TOL,
    }
}

/// Sum of per-axis Dirac forms on the square or cubic lattice.
#[derive(Clone, Debug)]
pub struct CompositeHamiltonian {
    pub lattice: Lattice,
    pub theta: f64,
    /// `(basis, α)` in the lattice's step order.
    pub alphas: Vec<(PauliAxis, Mat2)>,
    /// `Σ β`.
    pub beta_sum: Mat2,
    /// `Σ β · sinθ`.
    pub mass_term: Mat2,
    /// Per-axis α after rotation, each a Pauli matrix.
    pub rotated_alphas: Vec<(PauliAxis, Mat2)>,
    /// `Σ m·β'` after rotation.
    pub rotated_mass_term: Mat2,
}

pub fn composite_hamiltonian(lattice: Lattice, theta: f64) -> Result<CompositeHamiltonian> {
    let bases: &[PauliAxis] = match lattice {
        Lattice::Square => &[PauliAxis::Z, PauliAxis::X],
        Lattice::Cubic => &[PauliAxis::Z, PauliAxis::X, PauliAxis::Y],
        other => {
            return Err(Error::LatticeMismatch(format!(
                "composite Hamiltonian is defined for square and cubic lattices, not {other}"
            )))
        }
    };
    let mut alphas = Vec::new();
    let mut rotated_alphas = Vec::new();
    let mut beta_sum = Mat2::zero();
    let mut rotated_mass_term = Mat2::zero();
    for &b in bases {
        let form = dirac_form(b, theta);
        let rot = rotate_to_dirac(&form, theta)?;
        alphas.push((b, form.alpha));
        rotated_alphas.push((b, rot.alpha_pauli));
        beta_sum = beta_sum + form.beta;
        rotated_mass_term = rotated_mass_term + rot.beta_pauli.scale_real(rot.mass);
    }
    Ok(CompositeHamiltonian {
        lattice,
        theta,
        alphas,
        beta_sum,
        mass_term: beta_sum.scale_real(theta.sin()),
        rotated_alphas,
        rotated_mass_term,
    })
}

/// Differential operator multiplying a triangular coefficient matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Derivative {
    Dx,
    Dy,
    Dxx,
    Dxy,
}

impl fmt::Display for Derivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Derivative::Dx => "d/dx",
            Derivative::Dy => "d/dy",
            Derivative::Dxx => "d2/dx2",
            Derivative::Dxy => "d2/dxdy",
        })
    }
}

/// `weight·α · D` inside the `−i(…)` bracket.
#[derive(Clone, Copy, Debug)]
pub struct DiffTerm {
    pub derivative: Derivative,
    pub weight: f64,
    pub alpha: Mat2,
}

impl DiffTerm {
    pub fn coefficient(&self) -> Mat2 {
        self.alpha.scale_real(self.weight)
    }
}

/// `H = −i Σ weight·α·D + β·sinθ` for one triangular quantization axis.
#[derive(Clone, Debug)]
pub struct AxisTerms {
    pub basis: PauliAxis,
    pub terms: Vec<DiffTerm>,
    pub beta: Mat2,
}

impl AxisTerms {
    /// Summed coefficient of `d` (zero when absent).
    pub fn coefficient(&self, d: Derivative) -> Mat2 {
        self.terms
            .iter()
            .filter(|t| t.derivative == d)
            .fold(Mat2::zero(), |acc, t| acc + t.coefficient())
    }

    pub fn axis_name(&self) -> char {
        match self.basis {
            PauliAxis::Z => 'R',
            PauliAxis::X => 'S',
            PauliAxis::Y => 'T',
        }
    }
}

/// Second-order triangular Hamiltonian terms, axes in R, S, T order.
#[derive(Clone, Debug)]
pub struct TriangularTerms {
    pub theta: f64,
    pub axes: [AxisTerms; 3],
}

/// One audited `(α^i, β¹)` pair.
#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub axis: char,
    pub basis: PauliAxis,
    pub alpha_index: usize,
    pub derivative: Derivative,
    pub report: CliffordReport,
}

impl TriangularTerms {
    pub fn axis(&self, basis: PauliAxis) -> &AxisTerms {
        self.axes
            .iter()
            .find(|a| a.basis == basis)
            .expect("all three bases present")
    }

    /// Clifford flags of every `α^i` paired with the axis's `β¹`.
    pub fn audit(&self) -> Vec<AuditEntry> {
        let mut out = Vec::new();
        for ax in &self.axes {
            for (i, t) in ax.terms.iter().enumerate() {
                out.push(AuditEntry {
                    axis: ax.axis_name(),
                    basis: ax.basis,
                    alpha_index: i + 1,
                    derivative: t.derivative,
                    report: clifford_report(&t.alpha, &ax.beta),
                });
            }
        }
        out
    }
}

pub fn triangular_terms(theta: f64) -> TriangularTerms {
    let (c, s) = (theta.cos(), theta.sin());
    let re = |v: f64| C64::new(v, 0.0);
    let im = |v: f64| C64::new(0.0, v);
    let term = |derivative, weight, alpha| DiffTerm {
        derivative,
        weight,
        alpha,
    };
    let r = AxisTerms {
        basis: PauliAxis::Z,
        terms: vec![
            term(Derivative::Dx, 2.0, Mat2::real(c, s, s, -c)),
            term(Derivative::Dxx, 1.0, Mat2::real(0.0, -s, s, 0.0)),
        ],
        beta: Mat2::new(ZERO, I, -I, ZERO),
    };
    let sx = Mat2::real(s, c, c, -s);
    let s_axis = AxisTerms {
        basis: PauliAxis::X,
        terms: vec![
            term(Derivative::Dx, 1.0, sx),
            term(Derivative::Dy, 1.0, sx),
            term(Derivative::Dxy, 1.0, Mat2::new(ZERO, im(-s), im(s), ZERO)),
        ],
        beta: Mat2::new(ZERO, -I, I, ZERO),
    };
    let t = AxisTerms {
        basis: PauliAxis::Y,
        terms: vec![
            term(Derivative::Dx, 1.0, Mat2::new(re(s), im(c), im(-c), re(-s))),
            term(Derivative::Dy, 1.0, Mat2::new(re(-s), im(-c), im(c), re(s))),
            term(Derivative::Dxy, 1.0, Mat2::new(ZERO, im(s), im(-s), ZERO)),
        ],
        beta: Mat2::real(0.0, -1.0, 1.0, 0.0),
    };
    TriangularTerms {
        theta,
        axes: [r, s_axis, t],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigShift {
    /// `sin(P̂)ψ(z) = (i/2)[ψ(z−1) − ψ(z+1)]`
    Sin,
    /// `cos(P̂)ψ(z) = ½[ψ(z−1) + ψ(z+1)]`
    Cos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Zero outside the buffer; nonzero edge values are an overflow.
    Open,
    Periodic,
}

/// Central-difference action of `sin(P̂)` or `cos(P̂)` on a 1D buffer.
pub fn apply_trig_shift(field: &[C64], which: TrigShift, boundary: Boundary) -> Result<Vec<C64>> {
    let n = field.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if boundary == Boundary::Open {
        for (idx, needed) in [(0, -1i64), (n - 1, n as i64)] {
            if field[idx] != ZERO {
                return Err(Error::ExtentOverflow {
                    axis: 0,
                    half_width: n / 2,
                    needed,
                });
            }
        }
    }
    let at = |j: i64| -> C64 {
        if (0..n as i64).contains(&j) {
            field[j as usize]
        } else if boundary == Boundary::Periodic {
            field[j.rem_euclid(n as i64) as usize]
        } else {
            ZERO
        }
    };
    Ok((0..n as i64)
        .map(|j| {
            let (l, r) = (at(j - 1), at(j + 1));
            match which {
                TrigShift::Sin => I * 0.5 * (l - r),
                TrigShift::Cos => (l + r) * 0.5,
            }
        })
        .collect())
}

/// Plane-wave response of one full step of a translation-invariant
/// program: the engine maps `e^{ik·r}χ` to `e^{ik·r}·U(k)χ`.
///
/// For a single line axis this is `momentum_step_unitary(basis, θ, −k)`.
pub fn plane_wave_response(program: &WalkProgram, k: &[f64; 3]) -> Result<Mat2> {
    if program.lattice == Lattice::Kagome {
        return Err(Error::LatticeMismatch(
            "kagome steps depend on the sublattice and have no single plane-wave response".into(),
        ));
    }
    let mut u = Mat2::identity();
    for step in &program.steps {
        let (mp, mm) = step.transfer_matrices();
        let d = step.displacement_plus();
        let phase: f64 = (0..3).map(|a| k[a] * d[a] as f64).sum();
        let sub = mp.scale(C64::from_polar(1.0, -phase)) + mm.scale(C64::from_polar(1.0, phase));
        u = sub * u;
    }
    Ok(u)
}

/// Which half of a printed `W = e^{−iP̂}·A + e^{+iP̂}·B` an entry sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShiftBlock {
    Minus,
    Plus,
}

/// One entry where the printed step matrix and `P±·B(θ)` disagree.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EntryMismatch {
    pub basis: PauliAxis,
    pub block: ShiftBlock,
    /// 1-based.
    pub row: usize,
    /// 1-based.
    pub col: usize,
    #[serde(serialize_with = "ser_c64")]
    pub printed: C64,
    #[serde(serialize_with = "ser_c64")]
    pub derived: C64,
}

fn ser_c64<S: serde::Serializer>(c: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&c.re)?;
    t.serialize_element(&c.im)?;
    t.end()
}

/// Printed `(e^{−iP̂} block, e^{+iP̂} block)` of the single-axis step.
pub fn printed_step_blocks(basis: PauliAxis, theta: f64) -> (Mat2, Mat2) {
    let (c, s) = (theta.cos(), theta.sin());
    match basis {
        PauliAxis::Z => (Mat2::real(c, s, 0.0, 0.0), Mat2::real(0.0, 0.0, -s, c)),
        PauliAxis::X => (
            Mat2::real(c + s, c - s, c + s, c - s).scale_real(0.5),
            Mat2::real(c - s, -c - s, -c + s, c + s).scale_real(0.5),
        ),
        PauliAxis::Y => (
            Mat2::new(
                C64::new(c + s, 0.0),
                C64::new(0.0, -c + s),
                C64::new(0.0, c + s),
                C64::new(c - s, 0.0),
            )
            .scale_real(0.5),
            Mat2::new(
                C64::new(c - s, 0.0),
                C64::new(0.0, c + s),
                C64::new(s, -c),
                C64::new(c + s, 0.0),
            )
            .scale_real(0.5),
        ),
    }
}

/// Entry-by-entry comparison of the printed step matrices with `P±·B(θ)`.
pub fn transcription_check(theta: f64) -> Vec<EntryMismatch> {
    let mut out = Vec::new();
    for basis in [PauliAxis::Z, PauliAxis::X, PauliAxis::Y] {
        let (pp, pm) = projectors(basis);
        let b = build_coin(basis, theta);
        let (pa, pb) = printed_step_blocks(basis, theta);
        for (block, printed, derived) in
            [(ShiftBlock::Minus, pa, pp * b), (ShiftBlock::Plus, pb, pm * b)]
        {
            let (pe, de) = (printed.entries(), derived.entries());
            for i in 0..4 {
                if (pe[i] - de[i]).norm() > 1e-12 {
                    out.push(EntryMismatch {
                        basis,
                        block,
                        row: i / 2 + 1,
                        col: i % 2 + 1,
                        printed: pe[i],
                        derived: de[i],
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{eig_unitary, exp_hermitian};
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    fn eigen_hermitian(h: &Mat2) -> (f64, f64) {
        // Closed-form eigenvalues of a 2×2 Hermitian matrix.
        let tr = h.trace().re;
        let d = h.det().re;
        let disc = (tr * tr / 4.0 - d).max(0.0).sqrt();
        (tr / 2.0 - disc, tr / 2.0 + disc)
    }

    #[test]
    fn step_unitary_examples() {
        let k = 0.9;
        let w = momentum_step_unitary(PauliAxis::Z, 0.0, k);
        let d = Mat2::diag(C64::from_polar(1.0, -k), C64::from_polar(1.0, k));
        assert!(w.max_abs_diff(&d) < 1e-15);
        let t = 0.4;
        let w = momentum_step_unitary(PauliAxis::Z, t, 0.0);
        assert!(w.max_abs_diff(&build_coin(PauliAxis::Z, t)) < 1e-15);
        for b in PauliAxis::ALL {
            assert!(momentum_step_unitary(b, 0.7, -2.1).unitarity_defect() < 1e-14);
        }
    }

    #[test]
    fn step_unitary_eigenphases_follow_dispersion() {
        let w = momentum_step_unitary(PauliAxis::Z, FRAC_PI_4, FRAC_PI_3);
        let e = eig_unitary(&w).unwrap();
        let omega = (FRAC_PI_4.cos() * FRAC_PI_3.cos()).acos();
        assert!((e.values[0] - C64::from_polar(1.0, -omega)).norm() < 1e-12);
        assert!((e.values[1] - C64::from_polar(1.0, omega)).norm() < 1e-12);
    }

    #[test]
    fn zero_coin_hamiltonian_is_k_sigma_z() {
        for k in [-3.0, -1.2, 0.0, 0.4, 2.9] {
            let h = effective_hamiltonian_k(PauliAxis::Z, 0.0, k);
            assert!(h.h.max_abs_diff(&pauli(PauliAxis::Z).scale_real(k)) < 1e-12);
            let cf = closed_form_hamiltonian_k(PauliAxis::Z, 0.0, k);
            assert!(cf.max_abs_diff(&pauli(PauliAxis::Z).scale_real(k)) < 1e-12);
        }
    }

    #[test]
    fn effective_matches_closed_form_and_exp() {
        for b in PauliAxis::ALL {
            for theta in [0.0, PI / 12.0, FRAC_PI_4, FRAC_PI_3] {
                for j in 0..64 {
                    let k = -PI + 2.0 * PI * (j as f64 + 1.0) / 64.0;
                    let e = effective_hamiltonian_k(b, theta, k);
                    let w = momentum_step_unitary(b, theta, k);
                    assert!(exp_hermitian(&e.h).unwrap().dist(&w) < 1e-10);
                    if (theta.cos() * k.cos()).abs() < 1.0 - 1e-6 {
                        let cf = closed_form_hamiltonian_k(b, theta, k);
                        assert!(cf.dist(&e.h) < 1e-10, "{b} θ={theta} k={k}");
                    }
                    let (lo, hi) = eigen_hermitian(&e.h);
                    let w0 = dispersion(theta, k);
                    assert!((hi - w0).abs() < 1e-12 && (lo + w0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn degenerate_points_are_flagged() {
        let e = effective_hamiltonian_k(PauliAxis::X, 0.0, PI);
        assert!(e.degenerate);
        assert!(e.h.max_abs_diff(&pauli(PauliAxis::X).scale_real(PI)) < 1e-15);
        let e = effective_hamiltonian_k(PauliAxis::Y, 0.0, 0.0);
        assert!(e.degenerate);
        assert!(e.h.max_abs_diff(&Mat2::zero()) < 1e-15);
        assert!(!effective_hamiltonian_k(PauliAxis::Z, 0.3, 0.2).degenerate);
    }

    #[test]
    fn closed_form_small_omega_series() {
        let h = closed_form_hamiltonian_k(PauliAxis::X, 1e-5, 1e-5);
        let e = effective_hamiltonian_k(PauliAxis::X, 1e-5, 1e-5);
        assert!(h.dist(&e.h) < 1e-12);
    }

    #[test]
    fn dispersion_examples() {
        assert!((dispersion(0.3, 0.0) - 0.3).abs() < 1e-15);
        assert!((dispersion(-2.0, 0.0) - 2.0).abs() < 1e-15);
        assert!((dispersion(1.1, PI / 2.0) - PI / 2.0).abs() < 1e-15);
        assert!((dispersion(FRAC_PI_6, FRAC_PI_3) - (3f64.sqrt() / 4.0).acos()).abs() < 1e-15);
        assert!((dispersion(FRAC_PI_6, FRAC_PI_3) - 1.1230).abs() < 1e-4);
    }

    #[test]
    fn dispersion_curve_is_symmetric() {
        let c = dispersion_curve(FRAC_PI_6, 5);
        let ks: Vec<f64> = c.samples.iter().map(|s| s.0).collect();
        assert!((ks[3] - FRAC_PI_3).abs() < 1e-15);
        assert_eq!(ks[2], 0.0);
        for i in 0..5 {
            assert!((c.samples[i].1 - c.samples[4 - i].1).abs() < 1e-15);
            assert!((0.0..=PI).contains(&c.samples[i].1));
        }
    }

    #[test]
    fn dirac_forms_satisfy_clifford() {
        for b in PauliAxis::ALL {
            for j in 0..20 {
                let theta = -PI + 2.0 * PI * j as f64 / 20.0;
                let f = dirac_form(b, theta);
                assert!(clifford_report(&f.alpha, &f.beta).all(), "{b} θ={theta}");
            }
        }
        assert_eq!(dirac_form(PauliAxis::Z, 0.0).alpha, pauli(PauliAxis::Z));
        assert_eq!(dirac_form(PauliAxis::Z, 0.0).beta, pauli(PauliAxis::Y));
        assert_eq!(dirac_form(PauliAxis::X, 0.0).alpha, pauli(PauliAxis::X));
        assert_eq!(dirac_form(PauliAxis::Y, 0.0).alpha, pauli(PauliAxis::Y));
    }

    #[test]
    fn clifford_report_examples() {
        assert!(clifford_report(&pauli(PauliAxis::X), &pauli(PauliAxis::Y)).all());
        let r = clifford_report(&Mat2::identity(), &Mat2::identity());
        assert!(!r.anticommute && r.hermitian_a && r.a_squares_to_identity);
    }

    #[test]
    fn rotation_to_dirac_signs() {
        let t = FRAC_PI_6;
        let z = rotate_to_dirac(&dirac_form(PauliAxis::Z, t), t).unwrap();
        assert!(z.alpha_pauli.max_abs_diff(&pauli(PauliAxis::Z)) < 1e-13);
        assert_eq!(z.partner, PauliAxis::Y);
        assert!((z.mass - 0.5).abs() < 1e-15);
        let x = rotate_to_dirac(&dirac_form(PauliAxis::X, t), t).unwrap();
        assert!(x.alpha_pauli.max_abs_diff(&pauli(PauliAxis::X)) < 1e-13);
        assert_eq!(x.partner, PauliAxis::Y);
        assert!((x.mass + 0.5).abs() < 1e-15);
        let y = rotate_to_dirac(&dirac_form(PauliAxis::Y, t), t).unwrap();
        assert!(y.alpha_pauli.max_abs_diff(&pauli(PauliAxis::Y)) < 1e-13);
        assert_eq!(y.partner, PauliAxis::X);
        assert!((y.mass - 0.5).abs() < 1e-15);
        for b in PauliAxis::ALL {
            let r = rotate_to_dirac(&dirac_form(b, 0.0), 0.0).unwrap();
            assert_eq!(r.mass.abs(), 0.0);
            assert_eq!(r.velocity, 1.0);
        }
    }

    #[test]
    fn rotation_rejects_foreign_form() {
        let mut f = dirac_form(PauliAxis::Z, 0.4);
        f.alpha = pauli(PauliAxis::X);
        assert!(matches!(rotate_to_dirac(&f, 0.4), Err(Error::NotFromDiracForm(_))));
        let f = dirac_form(PauliAxis::Z, 0.4);
        assert!(rotate_to_dirac(&f, 0.5).is_err());
    }

    #[test]
    fn square_is_massless_and_cubic_keeps_sigma_x_mass() {
        for theta in [0.0, 0.3, FRAC_PI_4, 2.0] {
            let sq = composite_hamiltonian(Lattice::Square, theta).unwrap();
            assert_eq!(sq.beta_sum, Mat2::zero());
            assert!(sq.rotated_mass_term.max_abs_diff(&Mat2::zero()) < 1e-15);
            assert!(sq.rotated_alphas[0].1.max_abs_diff(&pauli(PauliAxis::Z)) < 1e-13);
            assert!(sq.rotated_alphas[1].1.max_abs_diff(&pauli(PauliAxis::X)) < 1e-13);
        }
        let cub = composite_hamiltonian(Lattice::Cubic, FRAC_PI_4).unwrap();
        let want = pauli(PauliAxis::X).scale_real(2f64.sqrt() / 2.0);
        assert!(cub.mass_term.max_abs_diff(&want) < 1e-15);
        assert!(cub.rotated_mass_term.max_abs_diff(&want) < 1e-15);
        assert!(composite_hamiltonian(Lattice::Triangular, 0.1).is_err());
    }

    #[test]
    fn triangular_terms_examples() {
        let t0 = triangular_terms(0.0);
        let r = t0.axis(PauliAxis::Z);
        assert_eq!(r.coefficient(Derivative::Dx), pauli(PauliAxis::Z).scale_real(2.0));
        for ax in &t0.axes {
            for d in [Derivative::Dxx, Derivative::Dxy] {
                assert_eq!(ax.coefficient(d).max_abs_diff(&Mat2::zero()), 0.0);
            }
        }
        let t = triangular_terms(FRAC_PI_6);
        let r = t.axis(PauliAxis::Z);
        let rep = clifford_report(&r.terms[1].alpha, &r.beta);
        assert!(!rep.a_squares_to_identity);
        assert!(!rep.hermitian_a);
    }

    #[test]
    fn triangular_audit_flags() {
        let audit = triangular_terms(FRAC_PI_6).audit();
        assert_eq!(audit.len(), 8);
        // First-order α¹ of R pairs with its β as a Clifford pair.
        assert!(audit[0].report.all());
        // T-axis β = [[0,−1],[1,0]] is anti-Hermitian and squares to −I.
        for e in audit.iter().filter(|e| e.axis == 'T') {
            assert!(!e.report.hermitian_b && !e.report.b_squares_to_identity);
        }
    }

    #[test]
    fn trig_shift_on_plane_waves() {
        let n = 32;
        for j in 0..n {
            let k = 2.0 * PI * j as f64 / n as f64;
            let wave: Vec<C64> = (0..n)
                .map(|z| C64::from_polar(1.0, 2.0 * PI * ((j * z) % n) as f64 / n as f64))
                .collect();
            let s = apply_trig_shift(&wave, TrigShift::Sin, Boundary::Periodic).unwrap();
            let c = apply_trig_shift(&wave, TrigShift::Cos, Boundary::Periodic).unwrap();
            for z in 0..n {
                assert!((s[z] - wave[z] * k.sin()).norm() < 1e-14);
                assert!((c[z] - wave[z] * k.cos()).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn trig_shift_on_constants_and_edges() {
        let v = vec![C64::new(0.7, -0.2); 9];
        let c = apply_trig_shift(&v, TrigShift::Cos, Boundary::Periodic).unwrap();
        let s = apply_trig_shift(&v, TrigShift::Sin, Boundary::Periodic).unwrap();
        assert!(c.iter().all(|x| (*x - v[0]).norm() < 1e-16));
        assert!(s.iter().all(|x| x.norm() < 1e-16));
        assert!(matches!(
            apply_trig_shift(&v, TrigShift::Cos, Boundary::Open),
            Err(Error::ExtentOverflow { .. })
        ));
        let mut w = vec![ZERO; 5];
        w[2] = ONE;
        let s = apply_trig_shift(&w, TrigShift::Sin, Boundary::Open).unwrap();
        assert_eq!(s[1], C64::new(0.0, -0.5));
        assert_eq!(s[3], C64::new(0.0, 0.5));
    }

    #[test]
    fn printed_blocks_have_one_bad_entry() {
        let m = transcription_check(0.3);
        assert_eq!(m.len(), 1);
        let e = m[0];
        assert_eq!((e.basis, e.block, e.row, e.col), (PauliAxis::Y, ShiftBlock::Plus, 2, 1));
        let (c, s) = (0.3f64.cos(), 0.3f64.sin());
        assert!((e.derived - C64::new(0.0, -c + s) * 0.5).norm() < 1e-15);
        assert!((e.printed - C64::new(s, -c) * 0.5).norm() < 1e-15);
        assert!(transcription_check(0.0).is_empty());
    }
}
