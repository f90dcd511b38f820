//! Exact 2×2 complex linear algebra.
//!
//! Everything here works in closed form through the Pauli decomposition
//! `M = c0·I + cx·σx + cy·σy + cz·σz`, so exponentials and logarithms of
//! 2×2 unitaries need no series expansion or iterative eigensolver.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);
pub(crate) const I: C64 = C64::new(0.0, 1.0);

/// Eigenvalue separation below which a unitary is treated as degenerate.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

/// Default tolerance of the unitarity / hermiticity preconditions.
pub const PRECONDITION_TOL: f64 = 1e-12;

/// Two-component wavefunction at one site, `(ψ↓, ψ↑)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Spinor {
    pub down: C64,
    pub up: C64,
}

impl Spinor {
    pub const fn new(down: C64, up: C64) -> Self {
        Spinor { down, up }
    }

    pub const fn zero() -> Self {
        Spinor::new(ZERO, ZERO)
    }

    /// `|↓⟩ = (1, 0)ᵀ`.
    pub const fn spin_down() -> Self {
        Spinor::new(ONE, ZERO)
    }

    /// `|↑⟩ = (0, 1)ᵀ`.
    pub const fn spin_up() -> Self {
        Spinor::new(ZERO, ONE)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.down.norm_sqr() + self.up.norm_sqr()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Spinor) -> C64 {
        self.down.conj() * other.down + self.up.conj() * other.up
    }

    pub fn scale(&self, c: C64) -> Spinor {
        Spinor::new(self.down * c, self.up * c)
    }

    pub fn normalized(&self) -> Spinor {
        let n = self.norm_sqr().sqrt();
        Spinor::new(self.down / n, self.up / n)
    }

    pub fn is_zero(&self) -> bool {
        self.down == ZERO && self.up == ZERO
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Spinor) -> f64 {
        (self.down - other.down)
            .norm()
            .max((self.up - other.up).norm())
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, rhs: Spinor) -> Spinor {
        Spinor::new(self.down + rhs.down, self.up + rhs.up)
    }
}

impl AddAssign for Spinor {
    fn add_assign(&mut self, rhs: Spinor) {
        self.down += rhs.down;
        self.up += rhs.up;
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(self, rhs: Spinor) -> Spinor {
        Spinor::new(self.down - rhs.down, self.up - rhs.up)
    }
}

impl Neg for Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor::new(-self.down, -self.up)
    }
}

impl Mul<C64> for Spinor {
    type Output = Spinor;
    fn mul(self, rhs: C64) -> Spinor {
        self.scale(rhs)
    }
}

/// 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub a11: C64,
    pub a12: C64,
    pub a21: C64,
    pub a22: C64,
}

impl Mat2 {
    pub const fn new(a11: C64, a12: C64, a21: C64, a22: C64) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn real(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Mat2::new(a11.into(), a12.into(), a21.into(), a22.into())
    }

    pub const fn identity() -> Self {
        Mat2::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Mat2::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn diag(d1: C64, d2: C64) -> Self {
        Mat2::new(d1, ZERO, ZERO, d2)
    }

    /// `|a⟩⟨b|`.
    pub fn outer(a: &Spinor, b: &Spinor) -> Self {
        Mat2::new(
            a.down * b.down.conj(),
            a.down * b.up.conj(),
            a.up * b.down.conj(),
            a.up * b.up.conj(),
        )
    }

    /// Matrix whose columns are `c1` and `c2`.
    pub fn from_columns(c1: &Spinor, c2: &Spinor) -> Self {
        Mat2::new(c1.down, c2.down, c1.up, c2.up)
    }

    pub fn scale(&self, c: C64) -> Mat2 {
        Mat2::new(self.a11 * c, self.a12 * c, self.a21 * c, self.a22 * c)
    }

    pub fn scale_real(&self, r: f64) -> Mat2 {
        self.scale(C64::new(r, 0.0))
    }

    pub fn dagger(&self) -> Mat2 {
        Mat2::new(
            self.a11.conj(),
            self.a21.conj(),
            self.a12.conj(),
            self.a22.conj(),
        )
    }

    pub fn trace(&self) -> C64 {
        self.a11 + self.a22
    }

    pub fn det(&self) -> C64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        Spinor::new(
            self.a11 * v.down + self.a12 * v.up,
            self.a21 * v.down + self.a22 * v.up,
        )
    }

    pub fn entries(&self) -> [C64; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of `self - other`.
    pub fn dist(&self, other: &Mat2) -> f64 {
        (*self - *other).frobenius_norm()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        (*self - *other)
            .entries()
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn anticommutator(&self, other: &Mat2) -> Mat2 {
        *self * *other + *other * *self
    }

    pub fn commutator(&self, other: &Mat2) -> Mat2 {
        *self * *other - *other * *self
    }

    pub fn unitarity_defect(&self) -> f64 {
        (self.dagger() * *self).max_abs_diff(&Mat2::identity())
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn is_traceless(&self, tol: f64) -> bool {
        self.trace().norm() <= tol
    }

    /// Coefficients `(c0, [cx, cy, cz])` with `M = c0·I + Σ cj·σj`.
    pub fn pauli_coeffs(&self) -> (C64, [C64; 3]) {
        let c0 = (self.a11 + self.a22) * 0.5;
        let cx = (self.a12 + self.a21) * 0.5;
        let cy = (self.a12 - self.a21) * I * 0.5;
        let cz = (self.a11 - self.a22) * 0.5;
        (c0, [cx, cy, cz])
    }

    pub fn from_pauli_coeffs(c0: C64, c: [C64; 3]) -> Mat2 {
        Mat2::new(c0 + c[2], c[0] - I * c[1], c[0] + I * c[1], c0 - c[2])
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 + o.a11,
            self.a12 + o.a12,
            self.a21 + o.a21,
            self.a22 + o.a22,
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 - o.a11,
            self.a12 - o.a12,
            self.a21 - o.a21,
            self.a22 - o.a22,
        )
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale_real(-1.0)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |z: C64| format!("{:+.6}{:+.6}i", z.re, z.im);
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            c(self.a11),
            c(self.a12),
            c(self.a21),
            c(self.a22)
        )
    }
}

/// Which Pauli operator's eigenbasis is used as translation states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn letter(&self) -> char {
        match self {
            PauliAxis::X => 'x',
            PauliAxis::Y => 'y',
            PauliAxis::Z => 'z',
        }
    }

    pub fn matrix(&self) -> Mat2 {
        pauli(*self)
    }
}

impl fmt::Display for PauliAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for PauliAxis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" => Ok(PauliAxis::X),
            "y" => Ok(PauliAxis::Y),
            "z" => Ok(PauliAxis::Z),
            other => Err(Error::Parse(format!("unknown Pauli axis `{other}`"))),
        }
    }
}

pub fn pauli(axis: PauliAxis) -> Mat2 {
    match axis {
        PauliAxis::X => Mat2::new(ZERO, ONE, ONE, ZERO),
        PauliAxis::Y => Mat2::new(ZERO, -I, I, ZERO),
        PauliAxis::Z => Mat2::new(ONE, ZERO, ZERO, -ONE),
    }
}

/// Eigenstates `(|+⟩, |−⟩)` of `pauli(axis)` for eigenvalues `+1` and `−1`.
///
/// For `Z` the `+1` state is `|↓⟩ = (1, 0)ᵀ`.
pub fn basis_states(axis: PauliAxis) -> (Spinor, Spinor) {
    let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    match axis {
        PauliAxis::Z => (Spinor::spin_down(), Spinor::spin_up()),
        PauliAxis::X => (Spinor::new(h, h), Spinor::new(h, -h)),
        PauliAxis::Y => (Spinor::new(h, I * h), Spinor::new(h, -I * h)),
    }
}

/// Projectors `(|+⟩⟨+|, |−⟩⟨−|)` onto the eigenstates of `pauli(axis)`.
pub fn projectors(axis: PauliAxis) -> (Mat2, Mat2) {
    let (p, m) = basis_states(axis);
    (Mat2::outer(&p, &p), Mat2::outer(&m, &m))
}

/// Result of [`eig_unitary`].
#[derive(Clone, Copy, Debug)]
pub struct UnitaryEigen {
    pub values: [C64; 2],
    pub vectors: [Spinor; 2],
    /// Set when `|λ1 − λ2| < DEGENERACY_THRESHOLD`; vectors are then the
    /// standard basis.
    pub degenerate: bool,
}

/// `U = g·(a0·I − i·a·σ)` with `g = √det U` (principal root), `a0, a` real.
struct SpinDecomposition {
    g: C64,
    a0: f64,
    a: [f64; 3],
}

impl SpinDecomposition {
    fn of(u: &Mat2) -> Self {
        let g = u.det().sqrt();
        let (c0, c) = u.pauli_coeffs();
        let a0 = (c0 / g).re;
        let a = [(I * c[0] / g).re, (I * c[1] / g).re, (I * c[2] / g).re];
        SpinDecomposition { g, a0, a }
    }

    fn a_norm(&self) -> f64 {
        let [x, y, z] = self.a;
        (x * x + y * y + z * z).sqrt()
    }

    /// Rotation half-angle `b ∈ [0, π]`; eigenvalues are `g·e^{∓ib}`.
    fn half_angle(&self) -> f64 {
        self.a_norm().atan2(self.a0)
    }

    fn unit_axis(&self) -> [f64; 3] {
        let n = self.a_norm();
        [self.a[0] / n, self.a[1] / n, self.a[2] / n]
    }
}

/// Eigenvector of `n·σ` for eigenvalue `sign` (±1), chosen away from the
/// cancellation branch.
fn axis_eigenvector(n: [f64; 3], sign: f64) -> Spinor {
    let [nx, ny, nz] = n;
    let w = C64::new(nx, ny);
    let v = if sign > 0.0 {
        if nz >= 0.0 {
            Spinor::new(C64::new(1.0 + nz, 0.0), w)
        } else {
            Spinor::new(w.conj(), C64::new(1.0 - nz, 0.0))
        }
    } else if nz >= 0.0 {
        Spinor::new(-w.conj(), C64::new(1.0 + nz, 0.0))
    } else {
        Spinor::new(C64::new(1.0 - nz, 0.0), -w)
    };
    phase_normalize(&v.normalized())
}

/// Rotate the global phase so the first nonzero component is real positive.
fn phase_normalize(v: &Spinor) -> Spinor {
    let lead = if v.down.norm() > 1e-300 { v.down } else { v.up };
    let phase = lead / lead.norm();
    v.scale(phase.conj())
}

/// Wrap an angle into `(−π, π]`.
pub(crate) fn wrap_angle(phi: f64) -> f64 {
    let w = phi.sin().atan2(phi.cos());
    if w <= -PI {
        PI
    } else {
        w
    }
}

fn check_unitary(u: &Mat2) -> Result<()> {
    let defect = u.unitarity_defect();
    if defect > PRECONDITION_TOL || !defect.is_finite() {
        return Err(Error::NotUnitary(defect));
    }
    Ok(())
}

fn check_hermitian(h: &Mat2) -> Result<()> {
    let defect = h.hermiticity_defect();
    if defect > PRECONDITION_TOL || !defect.is_finite() {
        return Err(Error::NotHermitian(defect));
    }
    Ok(())
}

/// Eigen-decomposition of a 2×2 unitary.
///
/// Pairs are ordered by increasing principal argument of the eigenvalue.
pub fn eig_unitary(u: &Mat2) -> Result<UnitaryEigen> {
    check_unitary(u)?;
    let d = SpinDecomposition::of(u);
    let b = d.half_angle();
    let split = 2.0 * b.sin();
    if split < DEGENERACY_THRESHOLD {
        let lambda = d.g * b.cos().signum();
        let lambda = lambda / lambda.norm();
        return Ok(UnitaryEigen {
            values: [lambda, lambda],
            vectors: [Spinor::spin_down(), Spinor::spin_up()],
            degenerate: true,
        });
    }
    let n = d.unit_axis();
    let rot = C64::from_polar(1.0, -b);
    let lp = d.g * rot;
    let lm = d.g * rot.conj();
    let vp = axis_eigenvector(n, 1.0);
    let vm = axis_eigenvector(n, -1.0);
    let (ap, am) = (lp.arg(), lm.arg());
    let first_plus = if ap != am {
        ap < am
    } else {
        lex_key(&vp) <= lex_key(&vm)
    };
    let (values, vectors) = if first_plus {
        ([lp, lm], [vp, vm])
    } else {
        ([lm, lp], [vm, vp])
    };
    Ok(UnitaryEigen {
        values,
        vectors,
        degenerate: false,
    })
}

fn lex_key(v: &Spinor) -> (f64, f64, f64, f64) {
    (v.down.re, v.down.im, v.up.re, v.up.im)
}

/// Hermitian `H` with `e^{−iH} = U`, eigenvalues in the principal branch
/// `(−π, π]`.
///
/// A degenerate `U = e^{iφ}·I` maps to `−φ·I`, except `U = −I`, which maps
/// to `π·σz`.
pub fn log_unitary(u: &Mat2) -> Result<Mat2> {
    check_unitary(u)?;
    let d = SpinDecomposition::of(u);
    let b = d.half_angle();
    let phi = d.g.arg();
    if 2.0 * b.sin() < DEGENERACY_THRESHOLD {
        let lambda = d.g * b.cos().signum();
        if (lambda + ONE).norm() < DEGENERACY_THRESHOLD {
            return Ok(pauli(PauliAxis::Z).scale_real(PI));
        }
        return Ok(Mat2::identity().scale_real(-lambda.arg()));
    }
    let h_plus = principal_energy(phi - b);
    let h_minus = principal_energy(phi + b);
    let n = d.unit_axis();
    let mean = 0.5 * (h_plus + h_minus);
    let half = 0.5 * (h_plus - h_minus);
    Ok(Mat2::from_pauli_coeffs(
        C64::new(mean, 0.0),
        [
            C64::new(half * n[0], 0.0),
            C64::new(half * n[1], 0.0),
            C64::new(half * n[2], 0.0),
        ],
    ))
}

/// Energy `h ∈ (−π, π]` with `e^{−ih} = e^{i·phase}`.
fn principal_energy(phase: f64) -> f64 {
    let h = -wrap_angle(phase);
    if h <= -PI {
        PI
    } else {
        h
    }
}

/// `e^{−iH}` for Hermitian `H`, via `H = a·I + b·n̂·σ`.
pub fn exp_hermitian(h: &Mat2) -> Result<Mat2> {
    check_hermitian(h)?;
    Ok(exp_minus_i(h))
}

/// Unchecked `e^{−iH}`; `H` is assumed Hermitian.
pub(crate) fn exp_minus_i(h: &Mat2) -> Mat2 {
    let (c0, c) = h.pauli_coeffs();
    let a = c0.re;
    let v = [c[0].re, c[1].re, c[2].re];
    let b = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let sinc = if b < 1e-8 { 1.0 - b * b / 6.0 } else { b.sin() / b };
    let k = -I * sinc;
    let m = Mat2::from_pauli_coeffs(
        C64::new(b.cos(), 0.0),
        [k * v[0], k * v[1], k * v[2]],
    );
    m.scale(C64::from_polar(1.0, -a))
}

/// Which side of `M` carries the dagger in a rotation conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DaggerSide {
    /// `R†·M·R`
    Left,
    /// `R·M·R†`
    Right,
}

/// `R = e^{−i·angle·σ_axis}`, exact.
pub fn rotation(axis: PauliAxis, angle: f64) -> Mat2 {
    Mat2::identity().scale_real(angle.cos()) + pauli(axis).scale(-I * angle.sin())
}

pub fn rotate_conjugate(m: &Mat2, axis: PauliAxis, angle: f64, side: DaggerSide) -> Mat2 {
    let r = rotation(axis, angle);
    match side {
        DaggerSide::Left => r.dagger() * *m * r,
        DaggerSide::Right => r * *m * r.dagger(),
    }
}
