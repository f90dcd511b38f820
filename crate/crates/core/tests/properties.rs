//! Property tests for the algebra, engine and comparison invariants.

use std::f64::consts::PI;

use proptest::prelude::*;

use pauliwalk::algebra::{exp_hermitian, log_unitary, rotate_conjugate, DaggerSide};
use pauliwalk::analysis::{compare, Distribution, Metric};
use pauliwalk::hamiltonian::{dispersion, effective_hamiltonian_k, momentum_step_unitary};
use pauliwalk::walk::{make_program, Lattice, LatticeField, WalkProgram};
use pauliwalk::{Mat2, PauliAxis, Spinor, C64};

fn axis() -> impl Strategy<Value = PauliAxis> {
    prop_oneof![Just(PauliAxis::X), Just(PauliAxis::Y), Just(PauliAxis::Z)]
}

fn lattice() -> impl Strategy<Value = Lattice> {
    prop_oneof![
        axis().prop_map(|axis| Lattice::Line { axis }),
        Just(Lattice::Square),
        Just(Lattice::Cubic),
        Just(Lattice::Triangular),
        Just(Lattice::Kagome),
    ]
}

fn c64() -> impl Strategy<Value = C64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| C64::new(re, im))
}

fn spinor() -> impl Strategy<Value = Spinor> {
    (c64(), c64()).prop_map(|(a, b)| Spinor::new(a, b))
}

/// Random unitary `e^{iφ}·exp(−i(a·σ))` with `|a| < π`.
fn unitary() -> impl Strategy<Value = Mat2> {
    (-PI..PI, -1.8..1.8f64, -1.8..1.8f64, -1.8..1.8f64).prop_map(|(phi, x, y, z)| {
        let h = Mat2::from_pauli_coeffs(
            C64::new(0.0, 0.0),
            [C64::new(x, 0.0), C64::new(y, 0.0), C64::new(z, 0.0)],
        );
        exp_hermitian(&h).unwrap().scale(C64::from_polar(1.0, phi))
    })
}

fn program_for(lattice: Lattice, thetas: &[f64]) -> WalkProgram {
    make_program(lattice, &thetas[..lattice.axis_count()]).unwrap()
}

/// A legal start site for the lattice.
fn origin(lattice: Lattice) -> [i64; 3] {
    if lattice == Lattice::Kagome {
        [2, 0, 0]
    } else {
        [0, 0, 0]
    }
}

/// Field with a few random amplitudes on one sublattice near the origin.
fn seeded(program: &WalkProgram, steps: usize, amps: &[Spinor]) -> LatticeField {
    let o = origin(program.lattice);
    let mut f = LatticeField::for_walk(program, steps + 2, &o).unwrap();
    let offsets: [[i64; 3]; 3] = match program.lattice {
        // (6, 0) and (6, 4) are p-sites like (2, 0).
        Lattice::Kagome => [[0, 0, 0], [4, 0, 0], [4, 4, 0]],
        Lattice::Triangular => [[0, 0, 0], [2, 0, 0], [1, 1, 0]],
        _ => [[0, 0, 0], [1, 0, 0], [0, 0, 0]],
    };
    for (a, d) in amps.iter().zip(offsets) {
        let r = [o[0] + d[0], o[1] + d[1], o[2] + d[2]];
        let cur = f.get(&r);
        f.set(&r, cur + *a).unwrap();
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn norm_is_conserved(
        lattice in lattice(),
        thetas in prop::array::uniform3(-PI..PI),
        amps in prop::collection::vec(spinor(), 1..3),
        steps in 1usize..12,
    ) {
        let program = program_for(lattice, &thetas);
        let mut f = seeded(&program, steps, &amps);
        let before = f.norm_sqr();
        f.evolve(&program, steps).unwrap();
        prop_assert!((f.norm_sqr() - before).abs() <= 1e-12 * before.max(1.0));
    }

    #[test]
    fn evolution_is_linear(
        lattice in lattice(),
        thetas in prop::array::uniform3(-PI..PI),
        a in spinor(),
        b in spinor(),
        ca in c64(),
        cb in c64(),
        steps in 1usize..8,
    ) {
        let program = program_for(lattice, &thetas);
        let fa = seeded(&program, steps, &[a]);
        let fb = seeded(&program, steps, &[Spinor::zero(), b]);
        let mut mix = fa.linear_combination(ca, &fb, cb).unwrap();
        let (mut ea, mut eb) = (fa.clone(), fb.clone());
        ea.evolve(&program, steps).unwrap();
        eb.evolve(&program, steps).unwrap();
        mix.evolve(&program, steps).unwrap();
        let expect = ea.linear_combination(ca, &eb, cb).unwrap();
        prop_assert!(mix.max_abs_diff(&expect) < 1e-12);
    }

    #[test]
    fn amplitude_stays_in_the_light_cone(
        lattice in lattice(),
        thetas in prop::array::uniform3(-PI..PI),
        a in spinor(),
        steps in 1usize..10,
    ) {
        let program = program_for(lattice, &thetas);
        let o = origin(lattice);
        let mut f = LatticeField::for_walk(&program, steps, &o).unwrap();
        f.set(&o, a).unwrap();
        f.evolve(&program, steps).unwrap();
        let reach = program.reach();
        for (r, s) in f.nonzero_sites() {
            for ax in 0..3 {
                prop_assert!((r[ax] - o[ax]).abs() <= reach[ax] * steps as i64, "{r:?} {s:?}");
            }
        }
    }

    #[test]
    fn log_then_exp_round_trips(u in unitary()) {
        let h = log_unitary(&u).unwrap();
        prop_assert!(h.is_hermitian(1e-12));
        prop_assert!(exp_hermitian(&h).unwrap().max_abs_diff(&u) < 1e-12);
    }

    #[test]
    fn rotation_preserves_trace_and_det(
        m in (c64(), c64(), c64(), c64()).prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d)),
        ax in axis(),
        angle in -PI..PI,
        left in any::<bool>(),
    ) {
        let side = if left { DaggerSide::Left } else { DaggerSide::Right };
        let r = rotate_conjugate(&m, ax, angle, side);
        prop_assert!((r.trace() - m.trace()).norm() < 1e-13);
        prop_assert!((r.det() - m.det()).norm() < 1e-13);
    }

    #[test]
    fn effective_hamiltonian_reproduces_step_and_spectrum(
        basis in axis(),
        theta in -1.5..1.5f64,
        k in -PI..PI,
    ) {
        let w = momentum_step_unitary(basis, theta, k);
        let h = effective_hamiltonian_k(basis, theta, k).h;
        prop_assert!(exp_hermitian(&h).unwrap().dist(&w) < 1e-10);
        // Traceless, so the eigenvalues are ±sqrt(−det H).
        let omega = (-h.det().re).max(0.0).sqrt();
        prop_assert!((omega - dispersion(theta, k)).abs() < 1e-9);
    }

    #[test]
    fn compare_is_symmetric_and_zero_on_self(
        pa in prop::collection::vec(0.0..1.0f64, 1..12),
        pb in prop::collection::vec(0.0..1.0f64, 1..12),
    ) {
        let build = |ps: &[f64], shift: i64| {
            let mut d = Distribution::new(2, &["x", "z"]);
            for (i, &p) in ps.iter().enumerate() {
                d.add([i as i64 - shift, (i as i64 * 7) % 5, 0], p);
            }
            d
        };
        let (a, b) = (build(&pa, 0), build(&pb, 2));
        for m in [Metric::MaxAbs, Metric::TotalVariation] {
            prop_assert_eq!(compare(&a, &b, m), compare(&b, &a, m));
            prop_assert_eq!(compare(&a, &a, m), 0.0);
        }
    }
}
