//! Effective Hamiltonians, Dirac forms and the triangular coefficient audit.

use std::f64::consts::PI;

use pauliwalk::algebra::exp_hermitian;
use pauliwalk::hamiltonian::{
    clifford_report, closed_form_hamiltonian_k, composite_hamiltonian, dirac_form,
    effective_hamiltonian_k, momentum_step_unitary, rotate_to_dirac, transcription_check,
    triangular_terms,
};
use pauliwalk::walk::Lattice;
use pauliwalk::PauliAxis;

fn main() -> pauliwalk::Result<()> {
    let (theta, k) = (PI / 12.0, 0.7);
    for basis in [PauliAxis::Z, PauliAxis::X, PauliAxis::Y] {
        let w = momentum_step_unitary(basis, theta, k);
        let h = effective_hamiltonian_k(basis, theta, k).h;
        let back = exp_hermitian(&h)?;
        let closed = closed_form_hamiltonian_k(basis, theta, k);
        println!(
            "{basis}: |exp(-iH) - W| = {:.2e}  |H - closed| = {:.2e}",
            back.dist(&w),
            h.dist(&closed)
        );
        let form = dirac_form(basis, theta);
        let rot = rotate_to_dirac(&form, theta)?;
        println!("   clifford all={}  alpha -> sigma_{basis}  mass {:+.4} sigma_{}", clifford_report(&form.alpha, &form.beta).all(), rot.mass, rot.partner);
    }

    let sq = composite_hamiltonian(Lattice::Square, theta)?;
    println!("square: beta_x + beta_z =\n{}", sq.beta_sum);

    for e in triangular_terms(theta).audit() {
        println!("{} alpha{} {}: {}", e.axis, e.alpha_index, e.derivative, e.report);
    }
    for m in transcription_check(theta) {
        println!("mismatch {:?}", m);
    }
    Ok(())
}
