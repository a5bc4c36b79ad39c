#pragma once

#include "gaugeqed/hilbert.hpp"
#include "gaugeqed/params.hpp"

namespace gaugeqed {

// A Hermitian operator matrix tagged with its gauge and parameter set.
struct GaugeHamiltonian {
    Matrix matrix;
    Gauge gauge = Gauge::Coulomb;
    HilbertSpec spec;
    double omega_c = 1.0;
    double omega_0 = 1.0;
    double eta = 0.0;
    double theta = 0.0;
    double eta_b = 0.0;    // two-mode builds only
    double omega_b = 0.0;
};

// Every Hamiltonian below is built in hbar = 1 units. Operator functions
// (cos, sin, cosh-type) are evaluated by spectral calculus on their
// Hermitian arguments, never by series, so they are exact at truncation
// level for any coupling strength.

/// H_C = omega_c a^dag a
///     + (omega_0/2) { sigma_z cos[2 eta (a + a^dag)] + sigma_y sin[2 eta (a + a^dag)] }
GaugeHamiltonian build_coulomb(const RabiParams& p, const HilbertSpec& spec);

/// H_D = omega_c a^dag a + (omega_0/2) sigma_z + i eta omega_c (a^dag - a) sigma_x
GaugeHamiltonian build_dipole(const RabiParams& p, const HilbertSpec& spec);

/// T = exp(i F) with F = -eta sigma_x (a + a^dag); H_D = T H_C T^dag and
/// T a T^dag = a + i eta sigma_x.
Matrix build_gauge_T(const RabiParams& p, const HilbertSpec& spec);

/// H_fg = (omega_0/2) sigma_z + omega_c a^dag a
///      + omega_c eta (a + a^dag)(cos(theta) sigma_x - sin(theta) sigma_z)
GaugeHamiltonian build_flux_gauge(const CircuitParams& p, const HilbertSpec& spec);

/// R = exp[eta sigma_x (a - a^dag)], the generalized minimal-coupling
/// replacement in the reduced two-level space.
Matrix build_charge_R(const CircuitParams& p, const HilbertSpec& spec);

/// H_cg = omega_c a^dag a + R^dag [(omega_0/2) sigma_z] R, equal to
/// omega_c a^dag a + (omega_0/2){ sigma_z cosh[2 eta (a - a^dag)]
///                               + i sigma_y sinh[2 eta (a - a^dag)] }.
/// Built by unitary conjugation, so level spacings match the flux gauge
/// exactly once the cutoff has converged (absolute energies carry a
/// constant omega_c eta^2 offset relative to the flux-gauge form).
/// Supports theta = 0 only.
GaugeHamiltonian build_charge_gauge(const CircuitParams& p, const HilbertSpec& spec);

/// Momentum-momentum coupled charge gauge for the mutual-inductance
/// architecture: H = R_m H_fg R_m^dag with R_m = exp[eta sigma_x (a^dag - a)].
/// Exactly isospectral to the flux gauge by construction.
GaugeHamiltonian build_mutual_inductance_charge(const CircuitParams& p, const HilbertSpec& spec);

/// Two-mode Coulomb Hamiltonian with the readout mode kept to linear
/// order (the USC mode a is treated exactly):
///   H = omega_a a^dag a + omega_b b^dag b
///     + (omega_0/2) [sigma_z cos(2 eta_a x_a) + sigma_y sin(2 eta_a x_a)]
///     + omega_0 eta_b x_b [sigma_y cos(2 eta_a x_a) - sigma_z sin(2 eta_a x_a)]
/// Requires spec.two_mode(). This is the model whose mode-b frequency
/// pull equals the dispersive shift chi = g_b^2/Delta + g_b^2/Sigma.
GaugeHamiltonian build_two_mode_coulomb(const RabiParams& pa, const TwoModeParams& pb,
                                        const HilbertSpec& spec);

/// Full trigonometric two-mode form, cos[2 eta_a x_a + 2 eta_b x_b] etc.
/// Kept for cross-checks against the linearized build at small eta_b.
GaugeHamiltonian build_two_mode_coulomb_full(const RabiParams& pa, const TwoModeParams& pb,
                                             const HilbertSpec& spec);

/// Parity operator sigma_z exp(i pi a^dag a); commutes with every
/// theta = 0 Hamiltonian above.
Matrix parity_operator(const HilbertSpec& spec);

}  // namespace gaugeqed
