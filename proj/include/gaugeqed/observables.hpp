#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaugeqed/spectrum.hpp"

namespace gaugeqed {

// A named expectation value or transition rate with gauge provenance.
struct ObservableReport {
    std::string name;
    Gauge gauge = Gauge::Coulomb;
    double eta = 0.0;
    double value = 0.0;
    std::optional<std::pair<int, int>> transition;  // (j, k) level indices
};

/// Lowering component of O in the dressed eigenbasis:
///   O+ = sum_{E_k < E_j} <k|O|j> |k><j|,
/// so O = O+ + O- + diagonal part with O- = (O+)^dag. Transitions with
/// |E_j - E_k| <= degeneracy_tol count as diagonal.
Matrix positive_frequency_part(const Matrix& op, const Spectrum& s,
                               double degeneracy_tol = 1e-9);

/// Coulomb-gauge photodetection rate W_{j,k} = |<k_C| i(a - a^dag) |j_C>|^2.
/// Requires j > k and both levels converged.
double photodetection_W(const Spectrum& coulomb, int j, int k);

/// Same physical rate evaluated in the dipole gauge with the properly
/// transformed field operator: |<k_D| i(a - a^dag) - 2 eta sigma_x |j_D>|^2.
double photodetection_W_dipole(const Spectrum& dipole, int j, int k);

/// The usual-but-wrong procedure: dipole-gauge states with the untransformed
/// field operator, W'_{j,k} = |<k_D| i(a - a^dag) |j_D>|^2. First-class
/// because reproducing the unphysical comparison curves is a deliverable.
double photodetection_Wprime(const Spectrum& dipole, int j, int k);

/// Fermi-golden-rule excitation rate of a weakly coupled two-level sensor,
/// with the field-induced qubit-sensor term kept:
/// |<l_D| P - 2 eta sigma_x |j_D>|^2. Identical to photodetection_W_dipole;
/// kept as the sensor-route derivation of the same number.
double sensor_rate_corrected(const Spectrum& dipole, int j, int l);

/// Sum of W_{j,k} over all k below j (broadband detector).
double photodetection_W_total(const Spectrum& coulomb, int j);

// Gauge in which a bare-operator expectation value is defined. A dispersive
// readout measures the dipole-gauge qubit population; the photon flux
// released by a sudden switch-off measures Coulomb-gauge (or flux-gauge,
// for circuits) occupations.
enum class Measurement { CoulombBare, DipoleBare, FluxBare, ChargeBare };

/// <sigma_+ sigma_-> of eigenstate `index`, measured in the requested gauge.
/// The spectrum may be in either gauge of the pair; the operator is
/// conjugated with T (cavity) or R (circuit) as needed.
double qubit_population(const Spectrum& s, int index, Measurement m);

/// <a^dag a> of eigenstate `index`, measured in the requested gauge.
double mean_photon_number(const Spectrum& s, int index, Measurement m);

/// Gauge-transported expectation <psi_M| O |psi_M> computed from a spectrum
/// in any compatible gauge.
double expectation_in_gauge(const Spectrum& s, int index, const Matrix& bare_op,
                            Measurement m);

/// Von Neumann entropy (base 2) of the qubit's reduced density matrix;
/// 0 for product states, 1 at maximal qubit-oscillator entanglement.
double entanglement_entropy(const Vector& state, const HilbertSpec& spec);

struct VoltageRates {
    double v_l = 0.0;  // |<j| V_L |0>|^2 / omega_c^2, V_L = [Phi_L, H]/i
    double v_c = 0.0;  // |<j| a - a^dag |0>|^2
};

/// Emission rates into a line coupled to the inductor (V_L) vs the
/// capacitor (V_C) of the LC oscillator, for the transition j -> ground.
/// V_L is defined through the Heisenberg velocity of the inductor flux, so
/// its matrix elements are gauge invariant; accepts a flux- or charge-gauge
/// spectrum at theta = 0.
VoltageRates circuit_voltage_rates(const Spectrum& s, int j);

/// Ground-state summary with gauge provenance: photon number and qubit
/// population in both gauges of the spectrum's pair, plus the entropy of
/// the given gauge's ground state.
std::vector<ObservableReport> ground_state_reports(const Spectrum& s);

}  // namespace gaugeqed
