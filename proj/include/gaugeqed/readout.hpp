#pragma once

#include "gaugeqed/spectrum.hpp"

namespace gaugeqed {

// Dispersive readout of a (possibly ultrastrongly coupled) qubit through a
// weakly coupled mode b.
struct ReadoutParams {
    double omega_b = 0.3;
    double g_b = 0.02;     // readout coupling, g_b = omega_0 * eta_b
    double omega_0 = 1.0;

    double delta() const { return omega_0 - omega_b; }   // Delta = omega_0 - omega_b
    double sigma() const { return omega_0 + omega_b; }   // Sigma = omega_0 + omega_b
    double eta_b() const { return g_b / omega_0; }

    void validate() const {
        if (omega_b <= 0.0) throw ConfigError("ReadoutParams: omega_b must be > 0");
        if (delta() == 0.0) throw ConfigError("ReadoutParams: qubit-readout resonance (Delta = 0)");
        if (std::abs(g_b / delta()) >= 0.1) {
            throw ConfigError("ReadoutParams: |g_b/Delta| >= 0.1, outside dispersive validity");
        }
    }
};

/// chi = g_b^2 / Delta + g_b^2 / Sigma.
double chi_analytic(const ReadoutParams& p);

struct DispersiveShift {
    double shift = 0.0;          // [E(j, n_b=1) - E(j, n_b=0)] - omega_b
    double ratio = 0.0;          // shift / chi_analytic
    double sigma_z_dipole = 0.0; // <j_D| sigma_z |j_D> of the USC eigenstate
};

struct ChiNumericOptions {
    int state_index = 0;      // USC eigenstate whose conditional shift is extracted
    int cutoff_a = 0;         // 0 = default_cutoff(eta_a)
    int cutoff_b = 4;
    double overlap_threshold = 0.8;  // mode-b ladder identification
};

/// Extract the qubit-state-conditioned pull of mode b from the exact
/// two-mode spectrum. Eigenstates of the two-mode Hamiltonian are matched
/// to (USC eigenstate) (x) |n_b> products; below overlap_threshold the
/// dispersive picture has broken down and ExtractionError is thrown.
DispersiveShift chi_numeric(const RabiParams& params_a, const ReadoutParams& p,
                            const ChiNumericOptions& opts = {});

}  // namespace gaugeqed
