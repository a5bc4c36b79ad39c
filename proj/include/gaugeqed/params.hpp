#pragma once

#include <cmath>
#include <string>

#include "gaugeqed/types.hpp"

namespace gaugeqed {

enum class Gauge { Coulomb, Dipole, Flux, Charge };

inline std::string to_string(Gauge g) {
    switch (g) {
        case Gauge::Coulomb: return "coulomb";
        case Gauge::Dipole: return "dipole";
        case Gauge::Flux: return "flux";
        case Gauge::Charge: return "charge";
    }
    return "?";
}

// Quantum Rabi parameters in hbar = 1 units with frequencies as ratios of
// omega_c. eta = g / omega_c is the normalized coupling.
struct RabiParams {
    double omega_c = 1.0;
    double omega_0 = 1.0;
    double eta = 0.0;

    double g() const { return eta * omega_c; }
    void validate() const {
        if (omega_c <= 0.0) throw ConfigError("RabiParams: omega_c must be > 0");
        if (omega_0 < 0.0) throw ConfigError("RabiParams: omega_0 must be >= 0");
        if (eta < 0.0) throw ConfigError("RabiParams: eta must be >= 0");
    }
};

// Flux-qubit / LC-oscillator parameters. The flux angle is
// theta = arcsin(epsilon / omega_0) with omega_0 = sqrt(delta_tunnel^2 + epsilon^2);
// the derived circuit constants (L_c I_p I_zpf = omega_c eta) are folded
// into eta.
struct CircuitParams {
    double omega_c = 1.0;
    double omega_0 = 1.0;
    double eta = 0.0;
    double theta = 0.0;
    double epsilon = 0.0;
    double delta_tunnel = 1.0;

    // Symmetry point (zero flux bias): theta = 0, delta_tunnel = omega_0.
    static CircuitParams symmetric(double omega_0, double eta, double omega_c = 1.0) {
        CircuitParams p;
        p.omega_c = omega_c;
        p.omega_0 = omega_0;
        p.eta = eta;
        p.theta = 0.0;
        p.epsilon = 0.0;
        p.delta_tunnel = omega_0;
        return p;
    }

    static CircuitParams from_bias(double delta_tunnel, double epsilon, double eta,
                                   double omega_c = 1.0) {
        CircuitParams p;
        p.omega_c = omega_c;
        p.delta_tunnel = delta_tunnel;
        p.epsilon = epsilon;
        p.eta = eta;
        p.omega_0 = std::sqrt(delta_tunnel * delta_tunnel + epsilon * epsilon);
        p.theta = std::asin(epsilon / p.omega_0);
        return p;
    }

    RabiParams rabi() const { return RabiParams{omega_c, omega_0, eta}; }

    void validate() const {
        rabi().validate();
        if (std::abs(epsilon) > omega_0) {
            throw ConfigError("CircuitParams: |epsilon| must be <= omega_0");
        }
        const double w2 = delta_tunnel * delta_tunnel + epsilon * epsilon;
        if (std::abs(w2 - omega_0 * omega_0) > 1e-10) {
            throw ConfigError("CircuitParams: omega_0^2 != delta_tunnel^2 + epsilon^2");
        }
    }
};

// Weakly coupled readout mode b. eta_b = g_b / omega_0.
struct TwoModeParams {
    double omega_b = 0.3;
    double eta_b = 0.02;
};

}  // namespace gaugeqed
