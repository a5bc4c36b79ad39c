#pragma once

#include <vector>

#include "gaugeqed/hamiltonians.hpp"
#include "gaugeqed/spectrum.hpp"

namespace gaugeqed {

enum class RampShape { Linear, RaisedCosine };

// One coupling switch: lambda ramps monotonically to `target` (0 or 1) over
// [t, t + ramp].
struct SwitchEvent {
    double t = 0.0;
    double ramp = 1e-3;
    double target = 0.0;
};

// Switching function lambda(t) multiplying the coupling, with closed-form
// lambda and lambda_dot. lambda = 1 before an off switch per the static
// limit; the integral of lambda_dot over an off ramp is -1 exactly.
struct SwitchProtocol {
    double lambda0 = 1.0;
    std::vector<SwitchEvent> events;  // ordered in time, non-overlapping
    RampShape shape = RampShape::RaisedCosine;

    double lambda(double t) const;
    double lambda_dot(double t) const;
    double end_time() const;
    void validate() const;

    /// lambda: 1 -> 0 at t0.
    static SwitchProtocol switch_off(double t0, double ramp,
                                     RampShape shape = RampShape::RaisedCosine);
    /// lambda: 0 -> 1 at t_on, then 1 -> 0 at t_off.
    static SwitchProtocol on_off(double t_on, double t_off, double ramp,
                                 RampShape shape = RampShape::RaisedCosine);
};

// Which time-dependent Hamiltonian drives the evolution. DipoleWrong omits
// the -lambda_dot F term and reproduces the gauge-ambiguous predictions.
enum class DynamicsGauge { Coulomb, Dipole, DipoleWrong };

/// H(t) for the switched interaction:
///   Coulomb:     H_C with eta -> lambda(t) eta
///   Dipole:      H_free + lambda(t) V_D - lambda_dot(t) F,
///                F = -eta sigma_x (a + a^dag)
///   DipoleWrong: H_free + lambda(t) V_D
Matrix hamiltonian_at(double t, DynamicsGauge g, const RabiParams& p,
                      const SwitchProtocol& protocol, const HilbertSpec& spec);

struct PropagateOptions {
    double t_start = 0.0;
    double t_end = -1.0;        // < 0: protocol end + 2 pi / omega_c
    int samples = 241;
    double dt_cap = 0.05;       // dt * spectral_radius <= dt_cap
    int min_ramp_steps = 200;
    bool verify_dt = true;      // re-run ramps at dt/2 and compare
    double dt_check_tol = 1e-8;
    int max_dt_refinements = 3;
};

struct PropagationResult {
    std::vector<double> times;
    std::vector<Vector> states;       // normalized, one per sample
    std::vector<double> lambda;
    std::vector<double> photon_number;      // <a^dag a>
    std::vector<double> qubit_excitation;   // <sigma_+ sigma_->
    std::vector<double> norm_error;         // | ||psi|| - 1 |
    DynamicsGauge gauge = DynamicsGauge::Coulomb;
    RabiParams params;
    SwitchProtocol protocol;
    HilbertSpec spec;

    const Vector& final_state() const { return states.back(); }
};

/// Propagate through the protocol with per-step unitaries
/// exp(-i H(t + dt/2) dt) (midpoint rule) during ramps and exact
/// exponentials on static segments. Norm-preserving by construction;
/// throws ConvergenceError if halving dt keeps shifting the final state.
PropagationResult propagate(const Vector& initial, DynamicsGauge g, const RabiParams& p,
                            const SwitchProtocol& protocol, const HilbertSpec& spec,
                            const PropagateOptions& opts = {});

/// <Y- Y+>(t) with Y = i(a - a^dag), the positive/negative-frequency split
/// taken in the instantaneous Hamiltonian's eigenbasis (after a switch-off
/// this is the free Hamiltonian, where Y+ = i a).
std::vector<double> emission_signal(const PropagationResult& r);

/// Analytic T -> 0 limit of a switch: applies exp(-i F) = T^dag (off) or
/// exp(+i F) = T (on) in the dipole gauge; the Coulomb-gauge state is
/// unchanged by a sudden switch.
Vector sudden_switch_limit(const Vector& initial, DynamicsGauge g, const RabiParams& p,
                           const HilbertSpec& spec, bool off);

}  // namespace gaugeqed
