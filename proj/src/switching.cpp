#include "gaugeqed/switching.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gaugeqed/observables.hpp"

namespace gaugeqed {

namespace {

double ramp_fraction(RampShape shape, double s) {
    if (shape == RampShape::Linear) return s;
    return 0.5 * (1.0 - std::cos(M_PI * s));
}

double ramp_fraction_dot(RampShape shape, double s, double ramp) {
    if (shape == RampShape::Linear) return 1.0 / ramp;
    return 0.5 * M_PI / ramp * std::sin(M_PI * s);
}

}  // namespace

double SwitchProtocol::lambda(double t) const {
    double value = lambda0;
    for (const SwitchEvent& e : events) {
        if (t <= e.t) return value;
        if (t < e.t + e.ramp) {
            const double s = (t - e.t) / e.ramp;
            return value + (e.target - value) * ramp_fraction(shape, s);
        }
        value = e.target;
    }
    return value;
}

double SwitchProtocol::lambda_dot(double t) const {
    double value = lambda0;
    for (const SwitchEvent& e : events) {
        if (t <= e.t) return 0.0;
        if (t < e.t + e.ramp) {
            const double s = (t - e.t) / e.ramp;
            return (e.target - value) * ramp_fraction_dot(shape, s, e.ramp);
        }
        value = e.target;
    }
    return 0.0;
}

double SwitchProtocol::end_time() const {
    if (events.empty()) return 0.0;
    return events.back().t + events.back().ramp;
}

void SwitchProtocol::validate() const {
    if (lambda0 < 0.0 || lambda0 > 1.0) throw ConfigError("SwitchProtocol: lambda0 not in [0,1]");
    double prev_end = -std::numeric_limits<double>::infinity();
    for (const SwitchEvent& e : events) {
        if (e.ramp <= 0.0) throw ConfigError("SwitchProtocol: ramp duration must be > 0");
        if (e.target < 0.0 || e.target > 1.0) throw ConfigError("SwitchProtocol: target not in [0,1]");
        if (e.t < prev_end) throw ConfigError("SwitchProtocol: overlapping ramps");
        prev_end = e.t + e.ramp;
    }
}

SwitchProtocol SwitchProtocol::switch_off(double t0, double ramp, RampShape shape) {
    SwitchProtocol p;
    p.lambda0 = 1.0;
    p.events = {{t0, ramp, 0.0}};
    p.shape = shape;
    return p;
}

SwitchProtocol SwitchProtocol::on_off(double t_on, double t_off, double ramp, RampShape shape) {
    SwitchProtocol p;
    p.lambda0 = 0.0;
    p.events = {{t_on, ramp, 1.0}, {t_off, ramp, 0.0}};
    p.shape = shape;
    return p;
}

namespace {

// Assembles H(lambda, lambda_dot) from cached pieces; the Coulomb-gauge
// trigonometric parts reuse one quadrature eigendecomposition.
class SwitchedHamiltonian {
  public:
    SwitchedHamiltonian(DynamicsGauge g, const RabiParams& p, const HilbertSpec& spec)
        : gauge_(g), p_(p), spec_(spec) {
        const CanonicalOperators ops = build_space(spec);
        h_free_ = p.omega_c * ops.n + 0.5 * p.omega_0 * ops.sz;
        v_dipole_ = p.eta * p.omega_c * (I * (ops.a_dag - ops.a)) * ops.sx;
        sx_x_ = ops.sx * ops.x;
        if (g == DynamicsGauge::Coulomb) {
            const Matrix a1 = boson_destroy(spec.n_fock);
            const Eigensystem es = hermitian_eig(Matrix(a1 + a1.adjoint()));
            x_vectors_ = es.vectors;
            x_values_ = es.values;
            n_lift_ = ops.n;
        }
    }

    Matrix at(double lambda, double lambda_dot) const {
        if (gauge_ == DynamicsGauge::Coulomb) {
            const int n = spec_.n_fock;
            Vector c(n), s(n);
            for (int i = 0; i < n; ++i) {
                c[i] = std::cos(2.0 * lambda * p_.eta * x_values_[i]);
                s[i] = std::sin(2.0 * lambda * p_.eta * x_values_[i]);
            }
            const Matrix cos_b = x_vectors_ * c.asDiagonal() * x_vectors_.adjoint();
            const Matrix sin_b = x_vectors_ * s.asDiagonal() * x_vectors_.adjoint();
            Matrix h = n_lift_ * p_.omega_c +
                       0.5 * p_.omega_0 * (kron(pauli_z(), cos_b) + kron(pauli_y(), sin_b));
            return 0.5 * (h + h.adjoint()).eval();
        }
        Matrix h = h_free_ + lambda * v_dipole_;
        if (gauge_ == DynamicsGauge::Dipole) {
            // - lambda_dot F with F = -eta sigma_x (a + a^dag)
            h += lambda_dot * p_.eta * sx_x_;
        }
        return h;
    }

    double ramp_norm_bound(double lambda_dot_max) const {
        // crude spectral-radius bound for step-size control
        const double xnorm = 2.0 * std::sqrt(static_cast<double>(spec_.n_fock));
        return p_.omega_c * spec_.n_fock + 0.5 * p_.omega_0 +
               p_.eta * p_.omega_c * xnorm + std::abs(lambda_dot_max) * p_.eta * xnorm;
    }

  private:
    DynamicsGauge gauge_;
    RabiParams p_;
    HilbertSpec spec_;
    Matrix h_free_, v_dipole_, sx_x_;
    Matrix x_vectors_, n_lift_;
    RealVector x_values_;
};

struct Segment {
    double t0, t1;
    bool is_ramp;
    double lambda;  // constant segments only
};

std::vector<Segment> partition(const SwitchProtocol& prot, double t_start, double t_end) {
    std::vector<Segment> segs;
    double t = t_start;
    for (const SwitchEvent& e : prot.events) {
        if (e.t + e.ramp <= t_start || e.t >= t_end) continue;
        const double r0 = std::max(e.t, t_start);
        const double r1 = std::min(e.t + e.ramp, t_end);
        if (r0 > t) segs.push_back({t, r0, false, prot.lambda(0.5 * (t + r0))});
        segs.push_back({r0, r1, true, 0.0});
        t = r1;
    }
    if (t < t_end) segs.push_back({t, t_end, false, prot.lambda(0.5 * (t + t_end))});
    return segs;
}

class Stepper {
  public:
    Stepper(const SwitchedHamiltonian& ham, const SwitchProtocol& prot, double dt_cap,
            int min_ramp_steps)
        : ham_(ham), prot_(prot), dt_cap_(dt_cap), min_ramp_steps_(min_ramp_steps) {}

    // Evolve in place across [t0, t1] inside a single segment.
    void advance(Vector& psi, const Segment& seg, double t0, double t1) {
        if (t1 <= t0) return;
        if (!seg.is_ramp) {
            const Eigensystem& es = static_eig(seg.lambda);
            Vector phases(es.values.size());
            for (Eigen::Index i = 0; i < es.values.size(); ++i) {
                phases[i] = std::exp(-I * es.values[i] * (t1 - t0));
            }
            psi = es.vectors * (phases.asDiagonal() * (es.vectors.adjoint() * psi));
            return;
        }
        const double ramp_len = seg.t1 - seg.t0;
        const double dot_max = peak_lambda_dot(seg);
        const double radius = ham_.ramp_norm_bound(dot_max);
        const double dt_bound = dt_cap_ / radius;
        const double dt_floor = ramp_len / static_cast<double>(min_ramp_steps_);
        const double dt_target = std::min(dt_bound, dt_floor) * dt_scale_;
        const int steps = std::max(1, static_cast<int>(std::ceil((t1 - t0) / dt_target)));
        const double dt = (t1 - t0) / steps;
        for (int k = 0; k < steps; ++k) {
            const double tm = t0 + (k + 0.5) * dt;
            const Matrix h = ham_.at(prot_.lambda(tm), prot_.lambda_dot(tm));
            psi = expi(Matrix(-dt * h)) * psi;
        }
    }

    void set_dt_scale(double s) { dt_scale_ = s; }

  private:
    double peak_lambda_dot(const Segment& seg) const {
        double peak = 0.0;
        for (int i = 0; i <= 32; ++i) {
            const double t = seg.t0 + (seg.t1 - seg.t0) * i / 32.0;
            peak = std::max(peak, std::abs(prot_.lambda_dot(t)));
        }
        return peak;
    }

    const Eigensystem& static_eig(double lambda) {
        auto it = cache_.find(lambda);
        if (it == cache_.end()) {
            it = cache_.emplace(lambda, hermitian_eig(ham_.at(lambda, 0.0))).first;
        }
        return it->second;
    }

    const SwitchedHamiltonian& ham_;
    const SwitchProtocol& prot_;
    double dt_cap_;
    int min_ramp_steps_;
    double dt_scale_ = 1.0;
    std::map<double, Eigensystem> cache_;
};

}  // namespace

Matrix hamiltonian_at(double t, DynamicsGauge g, const RabiParams& p,
                      const SwitchProtocol& protocol, const HilbertSpec& spec) {
    p.validate();
    protocol.validate();
    const SwitchedHamiltonian ham(g, p, spec);
    return ham.at(protocol.lambda(t), protocol.lambda_dot(t));
}

PropagationResult propagate(const Vector& initial, DynamicsGauge g, const RabiParams& p,
                            const SwitchProtocol& protocol, const HilbertSpec& spec,
                            const PropagateOptions& opts) {
    p.validate();
    protocol.validate();
    spec.validate();
    if (std::abs(initial.norm() - 1.0) > 1e-8) {
        throw PreconditionError("propagate: initial state is not normalized");
    }
    if (initial.size() != spec.dim()) {
        throw PreconditionError("propagate: state/spec dimension mismatch");
    }
    if (opts.samples < 2) throw ConfigError("propagate: need at least 2 samples");

    const double t_end =
        opts.t_end > opts.t_start ? opts.t_end : protocol.end_time() + 2.0 * M_PI / p.omega_c;
    const SwitchedHamiltonian ham(g, p, spec);
    const std::vector<Segment> segments = partition(protocol, opts.t_start, t_end);
    const CanonicalOperators ops = build_space(spec);
    const Matrix pop = ops.sp * ops.sm;

    auto run = [&](double dt_scale) {
        Stepper stepper(ham, protocol, opts.dt_cap, opts.min_ramp_steps);
        stepper.set_dt_scale(dt_scale);
        PropagationResult r;
        r.gauge = g;
        r.params = p;
        r.protocol = protocol;
        r.spec = spec;
        Vector psi = initial;
        double t = opts.t_start;
        size_t seg_i = 0;
        for (int s = 0; s < opts.samples; ++s) {
            const double ts = s == opts.samples - 1
                                  ? t_end
                                  : opts.t_start +
                                        (t_end - opts.t_start) * s / double(opts.samples - 1);
            while (seg_i < segments.size() && t < ts - 1e-15) {
                const Segment& seg = segments[seg_i];
                const double upto = std::min(ts, seg.t1);
                if (upto <= t) break;
                stepper.advance(psi, seg, t, upto);
                t = upto;
                if (t >= seg.t1 - 1e-15 && seg_i + 1 < segments.size()) ++seg_i;
            }
            r.times.push_back(ts);
            r.states.push_back(psi);
            r.lambda.push_back(protocol.lambda(ts));
            r.photon_number.push_back(expectation(psi, ops.n).real());
            r.qubit_excitation.push_back(expectation(psi, pop).real());
            r.norm_error.push_back(std::abs(psi.norm() - 1.0));
        }
        return r;
    };

    PropagationResult coarse = run(1.0);
    if (!opts.verify_dt) return coarse;
    double scale = 0.5;
    for (int attempt = 0; attempt < opts.max_dt_refinements; ++attempt, scale *= 0.5) {
        PropagationResult fine = run(scale);
        const double deficit = std::abs(1.0 - fidelity(coarse.final_state(), fine.final_state()));
        if (deficit < opts.dt_check_tol) return fine;
        coarse = std::move(fine);
    }
    throw ConvergenceError("propagate: final state keeps moving under dt halving");
}

std::vector<double> emission_signal(const PropagationResult& r) {
    const CanonicalOperators ops = build_space(r.spec);
    const Matrix y = I * (ops.a - ops.a_dag);
    std::vector<double> signal(r.times.size());
    for (size_t i = 0; i < r.times.size(); ++i) {
        const Matrix h = hamiltonian_at(r.times[i], r.gauge, r.params, r.protocol, r.spec);
        Spectrum inst;
        Eigensystem es = hermitian_eig(h);
        inst.energies = std::move(es.values);
        inst.states = std::move(es.vectors);
        inst.spec = r.spec;
        const Matrix y_plus = positive_frequency_part(y, inst);
        signal[i] = (y_plus * r.states[i]).squaredNorm();
    }
    return signal;
}

Vector sudden_switch_limit(const Vector& initial, DynamicsGauge g, const RabiParams& p,
                           const HilbertSpec& spec, bool off) {
    p.validate();
    if (g != DynamicsGauge::Dipole) return initial;  // sudden switches leave the state unchanged
    const CanonicalOperators ops = build_space(spec);
    const Matrix f = -p.eta * ops.sx * ops.x;  // Hermitian
    // off: exp(i F int lambda_dot) with the integral = -1, i.e. T^dag
    return expi(Matrix(off ? -f : f)) * initial;
}

}  // namespace gaugeqed
