#include "gaugeqed/hamiltonians.hpp"

#include <cmath>

namespace gaugeqed {

namespace {

// Guard against the ~1e-16 asymmetry left by spectral-calculus products.
Matrix hermitize(Matrix m) {
    m = 0.5 * (m + m.adjoint()).eval();
    return m;
}

// cos and sin of 2 eta (a + a^dag) on the bare boson space.
struct QuadratureTrig {
    Matrix cos_x, sin_x;
};

QuadratureTrig quadrature_trig(double eta, int n_fock) {
    const Matrix a = boson_destroy(n_fock);
    const Matrix x = a + a.adjoint();
    const Eigensystem es = hermitian_eig(x);
    Vector c(n_fock), s(n_fock);
    for (int i = 0; i < n_fock; ++i) {
        c[i] = std::cos(2.0 * eta * es.values[i]);
        s[i] = std::sin(2.0 * eta * es.values[i]);
    }
    return {Matrix(es.vectors * c.asDiagonal() * es.vectors.adjoint()),
            Matrix(es.vectors * s.asDiagonal() * es.vectors.adjoint())};
}

GaugeHamiltonian tag(Matrix m, Gauge g, const HilbertSpec& spec, double omega_c,
                     double omega_0, double eta, double theta = 0.0, double eta_b = 0.0,
                     double omega_b = 0.0) {
    GaugeHamiltonian h;
    h.matrix = hermitize(std::move(m));
    h.gauge = g;
    h.spec = spec;
    h.omega_c = omega_c;
    h.omega_0 = omega_0;
    h.eta = eta;
    h.theta = theta;
    h.eta_b = eta_b;
    h.omega_b = omega_b;
    return h;
}

}  // namespace

GaugeHamiltonian build_coulomb(const RabiParams& p, const HilbertSpec& spec) {
    p.validate();
    spec.validate();
    if (spec.two_mode()) throw ConfigError("build_coulomb: single-mode spaces only");
    const CanonicalOperators ops = build_space(spec);
    const QuadratureTrig t = quadrature_trig(p.eta, spec.n_fock);
    Matrix m = p.omega_c * ops.n +
               0.5 * p.omega_0 *
                   (kron(pauli_z(), t.cos_x) + kron(pauli_y(), t.sin_x));
    return tag(std::move(m), Gauge::Coulomb, spec, p.omega_c, p.omega_0, p.eta);
}

GaugeHamiltonian build_dipole(const RabiParams& p, const HilbertSpec& spec) {
    p.validate();
    spec.validate();
    if (spec.two_mode()) throw ConfigError("build_dipole: single-mode spaces only");
    const CanonicalOperators ops = build_space(spec);
    Matrix m = p.omega_c * ops.n + 0.5 * p.omega_0 * ops.sz +
               p.eta * p.omega_c * (I * (ops.a_dag - ops.a)) * ops.sx;
    return tag(std::move(m), Gauge::Dipole, spec, p.omega_c, p.omega_0, p.eta);
}

Matrix build_gauge_T(const RabiParams& p, const HilbertSpec& spec) {
    p.validate();
    spec.validate();
    const CanonicalOperators ops = build_space(spec);
    // F = -eta sigma_x (a + a^dag) is Hermitian; T = exp(i F).
    return expi(-p.eta * ops.sx * ops.x);
}

GaugeHamiltonian build_flux_gauge(const CircuitParams& p, const HilbertSpec& spec) {
    p.validate();
    spec.validate();
    if (spec.two_mode()) throw ConfigError("build_flux_gauge: single-mode spaces only");
    const CanonicalOperators ops = build_space(spec);
    Matrix m = 0.5 * p.omega_0 * ops.sz + p.omega_c * ops.n +
               p.omega_c * p.eta * ops.x *
                   (std::cos(p.theta) * ops.sx - std::sin(p.theta) * ops.sz);
    return tag(std::move(m), Gauge::Flux, spec, p.omega_c, p.omega_0, p.eta, p.theta);
}

Matrix build_charge_R(const CircuitParams& p, const HilbertSpec& spec) {
    p.validate();
    spec.validate();
    const CanonicalOperators ops = build_space(spec);
    // eta sigma_x (a - a^dag) is anti-Hermitian; exponentiate as exp(i K)
    // with K = -i eta sigma_x (a - a^dag).
    return expi(-I * p.eta * ops.sx * (ops.a - ops.a_dag));
}

GaugeHamiltonian build_charge_gauge(const CircuitParams& p, const HilbertSpec& spec) {
    p.validate();
    spec.validate();
    if (p.theta != 0.0) {
        throw ConfigError("build_charge_gauge: only the symmetry point theta = 0 is supported");
    }
    const CanonicalOperators ops = build_space(spec);
    const Matrix r = build_charge_R(p, spec);
    Matrix m = p.omega_c * ops.n + r.adjoint() * (0.5 * p.omega_0 * ops.sz) * r;
    return tag(std::move(m), Gauge::Charge, spec, p.omega_c, p.omega_0, p.eta);
}

GaugeHamiltonian build_mutual_inductance_charge(const CircuitParams& p,
                                                const HilbertSpec& spec) {
    p.validate();
    spec.validate();
    if (p.theta != 0.0) {
        throw ConfigError(
            "build_mutual_inductance_charge: only the symmetry point theta = 0 is supported");
    }
    const Matrix r = build_charge_R(p, spec);  // R_m = R^dag
    const GaugeHamiltonian fg = build_flux_gauge(p, spec);
    Matrix m = r.adjoint() * fg.matrix * r;
    return tag(std::move(m), Gauge::Charge, spec, p.omega_c, p.omega_0, p.eta);
}

GaugeHamiltonian build_two_mode_coulomb(const RabiParams& pa, const TwoModeParams& pb,
                                        const HilbertSpec& spec) {
    pa.validate();
    spec.validate();
    if (!spec.two_mode()) throw ConfigError("build_two_mode_coulomb: needs a two-mode spec");
    const CanonicalOperators ops = build_space(spec);
    const QuadratureTrig t = quadrature_trig(pa.eta, spec.n_fock);
    const Matrix idb = Matrix::Identity(spec.n_fock_b, spec.n_fock_b);
    const Matrix cos_a = kron(t.cos_x, idb);
    const Matrix sin_a = kron(t.sin_x, idb);
    Matrix m = pa.omega_c * ops.n + pb.omega_b * ops.nb +
               0.5 * pa.omega_0 * (kron(pauli_z(), cos_a) + kron(pauli_y(), sin_a)) +
               pa.omega_0 * pb.eta_b * ops.xb *
                   (kron(pauli_y(), cos_a) - kron(pauli_z(), sin_a));
    return tag(std::move(m), Gauge::Coulomb, spec, pa.omega_c, pa.omega_0, pa.eta, 0.0,
               pb.eta_b, pb.omega_b);
}

GaugeHamiltonian build_two_mode_coulomb_full(const RabiParams& pa, const TwoModeParams& pb,
                                             const HilbertSpec& spec) {
    pa.validate();
    spec.validate();
    if (!spec.two_mode()) {
        throw ConfigError("build_two_mode_coulomb_full: needs a two-mode spec");
    }
    const CanonicalOperators ops = build_space(spec);
    const Matrix ida = Matrix::Identity(spec.n_fock, spec.n_fock);
    const Matrix idb = Matrix::Identity(spec.n_fock_b, spec.n_fock_b);
    const Matrix xa = boson_destroy(spec.n_fock) + boson_destroy(spec.n_fock).adjoint();
    const Matrix xb = boson_destroy(spec.n_fock_b) + boson_destroy(spec.n_fock_b).adjoint();
    const Matrix arg = 2.0 * pa.eta * kron(xa, idb) + 2.0 * pb.eta_b * kron(ida, xb);
    const Eigensystem es = hermitian_eig(arg);
    Vector c(es.values.size()), s(es.values.size());
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        c[i] = std::cos(es.values[i]);
        s[i] = std::sin(es.values[i]);
    }
    const Matrix cos_ab = es.vectors * c.asDiagonal() * es.vectors.adjoint();
    const Matrix sin_ab = es.vectors * s.asDiagonal() * es.vectors.adjoint();
    Matrix m = pa.omega_c * ops.n + pb.omega_b * ops.nb +
               0.5 * pa.omega_0 * (kron(pauli_z(), cos_ab) + kron(pauli_y(), sin_ab));
    return tag(std::move(m), Gauge::Coulomb, spec, pa.omega_c, pa.omega_0, pa.eta, 0.0,
               pb.eta_b, pb.omega_b);
}

Matrix parity_operator(const HilbertSpec& spec) {
    spec.validate();
    Vector phase(spec.boson_dim());
    if (spec.two_mode()) {
        for (int na = 0; na < spec.n_fock; ++na)
            for (int nb = 0; nb < spec.n_fock_b; ++nb)
                phase[na * spec.n_fock_b + nb] = ((na + nb) % 2 == 0) ? 1.0 : -1.0;
    } else {
        for (int n = 0; n < spec.n_fock; ++n) phase[n] = (n % 2 == 0) ? 1.0 : -1.0;
    }
    return kron(pauli_z(), Matrix(phase.asDiagonal()));
}

}  // namespace gaugeqed
