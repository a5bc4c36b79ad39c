#include "gaugeqed/observables.hpp"

#include <cmath>

namespace gaugeqed {

namespace {

void require_levels(const Spectrum& s, int j, int k) {
    if (k < 0 || j >= s.dim() || j <= k) {
        throw PreconditionError("transition rate: need 0 <= k < j < dim");
    }
    if (s.converged_levels > 0 && j >= s.converged_levels) {
        throw PreconditionError("transition rate: level " + std::to_string(j) +
                                " is beyond the converged window");
    }
}

double rate(const Spectrum& s, const Matrix& op, int j, int k) {
    return std::norm(s.state(k).dot(op * s.state(j)));
}

Matrix field_momentum(const CanonicalOperators& ops) { return I * (ops.a - ops.a_dag); }

}  // namespace

Matrix positive_frequency_part(const Matrix& op, const Spectrum& s, double degeneracy_tol) {
    if (op.rows() != s.states.rows()) {
        throw PreconditionError("positive_frequency_part: operator/spectrum dimension mismatch");
    }
    const Matrix in_eigenbasis = s.states.adjoint() * op * s.states;
    Matrix plus = Matrix::Zero(op.rows(), op.cols());
    for (Eigen::Index k = 0; k < op.rows(); ++k) {
        for (Eigen::Index j = k + 1; j < op.cols(); ++j) {
            if (s.energies[j] - s.energies[k] > degeneracy_tol) plus(k, j) = in_eigenbasis(k, j);
        }
    }
    return s.states * plus * s.states.adjoint();
}

double photodetection_W(const Spectrum& coulomb, int j, int k) {
    if (coulomb.gauge != Gauge::Coulomb) {
        throw PreconditionError("photodetection_W: needs a Coulomb-gauge spectrum");
    }
    require_levels(coulomb, j, k);
    const CanonicalOperators ops = build_space(coulomb.spec);
    return rate(coulomb, field_momentum(ops), j, k);
}

double photodetection_W_dipole(const Spectrum& dipole, int j, int k) {
    if (dipole.gauge != Gauge::Dipole) {
        throw PreconditionError("photodetection_W_dipole: needs a dipole-gauge spectrum");
    }
    require_levels(dipole, j, k);
    const CanonicalOperators ops = build_space(dipole.spec);
    return rate(dipole, Matrix(field_momentum(ops) - 2.0 * dipole.eta * ops.sx), j, k);
}

double photodetection_Wprime(const Spectrum& dipole, int j, int k) {
    if (dipole.gauge != Gauge::Dipole) {
        throw PreconditionError("photodetection_Wprime: needs a dipole-gauge spectrum");
    }
    require_levels(dipole, j, k);
    const CanonicalOperators ops = build_space(dipole.spec);
    return rate(dipole, field_momentum(ops), j, k);
}

double sensor_rate_corrected(const Spectrum& dipole, int j, int l) {
    // The corrected sensor coupling i(a^dag - a) + 2 eta sigma_x gives, by
    // the golden rule, exactly the transformed-field matrix element.
    return photodetection_W_dipole(dipole, j, l);
}

double photodetection_W_total(const Spectrum& coulomb, int j) {
    if (coulomb.gauge != Gauge::Coulomb) {
        throw PreconditionError("photodetection_W_total: needs a Coulomb-gauge spectrum");
    }
    const CanonicalOperators ops = build_space(coulomb.spec);
    const Matrix p = field_momentum(ops);
    double total = 0.0;
    for (int k = 0; k < j; ++k) total += rate(coulomb, p, j, k);
    return total;
}

namespace {

Matrix transport_operator(const Spectrum& s, const Matrix& bare_op, Measurement m) {
    const bool cavity = s.gauge == Gauge::Coulomb || s.gauge == Gauge::Dipole;
    const bool circuit = s.gauge == Gauge::Flux || s.gauge == Gauge::Charge;
    const RabiParams p{s.omega_c, s.omega_0, s.eta};

    if (cavity) {
        if (m == Measurement::FluxBare || m == Measurement::ChargeBare) {
            throw PreconditionError("expectation_in_gauge: cavity spectrum, circuit measurement");
        }
        const bool want_dipole = m == Measurement::DipoleBare;
        if ((s.gauge == Gauge::Dipole) == want_dipole) return bare_op;
        const Matrix t = build_gauge_T(p, s.spec);
        // |psi_D> = T |psi_C>: <psi_C|T^dag O T|psi_C> = <psi_D|O|psi_D>
        if (s.gauge == Gauge::Coulomb) return t.adjoint() * bare_op * t;
        return t * bare_op * t.adjoint();
    }
    if (circuit) {
        if (m == Measurement::CoulombBare || m == Measurement::DipoleBare) {
            throw PreconditionError("expectation_in_gauge: circuit spectrum, cavity measurement");
        }
        if (s.theta != 0.0) {
            throw PreconditionError("expectation_in_gauge: gauge transport needs theta = 0");
        }
        const bool want_charge = m == Measurement::ChargeBare;
        if ((s.gauge == Gauge::Charge) == want_charge) return bare_op;
        const Matrix r = build_charge_R(CircuitParams::symmetric(s.omega_0, s.eta, s.omega_c),
                                        s.spec);
        // |psi_cg> = R^dag |psi_fg>: <psi_cg|O|psi_cg> = <psi_fg|R O R^dag|psi_fg>
        if (s.gauge == Gauge::Flux) return r * bare_op * r.adjoint();
        return r.adjoint() * bare_op * r;
    }
    throw PreconditionError("expectation_in_gauge: unknown gauge");
}

}  // namespace

double expectation_in_gauge(const Spectrum& s, int index, const Matrix& bare_op,
                            Measurement m) {
    if (index < 0 || index >= s.dim()) {
        throw PreconditionError("expectation_in_gauge: state index out of range");
    }
    return expectation(s.state(index), transport_operator(s, bare_op, m)).real();
}

double qubit_population(const Spectrum& s, int index, Measurement m) {
    const CanonicalOperators ops = build_space(s.spec);
    return expectation_in_gauge(s, index, Matrix(ops.sp * ops.sm), m);
}

double mean_photon_number(const Spectrum& s, int index, Measurement m) {
    const CanonicalOperators ops = build_space(s.spec);
    return expectation_in_gauge(s, index, ops.n, m);
}

double entanglement_entropy(const Vector& state, const HilbertSpec& spec) {
    if (std::abs(state.norm() - 1.0) > 1e-8) {
        throw PreconditionError("entanglement_entropy: state is not normalized");
    }
    if (state.size() != spec.dim()) {
        throw PreconditionError("entanglement_entropy: state/spec dimension mismatch");
    }
    const Matrix rho = state * state.adjoint();
    const Matrix rho_q = partial_trace_boson(rho);
    const Eigensystem es = hermitian_eig(rho_q);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        const double lam = es.values[i];
        if (lam > 1e-15) s -= lam * std::log2(lam);
    }
    return s;
}

std::vector<ObservableReport> ground_state_reports(const Spectrum& s) {
    const bool cavity = s.gauge == Gauge::Coulomb || s.gauge == Gauge::Dipole;
    const Measurement own = cavity ? (s.gauge == Gauge::Coulomb ? Measurement::CoulombBare
                                                                : Measurement::DipoleBare)
                                   : (s.gauge == Gauge::Flux ? Measurement::FluxBare
                                                             : Measurement::ChargeBare);
    const Measurement partner =
        cavity ? (s.gauge == Gauge::Coulomb ? Measurement::DipoleBare : Measurement::CoulombBare)
               : (s.gauge == Gauge::Flux ? Measurement::ChargeBare : Measurement::FluxBare);
    const Gauge partner_gauge =
        cavity ? (s.gauge == Gauge::Coulomb ? Gauge::Dipole : Gauge::Coulomb)
               : (s.gauge == Gauge::Flux ? Gauge::Charge : Gauge::Flux);

    std::vector<ObservableReport> out;
    out.push_back({"photon_number", s.gauge, s.eta, mean_photon_number(s, 0, own), {}});
    out.push_back(
        {"photon_number", partner_gauge, s.eta, mean_photon_number(s, 0, partner), {}});
    out.push_back({"qubit_population", s.gauge, s.eta, qubit_population(s, 0, own), {}});
    out.push_back(
        {"qubit_population", partner_gauge, s.eta, qubit_population(s, 0, partner), {}});
    out.push_back({"entropy", s.gauge, s.eta, entanglement_entropy(s.state(0), s.spec), {}});
    return out;
}

VoltageRates circuit_voltage_rates(const Spectrum& s, int j) {
    if (s.gauge != Gauge::Flux && s.gauge != Gauge::Charge) {
        throw PreconditionError("circuit_voltage_rates: needs a flux- or charge-gauge spectrum");
    }
    if (s.theta != 0.0) {
        throw PreconditionError("circuit_voltage_rates: theta = 0 only");
    }
    require_levels(s, j, 0);
    const CanonicalOperators ops = build_space(s.spec);
    const CircuitParams p = CircuitParams::symmetric(s.omega_0, s.eta, s.omega_c);

    // Inductor flux in units of Phi_zpf: the qubit contribution 2 eta sigma_x
    // appears in the flux gauge; in the charge gauge the inductor flux is the
    // canonical coordinate a + a^dag itself.
    Matrix phi_l;
    Matrix h;
    if (s.gauge == Gauge::Flux) {
        phi_l = ops.x + 2.0 * s.eta * ops.sx;
        h = build_flux_gauge(p, s.spec).matrix;
    } else {
        phi_l = ops.x;
        h = build_charge_gauge(p, s.spec).matrix;
    }
    const Matrix v_l = (phi_l * h - h * phi_l) / I;

    VoltageRates out;
    out.v_l = std::norm(s.state(j).dot(v_l * s.state(0))) / (s.omega_c * s.omega_c);
    out.v_c = std::norm(s.state(j).dot(Matrix(ops.a - ops.a_dag) * s.state(0)));
    return out;
}

}  // namespace gaugeqed
