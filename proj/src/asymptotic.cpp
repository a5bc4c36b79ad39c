#include "gaugeqed/asymptotic.hpp"

#include <cmath>

namespace gaugeqed {

namespace {

// Unnormalized truncated coherent state; the truncation defect is the
// weight lost beyond the cutoff.
Vector raw_coherent(Complex alpha, int n_fock) {
    Vector v(n_fock);
    Complex amp = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n < n_fock; ++n) {
        v[n] = amp;
        amp *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

Vector qubit_x_state(int sign) {  // |+-x> = (|g> +- |e>)/sqrt(2)
    Vector v(2);
    v << 1.0, static_cast<double>(sign);
    return v / std::sqrt(2.0);
}

Vector product(const Vector& qubit, const Vector& boson) {
    Vector v(qubit.size() * boson.size());
    for (Eigen::Index q = 0; q < qubit.size(); ++q)
        v.segment(q * boson.size(), boson.size()) = qubit[q] * boson;
    return v;
}

}  // namespace

LargeEtaStates large_eta_states(const RabiParams& p, const HilbertSpec& spec,
                                AsymptoticFlavor flavor) {
    p.validate();
    spec.validate();
    if (spec.two_mode()) throw ConfigError("large_eta_states: single-mode spaces only");

    LargeEtaStates out;
    if (flavor == AsymptoticFlavor::CavityCoulomb) {
        Vector vac = Vector::Zero(spec.n_fock);
        vac[0] = 1.0;
        Vector g(2), e(2);
        g << 1.0, 0.0;  // |-z>
        e << 0.0, 1.0;  // |+z>
        out.psi_minus = product(g, vac);
        out.psi_plus = product(e, vac);
        return out;
    }

    const Complex amp = flavor == AsymptoticFlavor::CavityDipole
                            ? Complex{0.0, -p.eta}   // |-i eta>
                            : Complex{-p.eta, 0.0};  // |-eta>
    const Vector c_minus = raw_coherent(amp, spec.n_fock);
    const Vector c_plus = raw_coherent(-amp, spec.n_fock);
    out.truncation_defect = std::abs(1.0 - c_minus.squaredNorm());
    if (out.truncation_defect > 1e-4) {
        throw TruncationError("large_eta_states: cutoff " + std::to_string(spec.n_fock) +
                              " cannot hold coherent amplitude " + std::to_string(p.eta));
    }

    // The (omega_0/2) sigma_z perturbation couples the two degenerate
    // branches through <-amp|+amp> <+x|sigma_z|-x> = -exp(-2 eta^2), so the
    // symmetric combination is the lower state; it continues the eta = 0
    // ground |g,0> (its Coulomb image is |0>|g>).
    const Vector branch_a = product(qubit_x_state(+1), c_minus);
    const Vector branch_b = product(qubit_x_state(-1), c_plus);
    out.psi_minus = branch_a + branch_b;
    out.psi_plus = branch_a - branch_b;
    out.psi_minus.normalize();
    out.psi_plus.normalize();
    return out;
}

JcDoublet jc_doublet(const RabiParams& p) {
    p.validate();
    const double delta = p.omega_0 - p.omega_c;
    const double split = std::sqrt(p.g() * p.g() + 0.25 * delta * delta);
    const double mid = 0.5 * (p.omega_c + p.omega_0);
    return {mid - split, mid + split};
}

}  // namespace gaugeqed
