#include "gaugeqed/readout.hpp"

#include <cmath>

namespace gaugeqed {

double chi_analytic(const ReadoutParams& p) {
    p.validate();
    return p.g_b * p.g_b / p.delta() + p.g_b * p.g_b / p.sigma();
}

namespace {

// (single-mode eigenvector) (x) |n_b> in the qubit-slow / a / b-fast layout.
Vector ladder_template(const Vector& usc_state, int n_b, const HilbertSpec& two_mode) {
    Vector t = Vector::Zero(two_mode.dim());
    const int nb = two_mode.n_fock_b;
    for (Eigen::Index i = 0; i < usc_state.size(); ++i) t[i * nb + n_b] = usc_state[i];
    return t;
}

int identify(const Spectrum& two_mode, const Vector& tmpl, double threshold) {
    int best = -1;
    double best_overlap = 0.0;
    for (int k = 0; k < two_mode.dim(); ++k) {
        const double o = std::norm(tmpl.dot(two_mode.state(k)));
        if (o > best_overlap) {
            best_overlap = o;
            best = k;
        }
    }
    if (best < 0 || best_overlap < threshold) {
        throw ExtractionError("chi_numeric: mode-b ladder not resolvable (best overlap " +
                              std::to_string(best_overlap) + ")");
    }
    return best;
}

}  // namespace

DispersiveShift chi_numeric(const RabiParams& params_a, const ReadoutParams& p,
                            const ChiNumericOptions& opts) {
    params_a.validate();
    p.validate();
    const int na = opts.cutoff_a > 0 ? opts.cutoff_a : default_cutoff(params_a.eta);
    const HilbertSpec single{na, 0};
    const HilbertSpec both{na, opts.cutoff_b};

    const Spectrum usc = diagonalize(build_coulomb(params_a, single));
    if (opts.state_index < 0 || opts.state_index >= usc.dim()) {
        throw PreconditionError("chi_numeric: state index out of range");
    }

    const TwoModeParams pb{p.omega_b, p.eta_b()};
    const Spectrum two = diagonalize(build_two_mode_coulomb(params_a, pb, both));

    const Vector j_state = usc.state(opts.state_index);
    const int k0 = identify(two, ladder_template(j_state, 0, both), opts.overlap_threshold);
    const int k1 = identify(two, ladder_template(j_state, 1, both), opts.overlap_threshold);
    if (k0 == k1) throw ExtractionError("chi_numeric: ladder states collapsed");

    DispersiveShift out;
    out.shift = (two.energies[k1] - two.energies[k0]) - p.omega_b;
    out.ratio = out.shift / chi_analytic(p);

    const Spectrum dipole = diagonalize(build_dipole(params_a, single));
    const CanonicalOperators ops = build_space(single);
    out.sigma_z_dipole = expectation(dipole.state(opts.state_index), ops.sz).real();
    return out;
}

}  // namespace gaugeqed
