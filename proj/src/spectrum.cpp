#include "gaugeqed/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaugeqed {

std::string StateLabel::str() const {
    switch (kind) {
        case Kind::Ground: return "ground";
        case Kind::Minus: return std::to_string(n) + "-";
        case Kind::Plus: return std::to_string(n) + "+";
        case Kind::Unassigned: return "?";
    }
    return "?";
}

Spectrum diagonalize(const GaugeHamiltonian& h) {
    Eigensystem es = hermitian_eig(h.matrix);
    Spectrum s;
    s.energies = std::move(es.values);
    s.states = std::move(es.vectors);
    s.spec = h.spec;
    s.gauge = h.gauge;
    s.omega_c = h.omega_c;
    s.omega_0 = h.omega_0;
    s.eta = h.eta;
    s.theta = h.theta;
    return s;
}

namespace {

bool differences_agree(const Spectrum& a, const Spectrum& b, int n_levels,
                       const ConvergenceOptions& opts) {
    for (int j = 1; j < n_levels; ++j) {
        const double da = a.transition_energy(j);
        const double db = b.transition_energy(j);
        const double scale = std::max(std::abs(da), std::abs(db));
        if (std::abs(da - db) > std::max(opts.rel_tol * scale, opts.abs_floor)) return false;
    }
    return true;
}

}  // namespace

Spectrum diagonalize_converged(const HamiltonianBuilder& builder, double eta_hint,
                               const ConvergenceOptions& opts) {
    if (opts.n_levels < 2) throw ConfigError("diagonalize_converged: n_levels must be >= 2");
    int n = opts.initial_cutoff > 0 ? opts.initial_cutoff : default_cutoff(eta_hint);
    n = std::max(n, opts.n_levels);
    if (2 * n > opts.max_cutoff) {
        throw ConfigError("diagonalize_converged: max_cutoff leaves no room for doubling");
    }

    HilbertSpec spec{n, 0};
    Spectrum prev = diagonalize(builder(spec));
    double last_estimate = prev.transition_energy(1);
    while (2 * n <= opts.max_cutoff) {
        HilbertSpec bigger{2 * n, 0};
        Spectrum next = diagonalize(builder(bigger));
        if (differences_agree(prev, next, opts.n_levels, opts)) {
            next.converged_levels = opts.n_levels;
            return next;
        }
        last_estimate = prev.transition_energy(1);
        prev = std::move(next);
        n *= 2;
    }
    std::ostringstream msg;
    msg << "diagonalize_converged: not converged at n_fock cap " << opts.max_cutoff
        << "; last two E_1 - E_0 estimates " << last_estimate << " (n_fock " << n / 2 << ") and "
        << prev.transition_energy(1) << " (n_fock " << n << ")";
    throw ConvergenceError(msg.str());
}

Spectrum coulomb_spectrum(const RabiParams& p, const ConvergenceOptions& opts) {
    return diagonalize_converged(
        [&p](const HilbertSpec& s) { return build_coulomb(p, s); }, p.eta, opts);
}

Spectrum dipole_spectrum(const RabiParams& p, const ConvergenceOptions& opts) {
    return diagonalize_converged(
        [&p](const HilbertSpec& s) { return build_dipole(p, s); }, p.eta, opts);
}

Spectrum flux_spectrum(const CircuitParams& p, const ConvergenceOptions& opts) {
    return diagonalize_converged(
        [&p](const HilbertSpec& s) { return build_flux_gauge(p, s); }, p.eta, opts);
}

Spectrum charge_spectrum(const CircuitParams& p, const ConvergenceOptions& opts) {
    return diagonalize_converged(
        [&p](const HilbertSpec& s) { return build_charge_gauge(p, s); }, p.eta, opts);
}

Spectrum spectrum_of(Gauge g, const RabiParams& p, const ConvergenceOptions& opts) {
    switch (g) {
        case Gauge::Coulomb: return coulomb_spectrum(p, opts);
        case Gauge::Dipole: return dipole_spectrum(p, opts);
        case Gauge::Flux:
            return flux_spectrum(CircuitParams::symmetric(p.omega_0, p.eta, p.omega_c), opts);
        case Gauge::Charge:
            return charge_spectrum(CircuitParams::symmetric(p.omega_0, p.eta, p.omega_c), opts);
    }
    throw ConfigError("spectrum_of: unknown gauge");
}

namespace {

GaugeHamiltonian build_gauge_at(Gauge g, const RabiParams& base, double eta,
                                const HilbertSpec& spec, double theta = 0.0) {
    RabiParams p = base;
    p.eta = eta;
    switch (g) {
        case Gauge::Coulomb: return build_coulomb(p, spec);
        case Gauge::Dipole: return build_dipole(p, spec);
        case Gauge::Flux: {
            CircuitParams cp = CircuitParams::symmetric(p.omega_0, eta, p.omega_c);
            if (theta != 0.0) {
                cp = CircuitParams::from_bias(p.omega_0 * std::cos(theta),
                                              p.omega_0 * std::sin(theta), eta, p.omega_c);
            }
            return build_flux_gauge(cp, spec);
        }
        case Gauge::Charge:
            return build_charge_gauge(CircuitParams::symmetric(p.omega_0, eta, p.omega_c), spec);
    }
    throw ConfigError("unknown gauge");
}

// Labels at negligible coupling, where the excitation-manifold
// decomposition is exact: manifold m = round(<a^dag a + sigma_+ sigma_->);
// within a manifold the lower level is |m->.
std::vector<StateLabel> bare_labels(const Spectrum& s, const CanonicalOperators& ops,
                                    int n_levels) {
    const Matrix exc = ops.n + ops.sp * ops.sm;
    std::vector<StateLabel> labels(n_levels);
    std::vector<int> manifold(n_levels, -1);
    for (int j = 0; j < n_levels; ++j) {
        const double m = expectation(s.state(j), exc).real();
        const int mi = static_cast<int>(std::lround(m));
        if (std::abs(m - mi) > 0.1) continue;  // stays Unassigned
        manifold[j] = mi;
    }
    for (int j = 0; j < n_levels; ++j) {
        if (manifold[j] < 0) continue;
        if (manifold[j] == 0) {
            labels[j] = {StateLabel::Kind::Ground, 0};
            continue;
        }
        bool lower_seen = false;
        for (int k = 0; k < j; ++k) {
            if (manifold[k] == manifold[j]) lower_seen = true;
        }
        labels[j] = {lower_seen ? StateLabel::Kind::Plus : StateLabel::Kind::Minus, manifold[j]};
    }
    return labels;
}

// Degenerate bare doublets (eta = 0 at exact resonance) cannot be split
// into +/- without guessing.
void unassign_degenerate(const Spectrum& s, std::vector<StateLabel>& labels) {
    for (size_t j = 0; j < labels.size(); ++j) {
        if (labels[j].kind == StateLabel::Kind::Ground) continue;
        const int ji = static_cast<int>(j);
        const bool deg_above =
            ji + 1 < s.dim() && std::abs(s.transition_energy(ji + 1, ji)) < 1e-10;
        const bool deg_below = ji > 0 && std::abs(s.transition_energy(ji, ji - 1)) < 1e-10;
        if (deg_above || deg_below) labels[j].kind = StateLabel::Kind::Unassigned;
    }
}

class Continuation {
  public:
    Continuation(Gauge g, const RabiParams& base, const HilbertSpec& spec,
                 const LabelingOptions& opts)
        : gauge_(g), base_(base), spec_(spec), opts_(opts) {
        window_ = std::min(spec.dim(), opts.n_levels + 4);
    }

    Spectrum diag_at(double eta) const {
        return diagonalize(build_gauge_at(gauge_, base_, eta, spec_, opts_.theta));
    }

    std::vector<StateLabel> initial_labels(const Spectrum& s) const {
        const CanonicalOperators ops = build_space(spec_);
        return bare_labels(s, ops, window_);
    }

    // Carry labels across [prev -> next] by maximal-overlap matching,
    // bisecting the interval when any assignment is ambiguous. Levels that
    // stay ambiguous after max_refinements bisections become Unassigned.
    std::vector<StateLabel> step(const Spectrum& prev, const std::vector<StateLabel>& lp,
                                 const Spectrum& next, int depth) const {
        const Matrix overlaps =
            prev.states.leftCols(window_).adjoint() * next.states.leftCols(window_);
        std::vector<int> match(window_, -1);
        std::vector<int> claims(window_, 0);
        bool any_ambiguous = false;
        for (int j = 0; j < window_; ++j) {
            double best = -1.0, second = -1.0;
            int best_i = -1;
            for (int i = 0; i < window_; ++i) {
                const double o = std::abs(overlaps(i, j));
                if (o > best) {
                    second = best;
                    best = o;
                    best_i = i;
                } else if (o > second) {
                    second = o;
                }
            }
            if (best - second < opts_.ambiguity_gap) {
                any_ambiguous = true;
            } else {
                match[j] = best_i;
                ++claims[best_i];
            }
        }
        for (int j = 0; j < window_; ++j) {
            if (match[j] >= 0 && claims[match[j]] > 1) {
                any_ambiguous = true;  // two levels claim the same ancestor
                match[j] = -1;
            }
        }
        if (any_ambiguous && depth < opts_.max_refinements) {
            const Spectrum mid = diag_at(0.5 * (prev.eta + next.eta));
            const std::vector<StateLabel> lm = step(prev, lp, mid, depth + 1);
            return step(mid, lm, next, depth + 1);
        }
        std::vector<StateLabel> ln(window_);
        for (int j = 0; j < window_; ++j) {
            if (match[j] >= 0) ln[j] = lp[match[j]];
        }
        return ln;
    }

    int window() const { return window_; }

  private:
    Gauge gauge_;
    RabiParams base_;
    HilbertSpec spec_;
    LabelingOptions opts_;
    int window_;
};

std::vector<double> continuation_grid(double eta_start, double eta_step,
                                      const std::vector<double>& targets) {
    std::vector<double> grid;
    const double eta_max = *std::max_element(targets.begin(), targets.end());
    for (double e = eta_start; e < eta_max; e += eta_step) grid.push_back(e);
    grid.insert(grid.end(), targets.begin(), targets.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               grid.end());
    return grid;
}

std::vector<StateLabel> direct_labels(const Spectrum& s, int n_levels) {
    const CanonicalOperators ops = build_space(s.spec);
    std::vector<StateLabel> labels = bare_labels(s, ops, n_levels);
    unassign_degenerate(s, labels);
    return labels;
}

}  // namespace

Spectrum label_states(Spectrum spectrum, const LabelingOptions& opts) {
    const int n_levels = std::min(opts.n_levels, spectrum.dim());

    if (spectrum.eta <= opts.eta_start) {
        spectrum.labels = direct_labels(spectrum, n_levels);
        spectrum.labels.resize(n_levels);
        return spectrum;
    }

    const RabiParams base{spectrum.omega_c, spectrum.omega_0, spectrum.eta};
    LabelingOptions local = opts;
    if (local.theta == 0.0) local.theta = spectrum.theta;
    Continuation cont(spectrum.gauge, base, spectrum.spec, local);

    Spectrum prev = cont.diag_at(opts.eta_start);
    std::vector<StateLabel> labels = cont.initial_labels(prev);
    for (double eta : continuation_grid(opts.eta_start, opts.eta_step, {spectrum.eta})) {
        if (eta <= opts.eta_start) continue;
        Spectrum next = (std::abs(eta - spectrum.eta) < 1e-12) ? spectrum : cont.diag_at(eta);
        labels = cont.step(prev, labels, next, 0);
        prev = std::move(next);
    }
    labels.resize(n_levels);
    spectrum.labels = std::move(labels);
    return spectrum;
}

std::vector<Spectrum> labeled_sweep(Gauge g, const RabiParams& base,
                                    const std::vector<double>& etas,
                                    const LabelingOptions& opts) {
    if (etas.empty()) return {};
    std::vector<double> targets = etas;
    std::sort(targets.begin(), targets.end());
    const double eta_max = targets.back();
    const HilbertSpec spec{opts.cutoff > 0 ? opts.cutoff : default_cutoff(eta_max), 0};
    Continuation cont(g, base, spec, opts);
    const int n_levels = std::min(opts.n_levels, spec.dim());

    std::vector<Spectrum> out;
    auto emit = [&](Spectrum s, std::vector<StateLabel> l) {
        l.resize(n_levels);
        s.labels = std::move(l);
        out.push_back(std::move(s));
    };

    // Targets at or below the continuation start are labeled directly.
    size_t t = 0;
    while (t < targets.size() && targets[t] <= opts.eta_start) {
        Spectrum s = cont.diag_at(targets[t]);
        std::vector<StateLabel> l = direct_labels(s, n_levels);
        emit(std::move(s), std::move(l));
        ++t;
    }
    if (t == targets.size()) return out;

    const std::vector<double> rest(targets.begin() + static_cast<long>(t), targets.end());
    Spectrum prev = cont.diag_at(opts.eta_start);
    std::vector<StateLabel> labels = cont.initial_labels(prev);
    for (double eta : continuation_grid(opts.eta_start, opts.eta_step, rest)) {
        if (eta <= opts.eta_start) continue;
        Spectrum next = cont.diag_at(eta);
        labels = cont.step(prev, labels, next, 0);
        const bool is_target =
            std::any_of(rest.begin(), rest.end(),
                        [eta](double x) { return std::abs(x - eta) < 1e-12; });
        if (is_target) emit(next, labels);
        prev = std::move(next);
    }
    return out;
}

std::optional<int> find_label(const Spectrum& s, StateLabel want) {
    for (size_t j = 0; j < s.labels.size(); ++j) {
        if (s.labels[j] == want) return static_cast<int>(j);
    }
    return std::nullopt;
}

}  // namespace gaugeqed
