#include "gaugeqed/selftest.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "gaugeqed/asymptotic.hpp"
#include "gaugeqed/observables.hpp"
#include "gaugeqed/switching.hpp"

namespace gaugeqed {

namespace {

Matrix random_hermitian(int dim, std::mt19937& rng) {
    std::normal_distribution<double> dist;
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex{dist(rng), dist(rng)};
    return 0.5 * (a + a.adjoint()).eval();
}

Matrix random_density(int dim, std::mt19937& rng) {
    std::normal_distribution<double> dist;
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex{dist(rng), dist(rng)};
    Matrix rho = a * a.adjoint();
    rho /= rho.trace();
    return rho;
}

struct Runner {
    std::ostream& out;
    bool all_ok = true;

    void check(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        out << (ok ? "[PASS] " : "[FAIL] ") << name << note << "\n";
        all_ok = all_ok && ok;
    }
};

}  // namespace

bool run_selftest(std::ostream& out) {
    Runner r{out};
    std::mt19937 rng(0x5eedu);

    r.check("eigensolver round-trip, random Hermitian dims 8..256", [&] {
        for (int dim : {8, 32, 128, 256}) {
            const Matrix m = random_hermitian(dim, rng);
            const Eigensystem es = hermitian_eig(m);
            const Matrix rebuilt = es.vectors * es.values.asDiagonal() * es.vectors.adjoint();
            if (max_abs(rebuilt - m) >= 1e-10 * dim) return false;
            for (int j = 1; j < dim; ++j) {
                if (es.values[j] < es.values[j - 1]) return false;
            }
        }
        return true;
    });

    r.check("phase fixing is idempotent bit-for-bit", [&] {
        const Matrix m = random_hermitian(24, rng);
        Eigensystem es = hermitian_eig(m);
        Matrix again = es.vectors;
        fix_phases(again);
        return again == es.vectors;
    });

    r.check("spectral calculus: cos^2 + sin^2 = 1 on 2 eta x, eta = 0.8, cutoff 60", [&] {
        const Matrix a = boson_destroy(60);
        const Matrix arg = 1.6 * (a + a.adjoint());
        const Matrix c = matrix_function(arg, [](double v) { return std::cos(v); });
        const Matrix s = matrix_function(arg, [](double v) { return std::sin(v); });
        Matrix one = c * c + s * s;
        one -= Matrix::Identity(60, 60);
        return max_abs(one) < 1e-10;
    });

    r.check("kron mixed-product property on random factors", [&] {
        const Matrix a = random_hermitian(2, rng), b = random_hermitian(3, rng);
        const Matrix c = random_hermitian(2, rng), d = random_hermitian(3, rng);
        return max_abs(kron(a, b) * kron(c, d) - kron(Matrix(a * c), Matrix(b * d))) < 1e-12;
    });

    r.check("partial trace: unit trace, spectrum within [0,1]", [&] {
        for (int trial = 0; trial < 4; ++trial) {
            const Matrix rho = random_density(2 * 12, rng);
            const Matrix rq = partial_trace_boson(rho);
            if (std::abs(rq.trace().real() - 1.0) > 1e-10) return false;
            const Eigensystem es = hermitian_eig(rq);
            if (es.values.minCoeff() < -1e-10 || es.values.maxCoeff() > 1.0 + 1e-10) return false;
        }
        return true;
    });

    r.check("canonical operators: commutators and cross-subsystem lifts", [&] {
        const CanonicalOperators ops = build_space({24, 0});
        if (max_abs(ops.sx * ops.sy - ops.sy * ops.sx - 2.0 * I * ops.sz) > 1e-14) return false;
        if (max_abs(ops.sx * ops.n - ops.n * ops.sx) > 1e-14) return false;
        Matrix comm = ops.a * ops.a_dag - ops.a_dag * ops.a;
        comm -= ops.id;
        return max_abs(comm.topLeftCorner(23, 23)) < 1e-12 &&
               max_abs(comm.block(24, 24, 23, 23)) < 1e-12;
    });

    r.check("parity commutes with every theta = 0 Hamiltonian, eta = 0.7", [&] {
        const HilbertSpec spec{40, 0};
        const Matrix pi_op = parity_operator(spec);
        const RabiParams p{1.0, 1.0, 0.7};
        const CircuitParams cp = CircuitParams::symmetric(1.0, 0.7);
        for (const Matrix& h :
             {build_coulomb(p, spec).matrix, build_dipole(p, spec).matrix,
              build_flux_gauge(cp, spec).matrix, build_charge_gauge(cp, spec).matrix}) {
            if (max_abs(h * pi_op - pi_op * h) > 1e-10) return false;
        }
        return true;
    });

    r.check("gauge-invariant level spacings, eta in {0.5, 1.0}", [&] {
        for (double eta : {0.5, 1.0}) {
            const RabiParams p{1.0, 1.0, eta};
            const Spectrum c = coulomb_spectrum(p);
            const Spectrum d = dipole_spectrum(p);
            const CircuitParams cp = CircuitParams::symmetric(1.0, eta);
            const Spectrum fg = flux_spectrum(cp);
            const Spectrum cg = charge_spectrum(cp);
            for (int j = 1; j < 8; ++j) {
                const double scale = std::max(std::abs(c.transition_energy(j)), 1e-1);
                if (std::abs(c.transition_energy(j) - d.transition_energy(j)) > 1e-8 * scale) {
                    return false;
                }
                if (std::abs(fg.transition_energy(j) - cg.transition_energy(j)) > 1e-8 * scale) {
                    return false;
                }
            }
        }
        return true;
    });

    r.check("ground energy has quadratic onset in eta", [&] {
        const double h = 1e-3;
        const double e0 = coulomb_spectrum({1.0, 1.0, 0.0}).energies[0];
        const double eh = coulomb_spectrum({1.0, 1.0, h}).energies[0];
        return std::abs((eh - e0) / h) < 1e-2;
    });

    r.check("positive-frequency split: adjoint pairing and brute-force sum", [&] {
        const Spectrum s = coulomb_spectrum({1.0, 1.0, 0.8});
        const CanonicalOperators ops = build_space(s.spec);
        const Matrix y = I * (ops.a - ops.a_dag);
        const Matrix y_plus = positive_frequency_part(y, s);
        for (int j : {1, 3, 5}) {
            double direct = 0.0;
            for (int k = 0; k < j; ++k) {
                if (s.transition_energy(j, k) > 1e-9) {
                    direct += std::norm(s.state(k).dot(y * s.state(j)));
                }
            }
            const double via_split = (y_plus * s.state(j)).squaredNorm();
            if (std::abs(direct - via_split) > 1e-10) return false;
        }
        return true;
    });

    r.check("parity selection rule for the field momentum, eta = 0.6", [&] {
        const Spectrum s = coulomb_spectrum({1.0, 1.0, 0.6});
        const CanonicalOperators ops = build_space(s.spec);
        const Matrix pi_op = parity_operator(s.spec);
        const Matrix p = I * (ops.a - ops.a_dag);
        std::vector<double> par(8);
        for (int j = 0; j < 8; ++j) par[j] = expectation(s.state(j), pi_op).real();
        for (int j = 0; j < 8; ++j) {
            for (int k = 0; k < j; ++k) {
                if (par[j] * par[k] > 0.5 &&
                    std::abs(s.state(k).dot(p * s.state(j))) > 1e-10) {
                    return false;
                }
            }
        }
        return true;
    });

    r.check("norm conservation through a switched propagation", [&] {
        const RabiParams p{1.0, 1.0, 0.5};
        const HilbertSpec spec{default_cutoff(0.5), 0};
        const Spectrum d = dipole_spectrum(p, {.n_levels = 2, .initial_cutoff = spec.n_fock});
        const SwitchProtocol prot = SwitchProtocol::switch_off(1.0, 1e-2);
        const PropagationResult res =
            propagate(d.state(0), DynamicsGauge::Dipole, p, prot, d.spec, {.samples = 61});
        for (double e : res.norm_error) {
            if (e > 1e-8) return false;
        }
        return true;
    });

    r.check("coherent state moments at alpha = 1.5", [&] {
        const HilbertSpec spec{40, 0};
        const Vector v = coherent_state(1.5, spec);
        const Matrix a = boson_destroy(40);
        const Complex mean_a = v.dot(a * v);
        const double mean_n = (a * v).squaredNorm();
        return std::abs(mean_a - Complex{1.5, 0.0}) < 1e-8 && std::abs(mean_n - 2.25) < 1e-6;
    });

    return r.all_ok;
}

}  // namespace gaugeqed
