#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaugeqed/asymptotic.hpp"
#include "gaugeqed/spectrum.hpp"

using namespace gaugeqed;

TEST_CASE("diagonalize_converged") {
    SUBCASE("eta = 0 converges at the minimal cutoff to the bare ladder") {
        const Spectrum s = coulomb_spectrum({1.0, 1.0, 0.0}, {.n_levels = 4});
        CHECK(s.converged_levels == 4);
        CHECK(s.energies[0] == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(s.energies[3] == doctest::Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("eta = 1 level differences identical from n_fock 60 and 120") {
        const RabiParams p{1.0, 1.0, 1.0};
        const Spectrum a = diagonalize(build_coulomb(p, {60, 0}));
        const Spectrum b = diagonalize(build_coulomb(p, {120, 0}));
        for (int j = 1; j < 6; ++j) {
            CHECK(std::abs(a.transition_energy(j) - b.transition_energy(j)) <
                  1e-8 * std::abs(b.transition_energy(j)));
        }
    }
    SUBCASE("eta = 3 starts from the heuristic cutoff 66 and escalates to convergence") {
        CHECK(default_cutoff(3.0) == 66);
        const RabiParams p{1.0, 1.0, 3.0};
        const Spectrum s = coulomb_spectrum(p);
        CHECK(s.converged_levels == 8);
        CHECK(s.spec.n_fock >= 66);
        // the accepted spectrum is stable under the doubling it returned from
        const Spectrum half = diagonalize(build_coulomb(p, {s.spec.n_fock / 2, 0}));
        for (int j = 1; j < 8; ++j) {
            const double scale = std::max(std::abs(s.transition_energy(j)),
                                          std::abs(half.transition_energy(j)));
            CHECK(std::abs(s.transition_energy(j) - half.transition_energy(j)) <
                  std::max(1e-8 * scale, 1e-9));
        }
    }
    SUBCASE("n_levels below 2 is rejected") {
        CHECK_THROWS_AS(coulomb_spectrum({1.0, 1.0, 0.5}, {.n_levels = 1}), ConfigError);
    }
    SUBCASE("pathological builder exhausts the cutoff cap") {
        // level spacing drifts with the cutoff forever
        const HamiltonianBuilder bad = [](const HilbertSpec& spec) {
            GaugeHamiltonian h;
            h.spec = spec;
            Vector d(spec.dim());
            for (int i = 0; i < spec.dim(); ++i) d[i] = i * (1.0 + 1.0 / spec.n_fock);
            h.matrix = d.asDiagonal();
            return h;
        };
        CHECK_THROWS_AS(
            diagonalize_converged(bad, 0.0, {.n_levels = 2, .initial_cutoff = 4, .max_cutoff = 64}),
            ConvergenceError);
    }
}

TEST_CASE("label_states") {
    SUBCASE("eta = 1e-3 at resonance: JC doublet with splitting 2g") {
        const RabiParams p{1.0, 1.0, 1e-3};
        Spectrum s = label_states(dipole_spectrum(p, {.n_levels = 4}));
        REQUIRE(s.labels.size() >= 3);
        CHECK(s.labels[0].str() == "ground");
        CHECK(s.labels[1].str() == "1-");
        CHECK(s.labels[2].str() == "1+");
        const JcDoublet jc = jc_doublet(p);
        CHECK(std::abs(s.transition_energy(2, 1) - (jc.e_plus - jc.e_minus)) < 1e-6);
        CHECK(s.transition_energy(2, 1) == doctest::Approx(2e-3).epsilon(1e-3));
    }
    SUBCASE("eta = 0 detuned: labels by dominant bare component") {
        const RabiParams p{1.0, 1.2, 0.0};
        Spectrum s = label_states(coulomb_spectrum(p, {.n_levels = 4}));
        CHECK(s.labels[0].str() == "ground");
        CHECK(s.labels[1].str() == "1-");  // |g,1> below |e,0> for omega_0 > omega_c
        CHECK(s.labels[2].str() == "1+");
    }
    SUBCASE("eta = 0 at resonance: degenerate doublets are never guessed") {
        const RabiParams p{1.0, 1.0, 0.0};
        Spectrum s = label_states(coulomb_spectrum(p, {.n_levels = 4}));
        CHECK(s.labels[0].str() == "ground");
        CHECK(s.labels[1].str() == "?");
        CHECK(s.labels[2].str() == "?");
    }
    SUBCASE("eta = 1.5 at resonance: lowest doublet tracked through crossings") {
        const RabiParams p{1.0, 1.0, 1.5};
        Spectrum s = label_states(coulomb_spectrum(p));
        CHECK(find_label(s, {StateLabel::Kind::Ground, 0}) == 0);
        CHECK(find_label(s, {StateLabel::Kind::Minus, 1}) == 1);
        CHECK(find_label(s, {StateLabel::Kind::Plus, 1}).has_value());
    }
    SUBCASE("halving the continuation step changes no label") {
        const RabiParams p{1.0, 1.0, 1.5};
        const Spectrum coarse = label_states(coulomb_spectrum(p), {.eta_step = 0.02});
        const Spectrum fine = label_states(coulomb_spectrum(p), {.eta_step = 0.01});
        REQUIRE(coarse.labels.size() == fine.labels.size());
        for (size_t j = 0; j < coarse.labels.size(); ++j) {
            CHECK(coarse.labels[j] == fine.labels[j]);
        }
    }
    SUBCASE("labels are gauge independent") {
        const RabiParams p{1.0, 1.0, 1.2};
        const Spectrum c = label_states(coulomb_spectrum(p));
        const Spectrum d = label_states(dipole_spectrum(p));
        REQUIRE(c.labels.size() == d.labels.size());
        for (size_t j = 0; j < c.labels.size(); ++j) {
            CHECK(c.labels[j] == d.labels[j]);
        }
    }
}

TEST_CASE("labeled_sweep tracks the whole grid in one pass") {
    std::vector<double> etas;
    for (double e = 0.1; e <= 1.51; e += 0.2) etas.push_back(e);
    const std::vector<Spectrum> sweep = labeled_sweep(Gauge::Coulomb, {1.0, 1.0, 0.0}, etas);
    REQUIRE(sweep.size() == etas.size());
    for (size_t i = 0; i < sweep.size(); ++i) {
        CHECK(sweep[i].eta == doctest::Approx(etas[i]));
        CHECK(sweep[i].labels[0].str() == "ground");
        CHECK(find_label(sweep[i], {StateLabel::Kind::Minus, 1}).has_value());
        CHECK(find_label(sweep[i], {StateLabel::Kind::Plus, 1}).has_value());
    }
    // spot-check against single-target labeling
    const Spectrum single =
        label_states(coulomb_spectrum({1.0, 1.0, 0.9}, {.initial_cutoff = sweep[4].spec.n_fock}));
    const auto idx_sweep = find_label(sweep[4], {StateLabel::Kind::Plus, 1});
    const auto idx_single = find_label(single, {StateLabel::Kind::Plus, 1});
    CHECK(idx_sweep == idx_single);
}

TEST_CASE("spectrum states are orthonormal and energies ascend") {
    const Spectrum s = coulomb_spectrum({1.0, 1.0, 0.9});
    Matrix g = s.states.adjoint() * s.states;
    g -= Matrix::Identity(s.dim(), s.dim());
    CHECK(max_abs(g) < 1e-10);
    for (int j = 1; j < s.dim(); ++j) CHECK(s.energies[j] >= s.energies[j - 1]);
}
