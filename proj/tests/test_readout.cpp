#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaugeqed/readout.hpp"

using namespace gaugeqed;

TEST_CASE("chi_analytic") {
    SUBCASE("zero coupling gives zero shift") {
        CHECK(chi_analytic({0.3, 0.0, 1.0}) == 0.0);
    }
    SUBCASE("printed-formula arithmetic at g_b = 0.02, omega_b = 0.5") {
        const double chi = chi_analytic({0.5, 0.02, 1.0});
        CHECK(chi == doctest::Approx(0.0004 / 0.5 + 0.0004 / 1.5).epsilon(1e-12));
        CHECK(chi == doctest::Approx(1.0667e-3).epsilon(1e-4));
    }
    SUBCASE("|chi| falls off monotonically as omega_b grows") {
        double prev = std::abs(chi_analytic({5.0, 0.02, 1.0}));
        for (double wb : {10.0, 20.0, 40.0}) {
            const double cur = std::abs(chi_analytic({wb, 0.02, 1.0}));
            CHECK(cur < prev);
            prev = cur;
        }
        CHECK(prev < 1e-5);
    }
    SUBCASE("qubit-readout resonance is rejected") {
        CHECK_THROWS_AS(chi_analytic({1.0, 0.02, 1.0}), ConfigError);
    }
    SUBCASE("outside the dispersive window is rejected") {
        CHECK_THROWS_AS(chi_analytic({0.9, 0.05, 1.0}), ConfigError);
    }
}

TEST_CASE("chi_numeric at eta_a = 0 reproduces +-chi") {
    // mode a detuned so no bare level is degenerate
    const RabiParams bare{0.77, 1.0, 0.0};
    const ReadoutParams ro{0.3, 0.02, 1.0};

    SUBCASE("qubit ground: shift = -chi within 10%") {
        const DispersiveShift d = chi_numeric(bare, ro, {.state_index = 0});
        CHECK(d.sigma_z_dipole == doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(d.ratio == doctest::Approx(-1.0).epsilon(0.1));
    }
    SUBCASE("qubit excited: shift = +chi within 10%") {
        // at omega_a = 0.77 the |e,0_a> level sits at index 2
        const DispersiveShift d = chi_numeric(bare, ro, {.state_index = 2});
        CHECK(d.sigma_z_dipole == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d.ratio == doctest::Approx(1.0).epsilon(0.1));
    }
}

TEST_CASE("chi_numeric in the USC regime tracks the dipole-gauge population") {
    // The tracking claim is a dispersive-limit statement: omega_b must sit
    // below every sigma_y-allowed transition of the USC system (at eta = 1
    // the softest one is at 0.138), so probe at omega_b = 0.05.
    const ReadoutParams ro{0.05, 0.02, 1.0};
    for (double eta : {0.6, 1.0}) {
        const RabiParams usc{1.0, 1.0, eta};
        const DispersiveShift d = chi_numeric(usc, ro, {.state_index = 0});
        CHECK(d.sigma_z_dipole < 0.0);
        CHECK(std::abs(d.sigma_z_dipole) < 1.0);
        CHECK(d.ratio == doctest::Approx(d.sigma_z_dipole).epsilon(0.1));
        CHECK(d.shift * (d.sigma_z_dipole * chi_analytic(ro)) > 0.0);  // sign agreement
    }
    // at moderate coupling the Fig.-3 default readout frequency still works
    const DispersiveShift m = chi_numeric({1.0, 1.0, 0.3}, {0.3, 0.02, 1.0}, {.state_index = 0});
    CHECK(m.ratio == doctest::Approx(m.sigma_z_dipole).epsilon(0.1));
}

TEST_CASE("second-order coupling scaling: doubling g_b quadruples the shift") {
    const RabiParams bare{0.77, 1.0, 0.0};
    const double s1 = chi_numeric(bare, {0.3, 0.01, 1.0}, {.state_index = 0}).shift;
    const double s2 = chi_numeric(bare, {0.3, 0.02, 1.0}, {.state_index = 0}).shift;
    CHECK(s2 / s1 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("full trigonometric two-mode model pulls with the dipole-equivalent coupling") {
    // The second-order term of the cosine renormalizes the mode-b pull of
    // the full model to (omega_b eta_b)^2 (1/Delta + 1/Sigma); the
    // linearized build is the one whose pull matches chi_analytic. This
    // pins which model the extraction must diagonalize.
    const RabiParams bare{0.77, 1.0, 0.0};
    const TwoModeParams pb{0.3, 0.02};
    const HilbertSpec both{8, 6};
    const Spectrum two = diagonalize(build_two_mode_coulomb_full(bare, pb, both));
    auto tmpl = [&](int nb) {
        Vector t = Vector::Zero(both.dim());
        t[nb] = 1.0;  // |g> (x) |0_a> (x) |n_b>
        return t;
    };
    int k0 = -1, k1 = -1;
    double b0 = 0.0, b1 = 0.0;
    for (int k = 0; k < two.dim(); ++k) {
        const double o0 = std::norm(tmpl(0).dot(two.state(k)));
        const double o1 = std::norm(tmpl(1).dot(two.state(k)));
        if (o0 > b0) { b0 = o0; k0 = k; }
        if (o1 > b1) { b1 = o1; k1 = k; }
    }
    const double shift = (two.energies[k1] - two.energies[k0]) - pb.omega_b;
    const double g_equiv = pb.omega_b * pb.eta_b;
    const double chi_equiv = g_equiv * g_equiv * (1.0 / 0.7 + 1.0 / 1.3);
    CHECK(shift == doctest::Approx(-chi_equiv).epsilon(1e-3));
    // an order of magnitude away from the linearized model's pull
    CHECK(std::abs(shift / chi_analytic({0.3, 0.02, 1.0})) < 0.1);
}

TEST_CASE("error paths") {
    const RabiParams bare{0.77, 1.0, 0.0};
    const ReadoutParams ro{0.3, 0.02, 1.0};
    CHECK_THROWS_AS(chi_numeric(bare, ro, {.state_index = -1}), PreconditionError);
    // an unresolvable ladder: demand absurd template overlap
    CHECK_THROWS_AS(chi_numeric({1.0, 1.0, 1.0}, ro, {.state_index = 0, .overlap_threshold = 1.0 - 1e-15}),
                    ExtractionError);
}
