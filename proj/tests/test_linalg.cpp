#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaugeqed/hilbert.hpp"
#include "helpers.hpp"

using namespace gaugeqed;

TEST_CASE("pauli sigma_z and sigma_x eigensystems") {
    const Eigensystem ez = hermitian_eig(pauli_z());
    CHECK(ez.values[0] == doctest::Approx(-1.0));
    CHECK(ez.values[1] == doctest::Approx(1.0));

    const Eigensystem ex = hermitian_eig(pauli_x());
    CHECK(ex.values[0] == doctest::Approx(-1.0));
    CHECK(ex.values[1] == doctest::Approx(1.0));
    // phase convention: first significant component real positive
    for (int c = 0; c < 2; ++c) {
        CHECK(ex.vectors(0, c).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(ex.vectors(0, c).imag() == doctest::Approx(0.0));
    }
    CHECK(ex.vectors(1, 0).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(ex.vectors(1, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("round-trip reconstruction of a random 8x8 Hermitian") {
    std::mt19937 rng(11u);
    const Matrix m = testing::random_hermitian(8, rng);
    const Eigensystem es = hermitian_eig(m);
    CHECK(max_abs(es.vectors * es.values.asDiagonal() * es.vectors.adjoint() - m) < 1e-10);
    CHECK(is_unitary(es.vectors));
}

TEST_CASE("round-trip residual scales with dimension up to 256") {
    std::mt19937 rng(12u);
    for (int dim : {16, 64, 256}) {
        const Matrix m = testing::random_hermitian(dim, rng);
        const Eigensystem es = hermitian_eig(m);
        const Matrix residual = m * es.vectors - es.vectors * es.values.asDiagonal();
        CHECK(max_abs(residual) < 1e-10 * dim);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), PreconditionError);
}

TEST_CASE("phase fixing is idempotent bit-for-bit") {
    std::mt19937 rng(13u);
    const Matrix m = testing::random_hermitian(12, rng);
    Eigensystem es = hermitian_eig(m);
    Matrix again = es.vectors;
    fix_phases(again);
    CHECK(again == es.vectors);
}

TEST_CASE("matrix_function basics") {
    SUBCASE("cos of the zero matrix is the identity") {
        const Matrix z = Matrix::Zero(5, 5);
        const Matrix c = matrix_function(z, [](double x) { return std::cos(x); });
        CHECK(max_abs(c - Matrix::Identity(5, 5)) < 1e-14);
    }
    SUBCASE("exp(i pi sigma_x) = -1") {
        const Matrix u = expi(Matrix(M_PI * pauli_x()));
        CHECK(max_abs(u + Matrix::Identity(2, 2)) < 1e-12);
    }
    SUBCASE("cos^2 + sin^2 = 1 for the quadrature at eta = 0.8, cutoff 60") {
        const Matrix a = boson_destroy(60);
        const Matrix arg = 1.6 * (a + a.adjoint());
        const Matrix c = matrix_function(arg, [](double x) { return std::cos(x); });
        const Matrix s = matrix_function(arg, [](double x) { return std::sin(x); });
        CHECK(max_abs(c * c + s * s - Matrix::Identity(60, 60)) < 1e-10);
    }
    SUBCASE("spectral mapping and additivity") {
        std::mt19937 rng(14u);
        const Matrix m = testing::random_hermitian(10, rng);
        const Eigensystem before = hermitian_eig(m);
        const auto f = [](double x) { return std::tanh(x); };
        const auto g = [](double x) { return x * x; };
        const Eigensystem after = hermitian_eig(matrix_function(m, f));
        RealVector mapped(10);
        for (int i = 0; i < 10; ++i) mapped[i] = f(before.values[i]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(max_abs(Matrix(after.values - mapped)) < 1e-10);

        const Matrix sum = matrix_function(m, [&](double x) { return f(x) + g(x); });
        CHECK(max_abs(sum - matrix_function(m, f) - matrix_function(m, g)) < 1e-10);
    }
}

TEST_CASE("kron") {
    SUBCASE("identity factors") {
        CHECK(max_abs(kron(Matrix::Identity(2, 2), Matrix::Identity(3, 3)) -
                      Matrix::Identity(6, 6)) == 0.0);
    }
    SUBCASE("sigma_z with diag(0,1)") {
        Matrix d = Matrix::Zero(2, 2);
        d(1, 1) = 1.0;
        const Matrix k = kron(pauli_z(), d);
        Vector expect(4);
        expect << 0, -1, 0, 1;
        // qubit slow: |g>(x)diag then |e>(x)diag with sigma_z = diag(-1,+1)
        CHECK(k(1, 1) == Complex{-1.0, 0.0});
        CHECK(k(3, 3) == Complex{1.0, 0.0});
        CHECK(k(0, 0) == Complex{0.0, 0.0});
        CHECK(k(2, 2) == Complex{0.0, 0.0});
    }
    SUBCASE("mixed-product property") {
        std::mt19937 rng(15u);
        const Matrix a = testing::random_hermitian(2, rng), b = testing::random_hermitian(3, rng);
        const Matrix c = testing::random_hermitian(2, rng), d = testing::random_hermitian(3, rng);
        CHECK(max_abs(kron(a, b) * kron(c, d) - kron(Matrix(a * c), Matrix(b * d))) < 1e-12);
    }
}

TEST_CASE("partial trace over the boson") {
    SUBCASE("product state reduces to the qubit factor") {
        const HilbertSpec spec{6, 0};
        const Vector v = basis_state(0, 0, spec);
        const Matrix rq = partial_trace_boson(Matrix(v * v.adjoint()));
        CHECK(rq(0, 0).real() == doctest::Approx(1.0));
        CHECK(std::abs(rq(1, 1)) < 1e-14);
    }
    SUBCASE("Bell-like state reduces to the maximally mixed qubit") {
        const HilbertSpec spec{6, 0};
        Vector v = (basis_state(0, 0, spec) + basis_state(1, 1, spec)) / std::sqrt(2.0);
        const Matrix rq = partial_trace_boson(Matrix(v * v.adjoint()));
        CHECK(max_abs(rq - 0.5 * Matrix::Identity(2, 2)) < 1e-12);
    }
    SUBCASE("random density matrices stay positive with unit trace") {
        std::mt19937 rng(16u);
        std::normal_distribution<double> dist;
        for (int trial = 0; trial < 5; ++trial) {
            Matrix a(20, 20);
            for (int i = 0; i < 20; ++i)
                for (int j = 0; j < 20; ++j) a(i, j) = Complex{dist(rng), dist(rng)};
            Matrix rho = a * a.adjoint();
            rho /= rho.trace();
            const Matrix rq = partial_trace_boson(rho);
            CHECK(std::abs(rq.trace().real() - 1.0) < 1e-10);
            const Eigensystem es = hermitian_eig(rq);
            CHECK(es.values.minCoeff() > -1e-10);
            CHECK(es.values.maxCoeff() < 1.0 + 1e-10);
        }
    }
    SUBCASE("odd dimension is rejected") {
        CHECK_THROWS_AS(partial_trace_boson(Matrix::Identity(5, 5) / 5.0), PreconditionError);
    }
}
