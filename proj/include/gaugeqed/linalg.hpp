#pragma once

#include <functional>

#include "gaugeqed/types.hpp"

namespace gaugeqed {

// Dense complex-matrix kernel. All units are dimensionless (hbar = 1,
// omega_c = 1); dimensions stay in the low hundreds, so everything is dense.

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& m, double tol = 1e-12);
bool is_unitary(const Matrix& u, double tol = 1e-10);

struct Eigensystem {
    RealVector values;  // ascending
    Matrix vectors;     // columns, orthonormal, phase-fixed
};

/// Fix the phase of each column so its first component of magnitude > 1e-8
/// is real and positive. Idempotent.
void fix_phases(Matrix& vectors, double threshold = 1e-8);

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending,
/// eigenvectors phase-fixed. Throws PreconditionError on non-Hermitian
/// input and NumericalError if the solver fails.
Eigensystem hermitian_eig(const Matrix& m);

/// f(M) = V f(diag) V^dag via spectral calculus on Hermitian M; f may be
/// real- or complex-valued on the (real) spectrum.
template <typename F>
Matrix matrix_function(const Matrix& m, F&& f) {
    const Eigensystem es = hermitian_eig(m);
    Vector d(es.values.size());
    for (Eigen::Index i = 0; i < es.values.size(); ++i) d[i] = f(es.values[i]);
    return es.vectors * d.asDiagonal() * es.vectors.adjoint();
}

/// exp(i K) for Hermitian K; exactly unitary up to roundoff. All gauge
/// transformation operators and propagator steps go through this.
Matrix expi(const Matrix& k);

Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out the boson factor of a density matrix on qubit (x) boson with
/// qubit slow / boson fast ordering. Requires Hermitian rho with unit trace.
Matrix partial_trace_boson(const Matrix& rho);

inline Matrix dagger(const Matrix& m) { return m.adjoint(); }

inline Complex expectation(const Vector& state, const Matrix& op) {
    return state.dot(op * state);
}

inline double fidelity(const Vector& a, const Vector& b) { return std::norm(a.dot(b)); }

}  // namespace gaugeqed
