#include "gaugeqed/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace gaugeqed {

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) < tol;
}

bool is_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    Matrix g = u.adjoint() * u;
    g -= Matrix::Identity(u.rows(), u.cols());
    return max_abs(g) < tol;
}

void fix_phases(Matrix& vectors, double threshold) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            const Complex v = vectors(r, c);
            const double mag = std::abs(v);
            if (mag > threshold) {
                vectors.col(c) *= std::conj(v) / mag;
                break;
            }
        }
    }
}

Eigensystem hermitian_eig(const Matrix& m) {
    if (!is_hermitian(m)) {
        throw PreconditionError("hermitian_eig: input is not Hermitian (max|M - M^dag| >= 1e-12)");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        const Matrix r = m * solver.eigenvectors() -
                         solver.eigenvectors() * solver.eigenvalues().asDiagonal();
        throw NumericalError("hermitian_eig: solver failed, residual max " +
                             std::to_string(r.cwiseAbs().maxCoeff()));
    }
    Eigensystem es{solver.eigenvalues(), solver.eigenvectors()};
    fix_phases(es.vectors);
    return es;
}

Matrix expi(const Matrix& k) {
    return matrix_function(k, [](double x) { return std::exp(I * x); });
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix partial_trace_boson(const Matrix& rho) {
    const Eigen::Index dim = rho.rows();
    if (dim != rho.cols() || dim % 2 != 0) {
        throw PreconditionError("partial_trace_boson: dimension must be 2 * n_boson");
    }
    if (!is_hermitian(rho, 1e-10)) {
        throw PreconditionError("partial_trace_boson: density matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
        throw PreconditionError("partial_trace_boson: trace != 1");
    }
    const Eigen::Index nb = dim / 2;
    Matrix out = Matrix::Zero(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index n = 0; n < nb; ++n) out(i, j) += rho(i * nb + n, j * nb + n);
    return out;
}

}  // namespace gaugeqed
