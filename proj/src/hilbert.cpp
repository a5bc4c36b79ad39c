#include "gaugeqed/hilbert.hpp"

#include <cmath>

namespace gaugeqed {

int default_cutoff(double eta) {
    const int heuristic = static_cast<int>(std::ceil(4.0 * eta * eta + 6.0 * eta + 12.0));
    return std::max(24, heuristic);
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, I, -I, 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << -1, 0, 0, 1;
    return m;
}

Matrix sigma_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1;
    return m;
}

Matrix sigma_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1;
    return m;
}

Matrix boson_destroy(int n_fock) {
    Matrix m = Matrix::Zero(n_fock, n_fock);
    for (int n = 1; n < n_fock; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
    return m;
}

Matrix CanonicalOperators::lift_qubit(const Matrix& q2) const {
    return kron(q2, Matrix::Identity(spec.boson_dim(), spec.boson_dim()));
}

Matrix CanonicalOperators::lift_boson(const Matrix& bop) const {
    const Matrix id2 = Matrix::Identity(2, 2);
    if (!spec.two_mode()) return kron(id2, bop);
    const Matrix idb = Matrix::Identity(spec.n_fock_b, spec.n_fock_b);
    return kron(id2, kron(bop, idb));
}

CanonicalOperators build_space(const HilbertSpec& spec) {
    spec.validate();
    CanonicalOperators ops;
    ops.spec = spec;
    ops.id = Matrix::Identity(spec.dim(), spec.dim());

    const Matrix a1 = boson_destroy(spec.n_fock);
    ops.a = ops.lift_boson(a1);
    ops.a_dag = ops.a.adjoint();
    ops.x = ops.a + ops.a_dag;
    ops.p = I * (ops.a_dag - ops.a);
    ops.n = ops.a_dag * ops.a;

    ops.sx = ops.lift_qubit(pauli_x());
    ops.sy = ops.lift_qubit(pauli_y());
    ops.sz = ops.lift_qubit(pauli_z());
    ops.sp = ops.lift_qubit(sigma_plus());
    ops.sm = ops.lift_qubit(sigma_minus());

    if (spec.two_mode()) {
        const Matrix b1 = boson_destroy(spec.n_fock_b);
        const Matrix ida = Matrix::Identity(spec.n_fock, spec.n_fock);
        const Matrix id2 = Matrix::Identity(2, 2);
        ops.b = kron(id2, kron(ida, b1));
        ops.b_dag = ops.b.adjoint();
        ops.xb = ops.b + ops.b_dag;
        ops.nb = ops.b_dag * ops.b;
    }
    return ops;
}

Vector coherent_state(Complex alpha, const HilbertSpec& spec) {
    spec.validate();
    if (spec.two_mode()) {
        throw ConfigError("coherent_state: single-mode spaces only");
    }
    const double n_mean = std::norm(alpha);
    if (n_mean > spec.n_fock / 4.0) {
        throw TruncationError("coherent_state: |alpha|^2 = " + std::to_string(n_mean) +
                              " exceeds n_fock / 4");
    }
    Vector v(spec.n_fock);
    Complex amp = std::exp(-0.5 * n_mean);
    for (int n = 0; n < spec.n_fock; ++n) {
        v[n] = amp;
        amp *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    v.normalize();
    return v;
}

Vector basis_state(int qubit, int n_boson, const HilbertSpec& spec) {
    spec.validate();
    if (qubit < 0 || qubit > 1 || n_boson < 0 || n_boson >= spec.boson_dim()) {
        throw PreconditionError("basis_state: index out of range");
    }
    Vector v = Vector::Zero(spec.dim());
    v[qubit * spec.boson_dim() + n_boson] = 1.0;
    return v;
}

}  // namespace gaugeqed
