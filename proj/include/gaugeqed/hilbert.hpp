#pragma once

#include "gaugeqed/linalg.hpp"
#include "gaugeqed/types.hpp"

namespace gaugeqed {

// Composite qubit (x) truncated-boson space. Ordering convention, fixed
// globally: qubit is the slow index, boson the fast one; with a second
// readout mode, mode b is fastest. Bare-basis index = (q * n_fock + n_a) *
// n_fock_b + n_b.
struct HilbertSpec {
    int n_fock = 24;
    int n_fock_b = 0;  // 0 = single mode

    bool two_mode() const { return n_fock_b > 0; }
    int boson_dim() const { return two_mode() ? n_fock * n_fock_b : n_fock; }
    int dim() const { return 2 * boson_dim(); }

    void validate() const {
        if (n_fock < 2) throw ConfigError("HilbertSpec: n_fock must be >= 2");
        if (n_fock_b < 0 || n_fock_b == 1) {
            throw ConfigError("HilbertSpec: n_fock_b must be 0 (single mode) or >= 2");
        }
    }
};

/// Default Fock cutoff for coupling eta: coherent amplitudes grow like eta
/// and occupations like eta^2, so max(24, ceil(4 eta^2 + 6 eta + 12)) keeps
/// truncation error below tolerance for eta <= 3.
int default_cutoff(double eta);

// Qubit basis: index 0 = |g>, 1 = |e>, so sigma_z = diag(-1, +1).
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix sigma_plus();   // |e><g|
Matrix sigma_minus();  // |g><e|

/// n_fock x n_fock destruction operator on a single boson mode.
Matrix boson_destroy(int n_fock);

// Canonical operators lifted to the composite space.
struct CanonicalOperators {
    HilbertSpec spec;
    Matrix id;
    Matrix a, a_dag, x, p, n;        // x = a + a^dag, p = i(a^dag - a)
    Matrix sx, sy, sz, sp, sm;
    Matrix b, b_dag, xb, nb;         // empty unless two_mode

    /// qubit_op (x) 1_boson
    Matrix lift_qubit(const Matrix& q2) const;
    /// 1_qubit (x) boson_op, acting on mode a
    Matrix lift_boson(const Matrix& bop) const;
};

CanonicalOperators build_space(const HilbertSpec& spec);

/// Normalized truncated coherent state |alpha> from its closed-form Fock
/// amplitudes. Requires |alpha|^2 <= n_fock / 4 for truncation safety.
Vector coherent_state(Complex alpha, const HilbertSpec& spec);

/// |q> (x) |n> bare basis vector.
Vector basis_state(int qubit, int n_boson, const HilbertSpec& spec);

}  // namespace gaugeqed
