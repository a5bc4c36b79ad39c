#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gaugeqed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex I{0.0, 1.0};

// Error taxonomy. Each maps to a distinct CLI exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Caller handed an operator/state that violates a stated precondition
// (non-Hermitian input, wrong shape, non-normalized state, ...).
struct PreconditionError : Error {
    using Error::Error;
};
// Invalid model/run configuration (cutoff < 2, empty grid, theta != 0 where
// unsupported, ...).
struct ConfigError : Error {
    using Error::Error;
};
// Fock truncation cannot represent the requested object.
struct TruncationError : Error {
    using Error::Error;
};
// Iterative refinement (cutoff escalation, step-size halving) hit its cap.
struct ConvergenceError : Error {
    using Error::Error;
};
// Readout ladder identification failed: the dispersive picture broke down.
struct ExtractionError : Error {
    using Error::Error;
};
// Underlying eigensolver did not converge.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace gaugeqed
