#pragma once

#include <random>

#include "gaugeqed/linalg.hpp"

namespace gaugeqed::testing {

inline Matrix random_hermitian(int dim, std::mt19937& rng) {
    std::normal_distribution<double> dist;
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex{dist(rng), dist(rng)};
    return 0.5 * (a + a.adjoint()).eval();
}

inline Vector random_state(int dim, std::mt19937& rng) {
    std::normal_distribution<double> dist;
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Complex{dist(rng), dist(rng)};
    v.normalize();
    return v;
}

}  // namespace gaugeqed::testing
