#pragma once

#include "pcoact/algebra.hpp"

namespace pcoact::fixtures {

/// The ground field as a 1-dimensional Poisson algebra.
inline PoissonAlgebraData field() {
    PoissonAlgebraData a;
    a.dim = 1;
    a.basis_labels = {"1"};
    a.set_mul(0, 0, 0, 1);
    return a;
}

/// Dual numbers: {1, x} with x^2 = 0 and zero bracket.
inline PoissonAlgebraData dual_numbers() {
    PoissonAlgebraData a;
    a.dim = 2;
    a.basis_labels = {"1", "x"};
    a.set_mul(0, 0, 0, 1);
    a.set_mul(0, 1, 1, 1);
    a.set_mul(1, 0, 1, 1);
    return a;
}

/// {1, x, y} with x^2 = xy = y^2 = 0 and [x, y] = x.
inline PoissonAlgebraData three_dim() {
    PoissonAlgebraData a;
    a.dim = 3;
    a.basis_labels = {"1", "x", "y"};
    for (std::size_t i = 0; i < 3; ++i) {
        a.set_mul(0, i, i, 1);
        if (i) a.set_mul(i, 0, i, 1);
    }
    a.set_bracket(1, 2, 1, 1);
    a.set_bracket(2, 1, 1, -1);
    return a;
}

} // namespace pcoact::fixtures
