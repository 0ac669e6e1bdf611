#pragma once

#include "spinlink/matrix.hpp"

#include <cmath>

namespace spinlink {

namespace detail {

inline double inf_norm(const FloatMatrix& m) {
    double best = 0;
    for (int r = 0; r < m.rows(); ++r) {
        double row = 0;
        for (int c = 0; c < m.cols(); ++c) row += cx_abs(m(r, c));
        best = std::max(best, row);
    }
    return best;
}

}  // namespace detail

/// Matrix exponential by scaling-and-squaring with a truncated Taylor series.
/// The argument is scaled so its norm is <= 1/2; terms are added until they
/// fall below 1e-20, then the result is squared back up.
inline FloatMatrix mat_exp(const FloatMatrix& m) {
    FloatMatrix::require(m.rows() == m.cols(), "mat_exp: square matrix required");
    const int n = m.rows();
    int squarings = 0;
    double norm = detail::inf_norm(m);
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    FloatMatrix a = m;
    if (squarings > 0) a *= FloatC(std::ldexp(1.0, -squarings));

    FloatMatrix sum = FloatMatrix::identity(n);
    FloatMatrix term = FloatMatrix::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = term * a;
        term *= FloatC(1.0 / k);
        sum += term;
        if (detail::inf_norm(term) < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

/// ||exp(M) exp(-M) - 1||_F, the self-consistency residual.
inline double exp_residual(const FloatMatrix& m) {
    const FloatMatrix e = mat_exp(m);
    FloatMatrix minus = m;
    minus *= FloatC(-1.0);
    return frobenius(e * mat_exp(minus) - FloatMatrix::identity(m.rows()));
}

}  // namespace spinlink
