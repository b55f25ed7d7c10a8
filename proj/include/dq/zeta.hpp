#pragma once

// Riemann zeta and its derivatives on the real axis s > 1 by a truncated
// Dirichlet series with Euler-Maclaurin tail.

#include "dq/arith.hpp"

namespace dq {

struct ZetaValue {
    Real value = 0;
    Real error = 0;  // absolute bound
};

/// The k-th derivative of zeta at real s > 1. `cutoff` is the number of
/// terms summed directly, `corrections` the number of Bernoulli terms.
ZetaValue zeta_derivative_at(unsigned k, Real s, unsigned cutoff = 40, unsigned corrections = 10);

/// zeta'(2) (order 1) or zeta''(2) (order 2).
ZetaValue zeta_derivative(unsigned order);

Real zeta(Real s);

}  // namespace dq
