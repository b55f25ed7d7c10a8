#pragma once

// Upper bounds on the largest element d of a quintuple: the linear-forms
// inequality j / log(E j) <= K log^2 C, its constants, and the fixed-point
// iteration that shrinks the bound on C = d.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/arith.hpp"
#include "dq/tuple_core.hpp"

namespace dq {

class NonCrossingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BoundParams {
    Real A0 = 1;
    Real B0 = 8;
    Real C0 = 6440;
    Real C1 = INFINITY;  // infinity drops every 1/log C1 term
    Real j0 = 1e10L;

    void validate() const;
};

struct GValues {
    Real g1 = 0, g2 = 0, g4 = 0, g5 = 0, g6 = 0;
    Real h1 = 0, h4 = 0;
};

Real g1_of(Real x);
Real g3_of(Real x);
Real h3_of(Real x);

GValues eval_g(const BoundParams& params);

/// 5.3 e n^(1/2) (n+1) (n+8)^2 (n+5) 31.5^n d^2 log(3nd)
Real aleksentsev_prefactor(unsigned n, unsigned d);

/// Magnitude of the lower bound for log|Lambda|: prefactor * log E * A_1 ... A_n.
Real aleksentsev_rhs(unsigned n, unsigned d, Real E, const std::vector<Real>& A);

/// A triple {A, B, C} of the second kind, B < coeff * C^(exp_num/exp_den).
struct TripleKindParams {
    Subcase kind = Subcase::Case2i;
    Real b_coeff = 0.25L;
    int exp_num = 1, exp_den = 2;
    Real B0 = 1680;
    Real C0 = 1e8L;
    Real kappa = 0;  // m >= kappa C^p once solved
    int p_num = 0, p_den = 1;

    Real b_exp() const { return static_cast<Real>(exp_num) / exp_den; }
    Real p() const { return static_cast<Real>(p_num) / p_den; }
};

/// Defaults for 2(i), 2(ii), 2(iii), with kappa and p filled in by solve_alpha.
TripleKindParams kind_params(Subcase kind);

/// m (T + S) + 3/4 m^2 with m = alpha B^(-1/2) C^(1/2), T = sqrt(BC+1), S bounded by sqrt(BC/4 + 1).
Real chop_rhs(Real alpha, Real B, Real C);

struct AlphaResult {
    Real alpha_exact = 0;  // bisection limit
    Real alpha = 0;        // truncated to 4 decimals
    Real kappa = 0;        // truncated to 4 decimals
    int p_num = 0, p_den = 1;
};

AlphaResult solve_alpha(const TripleKindParams& kind, Real B0, Real C0);

enum class InequalityKind { General, SecondKind };

struct InequalityRhs {
    Real K = 0;
    Real E_coeff = 0;
    GValues g;
};

InequalityRhs inequality_rhs(InequalityKind kind, const BoundParams& params);

/// Largest C with 2 kappa C^p / log(E 2 kappa C^p) <= K log^2 C, searched in [C_lo, C_hi].
Real solve_C(Real kappa, Real p, Real K, Real E_coeff, Real C_lo, Real C_hi);

struct IterationStep {
    int index = 0;
    Real C1 = 0;
    GValues g;
    Real K = 0;
    Real E_coeff = 0;
    Real new_bound = 0;
};

struct IterationResult {
    Real d_bound = 0;
    bool converged = false;
    std::vector<IterationStep> trace;
};

IterationResult iterate_d_bound(const TripleKindParams& kind, Real initial_C1 = 4.2e76L, Real A0 = 1,
                                Real j0 = 1e10L);

}  // namespace dq
