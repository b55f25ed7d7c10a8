#include "dq/bound_engine.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace dq {

namespace {

// 1 / log x, with log(inf) treated as inf.
Real inv_log(Real x)
{
    return std::isinf(x) ? 0 : 1 / std::log(x);
}

Real truncate4(Real x)
{
    return std::floor(x * 10000 + 1e-9L) / 10000;
}

}  // namespace

void BoundParams::validate() const
{
    if (!(A0 >= 1))
        throw std::domain_error("BoundParams: A0 must be at least 1");
    if (!(B0 >= 8))
        throw std::domain_error("BoundParams: B0 must be at least 8");
    if (!(C0 > B0))
        throw std::domain_error("BoundParams: C0 must exceed B0");
    if (!(C1 > C0))
        throw std::domain_error("BoundParams: C1 must exceed C0");
    if (!(j0 >= 1))
        throw std::domain_error("BoundParams: j0 must be at least 1");
}

Real g1_of(Real x)
{
    if (!(x > 1))
        throw std::domain_error("g1: argument must exceed 1");
    return 1.6L + (2 * std::log(2.0L) + std::log1p(std::pow(x, -1.6L))) / std::log(x);
}

Real g3_of(Real x)
{
    if (!(x > 0 && x < 1))
        throw std::domain_error("g3: argument must lie in (0, 1)");
    const Real r = 1 + std::sqrt(x);
    return r * r / (1 - x);
}

Real h3_of(Real x)
{
    if (!(x > 0 && x < 1))
        throw std::domain_error("h3: argument must lie in (0, 1)");
    const Real r = 1 + 0.75L * std::sqrt(x);
    return r * r / (1 - x);
}

GValues eval_g(const BoundParams& p)
{
    p.validate();
    const Real LC0 = std::log(p.C0);
    const Real iL1 = inv_log(p.C1);
    GValues g;
    g.g1 = g1_of(p.C0);
    g.g2 = 1 + (2 * std::log(2.0L) + std::log(p.A0)) * iL1;
    g.g4 = 3.2L + std::log(g3_of(std::pow(p.C0, -0.4L))) / LC0;
    g.g5 = 2 + (2 * std::log(p.A0) + 2 * std::log1p(-std::pow(p.C0, -0.4L))) / LC0;
    g.g6 = 1 + 2 * std::log(2 * std::sqrt(p.A0)) * iL1 - 2 / p.j0 - std::log(8.0L / 3) / (p.j0 * LC0);
    g.h1 = 1.5L + (std::log1p(4 / std::pow(p.C0, 1.5L)) - std::log(4.0L)) * iL1;
    g.h4 = 3 + 2 * std::log(h3_of(std::pow(p.C0, -0.5L))) / LC0;
    return g;
}

Real aleksentsev_prefactor(unsigned n, unsigned d)
{
    if (n < 1 || d < 1)
        throw std::domain_error("aleksentsev_prefactor: n and d must be positive");
    const Real N = n, D = d;
    return 5.3L * std::numbers::e_v<Real> * std::sqrt(N) * (N + 1) * (N + 8) * (N + 8) * (N + 5) *
           std::pow(31.5L, N) * D * D * std::log(3 * N * D);
}

Real aleksentsev_rhs(unsigned n, unsigned d, Real E, const std::vector<Real>& A)
{
    if (!(E >= 3))
        throw std::domain_error("aleksentsev_rhs: E must be at least 3");
    if (A.size() != n)
        throw std::invalid_argument("aleksentsev_rhs: need exactly n heights");
    Real prod = aleksentsev_prefactor(n, d) * std::log(E);
    for (Real a : A) {
        if (!(a >= 1))
            throw std::domain_error("aleksentsev_rhs: every A_i must be at least 1");
        prod *= a;
    }
    return prod;
}

TripleKindParams kind_params(Subcase kind)
{
    TripleKindParams k;
    k.kind = kind;
    switch (kind) {
    case Subcase::Case2i:
        k.b_coeff = 0.25L;
        k.exp_num = 1;
        k.exp_den = 2;
        k.B0 = 1680;
        k.C0 = 1e8L;
        break;
    case Subcase::Case2ii:
        k.b_coeff = 0.5L;
        k.exp_num = 1;
        k.exp_den = 2;
        k.B0 = 21;
        k.C0 = 10208;
        break;
    case Subcase::Case2iii:
        k.b_coeff = std::pow(4.0L, -0.4L);
        k.exp_num = 2;
        k.exp_den = 5;
        k.B0 = 15;
        k.C0 = 32760;
        break;
    default:
        throw std::invalid_argument("kind_params: only 2(i), 2(ii), 2(iii) are supported");
    }
    const AlphaResult a = solve_alpha(k, k.B0, k.C0);
    k.kappa = a.kappa;
    k.p_num = a.p_num;
    k.p_den = a.p_den;
    return k;
}

Real chop_rhs(Real alpha, Real B, Real C)
{
    const Real m = alpha * std::sqrt(C / B);
    const Real BC = B * C;
    return m * std::sqrt(BC) * (std::sqrt(1 + 1 / BC) + std::sqrt(0.25L + 1 / BC)) + 0.75L * m * m;
}

AlphaResult solve_alpha(const TripleKindParams& kind, Real B0, Real C0)
{
    if (!(B0 >= 8))
        throw std::domain_error("solve_alpha: B0 must be at least 8");
    if (!(C0 > B0))
        throw std::domain_error("solve_alpha: C0 must exceed B0");
    // chop_rhs / C falls in both B and C, so (B0, C0) is the worst case.
    // The lambda = +1 branch needs m^2 < C, i.e. alpha^2 < B.
    auto admissible = [&](Real a) { return chop_rhs(a, B0, C0) < C0 && a * a < B0; };
    Real lo = 0, hi = 2;
    if (!admissible(1e-9L))
        throw std::domain_error("solve_alpha: no admissible alpha");
    while (hi - lo > 1e-12L) {
        const Real mid = (lo + hi) / 2;
        (admissible(mid) ? lo : hi) = mid;
    }
    AlphaResult r;
    r.alpha_exact = lo;
    r.alpha = truncate4(lo);
    r.kappa = truncate4(lo / std::sqrt(kind.b_coeff));
    // p = 1/2 - exp/2
    int num = kind.exp_den - kind.exp_num, den = 2 * kind.exp_den;
    const int g = std::gcd(num, den);
    r.p_num = num / g;
    r.p_den = den / g;
    return r;
}

InequalityRhs inequality_rhs(InequalityKind kind, const BoundParams& params)
{
    InequalityRhs r;
    r.g = eval_g(params);
    const Real pre = aleksentsev_prefactor(3, 4);
    if (kind == InequalityKind::General)
        r.K = pre * r.g.g1 * r.g.g1 * r.g.g4 / r.g.g6;
    else
        r.K = pre * r.g.h1 * r.g.h1 * r.g.h4 / r.g.g6;
    r.E_coeff = 2 / (r.g.g2 * std::log(params.C0));
    return r;
}

Real solve_C(Real kappa, Real p, Real K, Real E_coeff, Real C_lo, Real C_hi)
{
    if (!(K > 0 && kappa > 0 && p > 0 && E_coeff > 0))
        throw std::domain_error("solve_C: K, kappa, p and E_coeff must be positive");
    // holds(L): the inequality at C = e^L.
    auto holds = [&](Real L) {
        const Real j = 2 * kappa * std::exp(p * L);
        const Real lg = std::log(E_coeff * j);
        if (lg <= 0)
            return true;
        return j <= K * L * L * lg;
    };
    Real lo = std::log(C_lo), hi = std::log(C_hi);
    if (!holds(lo))
        throw NonCrossingError("solve_C: inequality already fails at the lower end");
    if (holds(hi))
        throw NonCrossingError("solve_C: inequality holds up to the current upper bound");
    while (hi - lo > 1e-7L * hi) {
        const Real mid = (lo + hi) / 2;
        (holds(mid) ? lo : hi) = mid;
    }
    return std::exp(hi);
}

IterationResult iterate_d_bound(const TripleKindParams& kind, Real initial_C1, Real A0, Real j0)
{
    if (!(kind.kappa > 0))
        throw std::invalid_argument("iterate_d_bound: kappa not set");
    IterationResult res;
    Real C1 = initial_C1;
    for (int i = 0; i < 50; ++i) {
        BoundParams bp;
        bp.A0 = A0;
        bp.B0 = kind.B0;
        bp.C0 = kind.C0;
        bp.C1 = C1;
        bp.j0 = j0;
        const InequalityRhs rhs = inequality_rhs(InequalityKind::SecondKind, bp);
        IterationStep step;
        step.index = i;
        step.C1 = C1;
        step.g = rhs.g;
        step.K = rhs.K;
        step.E_coeff = rhs.E_coeff;
        step.new_bound = solve_C(kind.kappa, kind.p(), rhs.K, rhs.E_coeff, kind.C0, C1);
        res.trace.push_back(step);
        if (step.new_bound > C1)
            throw DivergenceError("iterate_d_bound: bound increased");
        const Real change = (C1 - step.new_bound) / C1;
        C1 = step.new_bound;
        if (change < 1e-3L) {
            res.converged = true;
            break;
        }
    }
    res.d_bound = C1;
    return res;
}

}  // namespace dq
