#include "dq/zeta.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dq {

namespace {

// B_2, B_4, ..., B_24
constexpr Real kBernoulli[] = {
    1.0L / 6,          -1.0L / 30,      1.0L / 42,        -1.0L / 30,       5.0L / 66,
    -691.0L / 2730,    7.0L / 6,        -3617.0L / 510,   43867.0L / 798,   -174611.0L / 330,
    854513.0L / 138,   -236364091.0L / 2730,
};

// x^(-m) * sum_j c[j] log^j x
struct LogPoly {
    Real m;
    std::vector<Real> c;

    LogPoly derivative() const
    {
        LogPoly d{m + 1, std::vector<Real>(c.size(), 0)};
        for (std::size_t j = 0; j < c.size(); ++j) {
            d.c[j] -= m * c[j];
            if (j + 1 < c.size())
                d.c[j] += static_cast<Real>(j + 1) * c[j + 1];
        }
        return d;
    }

    Real at(Real x) const
    {
        const Real L = std::log(x);
        Real acc = 0;
        for (std::size_t j = c.size(); j-- > 0;)
            acc = acc * L + c[j];
        return acc * std::pow(x, -m);
    }
};

}  // namespace

ZetaValue zeta_derivative_at(unsigned k, Real s, unsigned cutoff, unsigned corrections)
{
    if (!(s > 1))
        throw std::domain_error("zeta_derivative_at: need s > 1");
    if (cutoff < 2)
        throw std::invalid_argument("zeta_derivative_at: cutoff must be at least 2");
    constexpr unsigned kMaxCorrections = sizeof(kBernoulli) / sizeof(kBernoulli[0]) - 1;
    if (corrections > kMaxCorrections)
        corrections = kMaxCorrections;

    const Real M = static_cast<Real>(cutoff);
    Real head = 0;
    for (unsigned n = 1; n < cutoff; ++n)
        head += std::pow(std::log(static_cast<Real>(n)), static_cast<Real>(k)) * std::pow(static_cast<Real>(n), -s);

    // Integral of log^k x * x^(-s) over [M, inf).
    const Real LM = std::log(M);
    Real integral = 0, fall = 1;
    for (unsigned i = 0; i <= k; ++i) {
        integral += fall * std::pow(LM, static_cast<Real>(k - i)) / std::pow(s - 1, static_cast<Real>(i + 1));
        fall *= static_cast<Real>(k - i);
    }
    integral *= std::pow(M, 1 - s);

    LogPoly f{s, std::vector<Real>(k + 1, 0)};
    f.c[k] = 1;
    Real tail = integral + f.at(M) / 2;

    LogPoly d = f.derivative();
    Real factorial = 2;  // (2j)!
    Real next = 0;
    for (unsigned j = 1; j <= corrections + 1; ++j) {
        const Real term = kBernoulli[j - 1] / factorial * d.at(M);
        if (j <= corrections)
            tail -= term;
        else
            next = term;
        d = d.derivative().derivative();
        factorial *= static_cast<Real>((2 * j + 1) * (2 * j + 2));
    }

    const Real sign = (k % 2) ? -1 : 1;
    ZetaValue out;
    out.value = sign * (head + tail);
    out.error = std::fabs(next) + 8 * M * LDBL_EPSILON * std::fabs(head + tail);
    return out;
}

ZetaValue zeta_derivative(unsigned order)
{
    if (order != 1 && order != 2)
        throw std::invalid_argument("zeta_derivative: order must be 1 or 2");
    return zeta_derivative_at(order, 2);
}

Real zeta(Real s)
{
    return zeta_derivative_at(0, s).value;
}

}  // namespace dq
