#include "dq/explicit_bounds.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dq {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr Real kSlack = 1e-15L;

Real round_up(Real x)
{
    return x + std::fabs(x) * kSlack;
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw std::domain_error(what);
}

}  // namespace

std::string to_string(BoundId id)
{
    switch (id) {
    case BoundId::EFF31: return "EFF31";
    case BoundId::EFF33: return "EFF33";
    case BoundId::Lem9: return "Lem9";
    case BoundId::Lem10: return "Lem10";
    case BoundId::Lem10a: return "Lem10a";
    case BoundId::BourbonOverN: return "BourbonOverN";
    case BoundId::BourbonLinear: return "BourbonLinear";
    case BoundId::Peter: return "Peter";
    case BoundId::Core3: return "Core3";
    case BoundId::Lem14: return "Lem14";
    case BoundId::Lem15: return "Lem15";
    }
    return "?";
}

const std::vector<BoundId>& all_bound_ids()
{
    static const std::vector<BoundId> ids = {
        BoundId::EFF31,        BoundId::EFF33,         BoundId::Lem9,  BoundId::Lem10,
        BoundId::Lem10a,       BoundId::BourbonOverN,  BoundId::BourbonLinear,
        BoundId::Peter,        BoundId::Core3,         BoundId::Lem14, BoundId::Lem15,
    };
    return ids;
}

BoundId parse_bound_id(const std::string& name)
{
    for (auto id : all_bound_ids())
        if (to_string(id) == name)
            return id;
    throw std::invalid_argument("unknown bound id: " + name);
}

bool needs_A(BoundId id)
{
    return id == BoundId::Lem10 || id == BoundId::Core3;
}

Real bourbon_bracket(Real x)
{
    const Real L = std::log(x);
    return 3 / (kPi * kPi) * L * L + Published::v * L + Published::w + Published::err_over_n * std::pow(x, -1.0L / 3);
}

Real peter_main_term(Real t)
{
    const Real L = std::log(t);
    const Real g = kEulerGammaConst;
    return L * L / 2 + 2 * g * L + g * g - 2 * kStieltjesGamma1;
}

Real bound_value(BoundId id, Real N, std::optional<Real> A)
{
    require(std::isfinite(N), "bound_value: N must be finite");
    if (needs_A(id) != A.has_value())
        throw std::invalid_argument("bound_value: A is required exactly for Lem10 and Core3");
    const Real L = N > 0 ? std::log(N) : 0;
    switch (id) {
    case BoundId::EFF31:
        require(N >= 3, "EFF31 needs N >= 3");
        return round_up(N * (L + 1));
    case BoundId::EFF33:
        require(N >= 1, "EFF33 needs N >= 1");
        return round_up(N / 6 * std::pow(L + 2, 3));
    case BoundId::Lem9:
        require(N >= 2, "Lem9 needs N >= 2");
        return round_up(2 * N * (L * L + 4 * L + 2));
    case BoundId::Lem10: {
        require(N >= 1 && *A >= 1, "Lem10 needs N >= 1 and A >= 1");
        const Real LA = std::log(*A);
        return round_up(2 * N * (LA * LA + 4 * LA + 2));
    }
    case BoundId::Lem10a:
        require(N >= 2, "Lem10a needs N >= 2");
        return round_up(N * (L * L + 4 * L + 2));
    case BoundId::BourbonOverN:
        require(N >= 1, "BourbonOverN needs x >= 1");
        return round_up(bourbon_bracket(N));
    case BoundId::BourbonLinear:
        require(N > 1, "BourbonLinear needs x > 1");
        return round_up(6 / (kPi * kPi) * N * L + Published::V * N + Published::W +
                        Published::err_linear * std::pow(N, 2.0L / 3));
    case BoundId::Peter:
        require(N > 0, "Peter needs t > 0");
        return round_up(1.16L * std::pow(N, -1.0L / 3));
    case BoundId::Core3:
        require(N >= 1 && *A > 1, "Core3 needs N >= 1 and A > 1");
        return round_up(4 * N * bourbon_bracket(*A));
    case BoundId::Lem14:
        require(N >= 1, "Lem14 needs N >= 1");
        return round_up(4 * N * bourbon_bracket(N));
    case BoundId::Lem15:
        require(N >= 2, "Lem15 needs N >= 2");
        return round_up(2 * N * bourbon_bracket(N));
    }
    throw std::invalid_argument("bound_value: unknown id");
}

const SumValue& BoundHarness::sum(SumKind kind, std::uint64_t N, std::optional<std::uint64_t> A)
{
    const auto key = std::make_tuple(static_cast<int>(kind), N, A.value_or(0));
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, exact_sum(kind, N, A, config_)).first;
    return it->second;
}

SumReport BoundHarness::verify(BoundId id, std::uint64_t N, std::optional<std::uint64_t> A)
{
    SumReport r;
    r.id = id;
    r.N = N;
    r.A = A;
    std::optional<Real> Areal;
    if (A)
        Areal = static_cast<Real>(*A);
    r.bound = bound_value(id, static_cast<Real>(N), Areal);

    auto take = [&](const SumValue& v) {
        r.integral = v.integral;
        r.exact_int = v.exact;
        r.exact = v.approx;
        r.exact_error = v.error;
    };
    switch (id) {
    case BoundId::EFF31:
    case BoundId::BourbonLinear:
        take(sum(SumKind::TwoOmega, N, std::nullopt));
        break;
    case BoundId::EFF33:
        take(sum(SumKind::FourOmega, N, std::nullopt));
        break;
    case BoundId::Lem9:
    case BoundId::Lem14:
        take(sum(SumKind::DivSqMinus1, N, std::nullopt));
        break;
    case BoundId::Lem10:
    case BoundId::Core3:
        take(sum(SumKind::DivSqMinus1Restricted, N, A));
        break;
    case BoundId::Lem10a:
        take(sum(SumKind::DivSqPlus1, N, std::nullopt));
        break;
    case BoundId::Lem15: {
        // Drop the n = 1 term d(2) = 2.
        SumValue v = sum(SumKind::DivSqPlus1, N, std::nullopt);
        v.exact -= 2;
        v.approx = to_real(v.exact);
        take(v);
        break;
    }
    case BoundId::BourbonOverN:
        take(sum(SumKind::TwoOmegaOverN, N, std::nullopt));
        break;
    case BoundId::Peter: {
        Real err = 0;
        const Real s = divisor_over_n_sum(N, &err);
        const Real main = peter_main_term(static_cast<Real>(N));
        r.integral = false;
        r.exact = std::fabs(s - main);
        r.exact_error = err + 16 * LDBL_EPSILON * std::fabs(main) + 1e-15L;
        break;
    }
    }
    r.margin = r.bound - r.exact;
    r.violated = r.margin < -r.exact_error;
    return r;
}

std::vector<SumReport> BoundHarness::ladder(const std::vector<BoundId>& ids, const std::vector<std::uint64_t>& Ns)
{
    std::vector<SumReport> out;
    for (auto N : Ns) {
        for (auto id : ids) {
            if (needs_A(id)) {
                std::vector<std::uint64_t> As = {isqrt_u64(N), N};
                if (As[0] == As[1])
                    As.pop_back();
                for (auto A : As)
                    if (A > 1)
                        out.push_back(verify(id, N, A));
            } else {
                out.push_back(verify(id, N));
            }
        }
    }
    return out;
}

SumReport verify_bound(BoundId id, std::uint64_t N, std::optional<std::uint64_t> A, const SieveConfig& config)
{
    BoundHarness h(config);
    return h.verify(id, N, A);
}

ConvolutionOutput convolution_constants(const ConvolutionInput& in)
{
    if (in.D < 0)
        throw std::invalid_argument("convolution_constants: D must be non-negative");
    ConvolutionOutput o;
    o.u = in.A * in.H0;
    o.v = 2 * in.A * in.H1 + in.B * in.H0;
    o.w = in.A * in.H2 + in.B * in.H1 + in.C * in.H0;
    o.U = 2 * in.A * in.H0;
    o.V = -2 * in.A * in.H0 + 2 * in.A * in.H1 + in.B * in.H0;
    o.W = in.A * (in.H2 - 2 * in.H1 + 2 * in.H0) + in.B * (in.H1 - in.H0) + in.C * in.H0;
    if (in.Hstar) {
        o.err_over_n = in.D * *in.Hstar;
        o.err_linear = 2.5L * in.D * *in.Hstar;
    }
    return o;
}

ConvolutionInput two_omega_convolution_input()
{
    const Real z1 = zeta_derivative(1).value;
    const Real z2 = zeta_derivative(2).value;
    const Real pi2 = kPi * kPi, pi4 = pi2 * pi2, pi6 = pi4 * pi2;
    const Real g = kEulerGammaConst;
    ConvolutionInput in;
    in.A = 0.5L;
    in.B = 2 * g;
    in.C = g * g - 2 * kStieltjesGamma1;
    in.D = 1.16L;
    in.H0 = 6 / pi2;
    in.H1 = -72 * z1 / pi4;
    in.H2 = 1728 * z1 * z1 / pi6 - 144 * z2 / pi4;
    in.Hstar = zeta(4.0L / 3) / zeta(8.0L / 3);
    return in;
}

std::vector<ConstantCheck> check_published_constants(const ConvolutionOutput& out)
{
    auto make = [](std::string name, Real derived, Real printed, int decimals) {
        ConstantCheck c;
        c.name = std::move(name);
        c.derived = derived;
        c.printed = printed;
        c.decimals = decimals;
        const Real scale = std::pow(10.0L, static_cast<Real>(decimals));
        c.rounded = std::ceil(derived * scale) / scale;
        c.ok = std::fabs(c.rounded - printed) <= (1 + 1e-9L) / scale;
        return c;
    };
    std::vector<ConstantCheck> v;
    v.push_back(make("v", out.v, Published::v, 4));
    v.push_back(make("w", out.w, Published::w, 4));
    v.push_back(make("err_over_n", out.err_over_n.value_or(NAN), Published::err_over_n, 3));
    v.push_back(make("V", out.V, Published::V, 3));
    v.push_back(make("W", out.W, Published::W, 4));
    v.push_back(make("err_linear", out.err_linear.value_or(NAN), Published::err_linear, 2));
    return v;
}

EulerProduct euler_product_4omega(std::uint64_t cutoff)
{
    if (cutoff < 100)
        throw std::invalid_argument("euler_product_4omega: cutoff must be at least 100");
    Real logsum = 0;
    for (auto p : primes_up_to(static_cast<std::uint32_t>(cutoff))) {
        const Real x = Real(1) / p;
        logsum += 3 * std::log1p(-x) + std::log1p(3 * x);
    }
    const Real P = static_cast<Real>(cutoff);
    // Local log factor is -6/p^2 + O(p^-3); the prime tail of p^-2 is about 1/(P log P).
    logsum += -6 / (P * std::log(P));
    EulerProduct e;
    e.cutoff = cutoff;
    e.value = std::exp(logsum);
    e.error = e.value * std::expm1(7 / P) + 64 * LDBL_EPSILON * e.value * std::log(P);
    return e;
}

EulerProduct euler_product_4omega_derivative(std::uint64_t cutoff)
{
    const EulerProduct h0 = euler_product_4omega(cutoff);
    Real s = 0;
    for (auto p : primes_up_to(static_cast<std::uint32_t>(cutoff))) {
        const Real x = Real(1) / p;
        const Real local = (1 - x) * (1 - x) * (1 - x) * (1 + 3 * x);
        s += 12 * x * x * (1 - x) * (1 - x) * std::log(static_cast<Real>(p)) / local;
    }
    const Real P = static_cast<Real>(cutoff);
    s += 12 / P;
    EulerProduct e;
    e.cutoff = cutoff;
    e.value = h0.value * s;
    e.error = h0.value * 30 / P + std::fabs(s) * h0.error;
    return e;
}

PontifexReport pontifex_leading_check(const std::vector<std::uint64_t>& xs, const SieveConfig& config)
{
    PontifexReport rep;
    rep.H0 = euler_product_4omega().value;
    rep.H1 = euler_product_4omega_derivative().value;
    rep.leading = rep.H0 / 6;
    const Real second = (2 * kEulerGammaConst - 0.5L) * rep.H0 + rep.H1 / 2;
    for (auto x : xs) {
        if (x < 10)
            throw std::domain_error("pontifex_leading_check: x must be at least 10");
        PontifexPoint pt;
        pt.x = x;
        pt.exact = exact_sum(SumKind::FourOmega, x, std::nullopt, config).exact;
        const Real X = static_cast<Real>(x), L = std::log(X);
        pt.main = rep.leading * X * L * L * L + second * X * L * L;
        pt.ratio = to_real(pt.exact) / pt.main;
        rep.points.push_back(pt);
    }
    rep.deviation_decreasing = rep.points.size() >= 2;
    for (std::size_t i = 1; i < rep.points.size(); ++i)
        if (std::fabs(rep.points[i].ratio - 1) >= std::fabs(rep.points[i - 1].ratio - 1))
            rep.deviation_decreasing = false;
    return rep;
}

}  // namespace dq
