#pragma once

// Closed-form upper bounds for the arithmetic sums, the convolution constants
// behind them, and a harness that checks the bounds against exact sums.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dq/omega_sieve.hpp"
#include "dq/zeta.hpp"

namespace dq {

inline constexpr Real kEulerGammaConst = 0.577215664901533L;
inline constexpr Real kStieltjesGamma1 = -0.0728158454836767L;

enum class BoundId {
    EFF31,          // sum 2^omega(n) < N(log N + 1), N >= 3
    EFF33,          // sum 4^omega(n) < (N/6)(log N + 2)^3
    Lem9,           // sum_{n=2}^N d(n^2-1) < 2N(log^2 N + 4 log N + 2)
    Lem10,          // sum d(n^2-1, A) <= 2N(log^2 A + 4 log A + 2)
    Lem10a,         // sum_{n=1}^N d(n^2+1) <= N(log^2 N + 4 log N + 2)
    BourbonOverN,   // sum 2^omega(n)/n
    BourbonLinear,  // sum 2^omega(n)
    Peter,          // |sum d(n)/n - main term| <= 1.16 t^(-1/3)
    Core3,          // sum d(n^2-1, A) <= 4N(bourbon bracket at A)
    Lem14,          // sum_{n=2}^N d(n^2-1) <= 4N(bourbon bracket at N)
    Lem15,          // sum_{n=2}^N d(n^2+1) < 2N(bourbon bracket at N)
};

std::string to_string(BoundId id);
BoundId parse_bound_id(const std::string& name);
const std::vector<BoundId>& all_bound_ids();
bool needs_A(BoundId id);

/// Constants as printed.
struct Published {
    static constexpr Real v = 1.3949L;
    static constexpr Real w = 0.4107L;
    static constexpr Real err_over_n = 3.253L;
    static constexpr Real V = 0.787L;
    static constexpr Real W = -0.3762L;
    static constexpr Real err_linear = 8.14L;
};

/// 3/pi^2 log^2 x + 1.3949 log x + 0.4107 + 3.253 x^(-1/3)
Real bourbon_bracket(Real x);

/// The bound evaluated with a small upward slack. Throws std::domain_error
/// outside the validity range.
Real bound_value(BoundId id, Real N, std::optional<Real> A = std::nullopt);

/// 1/2 log^2 t + 2 gamma log t + gamma^2 - 2 gamma_1
Real peter_main_term(Real t);

struct SumReport {
    BoundId id;
    std::uint64_t N = 0;
    std::optional<std::uint64_t> A;
    bool integral = true;
    BigInt exact_int;     // integral sums
    Real exact = 0;       // for Peter: |sum - main term|
    Real exact_error = 0;
    Real bound = 0;
    Real margin = 0;      // bound - exact
    bool violated = false;
};

class BoundHarness {
public:
    explicit BoundHarness(SieveConfig config = {}) : config_(config) {}

    SumReport verify(BoundId id, std::uint64_t N, std::optional<std::uint64_t> A = std::nullopt);

    /// Every id at every N; restricted lemmas are checked at A = floor(sqrt N) and A = N.
    std::vector<SumReport> ladder(const std::vector<BoundId>& ids, const std::vector<std::uint64_t>& Ns);

private:
    const SumValue& sum(SumKind kind, std::uint64_t N, std::optional<std::uint64_t> A);

    SieveConfig config_;
    std::map<std::tuple<int, std::uint64_t, std::uint64_t>, SumValue> cache_;
};

SumReport verify_bound(BoundId id, std::uint64_t N, std::optional<std::uint64_t> A = std::nullopt,
                       const SieveConfig& config = {});

struct ConvolutionInput {
    Real A = 0, B = 0, C = 0, D = 0;
    Real H0 = 0, H1 = 0, H2 = 0;
    std::optional<Real> Hstar;  // H*(-1/3)
};

struct ConvolutionOutput {
    Real u = 0, v = 0, w = 0;
    Real U = 0, V = 0, W = 0;
    std::optional<Real> err_over_n, err_linear;
};

ConvolutionOutput convolution_constants(const ConvolutionInput& in);

/// Inputs for g = 2^omega(n)/n, k = d(n)/n, H(s) = 1/zeta(2s+2).
ConvolutionInput two_omega_convolution_input();

struct ConstantCheck {
    std::string name;
    Real derived = 0;
    Real rounded = 0;   // derived rounded upward to the printed decimals
    Real printed = 0;
    int decimals = 0;
    bool ok = false;    // |rounded - printed| <= one unit in the last place
};

std::vector<ConstantCheck> check_published_constants(const ConvolutionOutput& out);

struct EulerProduct {
    Real value = 0;
    Real error = 0;
    std::uint64_t cutoff = 0;
};

/// prod_p (1 - 6p^-2 + 8p^-3 - 3p^-4), primes <= cutoff plus a tail correction.
EulerProduct euler_product_4omega(std::uint64_t cutoff = 1000000);

/// H'(0) of the same product: H(0) * sum_p (12p^-2 - 24p^-3 + 12p^-4) log p / local factor.
EulerProduct euler_product_4omega_derivative(std::uint64_t cutoff = 1000000);

struct PontifexPoint {
    std::uint64_t x = 0;
    BigInt exact;
    Real main = 0;
    Real ratio = 0;
};

struct PontifexReport {
    Real H0 = 0, H1 = 0;
    Real leading = 0;  // H(0)/6
    std::vector<PontifexPoint> points;
    bool deviation_decreasing = false;
};

/// Compares sum 4^omega(n) with H(0)/6 x log^3 x + ((2 gamma - 1/2) H(0) + H'(0)/2) x log^2 x.
PontifexReport pontifex_leading_check(const std::vector<std::uint64_t>& xs, const SieveConfig& config = {});

}  // namespace dq
