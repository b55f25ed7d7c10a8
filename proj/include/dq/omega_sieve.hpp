#pragma once

// Segmented sieves for omega(n) and exact evaluation of the arithmetic sums
// that the explicit bounds are checked against.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/arith.hpp"

namespace dq {

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SieveConfig {
    std::uint64_t segment_size = 1u << 20;
    std::uint64_t memory_budget_bytes = 1ull << 31;
    unsigned threads = 1;
};

struct OmegaSegment {
    std::uint64_t lo = 1, hi = 1;
    std::vector<std::uint8_t> omega;

    std::uint8_t at(std::uint64_t n) const { return omega.at(n - lo); }
};

/// omega(n) for every n in [lo, hi].
OmegaSegment sieve_omega(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {});

enum class SumKind {
    TwoOmega,              // sum_{n<=N} 2^omega(n)
    FourOmega,             // sum_{n<=N} 4^omega(n)
    TwoOmegaOverN,         // sum_{n<=N} 2^omega(n)/n
    DivSqMinus1,           // sum_{n=2}^{N} d(n^2-1)
    DivSqPlus1,            // sum_{n=1}^{N} d(n^2+1)
    DivSqMinus1Restricted, // sum_{n=2}^{N} #{y <= A : y | n^2-1}
};

std::string to_string(SumKind k);
SumKind parse_sum_kind(const std::string& name);

struct SumValue {
    SumKind kind;
    std::uint64_t N = 0;
    std::optional<std::uint64_t> A;
    bool integral = true;
    BigInt exact;      // integral kinds
    Real approx = 0;   // all kinds
    Real error = 0;    // absolute error bound on approx (0 for integral kinds)
};

/// Exact value of the sum. Divisor sums of n^2 -+ 1 use the congruence-class
/// double count: every divisor y < n of n^2 -+ 1 pairs with one above n, and
/// the pairs are counted per modulus y from the square roots of +-1 mod y.
SumValue exact_sum(SumKind kind, std::uint64_t N, std::optional<std::uint64_t> A = std::nullopt,
                   const SieveConfig& config = {});

/// sum_{n<=N} 2^omega(n) by the sieve route only.
BigInt two_omega_sum_sieved(std::uint64_t N, const SieveConfig& config = {});

/// sum_{n<=N} 2^omega(n) = sum_{k <= sqrt N} mu(k) D(N / k^2), D the
/// divisor summatory function. Independent of the sieve.
BigInt two_omega_sum_hyperbola(std::uint64_t N);

/// sum_{n<=t} d(n)/n by the hyperbola method; *error receives an absolute bound.
Real divisor_over_n_sum(std::uint64_t t, Real* error = nullptr);

/// Number of x with 0 < x < b and x^2 = sign (mod b); sign is +1 or -1.
std::uint64_t count_unity_roots(std::uint64_t b, int sign);

struct ResidueCounterexample {
    std::uint64_t b;
    std::uint64_t count;
    std::uint64_t expected;
    std::string rule;
};

struct ResidueScanReport {
    std::uint64_t b_max = 0;
    std::uint64_t checked = 0;
    std::uint64_t vine_plus_violations = 0;
    std::uint64_t vine_minus_violations = 0;
    std::vector<ResidueCounterexample> counterexamples;
    /// count(+1) hits 2^(omega+1) exactly for these residues of b mod 8 only.
    std::vector<unsigned> classes_attaining_upper_bound;
};

/// For 2 <= b <= b_max: checks count(+1) <= 2^(omega(b)+1), count(-1) <= 2^omega(b),
/// and the conjectured exact counts 2^(omega+1) for b = 0 mod 8,
/// 2^(omega-1) for b = 2, 6 mod 8 and 2^omega otherwise.
ResidueScanReport residue_conjecture_scan(std::uint64_t b_max);

/// Largest k with the product of the first k primes <= X.
unsigned max_omega_below(const BigInt& X);

}  // namespace dq
