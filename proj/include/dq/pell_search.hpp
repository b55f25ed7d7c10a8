#pragma once

// Extension of Diophantine pairs {a, b} to triples via the Pell recurrence
// (t, s) -> (r t + b s, a t + r s), and the quadruple searches behind the
// minimal second elements of the 2(i)-2(iii) cases.

#include <cstdint>
#include <utility>
#include <vector>

#include "dq/arith.hpp"
#include "dq/tuple_core.hpp"

namespace dq {

/// One orbit of the recurrence for the pair {a, b}, r^2 = ab + 1.
/// Every state satisfies a t^2 - b s^2 = a - b; c = (s^2 - 1)/a = (t^2 - 1)/b
/// whenever both divisions are exact.
struct PellState {
    BigInt a, b, r;
    BigInt t, s;

    void step();
    bool has_integral_c() const;
    BigInt c() const;
    bool invariant_holds() const;
};

/// Representatives (t, s), t >= 0, s > 0, of every solution class of
/// a t^2 - b s^2 = a - b; all satisfy t^2 <= b (b - a).
std::vector<std::pair<BigInt, BigInt>> fundamental_solutions(const BigInt& a, const BigInt& b);

/// All c with b < c <= limit such that {a, b, c} is a Diophantine triple,
/// ascending. Requires a < b and ab + 1 a square (DiophantineError otherwise).
std::vector<BigInt> extend_pair(const BigInt& a, const BigInt& b, const BigInt& limit);

struct Quadruple {
    BigInt a, b, c, d;
    Subcase subcase;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

bool operator<(const Quadruple& x, const Quadruple& y);

enum class DiscardPolicy { Exclude, Keep };

struct SearchOptions {
    DiscardPolicy discards = DiscardPolicy::Exclude;
    unsigned threads = 1;
    std::uint64_t b_min = 2;
    /// Process b values in descending order (used to check order independence).
    bool reverse_order = false;
};

/// Quadruples {a, b, c, d_plus(a,b,c)} with b_min <= b <= b_max meeting the
/// given case of the quintuple split with {a, b, d} of the second kind.
/// With DiscardPolicy::Exclude, candidates whose pair {a, b} or triple
/// {a, b, c} is catalogued as a discard are dropped.
std::vector<Quadruple> search_quadruples(Subcase subcase, std::uint64_t b_max,
                                         const SearchOptions& options = {});

struct MinimalSecondElement {
    std::uint64_t B = 0;
    BigInt C;
    std::vector<Quadruple> witnesses;
};

/// Smallest b over (non-discarded) quadruples of the case, and the smallest
/// d among them. Throws std::runtime_error when b exceeds cap with no hit.
MinimalSecondElement min_second_element(Subcase subcase, std::uint64_t cap = 100000,
                                        unsigned threads = 1);

}  // namespace dq
