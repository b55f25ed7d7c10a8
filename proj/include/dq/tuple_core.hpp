#pragma once

// Diophantine m-tuples: exact predicates, the regular extension d+,
// Fujita's triple kinds, the quintuple case split and the catalogue of
// pairs and triples known to extend only to regular quadruples.

#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/arith.hpp"

namespace dq {

class DiophantineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Strictly increasing sequence of 2..5 positive integers.
class Tuple {
public:
    explicit Tuple(std::vector<BigInt> elements);
    Tuple(std::initializer_list<long long> elements);

    /// Sorts the input first; still rejects repeated elements.
    static Tuple from_unsorted(std::vector<BigInt> elements);

    const std::vector<BigInt>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const BigInt& operator[](std::size_t i) const { return elements_[i]; }

    std::string to_string() const;
    friend bool operator==(const Tuple&, const Tuple&) = default;

private:
    std::vector<BigInt> elements_;
};

struct PellRoots {
    BigInt r, s, t;
};

/// r = sqrt(ab+1), s = sqrt(ac+1), t = sqrt(bc+1); throws DiophantineError
/// if any radicand is not a perfect square.
PellRoots pell_roots(const BigInt& a, const BigInt& b, const BigInt& c);

bool is_diophantine(const Tuple& t);

/// a + b + c + 2abc + 2rst.
BigInt d_plus(const BigInt& a, const BigInt& b, const BigInt& c);

bool is_regular_quadruple(const Tuple& t);

enum class TripleKind { FirstKind, SecondKind, ThirdKind, Unclassified };

enum class Subcase { Case1, Case2i, Case2ii, Case2iii, Case2iv, Case3 };

struct TripleClass {
    TripleKind kind = TripleKind::Unclassified;
    std::optional<Subcase> subcase;
};

std::string to_string(TripleKind k);
std::string to_string(Subcase s);
/// Accepts "1", "2i", "2ii", "2iii", "2iv", "3" (case-insensitive, optional "(...)").
Subcase parse_subcase(const std::string& label);

/// Pure inequality test on (a, b, c), 0 < a < b < c. Boundary conventions:
///   first  c > b^5
///   second b > 4a and b^2 <= c <= b^5
///   third  b > 12a and b^(5/3) < c < b^2   (tested as c^3 > b^5)
TripleClass classify_triple(const BigInt& a, const BigInt& b, const BigInt& c);

/// Which alternatives of the quintuple case split the quadruple's data meets.
/// Cases 1 and 2(i)-2(iii) look at {a,b,d}; 2(iv) and 3 look at {a,c,d}.
/// Throws DiophantineError unless {a,b,c,d} is a Diophantine quadruple.
std::set<Subcase> classify_quintuple_case(const BigInt& a, const BigInt& b, const BigInt& c,
                                          const BigInt& d);

enum class DiscardFamilyId {
    TwinPair,           // {k, k+2}, k >= 1
    FibonacciTriple,    // {F(2k), F(2k+2), F(2k+4)}, k >= 1
    KedlayaTriple,      // the five sporadic triples
    HeTogbePeriodic,    // {k+1, 4k, 9k+3}, k >= 1
    HeTogbeToggle,      // {k, A^2 k + 2A, (A+1)^2 k + 2(A+1)}, A in [1,10] or A >= 52330
    SquareMinusOnePair, // {k^2 - 1, k^2 + 2k}, k >= 2
    TwoSquarePair,      // {2k^2 - 2k, 2k^2 + 2k}, k >= 2
    FourKMinusFour,     // {k, 4k - 4}, k >= 2
    ThreeSquareMinus,   // {3k^2 - 2k, 3k^2 + 4k + 1}, k >= 1
    ThreeSquarePlus,    // {3k^2 + 2k, 3k^2 + 8k + 5}, k >= 1
    FourKPlusFour,      // {k, 4k + 4}, k >= 1
};

struct DiscardFamily {
    DiscardFamilyId id;
    BigInt k;
    std::optional<BigInt> A;

    std::string describe() const;
};

std::string to_string(DiscardFamilyId id);

/// Range of A for which the toggle family is a proven discard.
bool toggle_parameter_proven(const BigInt& A);

/// Matching catalogue entry for a pair or triple, if any.
std::optional<DiscardFamily> is_discard(const Tuple& t);

/// Member of a family for the given parameters. For the Kedlaya family k
/// selects one of the five triples (k = 1..5). Throws std::invalid_argument
/// outside the family's parameter range.
Tuple instantiate_discard(DiscardFamilyId id, const BigInt& k, const BigInt& A = 0);

}  // namespace dq
