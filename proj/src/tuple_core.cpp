#include "dq/tuple_core.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace dq {

namespace {

BigInt pow_big(const BigInt& b, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

void check_shape(const std::vector<BigInt>& v)
{
    if (v.size() < 2 || v.size() > 5)
        throw std::invalid_argument("tuple length must be between 2 and 5");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1)
            throw std::invalid_argument("tuple elements must be positive");
        if (i > 0 && v[i] == v[i - 1])
            throw std::invalid_argument("tuple elements must be distinct");
        if (i > 0 && v[i] < v[i - 1])
            throw std::invalid_argument("tuple elements must be increasing");
    }
}

bool is_second_kind(const BigInt& a, const BigInt& b, const BigInt& c)
{
    return b > 4 * a && b * b <= c && c <= pow_big(b, 5);
}

bool is_third_kind(const BigInt& a, const BigInt& b, const BigInt& c)
{
    return b > 12 * a && c * c * c > pow_big(b, 5) && c < b * b;
}

// Solves x = alpha k^2 + beta k for a positive integer k, if one exists.
std::optional<BigInt> solve_quadratic_param(const BigInt& x, long alpha, long beta)
{
    // k = (-beta + sqrt(beta^2 + 4 alpha x)) / (2 alpha)
    BigInt disc = BigInt(beta) * beta + 4 * BigInt(alpha) * x;
    auto sq = integer_sqrt(disc);
    if (!sq.exact)
        return std::nullopt;
    BigInt num = sq.root - beta;
    if (num <= 0 || num % (2 * alpha) != 0)
        return std::nullopt;
    return BigInt(num / (2 * alpha));
}

const std::array<std::array<long, 3>, 5> kKedlaya{{
    {1, 8, 15}, {1, 8, 120}, {1, 15, 24}, {1, 24, 35}, {2, 12, 24},
}};

std::optional<DiscardFamily> pair_discard(const BigInt& x, const BigInt& y)
{
    using Id = DiscardFamilyId;
    if (y == x + 2)
        return DiscardFamily{Id::TwinPair, x, std::nullopt};
    if (auto k = solve_quadratic_param(x + 1, 1, 0); k && *k >= 2 && y == *k * *k + 2 * *k)
        return DiscardFamily{Id::SquareMinusOnePair, *k, std::nullopt};
    if (auto k = solve_quadratic_param(x, 2, -2); k && *k >= 2 && y == 2 * *k * *k + 2 * *k)
        return DiscardFamily{Id::TwoSquarePair, *k, std::nullopt};
    if (x >= 2 && y == 4 * x - 4)
        return DiscardFamily{Id::FourKMinusFour, x, std::nullopt};
    if (auto k = solve_quadratic_param(x, 3, -2); k && y == 3 * *k * *k + 4 * *k + 1)
        return DiscardFamily{Id::ThreeSquareMinus, *k, std::nullopt};
    if (auto k = solve_quadratic_param(x, 3, 2); k && y == 3 * *k * *k + 8 * *k + 5)
        return DiscardFamily{Id::ThreeSquarePlus, *k, std::nullopt};
    if (y == 4 * x + 4)
        return DiscardFamily{Id::FourKPlusFour, x, std::nullopt};
    return std::nullopt;
}

std::optional<DiscardFamily> triple_discard(const BigInt& x, const BigInt& y, const BigInt& z)
{
    using Id = DiscardFamilyId;
    for (std::size_t i = 0; i < kKedlaya.size(); ++i) {
        if (x == kKedlaya[i][0] && y == kKedlaya[i][1] && z == kKedlaya[i][2])
            return DiscardFamily{Id::KedlayaTriple, BigInt(static_cast<long>(i + 1)), std::nullopt};
    }
    // Even-index Fibonacci triples.
    std::vector<BigInt> fib{0, 1};
    while (fib.back() <= z)
        fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    for (std::size_t i = 2; i + 4 < fib.size(); i += 2) {
        if (fib[i] == x && fib[i + 2] == y && fib[i + 4] == z)
            return DiscardFamily{Id::FibonacciTriple, BigInt(static_cast<long>(i / 2)), std::nullopt};
        if (fib[i] > x)
            break;
    }
    if (x >= 2) {
        BigInt k = x - 1;
        if (y == 4 * k && z == 9 * k + 3)
            return DiscardFamily{Id::HeTogbePeriodic, k, std::nullopt};
    }
    // y = A^2 x + 2A  =>  A = (sqrt(1 + x y) - 1) / x
    auto sq = integer_sqrt(1 + x * y);
    if (sq.exact && (sq.root - 1) % x == 0) {
        BigInt A = (sq.root - 1) / x;
        if (A >= 1 && z == (A + 1) * (A + 1) * x + 2 * (A + 1) && toggle_parameter_proven(A))
            return DiscardFamily{Id::HeTogbeToggle, x, A};
    }
    return std::nullopt;
}

}  // namespace

Tuple::Tuple(std::vector<BigInt> elements) : elements_(std::move(elements))
{
    check_shape(elements_);
}

Tuple::Tuple(std::initializer_list<long long> elements)
{
    for (auto e : elements)
        elements_.emplace_back(static_cast<long>(e));
    check_shape(elements_);
}

Tuple Tuple::from_unsorted(std::vector<BigInt> elements)
{
    std::sort(elements.begin(), elements.end());
    return Tuple(std::move(elements));
}

std::string Tuple::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i)
        os << (i ? ", " : "") << elements_[i];
    os << '}';
    return os.str();
}

PellRoots pell_roots(const BigInt& a, const BigInt& b, const BigInt& c)
{
    auto r = integer_sqrt(a * b + 1);
    auto s = integer_sqrt(a * c + 1);
    auto t = integer_sqrt(b * c + 1);
    if (!r.exact || !s.exact || !t.exact)
        throw DiophantineError("not a Diophantine triple");
    return {r.root, s.root, t.root};
}

bool is_diophantine(const Tuple& t)
{
    const auto& v = t.elements();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!is_square(v[i] * v[j] + 1))
                return false;
    return true;
}

BigInt d_plus(const BigInt& a, const BigInt& b, const BigInt& c)
{
    auto [r, s, t] = pell_roots(a, b, c);
    return a + b + c + 2 * a * b * c + 2 * r * s * t;
}

bool is_regular_quadruple(const Tuple& t)
{
    if (t.size() != 4)
        throw std::invalid_argument("is_regular_quadruple: expected 4 elements");
    return t[3] == d_plus(t[0], t[1], t[2]);
}

std::string to_string(TripleKind k)
{
    switch (k) {
    case TripleKind::FirstKind: return "first";
    case TripleKind::SecondKind: return "second";
    case TripleKind::ThirdKind: return "third";
    case TripleKind::Unclassified: return "unclassified";
    }
    return "?";
}

std::string to_string(Subcase s)
{
    switch (s) {
    case Subcase::Case1: return "1";
    case Subcase::Case2i: return "2i";
    case Subcase::Case2ii: return "2ii";
    case Subcase::Case2iii: return "2iii";
    case Subcase::Case2iv: return "2iv";
    case Subcase::Case3: return "3";
    }
    return "?";
}

Subcase parse_subcase(const std::string& label)
{
    std::string s;
    for (char ch : label)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')')
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (s == "1") return Subcase::Case1;
    if (s == "2i") return Subcase::Case2i;
    if (s == "2ii") return Subcase::Case2ii;
    if (s == "2iii") return Subcase::Case2iii;
    if (s == "2iv") return Subcase::Case2iv;
    if (s == "3") return Subcase::Case3;
    throw std::invalid_argument("unknown subcase label: " + label);
}

TripleClass classify_triple(const BigInt& a, const BigInt& b, const BigInt& c)
{
    if (!(0 < a && a < b && b < c))
        throw std::invalid_argument("classify_triple: expected 0 < a < b < c");
    if (c > pow_big(b, 5))
        return {TripleKind::FirstKind, std::nullopt};
    if (is_second_kind(a, b, c))
        return {TripleKind::SecondKind, std::nullopt};
    if (is_third_kind(a, b, c))
        return {TripleKind::ThirdKind, std::nullopt};
    return {TripleKind::Unclassified, std::nullopt};
}

std::set<Subcase> classify_quintuple_case(const BigInt& a, const BigInt& b, const BigInt& c,
                                          const BigInt& d)
{
    Tuple q({a, b, c, d});
    if (!is_diophantine(q))
        throw DiophantineError("classify_quintuple_case: not a Diophantine quadruple");

    std::set<Subcase> out;
    const BigInt r = integer_sqrt(a * b + 1).root;

    if (d > pow_big(b, 5))
        out.insert(Subcase::Case1);
    if (is_second_kind(a, b, d)) {
        if (4 * a * b + a + b <= c && c * c <= b * b * b)
            out.insert(Subcase::Case2i);
        if (c == a + b + 2 * r)
            out.insert(Subcase::Case2ii);
        if (c * c > b * b * b)
            out.insert(Subcase::Case2iii);
    }
    if (is_second_kind(a, c, d) && b < 4 * a && c == a + b + 2 * r)
        out.insert(Subcase::Case2iv);
    if (is_third_kind(a, c, d) && b < 4 * a && c == (4 * a * b + 2) * (a + b - 2 * r) + 2 * (a + b))
        out.insert(Subcase::Case3);
    return out;
}

std::string to_string(DiscardFamilyId id)
{
    switch (id) {
    case DiscardFamilyId::TwinPair: return "{k, k+2}";
    case DiscardFamilyId::FibonacciTriple: return "{F(2k), F(2k+2), F(2k+4)}";
    case DiscardFamilyId::KedlayaTriple: return "Kedlaya triple";
    case DiscardFamilyId::HeTogbePeriodic: return "{k+1, 4k, 9k+3}";
    case DiscardFamilyId::HeTogbeToggle: return "{k, A^2k+2A, (A+1)^2k+2(A+1)}";
    case DiscardFamilyId::SquareMinusOnePair: return "{k^2-1, k^2+2k}";
    case DiscardFamilyId::TwoSquarePair: return "{2k^2-2k, 2k^2+2k}";
    case DiscardFamilyId::FourKMinusFour: return "{k, 4k-4}";
    case DiscardFamilyId::ThreeSquareMinus: return "{3k^2-2k, 3k^2+4k+1}";
    case DiscardFamilyId::ThreeSquarePlus: return "{3k^2+2k, 3k^2+8k+5}";
    case DiscardFamilyId::FourKPlusFour: return "{k, 4k+4}";
    }
    return "?";
}

std::string DiscardFamily::describe() const
{
    std::ostringstream os;
    os << to_string(id) << " k=" << k;
    if (A)
        os << " A=" << *A;
    return os.str();
}

bool toggle_parameter_proven(const BigInt& A)
{
    return (A >= 1 && A <= 10) || A >= 52330;
}

std::optional<DiscardFamily> is_discard(const Tuple& t)
{
    if (t.size() == 2)
        return pair_discard(t[0], t[1]);
    if (t.size() == 3)
        return triple_discard(t[0], t[1], t[2]);
    return std::nullopt;
}

Tuple instantiate_discard(DiscardFamilyId id, const BigInt& k, const BigInt& A)
{
    using Id = DiscardFamilyId;
    auto need = [&](bool ok) {
        if (!ok)
            throw std::invalid_argument("parameter outside family range for " + to_string(id));
    };
    switch (id) {
    case Id::TwinPair:
        need(k >= 1);
        return Tuple({k, k + 2});
    case Id::FibonacciTriple: {
        need(k >= 1);
        std::vector<BigInt> fib{0, 1};
        const unsigned long top = 2 * k.get_ui() + 4;
        while (fib.size() <= top)
            fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
        return Tuple({fib[top - 4], fib[top - 2], fib[top]});
    }
    case Id::KedlayaTriple: {
        need(k >= 1 && k <= 5);
        const auto& e = kKedlaya[k.get_ui() - 1];
        return Tuple({BigInt(e[0]), BigInt(e[1]), BigInt(e[2])});
    }
    case Id::HeTogbePeriodic:
        need(k >= 1);
        return Tuple({k + 1, 4 * k, 9 * k + 3});
    case Id::HeTogbeToggle:
        need(k >= 1 && toggle_parameter_proven(A));
        return Tuple({k, A * A * k + 2 * A, (A + 1) * (A + 1) * k + 2 * (A + 1)});
    case Id::SquareMinusOnePair:
        need(k >= 2);
        return Tuple({k * k - 1, k * k + 2 * k});
    case Id::TwoSquarePair:
        need(k >= 2);
        return Tuple({2 * k * k - 2 * k, 2 * k * k + 2 * k});
    case Id::FourKMinusFour:
        need(k >= 2);
        return Tuple({k, 4 * k - 4});
    case Id::ThreeSquareMinus:
        need(k >= 1);
        return Tuple({3 * k * k - 2 * k, 3 * k * k + 4 * k + 1});
    case Id::ThreeSquarePlus:
        need(k >= 1);
        return Tuple({3 * k * k + 2 * k, 3 * k * k + 8 * k + 5});
    case Id::FourKPlusFour:
        need(k >= 1);
        return Tuple({k, 4 * k + 4});
    }
    throw std::invalid_argument("unknown discard family");
}

}  // namespace dq
