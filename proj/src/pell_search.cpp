#include "dq/pell_search.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace dq {

void PellState::step()
{
    BigInt nt = r * t + b * s;
    BigInt ns = a * t + r * s;
    t = std::move(nt);
    s = std::move(ns);
}

bool PellState::has_integral_c() const
{
    BigInt ss = s * s - 1;
    BigInt tt = t * t - 1;
    return mpz_divisible_p(ss.get_mpz_t(), a.get_mpz_t()) &&
           mpz_divisible_p(tt.get_mpz_t(), b.get_mpz_t());
}

BigInt PellState::c() const
{
    return (s * s - 1) / a;
}

bool PellState::invariant_holds() const
{
    if (a * t * t - b * s * s != a - b)
        return false;
    if (!has_integral_c())
        return true;
    return (s * s - 1) / a == (t * t - 1) / b;
}

std::vector<std::pair<BigInt, BigInt>> fundamental_solutions(const BigInt& a, const BigInt& b)
{
    if (!(0 < a && a < b))
        throw std::invalid_argument("fundamental_solutions: expected 0 < a < b");
    if (!is_square(a * b + 1))
        throw DiophantineError("fundamental_solutions: ab+1 is not a square");

    // a(t^2 - 1) = b(s^2 - 1) forces t^2 = 1 modulo b / gcd(a, b).
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    BigInt bp = b / g;
    const BigInt tmax = integer_sqrt(b * (b - a)).root;
    if (!bp.fits_ulong_p())
        throw std::domain_error("fundamental_solutions: modulus too large");

    std::vector<std::pair<BigInt, BigInt>> out;
    const auto roots = unity_roots(bp.get_ui(), +1);
    for (auto x : roots) {
        for (BigInt t = x; t <= tmax; t += bp) {
            BigInt num = a * t * t + b - a;
            if (!mpz_divisible_p(num.get_mpz_t(), b.get_mpz_t()))
                continue;
            auto s = integer_sqrt(num / b);
            if (s.exact && s.root > 0)
                out.emplace_back(t, s.root);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BigInt> extend_pair(const BigInt& a, const BigInt& b, const BigInt& limit)
{
    if (!(0 < a && a < b))
        throw std::invalid_argument("extend_pair: expected 0 < a < b");
    auto r = integer_sqrt(a * b + 1);
    if (!r.exact)
        throw DiophantineError("extend_pair: ab+1 is not a square");

    std::set<BigInt> found;
    for (const auto& [t0, s0] : fundamental_solutions(a, b)) {
        for (int sign : {+1, -1}) {
            if (sign < 0 && t0 == 0)
                continue;
            PellState st{a, b, r.root, sign * t0, s0};
            for (;;) {
                if (st.s != 0 && st.has_integral_c()) {
                    BigInt c = st.c();
                    if (c > b && c <= limit) {
                        // Re-check exactly before emitting.
                        if (is_square(a * c + 1) && is_square(b * c + 1))
                            found.insert(c);
                    }
                    if (c > limit && st.t > 0 && st.s > 0)
                        break;
                } else if (st.t > 0 && st.s > 0 && (st.s * st.s - 1) / a > limit) {
                    break;
                }
                st.step();
            }
        }
    }
    return {found.begin(), found.end()};
}

bool operator<(const Quadruple& x, const Quadruple& y)
{
    if (x.b != y.b) return x.b < y.b;
    if (x.a != y.a) return x.a < y.a;
    if (x.c != y.c) return x.c < y.c;
    if (x.d != y.d) return x.d < y.d;
    return static_cast<int>(x.subcase) < static_cast<int>(y.subcase);
}

namespace {

BigInt cube(const BigInt& x) { return x * x * x; }

bool discarded(const BigInt& a, const BigInt& b, const BigInt& c)
{
    return is_discard(Tuple({a, b})).has_value() || is_discard(Tuple({a, b, c})).has_value();
}

void search_one_b(Subcase subcase, std::uint64_t bv, DiscardPolicy policy, std::vector<Quadruple>& out)
{
    const BigInt b(static_cast<unsigned long>(bv));
    const BigInt b3 = cube(b);
    BigInt b5;
    mpz_pow_ui(b5.get_mpz_t(), b.get_mpz_t(), 5);

    for (std::uint64_t av = 1; 4 * av < bv; ++av) {
        const unsigned __int128 ab1 = static_cast<unsigned __int128>(av) * bv + 1;
        if (ab1 > UINT64_MAX)
            break;
        const auto abu = static_cast<std::uint64_t>(ab1);
        const std::uint64_t rr = isqrt_u64(abu);
        if (rr * rr != abu)
            continue;
        const BigInt a(static_cast<unsigned long>(av));
        const BigInt r(static_cast<unsigned long>(rr));

        std::vector<BigInt> cs;
        switch (subcase) {
        case Subcase::Case2i: {
            const BigInt lo = 4 * a * b + a + b;
            if (lo * lo > b3)
                continue;
            for (auto& c : extend_pair(a, b, integer_sqrt(b3).root))
                if (c >= lo && c * c <= b3)
                    cs.push_back(c);
            break;
        }
        case Subcase::Case2ii:
            cs.push_back(a + b + 2 * r);
            break;
        case Subcase::Case2iii: {
            // d > 4abc together with d <= b^5 bounds c.
            const BigInt hi = b5 / (4 * a * b);
            for (auto& c : extend_pair(a, b, hi))
                if (c * c > b3)
                    cs.push_back(c);
            break;
        }
        default:
            throw std::invalid_argument("search_quadruples: subcase must be 2i, 2ii or 2iii");
        }

        for (const auto& c : cs) {
            if (c <= b)
                continue;
            const BigInt d = d_plus(a, b, c);
            if (classify_triple(a, b, d).kind != TripleKind::SecondKind)
                continue;
            if (!classify_quintuple_case(a, b, c, d).contains(subcase))
                continue;
            if (policy == DiscardPolicy::Exclude && discarded(a, b, c))
                continue;
            out.push_back({a, b, c, d, subcase});
        }
    }
}

}  // namespace

std::vector<Quadruple> search_quadruples(Subcase subcase, std::uint64_t b_max, const SearchOptions& options)
{
    if (subcase != Subcase::Case2i && subcase != Subcase::Case2ii && subcase != Subcase::Case2iii)
        throw std::invalid_argument("search_quadruples: subcase must be 2i, 2ii or 2iii");
    if (b_max < 4)
        throw std::invalid_argument("search_quadruples: b_max must be at least 4");

    std::vector<std::uint64_t> bs;
    for (std::uint64_t b = std::max<std::uint64_t>(options.b_min, 2); b <= b_max; ++b)
        bs.push_back(b);
    if (options.reverse_order)
        std::reverse(bs.begin(), bs.end());

    const unsigned nthreads = std::max(1u, options.threads);
    std::vector<std::vector<Quadruple>> partial(nthreads);
    auto worker = [&](unsigned w) {
        for (std::size_t i = w; i < bs.size(); i += nthreads)
            search_one_b(subcase, bs[i], options.discards, partial[w]);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nthreads; ++w)
            pool.emplace_back(worker, w);
        for (auto& th : pool)
            th.join();
    }

    std::vector<Quadruple> out;
    for (auto& p : partial)
        out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

MinimalSecondElement min_second_element(Subcase subcase, std::uint64_t cap, unsigned threads)
{
    std::uint64_t lo = 2, hi = 16;
    while (lo <= cap) {
        SearchOptions opt;
        opt.b_min = lo;
        opt.threads = threads;
        auto found = search_quadruples(subcase, std::min(hi, cap), opt);
        if (!found.empty()) {
            MinimalSecondElement res;
            res.B = found.front().b.get_ui();
            for (auto& q : found) {
                if (q.b != found.front().b)
                    break;
                if (res.witnesses.empty() || q.d < res.C)
                    res.C = q.d;
                res.witnesses.push_back(q);
            }
            return res;
        }
        lo = hi + 1;
        hi *= 2;
    }
    throw std::runtime_error("min_second_element: no quadruple found below the search cap");
}

}  // namespace dq
