#include "dq/omega_sieve.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <thread>

namespace dq {

namespace {

constexpr Real kEulerGamma = 0.577215664901532860606512090082402431L;

// Runs body(i) for i in [0, count) on `threads` workers, i assigned round-robin.
void parallel_indexed(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += threads)
                body(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

// omega over [lo, hi] using primes <= sqrt(hi). prod[] accumulates the
// smooth part of each n; a leftover cofactor is a single large prime.
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& primes,
                   std::vector<std::uint8_t>& omega, std::vector<std::uint64_t>& prod)
{
    const std::size_t len = hi - lo + 1;
    omega.assign(len, 0);
    prod.assign(len, 1);
    for (std::uint64_t p : primes) {
        if (p * p > hi)
            break;
        std::uint64_t first = (lo + p - 1) / p * p;
        for (std::uint64_t m = first; m <= hi; m += p) {
            omega[m - lo] += 1;
            prod[m - lo] *= p;
        }
        for (std::uint64_t pk = p * p; pk <= hi; pk *= p) {
            std::uint64_t f = (lo + pk - 1) / pk * pk;
            for (std::uint64_t m = f; m <= hi; m += pk)
                prod[m - lo] *= p;
            if (pk > hi / p)
                break;
        }
    }
    for (std::size_t i = 0; i < len; ++i)
        if (prod[i] != lo + i)
            omega[i] += 1;
}

std::vector<std::uint32_t> primes_for(std::uint64_t hi)
{
    return primes_up_to(static_cast<std::uint32_t>(isqrt_u64(hi) + 1));
}

void check_budget(std::uint64_t bytes, const SieveConfig& config, const char* what)
{
    if (bytes > config.memory_budget_bytes)
        throw ResourceError(std::string(what) + ": exceeds configured memory budget");
}

struct OmegaSums {
    std::vector<std::uint64_t> two, four;
    std::vector<Real> over_n, over_n_comp;
};

// Integer accumulation with an explicit overflow check.
void add_checked(std::uint64_t& acc, std::uint64_t v)
{
    if (__builtin_add_overflow(acc, v, &acc))
        throw std::overflow_error("sum exceeds 64-bit accumulator");
}

void run_omega_sums(SumKind kind, std::uint64_t N, const SieveConfig& config, OmegaSums& out)
{
    const std::uint64_t seg = std::max<std::uint64_t>(config.segment_size, 1024);
    check_budget(seg * 9 * std::max(1u, config.threads), config, "omega sieve segment");
    const std::size_t nseg = static_cast<std::size_t>((N + seg - 1) / seg);
    const auto primes = primes_for(N);
    out.two.assign(nseg, 0);
    out.four.assign(nseg, 0);
    out.over_n.assign(nseg, 0);
    out.over_n_comp.assign(nseg, 0);

    parallel_indexed(nseg, config.threads, [&](std::size_t i) {
        const std::uint64_t lo = 1 + i * seg;
        const std::uint64_t hi = std::min(N, lo + seg - 1);
        std::vector<std::uint8_t> om;
        std::vector<std::uint64_t> prod;
        sieve_segment(lo, hi, primes, om, prod);
        std::uint64_t two = 0, four = 0;
        Real sum = 0, comp = 0;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const unsigned w = om[n - lo];
            switch (kind) {
            case SumKind::TwoOmega:
                add_checked(two, std::uint64_t{1} << w);
                break;
            case SumKind::FourOmega:
                add_checked(four, std::uint64_t{1} << (2 * w));
                break;
            default: {
                // Kahan summation of 2^w / n.
                Real y = std::ldexp(Real(1), static_cast<int>(w)) / static_cast<Real>(n) - comp;
                Real t = sum + y;
                comp = (t - sum) - y;
                sum = t;
            }
            }
        }
        out.two[i] = two;
        out.four[i] = four;
        out.over_n[i] = sum;
        out.over_n_comp[i] = comp;
    });
}

struct RootTables {
    std::vector<std::uint32_t> spf;
    std::vector<std::uint32_t> sqrt_minus_one; // at primes p = 1 mod 4
};

RootTables build_root_tables(std::uint64_t Y, int sign, const SieveConfig& config)
{
    check_budget((Y + 1) * (sign < 0 ? 8 : 4), config, "root tables");
    RootTables t;
    t.spf.assign(Y + 1, 0);
    for (std::uint64_t i = 2; i <= Y; ++i) {
        if (t.spf[i])
            continue;
        for (std::uint64_t j = i; j <= Y; j += i)
            if (!t.spf[j])
                t.spf[j] = static_cast<std::uint32_t>(i);
    }
    if (sign < 0) {
        t.sqrt_minus_one.assign(Y + 1, 0);
        for (std::uint64_t p = 5; p <= Y; p += 4)
            if (t.spf[p] == p)
                t.sqrt_minus_one[p] = static_cast<std::uint32_t>(sqrt_minus_one_mod_prime(p));
    }
    return t;
}

// Roots of x^2 = sign mod y in [0, y), written to `roots`. Returns false if none.
bool roots_mod(std::uint64_t y, int sign, const RootTables& tab, std::vector<std::uint64_t>& roots,
               std::vector<std::uint64_t>& scratch)
{
    roots.assign(1, 0);
    std::uint64_t mod = 1;
    while (y > 1) {
        const std::uint64_t p = tab.spf[y];
        unsigned e = 0;
        std::uint64_t pe = 1;
        while (y % p == 0) {
            y /= p;
            pe *= p;
            ++e;
        }
        std::uint64_t local[4];
        unsigned nl = 0;
        if (p == 2) {
            if (sign < 0) {
                if (e > 1)
                    return false;
                local[nl++] = 1;
            } else if (e == 1) {
                local[nl++] = 1;
            } else if (e == 2) {
                local[nl++] = 1;
                local[nl++] = 3;
            } else {
                local[nl++] = 1;
                local[nl++] = pe / 2 - 1;
                local[nl++] = pe / 2 + 1;
                local[nl++] = pe - 1;
            }
        } else if (sign > 0) {
            local[nl++] = 1;
            local[nl++] = pe - 1;
        } else {
            if (p % 4 != 1)
                return false;
            std::uint64_t x = tab.sqrt_minus_one[p];
            if (e > 1)
                x = unity_roots_prime_power(p, e, -1).front();
            local[nl++] = x;
            local[nl++] = pe - x;
        }
        // CRT merge; mod * pe fits comfortably in 64 bits here.
        const std::uint64_t inv = mod == 1 ? 0 : invmod(mod % pe, pe);
        scratch.clear();
        for (auto x1 : roots) {
            for (unsigned j = 0; j < nl; ++j) {
                const std::uint64_t x2 = local[j];
                const std::uint64_t diff = (x2 + pe - x1 % pe) % pe;
                const std::uint64_t k = mod == 1 ? x2 : mulmod(diff, inv, pe);
                scratch.push_back(mod == 1 ? x2 : x1 + mod * k);
            }
        }
        roots.swap(scratch);
        mod *= pe;
    }
    return true;
}

enum class DivMode { PairedMinus, PairedPlus, Restricted };

BigInt divisor_square_sum(DivMode mode, std::uint64_t N, std::uint64_t Y, const SieveConfig& config)
{
    const int sign = mode == DivMode::PairedPlus ? -1 : +1;
    if (Y < 2)
        return 0;
    const auto tab = build_root_tables(Y, sign, config);

    const std::uint64_t chunk = 1u << 16;
    const std::size_t nchunks = static_cast<std::size_t>((Y - 1 + chunk - 1) / chunk);
    std::vector<std::uint64_t> partial(nchunks, 0);
    parallel_indexed(nchunks, config.threads, [&](std::size_t ci) {
        const std::uint64_t ylo = 2 + ci * chunk;
        const std::uint64_t yhi = std::min(Y, ylo + chunk - 1);
        std::vector<std::uint64_t> roots, scratch;
        std::uint64_t acc = 0;
        for (std::uint64_t y = ylo; y <= yhi; ++y) {
            if (!roots_mod(y, sign, tab, roots, scratch))
                continue;
            for (auto x : roots) {
                if (mode == DivMode::Restricted) {
                    // n in [2, N] with n = x (mod y).
                    std::uint64_t cnt = x <= N ? (N - x) / y + 1 : 0;
                    if (x == 1)
                        cnt -= 1;
                    add_checked(acc, cnt);
                } else if (x < N) {
                    // n in (y, N], or [y, N] for the +1 sum; n = y is never a root.
                    add_checked(acc, (N - x) / y);
                }
            }
        }
        partial[ci] = acc;
    });

    BigInt total = 0;
    for (auto p : partial)
        total += BigInt(static_cast<unsigned long>(p));
    return total;
}

Real harmonic(std::uint64_t m)
{
    static const std::vector<Real> table = [] {
        std::vector<Real> h(1001, 0);
        for (std::size_t i = 1; i < h.size(); ++i)
            h[i] = h[i - 1] + Real(1) / static_cast<Real>(i);
        return h;
    }();
    if (m < table.size())
        return table[m];
    const Real x = static_cast<Real>(m);
    const Real x2 = x * x;
    return std::log(x) + kEulerGamma + 1 / (2 * x) - 1 / (12 * x2) + 1 / (120 * x2 * x2) -
           1 / (252 * x2 * x2 * x2);
}

}  // namespace

std::string to_string(SumKind k)
{
    switch (k) {
    case SumKind::TwoOmega: return "TwoOmega";
    case SumKind::FourOmega: return "FourOmega";
    case SumKind::TwoOmegaOverN: return "TwoOmegaOverN";
    case SumKind::DivSqMinus1: return "DivSqMinus1";
    case SumKind::DivSqPlus1: return "DivSqPlus1";
    case SumKind::DivSqMinus1Restricted: return "DivSqMinus1Restricted";
    }
    return "?";
}

SumKind parse_sum_kind(const std::string& name)
{
    for (auto k : {SumKind::TwoOmega, SumKind::FourOmega, SumKind::TwoOmegaOverN, SumKind::DivSqMinus1,
                   SumKind::DivSqPlus1, SumKind::DivSqMinus1Restricted}) {
        if (to_string(k) == name)
            return k;
    }
    throw std::invalid_argument("unknown sum kind: " + name);
}

OmegaSegment sieve_omega(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config)
{
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("sieve_omega: expected 1 <= lo <= hi");
    if (hi > static_cast<std::uint64_t>(INT64_MAX))
        throw std::invalid_argument("sieve_omega: hi exceeds 2^63 - 1");
    const std::uint64_t len = hi - lo + 1;
    check_budget(len * 9, config, "sieve_omega");
    OmegaSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    std::vector<std::uint64_t> prod;
    sieve_segment(lo, hi, primes_for(hi), seg.omega, prod);
    return seg;
}

BigInt two_omega_sum_sieved(std::uint64_t N, const SieveConfig& config)
{
    if (N == 0)
        return 0;
    OmegaSums sums;
    run_omega_sums(SumKind::TwoOmega, N, config, sums);
    BigInt total = 0;
    for (auto v : sums.two)
        total += BigInt(static_cast<unsigned long>(v));
    return total;
}

BigInt two_omega_sum_hyperbola(std::uint64_t N)
{
    if (N == 0)
        return 0;
    const std::uint64_t K = isqrt_u64(N);
    std::vector<std::int8_t> mu(K + 1, 1);
    std::vector<bool> composite(K + 1, false);
    for (std::uint64_t p = 2; p <= K; ++p) {
        if (composite[p])
            continue;
        for (std::uint64_t j = p; j <= K; j += p) {
            if (j > p)
                composite[j] = true;
            mu[j] = static_cast<std::int8_t>(-mu[j]);
        }
        for (std::uint64_t j = p * p; j <= K; j += p * p)
            mu[j] = 0;
    }
    auto divisor_summatory = [](std::uint64_t y) {
        const std::uint64_t s = isqrt_u64(y);
        unsigned __int128 t = 0;
        for (std::uint64_t m = 1; m <= s; ++m)
            t += y / m;
        return static_cast<__int128>(2 * t) - static_cast<__int128>(s) * s;
    };
    __int128 total = 0;
    for (std::uint64_t k = 1; k <= K; ++k)
        if (mu[k])
            total += mu[k] * divisor_summatory(N / (k * k));
    // total < 2^127 comfortably for N < 2^63.
    BigInt out(static_cast<unsigned long>(static_cast<std::uint64_t>(total >> 64)));
    out <<= 64;
    out += BigInt(static_cast<unsigned long>(static_cast<std::uint64_t>(total)));
    return out;
}

SumValue exact_sum(SumKind kind, std::uint64_t N, std::optional<std::uint64_t> A, const SieveConfig& config)
{
    if (N < 1)
        throw std::invalid_argument("exact_sum: N must be at least 1");
    if ((kind == SumKind::DivSqMinus1Restricted) != A.has_value())
        throw std::invalid_argument("exact_sum: A is required exactly for DivSqMinus1Restricted");
    if (A && *A < 1)
        throw std::invalid_argument("exact_sum: A must be at least 1");

    SumValue v;
    v.kind = kind;
    v.N = N;
    v.A = A;

    switch (kind) {
    case SumKind::TwoOmega:
    case SumKind::FourOmega:
    case SumKind::TwoOmegaOverN: {
        OmegaSums sums;
        run_omega_sums(kind, N, config, sums);
        if (kind == SumKind::TwoOmegaOverN) {
            // Fixed-order compensated merge of the per-segment sums.
            Real s = 0, comp = 0;
            for (std::size_t i = 0; i < sums.over_n.size(); ++i) {
                for (Real part : {sums.over_n[i], -sums.over_n_comp[i]}) {
                    Real y = part - comp;
                    Real t = s + y;
                    comp = (t - s) - y;
                    s = t;
                }
            }
            v.integral = false;
            v.approx = s;
            const Real eps = LDBL_EPSILON;
            v.error = (4 + static_cast<Real>(sums.over_n.size()) + static_cast<Real>(N) * eps) * eps * s;
            return v;
        }
        const auto& parts = kind == SumKind::TwoOmega ? sums.two : sums.four;
        BigInt total = 0;
        for (auto p : parts)
            total += BigInt(static_cast<unsigned long>(p));
        v.exact = total;
        break;
    }
    case SumKind::DivSqMinus1: {
        if (N < 2) {
            v.exact = 0;
            break;
        }
        BigInt pairs = BigInt(static_cast<unsigned long>(N - 1)) +
                       divisor_square_sum(DivMode::PairedMinus, N, N - 1, config);
        v.exact = 2 * pairs;
        break;
    }
    case SumKind::DivSqPlus1: {
        BigInt pairs = BigInt(static_cast<unsigned long>(N)) +
                       divisor_square_sum(DivMode::PairedPlus, N, N, config);
        v.exact = 2 * pairs;
        break;
    }
    case SumKind::DivSqMinus1Restricted: {
        if (N < 2) {
            v.exact = 0;
            break;
        }
        // No divisor of n^2 - 1 exceeds N^2 - 1.
        const unsigned __int128 top = static_cast<unsigned __int128>(N) * N - 1;
        const std::uint64_t Y = top < *A ? static_cast<std::uint64_t>(top) : *A;
        v.exact = BigInt(static_cast<unsigned long>(N - 1)) +
                  divisor_square_sum(DivMode::Restricted, N, Y, config);
        break;
    }
    }
    v.approx = to_real(v.exact);
    return v;
}

Real divisor_over_n_sum(std::uint64_t t, Real* error)
{
    if (t == 0) {
        if (error)
            *error = 0;
        return 0;
    }
    const std::uint64_t s = isqrt_u64(t);
    Real sum = 0, comp = 0;
    for (std::uint64_t a = 1; a <= s; ++a) {
        Real y = 2 * harmonic(t / a) / static_cast<Real>(a) - comp;
        Real tt = sum + y;
        comp = (tt - sum) - y;
        sum = tt;
    }
    const Real hs = harmonic(s);
    const Real value = sum - hs * hs;
    if (error) {
        // Rounding in the terms plus the truncated harmonic expansion (< 1/(240 m^8) per call).
        const Real eps = LDBL_EPSILON;
        *error = (8 + 4 * static_cast<Real>(s) * eps) * eps * (std::fabs(sum) + hs * hs) + 1e-21L * s;
    }
    return value;
}

std::uint64_t count_unity_roots(std::uint64_t b, int sign)
{
    if (b == 0)
        throw std::invalid_argument("count_unity_roots: b must be positive");
    if (b == 1)
        return 0;
    std::uint64_t count = 1;
    for (const auto& pp : factor_u64(b)) {
        std::uint64_t local;
        if (pp.p == 2) {
            if (sign > 0)
                local = pp.e == 1 ? 1 : (pp.e == 2 ? 2 : 4);
            else
                local = pp.e == 1 ? 1 : 0;
        } else if (sign > 0) {
            local = 2;
        } else {
            local = pp.p % 4 == 1 ? 2 : 0;
        }
        count *= local;
        if (count == 0)
            break;
    }
    return count;
}

ResidueScanReport residue_conjecture_scan(std::uint64_t b_max)
{
    if (b_max < 2)
        throw std::invalid_argument("residue_conjecture_scan: b_max must be at least 2");
    ResidueScanReport rep;
    rep.b_max = b_max;
    std::vector<bool> attains(8, false);
    for (std::uint64_t b = 2; b <= b_max; ++b) {
        const unsigned w = omega_u64(b);
        const std::uint64_t plus = count_unity_roots(b, +1);
        const std::uint64_t minus = count_unity_roots(b, -1);
        ++rep.checked;
        if (plus > (std::uint64_t{1} << (w + 1)))
            ++rep.vine_plus_violations;
        if (minus > (std::uint64_t{1} << w))
            ++rep.vine_minus_violations;

        const unsigned cls = static_cast<unsigned>(b % 8);
        std::uint64_t expected;
        std::string rule;
        if (cls == 0) {
            expected = std::uint64_t{1} << (w + 1);
            rule = "b = 0 mod 8: 2^(omega+1)";
        } else if (cls == 2 || cls == 6) {
            expected = std::uint64_t{1} << (w - 1);
            rule = "b = 2,6 mod 8: 2^(omega-1)";
        } else {
            expected = std::uint64_t{1} << w;
            rule = "b = 1,3,4,5,7 mod 8: 2^omega";
        }
        if (plus != expected)
            rep.counterexamples.push_back({b, plus, expected, rule});
        if (plus == (std::uint64_t{1} << (w + 1)))
            attains[cls] = true;
    }
    for (unsigned c = 0; c < 8; ++c)
        if (attains[c])
            rep.classes_attaining_upper_bound.push_back(c);
    return rep;
}

unsigned max_omega_below(const BigInt& X)
{
    if (X < 2)
        throw std::invalid_argument("max_omega_below: X must be at least 2");
    BigInt prod = 1, p = 1;
    unsigned k = 0;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (prod * p > X)
            return k;
        prod *= p;
        ++k;
    }
}

}  // namespace dq
