#include "dq/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dq {

SqrtResult integer_sqrt(const BigInt& n)
{
    if (n < 0)
        throw std::domain_error("integer_sqrt: negative argument");
    if (n < 2)
        return {n, true};

    // Start above the root so the Newton sequence decreases monotonically.
    BigInt x = BigInt(1) << (mpz_sizeinbase(n.get_mpz_t(), 2) / 2 + 1);
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x)
            break;
        x = y;
    }
    while (x * x > n)
        --x;
    while ((x + 1) * (x + 1) <= n)
        ++x;
    return {x, x * x == n};
}

bool is_square(const BigInt& n)
{
    if (n < 0)
        return false;
    return integer_sqrt(n).exact;
}

BigInt parse_bigint(const std::string& text)
{
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
    s.erase(std::remove(s.begin(), s.end(), ','), s.end());
    auto epos = s.find_first_of("eE");
    if (epos == std::string::npos) {
        BigInt v;
        if (s.empty() || v.set_str(s, 10) != 0)
            throw std::invalid_argument("not an integer: " + text);
        return v;
    }
    std::string mant = s.substr(0, epos);
    long exp10 = std::stol(s.substr(epos + 1));
    auto dot = mant.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    BigInt v;
    if (mant.empty() || v.set_str(mant, 10) != 0)
        throw std::invalid_argument("not an integer: " + text);
    BigInt ten = 10;
    if (exp10 >= 0) {
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp10));
        return v * p;
    }
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exp10));
    if (v % p != 0)
        throw std::invalid_argument("not an integer: " + text);
    return v / p;
}

BigInt ceil_to_bigint(Real x)
{
    if (!std::isfinite(x) || x < 0)
        throw std::domain_error("ceil_to_bigint: expected finite non-negative value");
    Real c = std::ceil(x);
    int exp = 0;
    Real frac = std::frexp(c, &exp);
    // 64 mantissa bits of a long double fit exactly in an unsigned 64-bit integer.
    auto mant = static_cast<unsigned long long>(std::ldexp(frac, 64));
    BigInt v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(mant), 0, 0, &mant);
    if (exp >= 64)
        v <<= static_cast<unsigned long>(exp - 64);
    else
        v >>= static_cast<unsigned long>(64 - exp);
    return v;
}

Real to_real(const BigInt& n)
{
    if (n < 0)
        return -to_real(BigInt(-n));
    if (n == 0)
        return 0;
    // Keep the leading 64 bits; long double carries a 64-bit mantissa.
    const auto bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    const long shift = bits > 64 ? bits - 64 : 0;
    BigInt head = n >> static_cast<unsigned long>(shift);
    unsigned long long h = 0;
    mpz_export(&h, nullptr, 1, sizeof(h), 0, 0, head.get_mpz_t());
    return std::ldexp(static_cast<Real>(h), static_cast<int>(shift));
}

std::uint64_t isqrt_u64(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n)
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit)
{
    std::vector<std::uint32_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

std::vector<PrimePower> factor_u64(std::uint64_t n)
{
    std::vector<PrimePower> out;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        std::uint64_t pe = 1;
        while (n % p == 0) {
            n /= p;
            pe *= p;
            ++e;
        }
        if (e)
            out.push_back({p, e, pe});
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1)
        out.push_back({n, 1, n});
    return out;
}

unsigned omega_u64(std::uint64_t n)
{
    return static_cast<unsigned>(factor_u64(n).size());
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m)
{
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw std::domain_error("invmod: not invertible");
    if (t < 0)
        t += m;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t sqrt_minus_one_mod_prime(std::uint64_t p)
{
    if (p == 2)
        return 1;
    if (p % 4 != 1)
        throw std::domain_error("sqrt_minus_one_mod_prime: p must be 1 mod 4");
    for (std::uint64_t c = 2;; ++c) {
        // c is a non-residue iff c^((p-1)/2) = -1; then c^((p-1)/4) squares to -1.
        if (powmod(c, (p - 1) / 2, p) == p - 1)
            return powmod(c, (p - 1) / 4, p);
    }
}

std::vector<std::uint64_t> unity_roots_prime_power(std::uint64_t p, unsigned e, int sign)
{
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i)
        pe *= p;
    if (p == 2) {
        if (sign < 0)
            return e == 1 ? std::vector<std::uint64_t>{1} : std::vector<std::uint64_t>{};
        if (e == 1)
            return {1};
        if (e == 2)
            return {1, 3};
        std::uint64_t h = pe / 2;
        return {1, h - 1, h + 1, pe - 1};
    }
    if (sign > 0)
        return {1, pe - 1};
    if (p % 4 != 1)
        return {};
    // Hensel lift of a root modulo p.
    std::uint64_t x = sqrt_minus_one_mod_prime(p);
    std::uint64_t mod = p;
    for (unsigned i = 1; i < e; ++i) {
        mod *= p;
        std::uint64_t f = (mulmod(x, x, mod) + 1) % mod;
        std::uint64_t inv = invmod((2 * x) % mod, mod);
        x = (x + mod - mulmod(f, inv, mod)) % mod;
    }
    std::vector<std::uint64_t> out{x, pe - x};
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> crt_combine(const std::vector<std::uint64_t>& r1, std::uint64_t m1,
                                       const std::vector<std::uint64_t>& r2, std::uint64_t m2)
{
    std::vector<std::uint64_t> out;
    out.reserve(r1.size() * r2.size());
    const std::uint64_t m = m1 * m2;
    const std::uint64_t inv = invmod(m1 % m2, m2);
    for (auto x1 : r1) {
        for (auto x2 : r2) {
            std::uint64_t diff = (x2 + m2 - x1 % m2) % m2;
            std::uint64_t k = mulmod(diff, inv, m2);
            out.push_back((x1 + mulmod(k, m1, m)) % m);
        }
    }
    return out;
}

std::vector<std::uint64_t> unity_roots(std::uint64_t m, int sign)
{
    if (m == 0)
        throw std::domain_error("unity_roots: modulus must be positive");
    std::vector<std::uint64_t> roots{0};
    std::uint64_t mod = 1;
    for (const auto& pp : factor_u64(m)) {
        auto local = unity_roots_prime_power(pp.p, pp.e, sign);
        if (local.empty())
            return {};
        roots = crt_combine(roots, mod, local, pp.pe);
        mod *= pp.pe;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace dq
