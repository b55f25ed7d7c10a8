#pragma once

// Shared integer helpers: GMP integers, exact square roots, small
// factorizations and square roots of +-1 modulo m.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dq {

using BigInt = mpz_class;
using Real = long double;

struct SqrtResult {
    BigInt root;
    bool exact = false;
};

/// Floor square root by Newton iteration with a final downward correction.
/// Throws std::domain_error for negative input.
SqrtResult integer_sqrt(const BigInt& n);

bool is_square(const BigInt& n);

/// Parses decimal integers; also accepts scientific notation with an
/// integral value such as "221e21".
BigInt parse_bigint(const std::string& text);

/// Smallest integer >= x (x finite, non-negative).
BigInt ceil_to_bigint(Real x);

Real to_real(const BigInt& n);

std::uint64_t isqrt_u64(std::uint64_t n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

struct PrimePower {
    std::uint64_t p;
    unsigned e;
    std::uint64_t pe;
};

/// Trial division; intended for n below roughly 1e14.
std::vector<PrimePower> factor_u64(std::uint64_t n);

unsigned omega_u64(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Inverse of a modulo m, gcd(a, m) = 1 required.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// A root of x^2 = -1 (mod p) for a prime p = 1 (mod 4).
std::uint64_t sqrt_minus_one_mod_prime(std::uint64_t p);

/// Solutions of x^2 = sign (mod p^e) in [0, p^e). sign is +1 or -1.
std::vector<std::uint64_t> unity_roots_prime_power(std::uint64_t p, unsigned e, int sign);

/// All x in [0, m) with x^2 = sign (mod m), sorted. For m = 1 this is {0}.
std::vector<std::uint64_t> unity_roots(std::uint64_t m, int sign);

/// Merges root sets modulo coprime m1 and m2 into roots modulo m1*m2.
std::vector<std::uint64_t> crt_combine(const std::vector<std::uint64_t>& r1, std::uint64_t m1,
                                       const std::vector<std::uint64_t>& r2, std::uint64_t m2);

}  // namespace dq
