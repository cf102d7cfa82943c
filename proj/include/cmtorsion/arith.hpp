#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cmt::arith {

// Upper bound accepted by sieve_primes (memory guard).
inline constexpr std::int64_t sieve_limit_max = 1'000'000'000;

struct Factorization {
    std::int64_t value = 1;
    // (prime, exponent) with primes strictly ascending; empty for value == 1.
    std::vector<std::pair<std::int64_t, int>> factors;
};

/// Deterministic primality test valid for every signed 64-bit integer.
/// Fixed Miller-Rabin witness set; n <= 1 returns false.
bool is_prime(std::int64_t n) noexcept;

/// All primes <= limit in ascending order (segmented sieve).
/// Requires 2 <= limit <= sieve_limit_max.
std::vector<std::int64_t> sieve_primes(std::int64_t limit);

/// Kronecker symbol (a|n): the Jacobi symbol extended to even and negative n.
/// Conventions: (a|1) = 1, (a|2) is 0 for even a and +-1 by a mod 8,
/// (a|-1) = sign of a (1 for a >= 0). Throws std::domain_error for n = 0.
int kronecker(std::int64_t a, std::int64_t n);

/// Euler totient, computed from the factorization. Requires n >= 1.
std::int64_t euler_phi(std::int64_t n);

/// Trial division by sieved primes up to sqrt(n), with a primality
/// short-circuit on the remaining cofactor. Requires n >= 1.
Factorization factorize(std::int64_t n);

/// Every N <= n_bound with phi(N) | d, ascending. Built recursively from the
/// primes q with (q-1) | d rather than by scanning. Since phi(N) >= sqrt(N/2),
/// the list is complete over all integers once n_bound >= 2*d*d.
std::vector<std::int64_t> enumerate_totient_divisors(std::int64_t d, std::int64_t n_bound);

/// Largest e with p^e | n. Requires n != 0 and p >= 2.
int valuation(std::int64_t n, std::int64_t p);

/// Integer square root (floor). Requires n >= 0.
std::int64_t isqrt(std::int64_t n);

}  // namespace cmt::arith
