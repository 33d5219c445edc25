#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace cayley {

using Int = boost::multiprecision::cpp_int;

Int ipow(Int base, unsigned exp);

// floor(sqrt(n)) for n >= 0
Int isqrt(const Int& n);

bool is_prime_u64(std::uint64_t n);

// n = p^k with k >= 1, p prime; nullopt otherwise (and for n < 2)
struct PrimePower {
    std::uint64_t p;
    unsigned k;
};
std::optional<PrimePower> as_prime_power(std::uint64_t n);

// trial-division factorization, ascending primes
std::vector<PrimePower> factorize_u64(std::uint64_t n);

// all prime powers p^k <= bound (k >= 1), ascending
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound);

}  // namespace cayley
