#include "cayley/ints.hpp"

namespace cayley {

Int ipow(Int base, unsigned exp) {
    Int out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1u) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1u;
    }
    return r;
}

}  // namespace

// deterministic Miller-Rabin, valid for all 64-bit inputs with these bases
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto fs = factorize_u64(n);
    if (fs.size() != 1) return std::nullopt;
    return fs[0];
}

std::vector<PrimePower> factorize_u64(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            out.push_back({p, k});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        if (as_prime_power(q)) out.push_back(q);
    }
    return out;
}

}  // namespace cayley
