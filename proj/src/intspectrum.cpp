#include <algorithm>
#include <map>

#include "cayley/oracle.hpp"

namespace cayley {

namespace {

// --- exact route: Bareiss determinants + binomial-weighted interpolation ---

Int det_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

// ascending-coefficient polynomial helpers over Int
std::vector<Int> poly_mul_linear(const std::vector<Int>& f, const Int& root) {
    // f(x) * (x - root)
    std::vector<Int> g(f.size() + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        g[i + 1] += f[i];
        g[i] -= root * f[i];
    }
    return g;
}

std::vector<Int> poly_div_linear(const std::vector<Int>& f, const Int& root) {
    // exact division by (x - root); caller checks remainder first
    std::vector<Int> q(f.size() - 1);
    Int carry = f.back();
    for (std::size_t i = f.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = f[i] + root * carry;
    }
    return q;
}

Int poly_eval(const std::vector<Int>& f, const Int& x) {
    Int v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * x + f[i];
    return v;
}

}  // namespace

std::vector<Int> charpoly_fraction_free(const std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    std::vector<Int> values(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
        auto m = a;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = -m[i][j];
            m[i][i] += Int(x);
        }
        values[x] = det_bareiss(std::move(m));
    }
    // nodes 0..n: char(x) = [ sum_i values[i] * (-1)^(n-i) * C(n,i) * prod_{j != i} (x - j) ] / n!
    std::vector<Int> big = {1};
    for (std::size_t j = 0; j <= n; ++j) big = poly_mul_linear(big, Int(j));
    std::vector<Int> acc(n + 1, 0);
    Int binom = 1;  // C(n, 0)
    for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) binom = binom * Int(n - i + 1) / Int(i);
        auto ni = poly_div_linear(big, Int(i));
        Int w = binom * values[i];
        if ((n - i) % 2 == 1) w = -w;
        for (std::size_t k = 0; k <= n; ++k) acc[k] += w * ni[k];
    }
    Int nfact = 1;
    for (std::size_t i = 2; i <= n; ++i) nfact *= Int(i);
    for (auto& c : acc) {
        if (c % nfact != 0) throw std::logic_error("characteristic polynomial interpolation failed");
        c /= nfact;
    }
    return acc;
}

namespace {

// --- modular route: Hessenberg char poly mod p, rank-certified reconstruction ---

struct Mod {
    std::uint64_t p;  // < 2^31, so products fit in uint64
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1u;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
    std::uint64_t from_int(const Int& v) const {
        Int r = v % Int(p);
        if (r < 0) r += Int(p);
        return r.convert_to<std::uint64_t>();
    }
};

const std::vector<std::uint64_t>& modular_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> ps;
        for (std::uint64_t c = (1ull << 31) - 1; ps.size() < 12; c -= 2)
            if (is_prime_u64(c)) ps.push_back(c);
        return ps;
    }();
    return primes;
}

// rank of (A - lambda*I) mod p by Gaussian elimination
int rank_mod(const GraphInstance& g, long long lambda, const Mod& md) {
    const int n = g.n;
    std::uint64_t lm = md.from_int(Int(lambda));
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = g.at(i, j) ? 1 : 0;
        m[i][i] = md.sub(m[i][i], lm);
    }
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (m[i][col]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        std::uint64_t inv = md.inv(m[rank][col]);
        for (int i = rank + 1; i < n; ++i) {
            std::uint64_t f = md.mul(m[i][col], inv);
            if (!f) continue;
            for (int j = col; j < n; ++j) m[i][j] = md.sub(m[i][j], md.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> charpoly_hessenberg_mod(const GraphInstance& g, const Mod& md) {
    const int n = g.n;
    std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = g.at(i, j) ? 1 : 0;

    for (int k = 0; k + 2 < n; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (h[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != k + 1) {
            std::swap(h[piv], h[k + 1]);
            for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
        }
        std::uint64_t inv = md.inv(h[k + 1][k]);
        for (int i = k + 2; i < n; ++i) {
            std::uint64_t f = md.mul(h[i][k], inv);
            if (!f) continue;
            for (int j = k; j < n; ++j) h[i][j] = md.sub(h[i][j], md.mul(f, h[k + 1][j]));
            for (int j = 0; j < n; ++j) h[j][k + 1] = md.add(h[j][k + 1], md.mul(f, h[j][i]));
        }
    }

    // char polys of leading blocks of the Hessenberg form
    std::vector<std::vector<std::uint64_t>> cp(static_cast<std::size_t>(n) + 1);
    cp[0] = {1};
    for (int k = 1; k <= n; ++k) {
        auto& pk = cp[static_cast<std::size_t>(k)];
        pk.assign(static_cast<std::size_t>(k) + 1, 0);
        const auto& prev = cp[static_cast<std::size_t>(k - 1)];
        for (std::size_t i = 0; i < prev.size(); ++i) {
            pk[i + 1] = md.add(pk[i + 1], prev[i]);
            pk[i] = md.sub(pk[i], md.mul(h[k - 1][k - 1], prev[i]));
        }
        std::uint64_t prod = 1;
        for (int m = 1; m <= k - 1; ++m) {
            prod = md.mul(prod, h[k - m][k - m - 1]);
            if (!prod) break;
            std::uint64_t coef = md.mul(h[k - 1 - m][k - 1], prod);
            if (!coef) continue;
            const auto& pm = cp[static_cast<std::size_t>(k - 1 - m)];
            for (std::size_t i = 0; i < pm.size(); ++i) pk[i] = md.sub(pk[i], md.mul(coef, pm[i]));
        }
    }
    return cp[static_cast<std::size_t>(n)];
}

std::uint64_t poly_eval_mod(const std::vector<std::uint64_t>& f, std::uint64_t x, const Mod& md) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = md.add(md.mul(v, x), f[i]);
    return v;
}

std::map<Int, Int, std::greater<Int>> extract_roots_mod(const std::vector<std::uint64_t>& poly,
                                                        long long degree_bound, const Mod& md) {
    std::map<Int, Int, std::greater<Int>> roots;
    std::vector<std::uint64_t> f = poly;
    for (long long lam = degree_bound; lam >= -degree_bound && f.size() > 1; --lam) {
        std::uint64_t lm = md.from_int(Int(lam));
        long long mult = 0;
        while (f.size() > 1 && poly_eval_mod(f, lm, md) == 0) {
            std::vector<std::uint64_t> q(f.size() - 1);
            std::uint64_t carry = f.back();
            for (std::size_t i = f.size() - 1; i-- > 0;) {
                q[i] = carry;
                carry = md.add(f[i], md.mul(lm, carry));
            }
            f = std::move(q);
            ++mult;
        }
        if (mult > 0) roots[Int(lam)] = Int(mult);
    }
    if (f.size() > 1) throw non_integral_error("characteristic polynomial does not split over the integers");
    return roots;
}

}  // namespace

Spectrum integer_spectrum_from_adjacency(const GraphInstance& g) {
    const int n = g.n;
    const long long deg = g.degree();
    Spectrum out;
    out.n = n;
    out.degree = deg;

    if (n <= 24) {
        std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = g.at(i, j) ? 1 : 0;
        std::vector<Int> poly = charpoly_fraction_free(a);
        for (Int lam = deg; lam >= -deg && poly.size() > 1; --lam) {
            Int mult = 0;
            while (poly.size() > 1 && poly_eval(poly, lam) == 0) {
                poly = poly_div_linear(poly, lam);
                ++mult;
            }
            if (mult > 0) out.entries[lam] = mult;
        }
        if (poly.size() > 1)
            throw non_integral_error("characteristic polynomial does not split over the integers");
    } else {
        // Candidate eigenvalues from the char poly mod p (p > 2*deg+1, so integer
        // roots and their multiplicities survive reduction when the spectrum is
        // integral). Multiplicities are then certified by ranks: n - rank_p(A - l*I)
        // never undershoots the true multiplicity, so a total of exactly n pins
        // every multiplicity. The reconstruction is re-checked against the char
        // poly at further primes.
        const auto& primes = modular_primes();
        const std::size_t verify_count = 2;
        bool done = false;
        std::string last_err = "characteristic polynomial does not split over the integers";
        for (std::size_t base = 0; base + verify_count < primes.size() && !done; ++base) {
            Mod md{primes[base]};
            auto cp = charpoly_hessenberg_mod(g, md);
            std::map<Int, Int, std::greater<Int>> roots;
            try {
                roots = extract_roots_mod(cp, deg, md);
            } catch (const non_integral_error& e) {
                last_err = e.what();
                continue;
            }
            std::map<Int, Int, std::greater<Int>> certified;
            Int total = 0;
            for (const auto& [lam, mult] : roots) {
                Int m = n - rank_mod(g, lam.convert_to<long long>(), md);
                if (m > 0) certified[lam] = m;
                total += m;
            }
            if (total != n) continue;  // unlucky prime
            bool ok = true;
            for (std::size_t v = 0; v <= verify_count && ok; ++v) {
                Mod mv{primes[(base + v) % primes.size()]};
                auto cpv = v == 0 ? cp : charpoly_hessenberg_mod(g, mv);
                std::vector<std::uint64_t> m = {1};
                for (const auto& [lam, mult] : certified) {
                    std::uint64_t lm = mv.from_int(lam);
                    for (Int c = 0; c < mult; ++c) {
                        std::vector<std::uint64_t> nm(m.size() + 1, 0);
                        for (std::size_t i = 0; i < m.size(); ++i) {
                            nm[i + 1] = mv.add(nm[i + 1], m[i]);
                            nm[i] = mv.sub(nm[i], mv.mul(lm, m[i]));
                        }
                        m = std::move(nm);
                    }
                }
                ok = m == cpv;
            }
            if (ok) {
                out.entries = std::move(certified);
                done = true;
            }
        }
        if (!done) throw non_integral_error(last_err);
    }

    if (out.mult_sum() != Int(n)) throw std::logic_error("spectrum multiplicities do not sum to n");
    long long loops = 0;
    for (int i = 0; i < n; ++i) loops += g.at(i, i);
    if (out.trace() != Int(loops)) throw std::logic_error("spectrum trace does not match loop count");
    return out;
}

}  // namespace cayley
