#include <algorithm>

#include "cayley/oracle.hpp"

namespace cayley {

AbelianGroup::AbelianGroup(std::vector<long long> ds) : orders(std::move(ds)) {
    strides.resize(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        strides[i] = n;
        n *= orders[i];
    }
}

std::vector<long long> AbelianGroup::tuple(long long idx) const {
    std::vector<long long> t(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        t[i] = idx % orders[i];
        idx /= orders[i];
    }
    return t;
}

long long AbelianGroup::index(const std::vector<long long>& t) const {
    long long idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) idx += (t[i] % orders[i]) * strides[i];
    return idx;
}

long long AbelianGroup::add(long long x, long long y) const {
    long long idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        long long xi = x % orders[i], yi = y % orders[i];
        x /= orders[i];
        y /= orders[i];
        idx += ((xi + yi) % orders[i]) * strides[i];
    }
    return idx;
}

long long AbelianGroup::neg(long long x) const {
    long long idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        long long xi = x % orders[i];
        x /= orders[i];
        idx += ((orders[i] - xi) % orders[i]) * strides[i];
    }
    return idx;
}

namespace {

// digits of x base b, fixed width
void digits_of(long long x, long long b, unsigned width, long long* out) {
    for (unsigned i = 0; i < width; ++i) {
        out[i] = x % b;
        x /= b;
    }
}

long long from_digits(const long long* d, long long b, unsigned width) {
    long long x = 0;
    for (unsigned i = width; i-- > 0;) x = x * b + d[i];
    return x;
}

// polynomial product modulo (x^t + mod_poly) with coefficients mod q
void polymul_reduce(const long long* x, const long long* y, unsigned t, long long q,
                    const std::vector<long long>& mod_poly, long long* out) {
    long long conv[32] = {0};
    for (unsigned i = 0; i < t; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < t; ++j) conv[i + j] = (conv[i + j] + x[i] * y[j]) % q;
    }
    for (unsigned i = 2 * t - 2; i >= t && i < 32; --i) {
        long long c = conv[i] % q;
        if (c) {
            for (unsigned j = 0; j < t; ++j)
                conv[i - t + j] = ((conv[i - t + j] - c * mod_poly[j]) % q + q) % q;
        }
        conv[i] = 0;
        if (i == t) break;
    }
    for (unsigned i = 0; i < t; ++i) out[i] = conv[i] % q;
}

bool poly_is_zero(const long long* d, unsigned t) {
    for (unsigned i = 0; i < t; ++i)
        if (d[i]) return false;
    return true;
}

// does the monic divisor (x^dd + d_coeffs) divide x^t + f over Z_p?
bool divides(const std::vector<long long>& f, unsigned t, const std::vector<long long>& d, unsigned dd,
             long long p) {
    // remainder of (x^t + f) by (x^dd + d)
    std::vector<long long> rem(t + 1, 0);
    for (unsigned i = 0; i < t; ++i) rem[i] = f[i];
    rem[t] = 1;
    for (unsigned i = t; i >= dd; --i) {
        long long c = rem[i] % p;
        if (c) {
            rem[i] = 0;
            for (unsigned j = 0; j < dd; ++j)
                rem[i - dd + j] = ((rem[i - dd + j] - c * d[j]) % p + p) % p;
        }
        if (i == dd) break;
    }
    for (unsigned i = 0; i < dd; ++i)
        if (rem[i] % p) return false;
    return true;
}

// lexicographically smallest (low-degree coefficient first) monic irreducible of degree t over Z_p
std::vector<long long> smallest_irreducible(long long p, unsigned t) {
    std::vector<long long> f(t, 0);
    while (true) {
        bool reducible = false;
        if (f[0] == 0) {
            reducible = true;  // divisible by x
        } else {
            std::vector<long long> d(t, 0);
            for (unsigned dd = 1; !reducible && 2 * dd <= t; ++dd) {
                std::fill(d.begin(), d.end(), 0);
                // iterate all monic divisors x^dd + d of degree dd
                while (true) {
                    if (divides(f, t, d, dd, p)) {
                        reducible = true;
                        break;
                    }
                    unsigned i = 0;
                    while (i < dd && ++d[i] == p) d[i++] = 0;
                    if (i == dd) break;
                }
            }
        }
        if (!reducible) return f;
        // next candidate in low-degree-first lexicographic order: f0 most significant
        unsigned i = t;
        while (i-- > 0) {
            if (++f[i] < p) break;
            f[i] = 0;
        }
    }
}

}  // namespace

Gf::Gf(std::uint64_t p_, unsigned t_) : p(p_), t(t_) {
    q = 1;
    for (unsigned i = 0; i < t; ++i) q *= static_cast<long long>(p);
    if (t > 1) modulus = smallest_irreducible(static_cast<long long>(p), t);
}

long long Gf::add(long long x, long long y) const {
    if (t == 1) return (x + y) % static_cast<long long>(p);
    long long dx[16], dy[16], dz[16];
    digits_of(x, static_cast<long long>(p), t, dx);
    digits_of(y, static_cast<long long>(p), t, dy);
    for (unsigned i = 0; i < t; ++i) dz[i] = (dx[i] + dy[i]) % static_cast<long long>(p);
    return from_digits(dz, static_cast<long long>(p), t);
}

long long Gf::neg(long long x) const {
    if (t == 1) return (static_cast<long long>(p) - x) % static_cast<long long>(p);
    long long dx[16], dz[16];
    digits_of(x, static_cast<long long>(p), t, dx);
    for (unsigned i = 0; i < t; ++i) dz[i] = (static_cast<long long>(p) - dx[i]) % static_cast<long long>(p);
    return from_digits(dz, static_cast<long long>(p), t);
}

long long Gf::mul(long long x, long long y) const {
    if (t == 1) return (x * y) % static_cast<long long>(p);
    long long dx[16], dy[16], dz[16];
    digits_of(x, static_cast<long long>(p), t, dx);
    digits_of(y, static_cast<long long>(p), t, dy);
    polymul_reduce(dx, dy, t, static_cast<long long>(p), modulus, dz);
    return from_digits(dz, static_cast<long long>(p), t);
}

long long Factor::add(long long x, long long y) const {
    switch (shape.family) {
        case Family::Field: return gf.add(x, y);
        case Family::ZModPk: return (x + y) % size;
        case Family::GaloisRing: {
            long long dx[16], dy[16], dz[16];
            unsigned t = shape.galois_t();
            digits_of(x, zq, t, dx);
            digits_of(y, zq, t, dy);
            for (unsigned i = 0; i < t; ++i) dz[i] = (dx[i] + dy[i]) % zq;
            return from_digits(dz, zq, t);
        }
        case Family::FieldModX2: {
            long long a = gf.add(x % gf.q, y % gf.q), b = gf.add(x / gf.q, y / gf.q);
            return a + b * gf.q;
        }
        case Family::FieldModX3: {
            long long q = gf.q;
            long long a = gf.add(x % q, y % q);
            long long b = gf.add((x / q) % q, (y / q) % q);
            long long c = gf.add(x / (q * q), y / (q * q));
            return a + b * q + c * q * q;
        }
        case Family::Shape: break;
    }
    throw domain_error("no concrete witness for Shape factor");
}

long long Factor::neg(long long x) const {
    switch (shape.family) {
        case Family::Field: return gf.neg(x);
        case Family::ZModPk: return (size - x) % size;
        case Family::GaloisRing: {
            long long dx[16], dz[16];
            unsigned t = shape.galois_t();
            digits_of(x, zq, t, dx);
            for (unsigned i = 0; i < t; ++i) dz[i] = (zq - dx[i]) % zq;
            return from_digits(dz, zq, t);
        }
        case Family::FieldModX2: return gf.neg(x % gf.q) + gf.neg(x / gf.q) * gf.q;
        case Family::FieldModX3: {
            long long q = gf.q;
            return gf.neg(x % q) + gf.neg((x / q) % q) * q + gf.neg(x / (q * q)) * q * q;
        }
        case Family::Shape: break;
    }
    throw domain_error("no concrete witness for Shape factor");
}

long long Factor::mul(long long x, long long y) const {
    switch (shape.family) {
        case Family::Field: return gf.mul(x, y);
        case Family::ZModPk: return (x * y) % size;
        case Family::GaloisRing: {
            long long dx[16], dy[16], dz[16];
            unsigned t = shape.galois_t();
            digits_of(x, zq, t, dx);
            digits_of(y, zq, t, dy);
            polymul_reduce(dx, dy, t, zq, gr_modulus, dz);
            return from_digits(dz, zq, t);
        }
        case Family::FieldModX2: {
            long long a1 = x % gf.q, b1 = x / gf.q, a2 = y % gf.q, b2 = y / gf.q;
            return gf.mul(a1, a2) + gf.add(gf.mul(a1, b2), gf.mul(b1, a2)) * gf.q;
        }
        case Family::FieldModX3: {
            long long q = gf.q;
            long long a1 = x % q, b1 = (x / q) % q, c1 = x / (q * q);
            long long a2 = y % q, b2 = (y / q) % q, c2 = y / (q * q);
            long long a = gf.mul(a1, a2);
            long long b = gf.add(gf.mul(a1, b2), gf.mul(b1, a2));
            long long c = gf.add(gf.add(gf.mul(a1, c2), gf.mul(b1, b2)), gf.mul(c1, a2));
            return a + b * q + c * q * q;
        }
        case Family::Shape: break;
    }
    throw domain_error("no concrete witness for Shape factor");
}

long long Factor::one() const { return 1; }

std::vector<long long> Factor::cyclic_orders() const {
    switch (shape.family) {
        case Family::Field:
            return std::vector<long long>(gf.t, static_cast<long long>(gf.p));
        case Family::ZModPk: return {size};
        case Family::GaloisRing: return std::vector<long long>(shape.galois_t(), zq);
        case Family::FieldModX2: return std::vector<long long>(2 * gf.t, static_cast<long long>(gf.p));
        case Family::FieldModX3: return std::vector<long long>(3 * gf.t, static_cast<long long>(gf.p));
        case Family::Shape: break;
    }
    throw domain_error("no concrete witness for Shape factor");
}

std::vector<long long> Factor::add_tuple(long long x) const {
    auto orders = cyclic_orders();
    std::vector<long long> t(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        t[i] = x % orders[i];
        x /= orders[i];
    }
    return t;
}

long long ConcreteRing::add(long long x, long long y) const {
    long long idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        long long sz = factors[i].size;
        idx += factors[i].add(x % sz, y % sz) * strides[i];
        x /= sz;
        y /= sz;
    }
    return idx;
}

long long ConcreteRing::neg(long long x) const {
    long long idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        long long sz = factors[i].size;
        idx += factors[i].neg(x % sz) * strides[i];
        x /= sz;
    }
    return idx;
}

long long ConcreteRing::mul(long long x, long long y) const {
    long long idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        long long sz = factors[i].size;
        idx += factors[i].mul(x % sz, y % sz) * strides[i];
        x /= sz;
        y /= sz;
    }
    return idx;
}

std::vector<long long> ConcreteRing::add_tuple(long long x) const {
    std::vector<long long> t;
    for (const auto& f : factors) {
        auto ft = f.add_tuple(x % f.size);
        t.insert(t.end(), ft.begin(), ft.end());
        x /= f.size;
    }
    return t;
}

ConcreteRing build_concrete_ring(const RingSpec& spec, long long max_order) {
    if (!spec.constructible())
        throw domain_error("ring spec '" + spec.label() + "' has a formula-only Shape factor");
    Int order = spec.order();
    if (order > max_order)
        throw domain_error("ring order " + order.str() + " exceeds oracle bound " +
                           std::to_string(max_order));

    std::vector<Factor> fs;
    std::vector<long long> cyc;
    for (const auto& sh : spec.factors) {
        Factor f;
        f.shape = sh;
        f.size = static_cast<long long>(sh.r());
        switch (sh.family) {
            case Family::Field: f.gf = Gf(sh.p, sh.a); break;
            case Family::ZModPk: break;
            case Family::GaloisRing: {
                Gf base(sh.p, sh.galois_t());
                f.zq = static_cast<long long>(ipow(Int(sh.p), sh.galois_s()));
                f.gr_modulus = base.modulus;  // monic lift, same integer coefficients
                break;
            }
            case Family::FieldModX2: f.gf = Gf(sh.p, sh.b); break;
            case Family::FieldModX3: f.gf = Gf(sh.p, sh.a - sh.b); break;
            case Family::Shape: throw domain_error("unreachable");
        }
        auto co = f.cyclic_orders();
        cyc.insert(cyc.end(), co.begin(), co.end());
        fs.push_back(std::move(f));
    }

    ConcreteRing ring{spec, static_cast<long long>(order), std::move(fs), {}, 0, {}, {}, AbelianGroup(cyc)};
    ring.strides.resize(ring.factors.size());
    long long acc = 1;
    for (std::size_t i = 0; i < ring.factors.size(); ++i) {
        ring.strides[i] = acc;
        acc *= ring.factors[i].size;
    }
    long long one = 0;
    for (std::size_t i = 0; i < ring.factors.size(); ++i) one += ring.factors[i].one() * ring.strides[i];
    ring.one = one;

    // units by exhaustive inverse search
    ring.unit_mask.assign(static_cast<std::size_t>(ring.n), 0);
    for (long long x = 0; x < ring.n; ++x) {
        for (long long y = x; y < ring.n; ++y) {
            if (ring.mul(x, y) == one) {
                ring.unit_mask[static_cast<std::size_t>(x)] = 1;
                ring.unit_mask[static_cast<std::size_t>(y)] = 1;
                break;  // commutative: x has an inverse
            }
        }
    }
    for (long long x = 0; x < ring.n; ++x)
        if (ring.unit_mask[static_cast<std::size_t>(x)]) ring.units.push_back(x);

    if (Int(static_cast<long long>(ring.units.size())) != spec.units_count())
        throw std::logic_error("unit count mismatch for " + spec.label());
    return ring;
}

}  // namespace cayley
