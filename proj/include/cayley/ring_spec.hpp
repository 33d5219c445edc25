#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/ints.hpp"

namespace cayley {

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// How a local factor of order p^a with maximal ideal of order p^b is realized.
// Shape carries no concrete witness: formulas only, the oracle refuses it.
enum class Family { Field, ZModPk, GaloisRing, FieldModX2, FieldModX3, Shape };

const char* family_name(Family f);

// Local ring of order r = p^a whose maximal ideal has order m = p^b (0 <= b < a).
struct LocalShape {
    std::uint64_t p = 0;
    unsigned a = 0;
    unsigned b = 0;
    Family family = Family::Shape;

    Int r() const { return ipow(Int(p), a); }
    Int m() const { return ipow(Int(p), b); }
    Int units() const { return r() - m(); }
    Int residue_order() const { return ipow(Int(p), a - b); }  // q = r/m
    bool is_field() const { return b == 0; }
    bool even() const { return p == 2; }
    // GaloisRing parameters: r = p^{s*t}, m = p^{(s-1)t}
    unsigned galois_t() const { return a - b; }
    unsigned galois_s() const { return a / (a - b); }

    std::string label() const;

    friend bool operator==(const LocalShape& x, const LocalShape& y) {
        return x.p == y.p && x.a == y.a && x.b == y.b && x.family == y.family;
    }
    friend bool operator<(const LocalShape& x, const LocalShape& y);
};

// canonicalizing constructors (degenerate parameters collapse to simpler families)
LocalShape make_field(std::uint64_t q);
LocalShape make_zmod(std::uint64_t p, unsigned k);
LocalShape make_galois_ring(std::uint64_t p, unsigned s, unsigned t);
LocalShape make_field_mod_x2(std::uint64_t q);
LocalShape make_field_mod_x3(std::uint64_t q);
LocalShape make_shape(std::uint64_t r, std::uint64_t m);

// Finite commutative ring with identity, as the multiset of its local factors.
// Factors are kept canonically sorted; equality is multiset equality.
struct RingSpec {
    std::vector<LocalShape> factors;

    RingSpec() = default;
    explicit RingSpec(std::vector<LocalShape> fs);

    std::size_t s() const { return factors.size(); }
    Int order() const;
    Int units_count() const;
    bool is_local() const { return factors.size() == 1; }
    bool all_fields() const;
    bool order_is_odd() const;
    bool constructible() const;  // no Shape factor

    // odd type: every even-order factor has 2m_i < r_i, and the odd part is nontrivial
    bool is_odd_type() const;

    // (E(R), O(R)); an empty side is nullopt, never a trivial one-factor ring
    std::pair<std::optional<RingSpec>, std::optional<RingSpec>> even_odd_split() const;

    std::string label() const;  // canonical printer

    friend bool operator==(const RingSpec& x, const RingSpec& y) { return x.factors == y.factors; }
    friend bool operator<(const RingSpec& x, const RingSpec& y);
};

// Grammar: atom := "F"<q> | "Z"<n> | "GR("<p^s>","<t>")" | "F"<q>"[x]/(x^2)"
//                | "F"<q>"[x]/(x^3)" | "L("<r>","<m>")" ;  spec := atom ("x" atom)*
// "Zn" with composite n is split into Z_{p^k} factors by CRT.
RingSpec parse_ring_spec(const std::string& text);

}  // namespace cayley
