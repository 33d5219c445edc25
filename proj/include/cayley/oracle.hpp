#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/ring_spec.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

struct non_integral_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// G = Z_{d1} x ... x Z_{dk}; elements are mixed-radix indices, component 0 least significant
struct AbelianGroup {
    std::vector<long long> orders;
    long long n = 1;
    std::vector<long long> strides;

    explicit AbelianGroup(std::vector<long long> ds);
    std::vector<long long> tuple(long long idx) const;
    long long index(const std::vector<long long>& t) const;
    long long add(long long x, long long y) const;
    long long neg(long long x) const;
};

// GF(p^t); elements are base-p digit encodings of polynomials modulo the
// lexicographically smallest monic irreducible of degree t (low-degree-first order)
struct Gf {
    std::uint64_t p = 0;
    unsigned t = 1;
    long long q = 0;
    std::vector<long long> modulus;  // x^t + sum modulus[i] x^i

    Gf() = default;
    Gf(std::uint64_t p_, unsigned t_);
    long long add(long long x, long long y) const;
    long long neg(long long x) const;
    long long mul(long long x, long long y) const;
    long long one() const { return 1; }
};

// element-level local factor
struct Factor {
    LocalShape shape;
    long long size = 0;
    Gf gf;                            // Field / base field of FieldModX2/X3
    std::vector<long long> gr_modulus;  // GaloisRing: monic lift, coeffs mod p^s
    long long zq = 0;                 // ZModPk / GaloisRing coefficient modulus p^s

    long long add(long long x, long long y) const;
    long long neg(long long x) const;
    long long mul(long long x, long long y) const;
    long long one() const;
    std::vector<long long> cyclic_orders() const;
    std::vector<long long> add_tuple(long long x) const;
};

struct ConcreteRing {
    RingSpec spec;
    long long n = 0;
    std::vector<Factor> factors;
    std::vector<long long> strides;
    long long one = 0;
    std::vector<char> unit_mask;
    std::vector<long long> units;  // ascending element indices
    AbelianGroup group;            // additive structure

    long long add(long long x, long long y) const;
    long long neg(long long x) const;
    long long mul(long long x, long long y) const;
    long long sub(long long x, long long y) const { return add(x, neg(y)); }
    // additive tuple of an element w.r.t. group.orders
    std::vector<long long> add_tuple(long long x) const;
};

// builds each factor element-wise and finds units by exhaustive inverse search;
// rejects Shape factors and |R| > max_order
ConcreteRing build_concrete_ring(const RingSpec& spec, long long max_order = 5000);

enum class Mode { Difference, Sum };

struct GraphInstance {
    int n = 0;
    Mode mode = Mode::Difference;
    std::string label;
    std::vector<std::uint8_t> adj;  // row-major

    bool at(int i, int j) const { return adj[static_cast<std::size_t>(i) * n + j] != 0; }
    long long degree() const;  // loop counts 1; verifies regularity
    std::string edge_list() const;  // "u v" lines, loops as "u u", DIMACS-like header
};

GraphInstance cayley_graph(const ConcreteRing& ring, Mode mode);

// connection set given by element indices; rejects 0 in S or non-symmetric S
GraphInstance general_cayley_graph(const AbelianGroup& g, const std::vector<long long>& s_set, Mode mode);

struct ProbeResult {
    bool connected = false;
    bool bipartite = false;  // of the loop-deleted graph
    long long loop_count = 0;
    long long edge_count = 0;  // loops counted once
    std::optional<std::pair<long long, long long>> common_neighbor_profile;  // (e, d)
};
ProbeResult structural_probe(const GraphInstance& g);

// e_chi = sum_{s in S} chi(s) for every character, indexed like group elements;
// asserts |Im| < 1e-9 (requires symmetric S)
std::vector<double> char_sum_eigenvalues(const AbelianGroup& g, const std::vector<long long>& s_set);

struct CharacterClasses {
    std::vector<double> e;      // per character
    std::vector<char> is_real;  // chi = chi^{-1}, i.e. 2a == 0 componentwise
    struct Cluster {
        double value;
        long long count = 0, real_count = 0, nonreal_count = 0;
    };
    std::vector<Cluster> clusters;  // descending by value, tolerance-grouped
    // index of the cluster holding v (tolerance 1e-9), or -1
    long long cluster_of(double v) const;
};
CharacterClasses character_classes(const AbelianGroup& g, const std::vector<long long>& s_set);

// multiplicity map of X^+(G,S): value -> m^+, descending by value
std::vector<std::pair<double, long long>> sum_multiplicities(const AbelianGroup& g,
                                                             const std::vector<long long>& s_set);

// exact integer spectrum of the adjacency matrix; throws non_integral_error
// if the characteristic polynomial does not split over the integers
Spectrum integer_spectrum_from_adjacency(const GraphInstance& g);

// exact characteristic polynomial det(xI - A), ascending coefficients,
// via fraction-free (Bareiss) elimination; exposed for cross-checks
std::vector<Int> charpoly_fraction_free(const std::vector<std::vector<Int>>& a);

}  // namespace cayley
