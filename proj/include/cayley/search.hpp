#pragma once

#include <set>

#include "cayley/classify.hpp"
#include "cayley/ring_spec.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

struct SearchConfig {
    Int max_vertices = 200;
    std::set<Family> families = {Family::Field, Family::ZModPk, Family::GaloisRing,
                                 Family::FieldModX2, Family::FieldModX3};
    unsigned max_factors = 8;
    bool require_odd_type = false;
};

// every canonical RingSpec (multiset of shapes from the allowed families) with
// |R| <= max_vertices and s <= max_factors, deduplicated, ascending (|R|, s, label)
std::vector<RingSpec> enumerate_specs(const SearchConfig& cfg);

// ---- Table 1 -------------------------------------------------------------------

struct Table1Row {
    std::string label;
    Int v, kappa, kappa_bar, energy;
    bool iso_star = false;
};
std::vector<Table1Row> reproduce_table1();
std::string table1_csv(const std::vector<Table1Row>& rows);

// ---- the finite classification lists ----------------------------------------------

// products of three finite fields equienergetic with their complement: (3,5,5), (4,4,4)
std::vector<RingSpec> list_three_field_complement_equienergetic(const Int& max_q = 64);
// odd-type non-local Ramanujan pairs {G, G+} with field orders up to max_q
std::vector<RingSpec> list_ramanujan_pairs_gr_grplus(const Int& max_q = 50);
// the 17 two-field rings with {G, Gbar} equienergetic non-isospectral and both Ramanujan
std::vector<RingSpec> list_ramanujan_pairs_gr_grbar();
// the 21 two-field rings whose complement is Ramanujan (pair non-isospectral)
std::vector<RingSpec> list_complement_ramanujan_rings();
// the 14 two-field Ramanujan triples
std::vector<RingSpec> list_ramanujan_triples_two_fields();
// odd n <= max_n with {G, G+, Gbar} over Z_n a Ramanujan triple
std::vector<std::uint64_t> list_zn_ramanujan_triples(std::uint64_t max_n = 200);

// pairs of rings of different shape but equal order with E(G_A) = E(G_B),
// e.g. {F9, F3xF3}; spectra of distinct shapes are reported with an iso flag
struct CrossRingPair {
    RingSpec a, b;
    Int energy;
    bool isospectral = false;
};
std::vector<CrossRingPair> find_cross_ring_equienergetic(const SearchConfig& cfg);

// ---- Kronecker bundles -----------------------------------------------------------

enum class Role { GR, GRplus, GRbar, GRminus };
Role role_from_string(const std::string& s);
const char* role_name(Role r);

// spectrum of a role; GRminus is the sum graph over R \ (R* u {0}), computed
// through the oracle (needs a constructible spec)
Spectrum role_spectrum(const RingSpec& spec, Role role);

struct BundleMember {
    std::string label;
    Spectrum spectrum;
};

struct GraphBundle {
    std::vector<BundleMember> members;
    Int n = 0;
    bool all_equienergetic = false;
    Int energy;
    std::vector<std::pair<std::size_t, std::size_t>> isospectral_pairs;

    json to_json() const;
};

// kron-composes role spectra; rejects recipes mixing vertex counts
GraphBundle build_bundle(const std::vector<std::pair<std::string, std::vector<std::pair<RingSpec, Role>>>>& recipe);

// named constructions
GraphBundle bundle_product_pair_quadruple(const RingSpec& r);  // {G, G+} x {F9, F3xF3} 4-tuple
GraphBundle bundle_sixteen_tuple_180();                        // 16 graphs on 180 vertices
GraphBundle bundle_twenty_three_420();                         // 23 graphs on 420 vertices

}  // namespace cayley
