#pragma once

#include <json.hpp>

#include "cayley/ring_spec.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

using json = nlohmann::ordered_json;

// ---- pairwise relations -----------------------------------------------------

struct EquienergeticVerdict {
    bool equal_energy = false;
    bool same_order = false;  // the strict notion also needs equal vertex counts
    Int energy_a, energy_b;
};
EquienergeticVerdict is_equienergetic(const Spectrum& a, const Spectrum& b);

bool is_isospectral(const Spectrum& a, const Spectrum& b);

// ---- single-spectrum predicates ----------------------------------------------

struct SpectralPredicates {
    bool connected = false;    // m(degree) == 1
    bool bipartite = false;    // m(-degree) >= 1
    bool integral = true;      // spectra here are integral by construction
    bool strongly_almost_symmetric = false;
};
SpectralPredicates spectral_predicates(const Spectrum& s);

// Ramanujan verdicts. `ramanujan` is the strict reading: connected and
// lambda^2 <= 4(deg-1) where lambda counts -deg when present. `eigenvalue_bound`
// drops connectivity and excludes the values +-deg (vacuously true when nothing
// is left); this is the reading under which the complement of a local ring,
// always a disjoint union of complete graphs, is "always Ramanujan".
struct RamanujanWitness {
    bool ramanujan = false;
    bool connected = false;
    bool bound_ok = false;        // strict lambda
    bool eigenvalue_bound = false;
    Int lambda;        // max |nonprincipal| counting -deg
    Int lambda_inner;  // max |value| excluding +-deg
    std::string reason;
};
RamanujanWitness is_ramanujan(const Spectrum& s);

// Eq-level arithmetic criteria, exact integers throughout.
bool local_ramanujan_condition(const Int& r, const Int& m);          // r=2m, or 4r >= (m+2)^2 and m != 2
bool field_pair_ramanujan_condition(const Int& q1, const Int& q2);   // (q2+1)^2 <= 4 q1 (q2-1), 3 <= q1 <= q2
bool complement_ramanujan_condition(const Int& q1, const Int& q2);   // q2(q2-8) <= 4(q1-4), 3 <= q1 <= q2
bool equienergetic_with_complement(const RingSpec& spec);            // 2(|R|-|R*|-1) = prod q - prod (2-q)

// strongly regular classification of G_R and G_R^+
struct SrgVerdict {
    bool gr_is_srg = false;
    bool grplus_is_srg = false;
    // srg(n, k, e, d) for G_R when gr_is_srg
    Int n, k, e, d;
};
SrgVerdict strongly_regular_classify(const RingSpec& spec);

// ---- reports ------------------------------------------------------------------

enum class PairKind { GRvsGRplus, GRvsGRbar };

struct theorem_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PairReport {
    RingSpec spec;
    PairKind kind = PairKind::GRvsGRplus;
    Spectrum a, b;  // G_R and the partner
    EquienergeticVerdict equienergetic;
    bool isospectral = false;
    SpectralPredicates pred_a, pred_b;
    RamanujanWitness ram_a, ram_b;
    bool pair_is_equienergetic_nonisospectral = false;
    bool pair_is_ramanujan = false;  // both slots, with the complement convention for GRbar
    std::optional<bool> theorem_verdict;  // the classification verdict where one applies
    std::vector<std::string> theorem_tags;
    bool no_oracle_witness = false;  // spec contains a Shape factor
    bool known_divergence = false;
    std::string divergence_note;

    json to_json() const;
    std::string text() const;
};

// Computes everything spectrally and cross-checks the classification lists;
// disagreement raises theorem_mismatch except for the single documented
// boundary ring F2xF3 (see divergence_note there).
PairReport pair_report(const RingSpec& spec, PairKind kind);

struct TripleReport {
    RingSpec spec;
    Spectrum gr, grplus, grbar;
    bool mutually_equienergetic = false;
    bool pairwise_nonisospectral = false;
    bool all_ramanujan = false;
    bool is_triple = false;            // equienergetic + pairwise non-isospectral
    bool is_ramanujan_triple = false;  // and all three Ramanujan
    bool divisibility_ok = true;       // 8 | E (|R| even) resp. 16 | E (|R| odd), two-field triples
    Int energy;
    std::optional<bool> theorem_verdict;
    std::vector<std::string> theorem_tags;
    bool no_oracle_witness = false;

    json to_json() const;
    std::string text() const;
};

TripleReport triple_report(const RingSpec& spec);

// ---- the finite classification lists, as exact-arithmetic evaluators -----------

// {G_R, G_R^+} equienergetic non-isospectral Ramanujan, R odd-type non-local
bool thm54a_member(const RingSpec& spec);
// {G_R, Gbar_R} equienergetic non-isospectral, both Ramanujan, R = product of two local rings
bool thm54b_member(const RingSpec& spec);
// {G_R, Gbar_R} equienergetic non-isospectral with Gbar_R Ramanujan (two local factors)
bool complement_ramanujan_pair_member(const RingSpec& spec);
// {G_R, G_R^+, Gbar_R} equienergetic non-isospectral Ramanujan triple
bool ramanujan_triple_member(const RingSpec& spec);

json spectrum_to_json(const Spectrum& s);

}  // namespace cayley
