#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/ints.hpp"

namespace cayley {

struct VerifyReport {
    long long checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// adjacency-derived integer spectra (both modes) vs closed forms, edge counts,
// loop placement, and connectivity/bipartiteness transfer, over every
// constructible ring with |R| <= max_order
VerifyReport verify_oracle_agreement(const Int& max_order);

// closed-form energies vs spectral sums over constructible rings with
// |R| <= max_order and at most max_factors local factors
VerifyReport verify_energy_closed_forms(const Int& max_order, unsigned max_factors);

// equienergy of X(Z_n,S)/X^+(Z_n,S) and the multiplicity relation for seeded
// random symmetric subsets
VerifyReport verify_random_symmetric_pairs(int trials, int n_min, int n_max, std::uint64_t seed);

// strongly-regular classification vs common-neighbor counts from adjacency
VerifyReport verify_srg_agreement(const Int& max_order);

// strongly-almost-symmetric structure and trace laws of sum-graph spectra
VerifyReport verify_sum_spectra_structure(const Int& max_order);

}  // namespace cayley
