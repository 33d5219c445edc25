#pragma once

#include <functional>
#include <map>
#include <string>

#include "cayley/ring_spec.hpp"

namespace cayley {

// Exact integral spectrum of a regular graph (loops allowed): eigenvalue -> multiplicity.
struct Spectrum {
    Int n = 0;
    Int degree = 0;
    std::map<Int, Int, std::greater<Int>> entries;

    Int mult(const Int& lambda) const {
        auto it = entries.find(lambda);
        return it == entries.end() ? Int(0) : it->second;
    }
    void add(const Int& lambda, const Int& multiplicity);

    Int mult_sum() const;
    Int trace() const;  // = number of loops for an adjacency spectrum
    bool symmetric() const;
    // m(lambda) = m(-lambda) for all lambda != +-degree, |m(deg) - m(-deg)| = 1
    bool strongly_almost_symmetric() const;
    // max |lambda| over values != degree (so -degree counts when present); 0 if none
    Int max_nonprincipal_abs() const;
    // max |lambda| over values not in {degree, -degree}; 0 if none
    Int max_abs_excluding_pm_degree() const;

    std::string str() const;  // {[6]^1,[3]^1,[0]^6,[-3]^1}

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.n == b.n && a.entries == b.entries;
    }
};

// spectrum of G_R = X(R, R*) from the local shape data
Spectrum unitary_spectrum(const RingSpec& spec);

// spectrum of G_R^+ = X^+(R, R*): even factors contribute their G_R spectrum,
// odd factors the sum-graph spectrum, composed by Kronecker product
Spectrum unitary_sum_spectrum(const RingSpec& spec);

// complement of a loopless regular graph; rejects spectra with nonzero trace
Spectrum complement_spectrum(const Spectrum& s);

Spectrum kron_spectrum(const Spectrum& a, const Spectrum& b);

Int energy(const Spectrum& s);

// (E(G_R), E(G_R-bar)) closed forms
std::pair<Int, Int> closed_form_energies(const RingSpec& spec);

// (e(G_R), e(G_R^+)); loops counted once
std::pair<Int, Int> edge_counts(const RingSpec& spec);

}  // namespace cayley
