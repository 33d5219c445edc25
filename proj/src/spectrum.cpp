#include "cayley/spectrum.hpp"

#include <cstddef>

namespace cayley {

void Spectrum::add(const Int& lambda, const Int& multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = entries.emplace(lambda, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) entries.erase(it);
    }
}

Int Spectrum::mult_sum() const {
    Int t = 0;
    for (const auto& [lam, m] : entries) t += m;
    return t;
}

Int Spectrum::trace() const {
    Int t = 0;
    for (const auto& [lam, m] : entries) t += lam * m;
    return t;
}

bool Spectrum::symmetric() const {
    for (const auto& [lam, m] : entries)
        if (mult(-lam) != m) return false;
    return true;
}

bool Spectrum::strongly_almost_symmetric() const {
    for (const auto& [lam, m] : entries) {
        if (lam == degree || lam == -degree) continue;
        if (mult(-lam) != m) return false;
    }
    Int d = mult(degree) - mult(-degree);
    return d == 1 || d == -1;
}

Int Spectrum::max_nonprincipal_abs() const {
    Int best = 0;
    for (const auto& [lam, m] : entries) {
        if (lam == degree) continue;
        Int a = abs(lam);
        if (a > best) best = a;
    }
    return best;
}

Int Spectrum::max_abs_excluding_pm_degree() const {
    Int best = 0;
    for (const auto& [lam, m] : entries) {
        if (lam == degree || lam == -degree) continue;
        Int a = abs(lam);
        if (a > best) best = a;
    }
    return best;
}

std::string Spectrum::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [lam, m] : entries) {
        if (!first) out += ",";
        first = false;
        out += "[" + lam.str() + "]^" + m.str();
    }
    return out + "}";
}

Spectrum unitary_spectrum(const RingSpec& spec) {
    const std::size_t s = spec.s();
    if (s > 30) throw domain_error("too many local factors");
    Spectrum out;
    out.n = spec.order();
    out.degree = spec.units_count();

    // eigenvalue for C subset of factors: (-1)^|C| prod_{j in C} m_j prod_{i not in C} |R_i*|,
    // multiplicity prod_{j in C} (q_j - 1); distinct subsets with equal value are merged
    for (std::uint64_t mask = 0; mask < (1ull << s); ++mask) {
        Int lam = 1, mult = 1;
        int sign = 1;
        for (std::size_t j = 0; j < s; ++j) {
            const auto& f = spec.factors[j];
            if (mask & (1ull << j)) {
                sign = -sign;
                lam *= f.m();
                mult *= f.residue_order() - 1;
            } else {
                lam *= f.units();
            }
        }
        out.add(sign < 0 ? Int(-lam) : lam, mult);
    }
    Int q_prod = 1;
    for (const auto& f : spec.factors) q_prod *= f.residue_order();
    out.add(0, spec.order() - q_prod);
    return out;
}

namespace {

// sum-graph spectrum of a single local factor of odd order
Spectrum local_sum_spectrum(const LocalShape& f) {
    Spectrum out;
    out.n = f.r();
    out.degree = f.units();
    const Int r = f.r(), m = f.m();
    if (f.is_field()) {
        out.add(r - 1, 1);
        out.add(1, (r - 1) / 2);
        out.add(-1, (r - 1) / 2);
    } else {
        out.add(r - m, 1);
        out.add(m, (r - m) / (2 * m));
        out.add(0, (r / m) * (m - 1));
        out.add(-m, (r - m) / (2 * m));
    }
    return out;
}

}  // namespace

Spectrum unitary_sum_spectrum(const RingSpec& spec) {
    Spectrum acc;
    acc.n = 1;
    acc.degree = 1;
    acc.entries = {{1, 1}};
    for (const auto& f : spec.factors) {
        RingSpec single({f});
        Spectrum fs = f.even() ? unitary_spectrum(single) : local_sum_spectrum(f);
        acc = kron_spectrum(acc, fs);
    }
    return acc;
}

Spectrum complement_spectrum(const Spectrum& s) {
    if (s.trace() != 0)
        throw domain_error("complement of a spectrum with loops (nonzero trace) is not supported");
    Spectrum out;
    out.n = s.n;
    out.degree = s.n - s.degree - 1;
    out.add(out.degree, 1);
    for (const auto& [lam, m] : s.entries) {
        if (lam == s.degree) {
            // extra principal copies come from other components: they are non-principal
            if (m > 1) out.add(-1 - lam, m - 1);
        } else {
            out.add(-1 - lam, m);
        }
    }
    return out;
}

Spectrum kron_spectrum(const Spectrum& a, const Spectrum& b) {
    Spectrum out;
    out.n = a.n * b.n;
    out.degree = a.degree * b.degree;
    for (const auto& [la, ma] : a.entries)
        for (const auto& [lb, mb] : b.entries) out.add(la * lb, ma * mb);
    return out;
}

Int energy(const Spectrum& s) {
    Int e = 0;
    for (const auto& [lam, m] : s.entries) e += abs(lam) * m;
    return e;
}

std::pair<Int, Int> closed_form_energies(const RingSpec& spec) {
    const Int units = spec.units_count();
    const Int order = spec.order();
    const Int two_s = ipow(Int(2), static_cast<unsigned>(spec.s()));
    Int q_prod = 1, two_minus_q_prod = 1;
    for (const auto& f : spec.factors) {
        Int q = f.residue_order();
        q_prod *= q;
        two_minus_q_prod *= 2 - q;
    }
    Int e_gr = two_s * units;
    Int e_grbar = 2 * (order - 1) + (two_s - 2) * units - q_prod + two_minus_q_prod;
    return {e_gr, e_grbar};
}

std::pair<Int, Int> edge_counts(const RingSpec& spec) {
    const Int k = spec.units_count();
    const Int r = spec.order();
    return {k * r / 2, k * ((r + 1) / 2)};
}

}  // namespace cayley
