#include "cayley/verify.hpp"

#include <cmath>
#include <random>

#include "cayley/classify.hpp"
#include "cayley/oracle.hpp"
#include "cayley/search.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

namespace {

bool probe_is_srg(const ProbeResult& p) { return p.loop_count == 0 && p.common_neighbor_profile.has_value(); }

}  // namespace

VerifyReport verify_oracle_agreement(const Int& max_order) {
    VerifyReport rep;
    SearchConfig cfg;
    cfg.max_vertices = max_order;
    for (const RingSpec& spec : enumerate_specs(cfg)) {
        ConcreteRing ring = build_concrete_ring(spec, max_order.convert_to<long long>());
        GraphInstance gd = cayley_graph(ring, Mode::Difference);
        GraphInstance gs = cayley_graph(ring, Mode::Sum);
        ++rep.checked;

        Spectrum sd = integer_spectrum_from_adjacency(gd);
        Spectrum closed_d = unitary_spectrum(spec);
        if (!(sd == closed_d))
            rep.failures.push_back(spec.label() + " difference spectrum: adjacency " + sd.str() +
                                   " vs closed form " + closed_d.str());
        Spectrum ss = integer_spectrum_from_adjacency(gs);
        Spectrum closed_s = unitary_sum_spectrum(spec);
        if (!(ss == closed_s))
            rep.failures.push_back(spec.label() + " sum spectrum: adjacency " + ss.str() +
                                   " vs closed form " + closed_s.str());

        ProbeResult pd = structural_probe(gd);
        ProbeResult ps = structural_probe(gs);
        auto [e_gr, e_grplus] = edge_counts(spec);
        if (Int(pd.edge_count) != e_gr)
            rep.failures.push_back(spec.label() + " edge count G: " + std::to_string(pd.edge_count) +
                                   " vs " + e_gr.str());
        if (Int(ps.edge_count) != e_grplus)
            rep.failures.push_back(spec.label() + " edge count G+: " + std::to_string(ps.edge_count) +
                                   " vs " + e_grplus.str());

        Int expected_loops = spec.order_is_odd() ? spec.units_count() : Int(0);
        if (Int(ps.loop_count) != expected_loops)
            rep.failures.push_back(spec.label() + " loop count: " + std::to_string(ps.loop_count) +
                                   " vs " + expected_loops.str());
        if (pd.loop_count != 0) rep.failures.push_back(spec.label() + " difference graph has loops");

        // a loop is an odd closed walk: bipartite means loop-free and 2-colorable
        bool d_cn = pd.connected && !(pd.bipartite && pd.loop_count == 0);
        bool s_cn = ps.connected && !(ps.bipartite && ps.loop_count == 0);
        if (d_cn != s_cn)
            rep.failures.push_back(spec.label() + " connected+nonbipartite transfer fails");
        if (pd.connected != (closed_d.mult(closed_d.degree) == 1))
            rep.failures.push_back(spec.label() + " connectivity vs principal multiplicity");
        if (pd.bipartite != (closed_d.mult(-closed_d.degree) >= 1 && closed_d.degree != 0))
            rep.failures.push_back(spec.label() + " bipartiteness vs -degree multiplicity");
    }
    return rep;
}

VerifyReport verify_energy_closed_forms(const Int& max_order, unsigned max_factors) {
    VerifyReport rep;
    SearchConfig cfg;
    cfg.max_vertices = max_order;
    cfg.max_factors = max_factors;
    for (const RingSpec& spec : enumerate_specs(cfg)) {
        ++rep.checked;
        Spectrum gr = unitary_spectrum(spec);
        Spectrum grplus = unitary_sum_spectrum(spec);
        Spectrum grbar = complement_spectrum(gr);
        auto [e_gr, e_grbar] = closed_form_energies(spec);
        if (energy(gr) != e_gr)
            rep.failures.push_back(spec.label() + " E(G) " + energy(gr).str() + " != " + e_gr.str());
        if (energy(grplus) != e_gr)
            rep.failures.push_back(spec.label() + " E(G+) " + energy(grplus).str() + " != " + e_gr.str());
        if (energy(grbar) != e_grbar)
            rep.failures.push_back(spec.label() + " E(Gbar) " + energy(grbar).str() + " != " +
                                   e_grbar.str());
        Int n = spec.order();
        if (gr.mult_sum() != n || grplus.mult_sum() != n || grbar.mult_sum() != n)
            rep.failures.push_back(spec.label() + " multiplicities do not sum to |R|");
        if (gr.degree != spec.units_count() || grplus.degree != spec.units_count())
            rep.failures.push_back(spec.label() + " degree != |R*|");
        if (grbar.degree != n - spec.units_count() - 1)
            rep.failures.push_back(spec.label() + " complement degree != |R|-|R*|-1");
        if (gr.trace() != 0) rep.failures.push_back(spec.label() + " trace(G) != 0");
    }
    return rep;
}

VerifyReport verify_random_symmetric_pairs(int trials, int n_min, int n_max, std::uint64_t seed) {
    VerifyReport rep;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - n_min + 1));
        AbelianGroup g({n});
        std::vector<long long> s_set;
        while (s_set.empty()) {
            for (long long x = 1; 2 * x <= n; ++x) {
                if (rng() % 2 == 0) continue;
                s_set.push_back(x);
                if (g.neg(x) != x) s_set.push_back(g.neg(x));
            }
        }
        ++rep.checked;
        auto evals = char_sum_eigenvalues(g, s_set);
        // e_{chi^{-1}} = e_chi for symmetric S
        for (long long chi = 0; chi < g.n; ++chi) {
            long long inv = g.neg(chi);
            if (std::abs(evals[static_cast<std::size_t>(chi)] - evals[static_cast<std::size_t>(inv)]) >
                1e-9) {
                rep.failures.push_back("n=" + std::to_string(n) + ": e_chi != e_chi_inv");
                break;
            }
        }
        double e_diff = 0;
        for (double v : evals) e_diff += std::abs(v);
        auto mm = sum_multiplicities(g, s_set);
        double e_sum = 0;
        long long mult_total = 0;
        for (auto [v, m] : mm) {
            e_sum += std::abs(v) * static_cast<double>(m);
            mult_total += m;
        }
        if (std::abs(e_diff - e_sum) > 1e-6 * n)
            rep.failures.push_back("n=" + std::to_string(n) + ": E(X) " + std::to_string(e_diff) +
                                   " vs E(X+) " + std::to_string(e_sum));
        if (mult_total != n)
            rep.failures.push_back("n=" + std::to_string(n) + ": sum multiplicities " +
                                   std::to_string(mult_total) + " != n");
        // m(l) + m(-l) = m+(l) + m+(-l) per eigenvalue class
        CharacterClasses cc = character_classes(g, s_set);
        auto mult_of = [&](const std::vector<std::pair<double, long long>>& mmv, double v) {
            for (auto [val, m] : mmv)
                if (std::abs(val - v) <= 1e-9) return m;
            return 0ll;
        };
        for (const auto& cl : cc.clusters) {
            if (cl.value < -1e-9) continue;  // handle each +- class once
            long long m_pos = cl.count;
            long long mirror = cc.cluster_of(-cl.value);
            long long m_neg = cl.value <= 1e-9 ? 0
                              : mirror < 0     ? 0
                                           : cc.clusters[static_cast<std::size_t>(mirror)].count;
            long long mp_pos = mult_of(mm, cl.value);
            long long mp_neg = cl.value <= 1e-9 ? 0 : mult_of(mm, -cl.value);
            if (m_pos + m_neg != mp_pos + mp_neg) {
                rep.failures.push_back("n=" + std::to_string(n) +
                                       ": multiplicity relation fails at value " +
                                       std::to_string(cl.value));
                break;
            }
        }
    }
    return rep;
}

VerifyReport verify_srg_agreement(const Int& max_order) {
    VerifyReport rep;
    SearchConfig cfg;
    cfg.max_vertices = max_order;
    for (const RingSpec& spec : enumerate_specs(cfg)) {
        ++rep.checked;
        ConcreteRing ring = build_concrete_ring(spec);
        SrgVerdict v = strongly_regular_classify(spec);
        ProbeResult pd = structural_probe(cayley_graph(ring, Mode::Difference));
        ProbeResult ps = structural_probe(cayley_graph(ring, Mode::Sum));
        if (v.gr_is_srg != probe_is_srg(pd))
            rep.failures.push_back(spec.label() + " srg(G) classification vs probe");
        if (v.grplus_is_srg != probe_is_srg(ps))
            rep.failures.push_back(spec.label() + " srg(G+) classification vs probe");
        if (v.gr_is_srg && pd.common_neighbor_profile) {
            auto [e, d] = *pd.common_neighbor_profile;
            if (v.e != e || v.d != d)
                rep.failures.push_back(spec.label() + " srg parameters (" + v.e.str() + "," +
                                       v.d.str() + ") vs probe (" + std::to_string(e) + "," +
                                       std::to_string(d) + ")");
        }
    }
    return rep;
}

VerifyReport verify_sum_spectra_structure(const Int& max_order) {
    VerifyReport rep;
    SearchConfig cfg;
    cfg.max_vertices = max_order;
    cfg.families.insert(Family::Shape);
    for (const RingSpec& spec : enumerate_specs(cfg)) {
        ++rep.checked;
        Spectrum gr = unitary_spectrum(spec);
        Spectrum grplus = unitary_sum_spectrum(spec);
        if (spec.order_is_odd()) {
            if (!grplus.strongly_almost_symmetric())
                rep.failures.push_back(spec.label() + " G+ spectrum not strongly almost symmetric");
            if (grplus.trace() != spec.units_count())
                rep.failures.push_back(spec.label() + " trace(G+) != |R*|");
        } else if (grplus.trace() != 0) {
            rep.failures.push_back(spec.label() + " trace(G+) != 0 for even |R|");
        }
        if (spec.is_odd_type() == (gr == grplus))
            rep.failures.push_back(spec.label() + " odd-type vs isospectrality of G and G+");
    }
    return rep;
}

}  // namespace cayley
