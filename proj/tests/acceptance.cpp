// Acceptance suite: one criterion per invocation (argv[1] in 1..8), or all
// when run without arguments. Prints one PASS/FAIL line per criterion and
// exits nonzero if any executed criterion fails.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "cayley/classify.hpp"
#include "cayley/oracle.hpp"
#include "cayley/search.hpp"
#include "cayley/spectrum.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << criterion << " " << (pass ? "PASS" : "FAIL") << ": " << what << "\n";
    if (!detail.empty()) std::cout << detail;
    if (!pass) ++g_failures;
}

std::string read_file(const std::string& rel) {
    std::ifstream in(std::string(CAYLEY_SOURCE_DIR) + "/" + rel, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Spectrum lit(std::initializer_list<std::pair<long long, long long>> entries, long long degree) {
    Spectrum s;
    s.degree = degree;
    for (auto [l, m] : entries) s.add(l, m);
    s.n = s.mult_sum();
    return s;
}

std::string failures_blob(const VerifyReport& rep, std::size_t limit = 10) {
    std::string out;
    for (std::size_t i = 0; i < rep.failures.size() && i < limit; ++i)
        out += "    " + rep.failures[i] + "\n";
    return out;
}

// 1. golden spectra, exact and fast
void criterion1() {
    bool ok = true;
    std::string detail;

    RingSpec z9 = parse_ring_spec("Z9");
    ok &= unitary_spectrum(z9) == lit({{6, 1}, {0, 6}, {-3, 2}}, 6);
    ok &= unitary_sum_spectrum(z9) == lit({{6, 1}, {3, 1}, {0, 6}, {-3, 1}}, 6);
    ok &= complement_spectrum(unitary_spectrum(z9)) == lit({{2, 3}, {-1, 6}}, 2);

    // C3 and the 3-path with end loops, both closed-form and from adjacency
    AbelianGroup z3({3});
    Spectrum c3 = integer_spectrum_from_adjacency(general_cayley_graph(z3, {1, 2}, Mode::Difference));
    Spectrum p3 = integer_spectrum_from_adjacency(general_cayley_graph(z3, {1, 2}, Mode::Sum));
    ok &= c3 == lit({{2, 1}, {-1, 2}}, 2);
    ok &= p3 == lit({{2, 1}, {1, 1}, {-1, 1}}, 2);
    ok &= energy(c3) == 4 && energy(p3) == 4;
    ok &= c3 == unitary_spectrum(parse_ring_spec("F3"));
    ok &= p3 == unitary_sum_spectrum(parse_ring_spec("F3"));

    RingSpec r34 = parse_ring_spec("F3xF4");
    ok &= unitary_spectrum(r34) == lit({{6, 1}, {1, 6}, {-2, 3}, {-3, 2}}, 6);
    ok &= unitary_sum_spectrum(r34) == lit({{6, 1}, {3, 1}, {1, 3}, {-1, 3}, {-2, 3}, {-3, 1}}, 6);
    ok &= complement_spectrum(unitary_spectrum(r34)) == lit({{5, 1}, {2, 2}, {1, 3}, {-2, 6}}, 5);

    report(1, ok, "golden spectra (Z9 family, C3/P3-hat with E=4, F3xF4 family), exact");
}

// 2. closed-form energies over every constructible ring with |R| <= 10^4, s <= 4
void criterion2() {
    VerifyReport rep = verify_energy_closed_forms(10000, 4);
    report(2, rep.ok(),
           "energy closed forms E(G)=2^s|R*| and the complement formula over " +
               std::to_string(rep.checked) + " rings (|R| <= 10^4, s <= 4)",
           failures_blob(rep));
}

// 3. oracle equivalence over every constructible ring with |R| <= 200
void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep = verify_oracle_agreement(200);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::ostringstream what;
    what << "adjacency spectra (both modes) equal closed forms on " << rep.checked
         << " rings, with edge/loop/connectivity laws (" << static_cast<int>(secs) << "s)";
    report(3, rep.ok() && secs < 120.0, what.str(), failures_blob(rep));
}

// 4. 200 seeded random symmetric subsets of Z_n
void criterion4() {
    VerifyReport rep = verify_random_symmetric_pairs(200, 3, 40, 20250810u);
    report(4, rep.ok(),
           "E(X) = E(X+) within 1e-6*n and the exact multiplicity relation over " +
               std::to_string(rep.checked) + " random symmetric pairs",
           failures_blob(rep));
}

// 5. the triple table byte-identical to the published transcription
void criterion5() {
    std::string computed = table1_csv(reproduce_table1());
    std::string published = read_file("golden/table1_published.csv");
    bool ok = computed == published;
    std::string detail;
    if (!ok) {
        detail +=
            "    computed table has 23 rows; the transcription has 24. Both divergences are\n"
            "    arithmetic defects of the published table, confirmed by the adjacency oracle:\n"
            "    - transcribed row 'F11xF11,121,100,20,400,*?': Spec(Gbar) = {[20]^1,[9]^20,[-2]^100},\n"
            "      lambda^2 = 81 > 76 = 4(20-1), so the triple is not Ramanujan (exact test: 33 > 28);\n"
            "    - transcribed row 'Z169,169,157,11,314,': phi(169) = 156, so kappa=156,\n"
            "      kappabar=12, E=312 (computed row matches the energy formula and the oracle).\n";
        // show the actual differing lines
        std::istringstream a(published), b(computed);
        std::string la, lb;
        while (true) {
            bool ga = static_cast<bool>(std::getline(a, la));
            bool gb = static_cast<bool>(std::getline(b, lb));
            if (!ga && !gb) break;
            if (!ga) la = "<missing>";
            if (!gb) lb = "<missing>";
            if (la != lb) detail += "    published: " + la + "  |  computed: " + lb + "\n";
        }
    }
    report(5, ok, "triple table byte-identical to the published transcription (24 rows)", detail);
}

// 6. finite lists
void criterion6() {
    bool all_ok = true;
    std::string detail;
    auto sub = [&](bool ok, const std::string& name, const std::string& note = "") {
        all_ok &= ok;
        detail += std::string("    ") + (ok ? "ok  " : "FAIL") + "  " + name + "\n";
        if (!note.empty()) detail += note;
    };

    {
        std::set<std::string> got;
        for (const auto& s : list_three_field_complement_equienergetic()) got.insert(s.label());
        sub(got == std::set<std::string>{"F3xF5xF5", "F4xF4xF4"},
            "three-field complement-equienergetic products = {(3,5,5),(4,4,4)}",
            "      exact enumeration also finds F3xF4xF7: 1/2 + 1/3 + 1/6 = 1, and\n"
            "      E(G) = E(Gbar) = 288 exactly; the published case analysis dismissed\n"
            "      the (x1,x2) = (3,4) branch although x3 = 7 is integral\n");
    }
    {
        // the seven ring types; the field-pair family is checked against the
        // exact inequality evaluator for all orders up to 50, and against an
        // independent spectral enumeration of every odd-type non-local ring
        bool ok = true;
        std::string note;
        auto members = list_ramanujan_pairs_gr_grplus(50);
        std::set<std::string> got;
        for (const auto& s : members) got.insert(s.label());
        for (const char* must : {"F3xF3", "F3xF4", "F3xF3xF3", "F3xF3xF4", "F3xZ9",
                                 "F3xF3[x]/(x^2)", "F3xF8", "F5xF16"})
            if (!got.count(must)) {
                ok = false;
                note += std::string("      missing ") + must + "\n";
            }
        for (std::uint64_t q1 : prime_powers_up_to(50))
            for (std::uint64_t q2 : prime_powers_up_to(50)) {
                if (q1 > q2 || (q1 % 2 == 0 && q2 % 2 == 0)) continue;
                RingSpec spec({make_field(q1), make_field(q2)});
                bool inlist = got.count(spec.label()) != 0;
                bool ineq = q1 >= 3 && field_pair_ramanujan_condition(q1, q2);
                if (inlist != ineq) {
                    ok = false;
                    note += "      field-pair bound evaluator disagrees at " + spec.label() + "\n";
                }
            }
        SearchConfig cfg;
        cfg.max_vertices = 200;
        for (const RingSpec& spec : enumerate_specs(cfg)) {
            if (spec.is_local() || !spec.is_odd_type()) continue;
            Spectrum gr = unitary_spectrum(spec), gp = unitary_sum_spectrum(spec);
            bool spectral = energy(gr) == energy(gp) && !is_isospectral(gr, gp) &&
                            is_ramanujan(gr).ramanujan && is_ramanujan(gp).ramanujan;
            if (spectral != thm54a_member(spec)) {
                ok = false;
                note += "      spectral/type-list mismatch at " + spec.label() + "\n";
            }
        }
        sub(ok, "odd-type non-local Ramanujan pairs: 7 ring types, field-pair bound exact to q <= 50", note);
    }
    {
        auto got = list_ramanujan_pairs_gr_grbar();
        bool has_f11 = false;
        for (const auto& s : got) has_f11 |= s.label() == "F11xF11";
        sub(got.size() == 17 && has_f11, "two-field {G,Gbar} Ramanujan pairs: the published 17 rings",
            "      exact evaluation yields " + std::to_string(got.size()) +
                " rings: the published F11xF11 entry fails the complement bound exactly (33 > 28;\n"
                "      lambda(Gbar) = 9, 81 > 76 = 4(20-1), confirmed by the adjacency oracle)\n");
    }
    {
        auto got = list_complement_ramanujan_rings();
        sub(got.size() == 21, "complement-Ramanujan two-field rings: the published 21 rings",
            "      exact evaluation yields " + std::to_string(got.size()) +
                " rings (same F11xF11 defect)\n");
    }
    {
        auto got = list_ramanujan_triples_two_fields();
        sub(got.size() == 14, "two-field Ramanujan triples: the published 14 rings",
            "      exact evaluation yields " + std::to_string(got.size()) +
                " rings (same F11xF11 defect)\n");
    }
    {
        auto ns = list_zn_ramanujan_triples(200);
        sub(ns == std::vector<std::uint64_t>{9, 15, 21, 25, 35, 49, 121, 169},
            "Z_n Ramanujan triples, odd n <= 200: {9,15,21,25,35,49,121,169}");
    }
    report(6, all_ok, "finite lists reproduced exactly (defects printed with witnesses)", detail);
}

// 7. the 23-graph bundle and the divisibility law
void criterion7() {
    bool ok = true;
    std::string detail;
    GraphBundle b = bundle_twenty_three_420();
    ok &= b.members.size() == 23;
    ok &= b.n == 420;
    ok &= b.energy == 2304;
    ok &= b.all_equienergetic;
    ok &= b.isospectral_pairs.empty();
    std::set<std::string> distinct;
    for (const auto& m : b.members) distinct.insert(m.spectrum.str());
    ok &= distinct.size() == 23;
    if (!ok)
        detail = "    got " + std::to_string(b.members.size()) + " members, n=" + b.n.str() +
                 ", E=" + b.energy.str() + ", isospectral pairs " +
                 std::to_string(b.isospectral_pairs.size()) + "\n";
    // divisibility over the published triple list (including its F11xF11 entry,
    // whose energy 400 = 16*25 still satisfies the law)
    for (const char* name : {"F3xF4", "F3xF5", "F3xF7", "F4xF5", "F4xF7", "F5xF5", "F5xF7",
                             "F5xF8", "F7xF7", "F7xF8", "F7xF9", "F8xF9", "F9xF9", "F11xF11"}) {
        RingSpec spec = parse_ring_spec(name);
        Int e = closed_form_energies(spec).first;
        bool div = spec.order_is_odd() ? e % 16 == 0 : e % 8 == 0;
        if (!div) {
            ok = false;
            detail += std::string("    divisibility fails for ") + name + ": E = " + e.str() + "\n";
        }
    }
    report(7, ok, "23 distinct equienergetic spectra on 420 vertices (E = 2304), 8|E / 16|E laws");
}

// 8. property suites
void criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    VerifyReport sas = verify_sum_spectra_structure(1000);
    ok &= sas.ok();
    detail += "    strongly-almost-symmetric / trace laws over " + std::to_string(sas.checked) +
              " rings (|R| <= 1000)\n" + failures_blob(sas);

    VerifyReport srg = verify_srg_agreement(100);
    ok &= srg.ok();
    detail += "    srg classification vs common-neighbor counts over " + std::to_string(srg.checked) +
              " rings (|R| <= 100)\n" + failures_blob(srg);

    // connectivity transfer and loop placement on all oracle instances
    SearchConfig cfg;
    cfg.max_vertices = 200;
    long long probed = 0;
    for (const RingSpec& spec : enumerate_specs(cfg)) {
        ConcreteRing ring = build_concrete_ring(spec);
        ProbeResult pd = structural_probe(cayley_graph(ring, Mode::Difference));
        ProbeResult ps = structural_probe(cayley_graph(ring, Mode::Sum));
        ++probed;
        bool d_cn = pd.connected && !(pd.bipartite && pd.loop_count == 0);
        bool s_cn = ps.connected && !(ps.bipartite && ps.loop_count == 0);
        if (d_cn != s_cn) {
            ok = false;
            detail += "    connectivity transfer fails for " + spec.label() + "\n";
        }
        Int expected_loops = spec.order_is_odd() ? spec.units_count() : Int(0);
        if (Int(ps.loop_count) != expected_loops) {
            ok = false;
            detail += "    loop law fails for " + spec.label() + "\n";
        }
    }
    detail += "    connectivity transfer + loop law over " + std::to_string(probed) +
              " oracle instances (|R| <= 200)\n";
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    ok &= secs < 120.0;
    report(8, ok, "property suites (" + std::to_string(static_cast<int>(secs)) + "s)", detail);
}

}  // namespace

int main(int argc, char** argv) {
    int which = argc > 1 ? std::atoi(argv[1]) : 0;
    if (which == 0 || which == 1) criterion1();
    if (which == 0 || which == 2) criterion2();
    if (which == 0 || which == 3) criterion3();
    if (which == 0 || which == 4) criterion4();
    if (which == 0 || which == 5) criterion5();
    if (which == 0 || which == 6) criterion6();
    if (which == 0 || which == 7) criterion7();
    if (which == 0 || which == 8) criterion8();
    return g_failures == 0 ? 0 : 1;
}
