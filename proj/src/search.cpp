#include "cayley/search.hpp"

#include <algorithm>
#include <cmath>

#include "cayley/oracle.hpp"

namespace cayley {

namespace {

// all single local shapes from the allowed families with r <= bound
std::vector<LocalShape> shapes_up_to(const Int& bound, const std::set<Family>& families) {
    std::vector<LocalShape> out;
    std::uint64_t b = bound > (Int(1) << 62) ? (1ull << 62) : bound.convert_to<std::uint64_t>();
    for (std::uint64_t q : prime_powers_up_to(b)) {
        auto pp = *as_prime_power(q);
        if (families.count(Family::Field)) out.push_back(make_field(q));
        if (families.count(Family::ZModPk) && pp.k >= 2) out.push_back(make_zmod(pp.p, pp.k));
        if (families.count(Family::GaloisRing)) {
            // q = p^a plays the role of the order p^{st}, s,t >= 2
            for (unsigned t = 2; t < pp.k; ++t) {
                if (pp.k % t == 0 && pp.k / t >= 2) out.push_back(make_galois_ring(pp.p, pp.k / t, t));
            }
        }
        if (families.count(Family::FieldModX2) && pp.k % 2 == 0) {
            std::uint64_t root = static_cast<std::uint64_t>(
                ipow(Int(pp.p), pp.k / 2).convert_to<std::uint64_t>());
            out.push_back(make_field_mod_x2(root));
        }
        if (families.count(Family::FieldModX3) && pp.k % 3 == 0) {
            std::uint64_t root = static_cast<std::uint64_t>(
                ipow(Int(pp.p), pp.k / 3).convert_to<std::uint64_t>());
            out.push_back(make_field_mod_x3(root));
        }
        if (families.count(Family::Shape) && pp.k >= 2) {
            for (unsigned bb = 1; bb < pp.k; ++bb)
                out.push_back(LocalShape{pp.p, pp.k, bb, Family::Shape});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void extend(const std::vector<LocalShape>& shapes, std::size_t from, const Int& budget,
            unsigned slots_left, std::vector<LocalShape>& cur, std::vector<RingSpec>& out,
            bool require_odd_type) {
    if (!cur.empty()) {
        RingSpec spec(cur);
        if (!require_odd_type || spec.is_odd_type()) out.push_back(spec);
    }
    if (slots_left == 0) return;
    for (std::size_t i = from; i < shapes.size(); ++i) {
        Int r = shapes[i].r();
        if (r > budget) break;
        cur.push_back(shapes[i]);
        extend(shapes, i, budget / r, slots_left - 1, cur, out, require_odd_type);
        cur.pop_back();
    }
}

}  // namespace

std::vector<RingSpec> enumerate_specs(const SearchConfig& cfg) {
    auto shapes = shapes_up_to(cfg.max_vertices, cfg.families);
    std::vector<RingSpec> out;
    std::vector<LocalShape> cur;
    extend(shapes, 0, cfg.max_vertices, cfg.max_factors, cur, out, cfg.require_odd_type);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- Table 1 ---------------------------------------------------------------------

std::vector<Table1Row> reproduce_table1() {
    // the classified triples with at most 169 vertices:
    // local shapes (m^2, m) with m odd, and two-field products passing both
    // Ramanujan inequalities; '*' marks triples containing an isospectral pair
    const Int max_v = 169;
    std::vector<std::pair<RingSpec, bool>> rows;  // spec, local
    for (std::uint64_t m : prime_powers_up_to(13)) {
        if (m % 2 == 0) continue;
        Int v = Int(m) * m;
        if (v > max_v) continue;
        auto pp = *as_prime_power(m);
        RingSpec spec({pp.k == 1 ? make_zmod(pp.p, 2) : make_field_mod_x2(m)});
        rows.emplace_back(spec, true);
    }
    for (std::uint64_t q1 : prime_powers_up_to(13)) {
        if (q1 < 3) continue;
        for (std::uint64_t q2 : prime_powers_up_to(56)) {
            if (q2 < q1 || Int(q1) * q2 > max_v) continue;
            if (!field_pair_ramanujan_condition(q1, q2) || !complement_ramanujan_condition(q1, q2))
                continue;
            rows.emplace_back(RingSpec({make_field(q1), make_field(q2)}), false);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return x.first < y.first;  // (|R|, s, label): local rings first on ties
    });

    std::vector<Table1Row> out;
    for (const auto& [spec, local] : rows) {
        Spectrum gr = unitary_spectrum(spec);
        Spectrum grplus = unitary_sum_spectrum(spec);
        Spectrum grbar = complement_spectrum(gr);
        Table1Row row;
        row.label = spec.label();
        row.v = spec.order();
        row.kappa = spec.units_count();
        row.kappa_bar = row.v - row.kappa - 1;
        row.energy = energy(gr);
        row.iso_star = is_isospectral(gr, grplus) || is_isospectral(gr, grbar) ||
                       is_isospectral(grplus, grbar);
        // every row must be a mutually equienergetic all-Ramanujan configuration
        if (energy(grplus) != row.energy || energy(grbar) != row.energy)
            throw theorem_mismatch("table row " + row.label + " is not equienergetic");
        if (!is_ramanujan(gr).ramanujan || !is_ramanujan(grplus).ramanujan ||
            !is_ramanujan(grbar).eigenvalue_bound)
            throw theorem_mismatch("table row " + row.label + " is not Ramanujan");
        out.push_back(std::move(row));
    }
    return out;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
    std::string out = "label,v,kappa,kappabar,energy,iso\n";
    for (const auto& r : rows)
        out += r.label + "," + r.v.str() + "," + r.kappa.str() + "," + r.kappa_bar.str() + "," +
               r.energy.str() + "," + (r.iso_star ? "*" : "") + "\n";
    return out;
}

// ---- finite lists ----------------------------------------------------------------

std::vector<RingSpec> list_three_field_complement_equienergetic(const Int& max_q) {
    std::vector<RingSpec> out;
    auto qs = prime_powers_up_to(max_q.convert_to<std::uint64_t>());
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i; j < qs.size(); ++j)
            for (std::size_t k = j; k < qs.size(); ++k) {
                RingSpec spec({make_field(qs[i]), make_field(qs[j]), make_field(qs[k])});
                if (equienergetic_with_complement(spec)) out.push_back(spec);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RingSpec> list_ramanujan_pairs_gr_grplus(const Int& max_q) {
    std::vector<RingSpec> out = {
        parse_ring_spec("F3xF3xF3"),
        parse_ring_spec("F3xF3xF4"),
        parse_ring_spec("F3xZ9"),
        parse_ring_spec("F3xF3[x]/(x^2)"),
    };
    auto qs = prime_powers_up_to(max_q.convert_to<std::uint64_t>());
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i; j < qs.size(); ++j) {
            if (qs[i] % 2 == 0 && qs[j] % 2 == 0) continue;  // odd type needs an odd factor
            RingSpec spec({make_field(qs[i]), make_field(qs[j])});
            if (thm54a_member(spec)) out.push_back(spec);
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<RingSpec> two_field_list(bool (*member)(const RingSpec&), std::uint64_t max_q) {
    std::vector<RingSpec> out;
    auto qs = prime_powers_up_to(max_q);
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i; j < qs.size(); ++j) {
            RingSpec spec({make_field(qs[i]), make_field(qs[j])});
            if (member(spec)) out.push_back(spec);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<RingSpec> list_ramanujan_pairs_gr_grbar() { return two_field_list(&thm54b_member, 64); }

std::vector<RingSpec> list_complement_ramanujan_rings() {
    return two_field_list(&complement_ramanujan_pair_member, 64);
}

std::vector<RingSpec> list_ramanujan_triples_two_fields() {
    return two_field_list(&ramanujan_triple_member, 64);
}

std::vector<std::uint64_t> list_zn_ramanujan_triples(std::uint64_t max_n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n <= max_n; n += 2) {
        RingSpec spec = parse_ring_spec("Z" + std::to_string(n));
        TripleReport t = triple_report(spec);
        if (t.is_ramanujan_triple) out.push_back(n);
    }
    return out;
}

std::vector<CrossRingPair> find_cross_ring_equienergetic(const SearchConfig& cfg) {
    auto shape_key = [](const RingSpec& s) {
        std::string k;
        for (const auto& f : s.factors) k += "(" + f.r().str() + "," + f.m().str() + ")";
        return k;
    };
    // one representative per shape multiset; same shape means the same graph
    std::vector<RingSpec> reps;
    std::set<std::string> seen;
    for (const RingSpec& spec : enumerate_specs(cfg))
        if (seen.insert(shape_key(spec)).second) reps.push_back(spec);

    std::vector<CrossRingPair> out;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        Spectrum si = unitary_spectrum(reps[i]);
        Int ei = energy(si);
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (reps[j].order() != reps[i].order()) continue;
            Spectrum sj = unitary_spectrum(reps[j]);
            if (energy(sj) != ei) continue;
            out.push_back({reps[i], reps[j], ei, is_isospectral(si, sj)});
        }
    }
    return out;
}

// ---- bundles ---------------------------------------------------------------------

Role role_from_string(const std::string& s) {
    if (s == "gr") return Role::GR;
    if (s == "grplus") return Role::GRplus;
    if (s == "grbar") return Role::GRbar;
    if (s == "grminus") return Role::GRminus;
    throw parse_error("unknown role '" + s + "' (gr|grplus|grbar|grminus)");
}

const char* role_name(Role r) {
    switch (r) {
        case Role::GR: return "gr";
        case Role::GRplus: return "grplus";
        case Role::GRbar: return "grbar";
        case Role::GRminus: return "grminus";
    }
    return "?";
}

Spectrum role_spectrum(const RingSpec& spec, Role role) {
    switch (role) {
        case Role::GR: return unitary_spectrum(spec);
        case Role::GRplus: return unitary_sum_spectrum(spec);
        case Role::GRbar: return complement_spectrum(unitary_spectrum(spec));
        case Role::GRminus: break;
    }
    // X^+(R, R \ (R* u {0})): no closed form; go through the oracle and check
    // the guaranteed equienergy with the complement
    ConcreteRing ring = build_concrete_ring(spec);
    std::vector<long long> s_set;
    for (long long x = 1; x < ring.n; ++x)
        if (!ring.unit_mask[static_cast<std::size_t>(x)]) s_set.push_back(x);
    std::vector<long long> mapped;
    mapped.reserve(s_set.size());
    for (long long x : s_set) mapped.push_back(ring.group.index(ring.add_tuple(x)));
    auto mm = sum_multiplicities(ring.group, mapped);
    Spectrum out;
    out.n = ring.n;
    out.degree = Int(static_cast<long long>(s_set.size()));
    for (const auto& [val, mult] : mm) {
        double rounded = std::floor(val + 0.5);
        if (std::abs(val - rounded) > 1e-6)
            throw non_integral_error("G- spectrum is not integral for " + spec.label());
        out.add(Int(static_cast<long long>(rounded)), Int(mult));
    }
    Int e_minus = energy(out);
    Int e_bar = energy(complement_spectrum(unitary_spectrum(spec)));
    if (e_minus != e_bar)
        throw theorem_mismatch("E(G-) != E(Gbar) for " + spec.label());
    return out;
}

GraphBundle build_bundle(
    const std::vector<std::pair<std::string, std::vector<std::pair<RingSpec, Role>>>>& recipe) {
    GraphBundle b;
    for (const auto& [label, parts] : recipe) {
        Spectrum acc;
        acc.n = 1;
        acc.degree = 1;
        acc.entries = {{1, 1}};
        for (const auto& [spec, role] : parts) acc = kron_spectrum(acc, role_spectrum(spec, role));
        if (!b.members.empty() && acc.n != b.n)
            throw domain_error("bundle recipe mixes vertex counts");
        b.n = acc.n;
        b.members.push_back({label, std::move(acc)});
    }
    if (b.members.empty()) throw domain_error("empty bundle recipe");
    b.energy = energy(b.members[0].spectrum);
    b.all_equienergetic = true;
    for (const auto& m : b.members)
        if (energy(m.spectrum) != b.energy) b.all_equienergetic = false;
    for (std::size_t i = 0; i < b.members.size(); ++i)
        for (std::size_t j = i + 1; j < b.members.size(); ++j)
            if (is_isospectral(b.members[i].spectrum, b.members[j].spectrum))
                b.isospectral_pairs.emplace_back(i, j);
    return b;
}

json GraphBundle::to_json() const {
    json j;
    j["n"] = n.convert_to<long long>();
    j["energy"] = energy.convert_to<long long>();
    j["all_equienergetic"] = all_equienergetic;
    j["members"] = json::array();
    for (const auto& m : members)
        j["members"].push_back(json{{"label", m.label}, {"spectrum", spectrum_to_json(m.spectrum)}});
    j["isospectral_pairs"] = json::array();
    for (auto [i, j2] : isospectral_pairs)
        j["isospectral_pairs"].push_back(json::array({members[i].label, members[j2].label}));
    return j;
}

GraphBundle bundle_product_pair_quadruple(const RingSpec& r) {
    for (const auto& f : r.factors)
        if (2 * f.m() >= f.r())
            throw domain_error("construction needs 2m_i < r_i for every factor of " + r.label());
    RingSpec f9 = parse_ring_spec("F9"), f3f3 = parse_ring_spec("F3xF3");
    std::vector<std::pair<std::string, std::vector<std::pair<RingSpec, Role>>>> recipe = {
        {"G(F9x" + r.label() + ")", {{f9, Role::GR}, {r, Role::GR}}},
        {"G+(F9x" + r.label() + ")", {{f9, Role::GRplus}, {r, Role::GRplus}}},
        {"G(F3xF3x" + r.label() + ")", {{f3f3, Role::GR}, {r, Role::GR}}},
        {"G+(F3xF3x" + r.label() + ")", {{f3f3, Role::GRplus}, {r, Role::GRplus}}},
    };
    return build_bundle(recipe);
}

GraphBundle bundle_sixteen_tuple_180() {
    RingSpec g1 = parse_ring_spec("F3xF3"), g2 = parse_ring_spec("F9"), r = parse_ring_spec("F4xF5");
    std::vector<std::pair<std::string, std::vector<std::pair<RingSpec, Role>>>> recipe;
    const std::vector<std::pair<std::string, RingSpec>> lefts = {{"G(F3xF3)", g1}, {"G(F9)", g2}};
    const std::vector<Role> left_roles = {Role::GR, Role::GRplus};
    const std::vector<Role> right_roles = {Role::GR, Role::GRplus, Role::GRbar, Role::GRminus};
    for (const auto& [lname, lspec] : lefts)
        for (Role lr : left_roles)
            for (Role rr : right_roles) {
                std::string label = std::string(role_name(lr)) + "(" + lspec.label() + ") x " +
                                    role_name(rr) + "(" + r.label() + ")";
                recipe.push_back({label, {{lspec, lr}, {r, rr}}});
            }
    return build_bundle(recipe);
}

GraphBundle bundle_twenty_three_420() {
    const std::vector<std::pair<RingSpec, RingSpec>> pairings = {
        {parse_ring_spec("F3xF4"), parse_ring_spec("F5xF7")},
        {parse_ring_spec("F3xF5"), parse_ring_spec("F4xF7")},
        {parse_ring_spec("F3xF7"), parse_ring_spec("F4xF5")},
    };
    const std::vector<Role> roles = {Role::GR, Role::GRplus, Role::GRbar};
    std::vector<std::pair<std::string, std::vector<std::pair<RingSpec, Role>>>> recipe;
    bool have_gg = false, have_gpgp = false;
    for (const auto& [ra, rb] : pairings) {
        for (Role x : roles)
            for (Role y : roles) {
                // the three pairings of G x G collapse to G_R, likewise G+ x G+
                if (x == Role::GR && y == Role::GR) {
                    if (have_gg) continue;
                    have_gg = true;
                } else if (x == Role::GRplus && y == Role::GRplus) {
                    if (have_gpgp) continue;
                    have_gpgp = true;
                }
                std::string label = std::string(role_name(x)) + "(" + ra.label() + ") x " +
                                    role_name(y) + "(" + rb.label() + ")";
                recipe.push_back({label, {{ra, x}, {rb, y}}});
            }
    }
    return build_bundle(recipe);
}

}  // namespace cayley
