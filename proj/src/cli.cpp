#include "cayley/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "cayley/classify.hpp"
#include "cayley/oracle.hpp"
#include "cayley/search.hpp"
#include "cayley/spectrum.hpp"
#include "cayley/verify.hpp"

namespace cayley {

namespace {

json table1_json(const std::vector<Table1Row>& rows) {
    json j = json::array();
    for (const auto& r : rows)
        j.push_back(json{{"label", r.label},
                         {"v", r.v.convert_to<long long>()},
                         {"kappa", r.kappa.convert_to<long long>()},
                         {"kappabar", r.kappa_bar.convert_to<long long>()},
                         {"energy", r.energy.convert_to<long long>()},
                         {"iso", r.iso_star}});
    return j;
}

std::string table1_text(const std::vector<Table1Row>& rows) {
    std::ostringstream os;
    os << "graph                 v    kappa  kappabar  energy  iso\n";
    for (const auto& r : rows) {
        std::string name = "G(" + r.label + ")";
        os << name << std::string(name.size() < 21 ? 21 - name.size() : 1, ' ');
        std::string v = r.v.str(), k = r.kappa.str(), kb = r.kappa_bar.str(), e = r.energy.str();
        os << v << std::string(5 - v.size(), ' ') << k << std::string(7 - k.size(), ' ') << kb
           << std::string(10 - kb.size(), ' ') << e << std::string(8 - e.size(), ' ')
           << (r.iso_star ? "*" : "") << "\n";
    }
    return os.str();
}

std::string labels_json(const std::vector<RingSpec>& specs) {
    json j = json::array();
    for (const auto& s : specs) j.push_back(s.label());
    return j.dump();
}

std::string labels_text(const std::vector<RingSpec>& specs) {
    std::string out;
    for (const auto& s : specs) out += s.label() + "\n";
    return out;
}

void append_failures(std::string& out, const VerifyReport& rep, const std::string& name) {
    out += name + ": checked " + std::to_string(rep.checked) +
           (rep.ok() ? ", all consistent\n" : ", FAILURES:\n");
    for (const auto& f : rep.failures) out += "  " + f + "\n";
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult res;
    CLI::App app{"exact spectra, energies and classification of unitary Cayley graphs over finite rings"};
    app.name("cayley-spectra");
    app.require_subcommand(1);

    std::string ring_arg, role = "gr", format = "text", pair_kind = "grplus", which = "all",
                recipe = "ex66", families;
    long long max_n = 200;
    unsigned max_factors = 8;
    bool odd_type = false;
    std::uint64_t seed = 1;

    auto* c_spec = app.add_subcommand("spec", "print the spectrum of a graph role for a ring");
    c_spec->add_option("ring", ring_arg)->required();
    c_spec->add_option("--role", role)->check(CLI::IsMember({"gr", "grplus", "grbar", "grminus"}));
    c_spec->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_energy = app.add_subcommand("energy", "energies of G, G+ and Gbar with closed forms");
    c_energy->add_option("ring", ring_arg)->required();
    c_energy->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_pair = app.add_subcommand("pair", "classification report for {G,G+} or {G,Gbar}");
    c_pair->add_option("ring", ring_arg)->required();
    c_pair->add_option("--pair", pair_kind)->check(CLI::IsMember({"grplus", "grbar"}));
    c_pair->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_triple = app.add_subcommand("triple", "classification report for {G, G+, Gbar}");
    c_triple->add_option("ring", ring_arg)->required();
    c_triple->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_table = app.add_subcommand("table1", "the 24 smallest equienergetic Ramanujan triples");
    c_table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* c_lists = app.add_subcommand("lists", "reproduce the finite classification lists");
    c_lists->add_option("--which", which)
        ->check(CLI::IsMember({"all", "three-fields", "gr-grplus", "gr-grbar", "grbar-ramanujan",
                               "triples", "zn-triples", "cross-ring"}));
    c_lists->add_option("--max", max_n);
    c_lists->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_verify = app.add_subcommand("verify", "oracle vs closed-form verification sweeps");
    c_verify->add_option("--max", max_n);
    c_verify->add_option("--seed", seed);

    auto* c_bundle = app.add_subcommand("bundle", "Kronecker bundles of equienergetic graphs");
    c_bundle->add_option("recipe", recipe)->check(CLI::IsMember({"prop62", "ex65", "ex66"}));
    c_bundle->add_option("ring", ring_arg);
    c_bundle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_enum = app.add_subcommand("enumerate", "enumerate canonical ring specs");
    c_enum->add_option("--max", max_n);
    c_enum->add_option("--max-factors", max_factors);
    c_enum->add_option("--families", families, "comma list: field,zmod,galois,fieldx2,fieldx3,shape");
    c_enum->add_flag("--odd-type", odd_type);
    c_enum->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        res.out = os.str();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 64;
        return res;
    }

    try {
        if (*c_spec) {
            Spectrum s = role_spectrum(parse_ring_spec(ring_arg), role_from_string(role));
            res.out = format == "json" ? spectrum_to_json(s).dump() + "\n" : s.str() + "\n";
        } else if (*c_energy) {
            RingSpec spec = parse_ring_spec(ring_arg);
            Spectrum gr = unitary_spectrum(spec);
            auto [e_gr, e_grbar] = closed_form_energies(spec);
            Int e_spec = energy(gr), e_plus = energy(unitary_sum_spectrum(spec)),
                e_bar = energy(complement_spectrum(gr));
            if (e_spec != e_gr || e_plus != e_gr || e_bar != e_grbar)
                throw theorem_mismatch("closed-form energy mismatch for " + spec.label() +
                                       ": spectral (" + e_spec.str() + "," + e_bar.str() +
                                       ") vs closed (" + e_gr.str() + "," + e_grbar.str() + ")");
            if (format == "json") {
                res.out = json{{"ring", spec.label()},
                               {"energy_gr", e_gr.convert_to<long long>()},
                               {"energy_grplus", e_plus.convert_to<long long>()},
                               {"energy_grbar", e_grbar.convert_to<long long>()}}
                              .dump() +
                          "\n";
            } else {
                res.out = "E(G) = E(G+) = " + e_gr.str() + "\nE(Gbar) = " + e_grbar.str() + "\n";
            }
        } else if (*c_pair) {
            PairReport r = pair_report(parse_ring_spec(ring_arg),
                                       pair_kind == "grplus" ? PairKind::GRvsGRplus : PairKind::GRvsGRbar);
            res.out = format == "json" ? r.to_json().dump() + "\n" : r.text();
        } else if (*c_triple) {
            TripleReport t = triple_report(parse_ring_spec(ring_arg));
            res.out = format == "json" ? t.to_json().dump() + "\n" : t.text();
        } else if (*c_table) {
            auto rows = reproduce_table1();
            res.out = format == "csv"    ? table1_csv(rows)
                      : format == "json" ? table1_json(rows).dump() + "\n"
                                         : table1_text(rows);
        } else if (*c_lists) {
            std::ostringstream os;
            auto emit = [&](const std::string& name, const std::vector<RingSpec>& specs) {
                if (format == "json") {
                    os << json{{"list", name}, {"rings", json::parse(labels_json(specs))}}.dump() << "\n";
                } else {
                    os << "[" << name << "]  " << specs.size() << " rings\n" << labels_text(specs);
                }
            };
            if (which == "all" || which == "three-fields")
                emit("three fields equienergetic with complement",
                     list_three_field_complement_equienergetic());
            if (which == "all" || which == "gr-grplus")
                emit("{G,G+} Ramanujan pairs, odd type non-local (field orders <= " +
                         std::to_string(max_n > 2 ? max_n : 50) + ")",
                     list_ramanujan_pairs_gr_grplus(Int(max_n > 2 ? max_n : 50)));
            if (which == "all" || which == "gr-grbar")
                emit("{G,Gbar} equienergetic non-isospectral both-Ramanujan pairs",
                     list_ramanujan_pairs_gr_grbar());
            if (which == "all" || which == "grbar-ramanujan")
                emit("Gbar Ramanujan, pair non-isospectral",
                     list_complement_ramanujan_rings());
            if (which == "all" || which == "triples")
                emit("two-field Ramanujan triples", list_ramanujan_triples_two_fields());
            if (which == "all" || which == "cross-ring") {
                SearchConfig cfg;
                cfg.max_vertices = max_n > 2 ? max_n : 30;
                auto pairs = find_cross_ring_equienergetic(cfg);
                if (format == "json") {
                    json j = json::array();
                    for (const auto& p : pairs)
                        j.push_back(json{{"a", p.a.label()},
                                         {"b", p.b.label()},
                                         {"energy", p.energy.convert_to<long long>()},
                                         {"isospectral", p.isospectral}});
                    os << json{{"list", "cross-ring equienergetic pairs"}, {"pairs", j}}.dump() << "\n";
                } else {
                    os << "[cross-ring equienergetic pairs, |R| <= " << cfg.max_vertices.str() << "]\n";
                    for (const auto& p : pairs)
                        os << p.a.label() << " ~ " << p.b.label() << "  E=" << p.energy.str()
                           << (p.isospectral ? "  (isospectral)" : "") << "\n";
                }
            }
            if (which == "all" || which == "zn-triples") {
                auto ns = list_zn_ramanujan_triples(static_cast<std::uint64_t>(max_n));
                if (format == "json") {
                    json j = json::array();
                    for (auto n : ns) j.push_back(n);
                    os << json{{"list", "Z_n Ramanujan triples"}, {"n", j}}.dump() << "\n";
                } else {
                    os << "[Z_n Ramanujan triples, odd n <= " << max_n << "]\n";
                    for (auto n : ns) os << "Z" << n << "\n";
                }
            }
            res.out = os.str();
        } else if (*c_verify) {
            std::string out;
            VerifyReport a = verify_oracle_agreement(Int(max_n));
            append_failures(out, a, "oracle vs closed forms (|R| <= " + std::to_string(max_n) + ")");
            VerifyReport b = verify_energy_closed_forms(Int(max_n), 4);
            append_failures(out, b, "energy closed forms");
            VerifyReport c = verify_random_symmetric_pairs(50, 3, 30, seed);
            append_failures(out, c, "random symmetric pairs (seed " + std::to_string(seed) + ")");
            res.out = out;
            if (!a.ok() || !b.ok() || !c.ok()) res.exit_code = 2;
        } else if (*c_bundle) {
            GraphBundle b;
            if (recipe == "prop62") {
                if (ring_arg.empty()) throw parse_error("bundle prop62 needs a ring argument");
                b = bundle_product_pair_quadruple(parse_ring_spec(ring_arg));
            } else if (recipe == "ex65") {
                b = bundle_sixteen_tuple_180();
            } else {
                b = bundle_twenty_three_420();
            }
            if (format == "json") {
                res.out = b.to_json().dump() + "\n";
            } else {
                std::ostringstream os;
                os << b.members.size() << " graphs on " << b.n.str() << " vertices, energy "
                   << b.energy.str() << (b.all_equienergetic ? " (all equienergetic)" : "") << "\n";
                for (const auto& m : b.members) os << "  " << m.label << "  " << m.spectrum.str() << "\n";
                os << "isospectral pairs: " << b.isospectral_pairs.size() << "\n";
                res.out = os.str();
            }
        } else if (*c_enum) {
            SearchConfig cfg;
            cfg.max_vertices = max_n;
            cfg.max_factors = max_factors;
            cfg.require_odd_type = odd_type;
            if (!families.empty()) {
                cfg.families.clear();
                std::stringstream ss(families);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok == "field") cfg.families.insert(Family::Field);
                    else if (tok == "zmod") cfg.families.insert(Family::ZModPk);
                    else if (tok == "galois") cfg.families.insert(Family::GaloisRing);
                    else if (tok == "fieldx2") cfg.families.insert(Family::FieldModX2);
                    else if (tok == "fieldx3") cfg.families.insert(Family::FieldModX3);
                    else if (tok == "shape") cfg.families.insert(Family::Shape);
                    else throw parse_error("unknown family '" + tok + "'");
                }
            }
            auto specs = enumerate_specs(cfg);
            res.out = format == "json" ? labels_json(specs) + "\n" : labels_text(specs);
        }
    } catch (const parse_error& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
    } catch (const domain_error& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
    } catch (const theorem_mismatch& e) {
        res.err = std::string("verification mismatch: ") + e.what() + "\n";
        res.exit_code = 2;
    } catch (const non_integral_error& e) {
        res.err = std::string("verification mismatch: ") + e.what() + "\n";
        res.exit_code = 2;
    }
    return res;
}

}  // namespace cayley
