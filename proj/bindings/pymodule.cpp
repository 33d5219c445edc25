#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley/classify.hpp"
#include "cayley/oracle.hpp"
#include "cayley/search.hpp"
#include "cayley/spectrum.hpp"
#include "cayley/verify.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

py::object to_pyint(const Int& v) {
    std::string s = v.str();
    PyObject* o = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!o) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(o);
}

py::list spectrum_entries(const Spectrum& s) {
    py::list out;
    for (const auto& [lam, m] : s.entries) out.append(py::make_tuple(to_pyint(lam), to_pyint(m)));
    return out;
}

Spectrum get_role_spectrum(const std::string& ring, const std::string& role) {
    return role_spectrum(parse_ring_spec(ring), role_from_string(role));
}

}  // namespace

PYBIND11_MODULE(_cayley, m) {
    m.doc() = "exact spectra and energies of unitary Cayley graphs over finite commutative rings";

    py::register_exception<parse_error>(m, "RingParseError", PyExc_ValueError);
    py::register_exception<domain_error>(m, "RingDomainError", PyExc_ValueError);
    py::register_exception<theorem_mismatch>(m, "TheoremMismatch", PyExc_RuntimeError);
    py::register_exception<non_integral_error>(m, "NonIntegralSpectrum", PyExc_RuntimeError);

    m.def("canonical_label", [](const std::string& s) { return parse_ring_spec(s).label(); },
          "canonical form of a ring-spec string");
    m.def("order", [](const std::string& s) { return to_pyint(parse_ring_spec(s).order()); });
    m.def("units_count", [](const std::string& s) { return to_pyint(parse_ring_spec(s).units_count()); });
    m.def("is_odd_type", [](const std::string& s) { return parse_ring_spec(s).is_odd_type(); });
    m.def("even_odd_split", [](const std::string& s) {
        auto [e, o] = parse_ring_spec(s).even_odd_split();
        return py::make_tuple(e ? py::cast(e->label()) : py::none(),
                              o ? py::cast(o->label()) : py::none());
    });

    m.def("spectrum",
          [](const std::string& ring, const std::string& role) {
              return spectrum_entries(get_role_spectrum(ring, role));
          },
          py::arg("ring"), py::arg("role") = "gr",
          "spectrum as a list of (eigenvalue, multiplicity), eigenvalues descending");
    m.def("spectrum_str",
          [](const std::string& ring, const std::string& role) {
              return get_role_spectrum(ring, role).str();
          },
          py::arg("ring"), py::arg("role") = "gr");
    m.def("energy",
          [](const std::string& ring, const std::string& role) {
              return to_pyint(energy(get_role_spectrum(ring, role)));
          },
          py::arg("ring"), py::arg("role") = "gr");
    m.def("closed_form_energies", [](const std::string& ring) {
        auto [a, b] = closed_form_energies(parse_ring_spec(ring));
        return py::make_tuple(to_pyint(a), to_pyint(b));
    });
    m.def("edge_counts", [](const std::string& ring) {
        auto [a, b] = edge_counts(parse_ring_spec(ring));
        return py::make_tuple(to_pyint(a), to_pyint(b));
    });

    m.def("pair_report_json",
          [](const std::string& ring, const std::string& kind) {
              return pair_report(parse_ring_spec(ring),
                                 kind == "grbar" ? PairKind::GRvsGRbar : PairKind::GRvsGRplus)
                  .to_json()
                  .dump();
          },
          py::arg("ring"), py::arg("kind") = "grplus");
    m.def("triple_report_json",
          [](const std::string& ring) { return triple_report(parse_ring_spec(ring)).to_json().dump(); });

    m.def("table1_csv", []() { return table1_csv(reproduce_table1()); });

    m.def("ramanujan_pairs_gr_grbar", []() {
        py::list out;
        for (const auto& s : list_ramanujan_pairs_gr_grbar()) out.append(s.label());
        return out;
    });
    m.def("ramanujan_triples_two_fields", []() {
        py::list out;
        for (const auto& s : list_ramanujan_triples_two_fields()) out.append(s.label());
        return out;
    });
    m.def("zn_ramanujan_triples",
          [](std::uint64_t max_n) { return list_zn_ramanujan_triples(max_n); },
          py::arg("max_n") = 200);

    m.def("enumerate_specs",
          [](long long max_order, unsigned max_factors, bool odd_type) {
              SearchConfig cfg;
              cfg.max_vertices = max_order;
              cfg.max_factors = max_factors;
              cfg.require_odd_type = odd_type;
              py::list out;
              for (const auto& s : enumerate_specs(cfg)) out.append(s.label());
              return out;
          },
          py::arg("max_order") = 100, py::arg("max_factors") = 8, py::arg("odd_type") = false);

    m.def("oracle_spectrum",
          [](const std::string& ring, const std::string& mode) {
              ConcreteRing r = build_concrete_ring(parse_ring_spec(ring));
              GraphInstance g = cayley_graph(r, mode == "sum" ? Mode::Sum : Mode::Difference);
              return spectrum_entries(integer_spectrum_from_adjacency(g));
          },
          py::arg("ring"), py::arg("mode") = "difference",
          "exact integer spectrum recomputed from the adjacency matrix");

    m.def("bundle_json", [](const std::string& recipe, const std::string& ring) {
        GraphBundle b = recipe == "prop62" ? bundle_product_pair_quadruple(parse_ring_spec(ring))
                        : recipe == "ex65" ? bundle_sixteen_tuple_180()
                                           : bundle_twenty_three_420();
        return b.to_json().dump();
    }, py::arg("recipe"), py::arg("ring") = "");

    m.def("verify",
          [](long long max_order) {
              VerifyReport rep = verify_oracle_agreement(Int(max_order));
              return py::make_tuple(rep.ok(), rep.checked, rep.failures);
          },
          py::arg("max_order") = 60,
          "oracle vs closed-form sweep; returns (ok, rings_checked, failures)");
}
