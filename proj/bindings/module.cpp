// Python bindings for the core operations. Rationals cross the boundary as
// fractions.Fraction; generators and domains as thin wrapper classes that
// parse and print the same literals as the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "echcap/bounds.hpp"
#include "echcap/capacity.hpp"
#include "echcap/enumerate.hpp"
#include "echcap/errors.hpp"
#include "echcap/obstruct.hpp"
#include "echcap/serialize.hpp"

namespace py = pybind11;
using namespace ech;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

Rational from_py(const py::object& value) {
    if (py::isinstance<py::int_>(value)) {
        return Rational::parse(py::str(value).cast<std::string>());
    }
    if (py::isinstance<py::str>(value)) {
        return Rational::parse(value.cast<std::string>());
    }
    // fractions.Fraction or anything with numerator/denominator.
    if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
        const std::string num = py::str(value.attr("numerator")).cast<std::string>();
        const std::string den = py::str(value.attr("denominator")).cast<std::string>();
        return Rational::parse(num) / Rational::parse(den);
    }
    throw Error("expected an int, str or Fraction-like value");
}

py::dict certificate_to_dict(const Certificate& cert) {
    py::dict out;
    out["domain"] = cert.domain.str();
    out["target"] = cert.target_domain.str();
    out["target_generator"] = cert.target.str();
    out["lambda"] = cert.lambda.str();
    out["n"] = cert.n();
    py::list pairs;
    for (const auto& [lhs, rhs] : cert.pairs) {
        pairs.append(py::make_tuple(lhs.str(), rhs.str()));
    }
    out["pairs"] = pairs;
    return out;
}

SearchOptions make_options(bool conjectural, std::uint64_t node_budget) {
    SearchOptions options;
    options.conjectural_mode = conjectural;
    if (node_budget) options.node_budget = node_budget;
    return options;
}

}  // namespace

PYBIND11_MODULE(echcap, m) {
    m.doc() = "ECH capacities and symplectic embedding obstructions for convex toric domains";

    py::register_exception<BudgetExceededError>(m, "BudgetExceeded");
    py::register_exception<NotMinimalError>(m, "NotMinimal");
    py::register_exception<ParseError>(m, "ParseFailure");
    static py::exception<Error> base_error(m, "EchError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExceededError&) {
            throw;  // handled by the registered exceptions above
        } catch (const NotMinimalError&) {
            throw;
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            py::set_error(base_error, e.what());
        }
    });

    py::class_<ConvexGenerator>(m, "Generator")
        .def(py::init([](const std::string& text, bool extended) {
                 return ConvexGenerator::parse(text, extended);
             }),
             py::arg("text"), py::arg("extended") = false)
        .def("__str__", &ConvexGenerator::str)
        .def("__repr__",
             [](const ConvexGenerator& g) { return "Generator('" + g.str() + "')"; })
        .def("__eq__", [](const ConvexGenerator& a, const ConvexGenerator& b) { return a == b; })
        .def("__mul__", &ConvexGenerator::operator*)
        .def_property_readonly("x", &ConvexGenerator::x)
        .def_property_readonly("y", &ConvexGenerator::y)
        .def_property_readonly("m", &ConvexGenerator::total_multiplicity)
        .def_property_readonly("h", &ConvexGenerator::h_count)
        .def_property_readonly("L", &ConvexGenerator::lattice_count)
        .def_property_readonly("I", &ConvexGenerator::ech_index)
        .def_property_readonly("J0", &ConvexGenerator::j_zero)
        .def_property_readonly("empty", &ConvexGenerator::empty)
        .def("area_under",
             [](const ConvexGenerator& g) { return to_fraction(g.area_under()); })
        .def("factorizations", [](const ConvexGenerator& g, int n) {
            py::list out;
            for (const auto& tuple : factorizations(g, n)) {
                py::list one;
                for (const auto& f : tuple) one.append(f.str());
                out.append(one);
            }
            return out;
        });

    py::class_<ToricDomain>(m, "Domain")
        .def(py::init([](const std::string& text) { return ToricDomain::parse(text); }),
             py::arg("text"))
        .def("__str__", &ToricDomain::str)
        .def("__repr__", [](const ToricDomain& d) { return "Domain('" + d.str() + "')"; })
        .def("__eq__", [](const ToricDomain& a, const ToricDomain& b) { return a == b; })
        .def("support",
             [](const ToricDomain& d, const py::object& u, const py::object& v) {
                 return to_fraction(d.support(from_py(u), from_py(v)));
             })
        .def("action",
             [](const ToricDomain& d, const ConvexGenerator& g) {
                 return to_fraction(d.action(g));
             })
        .def("contains", &ToricDomain::contains)
        .def("scaled",
             [](const ToricDomain& d, const py::object& t) { return d.scaled(from_py(t)); })
        .def("area", [](const ToricDomain& d) { return to_fraction(d.area()); })
        .def("inscribed_rectangle", [](const ToricDomain& d) {
            const auto [w, h] = d.inscribed_rectangle();
            return py::make_tuple(to_fraction(w), to_fraction(h));
        });

    m.def(
        "capacity",
        [](const ToricDomain& domain, std::int64_t k, std::uint64_t node_budget) {
            SearchBudget budget;
            if (node_budget) budget.nodes = node_budget;
            return to_fraction(capacity(domain, k, budget));
        },
        py::arg("domain"), py::arg("k"), py::arg("node_budget") = 0);
    m.def(
        "capacity_oracle_ellipsoid",
        [](const py::object& a, const py::object& b, std::int64_t k) {
            return to_fraction(capacity_oracle_ellipsoid(from_py(a), from_py(b), k));
        },
        py::arg("a"), py::arg("b"), py::arg("k"));
    m.def(
        "capacity_oracle_polydisk",
        [](const py::object& a, const py::object& b, std::int64_t k) {
            return to_fraction(capacity_oracle_polydisk(from_py(a), from_py(b), k));
        },
        py::arg("a"), py::arg("b"), py::arg("k"));
    m.def(
        "find_minimal_generator",
        [](const ToricDomain& domain, std::int64_t k,
           std::uint64_t node_budget) -> py::object {
            SearchBudget budget;
            if (node_budget) budget.nodes = node_budget;
            const auto found = find_minimal_generator(domain, k, budget);
            if (!found) return py::none();
            return py::cast(*found);
        },
        py::arg("domain"), py::arg("k"), py::arg("node_budget") = 0);
    m.def(
        "is_minimal_polydisk",
        [](std::int64_t x, std::int64_t y, const py::object& a, const py::object& b) {
            return is_minimal_polydisk(x, y, from_py(a), from_py(b));
        },
        py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"));
    m.def(
        "minimal_ellipsoid_family",
        [](const py::object& a, const py::object& b, std::int64_t px, std::int64_t py_) {
            return minimal_ellipsoid_family(from_py(a), from_py(b), px, py_);
        },
        py::arg("a"), py::arg("b"), py::arg("px"), py::arg("py"));

    m.def("le", &le, py::arg("domain"), py::arg("target"), py::arg("lhs"), py::arg("rhs"));
    m.def(
        "candidates",
        [](const ToricDomain& domain, const ToricDomain& target, const ConvexGenerator& rhs) {
            py::list out;
            for (const auto& g : candidates(domain, target, rhs)) out.append(g.str());
            return out;
        },
        py::arg("domain"), py::arg("target"), py::arg("rhs"));
    m.def(
        "find_witness",
        [](const ToricDomain& domain, const ToricDomain& target, const ConvexGenerator& gen,
           bool conjectural, std::uint64_t node_budget) -> py::object {
            const auto witness =
                find_witness(domain, target, gen, make_options(conjectural, node_budget));
            if (!witness) return py::none();
            return certificate_to_dict(*witness);
        },
        py::arg("domain"), py::arg("target"), py::arg("target_generator"),
        py::arg("conjectural") = false, py::arg("node_budget") = 0);
    m.def(
        "check_embedding",
        [](const ToricDomain& domain, const ToricDomain& target,
           const std::vector<ConvexGenerator>& gens, bool conjectural,
           std::uint64_t node_budget) {
            const Verdict v =
                check_embedding(domain, target, gens, make_options(conjectural, node_budget));
            py::dict out;
            out["excluded"] = v.excluded;
            out["conditional"] = v.conditional;
            if (v.excluded) {
                out["failing_target"] = v.failing_target->str();
            } else {
                py::list certs;
                for (const auto& cert : v.certificates) certs.append(certificate_to_dict(cert));
                out["certificates"] = certs;
            }
            return out;
        },
        py::arg("domain"), py::arg("target"), py::arg("target_generators"),
        py::arg("conjectural") = false, py::arg("node_budget") = 0);
    m.def(
        "verify_certificate",
        [](const py::dict& doc) -> py::object {
            Certificate cert{
                ToricDomain::parse(doc["domain"].cast<std::string>()),
                ToricDomain::parse(doc["target"].cast<std::string>()),
                ConvexGenerator::parse(doc["target_generator"].cast<std::string>()),
                ConvexGenerator::parse(doc["lambda"].cast<std::string>()),
                {}};
            for (const auto& pair : doc["pairs"]) {
                const auto tuple = pair.cast<py::sequence>();
                cert.pairs.emplace_back(
                    ConvexGenerator::parse(tuple[0].cast<std::string>()),
                    ConvexGenerator::parse(tuple[1].cast<std::string>()));
            }
            const auto err = certificate_error(cert);
            if (!err) return py::none();
            return py::str(*err);
        },
        py::arg("certificate"),
        "Returns None when the certificate is valid, else the failure reason.");

    m.def(
        "y1_bound",
        [](const py::object& a, std::int64_t d) { return to_fraction(y1_bound(from_py(a), d)); },
        py::arg("a"), py::arg("d"));
    m.def(
        "exclusion_threshold",
        [](const ToricDomain& domain, const std::string& family_text, int dmax,
           const py::object& tol, bool conjectural, std::uint64_t node_budget) {
            const auto family = TargetFamily::parse(family_text);
            const auto result =
                exclusion_threshold(domain, family, family.target_recipe(dmax), from_py(tol),
                                    make_options(conjectural, node_budget));
            py::dict out;
            out["threshold"] = to_fraction(result.threshold);
            out["bracket_lo"] = to_fraction(result.bracket_lo);
            out["bracket_hi"] = to_fraction(result.bracket_hi);
            out["binding_target"] = result.binding_target.str();
            out["verdict_evaluations"] = result.verdict_evaluations;
            return out;
        },
        py::arg("domain"), py::arg("family"), py::arg("dmax"), py::arg("tol"),
        py::arg("conjectural") = false, py::arg("node_budget") = 0);
    m.def("generators_with_index_up_to", [](std::int64_t max_index) {
        py::list out;
        for (const auto& g : generators_with_index_up_to(max_index)) out.append(g.str());
        return out;
    });
}
