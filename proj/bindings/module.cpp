#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "toricode/classify.hpp"
#include "toricode/corpus.hpp"
#include "toricode/graphs.hpp"
#include "toricode/groebner.hpp"
#include "toricode/report.hpp"
#include "toricode/toric.hpp"
#include "toricode/verify.hpp"

namespace py = pybind11;
using namespace toricode;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

py::object elements_py(const Code& code, const std::vector<Binomial>& elements) {
    return json_to_py(basis_elements_json(code, elements, MonomialOrder::grevlex(static_cast<std::uint32_t>(code.zone_count()))));
}

Budget budget_from(std::uint64_t budget) {
    Budget b;
    if (budget > 0) {
        b.s_pairs = budget;
        b.monomials = budget;
    }
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "toric ideals, Groebner bases and Graver bases of combinatorial neural codes";

    py::register_exception<format_error>(m, "FormatError", PyExc_ValueError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Code>(m, "Code")
        .def_property_readonly("n", &Code::n)
        .def_property_readonly("contains_zero", &Code::contains_zero)
        .def_property_readonly("words",
                               [](const Code& c) {
                                   std::vector<std::string> out;
                                   for (Codeword w : c.words()) out.push_back(bit_string(w, c.n()));
                                   return out;
                               })
        .def_property_readonly("zone_supports",
                               [](const Code& c) {
                                   std::vector<std::string> out;
                                   for (Codeword w : c.zone_words()) out.push_back(support_string(w));
                                   return out;
                               })
        .def_property_readonly("is_external", [](const Code& c) { return is_external(c); })
        .def_property_readonly("every_neuron_fires", &Code::every_neuron_fires)
        .def("__len__", [](const Code& c) { return c.words().size(); })
        .def("__repr__", [](const Code& c) {
            return "<Code n=" + std::to_string(c.n()) + " words=" + std::to_string(c.words().size()) + ">";
        });

    m.def("parse_code", [](const std::vector<std::string>& lines) { return parse_code(lines); },
          "Parse a code from 0/1 strings, one codeword each.");
    m.def("parse_code_file", &parse_code_file);
    m.def("internal_code", &internal_code, py::arg("n"));

    m.def(
        "reduced_basis",
        [](const Code& code, const std::string& order_spec, int degbound, std::uint64_t budget) {
            Budget b = budget_from(budget);
            MonomialOrder order = parse_order_spec(order_spec, static_cast<std::uint32_t>(code.zone_count()));
            GeneratorReport gens = toric_generators(code, GenMethod::bounded, degbound, b);
            GroebnerBasis gb = reduce_basis(code, buchberger(code, gens.generators, order, b));
            BasisReport rep{"reduced-groebner", order.spec_string(), gens.tdeg_bound, gens.complete, gb.elements};
            return json_to_py(basis_report_json(code, rep, order));
        },
        py::arg("code"), py::arg("order") = "grevlex", py::arg("degbound") = -1, py::arg("budget") = 0);

    m.def(
        "toric_generators",
        [](const Code& code, const std::string& method, int degbound, std::uint64_t budget) {
            GenMethod gm = method == "saturation" ? GenMethod::saturation : GenMethod::bounded;
            GeneratorReport rep = toric_generators(code, gm, degbound, budget_from(budget));
            py::dict out;
            out["method"] = method;
            out["complete"] = rep.complete;
            out["max_degree"] = rep.max_generator_degree;
            out["elements"] = elements_py(code, rep.generators);
            return out;
        },
        py::arg("code"), py::arg("method") = "bounded", py::arg("degbound") = -1, py::arg("budget") = 0);

    m.def(
        "graver_basis",
        [](const Code& code, int degbound, std::uint64_t budget) {
            GraverReport rep = graver_basis(code, degbound, budget_from(budget));
            py::dict out;
            out["exact"] = rep.exact;
            out["degree_bound"] = rep.tdeg_bound;
            out["elements"] = elements_py(code, rep.elements);
            return out;
        },
        py::arg("code"), py::arg("degbound") = -1, py::arg("budget") = 0);

    m.def(
        "indispensable_binomials",
        [](const Code& code, int degbound, std::uint64_t budget) {
            return elements_py(code, indispensable_binomials(code, degbound, budget_from(budget)));
        },
        py::arg("code"), py::arg("degbound") = -1, py::arg("budget") = 0);

    m.def(
        "universal_gb",
        [](const Code& code, int orders, int degbound, std::uint64_t seed, std::uint64_t budget) {
            return json_to_py(ugb_json(code, universal_gb(code, orders, degbound, seed, budget_from(budget))));
        },
        py::arg("code"), py::arg("orders") = 8, py::arg("degbound") = -1, py::arg("seed") = 0, py::arg("budget") = 0);

    m.def("pairwise_sum_binomials",
          [](const Code& code) { return elements_py(code, pairwise_sum_binomials(code)); });
    m.def("all_quadratic_binomials",
          [](const Code& code) { return elements_py(code, all_quadratic_binomials(code)); });
    m.def("depth1_indispensables", [](const Code& code) { return elements_py(code, depth1_indispensables(code)); });
    m.def("ideal_is_zero", &ideal_is_zero);

    m.def(
        "classify",
        [](const Code& code, int degbound, std::uint64_t budget) {
            return json_to_py(classify_json(code, classify(code, degbound, budget_from(budget))));
        },
        py::arg("code"), py::arg("degbound") = -1, py::arg("budget") = 0);

    m.def("dual_graph_edges", [](const Code& code) {
        WeightedDualGraph g = dual_graph(code);
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [a, b] : g.edges)
            out.push_back({bit_string(g.vertices[static_cast<size_t>(a)], g.n),
                           bit_string(g.vertices[static_cast<size_t>(b)], g.n)});
        return out;
    });

    m.def("verify_suite", [](const std::string& name) {
        std::vector<CheckResult> results;
        if (name == "example-gb")
            results = verify_example_gb();
        else if (name.rfind("internal:", 0) == 0)
            results = verify_internal(std::stoi(name.substr(9)));
        else if (name == "external-trees")
            results = verify_external_trees();
        else if (name == "depth1-patterns")
            results = verify_depth1_patterns();
        else if (name == "lawrence")
            results = verify_lawrence(6);
        else
            throw domain_error("unknown suite '" + name + "'");
        py::list out;
        for (const CheckResult& r : results) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["skipped"] = r.skipped;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });

    m.attr("__version__") = "0.1.0";
}
