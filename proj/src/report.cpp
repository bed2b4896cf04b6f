#include "toricode/report.hpp"

#include <algorithm>
#include <ostream>

namespace toricode {

namespace {

nlohmann::json monomial_json(const Code& code, const Monomial& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) j[support_string(code.zone_word(static_cast<int>(v)))] = e;
    return j;
}

}  // namespace

nlohmann::json binomial_json(const Code& code, const Binomial& b) {
    return nlohmann::json{{"plus", monomial_json(code, b.plus)}, {"minus", monomial_json(code, b.minus)}};
}

nlohmann::json basis_elements_json(const Code& code, std::vector<Binomial> elements, const MonomialOrder& order) {
    for (Binomial& b : elements) b = oriented(code, std::move(b), order);
    std::sort(elements.begin(), elements.end(), [&](const Binomial& a, const Binomial& b) {
        Cmp c = order.compare(a.plus, b.plus);
        if (c != Cmp::equal) return c == Cmp::less;
        return order.compare(a.minus, b.minus) == Cmp::less;
    });
    nlohmann::json arr = nlohmann::json::array();
    for (const Binomial& b : elements) arr.push_back(binomial_json(code, b));
    return arr;
}

nlohmann::json basis_report_json(const Code& code, const BasisReport& rep, const MonomialOrder& order) {
    return nlohmann::json{{"method", rep.method},
                          {"order", rep.order_spec},
                          {"degree_bound", rep.degree_bound},
                          {"complete", rep.complete},
                          {"size", rep.elements.size()},
                          {"elements", basis_elements_json(code, rep.elements, order)}};
}

void print_basis_report(std::ostream& out, const Code& code, const BasisReport& rep, const MonomialOrder& order) {
    std::vector<Binomial> elements = rep.elements;
    for (Binomial& b : elements) b = oriented(code, std::move(b), order);
    std::sort(elements.begin(), elements.end(), [&](const Binomial& a, const Binomial& b) {
        Cmp c = order.compare(a.plus, b.plus);
        if (c != Cmp::equal) return c == Cmp::less;
        return order.compare(a.minus, b.minus) == Cmp::less;
    });
    out << "method: " << rep.method << "\norder: " << rep.order_spec << "\n";
    if (rep.degree_bound >= 0) out << "degree bound: " << rep.degree_bound << "\n";
    out << "complete: " << (rep.complete ? "yes" : "no") << "\nelements: " << elements.size() << "\n";
    if (elements.empty()) out << "(zero ideal)\n";
    for (const Binomial& b : elements) out << "  " << to_string(code, b) << "\n";
}

nlohmann::json ugb_json(const Code& code, const UgbResult& res) {
    MonomialOrder grev = MonomialOrder::grevlex(static_cast<std::uint32_t>(code.zone_count()));
    nlohmann::json j{{"kind", res.exact ? "exact" : "sandwich"},
                     {"closed", res.closed},
                     {"degree_bound", res.tdeg_bound},
                     {"orders_used", res.orders_used},
                     {"elements", basis_elements_json(code, res.elements, grev)}};
    if (!res.exact) j["upper"] = basis_elements_json(code, res.upper, grev);
    return j;
}

void print_ugb(std::ostream& out, const Code& code, const UgbResult& res) {
    out << (res.exact ? "universal basis (exact)\n" : "universal basis sandwich\n");
    out << "closed: " << (res.closed ? "yes" : "no") << "\n";
    out << "orders used: " << res.orders_used.size() << "\n";
    out << "lower bound (" << res.elements.size() << " elements):\n";
    for (const Binomial& b : res.elements) out << "  " << to_string(code, b) << "\n";
    if (!res.exact && !res.closed) {
        out << "upper bound (" << res.upper.size() << " elements):\n";
        for (const Binomial& b : res.upper) out << "  " << to_string(code, b) << "\n";
    }
}

nlohmann::json classify_json(const Code& code, const ClassifyReport& rep) {
    (void)code;
    nlohmann::json j{{"every_neuron_fires", rep.every_neuron_fires},
                     {"zero_pierced", rep.zero_pierced},
                     {"quadratically_generated", rep.quadratically_generated},
                     {"max_generator_degree", rep.max_generator_degree},
                     {"generator_count", rep.generator_count}};
    if (rep.one_pierced_n3_applicable) {
        j["one_pierced_n3"] = rep.one_pierced_n3;
        j["one_pierced_order"] = rep.order_used_n3;
    }
    return j;
}

void print_classify(std::ostream& out, const Code& code, const ClassifyReport& rep) {
    (void)code;
    out << "every neuron fires: " << (rep.every_neuron_fires ? "yes" : "no") << "\n";
    out << "zero-pierced (trivial ideal): " << (rep.zero_pierced ? "yes" : "no") << "\n";
    out << "generated by quadratics: " << (rep.quadratically_generated ? "yes" : "no") << " (max generator degree "
        << rep.max_generator_degree << ", " << rep.generator_count << " generators)\n";
    if (rep.one_pierced_n3_applicable)
        out << "one-pierced (n=3 test, order " << rep.order_used_n3 << "): " << (rep.one_pierced_n3 ? "yes" : "no")
            << "\n";
}

}  // namespace toricode
