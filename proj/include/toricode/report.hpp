#ifndef TORICODE_REPORT_HPP
#define TORICODE_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricode/classify.hpp"
#include "toricode/groebner.hpp"
#include "toricode/toric.hpp"

namespace toricode {

/// {"plus": {"1,2": 1, ...}, "minus": {...}} with comma-joined support keys.
nlohmann::json binomial_json(const Code& code, const Binomial& b);

/// Deterministic element list: sorted by leading term under `order`.
nlohmann::json basis_elements_json(const Code& code, std::vector<Binomial> elements, const MonomialOrder& order);

struct BasisReport {
    std::string method;
    std::string order_spec;
    int degree_bound = 0;    // -1 when not applicable
    bool complete = false;
    std::vector<Binomial> elements;
};

nlohmann::json basis_report_json(const Code& code, const BasisReport& rep, const MonomialOrder& order);
void print_basis_report(std::ostream& out, const Code& code, const BasisReport& rep, const MonomialOrder& order);

nlohmann::json ugb_json(const Code& code, const UgbResult& res);
void print_ugb(std::ostream& out, const Code& code, const UgbResult& res);

nlohmann::json classify_json(const Code& code, const ClassifyReport& rep);
void print_classify(std::ostream& out, const Code& code, const ClassifyReport& rep);

}  // namespace toricode

#endif
