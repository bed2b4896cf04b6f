#ifndef TORICODE_VERIFY_HPP
#define TORICODE_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "toricode/binomial.hpp"
#include "toricode/code.hpp"

namespace toricode {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

/// Build a binomial from support-set strings like {"1,3","2,3"} - {"3","1,2,3"}.
Binomial binomial_from_supports(const Code& code, const std::vector<std::string>& plus,
                                const std::vector<std::string>& minus);

/// The published reduced bases of the full three-circle code.
std::vector<Binomial> expected_venn3_grevlex_basis(const Code& venn3);
std::vector<Binomial> expected_venn3_weighted_basis(const Code& venn3);

/// The quadratic family t_{1..j} t_{2..k} - t_{1..k} t_{2..j}, 2 <= j < k <= n,
/// over internal_code(n); the expected Graver and universal basis.
std::vector<Binomial> internal_quadratic_family(int n);

/// { t_c - prod_{j in supp c} t_{e_j} : wt(c) >= 2 } for an external code.
std::vector<Binomial> product_basis(const Code& code);

/// Longest strict containment chain among the curves, from the code alone.
int curve_nesting_depth(const Code& code);

std::vector<CheckResult> verify_example_gb();
std::vector<CheckResult> verify_internal(int n);
std::vector<CheckResult> verify_external_trees();
std::vector<CheckResult> verify_depth1_patterns(const std::optional<Code>& user_code = std::nullopt);
std::vector<CheckResult> verify_lawrence(int n_max = 6);

}  // namespace toricode

#endif
