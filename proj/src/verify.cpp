#include "toricode/verify.hpp"

#include <algorithm>
#include <sstream>

#include "toricode/classify.hpp"
#include "toricode/corpus.hpp"
#include "toricode/graphs.hpp"
#include "toricode/groebner.hpp"
#include "toricode/toric.hpp"

namespace toricode {

Binomial binomial_from_supports(const Code& code, const std::vector<std::string>& plus,
                                const std::vector<std::string>& minus) {
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    auto side = [&](const std::vector<std::string>& supports) {
        Monomial acc(m);
        for (const std::string& s : supports) {
            int var = code.zone_index(codeword_from_support_string(s, code.n()));
            if (var < 0) throw domain_error("support set {" + s + "} is not a codeword of this code");
            acc = mul(acc, Monomial::variable(m, static_cast<std::uint32_t>(var)));
        }
        return acc;
    };
    return make_binomial(code, side(plus), side(minus));
}

std::vector<Binomial> expected_venn3_grevlex_basis(const Code& c) {
    return {binomial_from_supports(c, {"1,3", "2,3"}, {"3", "1,2,3"}),
            binomial_from_supports(c, {"1,2", "2,3"}, {"2", "1,2,3"}),
            binomial_from_supports(c, {"1", "2,3"}, {"1,2,3"}),
            binomial_from_supports(c, {"1,2", "1,3"}, {"1", "1,2,3"}),
            binomial_from_supports(c, {"2", "1,3"}, {"1,2,3"}),
            binomial_from_supports(c, {"3", "1,2"}, {"1,2,3"}),
            binomial_from_supports(c, {"2", "3"}, {"2,3"}),
            binomial_from_supports(c, {"1", "3"}, {"1,3"}),
            binomial_from_supports(c, {"1", "2"}, {"1,2"})};
}

std::vector<Binomial> expected_venn3_weighted_basis(const Code& c) {
    return {binomial_from_supports(c, {"2,3"}, {"2", "3"}), binomial_from_supports(c, {"1,3"}, {"1", "3"}),
            binomial_from_supports(c, {"1,2"}, {"1", "2"}),
            binomial_from_supports(c, {"1,2,3"}, {"1", "2", "3"})};
}

std::vector<Binomial> internal_quadratic_family(int n) {
    Code code = internal_code(n);
    auto chain = [](int lo, int hi) {  // support string for {lo..hi}
        std::string s;
        for (int i = lo; i <= hi; ++i) {
            if (!s.empty()) s += ',';
            s += std::to_string(i);
        }
        return s;
    };
    std::vector<Binomial> out;
    for (int j = 2; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            out.push_back(binomial_from_supports(code, {"1," + chain(2, j), chain(2, k)},
                                                 {"1," + chain(2, k), chain(2, j)}));
    return canonical_set(code, std::move(out));
}

std::vector<Binomial> product_basis(const Code& code) {
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    std::vector<Binomial> out;
    for (int v = 0; v < code.zone_count(); ++v) {
        Codeword c = code.zone_word(v);
        if (weight(c) < 2) continue;
        Monomial prod(m);
        for (int j : support(c)) {
            int var = code.zone_index(Codeword{1} << (j - 1));
            if (var < 0) throw domain_error("product basis requires an external code");
            prod = mul(prod, Monomial::variable(m, static_cast<std::uint32_t>(var)));
        }
        out.push_back(make_binomial(code, Monomial::variable(m, static_cast<std::uint32_t>(v)), std::move(prod)));
    }
    return canonical_set(code, std::move(out));
}

int curve_nesting_depth(const Code& code) {
    int n = code.n();
    // contained[i][j]: every codeword with curve i also has curve j
    std::vector<std::vector<bool>> contained(static_cast<size_t>(n) + 1, std::vector<bool>(static_cast<size_t>(n) + 1, false));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool fires = false, sub = true;
            for (Codeword w : code.zone_words()) {
                if (!(w & (Codeword{1} << (i - 1)))) continue;
                fires = true;
                if (!(w & (Codeword{1} << (j - 1)))) {
                    sub = false;
                    break;
                }
            }
            contained[static_cast<size_t>(i)][static_cast<size_t>(j)] = fires && sub;
        }
    }
    // longest strict chain; strictness breaks mutual containment
    std::vector<int> depth(static_cast<size_t>(n) + 1, -1);
    auto dfs = [&](auto&& self, int i) -> int {
        if (depth[static_cast<size_t>(i)] >= 0) return depth[static_cast<size_t>(i)];
        depth[static_cast<size_t>(i)] = 0;
        int best = 0;
        for (int j = 1; j <= n; ++j)
            if (contained[static_cast<size_t>(i)][static_cast<size_t>(j)] && !contained[static_cast<size_t>(j)][static_cast<size_t>(i)])
                best = std::max(best, 1 + self(self, j));
        depth[static_cast<size_t>(i)] = best;
        return best;
    };
    int out = 0;
    for (int i = 1; i <= n; ++i) out = std::max(out, dfs(dfs, i));
    return out;
}

namespace {

CheckResult check(const std::string& name, bool pass, const std::string& detail = "") {
    return CheckResult{name, pass, false, detail};
}

std::string count_detail(size_t got, size_t expected) {
    return "got " + std::to_string(got) + ", expected " + std::to_string(expected);
}

}  // namespace

std::vector<CheckResult> verify_example_gb() {
    std::vector<CheckResult> out;
    Code c = corpus::venn3();
    std::uint32_t m = static_cast<std::uint32_t>(c.zone_count());
    GeneratorReport gens = toric_generators(c, GenMethod::bounded);

    GroebnerBasis g1 = reduce_basis(c, buchberger(c, gens.generators, MonomialOrder::grevlex(m)));
    auto expected1 = expected_venn3_grevlex_basis(c);
    out.push_back(check("venn3 reduced grevlex basis has the nine expected binomials",
                        same_binomial_set(c, g1.elements, expected1), count_detail(g1.elements.size(), expected1.size())));

    MonomialOrder w = parse_order_spec("weight:[0,0,0,1,1,1,2]:grevlex", m);
    GroebnerBasis g2 = reduce_basis(c, buchberger(c, gens.generators, w));
    auto expected2 = expected_venn3_weighted_basis(c);
    out.push_back(check("venn3 reduced weighted basis has the four expected binomials",
                        same_binomial_set(c, g2.elements, expected2), count_detail(g2.elements.size(), expected2.size())));

    std::vector<Binomial> shared;
    auto set1 = canonical_set(c, g1.elements);
    for (const Binomial& b : canonical_set(c, g2.elements))
        if (std::binary_search(set1.begin(), set1.end(), b, binomial_canonical_less)) shared.push_back(b);
    auto indis = indispensable_binomials(c);
    bool shared_ok = same_binomial_set(c, shared, indis) && same_binomial_set(c, indis, pairwise_sum_binomials(c));
    out.push_back(check("the three binomials common to both bases are exactly the indispensable ones", shared_ok,
                        count_detail(shared.size(), indis.size())));
    return out;
}

std::vector<CheckResult> verify_internal(int n) {
    std::vector<CheckResult> out;
    Code code = internal_code(n);
    auto family = internal_quadratic_family(n);
    size_t expected_count = static_cast<size_t>(n - 1) * static_cast<size_t>(n - 2) / 2;

    GraverReport graver = graver_basis(code);
    out.push_back(check("internal(" + std::to_string(n) + ") Graver basis equals the quadratic family",
                        graver.exact && same_binomial_set(code, graver.elements, family),
                        count_detail(graver.elements.size(), expected_count)));

    UgbResult ugb = universal_gb(code);
    out.push_back(check("internal(" + std::to_string(n) + ") universal basis is exact and equals the Graver basis",
                        ugb.exact && same_binomial_set(code, ugb.elements, family),
                        count_detail(ugb.elements.size(), expected_count)));

    bool prim = true;
    for (const Binomial& b : family) prim = prim && is_primitive(code, b);
    out.push_back(check("internal(" + std::to_string(n) + ") family members are primitive", prim));
    return out;
}

std::vector<CheckResult> verify_external_trees() {
    std::vector<CheckResult> out;
    struct Tree {
        std::string name;
        Code code;
        long long expected_quads;
    };
    std::vector<Tree> trees;
    trees.push_back({"path4", corpus::path_code(4), 2});
    trees.push_back({"star4", corpus::star_code(4), 3});
    trees.push_back({"caterpillar5", corpus::caterpillar5(), 4});

    for (const Tree& t : trees) {
        const Code& c = t.code;
        std::uint32_t m = static_cast<std::uint32_t>(c.zone_count());
        GeneratorReport gens = toric_generators(c, GenMethod::bounded);

        GroebnerBasis gb = reduce_basis(c, buchberger(c, gens.generators, weight_minus_one_order(c)));
        out.push_back(check(t.name + ": reduced basis under the weight-minus-one order is the product basis",
                            same_binomial_set(c, gb.elements, product_basis(c))));

        DeltaGraph dg = delta_graph(c);
        long long expected = expected_quadratic_count(dg);
        UgbResult ugb = universal_gb(c);
        long long quads = 0;
        for (const Binomial& b : ugb.elements)
            if (b.plus.degree() == 2 && b.minus.degree() == 2) ++quads;
        bool ok = ugb.closed && quads == expected && expected == t.expected_quads;
        out.push_back(check(t.name + ": closed universal sandwich has the tree-count number of quadratic pairs", ok,
                            "closed=" + std::string(ugb.closed ? "yes" : "no") + ", quads=" + std::to_string(quads) +
                                ", tree count=" + std::to_string(expected)));

        GroebnerBasis grev = reduce_basis(c, buchberger(c, gens.generators, MonomialOrder::grevlex(m)));
        std::vector<Binomial> b_in_grev;
        auto bset = product_basis(c);
        auto grev_set = canonical_set(c, grev.elements);
        for (const Binomial& b : canonical_set(c, bset))
            if (std::binary_search(grev_set.begin(), grev_set.end(), b, binomial_canonical_less)) b_in_grev.push_back(b);
        out.push_back(check(t.name + ": product-basis elements inside the grevlex basis are the pairwise sums",
                            same_binomial_set(c, b_in_grev, pairwise_sum_binomials(c))));
    }
    return out;
}

std::vector<CheckResult> verify_depth1_patterns(const std::optional<Code>& user_code) {
    std::vector<CheckResult> out;
    std::vector<std::pair<std::string, Code>> codes;
    if (user_code) {
        const Code& c = *user_code;
        std::string why;
        if (!c.every_neuron_fires()) why = "some neuron never fires";
        int depth = curve_nesting_depth(c);
        if (why.empty() && depth > 1) why = "curve nesting depth " + std::to_string(depth) + " exceeds 1";
        if (!why.empty()) {
            CheckResult r;
            r.name = "user code eligibility";
            r.pass = true;
            r.skipped = true;
            r.detail = "corpus mismatch: " + why + "; skipped";
            out.push_back(r);
            return out;
        }
        codes.push_back({"user code", c});
    } else {
        std::vector<std::string> names{"nested-pierced", "lollipop3", "stacked3", "petal-chain4",
                                       "petal-fan4",     "internal3", "venn2"};
        auto corpus_codes = corpus::depth1_corpus();
        for (size_t i = 0; i < corpus_codes.size(); ++i) codes.push_back({names[i], corpus_codes[i]});
    }

    for (const auto& [name, c] : codes) {
        auto from_patterns = depth1_indispensables(c);
        auto from_fibers = indispensable_binomials(c);
        out.push_back(check(name + ": pattern-driven indispensables match the fiber analysis",
                            same_binomial_set(c, from_patterns, from_fibers),
                            count_detail(from_patterns.size(), from_fibers.size())));
        long long max_mu = 0;
        for (const Binomial& b : from_fibers) max_mu = std::max(max_mu, mu_weight(c, b));
        out.push_back(check(name + ": no indispensable binomial of weight six or more", max_mu <= 5,
                            "max weight " + std::to_string(max_mu)));
    }
    return out;
}

std::vector<CheckResult> verify_lawrence(int n_max) {
    std::vector<CheckResult> out;
    for (int n = 3; n <= n_max; ++n) {
        LawrenceWitness w = verify_lawrence_row_equivalence(n);
        out.push_back(check("internal(" + std::to_string(n) + ") matrix is row-equivalent to a Lawrence lifting", w.ok,
                            w.note));
    }
    return out;
}

}  // namespace toricode
