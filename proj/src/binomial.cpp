#include "toricode/binomial.hpp"

#include <algorithm>

namespace toricode {

bool is_kernel_pair(const Code& code, const Monomial& a, const Monomial& b) {
    return image(code, a) == image(code, b);
}

Binomial make_binomial(const Code& code, Monomial a, Monomial b) {
    if (a == b) throw domain_error("degenerate binomial t^a - t^a");
    if (!is_kernel_pair(code, a, b))
        throw domain_error("binomial terms " + to_string(code, a) + " and " + to_string(code, b) +
                           " are not in the same fiber");
    return Binomial{std::move(a), std::move(b)};
}

Binomial oriented(const Code& code, Binomial b, const MonomialOrder& order) {
    (void)code;
    if (order.less(b.plus, b.minus)) std::swap(b.plus, b.minus);
    return b;
}

Binomial sign_normalized(const Code& code, Binomial b) {
    return oriented(code, std::move(b), MonomialOrder::grevlex(b.plus.nvars()));
}

bool binomial_canonical_less(const Binomial& a, const Binomial& b) {
    MonomialOrder g = MonomialOrder::grevlex(a.plus.nvars());
    Cmp c = g.compare(a.plus, b.plus);
    if (c != Cmp::equal) return c == Cmp::less;
    return g.compare(a.minus, b.minus) == Cmp::less;
}

std::vector<Binomial> canonical_set(const Code& code, std::vector<Binomial> v) {
    for (Binomial& b : v) b = sign_normalized(code, std::move(b));
    std::sort(v.begin(), v.end(), binomial_canonical_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool same_binomial_set(const Code& code, std::vector<Binomial> a, std::vector<Binomial> b) {
    return canonical_set(code, std::move(a)) == canonical_set(code, std::move(b));
}

long long mu_weight(const Code& code, const Binomial& b) { return mu_weight(code, b.plus); }

std::string to_string(const Code& code, const Binomial& b) {
    return to_string(code, b.plus) + " - " + to_string(code, b.minus);
}

}  // namespace toricode
