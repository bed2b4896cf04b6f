#ifndef TORICODE_BINOMIAL_HPP
#define TORICODE_BINOMIAL_HPP

#include <string>
#include <vector>

#include "toricode/code.hpp"
#include "toricode/monomial.hpp"
#include "toricode/order.hpp"

namespace toricode {

/// t^plus - t^minus with both terms in the same fiber of the code's monomial
/// map. Construction goes through make_binomial, which checks the fiber
/// condition and rejects the degenerate t^a - t^a.
struct Binomial {
    Monomial plus;
    Monomial minus;

    bool operator==(const Binomial& o) const { return plus == o.plus && minus == o.minus; }
    bool operator!=(const Binomial& o) const { return !(*this == o); }
    /// max of the two term degrees
    int degree() const { return std::max(plus.degree(), minus.degree()); }
};

Binomial make_binomial(const Code& code, Monomial a, Monomial b);
bool is_kernel_pair(const Code& code, const Monomial& a, const Monomial& b);

/// Orient so that plus is the order-larger term.
Binomial oriented(const Code& code, Binomial b, const MonomialOrder& order);
/// Canonical sign for set comparisons: plus is the grevlex-larger term.
Binomial sign_normalized(const Code& code, Binomial b);

/// Total order on binomials (for deterministic sets): by plus, then minus,
/// under grevlex.
bool binomial_canonical_less(const Binomial& a, const Binomial& b);

/// Sign-normalize, sort, dedup.
std::vector<Binomial> canonical_set(const Code& code, std::vector<Binomial> v);
bool same_binomial_set(const Code& code, std::vector<Binomial> a, std::vector<Binomial> b);

long long mu_weight(const Code& code, const Binomial& b);
std::string to_string(const Code& code, const Binomial& b);

}  // namespace toricode

#endif
