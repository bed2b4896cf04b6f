#ifndef TORICODE_GROEBNER_HPP
#define TORICODE_GROEBNER_HPP

#include <optional>
#include <span>
#include <vector>

#include "toricode/binomial.hpp"
#include "toricode/errors.hpp"

namespace toricode {

struct GroebnerBasis {
    std::vector<Binomial> elements;  // oriented by `order`, sorted by leading term ascending
    MonomialOrder order;
    bool reduced = false;
};

/// S-polynomial of two binomials; binomials are closed under S-pairs, and the
/// pair cancels to zero exactly when the two reductions collide.
std::optional<Binomial> s_binomial(const Code& code, const Binomial& f, const Binomial& g, const MonomialOrder& order);

/// Full normal form: rewrite both terms until neither is divisible by any
/// leading term in `basis`. Returns nullopt when the terms meet (zero).
std::optional<Binomial> reduce(const Code& code, Binomial b, std::span<const Binomial> basis,
                               const MonomialOrder& order);

/// Buchberger completion, specialized to binomials. Pair selection: smallest
/// lcm degree first, then lcm under the order, then insertion indices.
GroebnerBasis buchberger(const Code& code, std::vector<Binomial> gens, MonomialOrder order, const Budget& budget = {});

/// The unique reduced basis of the same ideal; idempotent.
GroebnerBasis reduce_basis(const Code& code, GroebnerBasis gb);

GroebnerBasis reduced_groebner_basis(const Code& code, std::vector<Binomial> gens, MonomialOrder order,
                                     const Budget& budget = {});

/// Buchberger criterion as a checker: every S-pair reduces to zero.
bool is_groebner(const Code& code, std::span<const Binomial> set, const MonomialOrder& order);

/// Normal form of a single monomial (rewriting by leading terms).
Monomial normal_form(const Code& code, Monomial m, std::span<const Binomial> basis, const MonomialOrder& order);

/// b lies in the ideal generated by `gb` (assumed a Groebner basis).
bool reduces_to_zero(const Code& code, const Binomial& b, const GroebnerBasis& gb);

/// The two sets generate the same ideal (mutual normal-form vanishing).
bool same_ideal(const Code& code, const std::vector<Binomial>& a, const std::vector<Binomial>& b,
                const Budget& budget = {});

}  // namespace toricode

#endif
