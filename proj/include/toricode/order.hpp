#ifndef TORICODE_ORDER_HPP
#define TORICODE_ORDER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "toricode/code.hpp"
#include "toricode/monomial.hpp"

namespace toricode {

enum class Cmp { less, equal, greater };

/// An exact rational, used for weight vectors.
struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);
};

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

/// A total monomial order: respects multiplication and is a well-ordering
/// (1 precedes every other monomial). Three public kinds; a graded reverse
/// lexicographic order with one variable moved to the cheap position exists
/// for the saturation engine.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, weight, sat_revlex };

    static MonomialOrder lex(std::uint32_t nvars);
    static MonomialOrder grevlex(std::uint32_t nvars);
    /// Weight order: compare w·a vs w·b, ties decided by `tiebreak`.
    /// Weights must be nonnegative so the result is a well-ordering.
    static MonomialOrder weight(std::vector<Rational> w, MonomialOrder tiebreak);
    /// Reverse lex graded by the positive weights `degs`, with `cheap_var`
    /// moved to the last (cheapest) position.
    static MonomialOrder sat_revlex(std::vector<long long> degs, std::uint32_t cheap_var);

    MonomialOrder(const MonomialOrder&);
    MonomialOrder& operator=(const MonomialOrder&);
    MonomialOrder(MonomialOrder&&) = default;
    MonomialOrder& operator=(MonomialOrder&&) = default;

    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::less; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::greater; }

    std::uint32_t nvars() const { return nvars_; }
    Kind kind() const { return kind_; }
    /// Round-trips through parse_order_spec for the public kinds.
    std::string spec_string() const;

private:
    MonomialOrder(Kind k, std::uint32_t nvars) : kind_(k), nvars_(nvars) {}

    Kind kind_;
    std::uint32_t nvars_;
    std::vector<long long> weights_;  // denominators cleared
    std::vector<Rational> raw_weights_;
    std::unique_ptr<MonomialOrder> tiebreak_;
    std::uint32_t cheap_var_ = 0;
};

/// Mini-language: "lex" | "grevlex" | "weight:[q1,...,qm]:grevlex" with
/// rationals like "3" or "2/5"; "lex" is accepted as a tiebreak too.
MonomialOrder parse_order_spec(const std::string& spec, std::uint32_t nvars);

/// Weight order with one weight per zone variable, each equal to the
/// codeword weight minus one, ties by grevlex.
MonomialOrder weight_minus_one_order(const Code& code);

/// The n=3 one-piercing test order: weights (0,0,0,1,1,1,0) over the seven
/// possible nonzero codewords in canonical order, restricted to the
/// variables the code actually has; ties by grevlex.
MonomialOrder one_pierced_test_order(const Code& code);

}  // namespace toricode

#endif
