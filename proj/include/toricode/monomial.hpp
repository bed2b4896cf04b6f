#ifndef TORICODE_MONOMIAL_HPP
#define TORICODE_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toricode/code.hpp"

namespace toricode {

/// A monomial in the zone variables, stored as a sparse exponent vector:
/// (variable index, exponent) pairs sorted by variable, no zero exponents.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() : nvars_(0) {}
    explicit Monomial(std::uint32_t nvars) : nvars_(nvars) {}
    Monomial(std::uint32_t nvars, std::vector<Factor> factors);

    static Monomial variable(std::uint32_t nvars, std::uint32_t var, std::uint32_t exp = 1);

    std::uint32_t nvars() const { return nvars_; }
    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    int degree() const;
    std::uint32_t exponent(std::uint32_t var) const;

    bool operator==(const Monomial& o) const { return nvars_ == o.nvars_ && f_ == o.f_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const;

private:
    std::uint32_t nvars_;
    std::vector<Factor> f_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

Monomial mul(const Monomial& a, const Monomial& b);
/// Exact division; requires divides(b, a).
Monomial div(const Monomial& a, const Monomial& b);
bool divides(const Monomial& d, const Monomial& m);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Image under the monomial map: entry i = number of times neuron i+1 fires,
/// i.e. sum over factors of exponent * codeword bit.
std::vector<int> image(const Code& code, const Monomial& m);

/// L1 norm of the image; equals the weight-sum of the factors.
long long mu_weight(const Code& code, const Monomial& m);

std::string to_string(const Code& code, const Monomial& m);  // "t{1}^2*t{2,3}" ; "1"

}  // namespace toricode

#endif
