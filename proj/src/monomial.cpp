#include "toricode/monomial.hpp"

#include <algorithm>

namespace toricode {

Monomial::Monomial(std::uint32_t nvars, std::vector<Factor> factors) : nvars_(nvars), f_(std::move(factors)) {
    std::sort(f_.begin(), f_.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < f_.size();) {
        std::uint32_t var = f_[i].first;
        std::uint64_t exp = 0;
        while (i < f_.size() && f_[i].first == var) exp += f_[i++].second;
        if (var >= nvars_) throw domain_error("monomial variable index out of range");
        if (exp > 0) f_[out++] = {var, static_cast<std::uint32_t>(exp)};
    }
    f_.resize(out);
}

Monomial Monomial::variable(std::uint32_t nvars, std::uint32_t var, std::uint32_t exp) {
    Monomial m(nvars);
    if (var >= nvars) throw domain_error("variable index out of range");
    if (exp > 0) m.f_.push_back({var, exp});
    return m;
}

int Monomial::degree() const {
    long long d = 0;
    for (const auto& [v, e] : f_) d += e;
    return static_cast<int>(d);
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
    for (const auto& [v, e] : f_)
        if (v == var) return e;
    return 0;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(nvars_);
    for (const auto& [v, e] : f_) {
        mix(v);
        mix(e);
    }
    return h;
}

namespace {
void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw domain_error("monomials over mismatched variable sets");
}
}  // namespace

Monomial mul(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    Monomial out(a.nvars());
    std::vector<Monomial::Factor> f;
    f.reserve(a.factors().size() + b.factors().size());
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first))
            f.push_back(*ia++);
        else if (ia == ea || ib->first < ia->first)
            f.push_back(*ib++);
        else {
            f.push_back({ia->first, ia->second + ib->second});
            ++ia;
            ++ib;
        }
    }
    return Monomial(a.nvars(), std::move(f));
}

bool divides(const Monomial& d, const Monomial& m) {
    check_same_ring(d, m);
    auto im = m.factors().begin(), em = m.factors().end();
    for (const auto& [v, e] : d.factors()) {
        while (im != em && im->first < v) ++im;
        if (im == em || im->first != v || im->second < e) return false;
    }
    return true;
}

Monomial div(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    std::vector<Monomial::Factor> f;
    auto ib = b.factors().begin(), eb = b.factors().end();
    for (const auto& [v, e] : a.factors()) {
        std::uint32_t sub = 0;
        while (ib != eb && ib->first < v) throw domain_error("division not exact");
        if (ib != eb && ib->first == v) {
            sub = ib->second;
            ++ib;
        }
        if (sub > e) throw domain_error("division not exact");
        if (e > sub) f.push_back({v, e - sub});
    }
    if (ib != eb) throw domain_error("division not exact");
    return Monomial(a.nvars(), std::move(f));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    std::vector<Monomial::Factor> f;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first))
            f.push_back(*ia++);
        else if (ia == ea || ib->first < ia->first)
            f.push_back(*ib++);
        else {
            f.push_back({ia->first, std::max(ia->second, ib->second)});
            ++ia;
            ++ib;
        }
    }
    return Monomial(a.nvars(), std::move(f));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    std::vector<Monomial::Factor> f;
    auto ib = b.factors().begin(), eb = b.factors().end();
    for (const auto& [v, e] : a.factors()) {
        while (ib != eb && ib->first < v) ++ib;
        if (ib != eb && ib->first == v && std::min(e, ib->second) > 0) f.push_back({v, std::min(e, ib->second)});
    }
    return Monomial(a.nvars(), std::move(f));
}

bool coprime(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else
            return false;
    }
    return true;
}

std::vector<int> image(const Code& code, const Monomial& m) {
    if (static_cast<int>(m.nvars()) != code.zone_count())
        throw domain_error("monomial does not match the code's variable set");
    std::vector<int> img(static_cast<size_t>(code.n()), 0);
    for (const auto& [v, e] : m.factors()) {
        Codeword w = code.zone_word(static_cast<int>(v));
        for (int i : support(w)) img[static_cast<size_t>(i - 1)] += static_cast<int>(e);
    }
    return img;
}

long long mu_weight(const Code& code, const Monomial& m) {
    long long total = 0;
    for (const auto& [v, e] : m.factors())
        total += static_cast<long long>(e) * weight(code.zone_word(static_cast<int>(v)));
    return total;
}

std::string to_string(const Code& code, const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) out += "*";
        out += code.variable_name(static_cast<int>(v));
        if (e > 1) out += "^" + std::to_string(e);
        first = false;
    }
    return out;
}

}  // namespace toricode
