#include "toricode/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toricode {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw format_error("bad rational '" + s + "'");
    }
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

MonomialOrder::MonomialOrder(const MonomialOrder& o)
    : kind_(o.kind_), nvars_(o.nvars_), weights_(o.weights_), raw_weights_(o.raw_weights_), cheap_var_(o.cheap_var_) {
    if (o.tiebreak_) tiebreak_ = std::make_unique<MonomialOrder>(*o.tiebreak_);
}

MonomialOrder& MonomialOrder::operator=(const MonomialOrder& o) {
    if (this == &o) return *this;
    kind_ = o.kind_;
    nvars_ = o.nvars_;
    weights_ = o.weights_;
    raw_weights_ = o.raw_weights_;
    cheap_var_ = o.cheap_var_;
    tiebreak_ = o.tiebreak_ ? std::make_unique<MonomialOrder>(*o.tiebreak_) : nullptr;
    return *this;
}

MonomialOrder MonomialOrder::lex(std::uint32_t nvars) { return MonomialOrder(Kind::lex, nvars); }

MonomialOrder MonomialOrder::grevlex(std::uint32_t nvars) { return MonomialOrder(Kind::grevlex, nvars); }

MonomialOrder MonomialOrder::weight(std::vector<Rational> w, MonomialOrder tiebreak) {
    MonomialOrder o(Kind::weight, tiebreak.nvars());
    if (w.size() != o.nvars_) throw domain_error("weight vector length does not match variable count");
    if (tiebreak.kind_ == Kind::weight) throw domain_error("weight tiebreak must be a grounded order");
    long long common = 1;
    for (const Rational& r : w) {
        if (r.num < 0) throw domain_error("weight orders require nonnegative weights");
        common = std::lcm(common, r.den);
        if (common > (1ll << 40)) throw domain_error("weight denominators too large");
    }
    o.weights_.reserve(w.size());
    for (const Rational& r : w) o.weights_.push_back(r.num * (common / r.den));
    o.raw_weights_ = std::move(w);
    o.tiebreak_ = std::make_unique<MonomialOrder>(std::move(tiebreak));
    return o;
}

MonomialOrder MonomialOrder::sat_revlex(std::vector<long long> degs, std::uint32_t cheap_var) {
    MonomialOrder o(Kind::sat_revlex, static_cast<std::uint32_t>(degs.size()));
    for (long long d : degs)
        if (d <= 0) throw domain_error("saturation order needs positive degrees");
    if (cheap_var >= o.nvars_) throw domain_error("cheap variable out of range");
    o.weights_ = std::move(degs);
    o.cheap_var_ = cheap_var;
    return o;
}

namespace {

long long dot(const std::vector<long long>& w, const Monomial& m) {
    long long acc = 0;
    for (const auto& [v, e] : m.factors()) acc += w[v] * static_cast<long long>(e);
    return acc;
}

// Sign of the highest-index entry of a-b among entries with index in the
// canonical positions, skipping `skip` (pass nvars to skip nothing).
// Returns 0 if a == b away from skip.
int last_diff_sign(const Monomial& a, const Monomial& b, std::uint32_t skip) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.rbegin();
    auto ib = fb.rbegin();
    while (ia != fa.rend() || ib != fb.rend()) {
        if (ia != fa.rend() && ia->first == skip) {
            ++ia;
            continue;
        }
        if (ib != fb.rend() && ib->first == skip) {
            ++ib;
            continue;
        }
        if (ib == fb.rend() || (ia != fa.rend() && ia->first > ib->first)) return 1;
        if (ia == fa.rend() || ib->first > ia->first) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

// Sign of the lowest-index entry of a-b.
int first_diff_sign(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.begin();
    auto ib = fb.begin();
    while (ia != fa.end() || ib != fb.end()) {
        if (ib == fb.end() || (ia != fa.end() && ia->first < ib->first)) return 1;
        if (ia == fa.end() || ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

}  // namespace

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars_ || b.nvars() != nvars_)
        throw domain_error("monomials do not live in this order's variable set");
    switch (kind_) {
        case Kind::lex: {
            int s = first_diff_sign(a, b);
            return s == 0 ? Cmp::equal : (s > 0 ? Cmp::greater : Cmp::less);
        }
        case Kind::grevlex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? Cmp::greater : Cmp::less;
            // graded reverse lex: larger iff the last nonzero of a-b is negative
            int s = last_diff_sign(a, b, nvars_);
            return s == 0 ? Cmp::equal : (s < 0 ? Cmp::greater : Cmp::less);
        }
        case Kind::weight: {
            long long wa = dot(weights_, a), wb = dot(weights_, b);
            if (wa != wb) return wa > wb ? Cmp::greater : Cmp::less;
            return tiebreak_->compare(a, b);
        }
        case Kind::sat_revlex: {
            long long wa = dot(weights_, a), wb = dot(weights_, b);
            if (wa != wb) return wa > wb ? Cmp::greater : Cmp::less;
            // cheap_var sits in the last position of the permuted order
            std::uint32_t ca = a.exponent(cheap_var_), cb = b.exponent(cheap_var_);
            if (ca != cb) return ca > cb ? Cmp::less : Cmp::greater;
            int s = last_diff_sign(a, b, cheap_var_);
            return s == 0 ? Cmp::equal : (s < 0 ? Cmp::greater : Cmp::less);
        }
    }
    throw domain_error("unreachable order kind");
}

std::string MonomialOrder::spec_string() const {
    switch (kind_) {
        case Kind::lex:
            return "lex";
        case Kind::grevlex:
            return "grevlex";
        case Kind::weight: {
            std::string out = "weight:[";
            for (size_t i = 0; i < raw_weights_.size(); ++i) {
                if (i) out += ",";
                out += to_string(raw_weights_[i]);
            }
            out += "]:" + tiebreak_->spec_string();
            return out;
        }
        case Kind::sat_revlex:
            return "sat_revlex#" + std::to_string(cheap_var_);
    }
    return "?";
}

MonomialOrder parse_order_spec(const std::string& spec, std::uint32_t nvars) {
    if (spec == "lex") return MonomialOrder::lex(nvars);
    if (spec == "grevlex") return MonomialOrder::grevlex(nvars);
    const std::string prefix = "weight:[";
    if (spec.rfind(prefix, 0) == 0) {
        auto close = spec.find(']', prefix.size());
        if (close == std::string::npos) throw format_error("order spec missing ']': " + spec);
        std::string body = spec.substr(prefix.size(), close - prefix.size());
        std::string rest = spec.substr(close + 1);
        std::vector<Rational> w;
        if (!body.empty()) {
            std::stringstream ss(body);
            std::string tok;
            while (std::getline(ss, tok, ',')) w.push_back(parse_rational(tok));
        }
        if (w.size() != nvars)
            throw format_error("weight vector has " + std::to_string(w.size()) + " entries, code has " +
                               std::to_string(nvars) + " variables");
        if (rest.empty() || rest[0] != ':') throw format_error("order spec missing tiebreak: " + spec);
        std::string tb = rest.substr(1);
        if (tb != "grevlex" && tb != "lex") throw format_error("unknown tiebreak '" + tb + "'");
        MonomialOrder tie = tb == "lex" ? MonomialOrder::lex(nvars) : MonomialOrder::grevlex(nvars);
        try {
            return MonomialOrder::weight(std::move(w), std::move(tie));
        } catch (const domain_error& e) {
            throw format_error(e.what());
        }
    }
    throw format_error("unknown order spec '" + spec + "'");
}

MonomialOrder weight_minus_one_order(const Code& code) {
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    std::vector<Rational> w;
    w.reserve(m);
    for (std::uint32_t v = 0; v < m; ++v) w.push_back(Rational(weight(code.zone_word(static_cast<int>(v))) - 1));
    return MonomialOrder::weight(std::move(w), MonomialOrder::grevlex(m));
}

MonomialOrder one_pierced_test_order(const Code& code) {
    if (code.n() != 3) throw domain_error("the one-piercing test order is defined for n = 3 only");
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    std::vector<Rational> w;
    w.reserve(m);
    for (std::uint32_t v = 0; v < m; ++v) {
        int wt = weight(code.zone_word(static_cast<int>(v)));
        w.push_back(Rational(wt == 2 ? 1 : 0));
    }
    return MonomialOrder::weight(std::move(w), MonomialOrder::grevlex(m));
}

}  // namespace toricode
