#include "toricode/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace toricode {

std::optional<Binomial> s_binomial(const Code& code, const Binomial& f, const Binomial& g,
                                   const MonomialOrder& order) {
    Monomial L = lcm(f.plus, g.plus);
    Monomial u = mul(div(L, g.plus), g.minus);
    Monomial v = mul(div(L, f.plus), f.minus);
    if (u == v) return std::nullopt;
    return oriented(code, make_binomial(code, std::move(u), std::move(v)), order);
}

namespace {

// One rewriting pass of a single monomial: first basis element whose leading
// term divides wins. Returns true if a step happened.
bool rewrite_step(const Code& code, Monomial& m, std::span<const Binomial> basis) {
    for (const Binomial& g : basis) {
        if (divides(g.plus, m)) {
            m = mul(div(m, g.plus), g.minus);
            (void)code;
            return true;
        }
    }
    return false;
}

}  // namespace

Monomial normal_form(const Code& code, Monomial m, std::span<const Binomial> basis, const MonomialOrder& order) {
    (void)order;  // steps strictly decrease under any order the basis is oriented by
    while (rewrite_step(code, m, basis)) {
    }
    return m;
}

std::optional<Binomial> reduce(const Code& code, Binomial b, std::span<const Binomial> basis,
                               const MonomialOrder& order) {
    b = oriented(code, std::move(b), order);
    for (;;) {
        if (rewrite_step(code, b.plus, basis)) {
            if (b.plus == b.minus) return std::nullopt;
            b = oriented(code, std::move(b), order);
            continue;
        }
        if (rewrite_step(code, b.minus, basis)) {
            if (b.plus == b.minus) return std::nullopt;
            b = oriented(code, std::move(b), order);
            continue;
        }
        return b;
    }
}

GroebnerBasis buchberger(const Code& code, std::vector<Binomial> gens, MonomialOrder order, const Budget& budget) {
    std::vector<Binomial> g;
    g.reserve(gens.size());
    for (Binomial& b : gens) g.push_back(oriented(code, std::move(b), order));

    // pair key: (lcm degree, lcm, i, j); ordered so the smallest pops first
    struct PairLess {
        const std::vector<Monomial>* lcms;
        const MonomialOrder* ord;
        bool operator()(const std::tuple<int, size_t, size_t, size_t>& a,
                        const std::tuple<int, size_t, size_t, size_t>& b) const {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            Cmp c = ord->compare((*lcms)[std::get<1>(a)], (*lcms)[std::get<1>(b)]);
            if (c != Cmp::equal) return c == Cmp::less;
            if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
            return std::get<3>(a) < std::get<3>(b);
        }
    };
    std::vector<Monomial> lcms;
    PairLess less{&lcms, &order};
    std::set<std::tuple<int, size_t, size_t, size_t>, PairLess> queue(less);

    auto push_pair = [&](size_t i, size_t j) {
        if (coprime(g[i].plus, g[j].plus)) return;  // product criterion
        Monomial L = lcm(g[i].plus, g[j].plus);
        lcms.push_back(std::move(L));
        queue.insert({lcms.back().degree(), lcms.size() - 1, i, j});
    };

    for (size_t j = 1; j < g.size(); ++j)
        for (size_t i = 0; i < j; ++i) push_pair(i, j);

    std::uint64_t processed = 0;
    while (!queue.empty()) {
        if (++processed > budget.s_pairs)
            throw resource_error("S-pair budget of " + std::to_string(budget.s_pairs) + " exhausted", true);
        auto [deg, lidx, i, j] = *queue.begin();
        queue.erase(queue.begin());
        auto s = s_binomial(code, g[i], g[j], order);
        if (!s) continue;
        auto r = reduce(code, std::move(*s), g, order);
        if (!r) continue;
        g.push_back(std::move(*r));
        for (size_t k = 0; k + 1 < g.size(); ++k) push_pair(k, g.size() - 1);
    }

    std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) {
        Cmp c = order.compare(a.plus, b.plus);
        if (c != Cmp::equal) return c == Cmp::less;
        return order.compare(a.minus, b.minus) == Cmp::less;
    });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return GroebnerBasis{std::move(g), std::move(order), false};
}

GroebnerBasis reduce_basis(const Code& code, GroebnerBasis gb) {
    const MonomialOrder& order = gb.order;
    std::vector<Binomial> sorted = gb.elements;
    for (Binomial& b : sorted) b = oriented(code, std::move(b), order);
    std::sort(sorted.begin(), sorted.end(), [&](const Binomial& a, const Binomial& b) {
        Cmp c = order.compare(a.plus, b.plus);
        if (c != Cmp::equal) return c == Cmp::less;
        return order.compare(a.minus, b.minus) == Cmp::less;
    });

    // minimize: drop any element whose leading term is divided by a kept one
    std::vector<Binomial> kept;
    for (Binomial& b : sorted) {
        bool redundant = false;
        for (const Binomial& k : kept)
            if (divides(k.plus, b.plus)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(b));
    }

    // tail-reduce to a fixpoint
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < kept.size(); ++i) {
            Monomial nf = normal_form(code, kept[i].minus, kept, order);
            if (nf != kept[i].minus) {
                kept[i].minus = std::move(nf);
                changed = true;
            }
        }
    }

    std::sort(kept.begin(), kept.end(), [&](const Binomial& a, const Binomial& b) {
        return order.compare(a.plus, b.plus) == Cmp::less;
    });
    return GroebnerBasis{std::move(kept), order, true};
}

GroebnerBasis reduced_groebner_basis(const Code& code, std::vector<Binomial> gens, MonomialOrder order,
                                     const Budget& budget) {
    return reduce_basis(code, buchberger(code, std::move(gens), std::move(order), budget));
}

bool is_groebner(const Code& code, std::span<const Binomial> set, const MonomialOrder& order) {
    std::vector<Binomial> g(set.begin(), set.end());
    for (Binomial& b : g) b = oriented(code, std::move(b), order);
    for (size_t j = 1; j < g.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            auto s = s_binomial(code, g[i], g[j], order);
            if (!s) continue;
            if (reduce(code, std::move(*s), g, order)) return false;
        }
    return true;
}

bool reduces_to_zero(const Code& code, const Binomial& b, const GroebnerBasis& gb) {
    return !reduce(code, b, gb.elements, gb.order).has_value();
}

bool same_ideal(const Code& code, const std::vector<Binomial>& a, const std::vector<Binomial>& b,
                const Budget& budget) {
    MonomialOrder g = MonomialOrder::grevlex(static_cast<std::uint32_t>(code.zone_count()));
    GroebnerBasis ga = buchberger(code, a, g, budget);
    for (const Binomial& x : b)
        if (!reduces_to_zero(code, x, ga)) return false;
    GroebnerBasis gbb = buchberger(code, b, g, budget);
    for (const Binomial& x : a)
        if (!reduces_to_zero(code, x, gbb)) return false;
    return true;
}

}  // namespace toricode
