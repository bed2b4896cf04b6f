#include "toricode/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <unordered_map>

namespace toricode {

CodeMatrix code_matrix(const Code& code) {
    if (code.zone_count() == 0) throw domain_error("code has no nonzero codewords");
    CodeMatrix m;
    m.rows = code.n();
    m.cols = code.zone_count();
    m.entries.assign(static_cast<size_t>(m.rows) * static_cast<size_t>(m.cols), 0);
    for (int c = 0; c < m.cols; ++c) {
        Codeword w = code.zone_word(c);
        for (int i : support(w)) m.entries[static_cast<size_t>(i - 1) * static_cast<size_t>(m.cols) + static_cast<size_t>(c)] = 1;
    }
    return m;
}

namespace {

// Column-style integer elimination; returns the number of pivots and, when
// track != nullptr, the unimodular column-operation record.
int column_eliminate(std::vector<std::vector<long long>>& cols, int nrows,
                     std::vector<std::vector<long long>>* track) {
    int m = static_cast<int>(cols.size());
    int lead = 0;
    for (int r = 0; r < nrows && lead < m; ++r) {
        for (;;) {
            int best = -1;
            for (int j = lead; j < m; ++j) {
                long long v = cols[static_cast<size_t>(j)][static_cast<size_t>(r)];
                if (v != 0 && (best < 0 || std::llabs(v) < std::llabs(cols[static_cast<size_t>(best)][static_cast<size_t>(r)])))
                    best = j;
            }
            if (best < 0) break;
            bool others = false;
            for (int j = lead; j < m; ++j) {
                if (j == best) continue;
                long long v = cols[static_cast<size_t>(j)][static_cast<size_t>(r)];
                if (v == 0) continue;
                long long q = v / cols[static_cast<size_t>(best)][static_cast<size_t>(r)];
                if (q != 0) {
                    for (int i = 0; i < nrows; ++i)
                        cols[static_cast<size_t>(j)][static_cast<size_t>(i)] -= q * cols[static_cast<size_t>(best)][static_cast<size_t>(i)];
                    if (track)
                        for (size_t i = 0; i < (*track)[static_cast<size_t>(j)].size(); ++i)
                            (*track)[static_cast<size_t>(j)][i] -= q * (*track)[static_cast<size_t>(best)][i];
                }
                if (cols[static_cast<size_t>(j)][static_cast<size_t>(r)] != 0) others = true;
            }
            if (!others) {
                std::swap(cols[static_cast<size_t>(best)], cols[static_cast<size_t>(lead)]);
                if (track) std::swap((*track)[static_cast<size_t>(best)], (*track)[static_cast<size_t>(lead)]);
                ++lead;
                break;
            }
        }
    }
    return lead;
}

}  // namespace

int rational_rank(const CodeMatrix& m) {
    std::vector<std::vector<long long>> cols(static_cast<size_t>(m.cols),
                                             std::vector<long long>(static_cast<size_t>(m.rows), 0));
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < m.rows; ++r) cols[static_cast<size_t>(c)][static_cast<size_t>(r)] = m.at(r, c);
    return column_eliminate(cols, m.rows, nullptr);
}

bool ideal_is_zero(const Code& code) {
    if (code.zone_count() == 0) return true;
    CodeMatrix m = code_matrix(code);
    return rational_rank(m) == m.cols;
}

std::vector<std::vector<long long>> kernel_lattice_basis(const Code& code) {
    int m = code.zone_count();
    if (m == 0) return {};
    CodeMatrix a = code_matrix(code);
    std::vector<std::vector<long long>> cols(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(a.rows), 0));
    std::vector<std::vector<long long>> u(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0));
    for (int c = 0; c < m; ++c) {
        u[static_cast<size_t>(c)][static_cast<size_t>(c)] = 1;
        for (int r = 0; r < a.rows; ++r) cols[static_cast<size_t>(c)][static_cast<size_t>(r)] = a.at(r, c);
    }
    int lead = column_eliminate(cols, a.rows, &u);
    std::vector<std::vector<long long>> kernel;
    for (int c = lead; c < m; ++c) {
        bool zero = std::all_of(cols[static_cast<size_t>(c)].begin(), cols[static_cast<size_t>(c)].end(),
                                [](long long v) { return v == 0; });
        if (!zero) throw inconsistency_error("column elimination left a nonzero non-pivot column");
        kernel.push_back(u[static_cast<size_t>(c)]);
    }
    return kernel;
}

int default_degree_bound(const Code& code) { return 2 * std::max(code.max_weight(), 1) + 2; }

// ---------------------------------------------------------------------------
// fiber enumeration

namespace {

struct PackedKey {
    std::uint64_t lo, hi;
    bool operator==(const PackedKey& o) const { return lo == o.lo && hi == o.hi; }
    bool operator<(const PackedKey& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};

struct RawScan {
    std::vector<PackedKey> keys;        // one per monomial
    std::vector<std::uint32_t> data;    // arena: (var << 16) | exp
    std::vector<std::uint32_t> offsets; // offsets.size() == keys.size() + 1
};

enum class ScanBy { degree, image_weight };

// Enumerate all monomials with total degree (or image weight) <= bound,
// recording packed images. Image-weight scans see every fiber completely.
RawScan scan_monomials(const Code& code, int bound, ScanBy mode, const Budget& budget) {
    int n = code.n();
    int m = code.zone_count();
    if (n > 16) throw domain_error("fiber enumeration supports at most 16 neurons");
    if (bound > 250) throw domain_error("degree bound too large for packed images");

    RawScan out;
    out.offsets.push_back(0);
    std::vector<int> img(static_cast<size_t>(n), 0);
    std::vector<std::uint32_t> stack;
    std::uint64_t count = 0;

    auto record = [&]() {
        if (++count > budget.monomials)
            throw resource_error("monomial budget of " + std::to_string(budget.monomials) + " exhausted", true);
        PackedKey k{0, 0};
        for (int i = 0; i < n && i < 8; ++i) k.lo |= static_cast<std::uint64_t>(img[static_cast<size_t>(i)]) << (8 * i);
        for (int i = 8; i < n; ++i) k.hi |= static_cast<std::uint64_t>(img[static_cast<size_t>(i)]) << (8 * (i - 8));
        out.keys.push_back(k);
        out.data.insert(out.data.end(), stack.begin(), stack.end());
        out.offsets.push_back(static_cast<std::uint32_t>(out.data.size()));
    };

    // DFS over variables; at var v spend 0..remaining units of the bound,
    // where a unit is one degree step or one image-weight step.
    auto dfs = [&](auto&& self, int v, int remaining) -> void {
        if (v == m) {
            record();
            return;
        }
        self(self, v + 1, remaining);  // exponent 0
        Codeword w = code.zone_word(v);
        auto sup = support(w);
        int unit = mode == ScanBy::degree ? 1 : weight(w);
        int max_e = remaining / unit;
        stack.push_back(static_cast<std::uint32_t>(v) << 16);
        for (int e = 1; e <= max_e; ++e) {
            for (int i : sup) ++img[static_cast<size_t>(i - 1)];
            stack.back() = (static_cast<std::uint32_t>(v) << 16) | static_cast<std::uint32_t>(e);
            self(self, v + 1, remaining - e * unit);
        }
        for (int i : sup) img[static_cast<size_t>(i - 1)] -= max_e;
        stack.pop_back();
    };
    dfs(dfs, 0, bound);
    return out;
}

std::vector<int> unpack_key(PackedKey k, int n) {
    std::vector<int> img(static_cast<size_t>(n), 0);
    for (int i = 0; i < n && i < 8; ++i) img[static_cast<size_t>(i)] = static_cast<int>((k.lo >> (8 * i)) & 0xff);
    for (int i = 8; i < n; ++i) img[static_cast<size_t>(i)] = static_cast<int>((k.hi >> (8 * (i - 8))) & 0xff);
    return img;
}

Monomial monomial_from_arena(const RawScan& scan, std::uint32_t idx, std::uint32_t nvars) {
    std::vector<Monomial::Factor> f;
    for (std::uint32_t p = scan.offsets[idx]; p < scan.offsets[idx + 1]; ++p)
        f.push_back({scan.data[p] >> 16, scan.data[p] & 0xffffu});
    return Monomial(nvars, std::move(f));
}

}  // namespace

namespace {

std::vector<Fiber> group_fibers(const Code& code, const RawScan& scan, int complete_l1_bound) {
    int n = code.n();
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    std::vector<std::uint32_t> order(scan.keys.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return scan.keys[a] < scan.keys[b]; });

    MonomialOrder grev = MonomialOrder::grevlex(m);
    std::vector<Fiber> fibers;
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        while (j < order.size() && scan.keys[order[j]] == scan.keys[order[i]]) ++j;
        if (j - i >= 2) {
            Fiber f;
            f.image = unpack_key(scan.keys[order[i]], n);
            long long l1 = std::accumulate(f.image.begin(), f.image.end(), 0ll);
            f.complete = l1 <= complete_l1_bound;
            f.members.reserve(j - i);
            for (size_t k = i; k < j; ++k) f.members.push_back(monomial_from_arena(scan, order[k], m));
            std::sort(f.members.begin(), f.members.end(),
                      [&](const Monomial& a, const Monomial& b) { return grev.less(a, b); });
            fibers.push_back(std::move(f));
        }
        i = j;
    }
    std::sort(fibers.begin(), fibers.end(), [](const Fiber& a, const Fiber& b) {
        long long la = std::accumulate(a.image.begin(), a.image.end(), 0ll);
        long long lb = std::accumulate(b.image.begin(), b.image.end(), 0ll);
        if (la != lb) return la < lb;
        return a.image < b.image;
    });
    return fibers;
}

// Fibers with image weight <= bound; each is the entire fiber of its image,
// since a member's degree never exceeds its image weight.
std::vector<Fiber> complete_fibers_by_weight(const Code& code, int mu_bound, const Budget& budget) {
    if (mu_bound < 2) throw domain_error("fiber scan needs a bound of at least 2");
    if (code.zone_count() == 0) return {};
    RawScan scan = scan_monomials(code, mu_bound, ScanBy::image_weight, budget);
    return group_fibers(code, scan, mu_bound);
}

}  // namespace

std::vector<Fiber> fibers_up_to(const Code& code, int tdeg_bound, const Budget& budget) {
    if (tdeg_bound < 2) throw domain_error("fiber scan needs a degree bound of at least 2");
    if (code.zone_count() == 0) return {};
    RawScan scan = scan_monomials(code, tdeg_bound, ScanBy::degree, budget);
    return group_fibers(code, scan, tdeg_bound);
}

// ---------------------------------------------------------------------------
// generators

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

struct FiberAnalysis {
    std::vector<Fiber> fibers;
    std::vector<int> pre_components;  // components before this fiber's spanning binomials
    std::vector<Binomial> generators;
    int max_gen_level = 0;
    int max_gen_degree = 0;
    bool stable = false;
    bool certified = false;
};

FiberAnalysis analyze_fibers(const Code& code, int tdeg_bound, const Budget& budget) {
    FiberAnalysis out;
    out.fibers = complete_fibers_by_weight(code, tdeg_bound, budget);
    out.pre_components.reserve(out.fibers.size());

    for (Fiber& f : out.fibers) {
        std::unordered_map<Monomial, int, MonomialHash> index;
        index.reserve(f.members.size() * 2);
        for (size_t k = 0; k < f.members.size(); ++k) index.emplace(f.members[k], static_cast<int>(k));

        UnionFind uf(f.members.size());
        for (size_t k = 0; k < f.members.size(); ++k) {
            for (const Binomial& g : out.generators) {
                if (!divides(g.plus, f.members[k])) continue;
                Monomial partner = mul(div(f.members[k], g.plus), g.minus);
                auto it = index.find(partner);
                if (it == index.end()) throw inconsistency_error("fiber move left the fiber");
                uf.unite(static_cast<int>(k), it->second);
            }
        }
        std::vector<int> reps;
        for (size_t k = 0; k < f.members.size(); ++k)
            if (uf.find(static_cast<int>(k)) == static_cast<int>(k)) reps.push_back(static_cast<int>(k));
        out.pre_components.push_back(static_cast<int>(reps.size()));
        if (reps.size() > 1) {
            long long level = std::accumulate(f.image.begin(), f.image.end(), 0ll);
            for (size_t r = 1; r < reps.size(); ++r) {
                Binomial g = sign_normalized(
                    code, make_binomial(code, f.members[static_cast<size_t>(reps[r])], f.members[static_cast<size_t>(reps[0])]));
                out.max_gen_degree = std::max(out.max_gen_degree, g.degree());
                out.max_gen_level = std::max<int>(out.max_gen_level, static_cast<int>(level));
                out.generators.push_back(std::move(g));
                uf.unite(reps[0], reps[static_cast<size_t>(r)]);
            }
        }
    }

    out.stable = out.generators.empty() || out.max_gen_level <= tdeg_bound - 2;

    // Cross-validate the stability window with Buchberger reduction: in every
    // scanned fiber above the last generator level, all members must share
    // one normal form modulo the generators.
    out.certified = out.stable;
    if (out.stable && !out.generators.empty()) {
        MonomialOrder grev = MonomialOrder::grevlex(static_cast<std::uint32_t>(code.zone_count()));
        GroebnerBasis gb = buchberger(code, out.generators, grev, budget);
        for (size_t fi = 0; fi < out.fibers.size() && out.certified; ++fi) {
            const Fiber& f = out.fibers[fi];
            long long level = std::accumulate(f.image.begin(), f.image.end(), 0ll);
            if (level <= out.max_gen_level) continue;
            Monomial nf0 = normal_form(code, f.members[0], gb.elements, grev);
            for (size_t k = 1; k < f.members.size(); ++k)
                if (normal_form(code, f.members[k], gb.elements, grev) != nf0) {
                    out.certified = false;
                    break;
                }
        }
        if (out.stable && !out.certified)
            throw inconsistency_error("fiber connectivity and Buchberger reduction disagree");
    }
    return out;
}

GeneratorReport bounded_generators(const Code& code, int tdeg_bound, const Budget& budget) {
    GeneratorReport rep;
    rep.method = GenMethod::bounded;
    rep.tdeg_bound = tdeg_bound;
    if (code.zone_count() == 0) {
        rep.complete = true;
        return rep;
    }
    FiberAnalysis fa = analyze_fibers(code, tdeg_bound, budget);
    rep.generators = canonical_set(code, fa.generators);
    rep.complete = fa.certified;
    rep.max_generator_degree = fa.max_gen_degree;
    return rep;
}

Binomial binomial_from_kernel_vector(const Code& code, const std::vector<long long>& k) {
    std::uint32_t m = static_cast<std::uint32_t>(k.size());
    std::vector<Monomial::Factor> plus, minus;
    for (std::uint32_t v = 0; v < m; ++v) {
        if (k[v] > 0) plus.push_back({v, static_cast<std::uint32_t>(k[v])});
        if (k[v] < 0) minus.push_back({v, static_cast<std::uint32_t>(-k[v])});
    }
    return make_binomial(code, Monomial(m, std::move(plus)), Monomial(m, std::move(minus)));
}

GeneratorReport saturation_generators(const Code& code, const Budget& budget) {
    GeneratorReport rep;
    rep.method = GenMethod::saturation;
    rep.tdeg_bound = -1;
    rep.complete = true;
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    if (m == 0) return rep;
    auto kernel = kernel_lattice_basis(code);
    if (kernel.empty()) return rep;

    std::vector<Binomial> gens;
    gens.reserve(kernel.size());
    for (const auto& k : kernel) gens.push_back(binomial_from_kernel_vector(code, k));

    std::vector<long long> degs;
    degs.reserve(m);
    for (std::uint32_t v = 0; v < m; ++v) degs.push_back(weight(code.zone_word(static_cast<int>(v))));

    for (std::uint32_t i = 0; i < m; ++i) {
        MonomialOrder order = MonomialOrder::sat_revlex(degs, i);
        GroebnerBasis gb = reduce_basis(code, buchberger(code, std::move(gens), order, budget));
        gens.clear();
        for (const Binomial& g : gb.elements) {
            std::uint32_t k = std::min(g.plus.exponent(i), g.minus.exponent(i));
            if (k == 0) {
                gens.push_back(g);
                continue;
            }
            Monomial tik = Monomial::variable(m, i, k);
            gens.push_back(make_binomial(code, div(g.plus, tik), div(g.minus, tik)));
        }
    }
    for (Binomial& g : gens) {
        int d = g.degree();
        rep.max_generator_degree = std::max(rep.max_generator_degree, d);
    }
    rep.generators = canonical_set(code, std::move(gens));
    return rep;
}

}  // namespace

GeneratorReport toric_generators(const Code& code, GenMethod method, int tdeg_bound, const Budget& budget) {
    if (method == GenMethod::saturation) return saturation_generators(code, budget);
    if (tdeg_bound < 0) tdeg_bound = default_degree_bound(code);
    return bounded_generators(code, tdeg_bound, budget);
}

// ---------------------------------------------------------------------------
// primitivity and the Graver basis

namespace {

void divisors(const Monomial& m, std::vector<Monomial>& out) {
    std::vector<Monomial::Factor> cur;
    auto dfs = [&](auto&& self, size_t idx) -> void {
        if (idx == m.factors().size()) {
            out.push_back(Monomial(m.nvars(), cur));
            return;
        }
        auto [v, e] = m.factors()[idx];
        for (std::uint32_t k = 0; k <= e; ++k) {
            if (k > 0) cur.push_back({v, k});
            self(self, idx + 1);
            if (k > 0) cur.pop_back();
        }
    };
    dfs(dfs, 0);
}

struct ImageKeyHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

bool is_primitive(const Code& code, const Binomial& b) {
    std::vector<Monomial> du, dv;
    divisors(b.plus, du);
    divisors(b.minus, dv);
    std::unordered_map<std::vector<int>, std::vector<const Monomial*>, ImageKeyHash> by_image;
    by_image.reserve(du.size() * 2);
    for (const Monomial& u : du) by_image[image(code, u)].push_back(&u);
    for (const Monomial& v : dv) {
        auto it = by_image.find(image(code, v));
        if (it == by_image.end()) continue;
        for (const Monomial* u : it->second) {
            if (*u == v) continue;
            if (*u == b.plus && v == b.minus) continue;
            return false;
        }
    }
    return true;
}

GraverReport graver_basis(const Code& code, int tdeg_bound, const Budget& budget) {
    if (tdeg_bound < 0) tdeg_bound = default_degree_bound(code);
    GraverReport rep;
    rep.tdeg_bound = tdeg_bound;
    if (code.zone_count() == 0 || ideal_is_zero(code)) {
        rep.exact = true;
        return rep;
    }

    std::vector<Fiber> fibers = fibers_up_to(code, tdeg_bound, budget);

    // candidates: support-disjoint pairs inside one fiber, i.e. conformal
    // representatives of kernel vectors with both term degrees <= bound
    std::vector<Binomial> cands;
    std::uint64_t pair_tests = 0, survivors = 0;
    const std::uint64_t pair_test_ceiling = budget.monomials * 200;
    for (const Fiber& f : fibers) {
        std::vector<std::uint64_t> masks(f.members.size(), 0);
        for (size_t k = 0; k < f.members.size(); ++k)
            for (const auto& [v, e] : f.members[k].factors()) masks[k] |= 1ull << (v % 64);
        for (size_t a = 0; a < f.members.size(); ++a)
            for (size_t b = a + 1; b < f.members.size(); ++b) {
                if (++pair_tests > pair_test_ceiling)
                    throw resource_error("fiber pair budget exhausted in Graver scan", true);
                if ((masks[a] & masks[b]) != 0 && code.zone_count() <= 64) continue;
                if (!coprime(f.members[a], f.members[b])) continue;
                if (++survivors > budget.monomials)
                    throw resource_error("candidate budget exhausted in Graver scan", true);
                cands.push_back(sign_normalized(code, Binomial{f.members[b], f.members[a]}));
            }
    }
    cands = canonical_set(code, std::move(cands));

    // keep the conformally minimal candidates; a dominating kernel vector has
    // strictly smaller total degree and is itself a candidate
    std::stable_sort(cands.begin(), cands.end(), [](const Binomial& x, const Binomial& y) {
        return x.plus.degree() + x.minus.degree() < y.plus.degree() + y.minus.degree();
    });
    std::vector<Binomial> kept;
    for (const Binomial& g : cands) {
        bool dominated = false;
        for (const Binomial& h : kept) {
            if (h.plus.degree() + h.minus.degree() >= g.plus.degree() + g.minus.degree()) break;
            if ((divides(h.plus, g.plus) && divides(h.minus, g.minus)) ||
                (divides(h.minus, g.plus) && divides(h.plus, g.minus))) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(g);
    }
    rep.elements = canonical_set(code, std::move(kept));

    if (auto n = recognize_internal(code)) {
        GeneratorReport gens = toric_generators(code, GenMethod::bounded, tdeg_bound, budget);
        if (!same_binomial_set(code, rep.elements, gens.generators))
            throw inconsistency_error("Lawrence-type code: Graver scan disagrees with the minimal generating set");
        (void)n;
        rep.exact = true;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Lawrence machinery

std::vector<std::vector<int>> lawrence_lift(const std::vector<std::vector<int>>& a) {
    size_t k = a.size();
    size_t n = k == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != n) throw domain_error("ragged matrix");
    std::vector<std::vector<int>> out(k + n, std::vector<int>(2 * n, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = a[i][j];
    for (size_t j = 0; j < n; ++j) {
        out[k + j][j] = 1;
        out[k + j][n + j] = 1;
    }
    return out;
}

namespace {

long long det_bareiss(std::vector<std::vector<long long>> a) {
    size_t n = a.size();
    long long prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

}  // namespace

LawrenceWitness verify_lawrence_row_equivalence(int n) {
    if (n < 3) throw domain_error("Lawrence verification requires n >= 3");
    LawrenceWitness w;
    w.n = n;

    Code code = internal_code(n);
    CodeMatrix m = code_matrix(code);

    // rows: r_1 = e_1, r_i = e_i - e_{i+1} for 2 <= i <= n-1, r_n = e_n
    w.transform.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    w.transform[0][0] = 1;
    for (int i = 2; i <= n - 1; ++i) {
        w.transform[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = 1;
        w.transform[static_cast<size_t>(i - 1)][static_cast<size_t>(i)] = -1;
    }
    w.transform[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] = 1;

    w.lifted = lawrence_lift({std::vector<int>(static_cast<size_t>(n - 1), 1)});

    // zone {1} u {2..j} -> lifted column j-2; zone {2..j} -> (n-1) + (j-2)
    w.column_map.assign(static_cast<size_t>(m.cols), -1);
    for (int c = 0; c < m.cols; ++c) {
        Codeword z = code.zone_word(c);
        auto sup = support(z);
        int j = sup.back();
        bool has_one = (z & 1u) != 0;
        w.column_map[static_cast<size_t>(c)] = has_one ? (j - 2) : (n - 1) + (j - 2);
    }

    std::vector<std::vector<long long>> t64(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t64[static_cast<size_t>(i)][static_cast<size_t>(j)] = w.transform[static_cast<size_t>(i)][static_cast<size_t>(j)];
    long long det = det_bareiss(t64);
    if (det != 1 && det != -1) {
        w.ok = false;
        w.note = "transform is not unimodular (det " + std::to_string(det) + ")";
        return w;
    }

    for (int c = 0; c < m.cols; ++c) {
        int target = w.column_map[static_cast<size_t>(c)];
        for (int r = 0; r < n; ++r) {
            long long acc = 0;
            for (int i = 0; i < n; ++i) acc += static_cast<long long>(w.transform[static_cast<size_t>(r)][static_cast<size_t>(i)]) * m.at(i, c);
            if (acc != w.lifted[static_cast<size_t>(r)][static_cast<size_t>(target)]) {
                w.ok = false;
                w.note = "transformed column " + std::to_string(c) + " does not match the lifting";
                return w;
            }
        }
    }
    w.ok = true;
    w.note = "rows r_1=e_1, r_i=e_i-e_{i+1} (2<=i<=n-1), r_n=e_n carry the code matrix onto the Lawrence lifting of the 1x" +
             std::to_string(n - 1) + " all-ones matrix";
    return w;
}

std::optional<int> recognize_internal(const Code& code) {
    int n = code.n();
    if (n < 2) return std::nullopt;
    Code ref = internal_code(n);
    if (ref.words() == code.words() && ref.contains_zero() == code.contains_zero()) return n;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// indispensable binomials

std::vector<Binomial> indispensable_binomials(const Code& code, int tdeg_bound, const Budget& budget) {
    if (tdeg_bound < 0) tdeg_bound = default_degree_bound(code);
    if (code.zone_count() == 0) return {};
    FiberAnalysis fa = analyze_fibers(code, tdeg_bound, budget);
    if (!fa.certified)
        throw resource_error("degree bound " + std::to_string(tdeg_bound) + " too small to certify the generator scan",
                             true);
    std::vector<Binomial> out;
    for (size_t i = 0; i < fa.fibers.size(); ++i) {
        const Fiber& f = fa.fibers[i];
        if (f.members.size() == 2 && fa.pre_components[i] == 2) {
            if (!coprime(f.members[0], f.members[1]))
                throw inconsistency_error("two-member disconnected fiber with a common factor");
            out.push_back(sign_normalized(code, Binomial{f.members[1], f.members[0]}));
        }
    }
    out = canonical_set(code, std::move(out));

    if (code.zone_count() <= 6) {
        std::vector<Binomial> oracle = indispensable_binomials_bruteforce(code, tdeg_bound, budget);
        if (!same_binomial_set(code, out, oracle))
            throw inconsistency_error("fiber indispensability disagrees with the generating-set oracle");
    }
    return out;
}

std::vector<Binomial> indispensable_binomials_bruteforce(const Code& code, int tdeg_bound, const Budget& budget) {
    if (code.zone_count() > 6) throw domain_error("the generating-set oracle is limited to 6 zone variables");
    if (tdeg_bound < 0) tdeg_bound = default_degree_bound(code);
    if (code.zone_count() == 0) return {};

    MonomialOrder grev = MonomialOrder::grevlex(static_cast<std::uint32_t>(code.zone_count()));
    GeneratorReport sat = toric_generators(code, GenMethod::saturation, -1, budget);
    std::vector<Binomial> minimal = sat.generators;

    // prune to an inclusion-minimal generating set
    for (bool removed = true; removed;) {
        removed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Binomial> rest;
            rest.reserve(minimal.size() - 1);
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) rest.push_back(minimal[j]);
            GroebnerBasis gb = buchberger(code, rest, grev, budget);
            if (reduces_to_zero(code, minimal[i], gb)) {
                minimal = std::move(rest);
                removed = true;
                break;
            }
        }
    }

    // candidate pool: every binomial between members of a complete fiber
    std::vector<Binomial> candidates;
    for (const Fiber& f : complete_fibers_by_weight(code, tdeg_bound, budget))
        for (size_t a = 0; a < f.members.size(); ++a)
            for (size_t b = a + 1; b < f.members.size(); ++b)
                candidates.push_back(sign_normalized(code, Binomial{f.members[b], f.members[a]}));
    candidates = canonical_set(code, std::move(candidates));

    std::vector<Binomial> out;
    for (const Binomial& g : minimal) {
        Binomial gn = sign_normalized(code, g);
        std::vector<Binomial> without;
        without.reserve(candidates.size());
        for (const Binomial& c : candidates)
            if (c != gn) without.push_back(c);
        GroebnerBasis gb = buchberger(code, without, grev, budget);
        bool generates = true;
        for (const Binomial& h : minimal)
            if (!reduces_to_zero(code, h, gb)) {
                generates = false;
                break;
            }
        if (!generates) out.push_back(gn);
    }
    return canonical_set(code, std::move(out));
}

// ---------------------------------------------------------------------------
// universal bases

UgbResult universal_gb(const Code& code, int order_family_size, int tdeg_bound, std::uint64_t seed,
                       const Budget& budget) {
    if (tdeg_bound < 0) tdeg_bound = default_degree_bound(code);
    UgbResult res;
    res.tdeg_bound = tdeg_bound;

    if (code.zone_count() == 0 || ideal_is_zero(code)) {
        res.exact = true;
        res.closed = true;
        return res;
    }

    if (auto n = recognize_internal(code)) {
        if (*n >= 3 && verify_lawrence_row_equivalence(*n).ok) {
            GraverReport graver = graver_basis(code, tdeg_bound, budget);
            res.exact = graver.exact;
            res.closed = true;
            res.elements = graver.elements;
            res.orders_used.push_back("(lawrence-type: graver = universal)");
            if (res.exact) return res;
        }
    }

    res.exact = false;
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    GeneratorReport gens = toric_generators(code, GenMethod::bounded, tdeg_bound, budget);
    if (!gens.complete)
        throw resource_error("generator scan not certified complete; raise the degree bound", true);

    std::vector<Binomial> lower;
    auto add_reduced = [&](MonomialOrder order, const std::string& name) {
        GroebnerBasis gb = reduce_basis(code, buchberger(code, gens.generators, order, budget));
        for (const Binomial& b : gb.elements) lower.push_back(b);
        res.orders_used.push_back(name);
    };

    add_reduced(MonomialOrder::grevlex(m), "grevlex");
    add_reduced(MonomialOrder::lex(m), "lex");
    add_reduced(weight_minus_one_order(code), "weight:(zone weight - 1):grevlex");

    std::mt19937_64 rng(seed);
    for (int i = 0; i < order_family_size; ++i) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::vector<Rational> w;
            w.reserve(m);
            for (std::uint32_t v = 0; v < m; ++v) w.push_back(Rational(static_cast<long long>(rng() % (2 * m + 1))));
            MonomialOrder order = MonomialOrder::weight(w, MonomialOrder::grevlex(m));
            GroebnerBasis gb = reduce_basis(code, buchberger(code, gens.generators, order, budget));
            // reject draws whose leading-term selection fell through to the
            // tiebreak; resample for a generic vector
            bool tie = false;
            std::vector<long long> wi;
            wi.reserve(m);
            for (const Rational& r : w) wi.push_back(r.num);
            for (const Binomial& b : gb.elements) {
                long long wp = 0, wm = 0;
                for (const auto& [v, e] : b.plus.factors()) wp += wi[v] * e;
                for (const auto& [v, e] : b.minus.factors()) wm += wi[v] * e;
                if (wp == wm) {
                    tie = true;
                    break;
                }
            }
            if (tie && attempt + 1 < 32) continue;
            for (const Binomial& b : gb.elements) lower.push_back(b);
            res.orders_used.push_back("random-" + std::to_string(i));
            break;
        }
    }

    res.elements = canonical_set(code, std::move(lower));
    GraverReport graver = graver_basis(code, tdeg_bound, budget);
    res.upper = graver.elements;

    for (const Binomial& b : res.elements) {
        bool in_upper = std::binary_search(res.upper.begin(), res.upper.end(), b, binomial_canonical_less);
        if (!in_upper)
            throw resource_error("a reduced-basis element escapes the Graver scan; raise the degree bound", true);
    }
    res.closed = res.elements == res.upper;
    return res;
}

std::vector<Binomial> all_quadratic_binomials(const Code& code) {
    std::vector<Binomial> out;
    if (code.zone_count() == 0) return out;
    for (const Fiber& f : fibers_up_to(code, 2)) {
        for (size_t a = 0; a < f.members.size(); ++a) {
            if (f.members[a].degree() != 2) continue;
            for (size_t b = a + 1; b < f.members.size(); ++b) {
                if (f.members[b].degree() != 2) continue;
                out.push_back(sign_normalized(code, Binomial{f.members[b], f.members[a]}));
            }
        }
    }
    return canonical_set(code, std::move(out));
}

std::vector<Binomial> pairwise_sum_binomials(const Code& code) {
    std::vector<Binomial> out;
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    for (int i = 0; i < code.n(); ++i) {
        int vi = code.zone_index(Codeword{1} << i);
        if (vi < 0) continue;
        for (int j = i + 1; j < code.n(); ++j) {
            int vj = code.zone_index(Codeword{1} << j);
            if (vj < 0) continue;
            int vk = code.zone_index((Codeword{1} << i) | (Codeword{1} << j));
            if (vk < 0) continue;
            Monomial prod = mul(Monomial::variable(m, static_cast<std::uint32_t>(vi)),
                                Monomial::variable(m, static_cast<std::uint32_t>(vj)));
            out.push_back(make_binomial(code, std::move(prod), Monomial::variable(m, static_cast<std::uint32_t>(vk))));
        }
    }
    return canonical_set(code, std::move(out));
}

}  // namespace toricode
