#include "toricode/graphs.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace toricode {

int WeightedDualGraph::vertex_index(Codeword w) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == w) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<int>> WeightedDualGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [a, b] : edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

WeightedDualGraph dual_graph(const Code& code) {
    WeightedDualGraph g;
    g.n = code.n();
    g.vertices.push_back(0);  // the all-zero word is always a vertex
    for (Codeword w : code.zone_words()) g.vertices.push_back(w);
    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = i + 1; j < g.vertices.size(); ++j) {
            // zero participates in edges only when it belongs to the code
            if (g.vertices[i] == 0 && !code.contains_zero()) continue;
            if (weight(g.vertices[i] ^ g.vertices[j]) == 1) g.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return g;
}

void write_edge_list(const WeightedDualGraph& g, std::ostream& out) {
    for (Codeword w : g.vertices) out << "v " << bit_string(w, g.n) << ' ' << weight(w) << '\n';
    for (auto [a, b] : g.edges)
        out << "e " << bit_string(g.vertices[static_cast<size_t>(a)], g.n) << ' '
            << bit_string(g.vertices[static_cast<size_t>(b)], g.n) << '\n';
}

// ---------------------------------------------------------------------------
// pattern library

namespace {

PatternGraph make_pattern(int id, int local_neurons, std::vector<Codeword> vertices,
                          std::vector<std::pair<int, int>> edges, std::vector<int> plus, std::vector<int> minus,
                          std::vector<std::vector<Codeword>> clauses, bool shared) {
    PatternGraph p;
    p.id = id;
    p.local_neurons = local_neurons;
    p.vertices = std::move(vertices);
    p.edges = std::move(edges);
    p.binomial_plus = std::move(plus);
    p.binomial_minus = std::move(minus);
    p.absent_clauses = std::move(clauses);
    p.shared_binomial_text = shared;
    return p;
}

std::vector<PatternGraph> build_library() {
    std::vector<PatternGraph> lib;

    // 1: lozenge. t{1}t{2} - t{1,2}; a single crossing pair.
    lib.push_back(make_pattern(1, 2, {0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {1, 2}, {3}, {}, false));

    // 2: domino. t{2}t{1,3} - t{1,2,3}; curve 3 inside curve 1, pierced by 2.
    lib.push_back(make_pattern(2, 3, {0, 1, 2, 3, 5, 7},
                               {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 5}}, {2, 4}, {5},
                               {{4}, {6}}, false));

    // 3: lollipop. t{1,2}t{1,3} - t{1}t{1,2,3}; curves 2,3 crossing inside 1.
    lib.push_back(make_pattern(3, 3, {0, 1, 3, 5, 7}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}, {2, 3}, {1, 4},
                               {{2}, {4}, {6}}, false));

    // 4-6: flower. t{1,2,3}t{1,4} - t{1,2}t{1,3,4} and its relabelings;
    // curves 2,3,4 inside 1 with one curve crossing the other two.
    lib.push_back(make_pattern(4, 4, {0, 1, 3, 5, 9, 7, 13},
                               {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 6}}, {5, 4}, {2, 6},
                               {{2}, {4}, {8}, {6}, {10}, {12}, {14}, {11}, {15}}, true));
    lib.push_back(make_pattern(5, 4, {0, 1, 3, 5, 9, 7, 11},
                               {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {2, 6}, {4, 6}}, {5, 4}, {6, 3},
                               {{2}, {4}, {8}, {6}, {10}, {12}, {14}, {13}, {15}}, true));
    lib.push_back(make_pattern(6, 4, {0, 1, 3, 5, 9, 11, 13},
                               {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {4, 5}, {3, 6}, {4, 6}}, {5, 3}, {6, 2},
                               {{2}, {4}, {8}, {6}, {10}, {12}, {14}, {7}, {15}}, true));
    return lib;
}

}  // namespace

const std::vector<PatternGraph>& pattern_library() {
    static const std::vector<PatternGraph> lib = build_library();
    return lib;
}

PatternGraph parse_pattern(std::istream& in) {
    PatternGraph p;
    std::string line;
    std::map<std::string, int> vertex_of;
    auto local_word = [&](const std::string& tok) -> Codeword {
        if (tok == "0") return 0;
        return codeword_from_support_string(tok, p.local_neurons);
    };
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::stringstream ss(line);
        std::string kind;
        if (!(ss >> kind)) continue;
        if (kind == "pattern") {
            ss >> p.id >> p.local_neurons;
            std::string flag;
            if (ss >> flag && flag == "shared-binomial-text") p.shared_binomial_text = true;
        } else if (kind == "v") {
            std::string tok;
            ss >> tok;
            vertex_of[tok] = static_cast<int>(p.vertices.size());
            p.vertices.push_back(local_word(tok));
        } else if (kind == "e") {
            std::string a, b;
            ss >> a >> b;
            if (!vertex_of.count(a) || !vertex_of.count(b)) throw format_error("pattern edge uses unknown vertex");
            p.edges.push_back({vertex_of[a], vertex_of[b]});
        } else if (kind == "plus" || kind == "minus") {
            std::string tok;
            auto& side = kind == "plus" ? p.binomial_plus : p.binomial_minus;
            while (ss >> tok) {
                if (!vertex_of.count(tok)) throw format_error("pattern binomial uses unknown vertex");
                side.push_back(vertex_of[tok]);
            }
        } else if (kind == "absent") {
            std::vector<Codeword> clause;
            std::string tok;
            while (ss >> tok) clause.push_back(local_word(tok));
            if (clause.empty()) throw format_error("empty absence clause");
            p.absent_clauses.push_back(std::move(clause));
        } else {
            throw format_error("unknown pattern line kind '" + kind + "'");
        }
    }
    if (p.vertices.empty()) throw format_error("pattern has no vertices");
    return p;
}

PatternGraph parse_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open pattern file '" + path + "'");
    return parse_pattern(in);
}

void write_pattern(const PatternGraph& p, std::ostream& out) {
    auto name = [&](Codeword w) { return w == 0 ? std::string("0") : support_string(w); };
    out << "pattern " << p.id << ' ' << p.local_neurons;
    if (p.shared_binomial_text) out << " shared-binomial-text";
    out << '\n';
    for (Codeword w : p.vertices) out << "v " << name(w) << '\n';
    for (auto [a, b] : p.edges)
        out << "e " << name(p.vertices[static_cast<size_t>(a)]) << ' ' << name(p.vertices[static_cast<size_t>(b)]) << '\n';
    out << "plus";
    for (int v : p.binomial_plus) out << ' ' << name(p.vertices[static_cast<size_t>(v)]);
    out << "\nminus";
    for (int v : p.binomial_minus) out << ' ' << name(p.vertices[static_cast<size_t>(v)]);
    out << '\n';
    for (const auto& clause : p.absent_clauses) {
        out << "absent";
        for (Codeword w : clause) out << ' ' << name(w);
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// embeddings

std::vector<Embedding> find_embeddings(const PatternGraph& pattern, const WeightedDualGraph& g) {
    size_t k = pattern.vertices.size();
    std::vector<Embedding> out;

    // assign pattern vertices in weight order; candidates bucketed by weight
    std::vector<int> order(k);
    for (size_t i = 0; i < k; ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return weight(pattern.vertices[static_cast<size_t>(a)]) < weight(pattern.vertices[static_cast<size_t>(b)]);
    });

    std::set<std::pair<int, int>> target_edges(g.edges.begin(), g.edges.end());
    auto has_edge = [&](int a, int b) {
        return target_edges.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    std::vector<int> assigned(k, -1);  // pattern vertex -> target vertex index
    std::vector<char> used(g.vertices.size(), 0);

    auto dfs = [&](auto&& self, size_t pos) -> void {
        if (pos == k) {
            Embedding e(k);
            for (size_t i = 0; i < k; ++i) e[i] = g.vertices[static_cast<size_t>(assigned[i])];
            out.push_back(std::move(e));
            return;
        }
        int pv = order[pos];
        int want = weight(pattern.vertices[static_cast<size_t>(pv)]);
        for (size_t t = 0; t < g.vertices.size(); ++t) {
            if (used[t] || weight(g.vertices[t]) != want) continue;
            bool ok = true;
            for (auto [a, b] : pattern.edges) {
                int other = -1;
                if (a == pv) other = b;
                if (b == pv) other = a;
                if (other < 0 || assigned[static_cast<size_t>(other)] < 0) continue;
                if (!has_edge(static_cast<int>(t), assigned[static_cast<size_t>(other)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assigned[static_cast<size_t>(pv)] = static_cast<int>(t);
            used[t] = 1;
            self(self, pos + 1);
            used[t] = 0;
            assigned[static_cast<size_t>(pv)] = -1;
        }
    };
    dfs(dfs, 0);
    return out;
}

std::vector<int> embedding_neuron_map(const PatternGraph& pattern, const Embedding& embedding) {
    std::vector<int> sigma(static_cast<size_t>(pattern.local_neurons) + 1, 0);  // 1-based, 0 = unknown
    std::vector<int> order(pattern.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return weight(pattern.vertices[static_cast<size_t>(a)]) < weight(pattern.vertices[static_cast<size_t>(b)]);
    });
    for (int vi : order) {
        Codeword local = pattern.vertices[static_cast<size_t>(vi)];
        Codeword target = embedding[static_cast<size_t>(vi)];
        std::vector<int> unknown;
        Codeword remaining = target;
        for (int i : support(local)) {
            if (sigma[static_cast<size_t>(i)] == 0) {
                unknown.push_back(i);
            } else {
                Codeword bit = Codeword{1} << (sigma[static_cast<size_t>(i)] - 1);
                if (!(remaining & bit)) throw inconsistency_error("embedding image contradicts the neuron relabeling");
                remaining &= ~bit;
            }
        }
        if (unknown.size() != static_cast<size_t>(weight(remaining)))
            throw inconsistency_error("embedding image contradicts the neuron relabeling");
        if (unknown.size() > 1) throw inconsistency_error("pattern vertex introduces more than one new curve");
        if (unknown.size() == 1) sigma[static_cast<size_t>(unknown[0])] = support(remaining)[0];
    }
    return sigma;
}

Binomial induced_binomial(const Code& code, const PatternGraph& pattern, const Embedding& embedding) {
    std::uint32_t m = static_cast<std::uint32_t>(code.zone_count());
    auto to_monomial = [&](const std::vector<int>& side) {
        Monomial acc(m);
        for (int vi : side) {
            Codeword w = embedding[static_cast<size_t>(vi)];
            int var = code.zone_index(w);
            if (var < 0) throw inconsistency_error("embedding image is not a codeword");
            acc = mul(acc, Monomial::variable(m, static_cast<std::uint32_t>(var)));
        }
        return acc;
    };
    Monomial plus = to_monomial(pattern.binomial_plus);
    Monomial minus = to_monomial(pattern.binomial_minus);
    if (!is_kernel_pair(code, plus, minus))
        throw inconsistency_error("pattern binomial image violates the fiber condition");
    return sign_normalized(code, make_binomial(code, std::move(plus), std::move(minus)));
}

bool embedding_side_conditions_hold(const Code& code, const PatternGraph& pattern, const Embedding& embedding) {
    if (pattern.absent_clauses.empty()) return true;
    std::vector<int> sigma = embedding_neuron_map(pattern, embedding);
    for (const auto& clause : pattern.absent_clauses) {
        bool all_present = true;
        for (Codeword local : clause) {
            Codeword target = 0;
            for (int i : support(local)) {
                if (sigma[static_cast<size_t>(i)] == 0) throw inconsistency_error("clause uses an unmapped curve");
                target |= Codeword{1} << (sigma[static_cast<size_t>(i)] - 1);
            }
            if (!code.contains(target)) {
                all_present = false;
                break;
            }
        }
        if (all_present) return false;
    }
    return true;
}

std::vector<Binomial> depth1_indispensables(const Code& code) {
    WeightedDualGraph g = dual_graph(code);
    std::vector<Binomial> out;
    for (const PatternGraph& p : pattern_library())
        for (const Embedding& e : find_embeddings(p, g))
            if (embedding_side_conditions_hold(code, p, e)) out.push_back(induced_binomial(code, p, e));
    return canonical_set(code, std::move(out));
}

// ---------------------------------------------------------------------------
// the neuron graph

DeltaGraph delta_graph(const Code& code) {
    DeltaGraph g;
    g.k = code.n();
    for (int i = 1; i <= g.k; ++i)
        for (int j = i + 1; j <= g.k; ++j) {
            Codeword w = (Codeword{1} << (i - 1)) | (Codeword{1} << (j - 1));
            if (code.zone_index(w) >= 0) g.edges.push_back({i, j});
        }
    return g;
}

std::vector<int> DeltaGraph::degrees() const {
    std::vector<int> d(static_cast<size_t>(k) + 1, 0);
    for (auto [a, b] : edges) {
        ++d[static_cast<size_t>(a)];
        ++d[static_cast<size_t>(b)];
    }
    return d;
}

bool DeltaGraph::is_tree() const {
    if (static_cast<int>(edges.size()) != k - 1) return false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(k) + 1);
    for (auto [a, b] : edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return count == k;
}

long long expected_quadratic_count(const DeltaGraph& g) {
    if (static_cast<int>(g.edges.size()) != g.k - 1)
        throw domain_error("neuron graph is not a tree: edge count " + std::to_string(g.edges.size()) +
                           " differs from vertex count minus one");
    if (!g.is_tree()) throw domain_error("neuron graph is not a tree: it is disconnected");
    long long total = 0;
    auto d = g.degrees();
    for (int v = 1; v <= g.k; ++v) total += static_cast<long long>(d[static_cast<size_t>(v)]) * (d[static_cast<size_t>(v)] - 1) / 2;
    return total;
}

std::vector<std::array<int, 3>> distance_two_partners(const DeltaGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.k) + 1);
    for (auto [a, b] : g.edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    std::vector<std::array<int, 3>> out;
    for (int mid = 1; mid <= g.k; ++mid) {
        const auto& nb = adj[static_cast<size_t>(mid)];
        for (size_t x = 0; x < nb.size(); ++x)
            for (size_t y = x + 1; y < nb.size(); ++y) out.push_back({nb[x], mid, nb[y]});
    }
    std::sort(out.begin(), out.end(), [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        if (a[2] != b[2]) return a[2] < b[2];
        return a[1] < b[1];
    });
    return out;
}

}  // namespace toricode
