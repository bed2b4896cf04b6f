#include "toricode/corpus.hpp"

#include <random>

namespace toricode {
namespace corpus {

namespace {

Code from_words(int n, std::vector<Codeword> words) { return Code(n, std::move(words)); }

}  // namespace

Code venn2() { return parse_code({"00", "10", "01", "11"}); }

Code venn3() {
    return parse_code({"000", "100", "010", "001", "110", "101", "011", "111"});
}

Code venn3_hollow() { return parse_code({"000", "100", "010", "001", "110", "101", "011"}); }

Code nested_pierced() { return parse_code({"000", "100", "001", "110", "101", "111"}); }

Code lollipop3() { return parse_code({"000", "100", "110", "101", "111"}); }

Code stacked3() { return parse_code({"000", "100", "010", "110", "101", "111"}); }

Code petal_chain4() { return parse_code({"0000", "1000", "1100", "1010", "1001", "1110", "1011"}); }

Code petal_fan4() { return parse_code({"0000", "1000", "1100", "1010", "1001", "1110", "1101"}); }

Code tree_code(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Codeword> words{0};
    for (int i = 1; i <= n; ++i) words.push_back(Codeword{1} << (i - 1));
    for (auto [a, b] : edges) words.push_back((Codeword{1} << (a - 1)) | (Codeword{1} << (b - 1)));
    return from_words(n, std::move(words));
}

Code path_code(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return tree_code(n, edges);
}

Code star_code(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 2; j <= n; ++j) edges.push_back({1, j});
    return tree_code(n, edges);
}

Code caterpillar5() { return tree_code(5, {{1, 2}, {2, 3}, {3, 4}, {2, 5}}); }

Code cycle_pendant4() {
    return parse_code({"0000", "1000", "0100", "0010", "0001", "1100", "1010", "0110", "0011"});
}

Code star_triple4() {
    return parse_code({"0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001", "1110"});
}

Code common_lens3() { return parse_code({"000", "100", "010", "001", "101", "011", "111"}); }

std::vector<Code> laminar_codes(int count, std::uint64_t seed) {
    std::vector<Code> out;
    for (int idx = 0; idx < count; ++idx) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(idx) * 7919);
        int n = 3 + static_cast<int>(rng() % 4);
        // parent[i] in 0..i-1; 0 means root
        std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
        for (int i = 2; i <= n; ++i) parent[static_cast<size_t>(i)] = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
        std::vector<Codeword> words{0};
        std::vector<Codeword> chain(static_cast<size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) {
            chain[static_cast<size_t>(i)] = chain[static_cast<size_t>(parent[static_cast<size_t>(i)])] | (Codeword{1} << (i - 1));
            words.push_back(chain[static_cast<size_t>(i)]);
        }
        out.push_back(from_words(n, std::move(words)));
    }
    return out;
}

std::vector<Code> crossing_pair_codes(int count, std::uint64_t seed) {
    std::vector<Code> out;
    for (int idx = 0; idx < count; ++idx) {
        std::mt19937_64 rng(seed + 104729 + static_cast<std::uint64_t>(idx) * 7919);
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<Codeword> words{0, 1, 2, 3};  // crossing pair on neurons 1,2
        // a forest backbone on neurons 3..n
        std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
        std::vector<Codeword> chain(static_cast<size_t>(n) + 1, 0);
        for (int i = 3; i <= n; ++i) {
            int p = static_cast<int>(rng() % static_cast<std::uint64_t>(i - 2));  // 0 = root, else 3..i-1
            parent[static_cast<size_t>(i)] = p == 0 ? 0 : p + 2;
            chain[static_cast<size_t>(i)] = chain[static_cast<size_t>(parent[static_cast<size_t>(i)])] | (Codeword{1} << (i - 1));
            words.push_back(chain[static_cast<size_t>(i)]);
        }
        out.push_back(from_words(n, std::move(words)));
    }
    return out;
}

std::vector<Code> external_corpus() {
    return {venn3(),      venn3_hollow(), common_lens3(), path_code(3),  path_code(4),
            star_code(4), cycle_pendant4(), star_triple4(), path_code(5), star_code(5),
            caterpillar5()};
}

std::vector<Code> depth1_corpus() {
    return {nested_pierced(), lollipop3(), stacked3(), petal_chain4(), petal_fan4(), internal_code(3), venn2()};
}

}  // namespace corpus
}  // namespace toricode
