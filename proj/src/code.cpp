#include "toricode/code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace toricode {

int weight(Codeword c) { return std::popcount(c); }

std::vector<int> support(Codeword c) {
    std::vector<int> out;
    while (c) {
        out.push_back(std::countr_zero(c) + 1);
        c &= c - 1;
    }
    return out;
}

std::string support_string(Codeword c) {
    std::string out;
    bool first = true;
    for (int i : support(c)) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out;
}

Codeword codeword_from_support_string(const std::string& s, int n) {
    Codeword c = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw format_error("empty index in support set '" + s + "'");
        int i = 0;
        try {
            i = std::stoi(tok);
        } catch (const std::exception&) {
            throw format_error("bad index '" + tok + "' in support set");
        }
        if (i < 1 || i > n) throw format_error("neuron index " + tok + " out of range 1.." + std::to_string(n));
        c |= Codeword{1} << (i - 1);
    }
    return c;
}

std::string bit_string(Codeword c, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (c & (Codeword{1} << i)) s[static_cast<size_t>(i)] = '1';
    return s;
}

bool canonical_less(Codeword a, Codeword b) {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    while (a && b) {
        int i = std::countr_zero(a), j = std::countr_zero(b);
        if (i != j) return i < j;
        a &= a - 1;
        b &= b - 1;
    }
    return false;  // equal weight and exhausted together => equal
}

Code::Code(int n, std::vector<Codeword> words) : n_(n) {
    if (n < 1 || n > max_neurons) throw domain_error("neuron count " + std::to_string(n) + " out of range");
    Codeword mask = (n == 31) ? 0x7fffffffu : ((Codeword{1} << n) - 1);
    contains_zero_ = false;
    for (Codeword w : words) {
        if (w & ~mask) throw domain_error("codeword exceeds neuron count");
        if (w == 0) contains_zero_ = true;
    }
    zones_.clear();
    std::sort(words.begin(), words.end(), canonical_less);
    for (Codeword w : words) {
        if (w == 0) continue;
        if (!zones_.empty() && zones_.back() == w) continue;  // sets: dedup
        zones_.push_back(w);
    }
    words_.clear();
    if (contains_zero_) words_.push_back(0);
    words_.insert(words_.end(), zones_.begin(), zones_.end());
}

int Code::zone_index(Codeword c) const {
    auto it = std::lower_bound(zones_.begin(), zones_.end(), c, canonical_less);
    if (it != zones_.end() && *it == c) return static_cast<int>(it - zones_.begin());
    return -1;
}

bool Code::every_neuron_fires() const {
    Codeword seen = 0;
    for (Codeword w : zones_) seen |= w;
    Codeword mask = (n_ == 31) ? 0x7fffffffu : ((Codeword{1} << n_) - 1);
    return seen == mask;
}

int Code::max_weight() const {
    int m = 0;
    for (Codeword w : zones_) m = std::max(m, weight(w));
    return m;
}

std::string Code::variable_name(int var) const {
    return "t{" + support_string(zone_word(var)) + "}";
}

Code parse_code(const std::vector<std::string>& lines) {
    std::vector<Codeword> words;
    int n = -1;
    for (const std::string& raw : lines) {
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);
        if (n < 0) {
            n = static_cast<int>(line.size());
            if (n > max_neurons) throw format_error("codeword longer than " + std::to_string(max_neurons) + " neurons");
        } else if (static_cast<int>(line.size()) != n) {
            throw format_error("ragged codeword lengths: expected " + std::to_string(n) + ", got " +
                               std::to_string(line.size()));
        }
        Codeword w = 0;
        for (int i = 0; i < n; ++i) {
            char ch = line[static_cast<size_t>(i)];
            if (ch == '1')
                w |= Codeword{1} << i;
            else if (ch != '0')
                throw format_error(std::string("illegal character '") + ch + "' in codeword");
        }
        words.push_back(w);
    }
    if (n < 0) throw format_error("empty input: no codewords");
    return Code(n, std::move(words));
}

Code parse_code(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return parse_code(lines);
}

Code parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open code file '" + path + "'");
    return parse_code(in);
}

void write_code(const Code& code, std::ostream& out) {
    for (Codeword w : code.words()) out << bit_string(w, code.n()) << '\n';
}

bool is_external(const Code& code) {
    for (int i = 0; i < code.n(); ++i)
        if (code.zone_index(Codeword{1} << i) < 0) return false;
    return true;
}

Code internal_code(int n) {
    if (n < 2) throw domain_error("internal_code requires n >= 2");
    if (n > max_neurons) throw domain_error("internal_code: n too large");
    std::vector<Codeword> words{0};
    for (int j = 2; j <= n; ++j) {
        Codeword chain = (Codeword{1} << j) - 2;  // {2..j}
        words.push_back(chain);
        words.push_back(chain | 1);  // {1} ∪ {2..j}
    }
    return Code(n, std::move(words));
}

}  // namespace toricode
