#ifndef TORICODE_CODE_HPP
#define TORICODE_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "toricode/errors.hpp"

namespace toricode {

/// A codeword is a 0/1 vector over the neurons 1..n, stored as a bitmask
/// (bit i-1 = neuron i). The ambient n lives in the owning Code.
using Codeword = std::uint32_t;

constexpr int max_neurons = 31;

int weight(Codeword c);
std::vector<int> support(Codeword c);  // 1-based neuron indices, ascending

/// "1,2,3" for the support of c; "{}" never occurs for zone variables.
std::string support_string(Codeword c);
Codeword codeword_from_support_string(const std::string& s, int n);
std::string bit_string(Codeword c, int n);

/// Total order used for zone variables: weight ascending, then the support
/// read as a sorted index sequence, lexicographically ascending.
bool canonical_less(Codeword a, Codeword b);

/// A combinatorial neural code: a set of codewords of common length n.
/// Immutable after construction; safe to share across threads.
class Code {
public:
    Code(int n, std::vector<Codeword> words);

    int n() const { return n_; }
    bool contains_zero() const { return contains_zero_; }
    const std::vector<Codeword>& words() const { return words_; }

    /// Nonzero codewords in canonical order; these index the zone variables
    /// t_0 .. t_{m-1} of the polynomial ring. The all-zero word never gets a
    /// variable.
    const std::vector<Codeword>& zone_words() const { return zones_; }
    int zone_count() const { return static_cast<int>(zones_.size()); }
    Codeword zone_word(int var) const { return zones_.at(static_cast<size_t>(var)); }
    /// Variable index of a nonzero codeword, or -1 if absent.
    int zone_index(Codeword c) const;

    bool contains(Codeword c) const { return c == 0 ? contains_zero_ : zone_index(c) >= 0; }
    /// Every neuron fires in at least one codeword.
    bool every_neuron_fires() const;
    int max_weight() const;

    std::string variable_name(int var) const;  // "t{1,2}"

private:
    int n_;
    bool contains_zero_;
    std::vector<Codeword> words_;  // all words, zero first if present, then canonical
    std::vector<Codeword> zones_;  // nonzero words, canonical order
};

/// Parse one codeword per line; '#' comments and blank lines ignored.
Code parse_code(const std::vector<std::string>& lines);
Code parse_code(std::istream& in);
Code parse_code_file(const std::string& path);
void write_code(const Code& code, std::ostream& out);

/// True iff all n weight-one codewords e_1..e_n belong to the code.
bool is_external(const Code& code);

/// The nested-chain code on n neurons: curve 2 encloses everything, curve 1
/// sits inside it, and curves 3..n form a nested chain each straddling the
/// boundary of curve 1. Zones: {1..j} and {2..j} for j = 2..n, plus 0.
Code internal_code(int n);

}  // namespace toricode

#endif
