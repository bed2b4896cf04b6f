#ifndef TORICODE_GRAPHS_HPP
#define TORICODE_GRAPHS_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "toricode/binomial.hpp"
#include "toricode/code.hpp"

namespace toricode {

/// Graph on the codewords (the all-zero word is always a vertex) with an
/// edge between every pair of codewords at Hamming distance one. Vertex
/// weights are the codeword weights.
struct WeightedDualGraph {
    int n = 0;
    std::vector<Codeword> vertices;           // canonical order, zero first
    std::vector<std::pair<int, int>> edges;   // vertex indices, i < j
    int vertex_index(Codeword w) const;
    std::vector<std::vector<int>> adjacency() const;
};

WeightedDualGraph dual_graph(const Code& code);

/// Edge-list text format with a weight column:
///   v <bits> <weight>  per vertex, then  e <bits> <bits>  per edge.
void write_edge_list(const WeightedDualGraph& g, std::ostream& out);

/// One of the six library patterns: a small weighted dual graph, the
/// binomial its embeddings induce, and the zone sets whose presence in the
/// target code disqualifies an embedding (each clause lists local supports
/// that must not all be codewords).
struct PatternGraph {
    int id = 0;
    int local_neurons = 0;
    std::vector<Codeword> vertices;  // local codewords, zero included
    std::vector<std::pair<int, int>> edges;
    std::vector<int> binomial_plus;   // vertex indices
    std::vector<int> binomial_minus;  // vertex indices
    std::vector<std::vector<Codeword>> absent_clauses;  // local supports
    bool shared_binomial_text = false;
};

/// The six pattern graphs, ids 1..6.
const std::vector<PatternGraph>& pattern_library();

PatternGraph parse_pattern(std::istream& in);
PatternGraph parse_pattern_file(const std::string& path);
void write_pattern(const PatternGraph& p, std::ostream& out);

/// vertex index of the pattern -> codeword of the target graph
using Embedding = std::vector<Codeword>;

/// All injective weight-preserving edge-preserving maps from the pattern
/// into g. Deterministic order.
std::vector<Embedding> find_embeddings(const PatternGraph& pattern, const WeightedDualGraph& g);

/// The pattern's binomial pushed through the embedding; validated against
/// the code's fiber condition.
Binomial induced_binomial(const Code& code, const PatternGraph& pattern, const Embedding& embedding);

/// Neuron relabeling local -> target implied by an embedding.
std::vector<int> embedding_neuron_map(const PatternGraph& pattern, const Embedding& embedding);

/// True when none of the pattern's absence clauses is fully present in the
/// code under the embedding's neuron relabeling.
bool embedding_side_conditions_hold(const Code& code, const PatternGraph& pattern, const Embedding& embedding);

/// Indispensable binomials of a one-pierced depth-one code, computed from
/// pattern embeddings and their side conditions alone.
std::vector<Binomial> depth1_indispensables(const Code& code);

/// Graph on the neurons with an edge {i,j} whenever e_i + e_j is a codeword.
struct DeltaGraph {
    int k = 0;  // neurons
    std::vector<std::pair<int, int>> edges;  // 1-based, i < j
    std::vector<int> degrees() const;
    bool is_tree() const;
};

DeltaGraph delta_graph(const Code& code);

/// Sum over vertices of C(deg, 2); input must be a tree.
long long expected_quadratic_count(const DeltaGraph& g);

/// All (i, k, j) with k adjacent to both i and j, i < j; in a tree the
/// middle vertex of a distance-two pair is unique.
std::vector<std::array<int, 3>> distance_two_partners(const DeltaGraph& g);

}  // namespace toricode

#endif
