#ifndef TORICODE_CORPUS_HPP
#define TORICODE_CORPUS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "toricode/code.hpp"

namespace toricode {
namespace corpus {

/// Two crossing circles: {00, 10, 01, 11}.
Code venn2();
/// Three circles in general position, all eight codewords.
Code venn3();
/// Three pairwise-crossing circles with an empty triple region.
Code venn3_hollow();
/// Circle 2 nested in circle 1, circle 3 piercing both:
/// {000, 100, 001, 110, 101, 111}.
Code nested_pierced();
/// Circles 2 and 3 inside circle 1, crossing each other.
Code lollipop3();
/// Crossing pair 1,2 with circle 3 inside 1 piercing 2.
Code stacked3();
/// Circles 2,3,4 inside 1; 3 crosses 2 and 4.
Code petal_chain4();
/// Circles 2,3,4 inside 1; 3 and 4 both cross 2.
Code petal_fan4();
/// Externally overlapping circles along a path 1-2-...-n.
Code path_code(int n);
/// Circle 1 crossed by circles 2..n, pairwise disjoint.
Code star_code(int n);
/// Path 1-2-3-4 with leaf 5 on vertex 2.
Code caterpillar5();
/// Triangle 1,2,3 with pendant circle 4 on circle 3.
Code cycle_pendant4();
/// Star on 4 with petals 2,3 also crossing each other inside 1.
Code star_triple4();
/// Three pairwise-crossing circles sharing a common region that swallows
/// every pairwise-only zone except those with circle 3.
Code common_lens3();

/// Tree-of-circles code: zero, all singletons, one pair zone per edge.
Code tree_code(int n, const std::vector<std::pair<int, int>>& edges);

/// Deterministic family of nested/disjoint (forest) codes; their matrices
/// have independent columns.
std::vector<Code> laminar_codes(int count, std::uint64_t seed);

/// Deterministic family of codes containing a crossing pair (zones e_a, e_b
/// and e_a + e_b), on top of a random forest backbone.
std::vector<Code> crossing_pair_codes(int count, std::uint64_t seed);

/// The external verification corpus (n = 3..5, full and non-full).
std::vector<Code> external_corpus();

/// The one-pierced depth-one verification corpus.
std::vector<Code> depth1_corpus();

}  // namespace corpus
}  // namespace toricode

#endif
