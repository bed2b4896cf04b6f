#ifndef TORICODE_TORIC_HPP
#define TORICODE_TORIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "toricode/binomial.hpp"
#include "toricode/errors.hpp"
#include "toricode/groebner.hpp"

namespace toricode {

/// n x m integer matrix whose columns are the nonzero codewords in canonical
/// variable order.
struct CodeMatrix {
    int rows = 0;  // neurons
    int cols = 0;  // zone variables
    std::vector<int> entries;  // row-major

    int at(int r, int c) const { return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
};

CodeMatrix code_matrix(const Code& code);
int rational_rank(const CodeMatrix& m);

/// True iff the columns are linearly independent over the rationals, i.e.
/// the toric ideal is trivial.
bool ideal_is_zero(const Code& code);

/// Basis of the integer kernel lattice of the code matrix.
std::vector<std::vector<long long>> kernel_lattice_basis(const Code& code);

/// All monomials of total degree <= the scan bound sharing one image.
struct Fiber {
    std::vector<int> image;  // length n
    std::vector<Monomial> members;
    bool complete;  // every member of the full fiber has degree <= scan bound
};

/// Group the monomials of total degree <= tdeg_bound by image; fibers with a
/// single member are dropped. Deterministic order: by (|image|_1, image).
std::vector<Fiber> fibers_up_to(const Code& code, int tdeg_bound, const Budget& budget = {});

int default_degree_bound(const Code& code);  // 2 * max codeword weight + 2

enum class GenMethod { bounded, saturation };

struct GeneratorReport {
    std::vector<Binomial> generators;
    GenMethod method = GenMethod::bounded;
    int tdeg_bound = 0;
    /// bounded: stability window observed and every scanned fiber certified
    /// connected by Buchberger reduction; saturation: always true.
    bool complete = false;
    int max_generator_degree = 0;
};

/// Generating set of the toric ideal. The bounded method produces a minimal
/// generating set degree by degree from fiber graphs; the saturation method
/// saturates a lattice-basis ideal variable by variable and is exact.
GeneratorReport toric_generators(const Code& code, GenMethod method, int tdeg_bound = -1, const Budget& budget = {});

/// No ideal binomial t^u - t^v with t^u | t^a and t^v | t^b besides (a,b).
bool is_primitive(const Code& code, const Binomial& b);

struct GraverReport {
    std::vector<Binomial> elements;
    int tdeg_bound = 0;
    /// certified against the minimal generating set (Lawrence-type inputs)
    bool exact = false;
};

/// All primitive binomials with both term degrees <= the bound.
GraverReport graver_basis(const Code& code, int tdeg_bound = -1, const Budget& budget = {});

/// Lawrence lifting [[A, 0], [I, I]] of a k x n matrix.
std::vector<std::vector<int>> lawrence_lift(const std::vector<std::vector<int>>& a);

struct LawrenceWitness {
    bool ok = false;
    int n = 0;
    std::vector<std::vector<int>> transform;   // n x n unimodular row transform
    std::vector<std::vector<int>> lifted;      // the Lawrence lifting matched against
    std::vector<int> column_map;               // zone variable -> lifted column
    std::string note;
};

/// Exhibit the row transform carrying the internal code's matrix onto the
/// Lawrence lifting of the 1 x (n-1) all-ones matrix, with the column
/// bijection; n >= 3.
LawrenceWitness verify_lawrence_row_equivalence(int n);

/// Which internal_code(n) this code equals, if any.
std::optional<int> recognize_internal(const Code& code);

/// Binomials forced into every binomial generating set: two-member fibers
/// whose members share no variable. Cross-checked against the generating-set
/// oracle when the code has at most six zone variables.
std::vector<Binomial> indispensable_binomials(const Code& code, int tdeg_bound = -1, const Budget& budget = {});

/// Independent oracle: a binomial is indispensable iff no generating set
/// drawn from the bounded fiber pairs avoids it. Requires <= 6 variables.
std::vector<Binomial> indispensable_binomials_bruteforce(const Code& code, int tdeg_bound = -1,
                                                         const Budget& budget = {});

struct UgbResult {
    bool exact = false;   // Lawrence-type or zero ideal
    bool closed = false;  // sandwich lower == upper (set after sign normalization)
    std::vector<Binomial> elements;  // exact set, otherwise the lower bound
    std::vector<Binomial> upper;     // Graver bound (sandwich case)
    std::vector<std::string> orders_used;
    int tdeg_bound = 0;
};

/// Union of reduced bases over named orders plus random weight orders
/// (lower bound), against the Graver basis (upper bound); exact for
/// recognized Lawrence-type codes and for the zero ideal.
UgbResult universal_gb(const Code& code, int order_family_size = 8, int tdeg_bound = -1, std::uint64_t seed = 0,
                       const Budget& budget = {});

/// Every homogeneous quadratic binomial of the ideal (degree-2 fiber scan).
std::vector<Binomial> all_quadratic_binomials(const Code& code);

/// Binomials t_a t_b - t_c from pairs of distinct weight-one codewords whose
/// sum is again a codeword.
std::vector<Binomial> pairwise_sum_binomials(const Code& code);

}  // namespace toricode

#endif
