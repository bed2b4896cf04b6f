#ifndef TORICODE_CLASSIFY_HPP
#define TORICODE_CLASSIFY_HPP

#include <string>

#include "toricode/errors.hpp"
#include "toricode/toric.hpp"

namespace toricode {

/// Trivial toric ideal, reported as the zero-piercing classification.
/// Refuses codes in which some neuron never fires.
bool is_zero_pierced(const Code& code);

/// The certified minimal generating set has maximum degree two (vacuously
/// true for the zero ideal).
bool generated_by_quadratics(const Code& code, int tdeg_bound = -1, const Budget& budget = {});

/// n = 3 test: the reduced basis under the weight (0,0,0,1,1,1,0) order has
/// every element of degree at most two.
bool is_one_pierced_n3(const Code& code, const Budget& budget = {});

struct ClassifyReport {
    bool every_neuron_fires = false;
    bool zero_pierced = false;
    bool quadratically_generated = false;
    int max_generator_degree = 0;
    int generator_count = 0;
    bool one_pierced_n3_applicable = false;
    bool one_pierced_n3 = false;
    std::string order_used_n3;
};

ClassifyReport classify(const Code& code, int tdeg_bound = -1, const Budget& budget = {});

}  // namespace toricode

#endif
