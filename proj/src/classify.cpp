#include "toricode/classify.hpp"

#include "toricode/groebner.hpp"
#include "toricode/order.hpp"

namespace toricode {

bool is_zero_pierced(const Code& code) {
    if (!code.every_neuron_fires())
        throw domain_error("classification refused: some neuron never fires, the verdict would be meaningless");
    return ideal_is_zero(code);
}

bool generated_by_quadratics(const Code& code, int tdeg_bound, const Budget& budget) {
    if (ideal_is_zero(code)) return true;  // vacuous: zero ideal
    GeneratorReport rep = toric_generators(code, GenMethod::bounded, tdeg_bound, budget);
    if (!rep.complete) throw resource_error("generator scan not certified; raise the degree bound", true);
    return rep.max_generator_degree <= 2;
}

bool is_one_pierced_n3(const Code& code, const Budget& budget) {
    if (code.n() != 3) throw domain_error("the one-piercing basis test is defined for n = 3 only");
    if (!code.every_neuron_fires())
        throw domain_error("classification refused: some neuron never fires, the verdict would be meaningless");
    if (ideal_is_zero(code)) return true;  // empty basis
    GeneratorReport gens = toric_generators(code, GenMethod::bounded, -1, budget);
    if (!gens.complete) throw resource_error("generator scan not certified; raise the degree bound", true);
    GroebnerBasis gb = reduce_basis(code, buchberger(code, gens.generators, one_pierced_test_order(code), budget));
    for (const Binomial& b : gb.elements)
        if (b.degree() > 2) return false;
    return true;
}

ClassifyReport classify(const Code& code, int tdeg_bound, const Budget& budget) {
    ClassifyReport rep;
    rep.every_neuron_fires = code.every_neuron_fires();
    if (rep.every_neuron_fires) rep.zero_pierced = is_zero_pierced(code);
    if (ideal_is_zero(code)) {
        rep.quadratically_generated = true;
        rep.max_generator_degree = 0;
        rep.generator_count = 0;
    } else {
        GeneratorReport gens = toric_generators(code, GenMethod::bounded, tdeg_bound, budget);
        if (!gens.complete) throw resource_error("generator scan not certified; raise the degree bound", true);
        rep.max_generator_degree = gens.max_generator_degree;
        rep.generator_count = static_cast<int>(gens.generators.size());
        rep.quadratically_generated = gens.max_generator_degree <= 2;
    }
    if (code.n() == 3 && rep.every_neuron_fires) {
        rep.one_pierced_n3_applicable = true;
        rep.one_pierced_n3 = is_one_pierced_n3(code, budget);
        rep.order_used_n3 = one_pierced_test_order(code).spec_string();
    }
    return rep;
}

}  // namespace toricode
