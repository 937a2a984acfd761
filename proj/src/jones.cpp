#include "jones3/jones.hpp"

#include <cmath>
#include <numbers>

namespace jones3 {

const char* jones_method_name(JonesMethod m) {
    return m == JonesMethod::PathModel ? "path" : "bracket";
}

cd unit_power(cd base, int exponent) {
    cd out = 1.0;
    cd b = exponent < 0 ? 1.0 / base : base;
    for (int n = exponent < 0 ? -exponent : exponent; n > 0; --n) out *= b;
    return out;
}

namespace {

cd root_of_unity(int k) {
    return std::exp(cd(0.0, 2.0 * std::numbers::pi / k));
}

}  // namespace

JonesValue jones_at_root(const BraidWord& word, int k) {
    const ModelParams params = make_params(k);
    const int w = writhe_of_closure(word);
    const cd value =
        unit_power(-params.A, -3 * w) * (params.d * params.d) * markov_trace(word, params);
    return JonesValue{value, k, root_of_unity(k), JonesMethod::PathModel};
}

JonesComparison jones_both_methods(const BraidWord& word, int k) {
    const ModelParams params = make_params(k);
    JonesComparison cmp;
    cmp.path = jones_at_root(word, k);
    cmp.bracket = JonesValue{jones_oracle(word, params), k, root_of_unity(k),
                             JonesMethod::BracketOracle};
    cmp.max_abs_diff = std::abs(cmp.path.value - cmp.bracket.value);
    return cmp;
}

}  // namespace jones3
