#pragma once

#include "jones3/braid.hpp"
#include "jones3/kauffman.hpp"
#include "jones3/pathmodel.hpp"

namespace jones3 {

enum class JonesMethod { PathModel, BracketOracle };

const char* jones_method_name(JonesMethod m);

/// The closure invariant evaluated at t = A^{-4} = e^{2 pi i / k}, in the
/// normalization where the three-component unlink maps to d^2.
struct JonesValue {
    cd value;
    int k = 0;
    cd t;
    JonesMethod method = JonesMethod::PathModel;
};

// (-A)^{-3 w} * d^2 * markov_trace, the path-model evaluation.
JonesValue jones_at_root(const BraidWord& word, int k);

struct JonesComparison {
    JonesValue path;
    JonesValue bracket;
    double max_abs_diff = 0.0;
};

// Path-model and bracket-oracle evaluations side by side.
JonesComparison jones_both_methods(const BraidWord& word, int k);

// (-A)^e for integer e, exact for unit-modulus A up to rounding.
cd unit_power(cd base, int exponent);

}  // namespace jones3
