#pragma once

#include <array>

#include "jones3/braid.hpp"
#include "jones3/pathmodel.hpp"

namespace jones3 {

struct WordTooLongError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Planar Temperley-Lieb diagram on three strands: a perfect matching on the
/// six boundary points (0..2 top, 3..5 bottom) plus the number of closed
/// loops absorbed during composition.
struct TLDiagram {
    std::array<int, 6> match{};
    int closed_loops = 0;

    static TLDiagram identity();
    static TLDiagram cap_cup(int index);  // the E_1 / E_2 diagram

    bool operator==(const TLDiagram&) const = default;
};

// Stack `upper` above `lower`, reconnect the middle boundary, and absorb any
// loop closed in the middle into closed_loops.
TLDiagram compose(const TLDiagram& upper, const TLDiagram& lower);

// Loops after joining top point i to bottom point i, plus closed_loops.
int closure_loop_count(const TLDiagram& d);

inline constexpr int kMaxBracketLength = 20;

// Kauffman state sum of the trace closure, scaled so the identity braid gives
// d^2: sum over all 2^m smoothings of (product of per-crossing weights) *
// d^{loops - 1}. For a positive crossing the cap-cup smoothing carries weight
// A and the identity smoothing A^{-1}; for a negative crossing the weights
// swap. Throws WordTooLongError beyond kMaxBracketLength.
cd bracket_scaled_serial(const BraidWord& word, const ModelParams& params);

// Same sum, partitioned into fixed-size chunks evaluated in parallel and
// combined in chunk order, so the result does not depend on the thread count.
cd bracket_scaled(const BraidWord& word, const ModelParams& params);

// (-A)^{-3 w} * bracket_scaled, the bracket-side evaluation of the closure
// invariant.
cd jones_oracle(const BraidWord& word, const ModelParams& params);

}  // namespace jones3
