#pragma once

#include <cstdint>

#include "jones3/braid.hpp"
#include "jones3/density_matrix.hpp"
#include "jones3/pathmodel.hpp"

namespace jones3 {

// The diagonal work-register mixture  sum_p Pr(p) |p><p|  on qubits (1,2,3).
DensityMatrix build_phi(const ModelParams& params);

// Intermediate circuit states: control prepared in |0><0| resp. |+><+| next
// to phi. Both are product states across every bipartition.
DensityMatrix build_rho0(const ModelParams& params);
DensityMatrix build_rho1(const ModelParams& params);

// Pre-measurement state on (c,1,2,3) after the controlled braid unitary:
//   1/2 (|0><0| x phi + |0><1| x phi U^dag + |1><0| x U phi + |1><1| x U phi U^dag).
// Since U phi U^dag = phi the last block equals phi again; the builder checks
// that simplified form against the direct one to 1e-12.
DensityMatrix build_rho_b(const BraidWord& word, const ModelParams& params);

// Tr[(X x I) rho] and Tr[(Y x I) rho]: the exact control-qubit measurement
// expectations, equal to Re and Im of the Markov trace.
double expectation_x(const DensityMatrix& rho);
double expectation_y(const DensityMatrix& rho);

enum class SamplerKind { PureState, MixedState };

struct EstimatorResult {
    cd r;                    // average of x_j + i y_j
    std::int64_t samples = 0;
    double stderr_bound = 0.0;  // 2 / sqrt(samples) per quadrature
    cd output;               // (-A)^{-3w} d^2 r
    cd exact_expectation;    // the algorithm's exact E[x] + i E[y]
    cd exact_trace;          // Markov trace, for error reporting
    cd exact_output;         // (-A)^{-3w} d^2 exact_trace
};

// One-control-qubit sampling run: per round, draw a path with probability
// Pr(p) and a +-1 outcome whose mean is Re <p|U|p> (fresh path and draw for
// the imaginary quadrature). Counter-based randomness keyed by (seed, round),
// with outcomes accumulated as integers, so parallel and serial runs are
// bit-identical.
EstimatorResult run_pure_sampler(const BraidWord& word, const ModelParams& params,
                                 std::int64_t samples, std::uint64_t seed);
EstimatorResult run_pure_sampler_serial(const BraidWord& word, const ModelParams& params,
                                        std::int64_t samples, std::uint64_t seed);

// Mixed-state variant: the +-1 outcome means are the fixed expectations
// Tr[(X x I) rho_B] and Tr[(Y x I) rho_B]; no path draws.
EstimatorResult run_mixed_sampler(const BraidWord& word, const ModelParams& params,
                                  std::int64_t samples, std::uint64_t seed);
EstimatorResult run_mixed_sampler_serial(const BraidWord& word, const ModelParams& params,
                                         std::int64_t samples, std::uint64_t seed);

}  // namespace jones3
