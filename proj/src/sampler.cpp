#include "jones3/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "jones3/jones.hpp"
#include "jones3/rng.hpp"

namespace jones3 {

namespace {

const QubitList kWorkQubits{Qubit::Work1, Qubit::Work2, Qubit::Work3};

ComplexMatrix phi_matrix(const ModelParams& params) {
    const PathDistribution pr = path_distribution(params);
    ComplexMatrix m(8);
    for (Path p : kPaths) m.at(path_index(p), path_index(p)) = pr.pr(p);
    return m;
}

ComplexMatrix control_block(int r, int c) {
    ComplexMatrix m(2);
    m.at(r, c) = 1.0;
    return m;
}

}  // namespace

DensityMatrix build_phi(const ModelParams& params) {
    return DensityMatrix(phi_matrix(params), kWorkQubits);
}

DensityMatrix build_rho0(const ModelParams& params) {
    return DensityMatrix(tensor(control_block(0, 0), phi_matrix(params)), all_qubits());
}

DensityMatrix build_rho1(const ModelParams& params) {
    ComplexMatrix plus(2);
    plus.at(0, 0) = plus.at(0, 1) = plus.at(1, 0) = plus.at(1, 1) = 0.5;
    return DensityMatrix(tensor(plus, phi_matrix(params)), all_qubits());
}

DensityMatrix build_rho_b(const BraidWord& word, const ModelParams& params) {
    const ComplexMatrix u = braid_unitary(word, params);
    const ComplexMatrix phi = phi_matrix(params);
    const ComplexMatrix u_dag = adjoint(u);

    const ComplexMatrix direct =
        cd(0.5) * (tensor(control_block(0, 0), phi) + tensor(control_block(0, 1), phi * u_dag) +
                   tensor(control_block(1, 0), u * phi) +
                   tensor(control_block(1, 1), u * phi * u_dag));

    // The braid image commutes with phi, so the |1><1| block is phi itself.
    const ComplexMatrix simplified =
        cd(0.5) * (tensor(control_block(0, 0), phi) + tensor(control_block(0, 1), phi * u_dag) +
                   tensor(control_block(1, 0), u * phi) + tensor(control_block(1, 1), phi));
    if (max_abs_diff(direct, simplified) > 1e-12) {
        throw std::logic_error("braid image does not preserve the path mixture");
    }

    return DensityMatrix(direct, all_qubits());
}

double expectation_x(const DensityMatrix& rho) {
    ComplexMatrix x(2);
    x.at(0, 1) = 1.0;
    x.at(1, 0) = 1.0;
    const int rest = rho.matrix().dim() / 2;
    return standard_trace(tensor(x, ComplexMatrix::identity(rest)) * rho.matrix()).real();
}

double expectation_y(const DensityMatrix& rho) {
    ComplexMatrix y(2);
    y.at(0, 1) = cd(0.0, -1.0);
    y.at(1, 0) = cd(0.0, 1.0);
    const int rest = rho.matrix().dim() / 2;
    return standard_trace(tensor(y, ComplexMatrix::identity(rest)) * rho.matrix()).real();
}

namespace {

// Independent randomness streams per quadrature and use.
enum Stream : std::uint64_t {
    kPureXPath = 0,
    kPureXDraw = 1,
    kPureYPath = 2,
    kPureYDraw = 3,
    kMixedXDraw = 4,
    kMixedYDraw = 5,
};

struct RoundProbabilities {
    // P(outcome = +1) per quadrature, by path for the pure sampler or as a
    // single value for the mixed one.
    std::array<double, 3> px{}, py{};
    std::array<double, 2> cum{};  // cumulative path probabilities
    double mixed_px = 0.0, mixed_py = 0.0;
};

int draw_path(const RoundProbabilities& rp, double u) {
    if (u < rp.cum[0]) return 0;
    if (u < rp.cum[1]) return 1;
    return 2;
}

EstimatorResult finish(const BraidWord& word, const ModelParams& params, std::int64_t samples,
                       std::int64_t sx, std::int64_t sy, cd exact_expectation) {
    EstimatorResult res;
    res.samples = samples;
    res.r = cd(static_cast<double>(sx), static_cast<double>(sy)) / static_cast<double>(samples);
    res.stderr_bound = 2.0 / std::sqrt(static_cast<double>(samples));
    const cd scale =
        unit_power(-params.A, -3 * writhe_of_closure(word)) * (params.d * params.d);
    res.output = scale * res.r;
    res.exact_expectation = exact_expectation;
    res.exact_trace = markov_trace(word, params);
    res.exact_output = scale * res.exact_trace;
    return res;
}

template <bool Parallel>
EstimatorResult pure_sampler(const BraidWord& word, const ModelParams& params,
                             std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("sample count must be at least 1");

    const ComplexMatrix u = braid_unitary(word, params);
    const PathDistribution pr = path_distribution(params);

    RoundProbabilities rp;
    rp.cum = {pr.pr101, pr.pr101 + pr.pr110};
    cd exact = 0.0;
    for (std::size_t i = 0; i < kPaths.size(); ++i) {
        const int idx = path_index(kPaths[i]);
        const cd diag = u.at(idx, idx);
        rp.px[i] = 0.5 * (1.0 + diag.real());
        rp.py[i] = 0.5 * (1.0 + diag.imag());
        exact += pr.pr(kPaths[i]) * diag;
    }

    std::int64_t sx = 0;
    std::int64_t sy = 0;
#pragma omp parallel for reduction(+ : sx, sy) schedule(static) if (Parallel)
    for (std::int64_t j = 0; j < samples; ++j) {
        const std::uint64_t ctr = static_cast<std::uint64_t>(j);
        const int path_x = draw_path(rp, uniform01(seed, kPureXPath, ctr));
        sx += uniform01(seed, kPureXDraw, ctr) < rp.px[static_cast<std::size_t>(path_x)] ? 1 : -1;
        const int path_y = draw_path(rp, uniform01(seed, kPureYPath, ctr));
        sy += uniform01(seed, kPureYDraw, ctr) < rp.py[static_cast<std::size_t>(path_y)] ? 1 : -1;
    }
    return finish(word, params, samples, sx, sy, exact);
}

template <bool Parallel>
EstimatorResult mixed_sampler(const BraidWord& word, const ModelParams& params,
                              std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("sample count must be at least 1");

    const DensityMatrix rho = build_rho_b(word, params);
    const double ex = expectation_x(rho);
    const double ey = expectation_y(rho);
    const double px = 0.5 * (1.0 + ex);
    const double py = 0.5 * (1.0 + ey);

    std::int64_t sx = 0;
    std::int64_t sy = 0;
#pragma omp parallel for reduction(+ : sx, sy) schedule(static) if (Parallel)
    for (std::int64_t j = 0; j < samples; ++j) {
        const std::uint64_t ctr = static_cast<std::uint64_t>(j);
        sx += uniform01(seed, kMixedXDraw, ctr) < px ? 1 : -1;
        sy += uniform01(seed, kMixedYDraw, ctr) < py ? 1 : -1;
    }
    return finish(word, params, samples, sx, sy, cd(ex, ey));
}

}  // namespace

EstimatorResult run_pure_sampler(const BraidWord& word, const ModelParams& params,
                                 std::int64_t samples, std::uint64_t seed) {
    return pure_sampler<true>(word, params, samples, seed);
}

EstimatorResult run_pure_sampler_serial(const BraidWord& word, const ModelParams& params,
                                        std::int64_t samples, std::uint64_t seed) {
    return pure_sampler<false>(word, params, samples, seed);
}

EstimatorResult run_mixed_sampler(const BraidWord& word, const ModelParams& params,
                                  std::int64_t samples, std::uint64_t seed) {
    return mixed_sampler<true>(word, params, samples, seed);
}

EstimatorResult run_mixed_sampler_serial(const BraidWord& word, const ModelParams& params,
                                         std::int64_t samples, std::uint64_t seed) {
    return mixed_sampler<false>(word, params, samples, seed);
}

}  // namespace jones3
