#include "jones3/entanglement.hpp"

#include <cmath>

#include "jones3/sampler.hpp"

namespace jones3 {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Product: return "Product";
        case Classification::Separable: return "Separable";
        case Classification::Entangled: return "Entangled";
    }
    return "?";
}

PptResult is_ppt(const DensityMatrix& rho, const QubitList& over, double tol) {
    const ComplexMatrix pt = partial_transpose(rho, over);
    const std::vector<double> eig = hermitian_eigenvalues(pt);
    return PptResult{eig.front() >= -tol, eig.front()};
}

bool product_check_qubit1(const DensityMatrix& rho_b, double tol) {
    const DensityMatrix reduced = partial_trace(rho_b, {Qubit::Work1});

    // |1><1| reinserted at work qubit 1's slot next to the reduced (c,2,3)
    // state, compared entrywise against the original.
    ComplexMatrix rebuilt(16);
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            const int full_r = ((r & 0b100) << 1) | 0b0100 | (r & 0b011);
            const int full_c = ((c & 0b100) << 1) | 0b0100 | (c & 0b011);
            rebuilt.at(full_r, full_c) = reduced.matrix().at(r, c);
        }
    }
    return frobenius_distance(rebuilt, rho_b.matrix()) <= tol;
}

void check_ppt_coefficient_consistency(bool coefficient_zero, const PptResult& ppt2,
                                       const PptResult& ppt3) {
    if (ppt2.ppt != coefficient_zero || ppt3.ppt != coefficient_zero) {
        throw ConsistencyError(
            "PPT status disagrees with the path-mixing coefficient criterion");
    }
}

EntanglementReport classify_bipartitions(const BraidWord& word, int k) {
    const ModelParams params = make_params(k);
    const ComplexMatrix u = braid_unitary(word, params);
    const DensityMatrix rho = build_rho_b(word, params);

    EntanglementReport report;
    report.word = word;
    report.k = k;
    report.u_101_110 = extract_coefficient(u, Path::P101, Path::P110);
    report.u_110_101 = extract_coefficient(u, Path::P110, Path::P101);

    const bool zero_ab = std::abs(report.u_101_110) <= kCoefficientZeroTol;
    const bool zero_ba = std::abs(report.u_110_101) <= kCoefficientZeroTol;
    if (zero_ab != zero_ba) {
        throw ConsistencyError("unitarity forces the two mixing coefficients to vanish together");
    }

    if (!product_check_qubit1(rho)) {
        throw ConsistencyError("state is not a product across the work-qubit-1 cut");
    }

    const PptResult ppt_c = is_ppt(rho, {Qubit::Control});
    const PptResult ppt_1 = is_ppt(rho, {Qubit::Work1});
    const PptResult ppt_2 = is_ppt(rho, {Qubit::Work2});
    const PptResult ppt_3 = is_ppt(rho, {Qubit::Work3});
    check_ppt_coefficient_consistency(zero_ab, ppt_2, ppt_3);

    const Classification mixing =
        zero_ab ? Classification::Separable : Classification::Entangled;
    report.per_bipartition[Qubit::Control] =
        BipartitionVerdict{Classification::Separable, ppt_c.min_eigenvalue, ppt_c.ppt};
    report.per_bipartition[Qubit::Work1] =
        BipartitionVerdict{Classification::Product, ppt_1.min_eigenvalue, ppt_1.ppt};
    report.per_bipartition[Qubit::Work2] =
        BipartitionVerdict{mixing, ppt_2.min_eigenvalue, ppt_2.ppt};
    report.per_bipartition[Qubit::Work3] =
        BipartitionVerdict{mixing, ppt_3.min_eigenvalue, ppt_3.ppt};
    return report;
}

RankProfile rank_profile(const DensityMatrix& rho_b) {
    RankProfile profile;
    profile.rank_rho = hermitian_rank(rho_b.matrix());
    profile.rank_phi = hermitian_rank(partial_trace(rho_b, {Qubit::Control}).matrix());
    for (Qubit q : rho_b.labels()) {
        const QubitList rest = complement(rho_b.labels(), {q});
        RankProfile::Cut cut;
        cut.rank_single = hermitian_rank(partial_trace(rho_b, rest).matrix());
        cut.rank_rest = hermitian_rank(partial_trace(rho_b, {q}).matrix());
        profile.per_qubit[q] = cut;
    }
    return profile;
}

}  // namespace jones3
