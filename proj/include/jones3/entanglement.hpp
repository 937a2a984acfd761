#pragma once

#include <map>

#include "jones3/braid.hpp"
#include "jones3/density_matrix.hpp"
#include "jones3/pathmodel.hpp"

namespace jones3 {

struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// |u| threshold below which the path-mixing coefficient counts as zero. Far
// above accumulated arithmetic error for words up to length 20 and far below
// any nonzero magnitude that short words produce.
inline constexpr double kCoefficientZeroTol = 1e-9;

enum class Classification { Product, Separable, Entangled };
const char* classification_name(Classification c);

struct PptResult {
    bool ppt = false;
    double min_eigenvalue = 0.0;
};

// Smallest eigenvalue of the partial transpose over `over`; PPT iff it is
// >= -tol. A negative eigenvalue certifies entanglement across that cut.
PptResult is_ppt(const DensityMatrix& rho, const QubitList& over, double tol = 1e-9);

// True iff rho equals |1><1| on work qubit 1 tensored with the reduced state
// on the rest, to Frobenius distance tol. Holds for every braid because the
// admissible paths all start with a 1 and the braid image never leaves them.
bool product_check_qubit1(const DensityMatrix& rho_b, double tol = 1e-9);

struct BipartitionVerdict {
    Classification classification = Classification::Separable;
    double ppt_min_eigenvalue = 0.0;
    bool ppt = false;
};

/// Entanglement classification of the pre-measurement state across the four
/// canonical single-qubit bipartitions.
struct EntanglementReport {
    BraidWord word;
    int k = 0;
    cd u_101_110;
    cd u_110_101;
    std::map<Qubit, BipartitionVerdict> per_bipartition;
};

// Classification by theorem: {1} is a product cut, {c} is separable, and
// {2}/{3} are separable exactly when the path-mixing coefficient vanishes.
// The PPT eigenvalue check runs alongside as an independent cross-check and
// any disagreement raises ConsistencyError (an implementation bug; the two
// criteria are provably equivalent).
EntanglementReport classify_bipartitions(const BraidWord& word, int k);

// Exposed for direct testing of the cross-check logic.
void check_ppt_coefficient_consistency(bool coefficient_zero, const PptResult& ppt2,
                                       const PptResult& ppt3);

/// Ranks of the state and of both sides of every single-qubit cut, used to
/// confirm the low-rank hypotheses that upgrade PPT to separability.
struct RankProfile {
    int rank_rho = 0;
    int rank_phi = 0;
    struct Cut {
        int rank_single = 0;  // state on {q}
        int rank_rest = 0;    // state on the complement
    };
    std::map<Qubit, Cut> per_qubit;
};

RankProfile rank_profile(const DensityMatrix& rho_b);

}  // namespace jones3
