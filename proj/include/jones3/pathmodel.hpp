#pragma once

#include <array>

#include "jones3/braid.hpp"
#include "jones3/complex_matrix.hpp"

namespace jones3 {

struct KTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct StructureViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Representation constants at level k: loop value d = 2 cos(pi/k), the
/// Kauffman variable A = i e^{-i pi / 2k} (so d = -A^2 - A^{-2}), and the
/// weights lambda_j = sin(pi j / k).
struct ModelParams {
    int k = 0;
    double d = 0.0;
    cd A;
    std::vector<double> lambda;  // lambda[j], valid for 1 <= j <= k-1

    double lam(int j) const { return lambda[static_cast<std::size_t>(j)]; }
};

ModelParams make_params(int k);  // throws KTooSmallError for k < 5

// The three admissible three-step paths as big-endian basis indices of the
// work register |q1 q2 q3>.
enum class Path : int { P101 = 5, P110 = 6, P111 = 7 };

inline constexpr std::array<Path, 3> kPaths{Path::P101, Path::P110, Path::P111};

inline int path_index(Path p) { return static_cast<int>(p); }
const char* path_name(Path p);

/// Sampling distribution over the admissible paths.
struct PathDistribution {
    double pr101 = 0.0;
    double pr110 = 0.0;
    double pr111 = 0.0;

    double pr(Path p) const;
};

// Computed two ways (lambda weights and the closed form {1/d^2, 1/d^2,
// 1 - 2/d^2}) which must agree to 1e-12; returns the closed form.
PathDistribution path_distribution(const ModelParams& params);

// The two Temperley-Lieb generator images on the 8-dimensional work space.
// Entries are produced from both the lambda form and the d form and compared
// to 1e-12 as a built-in self check.
ComplexMatrix build_e1(const ModelParams& params);
ComplexMatrix build_e2(const ModelParams& params);

// A * E_j + A^{-1} * I for a positive crossing, A^{-1} * E_j + A * I for its
// inverse; always unitary.
ComplexMatrix generator_unitary(Generator g, const ModelParams& params);

// Left-to-right product over the word's letters; identity word gives I.
ComplexMatrix braid_unitary(const BraidWord& word, const ModelParams& params);

// Weighted diagonal sum  sum_p Pr(p) <p|U_B|p>  over the admissible paths.
cd markov_trace(const BraidWord& word, const ModelParams& params);

// <p|U|q> after verifying U has the block shape every braid image must have:
// a 2x2 block on span{101,110}, a diagonal entry at 111, and one scalar
// unit phase on the remaining diagonal. Throws StructureViolationError if an
// entry outside that pattern exceeds 1e-10 (an implementation bug, never a
// property of the input word).
cd extract_coefficient(const ComplexMatrix& u, Path p, Path q);

}  // namespace jones3
