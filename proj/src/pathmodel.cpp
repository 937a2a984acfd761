#include "jones3/pathmodel.hpp"

#include <cmath>
#include <numbers>

namespace jones3 {

namespace {

constexpr double kSelfCheckTol = 1e-12;

void self_check(double lambda_form, double d_form, const char* what) {
    if (std::abs(lambda_form - d_form) > kSelfCheckTol) {
        throw std::logic_error(std::string("lambda-form and d-form disagree for ") + what);
    }
}

}  // namespace

ModelParams make_params(int k) {
    if (k < 5) {
        throw KTooSmallError("level k must be at least 5, got " + std::to_string(k));
    }
    ModelParams p;
    p.k = k;
    const double pi = std::numbers::pi;
    p.d = 2.0 * std::cos(pi / k);
    p.A = cd(0.0, 1.0) * std::exp(cd(0.0, -pi / (2.0 * k)));
    p.lambda.assign(static_cast<std::size_t>(k), 0.0);
    for (int j = 1; j < k; ++j) p.lambda[static_cast<std::size_t>(j)] = std::sin(pi * j / k);

    const cd a2 = p.A * p.A;
    if (std::abs(-1.0 / a2 - a2 - p.d) > kSelfCheckTol) {
        throw std::logic_error("constants violate d = -A^-2 - A^2");
    }
    if (std::abs(p.lam(2) / p.lam(1) - p.d) > kSelfCheckTol) {
        throw std::logic_error("constants violate lambda_2 / lambda_1 = d");
    }
    return p;
}

const char* path_name(Path p) {
    switch (p) {
        case Path::P101: return "101";
        case Path::P110: return "110";
        case Path::P111: return "111";
    }
    return "?";
}

double PathDistribution::pr(Path p) const {
    switch (p) {
        case Path::P101: return pr101;
        case Path::P110: return pr110;
        case Path::P111: return pr111;
    }
    return 0.0;
}

PathDistribution path_distribution(const ModelParams& params) {
    // Paths 101 and 110 both end at vertex 2 of the weight graph, 111 at
    // vertex 4.
    const double total = params.lam(2) + params.lam(2) + params.lam(4);
    const double d2 = params.d * params.d;

    self_check(params.lam(2) / total, 1.0 / d2, "Pr(101)");
    self_check(params.lam(2) / total, 1.0 / d2, "Pr(110)");
    self_check(params.lam(4) / total, 1.0 - 2.0 / d2, "Pr(111)");

    return PathDistribution{1.0 / d2, 1.0 / d2, 1.0 - 2.0 / d2};
}

ComplexMatrix build_e1(const ModelParams& params) {
    self_check(params.lam(2) / params.lam(1), params.d, "E1 entry 101,101");

    ComplexMatrix e1(8);
    e1.at(5, 5) = params.d;
    return e1;
}

ComplexMatrix build_e2(const ModelParams& params) {
    const double d = params.d;
    const double off = std::sqrt(params.lam(1) * params.lam(3)) / params.lam(2);

    self_check(params.lam(1) / params.lam(2), 1.0 / d, "E2 entry 101,101");
    self_check(params.lam(3) / params.lam(2), (d * d - 1.0) / d, "E2 entry 110,110");
    self_check(off, std::sqrt(d * d - 1.0) / d, "E2 off-diagonal entry");

    ComplexMatrix e2(8);
    e2.at(5, 5) = 1.0 / d;
    e2.at(5, 6) = off;
    e2.at(6, 5) = off;
    e2.at(6, 6) = (d * d - 1.0) / d;
    return e2;
}

ComplexMatrix generator_unitary(Generator g, const ModelParams& params) {
    if (g.index != 1 && g.index != 2) {
        throw IndexOutOfRangeError("generator index must be 1 or 2");
    }
    const ComplexMatrix e = g.index == 1 ? build_e1(params) : build_e2(params);
    const cd a = g.sign > 0 ? params.A : 1.0 / params.A;
    return a * e + (1.0 / a) * ComplexMatrix::identity(8);
}

ComplexMatrix braid_unitary(const BraidWord& word, const ModelParams& params) {
    ComplexMatrix u = ComplexMatrix::identity(8);
    for (const Generator& g : word.letters) {
        u = u * generator_unitary(g, params);
    }
    return u;
}

cd markov_trace(const BraidWord& word, const ModelParams& params) {
    const ComplexMatrix u = braid_unitary(word, params);
    const PathDistribution pr = path_distribution(params);
    cd sum = 0.0;
    for (Path p : kPaths) {
        sum += pr.pr(p) * u.at(path_index(p), path_index(p));
    }
    return sum;
}

cd extract_coefficient(const ComplexMatrix& u, Path p, Path q) {
    if (u.dim() != 8) throw DimMismatchError("braid image must be 8x8");

    constexpr double tol = 1e-10;
    // Off the admissible paths the generator images act as the scalar A^{+-1},
    // so a braid image must be one unit phase on indices 0..4, a diagonal
    // entry at 111, and an arbitrary 2x2 block on span{101,110}.
    const cd scalar = u.at(0, 0);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const bool block = (i == 5 || i == 6) && (j == 5 || j == 6);
            const bool final_diag = i == 7 && j == 7;
            if (block || final_diag) continue;
            if (i == j) {
                if (std::abs(u.at(i, j) - scalar) > tol) {
                    throw StructureViolationError("off-path diagonal is not a single scalar phase");
                }
            } else if (std::abs(u.at(i, j)) > tol) {
                throw StructureViolationError("nonzero entry outside the path block pattern");
            }
        }
    }
    if (std::abs(std::abs(scalar) - 1.0) > tol) {
        throw StructureViolationError("off-path scalar is not a unit phase");
    }
    return u.at(path_index(p), path_index(q));
}

}  // namespace jones3
