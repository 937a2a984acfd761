#include "jones3/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace jones3 {

namespace {

constexpr int kMaxDim = 16;

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw DimMismatchError("matrix dimension must be in 1..16, got " + std::to_string(dim));
    }
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimMismatchError("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                               std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    a_.assign(static_cast<std::size_t>(dim) * dim, cd(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cd aik = a.at(i, k);
            if (aik == cd(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    ComplexMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    ComplexMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

ComplexMatrix operator*(cd scale, const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.at(i, j) = scale * m.at(i, j);
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    check_dim(na * nb);
    ComplexMatrix out(na * nb);
    for (int ia = 0; ia < na; ++ia)
        for (int ja = 0; ja < na; ++ja) {
            const cd f = a.at(ia, ja);
            if (f == cd(0.0, 0.0)) continue;
            for (int ib = 0; ib < nb; ++ib)
                for (int jb = 0; jb < nb; ++jb)
                    out.at(ia * nb + ib, ja * nb + jb) = f * b.at(ib, jb);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.at(i, j) = std::conj(m.at(j, i));
    return out;
}

cd standard_trace(const ComplexMatrix& m) {
    cd t = 0.0;
    for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) sum += std::norm(a.at(i, j) - b.at(i, j));
    return std::sqrt(sum);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return max_abs_diff(m, adjoint(m)) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    return max_abs_diff(m * adjoint(m), ComplexMatrix::identity(m.dim())) <= tol;
}

namespace {

double off_diagonal_frobenius(const ComplexMatrix& m) {
    double sum = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) sum += std::norm(m.at(i, j));
    return std::sqrt(sum);
}

// Zero the (p,q) entry of a Hermitian matrix with the unitary J = P * R,
// where P = diag(e^{i theta}, 1) absorbs the phase of a_pq and R is the real
// Jacobi rotation for the resulting symmetric 2x2 block.
void jacobi_rotate(ComplexMatrix& a, int p, int q) {
    const cd apq = a.at(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cd phase = apq / r;  // e^{i theta}

    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const cd jpp = phase * c;
    const cd jpq = phase * s;
    const cd jqp = -s;
    const cd jqq = c;

    const int n = a.dim();
    // A <- J^dagger A (rows p and q)
    for (int j = 0; j < n; ++j) {
        const cd ap = a.at(p, j);
        const cd aq = a.at(q, j);
        a.at(p, j) = std::conj(jpp) * ap + std::conj(jqp) * aq;
        a.at(q, j) = std::conj(jpq) * ap + std::conj(jqq) * aq;
    }
    // A <- A J (columns p and q)
    for (int i = 0; i < n; ++i) {
        const cd ap = a.at(i, p);
        const cd aq = a.at(i, q);
        a.at(i, p) = ap * jpp + aq * jqp;
        a.at(i, q) = ap * jpq + aq * jqq;
    }
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!is_hermitian(m, 1e-10)) {
        throw NotHermitianError("hermitian_eigenvalues: input is not Hermitian to 1e-10");
    }
    ComplexMatrix a = m;
    // Symmetrize exactly so rounding in the input cannot bias the sweep.
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = i + 1; j < a.dim(); ++j) {
            const cd avg = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = avg;
            a.at(j, i) = std::conj(avg);
        }
        a.at(i, i) = a.at(i, i).real();
    }

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_diagonal_frobenius(a) >= 1e-14 && sweep < kMaxSweeps) {
        for (int p = 0; p < a.dim(); ++p)
            for (int q = p + 1; q < a.dim(); ++q) jacobi_rotate(a, p, q);
        ++sweep;
    }
    if (sweep == kMaxSweeps) {
        throw std::logic_error("hermitian_eigenvalues: Jacobi sweep did not converge");
    }

    std::vector<double> eig(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) eig[static_cast<std::size_t>(i)] = a.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

int hermitian_rank(const ComplexMatrix& m, double tol) {
    int rank = 0;
    for (double lambda : hermitian_eigenvalues(m)) {
        if (std::abs(lambda) > tol) ++rank;
    }
    return rank;
}

}  // namespace jones3
