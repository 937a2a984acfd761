#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace jones3 {

using cd = std::complex<double>;

struct DimMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense square complex matrix, row-major, dimensions 1..16.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    cd& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cd& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    bool operator==(const ComplexMatrix&) const = default;

  private:
    int dim_ = 0;
    std::vector<cd> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cd scale, const ComplexMatrix& m);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
cd standard_trace(const ComplexMatrix& m);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-12);

// All real eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi with
// complex rotations; converged when the off-diagonal Frobenius mass drops
// below 1e-14. Throws NotHermitianError if the input fails the 1e-10 check.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Number of eigenvalues with |lambda| > tol.
int hermitian_rank(const ComplexMatrix& m, double tol = 1e-9);

}  // namespace jones3
