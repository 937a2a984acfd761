#pragma once

#include <string>
#include <vector>

#include "jones3/complex_matrix.hpp"

namespace jones3 {

struct BadSubsetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The four qubits of the sampler circuit: one control, three work qubits.
enum class Qubit : int { Control = 0, Work1 = 1, Work2 = 2, Work3 = 3 };

const char* qubit_name(Qubit q);  // "c", "1", "2", "3"

using QubitList = std::vector<Qubit>;

inline const QubitList& all_qubits() {
    static const QubitList all{Qubit::Control, Qubit::Work1, Qubit::Work2, Qubit::Work3};
    return all;
}

QubitList complement(const QubitList& all, const QubitList& part);

/// Nonempty proper subset of a register plus its complement.
struct Bipartition {
    QubitList part_m;
    QubitList part_n;
};

Bipartition bipartition_of(const QubitList& all, const QubitList& part_m);

// Hermitian, unit-trace, positive-semidefinite matrix over labeled qubits.
// Label order is big-endian: the first label is the most significant basis
// bit, so on (c,1,2,3) the state |c q1 q2 q3> has index 8c + 4q1 + 2q2 + q3.
class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix m, QubitList labels);

    const ComplexMatrix& matrix() const { return m_; }
    const QubitList& labels() const { return labels_; }
    int num_qubits() const { return static_cast<int>(labels_.size()); }

  private:
    ComplexMatrix m_;
    QubitList labels_;
};

// Reduced state on the labels not in `over`; trace preserved.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitList& over);

// Transpose of the `over` tensor factor:
//   <i_M j_N| result |k_M l_N> = <k_M j_N| rho |i_M l_N>.
// Hermitian and trace preserving, but not necessarily positive.
ComplexMatrix partial_transpose(const DensityMatrix& rho, const QubitList& over);

}  // namespace jones3
