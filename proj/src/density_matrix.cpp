#include "jones3/density_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace jones3 {

const char* qubit_name(Qubit q) {
    switch (q) {
        case Qubit::Control: return "c";
        case Qubit::Work1: return "1";
        case Qubit::Work2: return "2";
        case Qubit::Work3: return "3";
    }
    return "?";
}

QubitList complement(const QubitList& all, const QubitList& part) {
    QubitList rest;
    for (Qubit q : all) {
        if (std::find(part.begin(), part.end(), q) == part.end()) rest.push_back(q);
    }
    return rest;
}

Bipartition bipartition_of(const QubitList& all, const QubitList& part_m) {
    if (part_m.empty() || part_m.size() >= all.size()) {
        throw BadSubsetError("bipartition side must be a nonempty proper subset");
    }
    return Bipartition{part_m, complement(all, part_m)};
}

namespace {

// Positions (bit slots, 0 = most significant) of `over` within `labels`.
std::vector<int> subset_positions(const QubitList& labels, const QubitList& over) {
    if (over.empty() || over.size() >= labels.size()) {
        throw BadSubsetError("subset must be nonempty and proper");
    }
    std::vector<int> positions;
    for (Qubit q : over) {
        auto it = std::find(labels.begin(), labels.end(), q);
        if (it == labels.end()) {
            throw BadSubsetError(std::string("label not present: ") + qubit_name(q));
        }
        int pos = static_cast<int>(it - labels.begin());
        if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
            throw BadSubsetError(std::string("duplicate label: ") + qubit_name(q));
        }
        positions.push_back(pos);
    }
    return positions;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, QubitList labels)
    : m_(std::move(m)), labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    if (n < 1 || (1 << n) != m_.dim()) {
        throw DimMismatchError("label count does not match matrix dimension");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw BadSubsetError("duplicate qubit label");

    if (!is_hermitian(m_, 1e-12)) {
        throw std::invalid_argument("density matrix is not Hermitian to 1e-12");
    }
    if (std::abs(standard_trace(m_) - cd(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("density matrix trace differs from 1 by more than 1e-12");
    }
    const std::vector<double> eig = hermitian_eigenvalues(m_);
    if (eig.front() < -1e-10) {
        throw std::invalid_argument("density matrix has eigenvalue below -1e-10");
    }
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitList& over) {
    const int n = rho.num_qubits();
    const std::vector<int> traced = subset_positions(rho.labels(), over);

    std::vector<int> kept;
    QubitList kept_labels;
    for (int pos = 0; pos < n; ++pos) {
        if (std::find(traced.begin(), traced.end(), pos) == traced.end()) {
            kept.push_back(pos);
            kept_labels.push_back(rho.labels()[static_cast<std::size_t>(pos)]);
        }
    }

    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    auto expand = [&](int kept_bits, int traced_bits) {
        int full = 0;
        for (int b = 0; b < nk; ++b) {
            if ((kept_bits >> (nk - 1 - b)) & 1) full |= 1 << (n - 1 - kept[static_cast<std::size_t>(b)]);
        }
        for (int b = 0; b < nt; ++b) {
            if ((traced_bits >> (nt - 1 - b)) & 1)
                full |= 1 << (n - 1 - traced[static_cast<std::size_t>(b)]);
        }
        return full;
    };

    ComplexMatrix out(1 << nk);
    for (int r = 0; r < (1 << nk); ++r)
        for (int c = 0; c < (1 << nk); ++c) {
            cd sum = 0.0;
            for (int t = 0; t < (1 << nt); ++t) {
                sum += rho.matrix().at(expand(r, t), expand(c, t));
            }
            out.at(r, c) = sum;
        }
    return DensityMatrix(std::move(out), std::move(kept_labels));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const QubitList& over) {
    const int n = rho.num_qubits();
    const std::vector<int> swap_pos = subset_positions(rho.labels(), over);

    const int dim = rho.matrix().dim();
    ComplexMatrix out(dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            int rr = r;
            int cc = c;
            for (int pos : swap_pos) {
                const int mask = 1 << (n - 1 - pos);
                const int rb = r & mask;
                const int cb = c & mask;
                rr = (rr & ~mask) | cb;
                cc = (cc & ~mask) | rb;
            }
            out.at(r, c) = rho.matrix().at(rr, cc);
        }
    }
    return out;
}

}  // namespace jones3
