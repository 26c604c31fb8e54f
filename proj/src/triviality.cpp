#include "mcheck/triviality.hpp"

#include <stdexcept>

#include "mcheck/partition.hpp"

namespace mcheck {

TrivialityResult is_trivial(const ExtendedMatrix& m) {
    if (!m.simple()) throw std::invalid_argument("is_trivial requires a simple matrix");

    TrivialityResult out;
    if (m.left_cols() == 0) {
        out.trivial = true;
        out.bad_row_a = 0;
        out.bad_row_b = 0;
        return out;
    }

    const int n = m.rows();
    std::vector<Partition> kernels;
    kernels.reserve(n);
    for (int i = 0; i < n; ++i) kernels.push_back(row_kernel(m, i));

    // hits[i] = left columns j with x_{ij} = y_i.
    std::vector<std::vector<int>> hits(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m.left_cols(); ++j)
            if (m.left(i, j) == m.right(i, 0)) hits[i].push_back(j);

    for (int i = 0; i < n; ++i) {
        for (int i2 = 0; i2 < n; ++i2) {
            const Partition joined = join(kernels[i], kernels[i2]);
            bool found = false;
            for (int j : hits[i]) {
                for (int j2 : hits[i2]) {
                    if (joined.same_block(j, j2)) {
                        out.witnesses.push_back(RowPairWitness{i, i2, j, j2});
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) {
                out.trivial = true;
                out.bad_row_a = i;
                out.bad_row_b = i2;
                out.witnesses.clear();
                return out;
            }
        }
    }
    return out;
}

bool check_triviality_witness(const ExtendedMatrix& m, const TrivialityResult& r) {
    if (!m.simple()) return false;
    if (r.trivial) {
        // Confirm the reported pair really has no witness columns.
        const int i = r.bad_row_a, i2 = r.bad_row_b;
        if (m.left_cols() == 0) return true;
        if (i < 0 || i2 < 0 || i >= m.rows() || i2 >= m.rows()) return false;
        const Partition joined = join(row_kernel(m, i), row_kernel(m, i2));
        for (int j = 0; j < m.left_cols(); ++j)
            for (int j2 = 0; j2 < m.left_cols(); ++j2)
                if (m.left(i, j) == m.right(i, 0) && m.left(i2, j2) == m.right(i2, 0) &&
                    joined.same_block(j, j2))
                    return false;
        return true;
    }
    if (static_cast<int>(r.witnesses.size()) != m.rows() * m.rows()) return false;
    std::size_t at = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int i2 = 0; i2 < m.rows(); ++i2) {
            const RowPairWitness& w = r.witnesses[at++];
            if (w.row_a != i || w.row_b != i2) return false;
            if (w.col_a < 0 || w.col_a >= m.left_cols() || w.col_b < 0 ||
                w.col_b >= m.left_cols())
                return false;
            if (m.left(i, w.col_a) != m.right(i, 0)) return false;
            if (m.left(i2, w.col_b) != m.right(i2, 0)) return false;
            if (!join(row_kernel(m, i), row_kernel(m, i2)).same_block(w.col_a, w.col_b))
                return false;
        }
    return true;
}

}  // namespace mcheck
