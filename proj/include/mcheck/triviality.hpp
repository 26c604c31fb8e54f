#pragma once

#include <vector>

#include "mcheck/matrix.hpp"

namespace mcheck {

/// For a pair of rows (i, i'), a pair of left columns (j, j') such that
/// x_{ij} = y_i, x_{i'j'} = y_{i'}, and j is related to j' by the join of
/// the two row kernels. Indices 0-based.
struct RowPairWitness {
    int row_a = 0;
    int row_b = 0;
    int col_a = 0;
    int col_b = 0;
};

struct TrivialityResult {
    bool trivial = false;
    // When trivial: a pair of rows admitting no witness columns.
    int bad_row_a = -1;
    int bad_row_b = -1;
    // When non-trivial: the least witness per ordered pair of rows,
    // pairs enumerated (0,0), (0,1), ..., (n-1,n-1).
    std::vector<RowPairWitness> witnesses;
};

/// Decides whether the matrix condition collapses every category satisfying
/// it to a preorder. The matrix is trivial iff its left part is empty or
/// some pair of rows (i, i') has no left columns j, j' with x_{ij} = y_i,
/// x_{i'j'} = y_{i'} and j, j' related in the joined row kernels. Requires a
/// simple matrix.
TrivialityResult is_trivial(const ExtendedMatrix& m);

/// Re-checks a non-trivial verdict's witness table against the matrix.
bool check_triviality_witness(const ExtendedMatrix& m, const TrivialityResult& r);

}  // namespace mcheck
