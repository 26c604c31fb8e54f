#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mcheck/matrix.hpp"

namespace mcheck {

/// One derivation step: the added column together with the matrix rows and
/// interpretations that produced it. rows[a] is the 0-based row of the left
/// matrix interpreted in position a; interpretations[a] lists the values
/// assigned to x_1..x_{k1}, each in 1..k2.
struct SaturationStep {
    std::vector<int> column;
    std::vector<int> rows;
    std::vector<std::vector<int>> interpretations;
};

/// Result of running the column-set closure: initial columns, derivation
/// log, final set, and whether the target (the right column of the right
/// matrix) was reached.
struct SaturationState {
    std::vector<std::vector<int>> initial_columns;  // deduplicated, ascending
    std::set<std::vector<int>> columns;             // final closed set
    std::vector<SaturationStep> log;
    std::vector<int> target;
    bool reached_target = false;
};

enum class LexCase {
    LeftEmpty,     // m1 = 0: the left condition is trivial, implication holds
    LeftTrivial,   // m1 > 0 and the left matrix is trivial: holds iff m2 > 0
    RightTrivial,  // left non-trivial, right trivial: fails
    Saturation,    // both non-trivial: decided by the closure
};

struct LexResult {
    bool holds = false;
    LexCase situation = LexCase::Saturation;
    std::optional<SaturationState> saturation;
};

struct LexOptions {
    /// Keep closing after the target column is derived (diagnostics).
    bool full_saturation = false;
    /// Test hook: permute the candidate and row-tuple scan order. The final
    /// column set must not depend on it.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Decides whether every finitely complete category satisfying the first
/// matrix condition satisfies the second. Requires both matrices simple.
///
/// Degenerate cases are resolved first (see LexCase); otherwise the left
/// column set of m2 is closed under right columns of n2 x (m1+1) matrices
/// whose rows are interpretations of rows of m1 into {x_1..x_{k2}} and whose
/// left columns all lie in the current set, and the implication holds iff
/// the right column of m2 ends up in the closure.
LexResult implies_lex(const ExtendedMatrix& m1, const ExtendedMatrix& m2,
                      const LexOptions& options = {});

/// Runs the closure itself. Both matrices must be simple and non-trivial.
/// The scan is deterministic: absent candidate columns in ascending
/// lexicographic order, then row tuples ascending, then interpretation
/// tuples ascending on their value tables; the scan restarts from the least
/// absent candidate after every addition.
SaturationState saturate(const ExtendedMatrix& m1, const ExtendedMatrix& m2,
                         const LexOptions& options = {});

/// Replays a derivation log from scratch and checks every step: left
/// columns present at the time, derived column absent, rows and
/// interpretations actually producing it. Returns false on any mismatch,
/// including a reached_target flag not matching the final set.
bool replay_saturation(const ExtendedMatrix& m1, const ExtendedMatrix& m2,
                       const SaturationState& state);

}  // namespace mcheck
