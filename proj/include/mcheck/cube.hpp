#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcheck/matrix.hpp"
#include "mcheck/presentation.hpp"

namespace mcheck {

/// A truth table {0,1}^arity -> {0,1}. Inputs index the table read as a
/// big-endian binary number, so table[0] is the value on all zeros.
struct BooleanOperation {
    std::string symbol;
    int arity = 0;
    std::vector<std::uint8_t> table;  // size 1 << arity

    std::uint8_t eval(const std::vector<int>& args) const;
    friend bool operator==(const BooleanOperation&, const BooleanOperation&) = default;
};

/// Operations matching a presentation's symbol list: the m-ary p's first,
/// then the l-ary q's.
struct TwoElementAlgebra {
    std::vector<BooleanOperation> ops;
};

/// The arity-ary relation {0,1}^arity minus the all-zero tuple.
struct CubeRelation {
    int arity = 2;
    /// All members, ascending as big-endian numbers (cardinality 2^arity - 1).
    std::vector<std::vector<int>> members() const;
    bool contains(const std::vector<int>& t) const;
};

/// Rows i_1..i_{n'} (0-based, repetition allowed) such that no left column
/// agrees with the right column on all of them.
struct RowWitness {
    std::vector<int> rows;
};

struct CoverEntry {
    std::vector<int> rows;  // 0-based row tuple, ascending scan order
    int column = 0;         // least left column covering it
};

struct CubeSimpleResult {
    bool holds = false;
    RowWitness witness;              // set when holds
    std::vector<CoverEntry> cover;   // set when fails: one entry per row tuple
    long long comparisons = 0;       // instrumented entry comparisons
};

/// Row-cover test deciding whether a simple matrix condition forces the
/// n'-cube condition: holds iff some n'-tuple of rows has no left column j
/// with x_{i_a j} = y_{i_a} for every a. Scans row tuples ascending and
/// returns the first witness; on failure returns the full cover table.
/// The comparison count is bounded by n' * m * n^{n'}.
CubeSimpleResult implies_cube_simple(const ExtendedMatrix& m, int n_prime);

/// The instrumented comparison count of the row-cover test.
long long comparison_count(const ExtendedMatrix& m, int n_prime);

/// Checks a holds-witness: no left column covers the given rows.
bool check_row_witness(const ExtendedMatrix& m, const RowWitness& w);

/// Checks a fails-witness: the table lists every row tuple once, in scan
/// order, each with a genuinely covering column.
bool check_cover_table(const ExtendedMatrix& m, int n_prime,
                       const std::vector<CoverEntry>& cover);

/// When the row-cover test fails, builds the canonical operation p with
/// p(b) = 0 iff b is the left part of some row interpreted into {0,1} with
/// the right entry sent to 0. The result satisfies the matrix's
/// presentation and preserves CubeRelation{n'}; calling this when the
/// implication holds throws std::logic_error.
BooleanOperation build_counterexample_algebra(const ExtendedMatrix& m, int n_prime);

/// True iff every equation holds under every assignment {x_1..x_l} -> {0,1}.
/// Throws std::invalid_argument when the operation list does not match the
/// presentation's symbols and arities.
bool algebra_satisfies(const TwoElementAlgebra& a, const VarietyPresentation& p);

/// True iff applying op componentwise to members of r always lands in r.
/// Decided on the zero set: op fails exactly when some r.arity-tuple of
/// zero inputs (repetition allowed) shares no coordinate at which all are
/// zero. preserves_direct() enumerates members instead; the two agree.
bool preserves(const BooleanOperation& op, const CubeRelation& r);
bool preserves_direct(const BooleanOperation& op, const CubeRelation& r);

enum class SearchOutcome { Holds, Fails, Undecided };

struct CubeGeneralResult {
    SearchOutcome outcome = SearchOutcome::Holds;
    std::optional<TwoElementAlgebra> witness;  // set when Fails
    long long nodes = 0;                       // decisions explored
};

/// Two-element-algebra oracle for general matrices: the implication to the
/// n'-cube condition holds iff no operations on {0,1} satisfy the matrix's
/// presentation while preserving CubeRelation{n'}. Complete backtracking
/// over table entries (operations in symbol order, inputs ascending, 0
/// before 1) with equation-derived entry propagation and zero-set pruning;
/// a found witness is the first in that order. Exceeding the node cap
/// yields Undecided, never a verdict.
CubeGeneralResult implies_cube_general(const ExtendedMatrix& m, int n_prime,
                                       long long node_cap = 10'000'000);

struct FamilyCubeResult {
    bool holds = false;
    std::optional<int> member;  // least index whose condition suffices
    std::vector<CubeSimpleResult> member_results;
    std::optional<CubeSimpleResult> intersection_result;
    bool consistent = true;     // disjunction agrees with the intersection
};

/// Disjunction test over a family of simple matrices, cross-checked against
/// the row-cover test on their intersection (the two must agree; the empty
/// family fails). All members must be simple.
FamilyCubeResult implies_cube_family(const std::vector<ExtendedMatrix>& ms, int n_prime);

}  // namespace mcheck
