#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace mcheck {

/// A variable symbol x_a, identified by its 1-based index a.
struct Variable {
    int index = 1;
    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Raw matrix data prior to validation. The variable bounds l and k may be
/// omitted, in which case validate() infers them from the entries (this is
/// only legal when the entries determine the bounds without gaps, see
/// validate()).
struct MatrixData {
    std::vector<std::vector<Variable>> left;   // n rows of m entries
    std::vector<std::vector<Variable>> right;  // n rows of m' entries
    std::optional<int> left_var_bound;         // l
    std::optional<int> total_var_bound;        // k
};

/// An n x (m + m') grid of variables together with its parameters.
///
/// Left entries are drawn from {x_1,...,x_l}, right entries from
/// {x_1,...,x_k}, with k >= l >= 0 and n >= 1. Instances are immutable and
/// only constructed through validate(), so holding an ExtendedMatrix is
/// proof that the parameter invariants hold. Row and column arguments are
/// 0-based throughout the API; serialized forms are 1-based.
class ExtendedMatrix {
public:
    int rows() const { return static_cast<int>(left_.size()); }
    int left_cols() const { return m_; }
    int right_cols() const { return m_prime_; }
    int left_var_bound() const { return l_; }
    int total_var_bound() const { return k_; }

    Variable left(int i, int j) const { return left_[i][j]; }
    Variable right(int i, int j) const { return right_[i][j]; }

    /// m' = 1 and k = l: the class of matrices whose condition makes sense
    /// without existential variables.
    bool simple() const { return m_prime_ == 1 && k_ == l_; }

    /// The single right column as a tuple of variable indices (simple only).
    std::vector<int> right_column() const;
    /// Left column j as a tuple of variable indices.
    std::vector<int> left_column(int j) const;

    friend bool operator==(const ExtendedMatrix&, const ExtendedMatrix&) = default;

private:
    ExtendedMatrix() = default;
    friend ExtendedMatrix validate(const MatrixData&);

    std::vector<std::vector<Variable>> left_;
    std::vector<std::vector<Variable>> right_;
    int m_ = 0;
    int m_prime_ = 0;
    int l_ = 0;
    int k_ = 0;
};

/// Checks the grid against the declared parameters and returns the validated
/// matrix. When both bounds are omitted they are inferred: l is the largest
/// left index, k extends it by the right indices, and the inference is
/// rejected unless m + m' > 0 and every index up to the bound actually
/// occurs. Throws std::invalid_argument on any violation.
ExtendedMatrix validate(const MatrixData& raw);

// Built-in families. Each returns the exact display, parameters included.
ExtendedMatrix make_mal();
ExtendedMatrix make_perm(int r);    // r >= 2; make_perm(2) == make_mal()
ExtendedMatrix make_ari();
ExtendedMatrix make_maj();
ExtendedMatrix make_cube(int n, int k = 2);  // n, k >= 2
ExtendedMatrix make_edge(int n);    // n >= 2

/// Dispatch by lowercase family name ("mal", "perm", "ari", "maj", "cube",
/// "edge"); unused parameters are ignored.
ExtendedMatrix make_family(const std::string& name, int r, int n, int k);

/// If m equals make_mal() or make_cube(n', k') exactly, returns n'.
std::optional<int> cube_instance_rows(const ExtendedMatrix& m);

/// Combines two simple matrices into one whose condition is the conjunction
/// of theirs: n = n1 + n2 rows, one left column per pair (j1, j2) of left
/// columns stacked j1-over-j2, pairs ordered lexicographically with j1
/// major, right columns stacked, k = l = max(k1, k2).
ExtendedMatrix intersect(const ExtendedMatrix& m1, const ExtendedMatrix& m2);

/// A total assignment of values to the variables x_1..x_k.
struct Interpretation {
    std::vector<int> values;  // values[a-1] is the value of x_a

    int operator()(Variable v) const { return values[v.index - 1]; }
    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;
};

struct InterpretedRow {
    std::vector<int> left;
    std::vector<int> right;
    friend bool operator==(const InterpretedRow&, const InterpretedRow&) = default;
};

/// Applies f to the entries of row i (0-based): (f(x_i1),...,f(x_im) |
/// f(y_i1),...,f(y_im')). Throws std::out_of_range on a bad row index and
/// std::invalid_argument if f is not total on x_1..x_k.
InterpretedRow interpret_row(const ExtendedMatrix& m, int i, const Interpretation& f);

}  // namespace mcheck
