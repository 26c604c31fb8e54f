#pragma once

#include <string>
#include <vector>

#include "mcheck/matrix.hpp"

namespace mcheck {

/// One defining equation: p_j applied to a left row equals either a plain
/// variable x_a (a <= l) or the term q_t(x_1,...,x_l).
struct Equation {
    int p_index = 0;                  // 0-based index into the p symbols
    std::vector<Variable> args;      // the left entries of the row
    bool rhs_is_q = false;
    int rhs_index = 0;               // variable index a, or 0-based q index

    friend bool operator==(const Equation&, const Equation&) = default;
};

/// Equational presentation of the generic variety attached to a matrix:
/// m-ary symbols p_1..p_{m'}, l-ary symbols q_1..q_{k-l}, and one equation
/// per (row, right column) pair.
struct VarietyPresentation {
    int p_count = 0;
    int p_arity = 0;
    int q_count = 0;
    int q_arity = 0;
    std::vector<Equation> equations;

    std::string p_symbol(int j) const;  // "p" when there is a single one
    std::string q_symbol(int t) const;
    std::string equation_text(const Equation& eq) const;
    std::string to_string() const;      // one equation per line
};

VarietyPresentation presentation(const ExtendedMatrix& m);

}  // namespace mcheck
