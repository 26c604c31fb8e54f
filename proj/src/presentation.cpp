#include "mcheck/presentation.hpp"

namespace mcheck {

std::string VarietyPresentation::p_symbol(int j) const {
    return p_count == 1 ? "p" : "p" + std::to_string(j + 1);
}

std::string VarietyPresentation::q_symbol(int t) const {
    return "q" + std::to_string(t + 1);
}

std::string VarietyPresentation::equation_text(const Equation& eq) const {
    std::string out = p_symbol(eq.p_index) + "(";
    for (std::size_t t = 0; t < eq.args.size(); ++t) {
        if (t) out += ",";
        out += "x" + std::to_string(eq.args[t].index);
    }
    out += ") = ";
    if (eq.rhs_is_q) {
        out += q_symbol(eq.rhs_index) + "(";
        for (int a = 1; a <= q_arity; ++a) {
            if (a > 1) out += ",";
            out += "x" + std::to_string(a);
        }
        out += ")";
    } else {
        out += "x" + std::to_string(eq.rhs_index);
    }
    return out;
}

std::string VarietyPresentation::to_string() const {
    std::string out;
    for (const Equation& eq : equations) {
        out += equation_text(eq);
        out += "\n";
    }
    return out;
}

VarietyPresentation presentation(const ExtendedMatrix& m) {
    VarietyPresentation p;
    p.p_count = m.right_cols();
    p.p_arity = m.left_cols();
    p.q_count = m.total_var_bound() - m.left_var_bound();
    p.q_arity = m.left_var_bound();
    p.equations.reserve(static_cast<std::size_t>(m.rows()) * m.right_cols());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<Variable> args;
        args.reserve(m.left_cols());
        for (int j = 0; j < m.left_cols(); ++j) args.push_back(m.left(i, j));
        for (int j = 0; j < m.right_cols(); ++j) {
            Equation eq;
            eq.p_index = j;
            eq.args = args;
            const int a = m.right(i, j).index;
            if (a <= m.left_var_bound()) {
                eq.rhs_is_q = false;
                eq.rhs_index = a;
            } else {
                eq.rhs_is_q = true;
                eq.rhs_index = a - m.left_var_bound() - 1;
            }
            p.equations.push_back(std::move(eq));
        }
    }
    return p;
}

}  // namespace mcheck
