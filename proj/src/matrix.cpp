#include "mcheck/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace mcheck {

namespace {

// Guard against grids that would not fit in memory anyway.
constexpr long long kMaxCells = 1 << 24;

void check_rectangular(const std::vector<std::vector<Variable>>& grid,
                       std::size_t width, const char* part) {
    for (const auto& row : grid) {
        if (row.size() != width)
            throw std::invalid_argument(std::string("ragged ") + part +
                                        " part: rows have unequal lengths");
    }
}

}  // namespace

std::vector<int> ExtendedMatrix::right_column() const {
    std::vector<int> col(rows());
    for (int i = 0; i < rows(); ++i) col[i] = right_[i][0].index;
    return col;
}

std::vector<int> ExtendedMatrix::left_column(int j) const {
    std::vector<int> col(rows());
    for (int i = 0; i < rows(); ++i) col[i] = left_[i][j].index;
    return col;
}

ExtendedMatrix validate(const MatrixData& raw) {
    const auto n = raw.left.size();
    if (n == 0) throw std::invalid_argument("matrix needs at least one row (n >= 1)");
    if (raw.right.size() != n)
        throw std::invalid_argument("left and right parts disagree on the row count");

    const auto m = raw.left.front().size();
    const auto m_prime = raw.right.front().size();
    check_rectangular(raw.left, m, "left");
    check_rectangular(raw.right, m_prime, "right");
    if (static_cast<long long>(n) * static_cast<long long>(m + m_prime) > kMaxCells)
        throw std::invalid_argument("matrix too large");

    for (const auto& row : raw.left)
        for (Variable v : row)
            if (v.index < 1) throw std::invalid_argument("variable index must be >= 1");
    for (const auto& row : raw.right)
        for (Variable v : row)
            if (v.index < 1) throw std::invalid_argument("variable index must be >= 1");

    int l = 0;
    int k = 0;
    if (raw.left_var_bound.has_value() != raw.total_var_bound.has_value())
        throw std::invalid_argument("declare both l and k or neither");

    if (raw.left_var_bound) {
        l = *raw.left_var_bound;
        k = *raw.total_var_bound;
        if (l < 0 || k < l)
            throw std::invalid_argument("variable bounds must satisfy k >= l >= 0");
        for (const auto& row : raw.left)
            for (Variable v : row)
                if (v.index > l)
                    throw std::invalid_argument("left entry x" + std::to_string(v.index) +
                                                " exceeds the declared bound l=" + std::to_string(l));
        for (const auto& row : raw.right)
            for (Variable v : row)
                if (v.index > k)
                    throw std::invalid_argument("right entry x" + std::to_string(v.index) +
                                                " exceeds the declared bound k=" + std::to_string(k));
    } else {
        // Inference is only defined when the shorthand conventions hold:
        // m + m' > 0, the left entries are exactly {x_1..x_l}, and the right
        // entries fill {x_(l+1)..x_k} with no gaps.
        if (m + m_prime == 0)
            throw std::invalid_argument(
                "cannot infer l and k for a matrix with no columns; declare them explicitly");
        std::set<int> left_seen, right_seen;
        for (const auto& row : raw.left)
            for (Variable v : row) left_seen.insert(v.index);
        for (const auto& row : raw.right)
            for (Variable v : row) right_seen.insert(v.index);
        l = left_seen.empty() ? 0 : *left_seen.rbegin();
        for (int a = 1; a <= l; ++a)
            if (!left_seen.count(a))
                throw std::invalid_argument(
                    "cannot infer l: variable x" + std::to_string(a) +
                    " does not occur in the left part; declare l and k explicitly");
        k = l;
        if (!right_seen.empty()) k = std::max(k, *right_seen.rbegin());
        for (int a = l + 1; a <= k; ++a)
            if (!right_seen.count(a))
                throw std::invalid_argument(
                    "cannot infer k: variable x" + std::to_string(a) +
                    " does not occur in the right part; declare l and k explicitly");
    }

    ExtendedMatrix out;
    out.left_ = raw.left;
    out.right_ = raw.right;
    out.m_ = static_cast<int>(m);
    out.m_prime_ = static_cast<int>(m_prime);
    out.l_ = l;
    out.k_ = k;
    return out;
}

namespace {

MatrixData grid(const std::vector<std::vector<int>>& left,
                const std::vector<std::vector<int>>& right,
                std::optional<int> l = std::nullopt, std::optional<int> k = std::nullopt) {
    MatrixData d;
    d.left.reserve(left.size());
    for (auto& row : left) {
        std::vector<Variable> r;
        r.reserve(row.size());
        for (int a : row) r.push_back(Variable{a});
        d.left.push_back(std::move(r));
    }
    for (auto& row : right) {
        std::vector<Variable> r;
        r.reserve(row.size());
        for (int a : row) r.push_back(Variable{a});
        d.right.push_back(std::move(r));
    }
    d.left_var_bound = l;
    d.total_var_bound = k;
    return d;
}

}  // namespace

ExtendedMatrix make_mal() {
    return validate(grid({{1, 2, 2}, {1, 1, 2}}, {{1}, {2}}));
}

ExtendedMatrix make_perm(int r) {
    if (r < 2) throw std::invalid_argument("perm needs r >= 2");
    // Right part of row 1: x1 x3 x4 ... xr; of row 2: x3 x4 ... xr x2.
    std::vector<int> top{1}, bottom;
    for (int a = 3; a <= r; ++a) top.push_back(a);
    for (int a = 3; a <= r; ++a) bottom.push_back(a);
    bottom.push_back(2);
    return validate(grid({{1, 2, 2}, {1, 1, 2}}, {top, bottom}, 2, r));
}

ExtendedMatrix make_ari() {
    return validate(grid({{1, 2, 2}, {1, 1, 2}, {1, 2, 1}}, {{1}, {2}, {1}}));
}

ExtendedMatrix make_maj() {
    return validate(grid({{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}, {{1}, {1}, {1}}));
}

ExtendedMatrix make_cube(int n, int k) {
    if (n < 2 || k < 2) throw std::invalid_argument("cube needs n >= 2 and k >= 2");
    long long cols = 1;
    for (int i = 0; i < n; ++i) {
        cols *= k;
        if (cols > kMaxCells) throw std::invalid_argument("cube parameters too large");
    }
    // Left columns: all n-tuples over {x_1..x_k} except the all-x1 tuple,
    // ascending lexicographically; right column: the all-x1 tuple.
    std::vector<std::vector<int>> left(n), right(n, std::vector<int>{1});
    std::vector<int> tuple(n, 1);
    for (long long c = 1; c < cols; ++c) {
        int pos = n - 1;
        while (tuple[pos] == k) tuple[pos--] = 1;
        ++tuple[pos];
        for (int i = 0; i < n; ++i) left[i].push_back(tuple[i]);
    }
    return validate(grid(left, right));
}

ExtendedMatrix make_edge(int n) {
    if (n < 2) throw std::invalid_argument("edge needs n >= 2");
    // x2 at (1,1), (2,1) and (i, i+1) for i in 1..n (1-based), x1 elsewhere.
    std::vector<std::vector<int>> left(n, std::vector<int>(n + 1, 1));
    std::vector<std::vector<int>> right(n, std::vector<int>{1});
    left[0][0] = 2;
    left[1][0] = 2;
    for (int i = 0; i < n; ++i) left[i][i + 1] = 2;
    return validate(grid(left, right));
}

ExtendedMatrix make_family(const std::string& name, int r, int n, int k) {
    if (name == "mal") return make_mal();
    if (name == "perm") return make_perm(r);
    if (name == "ari") return make_ari();
    if (name == "maj") return make_maj();
    if (name == "cube") return make_cube(n, k);
    if (name == "edge") return make_edge(n);
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::optional<int> cube_instance_rows(const ExtendedMatrix& m) {
    if (m == make_mal()) return 2;
    if (!m.simple() || m.rows() < 2 || m.total_var_bound() < 2) return std::nullopt;
    long long cols = 1;
    for (int i = 0; i < m.rows(); ++i) {
        cols *= m.total_var_bound();
        if (cols > kMaxCells) return std::nullopt;
    }
    if (m.left_cols() != cols - 1) return std::nullopt;
    if (m == make_cube(m.rows(), m.total_var_bound())) return m.rows();
    return std::nullopt;
}

ExtendedMatrix intersect(const ExtendedMatrix& m1, const ExtendedMatrix& m2) {
    if (!m1.simple() || !m2.simple())
        throw std::invalid_argument("intersect requires simple matrices");
    const int n1 = m1.rows(), n2 = m2.rows();
    const int c1 = m1.left_cols(), c2 = m2.left_cols();
    if (static_cast<long long>(c1) * c2 * (n1 + n2) > kMaxCells)
        throw std::invalid_argument("intersection too large");

    MatrixData d;
    d.left.assign(n1 + n2, {});
    d.right.assign(n1 + n2, {});
    for (int j1 = 0; j1 < c1; ++j1)
        for (int j2 = 0; j2 < c2; ++j2) {
            for (int i = 0; i < n1; ++i) d.left[i].push_back(m1.left(i, j1));
            for (int i = 0; i < n2; ++i) d.left[n1 + i].push_back(m2.left(i, j2));
        }
    for (int i = 0; i < n1; ++i) d.right[i].push_back(m1.right(i, 0));
    for (int i = 0; i < n2; ++i) d.right[n1 + i].push_back(m2.right(i, 0));
    const int k = std::max(m1.total_var_bound(), m2.total_var_bound());
    d.left_var_bound = k;
    d.total_var_bound = k;
    return validate(d);
}

InterpretedRow interpret_row(const ExtendedMatrix& m, int i, const Interpretation& f) {
    if (i < 0 || i >= m.rows()) throw std::out_of_range("row index out of range");
    if (static_cast<int>(f.values.size()) < m.total_var_bound())
        throw std::invalid_argument("interpretation is not total on x_1..x_k");
    InterpretedRow out;
    out.left.reserve(m.left_cols());
    out.right.reserve(m.right_cols());
    for (int j = 0; j < m.left_cols(); ++j) out.left.push_back(f(m.left(i, j)));
    for (int j = 0; j < m.right_cols(); ++j) out.right.push_back(f(m.right(i, j)));
    return out;
}

}  // namespace mcheck
