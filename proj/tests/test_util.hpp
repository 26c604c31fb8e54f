#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "mcheck/cube.hpp"
#include "mcheck/matrix.hpp"
#include "mcheck/partition.hpp"

// Independent oracles and matrix transformations shared by the tests. The
// oracles deliberately take the dumbest possible route so they cannot share
// a bug with the library paths they check.
namespace test_util {

using namespace mcheck;

inline ExtendedMatrix simple_matrix(std::vector<std::vector<int>> left, std::vector<int> right,
                                    std::optional<int> k = std::nullopt) {
    MatrixData d;
    for (auto& row : left) {
        std::vector<Variable> r;
        for (int a : row) r.push_back(Variable{a});
        d.left.push_back(std::move(r));
    }
    for (int a : right) d.right.push_back({Variable{a}});
    d.left_var_bound = k;
    d.total_var_bound = k;
    return validate(d);
}

inline ExtendedMatrix general_matrix(std::vector<std::vector<int>> left,
                                     std::vector<std::vector<int>> right,
                                     std::optional<int> l = std::nullopt,
                                     std::optional<int> k = std::nullopt) {
    MatrixData d;
    for (auto& row : left) {
        std::vector<Variable> r;
        for (int a : row) r.push_back(Variable{a});
        d.left.push_back(std::move(r));
    }
    for (auto& row : right) {
        std::vector<Variable> r;
        for (int a : row) r.push_back(Variable{a});
        d.right.push_back(std::move(r));
    }
    d.left_var_bound = l;
    d.total_var_bound = k;
    return validate(d);
}

inline MatrixData to_data(const ExtendedMatrix& m) {
    MatrixData d;
    d.left.assign(m.rows(), {});
    d.right.assign(m.rows(), {});
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.left_cols(); ++j) d.left[i].push_back(m.left(i, j));
        for (int j = 0; j < m.right_cols(); ++j) d.right[i].push_back(m.right(i, j));
    }
    d.left_var_bound = m.left_var_bound();
    d.total_var_bound = m.total_var_bound();
    return d;
}

inline ExtendedMatrix permute_rows(const ExtendedMatrix& m, const std::vector<int>& perm) {
    MatrixData d = to_data(m);
    MatrixData out = d;
    for (int i = 0; i < m.rows(); ++i) {
        out.left[i] = d.left[perm[i]];
        out.right[i] = d.right[perm[i]];
    }
    return validate(out);
}

inline ExtendedMatrix permute_left_columns(const ExtendedMatrix& m, const std::vector<int>& perm) {
    MatrixData d = to_data(m);
    MatrixData out = d;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.left_cols(); ++j) out.left[i][j] = d.left[i][perm[j]];
    return validate(out);
}

// image[a-1] is the new index of x_a; must be a bijection on 1..k.
inline ExtendedMatrix rename_vars(const ExtendedMatrix& m, const std::vector<int>& image) {
    MatrixData d = to_data(m);
    for (auto& row : d.left)
        for (Variable& v : row) v.index = image[v.index - 1];
    for (auto& row : d.right)
        for (Variable& v : row) v.index = image[v.index - 1];
    return validate(d);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    return perm;
}

// Row-cover oracle: literal quantifier nest straight off the matrix.
inline bool naive_implies_cube_simple(const ExtendedMatrix& m, int n_prime) {
    std::vector<int> tuple(n_prime, 0);
    while (true) {
        bool some_column_covers = false;
        for (int j = 0; j < m.left_cols() && !some_column_covers; ++j) {
            bool covers = true;
            for (int a = 0; a < n_prime; ++a)
                if (m.left(tuple[a], j).index != m.right(tuple[a], 0).index) covers = false;
            some_column_covers = covers;
        }
        if (!some_column_covers) return true;
        int pos = n_prime - 1;
        while (pos >= 0 && tuple[pos] == m.rows() - 1) tuple[pos--] = 0;
        if (pos < 0) return false;
        ++tuple[pos];
    }
}

// Compatibility oracle: apply the operation to every tuple of relation
// members and test membership of the image.
inline bool naive_preserves(const BooleanOperation& op, int n_prime) {
    const CubeRelation r{n_prime};
    const auto members = r.members();
    std::vector<std::size_t> pick(op.arity, 0);
    while (true) {
        std::vector<int> image(n_prime);
        for (int a = 0; a < n_prime; ++a) {
            std::vector<int> args(op.arity);
            for (int t = 0; t < op.arity; ++t) args[t] = members[pick[t]][a];
            image[a] = op.eval(args);
        }
        if (!r.contains(image)) return false;
        int pos = op.arity - 1;
        while (pos >= 0 && pick[pos] == members.size() - 1) pick[pos--] = 0;
        if (pos < 0) return true;
        ++pick[pos];
    }
}

// Join oracle: close the union of the two relations transitively over the
// full relation matrix, then rebuild a partition from the closed relation.
inline Partition closure_join(const Partition& p, const Partition& q) {
    const int n = p.size();
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rel[x][y] = p.same_block(x, y) || q.same_block(x, y);
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (rel[x][w] && rel[w][y]) rel[x][y] = 1;
    Partition out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rel[x][y]) out.merge(x, y);
    return out;
}

// All partitions of {0..n-1} via restricted growth strings.
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> label(n, 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            Partition p(n);
            for (int x = 1; x < n; ++x)
                for (int y = 0; y < x; ++y)
                    if (label[x] == label[y]) p.merge(x, y);
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            label[i] = b;
            rec(i + 1, std::max(max_used, b));
        }
    };
    if (n > 0)
        rec(1, 0);
    else
        out.emplace_back(0);
    return out;
}

// refines(a, b): every block of a sits inside a block of b.
inline bool refines(const Partition& a, const Partition& b) {
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.same_block(x, y) && !b.same_block(x, y)) return false;
    return true;
}

inline BooleanOperation from_formula(const std::string& symbol, int arity,
                                     const std::function<int(const std::vector<int>&)>& f) {
    BooleanOperation op;
    op.symbol = symbol;
    op.arity = arity;
    op.table.resize(std::size_t{1} << arity);
    for (std::size_t e = 0; e < op.table.size(); ++e) {
        std::vector<int> args(arity);
        for (int t = 0; t < arity; ++t) args[t] = e >> (arity - 1 - t) & 1;
        op.table[e] = static_cast<std::uint8_t>(f(args) & 1);
    }
    return op;
}

}  // namespace test_util
