#include "mcheck/lex.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "mcheck/triviality.hpp"

namespace mcheck {

namespace {

constexpr long long kMaxColumnSpace = 1 << 22;

// Ascending odometer over [1..base]^width starting from all-1s.
bool next_tuple(std::vector<int>& t, int base, int low = 1) {
    for (int pos = static_cast<int>(t.size()) - 1; pos >= 0; --pos) {
        if (t[pos] < low + base - 1) {
            ++t[pos];
            std::fill(t.begin() + pos + 1, t.end(), low);
            return true;
        }
    }
    return false;
}

// Does any member of the set extend the given prefix?
bool prefix_in(const std::set<std::vector<int>>& columns, const std::vector<int>& prefix) {
    auto it = columns.lower_bound(prefix);
    if (it == columns.end()) return false;
    return std::equal(prefix.begin(), prefix.end(), it->begin());
}

struct Searcher {
    const ExtendedMatrix& m1;
    int n2;
    int k2;
    const std::set<std::vector<int>>& columns;
    std::vector<std::vector<int>> row_order;  // row tuples in scan order

    // Workspace for one derivation attempt.
    std::vector<int> target;                  // column being derived
    std::vector<std::vector<int>> interp;     // chosen value tables
    std::vector<std::vector<int>> partial;    // partial left columns, [j][a]

    Searcher(const ExtendedMatrix& m1_, int n2_, int k2_,
             const std::set<std::vector<int>>& columns_)
        : m1(m1_), n2(n2_), k2(k2_), columns(columns_) {}

    // Extends interpretations for positions a.. with rows fixed; returns
    // true once every position is filled with all left column prefixes
    // still extendable inside the current column set.
    bool extend(const std::vector<int>& rows, int a) {
        if (a == n2) return true;
        const int k1 = m1.total_var_bound();
        std::vector<int> table(k1, 1);
        const int y = m1.right(rows[a], 0).index;
        do {
            if (table[y - 1] != target[a]) continue;
            bool ok = true;
            for (int j = 0; j < m1.left_cols() && ok; ++j) {
                partial[j].push_back(table[m1.left(rows[a], j).index - 1]);
                if (!prefix_in(columns, partial[j])) ok = false;
            }
            if (ok) {
                interp[a] = table;
                if (extend(rows, a + 1)) return true;
            }
            // Undo the prefixes pushed above (one per column up to the
            // first failing one, or all of them on success-less descent).
            for (int j = 0; j < m1.left_cols(); ++j)
                if (static_cast<int>(partial[j].size()) == a + 1) partial[j].pop_back();
        } while (next_tuple(table, k2));
        return false;
    }

    std::optional<SaturationStep> derive(const std::vector<int>& column) {
        target = column;
        interp.assign(n2, {});
        partial.assign(m1.left_cols(), {});
        for (const std::vector<int>& rows : row_order) {
            if (extend(rows, 0)) {
                SaturationStep step;
                step.column = column;
                step.rows = rows;
                step.interpretations = interp;
                return step;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

SaturationState saturate(const ExtendedMatrix& m1, const ExtendedMatrix& m2,
                         const LexOptions& options) {
    if (!m1.simple() || !m2.simple())
        throw std::invalid_argument("saturation requires simple matrices");
    if (is_trivial(m1).trivial || is_trivial(m2).trivial)
        throw std::invalid_argument("saturation requires non-trivial matrices");

    const int n2 = m2.rows();
    const int k2 = m2.total_var_bound();
    long long space = 1;
    for (int i = 0; i < n2; ++i) {
        space *= k2;
        if (space > kMaxColumnSpace)
            throw std::invalid_argument("column space k2^n2 too large to saturate");
    }

    SaturationState state;
    state.target = m2.right_column();
    for (int j = 0; j < m2.left_cols(); ++j) state.columns.insert(m2.left_column(j));
    state.initial_columns.assign(state.columns.begin(), state.columns.end());
    state.reached_target = state.columns.count(state.target) > 0;
    if (state.reached_target && !options.full_saturation) return state;

    // Candidate columns and row tuples in their documented scan order;
    // the shuffle hook only exists to test order independence.
    std::vector<std::vector<int>> candidates;
    {
        std::vector<int> c(n2, 1);
        do {
            candidates.push_back(c);
        } while (next_tuple(c, k2));
    }
    Searcher searcher(m1, n2, k2, state.columns);
    {
        std::vector<int> rows(n2, 0);
        do {
            searcher.row_order.push_back(rows);
        } while (next_tuple(rows, m1.rows(), 0));
    }
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        std::shuffle(searcher.row_order.begin(), searcher.row_order.end(), rng);
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (const std::vector<int>& candidate : candidates) {
            if (state.columns.count(candidate)) continue;
            if (auto step = searcher.derive(candidate)) {
                state.columns.insert(candidate);
                state.log.push_back(std::move(*step));
                if (candidate == state.target) {
                    state.reached_target = true;
                    if (!options.full_saturation) return state;
                }
                progress = true;
                break;  // rescan from the least absent candidate
            }
        }
    }
    state.reached_target = state.columns.count(state.target) > 0;
    return state;
}

LexResult implies_lex(const ExtendedMatrix& m1, const ExtendedMatrix& m2,
                      const LexOptions& options) {
    if (!m1.simple() || !m2.simple())
        throw std::invalid_argument("implies_lex requires simple matrices");

    LexResult out;
    if (m1.left_cols() == 0) {
        out.situation = LexCase::LeftEmpty;
        out.holds = true;
        return out;
    }
    if (is_trivial(m1).trivial) {
        out.situation = LexCase::LeftTrivial;
        out.holds = m2.left_cols() > 0;
        return out;
    }
    if (is_trivial(m2).trivial) {
        out.situation = LexCase::RightTrivial;
        out.holds = false;
        return out;
    }
    out.situation = LexCase::Saturation;
    out.saturation = saturate(m1, m2, options);
    out.holds = out.saturation->reached_target;
    return out;
}

bool replay_saturation(const ExtendedMatrix& m1, const ExtendedMatrix& m2,
                       const SaturationState& state) {
    if (!m1.simple() || !m2.simple()) return false;
    const int n2 = m2.rows();
    const int k1 = m1.total_var_bound();
    const int k2 = m2.total_var_bound();

    std::set<std::vector<int>> columns;
    for (int j = 0; j < m2.left_cols(); ++j) columns.insert(m2.left_column(j));
    if (state.initial_columns !=
        std::vector<std::vector<int>>(columns.begin(), columns.end()))
        return false;

    for (const SaturationStep& step : state.log) {
        if (static_cast<int>(step.column.size()) != n2) return false;
        if (static_cast<int>(step.rows.size()) != n2) return false;
        if (static_cast<int>(step.interpretations.size()) != n2) return false;
        if (columns.count(step.column)) return false;  // already present
        // Rebuild the n2 x (m1+1) matrix from the logged rows and tables.
        for (int a = 0; a < n2; ++a) {
            const int i = step.rows[a];
            if (i < 0 || i >= m1.rows()) return false;
            const auto& table = step.interpretations[a];
            if (static_cast<int>(table.size()) != k1) return false;
            for (int v : table)
                if (v < 1 || v > k2) return false;
            if (table[m1.right(i, 0).index - 1] != step.column[a]) return false;
        }
        for (int j = 0; j < m1.left_cols(); ++j) {
            std::vector<int> col(n2);
            for (int a = 0; a < n2; ++a)
                col[a] = step.interpretations[a][m1.left(step.rows[a], j).index - 1];
            if (!columns.count(col)) return false;
        }
        columns.insert(step.column);
    }

    if (state.target != m2.right_column()) return false;
    if (state.reached_target != (columns.count(state.target) > 0)) return false;
    return state.columns == columns;
}

}  // namespace mcheck
