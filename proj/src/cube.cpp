#include "mcheck/cube.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcheck {

namespace {

constexpr int kMaxTableArity = 16;       // tables searched or built
constexpr long long kMaxTupleScan = 1 << 22;

bool next_index_tuple(std::vector<int>& t, int bound) {
    for (int pos = static_cast<int>(t.size()) - 1; pos >= 0; --pos) {
        if (t[pos] + 1 < bound) {
            ++t[pos];
            std::fill(t.begin() + pos + 1, t.end(), 0);
            return true;
        }
    }
    return false;
}

// True iff some multiset of at most n_prime zero patterns ORs to the full
// mask, i.e. shares no coordinate at which all of them are zero. Breadth
// first over reachable OR values, so the work is bounded by the table size
// times the zero count rather than zeros^n'.
bool zeros_violate(const std::vector<unsigned>& zeros, int n_prime, unsigned mask) {
    if (zeros.empty()) return false;
    std::vector<char> reached(static_cast<std::size_t>(mask) + 1, 0);
    std::vector<unsigned> frontier;
    for (unsigned z : zeros) {
        if (z == mask) return true;
        if (!reached[z]) {
            reached[z] = 1;
            frontier.push_back(z);
        }
    }
    for (int depth = 2; depth <= n_prime && !frontier.empty(); ++depth) {
        std::vector<unsigned> next;
        for (unsigned r : frontier)
            for (unsigned z : zeros) {
                const unsigned u = r | z;
                if (u == mask) return true;
                if (!reached[u]) {
                    reached[u] = 1;
                    next.push_back(u);
                }
            }
        frontier = std::move(next);
    }
    return false;
}

std::vector<unsigned> zero_patterns(const BooleanOperation& op) {
    std::vector<unsigned> zeros;
    for (std::size_t e = 0; e < op.table.size(); ++e)
        if (op.table[e] == 0) zeros.push_back(static_cast<unsigned>(e));
    return zeros;
}

}  // namespace

std::uint8_t BooleanOperation::eval(const std::vector<int>& args) const {
    std::size_t idx = 0;
    for (int b : args) idx = idx << 1 | static_cast<unsigned>(b & 1);
    return table[idx];
}

std::vector<std::vector<int>> CubeRelation::members() const {
    std::vector<std::vector<int>> out;
    for (unsigned code = 1; code < (1u << arity); ++code) {
        std::vector<int> t(arity);
        for (int a = 0; a < arity; ++a) t[a] = code >> (arity - 1 - a) & 1;
        out.push_back(std::move(t));
    }
    return out;
}

bool CubeRelation::contains(const std::vector<int>& t) const {
    if (static_cast<int>(t.size()) != arity) return false;
    for (int b : t)
        if (b != 0 && b != 1) return false;
    return std::any_of(t.begin(), t.end(), [](int b) { return b == 1; });
}

CubeSimpleResult implies_cube_simple(const ExtendedMatrix& m, int n_prime) {
    if (!m.simple()) throw std::invalid_argument("the row-cover test requires a simple matrix");
    if (n_prime < 2) throw std::invalid_argument("n' must be >= 2");

    const int n = m.rows();
    const int cols = m.left_cols();
    long long tuples = 1;
    for (int a = 0; a < n_prime; ++a) {
        tuples *= n;
        if (tuples > kMaxTupleScan)
            throw std::invalid_argument("row tuple space n^n' too large to scan");
    }

    // agrees[j][i] caches the entry comparison x_{ij} = y_i; the scan below
    // counts one comparison per probe of it.
    std::vector<std::vector<char>> agrees(cols, std::vector<char>(n));
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < n; ++i) agrees[j][i] = m.left(i, j) == m.right(i, 0);

    CubeSimpleResult out;
    std::vector<int> tuple(n_prime, 0);
    do {
        int covering = -1;
        for (int j = 0; j < cols && covering < 0; ++j) {
            bool all = true;
            for (int a = 0; a < n_prime; ++a) {
                ++out.comparisons;
                if (!agrees[j][tuple[a]]) {
                    all = false;
                    break;
                }
            }
            if (all) covering = j;
        }
        if (covering < 0) {
            out.holds = true;
            out.witness.rows = tuple;
            out.cover.clear();
            return out;
        }
        out.cover.push_back(CoverEntry{tuple, covering});
    } while (next_index_tuple(tuple, n));
    out.holds = false;
    return out;
}

long long comparison_count(const ExtendedMatrix& m, int n_prime) {
    return implies_cube_simple(m, n_prime).comparisons;
}

bool check_row_witness(const ExtendedMatrix& m, const RowWitness& w) {
    if (!m.simple() || w.rows.empty()) return false;
    for (int i : w.rows)
        if (i < 0 || i >= m.rows()) return false;
    for (int j = 0; j < m.left_cols(); ++j) {
        bool covers = true;
        for (int i : w.rows)
            if (m.left(i, j) != m.right(i, 0)) {
                covers = false;
                break;
            }
        if (covers) return false;
    }
    return true;
}

bool check_cover_table(const ExtendedMatrix& m, int n_prime,
                       const std::vector<CoverEntry>& cover) {
    if (!m.simple() || n_prime < 2) return false;
    std::vector<int> tuple(n_prime, 0);
    std::size_t at = 0;
    do {
        if (at >= cover.size()) return false;
        const CoverEntry& e = cover[at++];
        if (e.rows != tuple) return false;
        if (e.column < 0 || e.column >= m.left_cols()) return false;
        for (int i : tuple)
            if (m.left(i, e.column) != m.right(i, 0)) return false;
    } while (next_index_tuple(tuple, m.rows()));
    return at == cover.size();
}

BooleanOperation build_counterexample_algebra(const ExtendedMatrix& m, int n_prime) {
    if (!m.simple())
        throw std::invalid_argument("counterexample construction requires a simple matrix");
    if (m.left_cols() > kMaxTableArity || m.total_var_bound() > kMaxTableArity)
        throw std::invalid_argument("matrix too large for a table construction");
    if (implies_cube_simple(m, n_prime).holds)
        throw std::logic_error("no counterexample algebra exists: the implication holds");

    const int cols = m.left_cols();
    const int k = m.total_var_bound();
    BooleanOperation op;
    op.symbol = "p1";
    op.arity = cols;
    op.table.assign(std::size_t{1} << cols, 1);
    // p(b) = 0 iff b arises from some row with the right entry sent to 0.
    for (int i = 0; i < m.rows(); ++i)
        for (unsigned f = 0; f < (1u << k); ++f) {
            const auto value = [&](Variable v) { return f >> (k - v.index) & 1u; };
            if (value(m.right(i, 0)) != 0) continue;
            std::size_t idx = 0;
            for (int j = 0; j < cols; ++j) idx = idx << 1 | value(m.left(i, j));
            op.table[idx] = 0;
        }
    return op;
}

bool algebra_satisfies(const TwoElementAlgebra& a, const VarietyPresentation& p) {
    if (static_cast<int>(a.ops.size()) != p.p_count + p.q_count)
        throw std::invalid_argument("operation count does not match the presentation");
    for (int j = 0; j < p.p_count; ++j)
        if (a.ops[j].arity != p.p_arity ||
            a.ops[j].table.size() != std::size_t{1} << p.p_arity)
            throw std::invalid_argument("p operation arity mismatch");
    for (int t = 0; t < p.q_count; ++t)
        if (a.ops[p.p_count + t].arity != p.q_arity ||
            a.ops[p.p_count + t].table.size() != std::size_t{1} << p.q_arity)
            throw std::invalid_argument("q operation arity mismatch");

    const int l = p.q_arity;
    for (const Equation& eq : p.equations) {
        for (unsigned v = 0; v < (1u << l); ++v) {
            std::size_t lhs_idx = 0;
            for (Variable arg : eq.args) lhs_idx = lhs_idx << 1 | (v >> (l - arg.index) & 1u);
            const std::uint8_t lhs = a.ops[eq.p_index].table[lhs_idx];
            const std::uint8_t rhs =
                eq.rhs_is_q ? a.ops[p.p_count + eq.rhs_index].table[v]
                            : static_cast<std::uint8_t>(v >> (l - eq.rhs_index) & 1u);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool preserves(const BooleanOperation& op, const CubeRelation& r) {
    if (r.arity < 1) throw std::invalid_argument("relation arity must be >= 1");
    const unsigned mask = op.arity == 0 ? 0u : (1u << op.arity) - 1;
    return !zeros_violate(zero_patterns(op), r.arity, mask);
}

bool preserves_direct(const BooleanOperation& op, const CubeRelation& r) {
    if (r.arity < 1) throw std::invalid_argument("relation arity must be >= 1");
    const int members = (1 << r.arity) - 1;
    double work = 1;
    for (int t = 0; t < op.arity; ++t) work *= members;
    if (work > 1e8) throw std::invalid_argument("too large for direct enumeration");

    std::vector<unsigned> args(op.arity, 1);  // member codes, big-endian
    while (true) {
        bool all_zero = true;
        for (int a = 0; a < r.arity && all_zero; ++a) {
            std::size_t idx = 0;
            for (int t = 0; t < op.arity; ++t)
                idx = idx << 1 | (args[t] >> (r.arity - 1 - a) & 1u);
            if (op.table[idx] != 0) all_zero = false;
        }
        if (all_zero) return false;
        int pos = op.arity - 1;
        while (pos >= 0 && args[pos] == static_cast<unsigned>(members)) args[pos--] = 1;
        if (pos < 0) break;
        ++args[pos];
    }
    return true;
}

namespace {

// Backtracking state for the two-element-algebra search. Table entries are
// the search variables; the presentation's equations only ever force an
// entry to a constant or identify two entries, so they compile into a
// union-find over entries whose classes are assigned as a unit.
class AlgebraSearch {
public:
    AlgebraSearch(const VarietyPresentation& p, int n_prime, long long cap)
        : pres_(p), n_prime_(n_prime), cap_(cap) {
        for (int j = 0; j < p.p_count; ++j) arity_.push_back(p.p_arity);
        for (int t = 0; t < p.q_count; ++t) arity_.push_back(p.q_arity);
        offset_.reserve(arity_.size());
        std::size_t total = 0;
        for (int ar : arity_) {
            offset_.push_back(total);
            total += std::size_t{1} << ar;
        }
        parent_.resize(total);
        for (std::size_t c = 0; c < total; ++c) parent_[c] = c;
        forced_.assign(total, -1);
        value_.assign(total, -1);
        zeros_.resize(arity_.size());
    }

    CubeGeneralResult run() {
        CubeGeneralResult out;
        if (!compile() || !apply_forced()) {
            out.outcome = SearchOutcome::Holds;
            return out;
        }
        switch (dfs(0)) {
            case Found:
                out.outcome = SearchOutcome::Fails;
                out.witness = make_witness();
                break;
            case Exhausted:
                out.outcome = SearchOutcome::Holds;
                break;
            case CapHit:
                out.outcome = SearchOutcome::Undecided;
                break;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    enum Result { Exhausted, Found, CapHit };

    std::size_t find(std::size_t c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    bool merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        if (b < a) std::swap(a, b);
        if (forced_[a] >= 0 && forced_[b] >= 0 && forced_[a] != forced_[b]) return false;
        if (forced_[b] >= 0) forced_[a] = forced_[b];
        parent_[b] = a;
        return true;
    }

    bool force(std::size_t c, int v) {
        c = find(c);
        if (forced_[c] >= 0) return forced_[c] == v;
        forced_[c] = v;
        return true;
    }

    // Translates every equation instance into a constant or a link.
    // Returns false when two instances contradict each other (then no
    // algebra exists at all).
    bool compile() {
        const int l = pres_.q_arity;
        for (const Equation& eq : pres_.equations) {
            for (unsigned v = 0; v < (1u << l); ++v) {
                std::size_t lhs = offset_[eq.p_index];
                std::size_t idx = 0;
                for (Variable arg : eq.args) idx = idx << 1 | (v >> (l - arg.index) & 1u);
                lhs += idx;
                if (eq.rhs_is_q) {
                    if (!merge(lhs, offset_[pres_.p_count + eq.rhs_index] + v)) return false;
                } else {
                    if (!force(lhs, static_cast<int>(v >> (l - eq.rhs_index) & 1u)))
                        return false;
                }
            }
        }
        members_.assign(parent_.size(), {});
        for (std::size_t c = 0; c < parent_.size(); ++c) members_[find(c)].push_back(c);
        return true;
    }

    int op_of(std::size_t cell) const {
        int o = static_cast<int>(offset_.size()) - 1;
        while (o > 0 && offset_[o] > cell) --o;
        return o;
    }

    // Sets a whole class; records the touched ops so zero sets can be
    // rechecked and the assignment undone.
    void set_class(std::size_t root, int v, std::vector<int>& touched) {
        for (std::size_t c : members_[root]) {
            value_[c] = v;
            if (v == 0) {
                const int o = op_of(c);
                zeros_[o].push_back(static_cast<unsigned>(c - offset_[o]));
                touched.push_back(o);
            }
        }
    }

    void unset_class(std::size_t root, const std::vector<int>& touched) {
        for (std::size_t c : members_[root]) value_[c] = -1;
        for (int o : touched) zeros_[o].pop_back();
    }

    bool ops_compatible(const std::vector<int>& touched) {
        for (int o : touched) {
            const unsigned mask = arity_[o] == 0 ? 0u : (1u << arity_[o]) - 1;
            if (zeros_violate(zeros_[o], n_prime_, mask)) return false;
        }
        return true;
    }

    bool apply_forced() {
        std::vector<int> touched;
        for (std::size_t c = 0; c < parent_.size(); ++c)
            if (find(c) == c && forced_[c] >= 0) set_class(c, forced_[c], touched);
        std::vector<int> all(arity_.size());
        for (std::size_t o = 0; o < arity_.size(); ++o) all[o] = static_cast<int>(o);
        return ops_compatible(all);
    }

    Result dfs(std::size_t cell) {
        while (cell < parent_.size() && value_[cell] >= 0) ++cell;
        if (cell == parent_.size()) return Found;
        const std::size_t root = find(cell);
        for (int v = 0; v <= 1; ++v) {
            if (++nodes_ > cap_) return CapHit;
            std::vector<int> touched;
            set_class(root, v, touched);
            if (ops_compatible(touched)) {
                const Result r = dfs(cell + 1);
                if (r != Exhausted) return r;
            }
            unset_class(root, touched);
        }
        return Exhausted;
    }

    TwoElementAlgebra make_witness() const {
        TwoElementAlgebra a;
        for (std::size_t o = 0; o < arity_.size(); ++o) {
            BooleanOperation op;
            const int p_count = pres_.p_count;
            op.symbol = o < static_cast<std::size_t>(p_count)
                            ? "p" + std::to_string(o + 1)
                            : "q" + std::to_string(o - p_count + 1);
            op.arity = arity_[o];
            op.table.resize(std::size_t{1} << arity_[o]);
            for (std::size_t e = 0; e < op.table.size(); ++e)
                op.table[e] = static_cast<std::uint8_t>(value_[offset_[o] + e]);
            a.ops.push_back(std::move(op));
        }
        return a;
    }

    const VarietyPresentation& pres_;
    int n_prime_;
    long long cap_;
    long long nodes_ = 0;

    std::vector<int> arity_;
    std::vector<std::size_t> offset_;
    std::vector<std::size_t> parent_;
    std::vector<int> forced_;                     // per root, -1/0/1
    std::vector<std::vector<std::size_t>> members_;
    std::vector<int> value_;                      // per cell, -1/0/1
    std::vector<std::vector<unsigned>> zeros_;    // per op, zero patterns
};

}  // namespace

CubeGeneralResult implies_cube_general(const ExtendedMatrix& m, int n_prime,
                                       long long node_cap) {
    if (n_prime < 2) throw std::invalid_argument("n' must be >= 2");
    if (node_cap < 1) throw std::invalid_argument("node cap must be >= 1");
    if (m.left_cols() > kMaxTableArity || m.left_var_bound() > kMaxTableArity)
        throw std::invalid_argument("matrix too large for the table search");
    const long long cells =
        static_cast<long long>(m.right_cols()) * (1LL << m.left_cols()) +
        static_cast<long long>(m.total_var_bound() - m.left_var_bound()) *
            (1LL << m.left_var_bound());
    if (cells > (1 << 14))
        throw std::invalid_argument("matrix too large for the table search");
    const VarietyPresentation p = presentation(m);

    AlgebraSearch search(p, n_prime, node_cap);
    CubeGeneralResult out = search.run();
    if (out.outcome == SearchOutcome::Fails) {
        // A reported witness must stand on its own.
        if (!algebra_satisfies(*out.witness, p))
            throw std::logic_error("internal error: witness violates the presentation");
        for (const BooleanOperation& op : out.witness->ops)
            if (!preserves(op, CubeRelation{n_prime}))
                throw std::logic_error("internal error: witness operation not compatible");
    }
    return out;
}

FamilyCubeResult implies_cube_family(const std::vector<ExtendedMatrix>& ms, int n_prime) {
    FamilyCubeResult out;
    for (const ExtendedMatrix& m : ms)
        if (!m.simple())
            throw std::invalid_argument("family test requires simple matrices");
    for (std::size_t i = 0; i < ms.size(); ++i) {
        out.member_results.push_back(implies_cube_simple(ms[i], n_prime));
        if (out.member_results.back().holds && !out.member) out.member = static_cast<int>(i);
    }
    out.holds = out.member.has_value();
    if (!ms.empty()) {
        ExtendedMatrix fold = ms.front();
        for (std::size_t i = 1; i < ms.size(); ++i) fold = intersect(fold, ms[i]);
        out.intersection_result = implies_cube_simple(fold, n_prime);
        out.consistent = out.intersection_result->holds == out.holds;
    }
    return out;
}

}  // namespace mcheck
