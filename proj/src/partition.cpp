#include "mcheck/partition.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "mcheck/matrix.hpp"

namespace mcheck {

Partition::Partition(int size) : parent_(size) {
    if (size < 0) throw std::invalid_argument("partition ground set size must be >= 0");
    std::iota(parent_.begin(), parent_.end(), 0);
}

int Partition::representative(int x) const {
    if (x < 0 || x >= size()) throw std::out_of_range("partition element out of range");
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
        int next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

void Partition::merge(int x, int y) {
    int rx = representative(x);
    int ry = representative(y);
    if (rx == ry) return;
    // Attach the larger root below the smaller; roots stay block minima.
    if (rx < ry)
        parent_[ry] = rx;
    else
        parent_[rx] = ry;
}

int Partition::block_count() const {
    int count = 0;
    for (int x = 0; x < size(); ++x)
        if (representative(x) == x) ++count;
    return count;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::map<int, std::vector<int>> by_rep;
    for (int x = 0; x < size(); ++x) by_rep[representative(x)].push_back(x);
    std::vector<std::vector<int>> out;
    out.reserve(by_rep.size());
    for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
    return out;
}

bool operator==(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    for (int x = 0; x < a.size(); ++x)
        if (a.representative(x) != b.representative(x)) return false;
    return true;
}

Partition join(const Partition& p, const Partition& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("join requires partitions of the same ground set");
    Partition out = p;
    for (int x = 0; x < q.size(); ++x) out.merge(x, q.representative(x));
    return out;
}

Partition row_kernel(const ExtendedMatrix& m, int i) {
    if (!m.simple()) throw std::invalid_argument("row_kernel requires a simple matrix");
    if (m.left_cols() == 0)
        throw std::invalid_argument("row_kernel is undefined for an empty left part");
    if (i < 0 || i >= m.rows()) throw std::out_of_range("row index out of range");
    Partition p(m.left_cols());
    std::map<int, int> first_seen;  // variable index -> first column with it
    for (int j = 0; j < m.left_cols(); ++j) {
        auto [it, inserted] = first_seen.try_emplace(m.left(i, j).index, j);
        if (!inserted) p.merge(it->second, j);
    }
    return p;
}

}  // namespace mcheck
