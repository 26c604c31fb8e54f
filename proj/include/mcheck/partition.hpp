#pragma once

#include <vector>

namespace mcheck {

class ExtendedMatrix;

/// Equivalence relation on {0,...,size-1}, stored as a union-find forest
/// whose root is always the least element of its block, so representatives
/// are canonical.
class Partition {
public:
    /// The discrete partition: every element alone.
    explicit Partition(int size);

    int size() const { return static_cast<int>(parent_.size()); }
    /// Least element of x's block.
    int representative(int x) const;
    bool same_block(int x, int y) const { return representative(x) == representative(y); }
    /// Unites the blocks of x and y.
    void merge(int x, int y);
    int block_count() const;
    /// Blocks ordered by representative, members ascending.
    std::vector<std::vector<int>> blocks() const;

    friend bool operator==(const Partition& a, const Partition& b);

private:
    mutable std::vector<int> parent_;
};

/// Least upper bound in the partition lattice: the smallest equivalence
/// relation containing both. Throws std::invalid_argument on mismatched
/// ground sets.
Partition join(const Partition& p, const Partition& q);

/// Partition of the left column positions of row i grouping equal entries.
/// Requires a simple matrix with m >= 1; throws otherwise.
Partition row_kernel(const ExtendedMatrix& m, int i);

}  // namespace mcheck
