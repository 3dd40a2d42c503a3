#pragma once

#include <vector>

#include "singq/error.hpp"

namespace singq {

// Square operation table over the carrier {0, ..., n-1}.
// Row index = left operand, column index = right operand.
class OpTable {
public:
    OpTable() = default;

    // All-zero table of size n.
    explicit OpTable(int n) : n_(n), cells_(static_cast<size_t>(n) * n, 0) {
        if (n < 0) throw DomainError("table size must be nonnegative");
    }

    OpTable(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
        if (n < 0) throw DomainError("table size must be nonnegative");
        if (cells_.size() != static_cast<size_t>(n) * n)
            throw DomainError("table has wrong number of cells");
        for (int v : cells_)
            if (v < 0 || v >= n) throw DomainError("table entry out of range");
    }

    int size() const { return n_; }

    // Unchecked access; callers guarantee 0 <= x, y < size().
    int at(int x, int y) const { return cells_[static_cast<size_t>(x) * n_ + y]; }
    void set(int x, int y, int v) { cells_[static_cast<size_t>(x) * n_ + y] = v; }

    const std::vector<int>& cells() const { return cells_; }

    bool operator==(const OpTable& other) const {
        return n_ == other.n_ && cells_ == other.cells_;
    }
    bool operator!=(const OpTable& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<int> cells_;
};

// Bounds-checked application t(x, y); throws DomainError on bad indices.
int apply(const OpTable& t, int x, int y);

}  // namespace singq
