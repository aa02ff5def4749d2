#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "schurtab/rational.hpp"

namespace schurtab {

// Sparse vector over a fixed index space: (index, coefficient) pairs, strictly
// increasing indices, no zero coefficients.
using SparseVec = std::vector<std::pair<std::int64_t, Rat>>;

SparseVec sparseAxpy(const SparseVec& a, const Rat& c, const SparseVec& b); // a + c*b

// Reduced row echelon basis of a rational subspace, maintained incrementally.
// Rows are keyed by their pivot (smallest index), have leading coefficient 1, and
// are mutually reduced, so the stored basis is the unique RREF of the span and is
// independent of insertion order.
class EchelonSpan {
  public:
    // Reduces v against the basis; returns true (and grows the rank) when a nonzero
    // residual remains.
    bool addRow(SparseVec v);

    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    std::int64_t rank() const { return static_cast<std::int64_t>(rows_.size()); }
    const std::map<std::int64_t, SparseVec>& rows() const { return rows_; }

    bool operator==(const EchelonSpan& o) const { return rows_ == o.rows_; }

  private:
    std::map<std::int64_t, SparseVec> rows_;
};

} // namespace schurtab
