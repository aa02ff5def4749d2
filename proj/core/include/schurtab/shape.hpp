#pragma once

#include <vector>

#include "schurtab/partition.hpp"

namespace schurtab {

struct Box {
    int row = 0; // 0-based
    int col = 0;
    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

// A partition diagram, optionally extended by a leftmost column of `rank` half-boxes
// (one per row i = 1..rank). Full boxes are addressed by (row, col); the half-column
// is separate and addressed by row alone.
class Shape {
  public:
    Shape() = default;
    Shape(Partition partition, int rank, bool spin = false);

    const Partition& partition() const { return partition_; }
    int rank() const { return rank_; }
    bool spin() const { return spin_; }

    int numRows() const { return partition_.numParts(); }
    int numCols() const { return partition_.part(0); }
    int rowLen(int r) const { return partition_.part(r); }
    int colLen(int c) const { return conjugate_.part(c); }
    int boxCount() const { return partition_.size(); } // full boxes only

    bool containsBox(int r, int c) const { return r >= 0 && c >= 0 && c < rowLen(r); }

    // Fixed column-major order over full boxes: columns left to right, each top to bottom.
    int boxIndex(int r, int c) const;
    Box boxAt(int index) const;

    bool operator==(const Shape&) const = default;
    auto operator<=>(const Shape&) const = default;

  private:
    Partition partition_;
    Partition conjugate_;
    int rank_ = 0;
    bool spin_ = false;
    std::vector<int> colOffsets_;
};

} // namespace schurtab
