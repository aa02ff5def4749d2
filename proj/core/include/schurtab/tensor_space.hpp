#pragma once

#include "schurtab/echelon.hpp"
#include "schurtab/formal_sum.hpp"

namespace schurtab {

// The ambient tensor space of a shape over an alphabet: one coordinate per assignment
// of symbols to the full boxes (times the half-column states on spin shapes).
// Index layout, fixed forever for stable golden files: the half-column state is the
// most significant digit block (bit i set when half entry i is barred), followed by
// the alphabet order-index of each box in column-major box order, big-endian.
class TensorSpace {
  public:
    TensorSpace(Shape shape, Alphabet alphabet);

    const Shape& shape() const { return shape_; }
    const Alphabet& alphabet() const { return alphabet_; }
    std::int64_t dimension() const { return dim_; }

    std::int64_t indexOf(const Filling& f) const;
    Filling fillingAt(std::int64_t index) const;

    SparseVec embed(const Filling& f) const;   // unit vector
    SparseVec embed(const FormalSum& x) const;
    SparseVec embedRaw(const std::vector<std::pair<Filling, Rat>>& terms) const;

  private:
    Shape shape_;
    Alphabet alphabet_;
    std::int64_t dim_;
};

} // namespace schurtab
