#include "schurtab/shape.hpp"

#include "schurtab/error.hpp"

namespace schurtab {

Shape::Shape(Partition partition, int rank, bool spin)
    : partition_(std::move(partition)), conjugate_(partition_.conjugate()), rank_(rank), spin_(spin) {
    if (rank_ < 0) fail(ErrorCode::Usage, "negative rank");
    if (spin_ && rank_ == 0) fail(ErrorCode::Usage, "spin shape needs positive rank");
    colOffsets_.assign(numCols() + 1, 0);
    for (int c = 0; c < numCols(); ++c) colOffsets_[c + 1] = colOffsets_[c] + colLen(c);
}

int Shape::boxIndex(int r, int c) const {
    if (!containsBox(r, c)) fail(ErrorCode::Usage, "box out of shape");
    return colOffsets_[c] + r;
}

Box Shape::boxAt(int index) const {
    if (index < 0 || index >= boxCount()) fail(ErrorCode::Usage, "box index out of range");
    int c = 0;
    while (colOffsets_[c + 1] <= index) ++c;
    return {index - colOffsets_[c], c};
}

} // namespace schurtab
