#include "schurtab/tensor_space.hpp"

#include <algorithm>

namespace schurtab {

TensorSpace::TensorSpace(Shape shape, Alphabet alphabet)
    : shape_(std::move(shape)), alphabet_(std::move(alphabet)) {
    constexpr std::int64_t kHardCap = std::int64_t(1) << 56;
    dim_ = 1;
    for (int k = 0; k < shape_.boxCount(); ++k) {
        dim_ *= alphabet_.size();
        if (dim_ > kHardCap) fail(ErrorCode::ResourceLimit, "tensor space dimension overflow");
    }
    if (shape_.spin()) {
        if (shape_.rank() > 30) fail(ErrorCode::ResourceLimit, "spin rank too large");
        dim_ <<= shape_.rank();
        if (dim_ > kHardCap) fail(ErrorCode::ResourceLimit, "tensor space dimension overflow");
    }
}

std::int64_t TensorSpace::indexOf(const Filling& f) const {
    if (f.shape() != shape_) fail(ErrorCode::Usage, "filling shape mismatch");
    std::int64_t idx = 0;
    if (shape_.spin())
        for (int i = 0; i < shape_.rank(); ++i)
            if (f.halfAt(i) < 0) idx |= std::int64_t(1) << i;
    for (Sym s : f.cells()) idx = idx * alphabet_.size() + alphabet_.orderIndex(s);
    return idx;
}

Filling TensorSpace::fillingAt(std::int64_t index) const {
    if (index < 0 || index >= dim_) fail(ErrorCode::Usage, "tensor index out of range");
    Filling f(shape_);
    std::vector<Sym> cells(shape_.boxCount());
    for (int k = shape_.boxCount() - 1; k >= 0; --k) {
        cells[k] = alphabet_.symbolAt(static_cast<int>(index % alphabet_.size()));
        index /= alphabet_.size();
    }
    std::vector<Sym> half;
    if (shape_.spin()) {
        half.resize(shape_.rank());
        for (int i = 0; i < shape_.rank(); ++i) half[i] = (index >> i) & 1 ? -(i + 1) : i + 1;
    }
    return Filling(shape_, std::move(cells), std::move(half));
}

SparseVec TensorSpace::embed(const Filling& f) const { return {{indexOf(f), Rat(1)}}; }

SparseVec TensorSpace::embed(const FormalSum& x) const {
    SparseVec v;
    for (const auto& [f, c] : x.terms()) v.emplace_back(indexOf(f), c);
    std::sort(v.begin(), v.end());
    return v;
}

SparseVec TensorSpace::embedRaw(const std::vector<std::pair<Filling, Rat>>& terms) const {
    std::map<std::int64_t, Rat> acc;
    for (const auto& [f, c] : terms) {
        auto [it, inserted] = acc.try_emplace(indexOf(f), c);
        if (!inserted) it->second += c;
    }
    SparseVec v;
    for (auto& [idx, c] : acc)
        if (c != 0) v.emplace_back(idx, std::move(c));
    return v;
}

} // namespace schurtab
