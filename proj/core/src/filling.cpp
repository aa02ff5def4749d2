#include "schurtab/filling.hpp"

#include <algorithm>
#include <limits>

#include "schurtab/error.hpp"

namespace schurtab {

namespace {

inline long symKey(Sym s) { return symOrderKey(s); }

} // namespace

Filling::Filling(Shape shape) : shape_(std::move(shape)), cells_(shape_.boxCount(), 0) {
    if (shape_.spin()) {
        half_.resize(shape_.rank());
        for (int i = 0; i < shape_.rank(); ++i) half_[i] = i + 1;
    }
}

Filling::Filling(Shape shape, std::vector<Sym> cells, std::vector<Sym> half)
    : shape_(std::move(shape)), cells_(std::move(cells)), half_(std::move(half)) {
    if (static_cast<int>(cells_.size()) != shape_.boxCount())
        fail(ErrorCode::Usage, "cell count does not match shape");
    if (static_cast<int>(half_.size()) != (shape_.spin() ? shape_.rank() : 0))
        fail(ErrorCode::Usage, "half-column length does not match shape");
    for (int i = 0; i < static_cast<int>(half_.size()); ++i)
        if (std::abs(half_[i]) != i + 1)
            fail(ErrorCode::Usage, "half-box " + std::to_string(i + 1) + " must hold its own row index");
}

Filling Filling::fromRows(const Shape& shape, const std::vector<std::vector<Sym>>& rows,
                          const std::vector<Sym>& half) {
    if (static_cast<int>(rows.size()) != shape.numRows())
        fail(ErrorCode::Usage, "row count does not match shape");
    std::vector<Sym> cells(shape.boxCount(), 0);
    for (int r = 0; r < shape.numRows(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.rowLen(r))
            fail(ErrorCode::Usage, "row length does not match shape");
        for (int c = 0; c < shape.rowLen(r); ++c) cells[shape.boxIndex(r, c)] = rows[r][c];
    }
    return Filling(shape, std::move(cells), half);
}

std::vector<std::vector<Sym>> Filling::rows() const {
    std::vector<std::vector<Sym>> out(shape_.numRows());
    for (int r = 0; r < shape_.numRows(); ++r) {
        out[r].resize(shape_.rowLen(r));
        for (int c = 0; c < shape_.rowLen(r); ++c) out[r][c] = at(r, c);
    }
    return out;
}

std::optional<Canonicalized> canonicalizeSigned(const Filling& f) {
    Canonicalized out{1, f};
    const Shape& sh = f.shape();
    for (int c = 0; c < sh.numCols(); ++c) {
        int len = sh.colLen(c);
        // insertion sort, counting transpositions
        for (int i = 1; i < len; ++i) {
            int j = i;
            while (j > 0 && symKey(out.filling.at(j - 1, c)) > symKey(out.filling.at(j, c))) {
                Sym tmp = out.filling.at(j - 1, c);
                out.filling.setAt(j - 1, c, out.filling.at(j, c));
                out.filling.setAt(j, c, tmp);
                out.sign = -out.sign;
                --j;
            }
        }
        for (int i = 1; i < len; ++i)
            if (out.filling.at(i - 1, c) == out.filling.at(i, c)) return std::nullopt;
    }
    return out;
}

bool isColumnCanonical(const Filling& f, const Alphabet& a) {
    const Shape& sh = f.shape();
    for (int c = 0; c < sh.numCols(); ++c)
        for (int r = 1; r < sh.colLen(c); ++r)
            if (a.compare(f.at(r - 1, c), f.at(r, c)) >= 0) return false;
    return true;
}

Weight weight(const Filling& f) {
    Weight w;
    w.doubled.assign(f.shape().rank(), 0);
    for (Sym s : f.cells()) {
        if (s > 0) w.doubled[s - 1] += 2;
        else if (s < 0) w.doubled[-s - 1] -= 2;
    }
    for (Sym s : f.half()) {
        if (s > 0) w.doubled[s - 1] += 1;
        else w.doubled[-s - 1] -= 1;
    }
    return w;
}

namespace {

int compareWords(const std::vector<Sym>& a, const std::vector<Sym>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        long ka = symKey(a[i]), kb = symKey(b[i]);
        if (ka != kb) return ka < kb ? -1 : 1;
    }
    return 0;
}

} // namespace

int fillingOrderWith(FillingOrderScheme scheme, const Alphabet& a, const Filling& t1, const Filling& t2) {
    if (t1.shape() != t2.shape()) fail(ErrorCode::Usage, "fillingOrder requires a common shape");
    for (Sym s : t1.cells()) a.orderIndex(s);
    for (Sym s : t2.cells()) a.orderIndex(s);
    const Shape& sh = t1.shape();
    std::vector<Sym> w1, w2;
    w1.reserve(sh.boxCount() + sh.rank());
    w2.reserve(sh.boxCount() + sh.rank());
    if (scheme == FillingOrderScheme::ColumnWordLeftToRight) {
        for (int c = 0; c < sh.numCols(); ++c)
            for (int r = 0; r < sh.colLen(c); ++r) {
                w1.push_back(t1.at(r, c));
                w2.push_back(t2.at(r, c));
            }
        for (int i = 0; i < static_cast<int>(t1.half().size()); ++i) {
            w1.push_back(t1.halfAt(i));
            w2.push_back(t2.halfAt(i));
        }
    } else {
        for (int c = sh.numCols() - 1; c >= 0; --c)
            for (int r = sh.colLen(c) - 1; r >= 0; --r) {
                w1.push_back(t1.at(r, c));
                w2.push_back(t2.at(r, c));
            }
        for (int i = static_cast<int>(t1.half().size()) - 1; i >= 0; --i) {
            w1.push_back(t1.halfAt(i));
            w2.push_back(t2.halfAt(i));
        }
    }
    return compareWords(w1, w2);
}

int fillingOrder(const Alphabet& a, const Filling& t1, const Filling& t2) {
    return fillingOrderWith(kDefaultFillingOrder, a, t1, t2);
}

} // namespace schurtab
