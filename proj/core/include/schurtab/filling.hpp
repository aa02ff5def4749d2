#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "schurtab/alphabet.hpp"
#include "schurtab/shape.hpp"

namespace schurtab {

// Torus eigenvalue vector, stored doubled so that spin weights stay integral.
struct Weight {
    std::vector<int> doubled;
    bool operator==(const Weight&) const = default;
};

// A shape plus one symbol per full box (column-major storage) and, for spin shapes,
// one half-box entry per row, halfAt(i) in {+(i+1), -(i+1)} (0-based i).
// Columns are not required to be sorted; "canonical" is a predicate, not a type.
class Filling {
  public:
    Filling() = default;
    explicit Filling(Shape shape); // cells value-initialized to 0; callers must set them
    Filling(Shape shape, std::vector<Sym> cellsColumnMajor, std::vector<Sym> half = {});

    static Filling fromRows(const Shape& shape, const std::vector<std::vector<Sym>>& rows,
                            const std::vector<Sym>& half = {});

    const Shape& shape() const { return shape_; }
    Sym at(int r, int c) const { return cells_[shape_.boxIndex(r, c)]; }
    void setAt(int r, int c, Sym s) { cells_[shape_.boxIndex(r, c)] = s; }
    Sym halfAt(int i) const { return half_[i]; }
    void setHalf(int i, Sym s) { half_[i] = s; }
    const std::vector<Sym>& cells() const { return cells_; } // column-major
    const std::vector<Sym>& half() const { return half_; }

    std::vector<std::vector<Sym>> rows() const;

    bool operator==(const Filling&) const = default;
    std::strong_ordering operator<=>(const Filling&) const = default; // structural, storage order

  private:
    Shape shape_;
    std::vector<Sym> cells_;
    std::vector<Sym> half_;
};

// Sign and sorted filling of column-sorting f, or nullopt when a column repeats a symbol.
struct Canonicalized {
    int sign = 1;
    Filling filling;
};
std::optional<Canonicalized> canonicalizeSigned(const Filling& f);

// True when every full column is strictly increasing top to bottom (raw symbol order is
// not used; pass the alphabet).
bool isColumnCanonical(const Filling& f, const Alphabet& a);

// doubled[i] = 2(#(i+1) - #(-(i+1))) over full boxes, +-1 from the half-box when spin.
// Zero entries contribute nothing.
Weight weight(const Filling& f);

enum class FillingOrderScheme {
    // Reference candidate: concatenate columns left to right, each top to bottom, and
    // compare the words lexicographically. Fails the monotone-rewrite harness (see the
    // straightening tests), kept for the harness itself.
    ColumnWordLeftToRight,
    // Validated order: compare columns from the rightmost to the leftmost, inside the
    // first differing column from the bottom box upward; the filling with the larger
    // entry at the first difference is the higher one. The half-column is compared last.
    RightmostColumnBottomUp,
};

inline constexpr FillingOrderScheme kDefaultFillingOrder = FillingOrderScheme::RightmostColumnBottomUp;

// Total order on fillings of one fixed shape; throws on shape mismatch.
int fillingOrderWith(FillingOrderScheme scheme, const Alphabet& a, const Filling& t1, const Filling& t2);
int fillingOrder(const Alphabet& a, const Filling& t1, const Filling& t2);

} // namespace schurtab
