#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "schurtab/error.hpp"

namespace schurtab {

// A cell entry, serialized as a signed integer: i -> +i, i-bar -> -i, 0 -> 0.
using Sym = std::int32_t;

inline Sym barSym(Sym s) { return -s; }

// Position of s in the order shared by every alphabet kind: 1 < 1bar < 2 < 2bar < ...,
// with 0 largest. Plain GL entries are positive, so their order is preserved as well.
inline long symOrderKey(Sym s) {
    if (s == 0) return std::numeric_limits<long>::max();
    return 2L * (std::abs(s) - 1) + (s < 0 ? 1 : 0);
}

enum class AlphabetKind {
    Gl,             // 1 < 2 < ... < n
    Symplectic,     // 1 < 1bar < 2 < 2bar < ... < n < nbar
    OddOrthogonal,  // 1 < 1bar < ... < n < nbar < 0
    EvenOrthogonal, // same symbols and order as Symplectic
};

// A finite totally ordered symbol set with a bar involution and optional zero symbol.
class Alphabet {
  public:
    Alphabet(AlphabetKind kind, int rank);

    AlphabetKind kind() const { return kind_; }
    int rank() const { return rank_; }
    int size() const { return size_; }
    bool hasZero() const { return kind_ == AlphabetKind::OddOrthogonal; }
    bool hasBars() const { return kind_ != AlphabetKind::Gl; }

    bool contains(Sym s) const;

    // Position in the total order, 0-based; throws on unknown symbols.
    int orderIndex(Sym s) const;
    Sym symbolAt(int index) const;
    std::vector<Sym> symbols() const; // in increasing order

    // The bar involution; defined on nonzero barred-alphabet symbols only.
    Sym bar(Sym s) const;

    // <0, 0, >0 as a three-way comparison of a and b in the alphabet order.
    int compare(Sym a, Sym b) const;

  private:
    AlphabetKind kind_;
    int rank_;
    int size_;
};

} // namespace schurtab
