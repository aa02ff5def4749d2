#include "schurtab/alphabet.hpp"

#include <string>

namespace schurtab {

namespace {

std::string symName(Sym s) {
    if (s == 0) return "0";
    if (s < 0) return std::to_string(-s) + "bar";
    return std::to_string(s);
}

} // namespace

Alphabet::Alphabet(AlphabetKind kind, int rank) : kind_(kind), rank_(rank) {
    if (rank < 0) fail(ErrorCode::Usage, "negative alphabet rank");
    switch (kind) {
    case AlphabetKind::Gl: size_ = rank; break;
    case AlphabetKind::Symplectic:
    case AlphabetKind::EvenOrthogonal: size_ = 2 * rank; break;
    case AlphabetKind::OddOrthogonal: size_ = 2 * rank + 1; break;
    }
}

bool Alphabet::contains(Sym s) const {
    if (s == 0) return hasZero();
    if (s < 0) return hasBars() && -s <= rank_;
    return s <= rank_;
}

int Alphabet::orderIndex(Sym s) const {
    if (!contains(s)) fail(ErrorCode::Usage, "symbol " + symName(s) + " is not in the alphabet");
    if (kind_ == AlphabetKind::Gl) return s - 1;
    if (s == 0) return 2 * rank_;
    return s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1;
}

Sym Alphabet::symbolAt(int index) const {
    if (index < 0 || index >= size_) fail(ErrorCode::Usage, "alphabet index out of range");
    if (kind_ == AlphabetKind::Gl) return index + 1;
    if (index == 2 * rank_) return 0;
    return index % 2 == 0 ? index / 2 + 1 : -(index / 2 + 1);
}

std::vector<Sym> Alphabet::symbols() const {
    std::vector<Sym> out(size_);
    for (int i = 0; i < size_; ++i) out[i] = symbolAt(i);
    return out;
}

Sym Alphabet::bar(Sym s) const {
    if (s == 0) fail(ErrorCode::Usage, "bar is undefined on 0");
    if (!hasBars() || !contains(s)) fail(ErrorCode::Usage, "bar is undefined on " + symName(s));
    return -s;
}

int Alphabet::compare(Sym a, Sym b) const {
    int ia = orderIndex(a), ib = orderIndex(b);
    return ia < ib ? -1 : ia > ib ? 1 : 0;
}

} // namespace schurtab
