#include "schurtab/families.hpp"

#include <algorithm>
#include <set>

namespace schurtab {

Alphabet alphabetFor(Group g, int rank) {
    switch (g) {
    case Group::Gl: return {AlphabetKind::Gl, rank};
    case Group::Sp: return {AlphabetKind::Symplectic, rank};
    case Group::OOdd: return {AlphabetKind::OddOrthogonal, rank};
    case Group::OEven: return {AlphabetKind::EvenOrthogonal, rank};
    case Group::PinOdd: return {AlphabetKind::OddOrthogonal, rank};
    case Group::PinEven: return {AlphabetKind::EvenOrthogonal, rank};
    }
    fail(ErrorCode::Usage, "unknown group");
}

Alphabet alphabetFor(BasisFamily f, int rank) {
    switch (f) {
    case BasisFamily::GlSemistandard: return {AlphabetKind::Gl, rank};
    case BasisFamily::Symplectic: return {AlphabetKind::Symplectic, rank};
    case BasisFamily::OrthogonalOdd:
    case BasisFamily::SundaramOdd:
    case BasisFamily::PinOdd: return {AlphabetKind::OddOrthogonal, rank};
    case BasisFamily::OrthogonalEven:
    case BasisFamily::PinEven: return {AlphabetKind::EvenOrthogonal, rank};
    }
    fail(ErrorCode::Usage, "unknown family");
}

bool familyNeedsSpin(BasisFamily f) { return f == BasisFamily::PinOdd || f == BasisFamily::PinEven; }
bool groupNeedsSpin(Group g) { return g == Group::PinOdd || g == Group::PinEven; }

BasisFamily familyFor(Group g) {
    switch (g) {
    case Group::Gl: return BasisFamily::GlSemistandard;
    case Group::Sp: return BasisFamily::Symplectic;
    case Group::OOdd: return BasisFamily::OrthogonalOdd;
    case Group::OEven: return BasisFamily::OrthogonalEven;
    case Group::PinOdd: return BasisFamily::PinOdd;
    case Group::PinEven: return BasisFamily::PinEven;
    }
    fail(ErrorCode::Usage, "unknown group");
}

Group groupFor(BasisFamily f) {
    switch (f) {
    case BasisFamily::GlSemistandard: return Group::Gl;
    case BasisFamily::Symplectic: return Group::Sp;
    case BasisFamily::OrthogonalOdd: return Group::OOdd;
    case BasisFamily::OrthogonalEven: return Group::OEven;
    case BasisFamily::PinOdd: return Group::PinOdd;
    case BasisFamily::PinEven: return Group::PinEven;
    case BasisFamily::SundaramOdd:
        fail(ErrorCode::Usage, "sundaram tableaux have no Schur module");
    }
    fail(ErrorCode::Usage, "unknown family");
}

std::string groupName(Group g) {
    switch (g) {
    case Group::Gl: return "gl";
    case Group::Sp: return "sp";
    case Group::OOdd: return "o-odd";
    case Group::OEven: return "o-even";
    case Group::PinOdd: return "pin-odd";
    case Group::PinEven: return "pin-even";
    }
    return "?";
}

std::string familyName(BasisFamily f) {
    if (f == BasisFamily::SundaramOdd) return "sundaram";
    return groupName(groupFor(f));
}

BasisFamily familyFromName(const std::string& name) {
    if (name == "gl") return BasisFamily::GlSemistandard;
    if (name == "sp") return BasisFamily::Symplectic;
    if (name == "o-odd") return BasisFamily::OrthogonalOdd;
    if (name == "o-even") return BasisFamily::OrthogonalEven;
    if (name == "sundaram") return BasisFamily::SundaramOdd;
    if (name == "pin-odd") return BasisFamily::PinOdd;
    if (name == "pin-even") return BasisFamily::PinEven;
    fail(ErrorCode::Usage, "unknown group name '" + name + "'");
}

namespace {

void requireSymbols(const Filling& f, const Alphabet& a) {
    for (Sym s : f.cells()) a.orderIndex(s);
}

} // namespace

bool isSemistandard(const Filling& f, const Alphabet& a) {
    requireSymbols(f, a);
    const Shape& sh = f.shape();
    for (int r = 0; r < sh.numRows(); ++r)
        for (int c = 1; c < sh.rowLen(r); ++c)
            if (symOrderKey(f.at(r, c - 1)) > symOrderKey(f.at(r, c))) return false;
    for (int c = 0; c < sh.numCols(); ++c)
        for (int r = 1; r < sh.colLen(c); ++r)
            if (symOrderKey(f.at(r - 1, c)) >= symOrderKey(f.at(r, c))) return false;
    return true;
}

bool isSymplectic(const Filling& f, const Alphabet& a) {
    requireSymbols(f, a);
    const Shape& sh = f.shape();
    for (int r = 0; r < sh.numRows(); ++r)
        for (int c = 0; c < sh.rowLen(r); ++c)
            if (symOrderKey(f.at(r, c)) < 2L * r) return false;
    return true;
}

bool isParity(const Filling& f, const Alphabet& a) {
    requireSymbols(f, a);
    const Shape& sh = f.shape();
    for (int r = 0; r < sh.numRows(); ++r) {
        Sym plain = r + 1, barred = -(r + 1);
        bool hasPlain = false, hasBarred = false;
        for (int c = 0; c < sh.rowLen(r); ++c) {
            hasPlain = hasPlain || f.at(r, c) == plain;
            hasBarred = hasBarred || f.at(r, c) == barred;
        }
        if (!(hasPlain && hasBarred)) continue;
        if (r == 0) return false;
        for (int c = 0; c < sh.rowLen(r); ++c)
            if (f.at(r, c) == barred && (!sh.containsBox(r - 1, c) || f.at(r - 1, c) != plain))
                return false;
    }
    return true;
}

namespace {

// Explicit search for a quasi-symplectic decomposition with the added pair at first-column
// rows i, i+1 (1-based i = pairRow + 1).
bool quasiSymplecticAt(const Filling& f, int pairRow) {
    const Shape& sh = f.shape();
    Sym barI = -(pairRow + 1);
    long barKey = symOrderKey(barI);

    // Every other box of the pair rows, and everything below them, must be removable,
    // i.e. hold an entry above i-bar.
    for (int r = pairRow; r < sh.numRows(); ++r)
        for (int c = 0; c < sh.rowLen(r); ++c) {
            if (r == pairRow && c == 0) continue;
            if (r == pairRow + 1 && c == 0) continue;
            if (symOrderKey(f.at(r, c)) <= barKey) return false;
        }

    // Removal-shape rule: erase the pair and every box holding an entry above i-bar;
    // what remains must be a Young diagram with no retained box just right of an erased one.
    auto removed = [&](int r, int c) {
        if (c == 0 && (r == pairRow || r == pairRow + 1)) return true;
        return symOrderKey(f.at(r, c)) > barKey;
    };
    std::vector<int> retainedLen(sh.numRows(), 0);
    for (int r = 0; r < sh.numRows(); ++r) {
        int c = 0;
        while (c < sh.rowLen(r) && !removed(r, c)) ++c;
        retainedLen[r] = c;
        for (; c < sh.rowLen(r); ++c)
            if (!removed(r, c)) return false;
    }
    for (int r = 1; r < sh.numRows(); ++r)
        if (retainedLen[r] > retainedLen[r - 1]) return false;

    // The base tableau must satisfy the symplectic condition. Entries of the pair rows
    // and below are all gone; above them only entries > i-bar may be dropped, and those
    // never violate the row condition, so the surviving rows must already satisfy it.
    for (int r = 0; r < pairRow; ++r)
        for (int c = 0; c < sh.rowLen(r); ++c)
            if (symOrderKey(f.at(r, c)) < 2L * r) return false;

    // Search the candidate added-box sets: per row above the pair a suffix of boxes with
    // entries above i-bar may be added; the kept prefixes must again be a Young diagram.
    std::vector<int> minKeep(pairRow, 0);
    for (int r = 0; r < pairRow; ++r) {
        int first = sh.rowLen(r);
        while (first > 0 && symOrderKey(f.at(r, first - 1)) > barKey) --first;
        minKeep[r] = first;
    }
    auto search = [&](auto&& self, int r, int prevKeep) -> bool {
        if (r == pairRow) return true;
        for (int keep = std::min(prevKeep, sh.rowLen(r)); keep >= minKeep[r]; --keep)
            if (self(self, r + 1, keep)) return true;
        return false;
    };
    return search(search, 0, sh.numCols());
}

} // namespace

bool isQuasiSymplectic(const Filling& f, const Alphabet& a) {
    if (isSymplectic(f, a)) return true;
    const Shape& sh = f.shape();
    for (int pairRow = 0; pairRow + 1 < sh.numRows(); ++pairRow) {
        if (sh.rowLen(pairRow + 1) < 1) continue;
        if (f.at(pairRow, 0) != pairRow + 1 || f.at(pairRow + 1, 0) != -(pairRow + 1)) continue;
        if (quasiSymplecticAt(f, pairRow)) return true;
    }
    return false;
}

bool isSpinParity(const Filling& f) {
    const Shape& sh = f.shape();
    if (!sh.spin()) fail(ErrorCode::Usage, "spin parity needs a spin shape");
    for (int r = 0; r < sh.numRows() && r < sh.rank(); ++r) {
        Sym h = f.halfAt(r);
        Sym mate = barSym(h); // the full-box value constrained by the half entry
        for (int c = 0; c < sh.rowLen(r); ++c) {
            if (f.at(r, c) != mate) continue;
            if (!sh.containsBox(r - 1, c) || r == 0) return false;
            if (f.at(r - 1, c) != h) return false;
        }
    }
    return true;
}

bool isSundaramSemistandard(const Filling& f, const Alphabet& a) {
    requireSymbols(f, a);
    if (!a.hasZero()) fail(ErrorCode::Usage, "sundaram tableaux use the odd alphabet");
    const Shape& sh = f.shape();
    for (int r = 0; r < sh.numRows(); ++r)
        for (int c = 1; c < sh.rowLen(r); ++c) {
            Sym x = f.at(r, c - 1), y = f.at(r, c);
            if (symOrderKey(x) > symOrderKey(y)) return false;
            if (x == 0 && y == 0) return false; // repeated 0 in a row
        }
    for (int c = 0; c < sh.numCols(); ++c)
        for (int r = 1; r < sh.colLen(c); ++r) {
            Sym x = f.at(r - 1, c), y = f.at(r, c);
            if (x == 0 && y == 0) continue; // repeated 0 allowed in a column
            if (symOrderKey(x) >= symOrderKey(y)) return false;
        }
    return true;
}

bool isBasisMember(const Filling& f, BasisFamily family, const FamilyOptions& opts) {
    Alphabet a = alphabetFor(family, f.shape().rank());
    if (f.shape().spin() != familyNeedsSpin(family))
        fail(ErrorCode::Usage, "family '" + familyName(family) + "' and shape disagree about the spin column");
    switch (family) {
    case BasisFamily::GlSemistandard:
        return isSemistandard(f, a);
    case BasisFamily::Symplectic:
        return isSemistandard(f, a) && isSymplectic(f, a);
    case BasisFamily::OrthogonalOdd:
    case BasisFamily::OrthogonalEven:
        return isSemistandard(f, a) && isQuasiSymplectic(f, a) && isParity(f, a);
    case BasisFamily::SundaramOdd:
        return isSundaramSemistandard(f, a) &&
               (!opts.sundaramRequireSymplectic || isSymplectic(f, a));
    case BasisFamily::PinOdd:
    case BasisFamily::PinEven:
        return isSemistandard(f, a) && isSymplectic(f, a) && isSpinParity(f);
    }
    fail(ErrorCode::Usage, "unknown family");
}

} // namespace schurtab
