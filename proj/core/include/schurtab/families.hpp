#pragma once

#include <string>

#include "schurtab/alphabet.hpp"
#include "schurtab/filling.hpp"

namespace schurtab {

// The groups whose Schur modules are modeled. Sundaram tableaux are a counting basis
// only (no module), so they appear as a family below but not here.
enum class Group { Gl, Sp, OOdd, OEven, PinOdd, PinEven };

struct GroupSpec {
    Group kind = Group::Gl;
    int rank = 0;
    bool operator==(const GroupSpec&) const = default;
    auto operator<=>(const GroupSpec&) const = default;
};

enum class BasisFamily {
    GlSemistandard,
    Symplectic,
    OrthogonalOdd,
    OrthogonalEven,
    SundaramOdd,
    PinOdd,
    PinEven,
};

struct FamilyOptions {
    bool sundaramRequireSymplectic = true;
};

Alphabet alphabetFor(Group g, int rank);
Alphabet alphabetFor(BasisFamily f, int rank);
bool familyNeedsSpin(BasisFamily f);
bool groupNeedsSpin(Group g);
BasisFamily familyFor(Group g);
// The group whose Schur module the family spans; throws for SundaramOdd.
Group groupFor(BasisFamily f);

std::string groupName(Group g);       // "gl", "sp", "o-odd", "o-even", "pin-odd", "pin-even"
std::string familyName(BasisFamily f);// CLI vocabulary: adds "sundaram"
BasisFamily familyFromName(const std::string& name);

// Rows weakly increase (half-box exempt) and columns strictly increase.
bool isSemistandard(const Filling& f, const Alphabet& a);

// Every entry of row i is >= the symbol i; 0 counts as larger than every symbol.
bool isSymplectic(const Filling& f, const Alphabet& a);

// Co-occurring i and i-bar in row i force an i immediately above each such i-bar.
bool isParity(const Filling& f, const Alphabet& a);

// Symplectic, or symplectic after removing one added first-column pair (i, i-bar)
// together with boxes holding entries above i-bar, subject to the removal-shape rule.
bool isQuasiSymplectic(const Filling& f, const Alphabet& a);

// Half-box entry of row i may not co-occur with its own mate in that row unless covered:
// half i-bar with an i in the row needs an i-bar immediately above that i, and vice versa.
bool isSpinParity(const Filling& f);

// Sundaram variant of semistandardness: repeated 0 allowed in a column, banned in a row.
bool isSundaramSemistandard(const Filling& f, const Alphabet& a);

bool isBasisMember(const Filling& f, BasisFamily family, const FamilyOptions& opts = {});

} // namespace schurtab
