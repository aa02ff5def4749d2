#include <doctest.h>

#include "helpers.hpp"
#include "schurtab/characters.hpp"
#include "schurtab/verify.hpp"

using namespace schurtab;
using schurtab::testing::spinOnly;
using schurtab::testing::tab;

TEST_CASE("semistandardness") {
    Alphabet sp2(AlphabetKind::Symplectic, 2);
    CHECK(isSemistandard(tab({{1, -1}, {2}}, 2), sp2));
    CHECK_FALSE(isSemistandard(tab({{-1, 1}}, 2), sp2)); // row decreases
    CHECK_FALSE(isSemistandard(tab({{1, 1}, {1, 2}}, 2), sp2));
    // the half-box is exempt from its row's comparison
    CHECK(isSemistandard(tab({{1}}, 1, {-1}), Alphabet(AlphabetKind::EvenOrthogonal, 1)));
}

TEST_CASE("symplectic condition") {
    Alphabet sp2(AlphabetKind::Symplectic, 2);
    CHECK(isSymplectic(tab({{1}, {2}}, 2), sp2));
    CHECK_FALSE(isSymplectic(tab({{1}, {-1}}, 1), Alphabet(AlphabetKind::Symplectic, 1)));
    CHECK(isSymplectic(tab({{1, -1, 2, -2}}, 2), sp2)); // one-row condition is vacuous
    // zero passes every row bound
    Alphabet odd1(AlphabetKind::OddOrthogonal, 1);
    CHECK(isSymplectic(tab({{1}, {0}}, 1), odd1));
}

TEST_CASE("parity condition") {
    Alphabet odd1(AlphabetKind::OddOrthogonal, 1);
    CHECK_FALSE(isParity(tab({{1, -1}}, 1), odd1)); // no higher row above row 1
    CHECK(isParity(tab({{1, 0}}, 1), odd1));
    Alphabet sp2(AlphabetKind::Symplectic, 2);
    CHECK(isParity(tab({{1, 2}, {2, -2}}, 2), sp2));       // the 2 sits right above the 2bar
    CHECK_FALSE(isParity(tab({{1, 1}, {2, -2}}, 2), sp2)); // a 1 above the 2bar
}

TEST_CASE("quasi-symplectic condition") {
    Alphabet even1(AlphabetKind::EvenOrthogonal, 1);
    Alphabet even2(AlphabetKind::EvenOrthogonal, 2);
    Alphabet even3(AlphabetKind::EvenOrthogonal, 3);
    CHECK_FALSE(isQuasiSymplectic(tab({{1, 1}, {-1}}, 1), even1));
    CHECK_FALSE(isQuasiSymplectic(tab({{1, 2}, {2, -2}, {-2}}, 2), even2));
    CHECK(isQuasiSymplectic(tab({{1, 3}, {2, -3}, {-2}}, 3), even3));
    CHECK(isQuasiSymplectic(tab({{1}, {2}}, 2), even2));  // symplectic tableaux qualify
    CHECK(isQuasiSymplectic(tab({{1}, {-1}}, 2), even2)); // one added first-column pair
}

TEST_CASE("basis membership per family") {
    // repeated zero allowed in a column, not in a row
    CHECK_FALSE(isBasisMember(tab({{0, 0}}, 1), BasisFamily::SundaramOdd));
    CHECK(isBasisMember(tab({{1}, {0}, {0}}, 2), BasisFamily::SundaramOdd));
    CHECK(isBasisMember(tab({{1, 1}}, 1), BasisFamily::OrthogonalEven));
    CHECK(isBasisMember(tab({{-1, -1}}, 1), BasisFamily::OrthogonalEven));
    CHECK_FALSE(isBasisMember(tab({{1, -1}}, 1), BasisFamily::OrthogonalEven));
    CHECK(isBasisMember(tab({{1}}, 1, {1}), BasisFamily::PinEven));
    CHECK_FALSE(isBasisMember(tab({{-1}}, 1, {1}), BasisFamily::PinEven)); // spin parity
    CHECK_FALSE(isBasisMember(tab({{1}}, 1, {-1}), BasisFamily::PinEven));
    CHECK(isBasisMember(tab({{-1}}, 1, {-1}), BasisFamily::PinEven));
    CHECK_THROWS_AS(isBasisMember(tab({{1}}, 1), BasisFamily::PinEven), Error); // spin mismatch
}

TEST_CASE("symplectic basis of the single column of size 2") {
    auto basis = enumerateBasis(Shape(Partition{1, 1}, 2), BasisFamily::Symplectic);
    REQUIRE(basis.size() == 5);
    // in fillingOrder: the bottom box decides first, then the top one
    CHECK(basis[0] == tab({{1}, {2}}, 2));
    CHECK(basis[1] == tab({{-1}, {2}}, 2));
    CHECK(basis[2] == tab({{1}, {-2}}, 2));
    CHECK(basis[3] == tab({{-1}, {-2}}, 2));
    CHECK(basis[4] == tab({{2}, {-2}}, 2));
}

TEST_CASE("odd orthogonal single box") {
    auto basis = enumerateBasis(Shape(Partition{1}, 1), BasisFamily::OrthogonalOdd);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == tab({{1}}, 1));
    CHECK(basis[1] == tab({{-1}}, 1));
    CHECK(basis[2] == tab({{0}}, 1));
}

TEST_CASE("empty shape enumerates the empty tableau") {
    for (BasisFamily f : {BasisFamily::GlSemistandard, BasisFamily::Symplectic,
                          BasisFamily::OrthogonalOdd, BasisFamily::OrthogonalEven,
                          BasisFamily::SundaramOdd}) {
        auto basis = enumerateBasis(Shape(Partition{}, 2), f);
        CHECK(basis.size() == 1);
    }
    // the spin column alone spans 2^n states
    CHECK(enumerateBasis(Shape(Partition{}, 3, true), BasisFamily::PinOdd).size() == 8);
    CHECK(enumerateBasis(Shape(Partition{}, 3, true), BasisFamily::PinEven).size() == 8);
}

TEST_CASE("enumeration is duplicate-free and ordered") {
    Alphabet a(AlphabetKind::Symplectic, 2);
    for (const Partition& p : partitionsUpTo(4, 2)) {
        auto basis = enumerateBasis(Shape(p, 2), BasisFamily::Symplectic);
        for (std::size_t i = 0; i + 1 < basis.size(); ++i)
            CHECK(fillingOrder(a, basis[i], basis[i + 1]) < 0);
    }
    CHECK_THROWS_AS(enumerateBasis(Shape(Partition{1, 1}, 1), BasisFamily::Symplectic), Error);
}

TEST_CASE("counts match the classical dimensions") {
    for (int n = 1; n <= 2; ++n)
        for (const Partition& p : partitionsUpTo(4, n)) {
            Shape shape(p, n);
            CHECK(static_cast<long long>(enumerateBasis(shape, BasisFamily::Symplectic).size()) ==
                  familyOracleDim(BasisFamily::Symplectic, shape));
            CHECK(static_cast<long long>(enumerateBasis(shape, BasisFamily::OrthogonalOdd).size()) ==
                  familyOracleDim(BasisFamily::OrthogonalOdd, shape));
            CHECK(static_cast<long long>(enumerateBasis(shape, BasisFamily::OrthogonalEven).size()) ==
                  familyOracleDim(BasisFamily::OrthogonalEven, shape));
        }
}

TEST_CASE("weight polynomials") {
    Laurent std1 = weightPolynomial(Shape(Partition{1}, 1), BasisFamily::Symplectic);
    CHECK(std1 == Laurent::monomial({2}) + Laurent::monomial({-2}));
    Laurent odd1 = weightPolynomial(Shape(Partition{1}, 1), BasisFamily::OrthogonalOdd);
    CHECK(odd1 == Laurent::monomial({2}) + Laurent::monomial({0}) + Laurent::monomial({-2}));
    Laurent spin2 = weightPolynomial(Shape(Partition{}, 2, true), BasisFamily::PinEven);
    REQUIRE(spin2.terms().size() == 4);
    for (const auto& [e, c] : spin2.terms()) {
        CHECK(c == 1);
        CHECK(std::abs(e[0]) == 1);
        CHECK(std::abs(e[1]) == 1);
    }
}

TEST_CASE("weight polynomial equals the character across families") {
    for (int n = 1; n <= 2; ++n)
        for (const Partition& p : partitionsUpTo(3, n))
            for (BasisFamily f : {BasisFamily::GlSemistandard, BasisFamily::Symplectic,
                                  BasisFamily::OrthogonalOdd, BasisFamily::OrthogonalEven,
                                  BasisFamily::SundaramOdd}) {
                Shape shape(p, n);
                CHECK(weightPolynomial(shape, f) == familyOracleCharacter(f, shape));
            }
    for (int n = 1; n <= 2; ++n)
        for (const Partition& p : partitionsUpTo(2, n))
            for (BasisFamily f : {BasisFamily::PinOdd, BasisFamily::PinEven}) {
                Shape shape(p, n, true);
                CHECK(weightPolynomial(shape, f) == familyOracleCharacter(f, shape));
            }
}

TEST_CASE("the sundaram family needs the row-index bound") {
    Shape shape(Partition{1, 1}, 2);
    FamilyOptions with{true}, without{false};
    CHECK(enumerateBasis(shape, BasisFamily::SundaramOdd, with).size() == 10);
    CHECK(enumerateBasis(shape, BasisFamily::SundaramOdd, without).size() == 11);
    CHECK(weightPolynomial(shape, BasisFamily::SundaramOdd, with) ==
          familyOracleCharacter(BasisFamily::SundaramOdd, shape));
    CHECK(weightPolynomial(shape, BasisFamily::SundaramOdd, without) !=
          familyOracleCharacter(BasisFamily::SundaramOdd, shape));
}
