#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "schurtab/straighten.hpp"

using namespace schurtab;
using schurtab::testing::tab;

TEST_CASE("exchange straightening onto semistandard tableaux") {
    StraightenReport rep = glStraighten(FormalSum(tab({{2, 1}}, 2)));
    CHECK(rep.steps == 1);
    CHECK(rep.output == FormalSum(tab({{1, 2}}, 2)));

    // a column input is already handled by canonicalization
    CHECK(canonicalize(tab({{2}, {1}}, 2)) == Rat(-1) * FormalSum(tab({{1}, {2}}, 2)));

    FormalSum fixed(tab({{1, 1}, {2}}, 2));
    StraightenReport fix = glStraighten(fixed);
    CHECK(fix.steps == 0);
    CHECK(fix.output == fixed);
}

TEST_CASE("paired-entry straightening onto the row-bounded tableaux") {
    StraightenReport zero = symplecticStraighten(FormalSum(tab({{1}, {-1}}, 1)));
    CHECK(zero.output.empty());

    StraightenReport two = symplecticStraighten(FormalSum(tab({{1}, {-1}}, 2)));
    CHECK(two.output == Rat(-1) * FormalSum(tab({{2}, {-2}}, 2)));

    FormalSum fixed(tab({{1}, {2}}, 2));
    CHECK(symplecticStraighten(fixed).output == fixed);
}

TEST_CASE("half-flip straightening onto the parity-compatible tableaux") {
    CHECK(pinStraighten(FormalSum(tab({{-1}}, 1, {1})), false).output.empty());
    CHECK(pinStraighten(FormalSum(tab({{1}}, 1, {-1})), false).output.empty());

    FormalSum fixed(tab({{1}}, 1, {1}));
    CHECK(pinStraighten(fixed, false).output == fixed);

    // with the zero term: the violating filling rewrites to minus the zero-entry one
    StraightenReport odd = pinStraighten(FormalSum(tab({{1}}, 1, {-1})), true);
    CHECK(odd.output == Rat(-1) * FormalSum(tab({{0}}, 1, {1})));
    FormalSum zeroBox(tab({{0}}, 1, {1}));
    CHECK(pinStraighten(zeroBox, true).output == zeroBox); // already a basis member
}

TEST_CASE("every rewrite step climbs the validated filling order") {
    Alphabet sp2(AlphabetKind::Symplectic, 2);
    std::mt19937_64 rng(11);
    Shape shape(Partition{2, 2}, 2);
    long long observed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Filling f(shape);
        for (int k = 0; k < shape.boxCount(); ++k) {
            Box b = shape.boxAt(k);
            f.setAt(b.row, b.col, sp2.symbolAt(static_cast<int>(rng() % sp2.size())));
        }
        auto canon = canonicalizeSigned(f);
        if (!canon) continue;
        StraightenOptions opts;
        opts.stepObserver = [&](const Filling& replaced, const FormalSum& replacement) {
            for (const auto& [key, c] : replacement.terms()) {
                CHECK(fillingOrder(sp2, key, replaced) > 0);
                ++observed;
            }
        };
        symplecticStraighten(FormalSum(canon->filling), opts);
    }
    CHECK(observed > 100);
}

TEST_CASE("the left-to-right column-word order fails the monotonicity harness") {
    // the very first exchange rewrite [[2,1]] -> [[1,2]] DECREASES that word, which is
    // why the rightmost-column order is the one in use
    Alphabet gl2(AlphabetKind::Gl, 2);
    Filling before = tab({{2, 1}}, 2), after = tab({{1, 2}}, 2);
    CHECK(fillingOrderWith(FillingOrderScheme::ColumnWordLeftToRight, gl2, after, before) < 0);
    CHECK(fillingOrderWith(FillingOrderScheme::RightmostColumnBottomUp, gl2, after, before) > 0);
}

TEST_CASE("a violation outside the documented pattern is surfaced loudly") {
    // rows 1..2 of this column skip the symbols 1, 1bar entirely, so the paired-entry
    // rewrite would loop; the straightener refuses with a diagnostic instead
    FormalSum bad(tab({{2}, {-2}, {3}, {-3}}, 4));
    CHECK_THROWS_AS(symplecticStraighten(bad), Error);
    try {
        symplecticStraighten(bad);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PatternMismatch);
    }
}

TEST_CASE("uniform basis expansion") {
    // the zero-pair row is itself a basis member of the odd orthogonal family
    Shape shape(Partition{2}, 1);
    TensorOracle oracle(shape, {Group::OOdd, 1});
    FormalSum zeros(tab({{0, 0}}, 1));
    StraightenReport rep = expressInBasis(zeros, BasisFamily::OrthogonalOdd, &oracle);
    CHECK(rep.method == StraightenMethod::LinearSolve);
    CHECK(rep.output == zeros);

    // against the intermediate basis that keeps the mixed row instead, it expands
    std::vector<Filling> alt = {tab({{1, 1}}, 1), tab({{1, -1}}, 1), tab({{-1, -1}}, 1),
                                tab({{1, 0}}, 1), tab({{-1, 0}}, 1)};
    StraightenReport expand = expressInCustomBasis(zeros, alt, oracle);
    CHECK(expand.output == Rat(-2) * FormalSum(tab({{1, -1}}, 1)));

    // cross-method agreement on the paired-entry family
    Shape spShape(Partition{1, 1}, 2);
    TensorOracle spOracle(spShape, {Group::Sp, 2});
    FormalSum x(tab({{1}, {-1}}, 2));
    CHECK(expressInBasis(x, BasisFamily::Symplectic, &spOracle).output ==
          expressByLinearSolve(x, spOracle).output);

    CHECK_THROWS_AS(expressInBasis(x, BasisFamily::OrthogonalEven, nullptr), Error);
    CHECK_THROWS_AS(expressInBasis(x, BasisFamily::SundaramOdd, nullptr), Error);
}

TEST_CASE("straightened outputs stay inside the relation span") {
    std::mt19937_64 rng(5);
    struct Config {
        GroupSpec group;
        BasisFamily family;
        Shape shape;
    };
    std::vector<Config> configs = {
        {{Group::Sp, 2}, BasisFamily::Symplectic, Shape(Partition{2, 1}, 2)},
        {{Group::OOdd, 1}, BasisFamily::OrthogonalOdd, Shape(Partition{3}, 1)},
        {{Group::OEven, 2}, BasisFamily::OrthogonalEven, Shape(Partition{1, 1}, 2)},
        {{Group::PinOdd, 1}, BasisFamily::PinOdd, Shape(Partition{2}, 1, true)},
        {{Group::PinEven, 2}, BasisFamily::PinEven, Shape(Partition{1}, 2, true)},
    };
    for (const Config& cfg : configs) {
        TensorOracle oracle(cfg.shape, cfg.group);
        Alphabet a = alphabetFor(cfg.group.kind, cfg.group.rank);
        for (int trial = 0; trial < 40; ++trial) {
            Filling f(cfg.shape);
            for (int k = 0; k < cfg.shape.boxCount(); ++k) {
                Box b = cfg.shape.boxAt(k);
                f.setAt(b.row, b.col, a.symbolAt(static_cast<int>(rng() % a.size())));
            }
            if (cfg.shape.spin())
                for (int i = 0; i < cfg.shape.rank(); ++i)
                    f.setHalf(i, rng() % 2 ? -(i + 1) : i + 1);
            auto canon = canonicalizeSigned(f);
            if (!canon) continue;
            FormalSum x(canon->filling);
            StraightenReport rep = expressInBasis(x, cfg.family, &oracle);
            for (const auto& [key, c] : rep.output.terms())
                CHECK(isBasisMember(key, cfg.family));
            CHECK(oracle.spanMembership(rep.input - rep.output));
            StraightenReport again = expressInBasis(rep.output, cfg.family, &oracle);
            CHECK(again.output == rep.output);
        }
    }
}
