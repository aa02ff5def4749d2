#include "schurtab/enumerate.hpp"

#include <algorithm>

namespace schurtab {

namespace {

struct Generator {
    const Shape& shape;
    const Alphabet& alphabet;
    BasisFamily family;
    const FamilyOptions& opts;
    const std::function<void(const Filling&)>& sink;
    std::vector<Sym> symbols;
    bool sundaram;

    bool cellAdmissible(const Filling& f, int r, int c, Sym s) const {
        if (r > 0) { // column constraint against the box above
            Sym above = f.at(r - 1, c);
            bool ok = symOrderKey(above) < symOrderKey(s);
            if (sundaram && above == 0 && s == 0) ok = true;
            if (!ok) return false;
        }
        if (c > 0) { // row constraint against the left neighbor; half-boxes are exempt
            Sym left = f.at(r, c - 1);
            if (symOrderKey(left) > symOrderKey(s)) return false;
            if (sundaram && left == 0 && s == 0) return false;
        }
        return true;
    }

    void fillBoxes(Filling& f, int boxIdx) const {
        if (boxIdx == shape.boxCount()) {
            if (isBasisMember(f, family, opts)) sink(f);
            return;
        }
        Box b = shape.boxAt(boxIdx);
        for (Sym s : symbols) {
            if (!cellAdmissible(f, b.row, b.col, s)) continue;
            f.setAt(b.row, b.col, s);
            fillBoxes(f, boxIdx + 1);
        }
    }

    void run() const {
        Filling f(shape);
        if (!shape.spin()) {
            fillBoxes(f, 0);
            return;
        }
        int n = shape.rank();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) f.setHalf(i, (mask >> i) & 1 ? -(i + 1) : i + 1);
            fillBoxes(f, 0);
        }
    }
};

} // namespace

void enumerateBasis(const Shape& shape, BasisFamily family, const FamilyOptions& opts,
                    const std::function<void(const Filling&)>& sink) {
    if (shape.partition().numParts() > shape.rank())
        fail(ErrorCode::Usage, "shape has more parts than the rank allows");
    if (shape.spin() != familyNeedsSpin(family))
        fail(ErrorCode::Usage, "family '" + familyName(family) + "' and shape disagree about the spin column");
    Alphabet a = alphabetFor(family, shape.rank());
    Generator gen{shape, a, family, opts, sink, a.symbols(),
                  family == BasisFamily::SundaramOdd};
    gen.run();
}

std::vector<Filling> enumerateBasis(const Shape& shape, BasisFamily family, const FamilyOptions& opts) {
    std::vector<Filling> out;
    enumerateBasis(shape, family, opts, [&](const Filling& f) { out.push_back(f); });
    Alphabet a = alphabetFor(family, shape.rank());
    std::sort(out.begin(), out.end(),
              [&](const Filling& x, const Filling& y) { return fillingOrder(a, x, y) < 0; });
    return out;
}

Laurent weightPolynomial(const Shape& shape, BasisFamily family, const FamilyOptions& opts) {
    Laurent poly(shape.rank());
    enumerateBasis(shape, family, opts,
                   [&](const Filling& f) { poly.add(weight(f).doubled, 1); });
    return poly;
}

} // namespace schurtab
