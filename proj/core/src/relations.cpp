#include "schurtab/relations.hpp"

#include <set>
#include <sstream>

namespace schurtab {

std::string relationKindName(RelationKind k) {
    switch (k) {
    case RelationKind::Alternating: return "alternating";
    case RelationKind::Exchange: return "exchange";
    case RelationKind::Symplectic: return "symplectic";
    case RelationKind::Orthogonal: return "orthogonal";
    case RelationKind::Pin: return "pin";
    }
    return "?";
}

namespace {

void finalize(RelationInstance& inst) {
    for (const RawTerm& t : inst.raw) inst.vector.addCanonicalized(t.filling, t.coeff);
    inst.collapsed = inst.vector.empty();
}

void chooseSubsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (int i = start; i <= n - (k - pos); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
}

} // namespace

RelationInstance alternatingRelation(const Filling& f, int col, int row1, int row2) {
    const Shape& sh = f.shape();
    if (col < 0 || col >= sh.numCols() || row1 == row2 || !sh.containsBox(row1, col) ||
        !sh.containsBox(row2, col))
        fail(ErrorCode::Usage, "alternating relation site out of shape");
    RelationInstance inst;
    inst.kind = RelationKind::Alternating;
    inst.site.boxes = {{row1, col}, {row2, col}};
    Filling swapped = f;
    swapped.setAt(row1, col, f.at(row2, col));
    swapped.setAt(row2, col, f.at(row1, col));
    inst.raw = {{f, 1}, {swapped, 1}};
    finalize(inst);
    return inst;
}

RelationInstance exchangeRelation(const Filling& f, int leftCol, int rightCol, int k) {
    const Shape& sh = f.shape();
    if (leftCol < 0 || rightCol <= leftCol || rightCol >= sh.numCols())
        fail(ErrorCode::Usage, "exchange relation needs leftCol < rightCol inside the shape");
    if (k < 1 || k > sh.colLen(rightCol))
        fail(ErrorCode::Usage, "exchange relation needs 1 <= k <= right column length");
    RelationInstance inst;
    inst.kind = RelationKind::Exchange;
    inst.site.leftCol = leftCol;
    inst.site.rightCol = rightCol;
    inst.site.k = k;
    inst.raw.push_back({f, 1});
    chooseSubsets(sh.colLen(leftCol), k, [&](const std::vector<int>& rows) {
        Filling g = f;
        for (int j = 0; j < k; ++j) {
            g.setAt(rows[j], leftCol, f.at(j, rightCol));
            g.setAt(j, rightCol, f.at(rows[j], leftCol));
        }
        inst.raw.push_back({g, -1});
    });
    finalize(inst);
    return inst;
}

namespace {

void requireDistinctBoxes(const Shape& sh, Box b1, Box b2) {
    if (b1 == b2) fail(ErrorCode::Usage, "erased boxes must be distinct");
    if (!sh.containsBox(b1.row, b1.col) || !sh.containsBox(b2.row, b2.col))
        fail(ErrorCode::Usage, "erased box out of shape");
}

} // namespace

RelationInstance symplecticRelation(const Filling& rest, Box b1, Box b2) {
    const Shape& sh = rest.shape();
    requireDistinctBoxes(sh, b1, b2);
    RelationInstance inst;
    inst.kind = RelationKind::Symplectic;
    inst.site.boxes = {b1, b2};
    for (int i = 1; i <= sh.rank(); ++i) {
        Filling fi = rest, fip = rest;
        fi.setAt(b1.row, b1.col, i);
        fi.setAt(b2.row, b2.col, -i);
        fip.setAt(b1.row, b1.col, -i);
        fip.setAt(b2.row, b2.col, i);
        inst.raw.push_back({fi, 1});
        inst.raw.push_back({fip, -1});
    }
    finalize(inst);
    return inst;
}

RelationInstance orthogonalRelation(const Filling& rest, Box b1, Box b2, bool odd) {
    const Shape& sh = rest.shape();
    requireDistinctBoxes(sh, b1, b2);
    RelationInstance inst;
    inst.kind = RelationKind::Orthogonal;
    inst.site.boxes = {b1, b2};
    if (odd) {
        Filling f0 = rest;
        f0.setAt(b1.row, b1.col, 0);
        f0.setAt(b2.row, b2.col, 0);
        inst.raw.push_back({f0, 1});
    }
    for (int i = 1; i <= sh.rank(); ++i) {
        Filling fi = rest, fip = rest;
        fi.setAt(b1.row, b1.col, i);
        fi.setAt(b2.row, b2.col, -i);
        fip.setAt(b1.row, b1.col, -i);
        fip.setAt(b2.row, b2.col, i);
        inst.raw.push_back({fi, 1});
        inst.raw.push_back({fip, 1});
    }
    finalize(inst);
    return inst;
}

RelationInstance pinRelation(const Filling& rest, Box b, bool odd) {
    const Shape& sh = rest.shape();
    if (!sh.spin()) fail(ErrorCode::Usage, "pin relations need a spin shape");
    if (!sh.containsBox(b.row, b.col)) fail(ErrorCode::Usage, "erased box out of shape");
    RelationInstance inst;
    inst.kind = RelationKind::Pin;
    inst.site.boxes = {b};
    if (odd) {
        Filling f0 = rest;
        f0.setAt(b.row, b.col, 0);
        inst.raw.push_back({f0, 1});
    }
    for (int i = 1; i <= sh.rank(); ++i) {
        Filling fi = rest;
        fi.setAt(b.row, b.col, rest.halfAt(i - 1));
        fi.setHalf(i - 1, -rest.halfAt(i - 1));
        inst.raw.push_back({fi, 1});
    }
    finalize(inst);
    return inst;
}

void forEachAssignment(const Shape& shape, const Alphabet& alphabet,
                       const std::function<void(const Filling&)>& fn) {
    int r = shape.boxCount();
    std::vector<Sym> symbols = alphabet.symbols();
    Filling f(shape);
    auto runCells = [&]() {
        std::vector<int> digits(r, 0);
        for (;;) {
            for (int k = 0; k < r; ++k) {
                Box b = shape.boxAt(k);
                f.setAt(b.row, b.col, symbols[digits[k]]);
            }
            fn(f);
            int k = r - 1;
            while (k >= 0 && ++digits[k] == static_cast<int>(symbols.size())) digits[k--] = 0;
            if (k < 0) break;
        }
    };
    if (!shape.spin()) {
        runCells();
        return;
    }
    int n = shape.rank();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i) f.setHalf(i, (mask >> i) & 1 ? -(i + 1) : i + 1);
        runCells();
    }
}

namespace {

// Scale-normalized fingerprint: instances spanning the same line deduplicate.
std::string vectorKey(const FormalSum& v) {
    std::ostringstream os;
    const Rat& lead = v.terms().begin()->second;
    for (const auto& [f, c] : v.terms()) {
        for (Sym s : f.cells()) os << s << ',';
        for (Sym s : f.half()) os << s << ',';
        os << '=' << ratToString(Rat(c / lead)) << ';';
    }
    return os.str();
}

std::vector<std::pair<Box, Box>> boxPairs(const Shape& sh, PairPolicy policy) {
    std::vector<std::pair<Box, Box>> out;
    for (int i = 0; i < sh.boxCount(); ++i)
        for (int j = i + 1; j < sh.boxCount(); ++j) {
            Box a = sh.boxAt(i), b = sh.boxAt(j);
            if (policy == PairPolicy::SameRow && a.row != b.row) continue;
            if (policy == PairPolicy::SameColumn && a.col != b.col) continue;
            out.push_back({a, b});
        }
    return out;
}

} // namespace

void allRelations(const Shape& shape, const GroupSpec& group, const RelationOptions& opts,
                  const std::function<void(const RelationInstance&)>& sink) {
    if (shape.spin() != groupNeedsSpin(group.kind))
        fail(ErrorCode::Usage, "group '" + groupName(group.kind) + "' and shape disagree about the spin column");
    Alphabet alphabet = alphabetFor(group.kind, group.rank);
    std::set<std::string> seen;
    auto emit = [&](const RelationInstance& inst) {
        if (opts.dedup && !inst.collapsed && !seen.insert(vectorKey(inst.vector)).second) return;
        sink(inst);
    };

    forEachAssignment(shape, alphabet, [&](const Filling& f) {
        for (int c = 0; c < shape.numCols(); ++c)
            for (int r1 = 0; r1 < shape.colLen(c); ++r1)
                for (int r2 = r1 + 1; r2 < shape.colLen(c); ++r2)
                    emit(alternatingRelation(f, c, r1, r2));
        for (int lc = 0; lc < shape.numCols(); ++lc)
            for (int rc = lc + 1; rc < shape.numCols(); ++rc)
                for (int k = 1; k <= shape.colLen(rc); ++k)
                    emit(exchangeRelation(f, lc, rc, k));
    });

    if (!opts.groupRelations) return;

    switch (group.kind) {
    case Group::Gl:
        break;
    case Group::Sp:
    case Group::OOdd:
    case Group::OEven: {
        bool sp = group.kind == Group::Sp;
        bool odd = group.kind == Group::OOdd;
        auto pairs = boxPairs(shape, sp ? opts.symplecticPairs : opts.orthogonalPairs);
        for (const auto& [b1, b2] : pairs) {
            forEachAssignment(shape, alphabet, [&](const Filling& rest) {
                // only one representative per completion: fix erased-box entries to the
                // first symbol so the odometer does not multiply-count them
                if (rest.at(b1.row, b1.col) != alphabet.symbolAt(0)) return;
                if (rest.at(b2.row, b2.col) != alphabet.symbolAt(0)) return;
                emit(sp ? symplecticRelation(rest, b1, b2)
                        : orthogonalRelation(rest, b1, b2, odd));
            });
        }
        break;
    }
    case Group::PinOdd:
    case Group::PinEven: {
        bool odd = group.kind == Group::PinOdd;
        for (int bi = 0; bi < shape.boxCount(); ++bi) {
            Box b = shape.boxAt(bi);
            forEachAssignment(shape, alphabet, [&](const Filling& rest) {
                if (rest.at(b.row, b.col) != alphabet.symbolAt(0)) return;
                emit(pinRelation(rest, b, odd));
            });
        }
        break;
    }
    }
}

std::vector<RelationInstance> allRelations(const Shape& shape, const GroupSpec& group,
                                           const RelationOptions& opts) {
    std::vector<RelationInstance> out;
    allRelations(shape, group, opts, [&](const RelationInstance& inst) { out.push_back(inst); });
    return out;
}

} // namespace schurtab
