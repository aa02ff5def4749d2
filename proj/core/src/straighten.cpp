#include "schurtab/straighten.hpp"

#include <sstream>

namespace schurtab {

namespace {

std::string fillingTrace(const Filling& f) {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < f.shape().numRows(); ++r) {
        if (r) os << "; ";
        for (int c = 0; c < f.shape().rowLen(r); ++c) {
            if (c) os << ",";
            os << f.at(r, c);
        }
    }
    os << "]";
    if (f.shape().spin()) {
        os << " half [";
        for (int i = 0; i < f.shape().rank(); ++i) {
            if (i) os << ",";
            os << f.halfAt(i);
        }
        os << "]";
    }
    return os.str();
}

struct RowViolation {
    int leftCol, row; // 0-based; exchange uses k = row + 1
};

// Leftmost column pair, then topmost row, where the row weakly-increasing condition
// fails between adjacent columns. Columns are canonical, so these are the only
// semistandardness failures.
std::optional<RowViolation> findRowViolation(const Filling& f) {
    const Shape& sh = f.shape();
    for (int c = 0; c + 1 < sh.numCols(); ++c)
        for (int r = 0; r < sh.colLen(c + 1); ++r)
            if (symOrderKey(f.at(r, c)) > symOrderKey(f.at(r, c + 1))) return RowViolation{c, r};
    return std::nullopt;
}

struct Rewriter {
    const StraightenOptions& opts;
    long long steps = 0;
    long long cap = 0;

    void bump(const Filling& at) {
        if (++steps > cap)
            fail(ErrorCode::IterationCap,
                 "straightening exceeded the step budget at " + fillingTrace(at) +
                     "; the termination order hypothesis failed");
    }

    // Replaces coeff * key by coeff * replacement inside work.
    void substitute(FormalSum& work, const Filling& key, const Rat& coeff, const FormalSum& replacement) {
        bump(key);
        work.add(key, Rat(-coeff));
        work += coeff * replacement;
        if (opts.stepObserver) opts.stepObserver(key, replacement);
    }

    // One exchange substitution if some term is not semistandard; false at fixed point.
    bool glStep(FormalSum& work) {
        for (const auto& [keyRef, coeffRef] : work.terms()) {
            auto v = findRowViolation(keyRef);
            if (!v) continue;
            Filling key = keyRef; // copies: substitute mutates the map
            Rat coeff = coeffRef;
            int k = v->row + 1;
            RelationInstance ex = exchangeRelation(key, v->leftCol, v->leftCol + 1, k);
            FormalSum repl = ex.vector; // key - sum of the swaps
            repl.add(key, -1);
            repl *= Rat(-1); // now: sum of the swaps, canonicalized
            substitute(work, key, coeff, repl);
            return true;
        }
        return false;
    }
};

} // namespace

StraightenReport glStraighten(FormalSum x, const StraightenOptions& opts) {
    StraightenReport report;
    report.input = x;
    report.method = StraightenMethod::Combinatorial;
    Rewriter rw{opts};
    rw.cap = opts.iterationCapPerTerm * std::max<long long>(1, static_cast<long long>(x.size()));
    while (rw.glStep(x)) {
    }
    report.output = std::move(x);
    report.steps = rw.steps;
    return report;
}

namespace {

struct ColumnViolation {
    int col, row; // topmost symplectic-condition failure of the leftmost bad column
};

std::optional<ColumnViolation> findSymplecticViolation(const Filling& f) {
    const Shape& sh = f.shape();
    for (int c = 0; c < sh.numCols(); ++c)
        for (int r = 0; r < sh.colLen(c); ++r)
            if (symOrderKey(f.at(r, c)) < 2L * r) return ColumnViolation{c, r};
    return std::nullopt;
}

} // namespace

StraightenReport symplecticStraighten(FormalSum x, const StraightenOptions& opts) {
    StraightenReport report;
    report.input = x;
    report.method = StraightenMethod::Combinatorial;
    Rewriter rw{opts};
    rw.cap = opts.iterationCapPerTerm * std::max<long long>(1, static_cast<long long>(x.size()));
    for (;;) {
        if (rw.glStep(x)) continue;
        bool changed = false;
        for (const auto& [keyRef, coeffRef] : x.terms()) {
            auto v = findSymplecticViolation(keyRef);
            if (!v) continue;
            Filling key = keyRef;
            Rat coeff = coeffRef;
            int r = v->row, c = v->col;
            // The violating entry must be (i-1)-bar under the entry i-1, with exactly
            // one of j, j-bar above for every j < i; otherwise the documented rewrite
            // pattern does not apply and we surface that loudly.
            if (r == 0 || key.at(r, c) != -r || key.at(r - 1, c) != r)
                fail(ErrorCode::PatternMismatch,
                     "symplectic violation at row " + std::to_string(r + 1) + " of " +
                         fillingTrace(key) + " does not match the paired-entry pattern");
            for (int j = 1; j <= r; ++j) {
                int count = 0;
                for (int rr = 0; rr < r; ++rr) count += std::abs(key.at(rr, c)) == j;
                if (count != 1)
                    fail(ErrorCode::PatternMismatch,
                         "column above the violation in " + fillingTrace(key) +
                             " does not hold exactly one of " + std::to_string(j) + ", " +
                             std::to_string(j) + "-bar");
            }
            RelationInstance inst = symplecticRelation(key, {r - 1, c}, {r, c});
            const Rat* self = inst.vector.coeff(key);
            if (!self || *self != 2)
                fail(ErrorCode::Internal, "paired-insertion instance does not carry 2x the input term");
            FormalSum repl = inst.vector; // 2*key + rest = 0  =>  key = -rest/2
            repl.add(key, -2);
            repl *= Rat(-1, 2);
            rw.substitute(x, key, coeff, repl);
            changed = true;
            break;
        }
        if (!changed) break;
    }
    report.output = std::move(x);
    report.steps = rw.steps;
    return report;
}

namespace {

struct PinViolation {
    int row, col;
    bool spinParity; // false: row-condition violation
};

// Scan columns left to right, each top to bottom, for the first violation of the
// row condition or of the half-column parity rule.
std::optional<PinViolation> findPinViolation(const Filling& f) {
    const Shape& sh = f.shape();
    for (int c = 0; c < sh.numCols(); ++c)
        for (int r = 0; r < sh.colLen(c); ++r) {
            Sym v = f.at(r, c);
            if (symOrderKey(v) < 2L * r) return PinViolation{r, c, false};
            if (r < sh.rank() && v == barSym(f.halfAt(r))) {
                bool covered = sh.containsBox(r - 1, c) && f.at(r - 1, c) == f.halfAt(r);
                if (!covered) return PinViolation{r, c, true};
            }
        }
    return std::nullopt;
}

} // namespace

StraightenReport pinStraighten(FormalSum x, bool odd, const StraightenOptions& opts) {
    StraightenReport report;
    report.input = x;
    report.method = StraightenMethod::Combinatorial;
    Rewriter rw{opts};
    rw.cap = opts.iterationCapPerTerm * std::max<long long>(1, static_cast<long long>(x.size()));
    for (;;) {
        if (rw.glStep(x)) continue;
        bool changed = false;
        for (const auto& [keyRef, coeffRef] : x.terms()) {
            if (!keyRef.shape().spin()) fail(ErrorCode::Usage, "pin straightening needs a spin shape");
            auto v = findPinViolation(keyRef);
            if (!v) continue;
            Filling key = keyRef;
            Rat coeff = coeffRef;
            Sym entry = key.at(v->row, v->col);
            int mate = std::abs(entry);
            if (mate == 0 || mate > key.shape().rank() || key.halfAt(mate - 1) != -entry)
                fail(ErrorCode::PatternMismatch,
                     "violating entry of " + fillingTrace(key) +
                         " is not the flip of its half-column partner");
            Filling rest = key;
            rest.setHalf(mate - 1, -key.halfAt(mate - 1));
            RelationInstance inst = pinRelation(rest, {v->row, v->col}, odd);
            const Rat* self = inst.vector.coeff(key);
            if (!self || *self != 1)
                fail(ErrorCode::Internal, "half-flip instance does not carry the input term once");
            FormalSum repl = inst.vector; // key + rest = 0  =>  key = -rest
            repl.add(key, -1);
            repl *= Rat(-1);
            rw.substitute(x, key, coeff, repl);
            changed = true;
            break;
        }
        if (!changed) break;
    }
    report.output = std::move(x);
    report.steps = rw.steps;
    return report;
}

StraightenReport expressByLinearSolve(const FormalSum& x, TensorOracle& oracle) {
    StraightenReport report;
    report.input = x;
    report.method = StraightenMethod::LinearSolve;
    const auto& basis = oracle.familyBasis();
    std::vector<Rat> coords = oracle.solveInFamilyBasis(x);
    for (std::size_t b = 0; b < basis.size(); ++b) report.output.add(basis[b], coords[b]);
    return report;
}

StraightenReport expressInCustomBasis(const FormalSum& x, const std::vector<Filling>& basis,
                                      TensorOracle& oracle) {
    StraightenReport report;
    report.input = x;
    report.method = StraightenMethod::LinearSolve;
    std::vector<Rat> coords = oracle.coordinatesInBasis(x, basis);
    for (std::size_t b = 0; b < basis.size(); ++b) report.output.add(basis[b], coords[b]);
    return report;
}

StraightenReport expressInBasis(const FormalSum& x, BasisFamily family, TensorOracle* oracle,
                                const StraightenOptions& opts) {
    switch (family) {
    case BasisFamily::GlSemistandard: return glStraighten(x, opts);
    case BasisFamily::Symplectic: return symplecticStraighten(x, opts);
    case BasisFamily::PinOdd: return pinStraighten(x, true, opts);
    case BasisFamily::PinEven: return pinStraighten(x, false, opts);
    case BasisFamily::OrthogonalOdd:
    case BasisFamily::OrthogonalEven:
        if (!oracle)
            fail(ErrorCode::Usage,
                 "orthogonal families have no combinatorial rewriter; a tensor oracle is required");
        return expressByLinearSolve(x, *oracle);
    case BasisFamily::SundaramOdd:
        fail(ErrorCode::Usage, "sundaram tableaux span no Schur module; nothing to express");
    }
    fail(ErrorCode::Usage, "unknown family");
}

} // namespace schurtab
