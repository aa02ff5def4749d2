#pragma once

#include <functional>

#include "schurtab/formal_sum.hpp"
#include "schurtab/tensor_oracle.hpp"

namespace schurtab {

enum class StraightenMethod { Combinatorial, LinearSolve };

struct StraightenReport {
    FormalSum input;
    FormalSum output;
    long long steps = 0;
    StraightenMethod method = StraightenMethod::Combinatorial;
};

struct StraightenOptions {
    // Elementary substitutions allowed per input term before the run is aborted; an
    // overrun means the termination order failed and is reported as a diagnostic.
    long long iterationCapPerTerm = 1'000'000;
    // Called on every substitution with the replaced term and its expansion; the
    // monotonicity harness hangs off this hook.
    std::function<void(const Filling& replaced, const FormalSum& replacement)> stepObserver;
};

// Rewrites onto semistandard tableaux: repeatedly locate the leftmost column pair and
// topmost row where a row violation sits, substitute the exchange relation with that k.
StraightenReport glStraighten(FormalSum x, const StraightenOptions& opts = {});

// Rewrites onto symplectic tableaux: alternate exchange straightening with resolving
// the topmost violation of the leftmost violating column through the paired-insertion
// relation at the (i-1, i-1-bar) boxes above it. A violation that does not match that
// pattern throws Error(PatternMismatch).
StraightenReport symplecticStraighten(FormalSum x, const StraightenOptions& opts = {});

// Rewrites onto Pin tableaux: exchange straightening on full boxes plus resolving
// row-condition and half-column parity violations through the half-flip relation at
// the violating box.
StraightenReport pinStraighten(FormalSum x, bool odd, const StraightenOptions& opts = {});

// Uniform entry point. GL, symplectic and Pin families use the combinatorial
// rewriters; the orthogonal families have no rewriting procedure and are expanded by
// solving against the relation span (oracle required).
StraightenReport expressInBasis(const FormalSum& x, BasisFamily family,
                                TensorOracle* oracle = nullptr,
                                const StraightenOptions& opts = {});

// Linear-solve expansion in the family basis, for any module family.
StraightenReport expressByLinearSolve(const FormalSum& x, TensorOracle& oracle);

// Linear-solve expansion against an arbitrary candidate basis.
StraightenReport expressInCustomBasis(const FormalSum& x, const std::vector<Filling>& basis,
                                      TensorOracle& oracle);

} // namespace schurtab
