#pragma once

#include <optional>
#include <string>

#include "schurtab/relations.hpp"
#include "schurtab/tensor_space.hpp"

namespace schurtab {

// Small dense exact matrix over the alphabet index space; g maps the basis vector
// with index j to sum_i at(i, j) * e_i.
class RatMatrix {
  public:
    RatMatrix() = default;
    explicit RatMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rat(0)) {}
    static RatMatrix identity(int n);

    int size() const { return n_; }
    Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix&) const = default;

  private:
    int n_ = 0;
    std::vector<Rat> a_;
};

// Gram matrix of the invariant bilinear form in the alphabet index order; the
// identity for GL (no form).
RatMatrix gramMatrix(const GroupSpec& group);
bool preservesForm(const RatMatrix& g, const GroupSpec& group);

struct NamedMatrix {
    std::string name;
    RatMatrix matrix;
};

// Fixed, versioned generator list per (group, rank): barred-symbol permutations and
// swaps, a rational torus element, transvections of the ambient form, and the
// e0 -> -e0 reflection plus -identity for the odd orthogonal groups.
std::vector<NamedMatrix> documentedGenerators(const GroupSpec& group);

struct ClosureItem {
    std::string what;
    bool pass = false;
};

struct ClosureReport {
    std::vector<ClosureItem> items;
    long long checked = 0;
    bool allPass = true;
    void record(std::string what, bool pass);
};

struct OracleOptions {
    RelationOptions relations;
    std::int64_t maxDimension = 200000;
};

// Ground-truth engine for one (shape, group): models the full tensor power, computes
// the span of all defining relations by exact sparse elimination, and answers
// dimension, independence, membership, closure and group-action questions.
class TensorOracle {
  public:
    TensorOracle(Shape shape, GroupSpec group, OracleOptions opts = {});

    const Shape& shape() const { return shape_; }
    const GroupSpec& group() const { return group_; }
    const TensorSpace& space() const { return space_; }
    const OracleOptions& options() const { return opts_; }

    const EchelonSpan& relationSpan();
    std::int64_t relationRank() { return relationSpan().rank(); }
    std::int64_t quotientDimension() { return space_.dimension() - relationSpan().rank(); }

    // rank(span + embedded candidates) == rank(span) + |candidates|
    bool checkIndependent(const std::vector<Filling>& candidates);

    bool spanMembership(const FormalSum& x) { return relationSpan().contains(space_.embed(x)); }
    bool spanMembershipRaw(const std::vector<RawTerm>& raw);

    // (a) single-exchange images of every group-relation instance stay in the span;
    // (b) for Pin groups, the orthogonal relations on full boxes, per half-column
    //     state, lie in the pin + alternating + exchange span.
    ClosureReport checkClosure();

    // Diagonal tensor action of g on a raw vector; no form check.
    SparseVec actOnVector(const RatMatrix& g, const SparseVec& v) const;

    // Checks the form, acts on each tensor factor, and re-expresses the result in the
    // family basis. Spin shapes accept torus-diagonal matrices with perfect-square
    // entries only (half-box factors need exact square roots).
    FormalSum act(const RatMatrix& g, const FormalSum& x);

    const std::vector<Filling>& familyBasis();
    // Coordinates of x in the family basis modulo the relation span; throws
    // Error(InconsistentSolve) when none exist.
    std::vector<Rat> solveInFamilyBasis(const FormalSum& x);
    FormalSum expressVector(const SparseVec& v); // same, from a raw tensor vector

    // Coordinates against an arbitrary candidate list (uncached); throws
    // Error(InconsistentSolve) when the candidates are dependent or x is outside.
    std::vector<Rat> coordinatesInBasis(const FormalSum& x, const std::vector<Filling>& basis);

  private:
    // Forward-eliminated (not back-substituted) rows with coordinate tracking:
    // each stored row equals sum_b coord[b] * reduce(embed(basis[b])).
    struct AugmentedSolver {
        std::map<std::int64_t, std::pair<SparseVec, std::vector<Rat>>> rows;
        void insert(SparseVec v, std::vector<Rat> coord, std::size_t nbasis);
        std::vector<Rat> solve(SparseVec v, std::size_t nbasis) const;
    };
    AugmentedSolver makeSolver(const std::vector<Filling>& basis);

    Shape shape_;
    GroupSpec group_;
    OracleOptions opts_;
    Alphabet alphabet_;
    TensorSpace space_;
    std::optional<EchelonSpan> span_;
    std::optional<std::vector<Filling>> familyBasis_;
    std::optional<AugmentedSolver> familySolver_;
};

} // namespace schurtab
