#pragma once

#include <map>

#include "schurtab/filling.hpp"
#include "schurtab/rational.hpp"

namespace schurtab {

// Sparse exact-rational combination of column-canonical fillings over one fixed shape.
// No stored coefficient is zero. Iteration order is the structural filling order, so
// serialization is deterministic.
class FormalSum {
  public:
    using Terms = std::map<Filling, Rat>;

    FormalSum() = default;
    explicit FormalSum(const Filling& f, const Rat& c = 1) { add(f, c); }

    // Adds c * f assuming f is already column-canonical.
    void add(const Filling& f, const Rat& c);
    // Column-sorts f first, folding the sign into the coefficient; drops vanishing terms.
    void addCanonicalized(const Filling& f, const Rat& c);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    const Rat* coeff(const Filling& f) const;

    FormalSum& operator+=(const FormalSum& o);
    FormalSum& operator-=(const FormalSum& o);
    FormalSum& operator*=(const Rat& c);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const Rat& c, FormalSum a) { return a *= c; }

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

  private:
    Terms terms_;
};

// The spec-level canonicalize: +-1 times the column-sorted filling, empty on repeats.
FormalSum canonicalize(const Filling& f);

} // namespace schurtab
