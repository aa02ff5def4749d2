#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schurtab/rational.hpp"

namespace schurtab {

// Multivariate Laurent polynomial with integer coefficients. Throughout the library
// exponent vectors are DOUBLED weights, so half-integral spin weights stay integral.
class Laurent {
  public:
    using Exp = std::vector<int>;
    using Coef = mpz_class;
    using Terms = std::map<Exp, Coef>;

    Laurent() = default;
    explicit Laurent(int vars) : vars_(vars) {}
    static Laurent monomial(Exp e, Coef c = 1);
    static Laurent constant(int vars, Coef c);

    int vars() const { return vars_; }
    bool isZero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Coef coeff(const Exp& e) const;
    long long coeffAsLong(const Exp& e) const; // throws when it does not fit

    void add(const Exp& e, const Coef& c);
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent operator*(const Laurent& o) const;
    Laurent scaled(const Coef& c) const;

    // Exact division; throws Error(Internal) when o does not divide *this.
    Laurent dividedBy(const Laurent& o) const;

    Coef evalOnes() const; // sum of coefficients
    Laurent specializeLastVarToOne() const;
    Laurent permuteVars(const std::vector<int>& perm) const;  // exp'[i] = exp[perm[i]]
    Laurent negateVar(int i) const;

    bool operator==(const Laurent& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    std::string toString() const; // for diagnostics: "x0^2*x1^-1 + 3"

  private:
    int vars_ = 0;
    Terms terms_;
};

} // namespace schurtab
