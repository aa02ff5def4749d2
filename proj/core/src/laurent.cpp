#include "schurtab/laurent.hpp"

#include <algorithm>

#include "schurtab/error.hpp"

namespace schurtab {

Laurent Laurent::monomial(Exp e, Coef c) {
    Laurent out(static_cast<int>(e.size()));
    out.add(e, c);
    return out;
}

Laurent Laurent::constant(int vars, Coef c) {
    Laurent out(vars);
    out.add(Exp(vars, 0), c);
    return out;
}

Laurent::Coef Laurent::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
}

long long Laurent::coeffAsLong(const Exp& e) const {
    Coef c = coeff(e);
    if (!c.fits_slong_p()) fail(ErrorCode::ResourceLimit, "coefficient overflow");
    return c.get_si();
}

void Laurent::add(const Exp& e, const Coef& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != vars_) fail(ErrorCode::Usage, "exponent arity mismatch");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (vars_ != o.vars_) fail(ErrorCode::Usage, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (vars_ != o.vars_) fail(ErrorCode::Usage, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
    if (vars_ != o.vars_) fail(ErrorCode::Usage, "variable count mismatch");
    Laurent out(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e(vars_);
            for (int i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
            out.add(e, c1 * c2);
        }
    return out;
}

Laurent Laurent::scaled(const Coef& c) const {
    Laurent out(vars_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.add(e, v * c);
    return out;
}

Laurent Laurent::dividedBy(const Laurent& o) const {
    if (vars_ != o.vars_) fail(ErrorCode::Usage, "variable count mismatch");
    if (o.isZero()) fail(ErrorCode::Usage, "division by the zero polynomial");
    Laurent rem = *this;
    Laurent quot(vars_);
    const auto& [de, dc] = *o.terms_.rbegin(); // lex-leading term of the divisor
    // Lex-leading cancellation terminates iff the division is exact; guard with a step
    // budget derived from the support sizes.
    long long budget = 4 * static_cast<long long>(terms_.size() + 1) *
                       static_cast<long long>(o.terms_.size() + 1) + 64;
    while (!rem.isZero()) {
        if (--budget < 0) fail(ErrorCode::Internal, "polynomial division does not terminate");
        const auto& [re, rc] = *rem.terms_.rbegin();
        if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
            fail(ErrorCode::Internal, "polynomial division leaves a remainder");
        Exp q(vars_);
        for (int i = 0; i < vars_; ++i) q[i] = re[i] - de[i];
        Coef qc = rc / dc;
        quot.add(q, qc);
        rem -= o * Laurent::monomial(q, qc);
    }
    return quot;
}

Laurent::Coef Laurent::evalOnes() const {
    Coef s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Laurent Laurent::specializeLastVarToOne() const {
    if (vars_ == 0) fail(ErrorCode::Usage, "no variable to specialize");
    Laurent out(vars_ - 1);
    for (const auto& [e, c] : terms_) out.add(Exp(e.begin(), e.end() - 1), c);
    return out;
}

Laurent Laurent::permuteVars(const std::vector<int>& perm) const {
    Laurent out(vars_);
    for (const auto& [e, c] : terms_) {
        Exp p(vars_);
        for (int i = 0; i < vars_; ++i) p[i] = e[perm[i]];
        out.add(p, c);
    }
    return out;
}

Laurent Laurent::negateVar(int i) const {
    Laurent out(vars_);
    for (const auto& [e, c] : terms_) {
        Exp p = e;
        p[i] = -p[i];
        out.add(p, c);
    }
    return out;
}

std::string Laurent::toString() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        for (int i = 0; i < vars_; ++i)
            if (e[i] != 0) out += "*x" + std::to_string(i) + "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace schurtab
