#include "schurtab/formal_sum.hpp"

namespace schurtab {

void FormalSum::add(const Filling& f, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void FormalSum::addCanonicalized(const Filling& f, const Rat& c) {
    if (c == 0) return;
    auto canon = canonicalizeSigned(f);
    if (!canon) return;
    add(canon->filling, canon->sign > 0 ? c : Rat(-c));
}

const Rat* FormalSum::coeff(const Filling& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? nullptr : &it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
    for (const auto& [f, c] : o.terms_) add(f, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
    for (const auto& [f, c] : o.terms_) add(f, Rat(-c));
    return *this;
}

FormalSum& FormalSum::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [f, v] : terms_) v *= c;
    return *this;
}

FormalSum canonicalize(const Filling& f) {
    FormalSum out;
    out.addCanonicalized(f, 1);
    return out;
}

} // namespace schurtab
