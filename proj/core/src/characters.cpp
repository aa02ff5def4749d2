#include "schurtab/characters.hpp"

#include <algorithm>

#include "schurtab/error.hpp"

namespace schurtab {

namespace {

struct WeylElement {
    std::vector<int> perm; // images: coordinate i reads source perm[i]
    unsigned signMask;
    int sign;
};

std::vector<WeylElement> weylGroup(const RootSystem& rs) {
    int n = rs.rank;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::pair<std::vector<int>, int>> perms;
    // enumerate permutations with parity
    auto parityOf = [](const std::vector<int>& p) {
        int par = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++par;
        return par % 2 == 0 ? 1 : -1;
    };
    std::sort(perm.begin(), perm.end());
    do {
        perms.emplace_back(perm, parityOf(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    bool signs = rs.family == RootFamily::B || rs.family == RootFamily::C || rs.family == RootFamily::D;
    bool evenOnly = rs.family == RootFamily::D;
    std::vector<WeylElement> out;
    for (const auto& [p, psign] : perms) {
        if (!signs) {
            out.push_back({p, 0, psign});
            continue;
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            int bits = __builtin_popcount(mask);
            if (evenOnly && bits % 2 != 0) continue;
            int sgn = psign;
            if (rs.family != RootFamily::D && bits % 2 != 0) sgn = -sgn;
            out.push_back({p, mask, sgn});
        }
    }
    return out;
}

Laurent alternant(const RootSystem& rs, const std::vector<int>& vDoubled,
                  const std::vector<WeylElement>& group) {
    Laurent out(rs.rank);
    for (const WeylElement& w : group) {
        std::vector<int> e(rs.rank);
        for (int i = 0; i < rs.rank; ++i) {
            int v = vDoubled[w.perm[i]];
            e[i] = (w.signMask >> w.perm[i]) & 1 ? -v : v;
        }
        out.add(e, w.sign);
    }
    return out;
}

} // namespace

Laurent character(const RootSystem& rs, const std::vector<int>& hwDoubled) {
    if (static_cast<int>(hwDoubled.size()) != rs.rank)
        fail(ErrorCode::Usage, "highest weight arity does not match the rank");
    if (!isDominant(rs, hwDoubled)) fail(ErrorCode::Usage, "highest weight is not dominant");
    if (rs.rank == 0) return Laurent::constant(0, 1);
    std::vector<WeylElement> group = weylGroup(rs);
    std::vector<int> rho = rs.rhoDoubled();
    std::vector<int> shifted(rs.rank);
    for (int i = 0; i < rs.rank; ++i) shifted[i] = hwDoubled[i] + rho[i];
    Laurent num = alternant(rs, shifted, group);
    Laurent den = alternant(rs, rho, group);
    Laurent chi = num.dividedBy(den);
    for (const auto& [e, c] : chi.terms())
        if (c < 0) fail(ErrorCode::Internal, "character has a negative coefficient");
    return chi;
}

Laurent oGroupCharacter(bool odd, int n, const Partition& lambda) {
    if (lambda.numParts() > n) fail(ErrorCode::Usage, "partition has more parts than the rank");
    if (odd) return character({RootFamily::B, n}, doubledWeight(lambda, n));
    RootSystem d{RootFamily::D, n};
    std::vector<int> w = doubledWeight(lambda, n);
    Laurent chi = character(d, w);
    if (lambda.part(n - 1) > 0) chi += character(d, negateLast(w));
    return chi;
}

long long oGroupDim(bool odd, int n, const Partition& lambda, bool primed) {
    if (lambda.numParts() > n) fail(ErrorCode::Usage, "partition has more parts than the rank");
    if (odd) return weylDim({RootFamily::B, n}, doubledWeight(lambda, n));
    std::vector<int> w = doubledWeight(lambda, n);
    if (lambda.part(n - 1) > 0) {
        if (primed) fail(ErrorCode::Usage, "no primed label exists when the last part is nonzero");
        RootSystem d{RootFamily::D, n};
        return weylDim(d, w) + weylDim(d, negateLast(w));
    }
    return weylDim({RootFamily::D, n}, w);
}

namespace {

Partition partitionFromDoubled(const std::vector<int>& doubled) {
    std::vector<int> parts;
    for (int d : doubled) {
        if (d % 2 != 0 || d < 0) fail(ErrorCode::Internal, "peeled weight is not a partition");
        parts.push_back(d / 2);
    }
    return Partition(parts);
}

void checkNoNegative(const Laurent& poly) {
    for (const auto& [e, c] : poly.terms())
        if (c < 0) fail(ErrorCode::Internal, "negative coefficient during peeling");
}

// Greedy dominant peeling by irreducible characters of the family.
std::vector<BranchTerm> peelBy(RootFamily family, int rank, Laurent poly) {
    RootSystem rs{family, rank};
    std::vector<BranchTerm> out;
    if (rank == 0) {
        long long c = Laurent::Coef(poly.evalOnes()).get_si();
        if (c < 0) fail(ErrorCode::Internal, "negative coefficient during peeling");
        if (c > 0) out.push_back({Partition{}, c, false});
        return out;
    }
    while (!poly.isZero()) {
        checkNoNegative(poly);
        const Laurent::Exp* found = nullptr;
        for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
            if (it->second > 0 && isDominant(rs, it->first)) {
                found = &it->first;
                break;
            }
        if (!found) fail(ErrorCode::Internal, "no dominant weight left while peeling");
        Laurent::Exp best = *found; // copy: the subtraction below erases the node
        long long mult = poly.coeffAsLong(best);
        poly -= character(rs, best).scaled(Laurent::Coef(static_cast<long>(mult)));
        out.push_back({partitionFromDoubled(best), mult, false});
    }
    std::reverse(out.begin(), out.end()); // ascending label order
    return out;
}

// Peeling by full even-orthogonal-group characters: highest-weight pairs are consumed
// together; labels with a vanishing last part cover both prime variants.
std::vector<BranchTerm> peelByEvenOrthogonal(int rank, Laurent poly) {
    RootSystem rs{RootFamily::D, rank};
    std::vector<BranchTerm> out;
    if (rank == 0) {
        long long c = Laurent::Coef(poly.evalOnes()).get_si();
        if (c < 0) fail(ErrorCode::Internal, "negative coefficient during peeling");
        if (c > 0) out.push_back({Partition{}, c, true});
        return out;
    }
    while (!poly.isZero()) {
        checkNoNegative(poly);
        const Laurent::Exp* found = nullptr;
        for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
            if (it->second > 0 && isDominant(rs, it->first)) {
                found = &it->first;
                break;
            }
        if (!found) fail(ErrorCode::Internal, "no dominant weight left while peeling");
        Laurent::Exp best = *found; // copy: the subtraction below erases the node
        if (best.back() < 0)
            fail(ErrorCode::Internal, "unpaired negative highest weight while peeling");
        long long mult = poly.coeffAsLong(best);
        Laurent chi = character(rs, best);
        bool paired = best.back() > 0;
        if (paired) chi += character(rs, negateLast(best));
        poly -= chi.scaled(Laurent::Coef(static_cast<long>(mult)));
        out.push_back({partitionFromDoubled(best), mult, !paired});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<BranchTerm> branchByCharacter(BranchPair pair, int n, const Partition& lambda) {
    if (n < 1) fail(ErrorCode::Usage, "branching needs rank >= 1");
    if (lambda.numParts() > n) fail(ErrorCode::Usage, "partition has more parts than the rank");
    switch (pair) {
    case BranchPair::CToC: {
        Laurent chi = character({RootFamily::C, n}, doubledWeight(lambda, n));
        return peelBy(RootFamily::C, n - 1, chi.specializeLastVarToOne());
    }
    case BranchPair::BToD: {
        Laurent chi = character({RootFamily::B, n}, doubledWeight(lambda, n));
        return peelByEvenOrthogonal(n, chi);
    }
    case BranchPair::DToB: {
        Laurent chi = oGroupCharacter(false, n, lambda);
        auto terms = peelBy(RootFamily::B, n - 1, chi.specializeLastVarToOne());
        for (BranchTerm& t : terms) t.primeUnresolved = true; // the center is invisible here
        return terms;
    }
    }
    fail(ErrorCode::Usage, "unknown branching pair");
}

std::vector<BranchTerm> evenToEvenByCharacter(int n, const Partition& lambda) {
    if (n < 1) fail(ErrorCode::Usage, "branching needs rank >= 1");
    Laurent chi = oGroupCharacter(false, n, lambda);
    return peelByEvenOrthogonal(n - 1, chi.specializeLastVarToOne());
}

long long branchSourceDim(BranchPair pair, int n, const Partition& lambda) {
    switch (pair) {
    case BranchPair::CToC: return weylDim({RootFamily::C, n}, doubledWeight(lambda, n));
    case BranchPair::BToD: return oGroupDim(true, n, lambda);
    case BranchPair::DToB: return oGroupDim(false, n, lambda);
    }
    fail(ErrorCode::Usage, "unknown branching pair");
}

long long branchTargetDim(BranchPair pair, int n, const BranchTerm& term) {
    switch (pair) {
    case BranchPair::CToC:
        return weylDim({RootFamily::C, n - 1}, doubledWeight(term.target, n - 1));
    case BranchPair::BToD: return oGroupDim(false, n, term.target);
    case BranchPair::DToB: return oGroupDim(true, n - 1, term.target);
    }
    fail(ErrorCode::Usage, "unknown branching pair");
}

namespace {

// Free range of the j-th interlacer (1-based j), empty when inconsistent.
long long interlaceChoices(const Partition& lam, const Partition& mu, int j) {
    long long hi = std::min<long long>(lam.part(j - 1), j >= 2 ? mu.part(j - 2) : lam.part(0));
    long long lo = std::max<long long>(lam.part(j), mu.part(j - 1));
    return hi - lo + 1;
}

void forEachSubPartition(int maxParts, int maxPart, const std::function<void(const Partition&)>& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxAllowed) -> void {
        fn(Partition(cur));
        if (static_cast<int>(cur.size()) >= maxParts) return;
        for (int p = maxAllowed; p >= 1; --p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, maxPart);
}

} // namespace

std::vector<BranchTerm> closedFormBranch(ClosedFormRule rule, int n, const Partition& lambda) {
    if (n < 1) fail(ErrorCode::Usage, "branching needs rank >= 1");
    if (lambda.numParts() > n) fail(ErrorCode::Usage, "partition has more parts than the rank");
    std::vector<BranchTerm> out;
    switch (rule) {
    case ClosedFormRule::SpInterlacing: {
        // multiplicity of mu = number of nu with lambda/nu and nu/mu both interlacing
        forEachSubPartition(n - 1, lambda.part(0), [&](const Partition& mu) {
            long long mult = 1;
            for (int j = 1; j <= n && mult > 0; ++j)
                mult *= std::max<long long>(0, interlaceChoices(lambda, mu, j));
            if (mult > 0) out.push_back({mu, mult, false});
        });
        break;
    }
    case ClosedFormRule::SpChainLiteral: {
        // the literal chain and product of the restriction rule, summed over the stated i
        forEachSubPartition(n - 1, lambda.part(0), [&](const Partition& mu) {
            long long total = 0;
            for (int i = 1; i <= n; ++i) {
                bool ok = true;
                for (int j = 1; j <= i - 1 && ok; ++j)
                    ok = lambda.part(j - 1) >= mu.part(j - 1) && mu.part(j - 1) >= lambda.part(j);
                if (ok && i <= n - 1) ok = lambda.part(i) > mu.part(i - 1);
                for (int j = i; j <= n - 1 && ok; ++j) {
                    ok = mu.part(j - 1) >= lambda.part(j + 1);
                    if (ok && j + 1 <= n - 1) ok = lambda.part(j + 1) >= mu.part(j);
                }
                if (!ok) continue;
                long long m = 1;
                for (int j = 1; j <= i - 1; ++j) m *= lambda.part(j - 1) - mu.part(j - 1) + 1;
                m *= lambda.part(i - 1) - lambda.part(i) + 1;
                for (int j = i; j <= n - 1; ++j) m *= mu.part(j - 1) - lambda.part(j + 1) + 1;
                total += m;
            }
            if (total > 0) out.push_back({mu, total, false});
        });
        break;
    }
    case ClosedFormRule::OddToEven: {
        // mu interlacing lambda from below, n parts, each once
        forEachSubPartition(n, lambda.part(0), [&](const Partition& mu) {
            for (int j = 1; j <= n; ++j) {
                if (lambda.part(j - 1) < mu.part(j - 1)) return;
                if (j <= n - 1 && mu.part(j - 1) < lambda.part(j)) return;
            }
            out.push_back({mu, 1, mu.part(n - 1) == 0});
        });
        break;
    }
    case ClosedFormRule::EvenToOdd: {
        // mu with n-1 parts, lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n;
        // both prime variants when lambda_n != 0, a single module otherwise
        forEachSubPartition(n - 1, lambda.part(0), [&](const Partition& mu) {
            for (int j = 1; j <= n - 1; ++j) {
                if (lambda.part(j - 1) < mu.part(j - 1)) return;
                if (mu.part(j - 1) < lambda.part(j)) return;
            }
            out.push_back({mu, lambda.part(n - 1) != 0 ? 2 : 1, true});
        });
        break;
    }
    }
    std::sort(out.begin(), out.end(), [](const BranchTerm& a, const BranchTerm& b) {
        return a.target.parts() < b.target.parts();
    });
    return out;
}

std::vector<BranchTerm> evenToEvenMinRule(int n, const Partition& lambda) {
    if (n < 2) fail(ErrorCode::Usage, "the even-to-even rule needs rank >= 2");
    std::vector<BranchTerm> out;
    forEachSubPartition(n - 1, lambda.part(0), [&](const Partition& mu) {
        long long mult = 1;
        for (int j = 1; j <= n - 1 && mult > 0; ++j)
            mult *= std::max<long long>(0, interlaceChoices(lambda, mu, j));
        // The last interlacer contributes min(min(lambda_n, mu_{n-1}) + 1, 2) choices,
        // and the module pair W_mu + W_mu' replaces a single W_mu exactly when the
        // last part of mu vanishes while lambda_n does not. (Concatenating the
        // even-to-odd and odd-to-even rules forces both scopes; reading the clipped
        // factor or the pair clause more broadly breaks dimension conservation.)
        long long last = std::max<long long>(0, interlaceChoices(lambda, mu, n));
        mult *= std::min<long long>(last, 2);
        if (mult <= 0) return;
        if (mu.part(n - 2) == 0 && lambda.part(n - 1) != 0) mult *= 2;
        out.push_back({mu, mult, true});
    });
    std::sort(out.begin(), out.end(), [](const BranchTerm& a, const BranchTerm& b) {
        return a.target.parts() < b.target.parts();
    });
    return out;
}

bool sameBranchMultiset(std::vector<BranchTerm> a, std::vector<BranchTerm> b) {
    auto key = [](const BranchTerm& t) { return std::make_pair(t.target.parts(), t.mult); };
    auto lt = [&](const BranchTerm& x, const BranchTerm& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (key(a[i]) != key(b[i])) return false;
    return true;
}

} // namespace schurtab
