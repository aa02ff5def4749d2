#pragma once

#include "schurtab/laurent.hpp"
#include "schurtab/root_system.hpp"

namespace schurtab {

// Weyl character by the alternant ratio, as a Laurent polynomial in rank variables
// with doubled exponents. Practical for rank <= 3 (the Weyl sums stay tiny).
Laurent character(const RootSystem& rs, const std::vector<int>& hwDoubled);

// Character of the full orthogonal-group module labeled by the partition: for the
// even groups with lambda_n > 0 this is the sum over the highest-weight pair.
Laurent oGroupCharacter(bool odd, int n, const Partition& lambda);

// Dimension of the orthogonal-group module: odd groups ignore the prime label; even
// groups with lambda_n > 0 carry no prime label (error when primed is requested).
long long oGroupDim(bool odd, int n, const Partition& lambda, bool primed = false);

enum class BranchPair {
    CToC, // Sp(2n)   -> Sp(2n-2)
    BToD, // O(2n+1)  -> O(2n)
    DToB, // O(2n)    -> O(2n-1)
};

struct BranchTerm {
    Partition target;
    long long mult = 0;
    // true when the torus character cannot separate the two same-label modules
    bool primeUnresolved = false;
    bool operator==(const BranchTerm&) const = default;
};

// Restriction multiplicities by character specialization and greedy dominant peeling.
// Multiplicities for even orthogonal targets with a vanishing last part count both
// prime variants together (flagged primeUnresolved).
std::vector<BranchTerm> branchByCharacter(BranchPair pair, int n, const Partition& lambda);

// Composite even-to-even restriction O(2n) -> O(2n-2), by character arithmetic.
std::vector<BranchTerm> evenToEvenByCharacter(int n, const Partition& lambda);

// Source/target dimensions in the same convention as the multiplicities above.
long long branchSourceDim(BranchPair pair, int n, const Partition& lambda);
long long branchTargetDim(BranchPair pair, int n, const BranchTerm& term);

enum class ClosedFormRule { SpChainLiteral, SpInterlacing, OddToEven, EvenToOdd };

// The closed-form branching rules, evaluated literally, plus the classical two-step
// interlacing count as the reference variant of the symplectic rule. Disagreements
// with branchByCharacter are data for the errata ledger, not errors.
std::vector<BranchTerm> closedFormBranch(ClosedFormRule rule, int n, const Partition& lambda);

// The stated even-to-even rule: the symplectic interlacing count with its final
// factor clipped to min(f_n, 2), and both prime variants counted when the last part
// of the target vanishes.
std::vector<BranchTerm> evenToEvenMinRule(int n, const Partition& lambda);

bool sameBranchMultiset(std::vector<BranchTerm> a, std::vector<BranchTerm> b);

} // namespace schurtab
