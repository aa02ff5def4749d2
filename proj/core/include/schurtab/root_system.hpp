#pragma once

#include <vector>

#include "schurtab/partition.hpp"
#include "schurtab/rational.hpp"

namespace schurtab {

enum class RootFamily { A, B, C, D };

// Positive roots and rho for the classical families, as exact integer data
// (rho is stored doubled; B_n has half-integral rho).
struct RootSystem {
    RootFamily family;
    int rank;

    // Integer coordinate vectors: e_i +- e_j (i<j) for all families, plus e_i for B,
    // 2e_i for C; A_{n-1} uses e_i - e_j inside rank coordinates.
    std::vector<std::vector<int>> positiveRoots() const;
    std::vector<int> rhoDoubled() const;
};

// Dominance of a doubled weight for the family: weakly decreasing, non-negative for
// B/C, last coordinate sign-free for D, unconstrained tail for A.
bool isDominant(const RootSystem& rs, const std::vector<int>& doubled);

// Weyl dimension formula, exact. Throws on a non-dominant weight or arity mismatch.
long long weylDim(const RootSystem& rs, const std::vector<int>& hwDoubled);

// Doubled dominant weight from a partition, padded with zeros to the rank.
std::vector<int> doubledWeight(const Partition& p, int rank);
// Same, shifted by (1/2, ..., 1/2): entries 2*lambda_i + 1.
std::vector<int> doubledSpinWeight(const Partition& p, int rank);
// Flip the sign of the last coordinate (the second highest weight of an even
// orthogonal pair).
std::vector<int> negateLast(std::vector<int> doubled);

} // namespace schurtab
