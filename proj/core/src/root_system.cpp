#include "schurtab/root_system.hpp"

#include <cstdlib>

#include "schurtab/error.hpp"

namespace schurtab {

std::vector<std::vector<int>> RootSystem::positiveRoots() const {
    std::vector<std::vector<int>> roots;
    int n = rank;
    auto vec = [&](int i, int ci, int j, int cj) {
        std::vector<int> v(n, 0);
        v[i] = ci;
        if (j >= 0) v[j] = cj;
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            roots.push_back(vec(i, 1, j, -1));
            if (family != RootFamily::A) roots.push_back(vec(i, 1, j, 1));
        }
    if (family == RootFamily::B)
        for (int i = 0; i < n; ++i) roots.push_back(vec(i, 1, -1, 0));
    if (family == RootFamily::C)
        for (int i = 0; i < n; ++i) roots.push_back(vec(i, 2, -1, 0));
    return roots;
}

std::vector<int> RootSystem::rhoDoubled() const {
    int n = rank;
    std::vector<int> rho(n, 0);
    switch (family) {
    case RootFamily::A:
        for (int i = 0; i < n; ++i) rho[i] = 2 * (n - 1 - i);
        break;
    case RootFamily::B:
        for (int i = 0; i < n; ++i) rho[i] = 2 * (n - i) - 1; // n - i - 1/2, doubled
        break;
    case RootFamily::C:
        for (int i = 0; i < n; ++i) rho[i] = 2 * (n - i);
        break;
    case RootFamily::D:
        for (int i = 0; i < n; ++i) rho[i] = 2 * (n - 1 - i);
        break;
    }
    return rho;
}

bool isDominant(const RootSystem& rs, const std::vector<int>& doubled) {
    int n = rs.rank;
    if (static_cast<int>(doubled.size()) != n) return false;
    for (int i = 1; i < n; ++i)
        if (doubled[i - 1] < doubled[i]) return false;
    if (n == 0) return true;
    switch (rs.family) {
    case RootFamily::A: return true;
    case RootFamily::B:
    case RootFamily::C: return doubled[n - 1] >= 0;
    case RootFamily::D: return n < 2 || doubled[n - 2] >= std::abs(doubled[n - 1]);
    }
    return false;
}

long long weylDim(const RootSystem& rs, const std::vector<int>& hwDoubled) {
    if (static_cast<int>(hwDoubled.size()) != rs.rank)
        fail(ErrorCode::Usage, "highest weight arity does not match the rank");
    if (!isDominant(rs, hwDoubled)) fail(ErrorCode::Usage, "highest weight is not dominant");
    std::vector<int> rho = rs.rhoDoubled();
    Rat dim = 1;
    for (const auto& alpha : rs.positiveRoots()) {
        long num = 0, den = 0;
        for (int i = 0; i < rs.rank; ++i) {
            num += static_cast<long>(hwDoubled[i] + rho[i]) * alpha[i];
            den += static_cast<long>(rho[i]) * alpha[i];
        }
        Rat factor(num, den);
        factor.canonicalize();
        dim *= factor;
    }
    dim.canonicalize();
    if (dim.get_den() != 1) fail(ErrorCode::Internal, "Weyl dimension is not integral");
    if (!dim.get_num().fits_slong_p()) fail(ErrorCode::ResourceLimit, "dimension overflow");
    return dim.get_num().get_si();
}

std::vector<int> doubledWeight(const Partition& p, int rank) {
    if (p.numParts() > rank) fail(ErrorCode::Usage, "partition has more parts than the rank");
    std::vector<int> w(rank, 0);
    for (int i = 0; i < p.numParts(); ++i) w[i] = 2 * p.part(i);
    return w;
}

std::vector<int> doubledSpinWeight(const Partition& p, int rank) {
    std::vector<int> w = doubledWeight(p, rank);
    for (int& x : w) x += 1;
    return w;
}

std::vector<int> negateLast(std::vector<int> doubled) {
    if (doubled.empty()) fail(ErrorCode::Usage, "cannot negate a coordinate of the empty weight");
    doubled.back() = -doubled.back();
    return doubled;
}

} // namespace schurtab
