#pragma once

#include <vector>

#include "schurtab/enumerate.hpp"
#include "schurtab/formal_sum.hpp"

namespace schurtab::testing {

// rows given top to bottom, entries as signed ints (i, -i for i-bar, 0)
inline Filling tab(const std::vector<std::vector<Sym>>& rows, int rank,
                   const std::vector<Sym>& half = {}) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    Shape shape(Partition(parts), rank, !half.empty());
    return Filling::fromRows(shape, rows, half);
}

// a spin tableau with only the half-column filled
inline Filling spinOnly(const std::vector<Sym>& half) {
    Shape shape(Partition{}, static_cast<int>(half.size()), true);
    return Filling::fromRows(shape, {}, half);
}

inline FormalSum sum(std::initializer_list<std::pair<Filling, Rat>> terms) {
    FormalSum x;
    for (const auto& [f, c] : terms) x.add(f, c);
    return x;
}

} // namespace schurtab::testing
