#include "schurtab/echelon.hpp"

#include <algorithm>

namespace schurtab {

SparseVec sparseAxpy(const SparseVec& a, const Rat& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat v = c * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Rat v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec EchelonSpan::reduce(SparseVec v) const {
    std::size_t done = 0; // entries before `done` have no pivot in the basis
    while (done < v.size()) {
        auto it = rows_.find(v[done].first);
        if (it == rows_.end()) {
            ++done;
            continue;
        }
        Rat c = -v[done].second;
        v = sparseAxpy(v, c, it->second);
        // the pivot entry cancels exactly; indices below v[done] are untouched
    }
    return v;
}

bool EchelonSpan::addRow(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rat lead = v.front().second;
    if (lead != 1)
        for (auto& [idx, c] : v) c /= lead;
    std::int64_t pivot = v.front().first;
    for (auto& [p, row] : rows_) {
        auto hit = std::lower_bound(row.begin(), row.end(), pivot,
                                    [](const auto& e, std::int64_t x) { return e.first < x; });
        if (hit != row.end() && hit->first == pivot) {
            Rat c = -hit->second;
            row = sparseAxpy(row, c, v);
        }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

} // namespace schurtab
