#include "schurtab/partition.hpp"

#include <numeric>
#include <sstream>

#include "schurtab/error.hpp"

namespace schurtab {

namespace {

void validateAndTrim(std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) fail(ErrorCode::Usage, "negative partition part");
        if (i > 0 && parts[i] > parts[i - 1]) fail(ErrorCode::Usage, "partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validateAndTrim(parts_); }

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validateAndTrim(parts_); }

Partition Partition::fromString(const std::string& s) {
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                parts.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                fail(ErrorCode::Usage, "malformed shape '" + s + "'");
            }
        }
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++conj[c];
    return Partition(std::move(conj));
}

std::string Partition::toString() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> partitionsUpTo(int maxSize, int maxParts) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        out.emplace_back(cur);
        if (remaining == 0 || static_cast<int>(cur.size()) >= maxParts) return;
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, maxSize, maxSize);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() < b.parts();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace schurtab
