#pragma once

#include <compare>
#include <string>
#include <vector>

namespace schurtab {

// Weakly decreasing non-negative integer parts; trailing zeros are stripped.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    static Partition fromString(const std::string& commaSeparated);

    const std::vector<int>& parts() const { return parts_; }
    int numParts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i >= 0 && i < numParts() ? parts_[i] : 0; }
    int size() const; // |lambda|, the number of boxes
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& o) const = default;

    std::string toString() const; // "2,1" ; "" for the empty partition

  private:
    std::vector<int> parts_;
};

// All partitions with size <= maxSize and at most maxParts parts (empty included),
// ordered by size, then lexicographically on the part vectors.
std::vector<Partition> partitionsUpTo(int maxSize, int maxParts);

} // namespace schurtab
