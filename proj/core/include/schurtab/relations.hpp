#pragma once

#include <functional>
#include <string>
#include <vector>

#include "schurtab/families.hpp"
#include "schurtab/formal_sum.hpp"

namespace schurtab {

enum class RelationKind { Alternating, Exchange, Symplectic, Orthogonal, Pin };

std::string relationKindName(RelationKind k);

// Where an instance was generated: the participating boxes, plus column pair and k
// for exchange instances, plus the source assignment (entries at the listed boxes
// are the erased ones for group relations).
struct RelationSite {
    std::vector<Box> boxes;
    int leftCol = -1;
    int rightCol = -1;
    int k = 0;
};

struct RawTerm {
    Filling filling; // arbitrary assignment; columns need not be sorted
    Rat coeff;
};

// One generated relation vector. `vector` is the canonicalized form; `collapsed`
// marks instances whose canonical form is zero (they still matter for closure
// tests, their raw content lies in the alternating span).
struct RelationInstance {
    RelationKind kind;
    RelationSite site;
    std::vector<RawTerm> raw;
    FormalSum vector;
    bool collapsed = false;
};

// f = -f' with two entries of one column interchanged; vector form f + f'.
RelationInstance alternatingRelation(const Filling& f, int col, int row1, int row2);

// f minus the sum over all ways of trading the top k entries of rightCol with k
// entries of leftCol (vertical order preserved on both sides).
RelationInstance exchangeRelation(const Filling& f, int leftCol, int rightCol, int k);

// sum_i (F_i - F_i') where F_i puts (i, i-bar) into the erased boxes (b1, b2) of rest
// and F_i' puts (i-bar, i); entries of rest at b1, b2 are ignored.
RelationInstance symplecticRelation(const Filling& rest, Box b1, Box b2);

// F_0 + sum_i (F_i + F_i') for the odd groups, the F_0 term omitted for the even ones.
RelationInstance orthogonalRelation(const Filling& rest, Box b1, Box b2, bool odd);

// sum_i F_i (plus F_0 when odd), F_i writing the i-th half entry of rest into the
// erased box b and flipping that half entry.
RelationInstance pinRelation(const Filling& rest, Box b, bool odd);

enum class PairPolicy { AllPairs, SameRow, SameColumn };

struct RelationOptions {
    PairPolicy symplecticPairs = PairPolicy::AllPairs;
    PairPolicy orthogonalPairs = PairPolicy::SameRow;
    bool groupRelations = true; // false: alternating + exchange only
    bool dedup = true;          // drop instances repeating an earlier canonical vector
};

// Every relation instance of the group over the shape: alternating and exchange
// instances for all assignments (and all half-column states on spin shapes, where
// they touch full boxes only), and the group relations over all erased-box sites
// under the configured pair policy and all completions.
void allRelations(const Shape& shape, const GroupSpec& group, const RelationOptions& opts,
                  const std::function<void(const RelationInstance&)>& sink);

std::vector<RelationInstance> allRelations(const Shape& shape, const GroupSpec& group,
                                           const RelationOptions& opts = {});

// All assignments of alphabet symbols to the full boxes (times all half-column
// states on spin shapes), in index order.
void forEachAssignment(const Shape& shape, const Alphabet& alphabet,
                       const std::function<void(const Filling&)>& fn);

} // namespace schurtab
