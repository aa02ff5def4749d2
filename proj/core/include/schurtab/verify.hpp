#pragma once

#include <string>

#include "schurtab/families.hpp"
#include "schurtab/laurent.hpp"
#include "schurtab/shape.hpp"

namespace schurtab {

// Scope and knobs of one verification task.
struct VerifyConfig {
    BasisFamily family = BasisFamily::Symplectic;
    int rank = 1;
    int maxSize = 4;  // shape-size cap |lambda|
    int maxRank = 3;  // branching only
    unsigned long long seed = 0;
    int samples = 500; // random fillings per configuration (soundness)
    std::int64_t maxDimension = 200000;
    int threads = 1;
    bool injectFault = false; // test hook: corrupt the basis to force a failure
    FamilyOptions familyOptions;
};

struct VerifyOutcome {
    bool pass = false;
    std::string json; // canonical, byte-stable document
};

// Tableau count = oracle dimension = tensor quotient dimension, per shape.
VerifyOutcome verifyDim(const VerifyConfig& cfg);
// Embedded basis tableaux are independent modulo the relation span and count the
// quotient dimension.
VerifyOutcome verifyIndependence(const VerifyConfig& cfg);
// The basis weight generating function equals the character combination; the
// Sundaram family is compared under both settings of the symplectic-condition option.
VerifyOutcome verifyCharacter(const VerifyConfig& cfg);
// Character-arithmetic branching against the literal closed forms (family-independent).
VerifyOutcome verifyBranching(const VerifyConfig& cfg);
// Relation-closure claims: exchange images of group relations, same-column
// redundancy, and the orthogonal relations as consequences of the half-flip ones.
VerifyOutcome verifyClosure(const VerifyConfig& cfg);
// Straightening soundness, idempotence, linearity and cross-method agreement on
// random fillings.
VerifyOutcome verifyStraightenSoundness(const VerifyConfig& cfg);
// Relation-span invariance under the documented generators and the center scalar on
// odd orthogonal quotients.
VerifyOutcome verifyGroupAction(const VerifyConfig& cfg);

// Aggregates every task over the desk-scale matrix into one document with the
// errata ledger; seed/threads/samples are taken from cfg.
VerifyOutcome runReport(const VerifyConfig& cfg);

// The character the basis weight polynomial must reproduce for the family.
Laurent familyOracleCharacter(BasisFamily family, const Shape& shape);
// The classical dimension for the family's label (counts the highest-weight pair for
// the even orthogonal and even pin groups).
long long familyOracleDim(BasisFamily family, const Shape& shape);

} // namespace schurtab
