#pragma once

#include <functional>
#include <vector>

#include "schurtab/families.hpp"
#include "schurtab/laurent.hpp"

namespace schurtab {

// All canonical fillings of the shape passing isBasisMember for the family, in
// increasing fillingOrder. Throws when the partition has more parts than the rank
// or when the family/shape disagree about the spin column.
std::vector<Filling> enumerateBasis(const Shape& shape, BasisFamily family,
                                    const FamilyOptions& opts = {});

// Streaming variant; fillings arrive in generation order, not fillingOrder.
void enumerateBasis(const Shape& shape, BasisFamily family, const FamilyOptions& opts,
                    const std::function<void(const Filling&)>& sink);

// Sum over basis tableaux of the monomial with doubled exponent vector weight(T).
// This is the character of the module when the basis theorem holds; the lie oracle
// checks that identity independently.
Laurent weightPolynomial(const Shape& shape, BasisFamily family, const FamilyOptions& opts = {});

} // namespace schurtab
