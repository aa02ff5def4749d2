#pragma once

#include <string>

#include "schurtab/formal_sum.hpp"
#include "schurtab/straighten.hpp"

namespace schurtab {

// Wire format of a filling, used by the CLI and all golden files:
//   {"shape": [l1, ...], "spin": bool, "rank": n, "rows": [[signed ints]],
//    "half": [signed ints]}            (the half entry only when spin)
std::string toJson(const Filling& f);
Filling fillingFromJson(const std::string& text);

// {"terms": [{"filling": {...}, "coeff": "p/q"}]}
std::string toJson(const FormalSum& x);
// Accepts either a bare filling object or the terms form above.
FormalSum formalSumFromJson(const std::string& text);

// {"input": ..., "output": ..., "steps": n, "method": "combinatorial"|"linear-solve"}
std::string toJson(const StraightenReport& report);

} // namespace schurtab
