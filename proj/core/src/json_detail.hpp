// Internal nlohmann-typed conversions shared by json_io, verify and the CLI.
// Not installed; the public surface is string based (see schurtab/json_io.hpp).
#pragma once

#include <json.hpp>

#include "schurtab/formal_sum.hpp"
#include "schurtab/laurent.hpp"
#include "schurtab/straighten.hpp"

namespace schurtab::detail {

using json = nlohmann::ordered_json;

json fillingToJson(const Filling& f);
Filling fillingFromJson(const json& j);

json formalSumToJson(const FormalSum& x);
FormalSum formalSumFromJson(const json& j);

json straightenReportToJson(const StraightenReport& r);

json laurentToJson(const Laurent& p);

} // namespace schurtab::detail
