#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qbrauer/params.hpp"
#include "qbrauer/sparse_op.hpp"

namespace qbrauer {

// Canonical JSON form of an operator:
//   {"r": int, "k": int, "entries": [[row-tuple, col-tuple, "num/den"], ...]}
// ("n" instead of "r" for plain alphabets).  Entries sorted lexicographically
// by (row, col); the denominator is omitted when it is 1.  Round-trips
// bit-exactly through sparse_op_from_json.
[[nodiscard]] nlohmann::ordered_json sparse_op_to_json(const SparseOp& op);
[[nodiscard]] SparseOp sparse_op_from_json(const nlohmann::json& j);

// Parameter file:
//   {"r": int, "q": ["num/den", ...], "qij": {"i,j": "num/den", ...}}
// with q listing q_1..q_r and qij keyed by pairs 1 <= i < j <= r.
//
// The strict loader rejects anything else.  The permissive loader accepts
// extra qij keys over arbitrary signed labels, installs them verbatim over
// the derived family, and reports the violated constraints by name, so a
// deliberately corrupted file can still drive the verification suite.
struct LoadedParams {
  ParameterFamily family;
  std::vector<std::string> violations;  // empty iff the family is valid
};

[[nodiscard]] ParameterFamily params_from_json_strict(const nlohmann::json& j);
[[nodiscard]] LoadedParams params_from_json_permissive(const nlohmann::json& j);
[[nodiscard]] nlohmann::ordered_json params_to_json(const ParameterFamily& q);

// File helpers; throw DomainError with the parse or validation message.
[[nodiscard]] nlohmann::json read_json_file(const std::string& path);
[[nodiscard]] ParameterFamily load_params_strict(const std::string& path);
[[nodiscard]] LoadedParams load_params_permissive(const std::string& path);

}  // namespace qbrauer
