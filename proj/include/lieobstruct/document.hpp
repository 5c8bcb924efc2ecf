#pragma once

// On-disk algebra format (UTF-8 JSON):
//
//   {"family": "padic" | "power_series", "p": 3, "k": 1, "n": 3,
//    "brackets": [{"i": 0, "j": 1, "coeffs": [0, 0, 1]}, ...]}
//
// Only i < j appears; missing pairs are zero. p-adic coefficients are
// integers in [0, p^k); power-series coefficients are lists of k digits
// in [0, p), constant term first.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lieobstruct/lie_algebra.hpp"

namespace lieobstruct {

nlohmann::ordered_json to_json(const BracketAlgebra& algebra);

/// Canonical text: zero brackets omitted, pairs sorted, two-space indent, trailing newline.
std::string serialize(const BracketAlgebra& algebra);

/// Throws InputError with a line/column or field-path diagnostic.
BracketAlgebra parse_algebra_document(std::string_view text);
BracketAlgebra parse_algebra_json(const nlohmann::json& doc);

BracketAlgebra load_algebra_document(const std::filesystem::path& path);

/// Throws InputError naming the first failing triple.
LieAlgebra require_lie(const BracketAlgebra& algebra);

}  // namespace lieobstruct
