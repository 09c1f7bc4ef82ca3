#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kflag/gkm.hpp"
#include "kflag/kirwan.hpp"
#include "kflag/laurent.hpp"
#include "kflag/perm.hpp"

// JSON and text formats shared by the CLI and the Python bindings.  Objects
// keep their keys in insertion order so output is byte-stable.
namespace kflag::io {

using Json = nlohmann::ordered_json;

/// One-line notation "2,3,1".  Cycle notation such as "(12)" is rejected
/// with a conversion table in the message.
Permutation parse_permutation(std::string_view text);

Json to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

/// Array of {"coeff": "<decimal>", "x": [...], "y": [...]} in the fixed
/// descending exponent order.
Json to_json(const LaurentPoly& f);
/// Accepts the array form (rank taken from the first term, or from `rank`
/// when given) or {"n": N, "terms": [...]}.
LaurentPoly poly_from_json(const Json& j, std::optional<int> rank = std::nullopt);

/// Array of {"num": int, "den": int}.
Json to_json(const WeightVector& w);
WeightVector weights_from_json(const Json& j);
/// CLI weight syntax: "1/4,1/8,-3/8", or a JSON array of {num, den}.
WeightVector parse_weights(std::string_view text);

/// {"n": N, "entries": [{"z": [...], "value": poly}, ...]} in lex order of z.
Json to_json(const RestrictionClass& alpha);
RestrictionClass restriction_class_from_json(const Json& j);

Json to_json(const SupportSet& s);
Json to_json(const SupportReport& report);

/// [{"w": [...], "coeff": poly}, ...] sorted by w.
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j, int n);

Json to_json(const RegularityReport& r);
Json to_json(const KernelGenerator& g);
Json to_json(const std::vector<KernelGenerator>& gens);
Json to_json(const Presentation& p);

/// Serialized form used for files and stdout: two-space indent, trailing newline.
std::string dump(const Json& j);

} // namespace kflag::io
