#pragma once

#include "chev/classify.hpp"
#include "chev/presgen.hpp"
#include "chev/verify.hpp"

#include <json.hpp>

#include <string>

namespace chev {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

// Integer combinations of monomials, e.g. "1", "-t^-2", "3*t*s^2 - 1".
Poly parse_poly(const CoefficientRing& ring, const std::string& text);

json root_json(const Root& r);
json roots_json(const RootSystem& rs);
std::string structconsts_csv(const RootSystem& rs, const StructureConstantTable& table, bool positive_only);
json structconsts_json(const RootSystem& rs, const StructureConstantTable& table, bool positive_only);
json parabolic_json(const ParabolicSpec& spec, std::optional<int> borel_n = std::nullopt);
json toral_json(const RootSystem& rs);

json presentation_json(const Presentation& p, const RingSpec& ring);
std::string presentation_text(const Presentation& p, const RingSpec& ring);

json report_json(const VerifyReport& r);
json status_json(const FPStatus& s);

json ring_json(const RingSpec& ring);
RingSpec ring_from_json(const json& j);
// A preset name or the path of a JSON ring file.
RingSpec load_ring(const std::string& preset_or_path, std::int64_t characteristic = 0, int S_size = 1);

}  // namespace chev
