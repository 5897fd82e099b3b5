#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "monopath/core/coloring.hpp"
#include "monopath/encode/encode.hpp"
#include "monopath/extremal/search.hpp"
#include "monopath/extremal/sequences.hpp"
#include "monopath/paths/paths.hpp"
#include "monopath/tournament/tournament.hpp"

namespace monopath::harness {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "monopath/1";

const char* version();

/// Report skeleton: schema, tool, version, command, config, seed and an empty
/// "timing" object.  Everything outside "timing" must be a pure function of
/// the config and the seed.
Json envelope(const std::string& command, Json config, std::uint64_t seed);

/// Serialized report with the "timing" key removed, for replay comparison.
std::string deterministic_dump(const Json& report);

Json to_json(const paths::Path& path);
Json to_json(const Point& point);
Json to_json(const extremal::SearchParams& params);
/// Deterministic part of a certificate.  Node counts and wall time go to
/// stats_json, because a parallel search does not reproduce them exactly.
Json to_json(const extremal::SearchCertificate& cert);
Json stats_json(const extremal::SearchStats& stats);
Json to_json(const extremal::ExactResult& result);
Json to_json(const extremal::SIncreasingSequence& sequence);
Json to_json(const tournament::AuditReport& report);
Json to_json(const encode::InjectivityReport& report);

}  // namespace monopath::harness
