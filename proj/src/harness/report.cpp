#include "monopath/harness/report.hpp"

namespace monopath::harness {

#ifndef MONOPATH_VERSION
#define MONOPATH_VERSION "0.0.0"
#endif

const char* version() { return MONOPATH_VERSION; }

Json envelope(const std::string& command, Json config, std::uint64_t seed) {
  Json report;
  report["schema"] = kSchema;
  report["tool"] = "monopath";
  report["version"] = version();
  report["command"] = command;
  report["config"] = std::move(config);
  report["seed"] = seed;
  report["timing"] = Json::object();
  return report;
}

std::string deterministic_dump(const Json& report) {
  Json copy = report;
  copy.erase("timing");
  return copy.dump();
}

Json to_json(const paths::Path& path) {
  Json j;
  j["vertices"] = path.vertices;
  j["colors"] = path.colors;
  return j;
}

Json to_json(const Point& point) {
  Json j = Json::array();
  for (auto x : point) j.push_back(x);
  return j;
}

Json to_json(const extremal::SearchParams& params) {
  Json j;
  j["k"] = params.k;
  j["N"] = params.N;
  j["n"] = params.n;
  j["r"] = params.r;
  j["s"] = params.s;
  return j;
}

Json to_json(const extremal::SearchCertificate& cert) {
  Json j;
  j["params"] = to_json(cert.params);
  j["outcome"] = extremal::outcome_name(cert.outcome);
  if (cert.coloring) j["hyc"] = coloring_to_string(*cert.coloring);
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

Json stats_json(const extremal::SearchStats& stats) {
  Json j;
  j["nodes"] = stats.nodes;
  j["prunes"] = stats.prunes;
  j["seconds"] = stats.seconds;
  return j;
}

Json to_json(const extremal::ExactResult& result) {
  Json j;
  j["exact"] = result.exact;
  if (result.exact) {
    j["value"] = result.value;
  } else {
    j["lo"] = result.lo;
    if (result.hi) {
      j["hi"] = *result.hi;
    } else {
      j["hi"] = nullptr;
    }
  }
  if (result.good) j["good"] = to_json(*result.good);
  if (result.exhausted) j["last"] = to_json(*result.exhausted);
  return j;
}

Json to_json(const extremal::SIncreasingSequence& sequence) {
  Json j;
  j["level"] = sequence.level;
  j["n"] = sequence.n;
  j["R"] = sequence.R;
  j["S"] = sequence.S;
  Json items = Json::array();
  for (const auto& item : sequence.items) items.push_back(extremal::to_string(item));
  j["items"] = std::move(items);
  if (sequence.level >= 3) j["witnesses"] = sequence.witnesses;
  return j;
}

Json to_json(const tournament::AuditReport& report) {
  Json j;
  Json hist = Json::object();
  for (const auto& [f, count] : report.f_histogram) hist[std::to_string(f)] = count;
  j["f_histogram"] = std::move(hist);
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json entry;
    entry["sample"] = v.sample;
    entry["vectors"] = encode::serialize_vectors(v.vectors);
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j;
}

Json to_json(const encode::InjectivityReport& report) {
  Json j;
  j["status"] = encode::verdict_name(report.status);
  j["image_count"] = report.image_count;
  j["max_image_size"] = report.max_image_size;
  j["greedy_fallback"] = report.greedy_fallback;
  if (report.witness_path) j["witness_path"] = to_json(*report.witness_path);
  if (report.collision) {
    j["collision"] = {report.collision->first, report.collision->second};
  }
  return j;
}

}  // namespace monopath::harness
