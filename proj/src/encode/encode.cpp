#include <algorithm>
#include <map>
#include <string>

#include "monopath/encode/encode.hpp"
#include "monopath/errors.hpp"
#include "monopath/tournament/tournament.hpp"

namespace monopath::encode {

std::string serialize_vectors(std::span<const Point> vectors) {
  std::vector<Point> sorted(vectors.begin(), vectors.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < sorted[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(sorted[i][j]);
    }
  }
  return out;
}

std::string serialize(const DominatorImage& image) { return serialize_vectors(image.members); }

Encoder::Encoder(const Coloring& coloring, int s) : coloring_(coloring), s_(s), table_(coloring, s) {
  if (coloring.k() < 3) throw InvalidArgument("Encoder: needs k >= 3");
  if (2 * s <= coloring.r())
    throw UnsupportedRegime("Encoder: the majority tournament needs s > r/2 (r=" + std::to_string(coloring.r()) +
                            ", s=" + std::to_string(s) + ")");
}

void Encoder::check_suffix(std::span<const int> suffix) const {
  if (suffix.size() != static_cast<std::size_t>(coloring_.k() - 2))
    throw InvalidArgument("theta: suffix must have k-2 vertices");
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    if (suffix[i] < 1 || suffix[i] > coloring_.N()) throw InvalidArgument("theta: vertex out of range");
    if (i > 0 && suffix[i] <= suffix[i - 1]) throw InvalidArgument("theta: suffix must be strictly increasing");
  }
}

PredecessorSet Encoder::theta1(std::span<const int> suffix) const {
  check_suffix(suffix);
  PredecessorSet out;
  out.suffix.assign(suffix.begin(), suffix.end());
  std::vector<int> tuple(suffix.size() + 1);
  std::copy(suffix.begin(), suffix.end(), tuple.begin() + 1);
  for (int u = 1; u < suffix[0]; ++u) {
    tuple[0] = u;
    out.vectors.push_back(table_.at(tuple));
  }
  std::sort(out.vectors.begin(), out.vectors.end());
  out.vectors.erase(std::unique(out.vectors.begin(), out.vectors.end()), out.vectors.end());
  return out;
}

DominatorImage Encoder::theta2(std::span<const int> suffix) const {
  PredecessorSet pre = theta1(suffix);
  DominatorImage image;
  image.suffix = pre.suffix;
  if (pre.vectors.size() <= 1) {
    image.members = std::move(pre.vectors);
    return image;
  }
  const int r = coloring_.r();
  const auto t = tournament::build_tournament(pre.vectors, r, s_);
  const int cap = (r == 3 && s_ == 2) ? 3 : 0;
  std::optional<std::vector<int>> chosen;
  try {
    chosen = tournament::dominating_set_exact(t.graph, cap);
  } catch (const ResourceLimit&) {
  }
  if (!chosen) {
    chosen = tournament::dominating_set_greedy(t.graph);
    image.exact = false;
  }
  for (int v : *chosen) image.members.push_back(t.vertices[static_cast<std::size_t>(v)]);
  return image;
}

PredecessorSet theta1(const Coloring& coloring, int s, std::span<const int> suffix) {
  return Encoder(coloring, s).theta1(suffix);
}

DominatorImage theta2(const Coloring& coloring, int s, std::span<const int> suffix) {
  return Encoder(coloring, s).theta2(suffix);
}

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::good_injective:
      return "GOOD+INJECTIVE";
    case Verdict::bad:
      return "BAD";
    case Verdict::counterexample:
      return "COUNTEREXAMPLE";
  }
  return "?";
}

namespace {

struct ImageMap {
  std::vector<std::string> keys;  // by colex rank of the (k-2)-tuple
  std::size_t max_size = 0;
  bool greedy = false;
};

ImageMap all_images(const Coloring& coloring, int s) {
  ImageMap map;
  const int width = coloring.k() - 2;
  if (coloring.N() < width) return map;
  const Encoder encoder(coloring, s);
  for_each_subset(coloring.N(), width, [&](std::span<const int> suffix) {
    const auto image = encoder.theta2(suffix);
    map.max_size = std::max(map.max_size, image.members.size());
    map.greedy = map.greedy || !image.exact;
    map.keys.push_back(serialize(image));
  });
  return map;
}

}  // namespace

InjectivityReport injectivity_check(const Coloring& coloring, int n, int r, int s) {
  if (r != coloring.r()) throw InvalidArgument("injectivity_check: r does not match the coloring");
  if (coloring.k() < 3) throw InvalidArgument("injectivity_check: needs k >= 3");
  InjectivityReport report;
  auto verdict = paths::verify_good(coloring, n, s);
  if (!verdict.good) {
    report.status = Verdict::bad;
    report.witness_path = std::move(verdict.violation);
    return report;
  }
  const auto map = all_images(coloring, s);
  report.max_image_size = map.max_size;
  report.greedy_fallback = map.greedy;
  {
    std::vector<std::string> distinct = map.keys;
    std::sort(distinct.begin(), distinct.end());
    report.image_count = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  }
  const int width = coloring.k() - 2;
  for_each_subset(coloring.N(), width + 1, [&](std::span<const int> window) {
    if (report.status == Verdict::counterexample) return;
    const auto a = window.subspan(0, static_cast<std::size_t>(width));
    const auto b = window.subspan(1, static_cast<std::size_t>(width));
    if (map.keys[colex_rank(a)] == map.keys[colex_rank(b)]) {
      report.status = Verdict::counterexample;
      report.collision = std::make_pair(std::vector<int>(a.begin(), a.end()), std::vector<int>(b.begin(), b.end()));
    }
  });
  return report;
}

std::optional<Coloring> InducedColoring::as_coloring() const {
  if (k < 2 || palette.size() > 255) return std::nullopt;
  std::vector<std::uint8_t> colors(labels.begin(), labels.end());
  return Coloring(k, N, std::max<int>(1, static_cast<int>(palette.size())), std::move(colors));
}

InducedColoring theorem4_reduction(const Coloring& coloring, int n, int s) {
  if (coloring.k() < 4) throw InvalidArgument("theorem4_reduction: needs k >= 4");
  InducedColoring induced;
  induced.k = coloring.k() - 2;
  induced.N = coloring.N();
  if (coloring.N() < coloring.k()) return induced;
  const auto verdict = paths::verify_good(coloring, n, s);
  if (!verdict.good) {
    std::string path;
    for (int v : verdict.violation->vertices) path += (path.empty() ? "" : ",") + std::to_string(v);
    throw PreconditionViolation("theorem4_reduction: coloring is not good; path " + path + " uses at most " +
                                std::to_string(s) + " colors");
  }
  const auto map = all_images(coloring, s);
  induced.greedy_fallback = map.greedy;
  induced.palette = map.keys;
  std::sort(induced.palette.begin(), induced.palette.end());
  induced.palette.erase(std::unique(induced.palette.begin(), induced.palette.end()), induced.palette.end());
  induced.labels.reserve(map.keys.size());
  for (const auto& key : map.keys) {
    const auto it = std::lower_bound(induced.palette.begin(), induced.palette.end(), key);
    induced.labels.push_back(static_cast<std::uint32_t>(it - induced.palette.begin()) + 1);
  }
  return induced;
}

std::optional<paths::Path> find_monochromatic_two_path(const InducedColoring& induced) {
  std::optional<paths::Path> found;
  if (induced.labels.empty()) return found;
  const int width = induced.k;
  for_each_subset(induced.N, width + 1, [&](std::span<const int> window) {
    if (found) return;
    const auto a = induced.labels[colex_rank(window.subspan(0, static_cast<std::size_t>(width)))];
    const auto b = induced.labels[colex_rank(window.subspan(1, static_cast<std::size_t>(width)))];
    if (a == b) {
      found = paths::Path{std::vector<int>(window.begin(), window.end()), {static_cast<int>(a), static_cast<int>(b)}};
    }
  });
  return found;
}

}  // namespace monopath::encode
