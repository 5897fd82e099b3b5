#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "monopath/errors.hpp"
#include "monopath/paths/paths.hpp"
#include "monopath/simd/kernels.hpp"

namespace monopath::paths {

PathLengthTable::PathLengthTable(int k, int N, int r, ColorSet colors, std::vector<std::uint16_t> lengths)
    : k_(k), N_(N), r_(r), colors_(colors), lengths_(std::move(lengths)) {}

std::uint16_t PathLengthTable::at(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != k_ - 1) throw InvalidArgument("tuple arity must be k-1");
  return lengths_.at(colex_rank(tuple));
}

std::uint16_t PathLengthTable::max_length() const {
  std::uint16_t best = 0;
  for (auto v : lengths_) best = std::max(best, v);
  return best;
}

PathLengthTable restricted_lengths(const Coloring& coloring, ColorSet colors) {
  const auto edges = EdgeStructure::get(coloring.k(), coloring.N());
  std::vector<std::uint16_t> lengths(edges->tuple_count, 0);
  const auto& palette = coloring.colors();
  // Colex order finishes every l(prefix) before the prefix is extended.
  for (std::size_t e = 0; e < palette.size(); ++e) {
    if ((colors & color_bit(palette[e])) == 0) continue;
    const auto candidate = static_cast<std::uint16_t>(lengths[edges->prefix[e]] + 1);
    auto& slot = lengths[edges->suffix[e]];
    if (candidate > slot) slot = candidate;
  }
  return PathLengthTable(coloring.k(), coloring.N(), coloring.r(), colors, std::move(lengths));
}

namespace {

struct LengthCache {
  std::mutex mutex;
  std::map<std::pair<std::uint64_t, ColorSet>, std::shared_ptr<const PathLengthTable>> tables;
};

LengthCache& length_cache() {
  static LengthCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const PathLengthTable> cached_restricted_lengths(const Coloring& coloring, ColorSet colors) {
  auto& cache = length_cache();
  const auto key = std::make_pair(coloring.fingerprint(), colors);
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.tables.find(key);
    if (it != cache.tables.end()) return it->second;
  }
  auto table = std::make_shared<const PathLengthTable>(restricted_lengths(coloring, colors));
  std::lock_guard lock(cache.mutex);
  // A concurrent builder may have inserted an identical table already.
  return cache.tables.emplace(key, std::move(table)).first->second;
}

void clear_length_cache() {
  auto& cache = length_cache();
  std::lock_guard lock(cache.mutex);
  cache.tables.clear();
}

std::size_t length_cache_size() {
  auto& cache = length_cache();
  std::lock_guard lock(cache.mutex);
  return cache.tables.size();
}

MultiLengthTable::MultiLengthTable(const Coloring& coloring, std::vector<ColorSet> sets)
    : k_(coloring.k()), N_(coloring.N()), r_(coloring.r()), sets_(std::move(sets)) {
  const auto edges = EdgeStructure::get(k_, N_);
  stride_ = std::max<std::size_t>(16, (sets_.size() + 15) / 16 * 16);
  tuples_ = edges->tuple_count;
  values_.assign(tuples_ * stride_, 0);

  // lane_masks[c] selects the lanes whose color set contains c.
  std::vector<std::uint16_t> lane_masks(static_cast<std::size_t>(r_ + 1) * stride_, 0);
  for (int c = 1; c <= r_; ++c)
    for (std::size_t j = 0; j < sets_.size(); ++j)
      if (c <= 32 && (sets_[j] & color_bit(c)))
        lane_masks[static_cast<std::size_t>(c) * stride_ + j] = 0xffff;

  const auto& kern = simd::kernels();
  const auto& palette = coloring.colors();
  for (std::size_t e = 0; e < palette.size(); ++e) {
    kern.extend_lanes(values_.data() + edges->suffix[e] * stride_, values_.data() + edges->prefix[e] * stride_,
                      lane_masks.data() + palette[e] * stride_, stride_);
  }
}

std::uint16_t MultiLengthTable::max_length(std::size_t lane) const {
  std::uint16_t best = 0;
  for (std::size_t t = 0; t < tuples_; ++t) best = std::max(best, values_[t * stride_ + lane]);
  return best;
}

PathLengthTable MultiLengthTable::table(std::size_t lane) const {
  std::vector<std::uint16_t> lengths(tuples_);
  for (std::size_t t = 0; t < tuples_; ++t) lengths[t] = values_[t * stride_ + lane];
  return PathLengthTable(k_, N_, r_, sets_[lane], std::move(lengths));
}

int Path::distinct_colors() const { return popcount(color_set()); }

ColorSet Path::color_set() const {
  ColorSet mask = 0;
  for (int c : colors) mask |= color_bit(c);
  return mask;
}

Path make_path(const Coloring& coloring, std::vector<int> vertices) {
  Path path;
  const auto k = static_cast<std::size_t>(coloring.k());
  if (vertices.size() >= k) {
    for (std::size_t i = 0; i + k <= vertices.size(); ++i)
      path.colors.push_back(coloring.color_of(std::span<const int>(vertices).subspan(i, k)));
  }
  path.vertices = std::move(vertices);
  return path;
}

Path trace_path(const Coloring& coloring, ColorSet colors,
                const std::function<std::uint16_t(std::size_t)>& lengths, std::size_t end_rank, int edges) {
  const int k = coloring.k();
  std::vector<int> tuple = colex_unrank(end_rank, k - 1);
  if (lengths(end_rank) < edges) throw InvalidArgument("trace_path: tuple does not end a long enough path");
  std::vector<int> prefix_vertices;  // collected in reverse
  std::vector<int> edge(static_cast<std::size_t>(k));
  std::vector<int> previous(static_cast<std::size_t>(k - 1));
  for (int step = 0; step < edges; ++step) {
    const auto current = lengths(colex_rank(tuple));
    bool found = false;
    for (int u = tuple.front() - 1; u >= 1 && !found; --u) {
      edge[0] = u;
      std::copy(tuple.begin(), tuple.end(), edge.begin() + 1);
      if ((colors & color_bit(coloring.color_of(edge))) == 0) continue;
      std::copy(edge.begin(), edge.end() - 1, previous.begin());
      if (lengths(colex_rank(previous)) + 1 != current) continue;
      prefix_vertices.push_back(u);
      tuple = previous;
      found = true;
    }
    if (!found) throw InvalidArgument("trace_path: inconsistent length table");
  }
  // prefix_vertices = v_n, ..., v_1; the end tuple supplies the last k-1 vertices.
  std::vector<int> vertices(prefix_vertices.rbegin(), prefix_vertices.rend());
  const std::vector<int> end_tuple = colex_unrank(end_rank, k - 1);
  vertices.insert(vertices.end(), end_tuple.begin(), end_tuple.end());
  return make_path(coloring, std::move(vertices));
}

}  // namespace monopath::paths
