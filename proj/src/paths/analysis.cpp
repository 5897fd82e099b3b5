#include <algorithm>
#include <string>

#include "monopath/errors.hpp"
#include "monopath/paths/paths.hpp"

namespace monopath::paths {

PVectorTable::PVectorTable(const Coloring& coloring, int s)
    : s_(s), index_(coloring.r(), s), lengths_(coloring, index_.masks()) {}

Point PVectorTable::at_rank(std::size_t tuple_rank) const {
  const auto row = lengths_.row(tuple_rank);
  Point entries(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) entries[j] = static_cast<std::uint16_t>(row[j] + 1);
  return entries;
}

Point PVectorTable::at(std::span<const int> tuple) const {
  const auto rank = colex_rank(tuple);
  if (rank >= tuple_count()) throw InvalidArgument("p_vector: tuple outside [N]");
  return at_rank(rank);
}

int PVectorTable::max_entry() const {
  int best = 1;
  for (std::size_t j = 0; j < dimension(); ++j) best = std::max(best, lengths_.max_length(j) + 1);
  return best;
}

PVector p_vector(const Coloring& coloring, int s, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != coloring.k() - 1)
    throw InvalidArgument("p_vector: tuple arity must be k-1 = " + std::to_string(coloring.k() - 1));
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (tuple[i] < 1 || tuple[i] > coloring.N() || (i > 0 && tuple[i] <= tuple[i - 1]))
      throw InvalidArgument("p_vector: tuple must be strictly increasing within [N]");
  const ColorSubsetIndex index(coloring.r(), s);
  const auto rank = colex_rank(tuple);
  PVector result{std::vector<int>(tuple.begin(), tuple.end()), Point(index.size())};
  for (std::size_t j = 0; j < index.size(); ++j)
    result.entries[j] = static_cast<std::uint16_t>(cached_restricted_lengths(coloring, index[j])->at_rank(rank) + 1);
  return result;
}

namespace {

bool path_possible(const Coloring& coloring, int n) { return coloring.N() >= n + coloring.k() - 1; }

// First (lane, tuple) whose length reaches n, traced back to an n-edge witness.
std::optional<Path> first_long_path(const Coloring& coloring, const MultiLengthTable& table, int n) {
  for (std::size_t lane = 0; lane < table.lanes(); ++lane) {
    for (std::size_t t = 0; t < table.tuple_count(); ++t) {
      if (table.at_rank(t, lane) >= n) {
        return trace_path(
            coloring, table.sets()[lane], [&](std::size_t rank) { return table.at_rank(rank, lane); }, t, n);
      }
    }
  }
  return std::nullopt;
}

std::uint64_t masks_up_to(int r, int size) {
  std::uint64_t total = 0;
  for (int j = 1; j <= size; ++j) total += binomial(r, j);
  return total;
}

}  // namespace

MinColorsResult min_colors_over_paths(const Coloring& coloring, int n, std::uint64_t dp_budget) {
  if (n < 1) throw InvalidArgument("min_colors_over_paths: n must be positive");
  MinColorsResult result;
  if (!path_possible(coloring, n)) return result;
  result.path_exists = true;

  const int r = coloring.r();
  const int cap = std::min(r, n);
  const bool dp_fits = r <= kMaxMaskColors &&
                       masks_up_to(r, cap) * std::max<std::uint64_t>(1, binomial(coloring.N(), coloring.k() - 1)) <=
                           dp_budget;
  if (dp_fits) {
    // The smallest color set admitting an n-edge path gives the minimum: a
    // witness using fewer colors would fit a smaller set.
    for (int size = 1; size <= cap; ++size) {
      std::vector<ColorSet> sets;
      for (ColorSet mask = 1; mask <= all_colors(r); ++mask)
        if (popcount(mask) == size) sets.push_back(mask);
      const MultiLengthTable table(coloring, sets);
      if (auto witness = first_long_path(coloring, table, n)) {
        result.min_colors = witness->distinct_colors();
        result.witness = std::move(witness);
        return result;
      }
    }
    throw InvalidArgument("min_colors_over_paths: no color set admits an existing path");
  }

  result.min_colors = n + 1;
  enumerate_paths_oracle(coloring, n, [&](const Path& path) {
    const int used = path.distinct_colors();
    if (used < result.min_colors) {
      result.min_colors = used;
      result.witness = path;
    }
    return result.min_colors > 1;
  });
  return result;
}

VerifyResult verify_good(const Coloring& coloring, int n, int s) {
  if (n < 1) throw InvalidArgument("verify_good: n must be positive");
  if (s < 1) throw InvalidArgument("verify_good: s must be positive");
  VerifyResult result;
  if (!path_possible(coloring, n)) {
    result.vacuous = true;
    return result;
  }
  const int r = coloring.r();
  if (r > kMaxMaskColors) {
    enumerate_paths_oracle(coloring, n, [&](const Path& path) {
      if (path.distinct_colors() <= s) {
        result.good = false;
        result.violation = path;
        return false;
      }
      return true;
    });
    return result;
  }
  // Any path with at most s colors lies inside some s-subset of [r]; if r <= s
  // the whole palette is the only set to check.
  std::vector<ColorSet> sets =
      r <= s ? std::vector<ColorSet>{all_colors(r)} : ColorSubsetIndex(r, s).masks();
  const MultiLengthTable table(coloring, std::move(sets));
  if (auto witness = first_long_path(coloring, table, n)) {
    result.good = false;
    result.violation = std::move(witness);
  }
  return result;
}

std::uint64_t oracle_work_estimate(const Coloring& coloring, int n) {
  const int window = n + coloring.k() - 1;
  if (window > coloring.N()) return 0;
  try {
    const auto windows = binomial(coloring.N(), window);
    const auto per = static_cast<std::uint64_t>(n);
    if (windows > ~std::uint64_t{0} / per) return ~std::uint64_t{0};
    return windows * per;
  } catch (const ResourceLimit&) {
    return ~std::uint64_t{0};
  }
}

void enumerate_paths_oracle(const Coloring& coloring, int n, const std::function<bool(const Path&)>& visit,
                            std::uint64_t work_budget) {
  if (n < 1) throw InvalidArgument("enumerate_paths_oracle: n must be positive");
  const auto work = oracle_work_estimate(coloring, n);
  if (work > work_budget)
    throw ResourceLimit("enumerate_paths_oracle: " + std::to_string(work) + " edge lookups exceed budget " +
                        std::to_string(work_budget));
  const int window = n + coloring.k() - 1;
  if (window > coloring.N()) return;
  bool keep_going = true;
  for_each_subset(coloring.N(), window, [&](std::span<const int> vertices) {
    if (!keep_going) return;
    keep_going = visit(make_path(coloring, std::vector<int>(vertices.begin(), vertices.end())));
  });
}

}  // namespace monopath::paths
