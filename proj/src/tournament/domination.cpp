#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <string>

#include "monopath/core/parallel.hpp"
#include "monopath/errors.hpp"
#include "monopath/simd/kernels.hpp"
#include "monopath/tournament/tournament.hpp"

namespace monopath::tournament {

namespace {

class ExactSearch {
 public:
  ExactSearch(const Tournament& t, const simd::Kernels& kern)
      : t_(t), kern_(kern), words_(t.words()), zero_(words_, 0) {}

  // Lexicographically least dominating set of exactly `size` vertices whose
  // smallest member is `first`.
  std::optional<std::vector<int>> solve(std::size_t size, std::size_t first) const {
    std::vector<int> chosen{static_cast<int>(first)};
    std::vector<std::uint64_t> acc(row(first), row(first) + words_);
    if (size == 1) {
      if (kern_.covers(acc.data(), zero_.data(), t_.all_vertices().data(), words_)) return chosen;
      return std::nullopt;
    }
    std::vector<std::vector<std::uint64_t>> stack(size, std::vector<std::uint64_t>(words_));
    stack[0] = acc;
    if (extend(chosen, stack, 1, size, first + 1)) return chosen;
    return std::nullopt;
  }

 private:
  const std::uint64_t* row(std::size_t u) const { return t_.closed_row(u, nullptr); }

  bool extend(std::vector<int>& chosen, std::vector<std::vector<std::uint64_t>>& stack, std::size_t depth,
              std::size_t size, std::size_t start) const {
    const std::size_t n = t_.size();
    const std::uint64_t* acc = stack[depth - 1].data();
    if (depth + 1 == size) {
      // The last member must cover the first vertex still undominated.
      std::size_t y = n;
      for (std::size_t w = 0; w < words_; ++w) {
        const std::uint64_t open = t_.all_vertices()[w] & ~acc[w];
        if (open != 0) {
          y = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(open));
          break;
        }
      }
      if (y == n) return false;  // covered by fewer members
      for (std::size_t c = start; c < n; ++c) {
        const std::uint64_t* rc = row(c);
        if (((rc[y >> 6] >> (y & 63)) & 1U) == 0) continue;
        if (kern_.covers(acc, rc, t_.all_vertices().data(), words_)) {
          chosen.push_back(static_cast<int>(c));
          return true;
        }
      }
      return false;
    }
    for (std::size_t c = start; c + (size - depth) <= n; ++c) {
      auto& next = stack[depth];
      std::copy(acc, acc + words_, next.begin());
      kern_.or_into(next.data(), row(c), words_);
      chosen.push_back(static_cast<int>(c));
      if (extend(chosen, stack, depth + 1, size, c + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const Tournament& t_;
  const simd::Kernels& kern_;
  std::size_t words_;
  std::vector<std::uint64_t> zero_;
};

Tournament materialized_copy(const Tournament& t) {
  return Tournament::from_predicate(
      t.size(), [&t](std::size_t u, std::size_t v) { return t.dominates(u, v); }, true);
}

}  // namespace

std::optional<std::vector<int>> dominating_set_exact(const Tournament& input, int size_cap, int jobs,
                                                     const ExactLimits& limits) {
  const std::size_t n = input.size();
  if (n == 0) return std::vector<int>{};
  const std::size_t cap = size_cap <= 0 ? n : std::min<std::size_t>(static_cast<std::size_t>(size_cap), n);
  const std::size_t limit = cap <= 3 ? limits.max_vertices_small_cap : limits.max_vertices_uncapped;
  if (n > limit)
    throw ResourceLimit("dominating_set_exact: " + std::to_string(n) + " vertices exceed the limit of " +
                        std::to_string(limit) + " for cap " + std::to_string(cap));
  std::optional<Tournament> copy;
  if (!input.materialized()) copy = materialized_copy(input);
  const Tournament& t = copy ? *copy : input;

  const ExactSearch search(t, simd::kernels());
  for (std::size_t size = 1; size <= cap; ++size) {
    const std::size_t firsts = n - size + 1;
    std::vector<std::optional<std::vector<int>>> found(firsts);
    // Only ever decreases; a worker may skip first elements above it.
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    parallel_for(firsts, jobs, [&](std::size_t first) {
      if (first > best.load(std::memory_order_relaxed)) return;
      found[first] = search.solve(size, first);
      if (found[first]) {
        std::size_t current = best.load();
        while (first < current && !best.compare_exchange_weak(current, first)) {
        }
      }
    });
    const std::size_t winner = best.load();
    if (winner != std::numeric_limits<std::size_t>::max()) {
      auto result = std::move(*found[winner]);
      if (!is_dominating(t, result)) throw std::logic_error("dominating_set_exact: replay failed");
      return result;
    }
  }
  return std::nullopt;
}

std::vector<int> dominating_set_greedy(const Tournament& t) {
  const std::size_t n = t.size();
  const std::size_t words = t.words();
  const auto& kern = simd::kernels();
  std::vector<std::uint64_t> open = t.all_vertices();
  std::vector<std::uint64_t> scratch(words), best_row(words);
  std::vector<int> chosen;
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t best = n, best_cover = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t cover = kern.and_popcount(t.closed_row(v, scratch.data()), open.data(), words);
      if (cover > best_cover) {
        best_cover = cover;
        best = v;
      }
    }
    const std::uint64_t* row = t.closed_row(best, scratch.data());
    for (std::size_t w = 0; w < words; ++w) open[w] &= ~row[w];
    remaining -= best_cover;
    chosen.push_back(static_cast<int>(best));
  }
  if (!is_dominating(t, chosen)) throw std::logic_error("dominating_set_greedy: replay failed");
  return chosen;
}

std::optional<int> two_majority_domination_number(std::vector<Point> vectors) {
  if (vectors.empty()) return 0;
  const auto t = build_majority_tournament(std::move(vectors), 3);
  auto set = dominating_set_exact(t.graph, 3);
  if (!set) return std::nullopt;
  return static_cast<int>(set->size());
}

AuditReport domination_number_2majority_audit(const AuditConfig& config) {
  if (config.grid < 1) throw InvalidArgument("audit: grid side must be positive");
  AuditReport report;
  report.config = config;
  const std::uint64_t universe = static_cast<std::uint64_t>(config.grid) * config.grid * config.grid;
  const std::uint64_t max_size = std::min<std::uint64_t>(universe, static_cast<std::uint64_t>(std::max(config.vectors_max, 1)));

  std::vector<int> f(config.samples, 0);
  std::vector<std::vector<Point>> failures(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t sample) {
    Rng rng(stream_seed(config.seed, sample));
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_size)));
    // Partial Fisher-Yates over the universe indices.
    std::vector<std::uint32_t> pool(universe);
    for (std::uint32_t i = 0; i < universe; ++i) pool[i] = i;
    std::vector<Point> vectors;
    vectors.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto j = i + uniform_below(rng, universe - i);
      std::swap(pool[i], pool[j]);
      const auto code = pool[i];
      const auto g = static_cast<std::uint32_t>(config.grid);
      vectors.push_back(Point{static_cast<std::uint16_t>(code % g + 1), static_cast<std::uint16_t>(code / g % g + 1),
                              static_cast<std::uint16_t>(code / g / g + 1)});
    }
    std::sort(vectors.begin(), vectors.end());
    const auto value = two_majority_domination_number(vectors);
    if (value) {
      f[sample] = *value;
    } else {
      f[sample] = -1;
      failures[sample] = std::move(vectors);
    }
  });
  for (std::uint64_t sample = 0; sample < config.samples; ++sample) {
    if (f[sample] < 0)
      report.violations.push_back({sample, std::move(failures[sample])});
    else
      ++report.f_histogram[f[sample]];
  }
  return report;
}

}  // namespace monopath::tournament
