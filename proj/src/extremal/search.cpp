#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>

#include "monopath/core/combinatorics.hpp"
#include "monopath/core/parallel.hpp"
#include "monopath/core/random.hpp"
#include "monopath/errors.hpp"
#include "monopath/extremal/search.hpp"
#include "monopath/paths/paths.hpp"

namespace monopath::extremal {

const char* outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::good_coloring:
      return "GOOD_COLORING";
    case Outcome::exhausted:
      return "EXHAUSTED";
    case Outcome::indeterminate:
      return "INDETERMINATE";
  }
  return "?";
}

const char* kind_name(Kind kind) { return kind == Kind::ms ? "ms" : "a"; }

namespace {

using Clock = std::chrono::steady_clock;

void check_params(const SearchParams& p) {
  if (p.k < 2) throw InvalidArgument("search: k must be at least 2");
  if (p.N < 0) throw InvalidArgument("search: N must be non-negative");
  if (p.n < 1) throw InvalidArgument("search: n must be positive");
  if (p.r < 1 || p.r > kMaxMaskColors) throw InvalidArgument("search: r must lie in 1..16");
  if (p.s < 1) throw InvalidArgument("search: s must be positive");
  if (p.n > 250) throw InvalidArgument("search: n too large");
}

// Shared, read-only description of one search instance.
struct Problem {
  SearchParams params;
  std::shared_ptr<const EdgeStructure> edges;
  std::size_t edge_count = 0;
  std::size_t lanes = 0;
  std::vector<std::vector<std::uint16_t>> lanes_of;  // per color (0-based)
  std::vector<std::uint8_t> closes_suffix;           // edge is the last one ending at its suffix
  std::vector<std::uint8_t> suffix_extends;          // that suffix is also the prefix of later edges
  std::vector<std::vector<std::uint8_t>> value_order;

  explicit Problem(const SearchParams& p) : params(p) {
    check_params(p);
    const std::uint64_t e = binomial(p.N, p.k);
    if (e > kMaxSearchEdges)
      throw ResourceLimit("search: " + std::to_string(e) + " edges exceed the limit of " +
                          std::to_string(kMaxSearchEdges));
    edges = EdgeStructure::get(p.k, p.N);
    edge_count = static_cast<std::size_t>(e);
    std::vector<ColorSet> sets;
    if (p.r > p.s)
      sets = ColorSubsetIndex(p.r, p.s).masks();
    else
      sets = {all_colors(p.r)};
    lanes = sets.size();
    lanes_of.resize(static_cast<std::size_t>(p.r));
    for (std::size_t l = 0; l < sets.size(); ++l)
      for (int c = 1; c <= p.r; ++c)
        if (sets[l] & color_bit(c)) lanes_of[static_cast<std::size_t>(c - 1)].push_back(static_cast<std::uint16_t>(l));

    closes_suffix.assign(edge_count, 0);
    suffix_extends.assign(edge_count, 0);
    std::vector<int> edge(static_cast<std::size_t>(p.k));
    for (std::size_t i = 0; i < edge_count; ++i) {
      edge = colex_unrank(i, p.k);
      // edges ending at the suffix differ only in their first vertex, which
      // grows along colex order
      closes_suffix[i] = edge[0] + 1 == edge[1];
      suffix_extends[i] = edge.back() < p.N;
    }
    if (p.value_order_seed) {
      value_order.resize(edge_count);
      for (std::size_t i = 0; i < edge_count; ++i) {
        auto& order = value_order[i];
        order.resize(static_cast<std::size_t>(p.r));
        for (int c = 0; c < p.r; ++c) order[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(c + 1);
        Rng rng(stream_seed(*p.value_order_seed, i));
        for (std::size_t j = order.size(); j > 1; --j) std::swap(order[j - 1], order[uniform_below(rng, j)]);
      }
    }
  }
};

struct Control {
  std::uint64_t node_budget;
  Clock::time_point deadline;
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::uint64_t> nodes{0};
};

class Worker {
 public:
  Worker(const Problem& problem, Control& control)
      : pb_(problem), ctl_(control), n_(problem.params.n), r_(problem.params.r) {
    len_.assign(pb_.edges->tuple_count * pb_.lanes, 0);
    colors_.assign(pb_.edge_count, 0);
  }

  // Assigns a fixed prefix; returns false if it is already infeasible.
  bool assign_prefix(const std::vector<std::uint8_t>& prefix) {
    for (std::size_t e = 0; e < prefix.size(); ++e) {
      if (!try_color(e, prefix[e])) return false;
      max_used_ = std::max<int>(max_used_, prefix[e]);
    }
    return true;
  }

  // Depth-first search from edge `from`.  `leaf` is called with the complete
  // assignment and returns true to stop.  `cut` (if positive) stops expansion
  // at that depth and calls `leaf` on the partial assignment.
  bool run(std::size_t from, std::size_t cut, const std::function<bool(const std::vector<std::uint8_t>&)>& leaf) {
    return dfs(from, cut == 0 ? pb_.edge_count : cut, leaf);
  }

  std::uint64_t prunes() const noexcept { return prunes_; }

  /// Abandons the search once a task with a smaller index has succeeded.
  void cancel_after(const std::atomic<std::size_t>* best, std::size_t index) {
    best_ = best;
    index_ = index;
  }

 private:
  bool blocked(std::size_t tuple, int color) const {
    const std::uint8_t* row = len_.data() + tuple * pb_.lanes;
    for (auto lane : pb_.lanes_of[static_cast<std::size_t>(color - 1)])
      if (row[lane] + 1 >= n_) return true;
    return false;
  }

  bool dead_end(std::size_t tuple) const {
    for (int c = 1; c <= r_; ++c)
      if (!blocked(tuple, c)) return false;
    return true;
  }

  // Applies color c to edge e if that creates no bad path; on success the
  // changed entries are on the log.
  bool try_color(std::size_t e, int c) {
    const std::size_t p = pb_.edges->prefix[e];
    const std::size_t q = pb_.edges->suffix[e];
    if (blocked(p, c)) return false;
    std::uint8_t* from = len_.data() + p * pb_.lanes;
    std::uint8_t* to = len_.data() + q * pb_.lanes;
    for (auto lane : pb_.lanes_of[static_cast<std::size_t>(c - 1)]) {
      const auto v = static_cast<std::uint8_t>(from[lane] + 1);
      if (v > to[lane]) {
        log_.push_back({static_cast<std::uint32_t>(q * pb_.lanes + lane), to[lane]});
        to[lane] = v;
      }
    }
    colors_[e] = static_cast<std::uint8_t>(c);
    return true;
  }

  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      len_[log_.back().first] = log_.back().second;
      log_.pop_back();
    }
  }

  bool tick() {
    const auto count = ctl_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > ctl_.node_budget) {
      ctl_.out_of_budget = true;
      ctl_.stop = true;
      return false;
    }
    if ((count & 0xfff) == 0 && Clock::now() > ctl_.deadline) {
      ctl_.out_of_budget = true;
      ctl_.stop = true;
      return false;
    }
    return true;
  }

  bool dfs(std::size_t e, std::size_t cut, const std::function<bool(const std::vector<std::uint8_t>&)>& leaf) {
    if (ctl_.stop.load(std::memory_order_relaxed)) return true;
    if (best_ != nullptr && best_->load(std::memory_order_relaxed) < index_) return true;
    if (e == cut) {
      std::vector<std::uint8_t> assigned(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(e));
      return leaf(assigned);
    }
    const int limit = std::min(r_, max_used_ + 1);
    for (int i = 0; i < r_; ++i) {
      const int c = pb_.value_order.empty() ? i + 1 : pb_.value_order[e][static_cast<std::size_t>(i)];
      if (c > limit) continue;
      if (!tick()) return true;
      const std::size_t mark = log_.size();
      if (!try_color(e, c)) {
        ++prunes_;
        continue;
      }
      if (pb_.closes_suffix[e] && pb_.suffix_extends[e] && dead_end(pb_.edges->suffix[e])) {
        ++prunes_;
        undo(mark);
        continue;
      }
      const int saved = max_used_;
      max_used_ = std::max(max_used_, c);
      const bool done = dfs(e + 1, cut, leaf);
      max_used_ = saved;
      undo(mark);
      if (done) return true;
    }
    return false;
  }

  const Problem& pb_;
  Control& ctl_;
  int n_;
  int r_;
  int max_used_ = 0;
  std::vector<std::uint8_t> len_;
  std::vector<std::uint8_t> colors_;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> log_;
  std::uint64_t prunes_ = 0;
  const std::atomic<std::size_t>* best_ = nullptr;
  std::size_t index_ = 0;
};

Coloring to_coloring(const SearchParams& p, const std::vector<std::uint8_t>& colors) {
  return Coloring(p.k, p.N, std::max(p.r, 1), colors);
}

void replay(const SearchParams& p, const Coloring& c) {
  if (!paths::verify_good(c, p.n, p.s).good)
    throw std::logic_error("search: produced coloring fails verification on replay");
}

}  // namespace

SearchCertificate exists_good_coloring(const SearchParams& params) {
  const auto started = Clock::now();
  SearchCertificate cert;
  cert.params = params;
  Problem problem(params);
  Control control;
  control.node_budget = params.node_budget;
  control.deadline = started + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(params.time_budget_seconds));

  std::optional<std::vector<std::uint8_t>> found;
  std::uint64_t prunes = 0;
  const int jobs = std::max(1, params.jobs);
  if (jobs == 1 || problem.edge_count < 8) {
    Worker worker(problem, control);
    worker.run(0, 0, [&](const std::vector<std::uint8_t>& colors) {
      found = colors;
      return true;
    });
    prunes = worker.prunes();
  } else {
    // Fan out over the assignments of the first few edges, in search order.
    std::size_t depth = 1;
    std::vector<std::vector<std::uint8_t>> prefixes;
    while (true) {
      prefixes.clear();
      Control probe;
      probe.node_budget = std::numeric_limits<std::uint64_t>::max();
      probe.deadline = Clock::time_point::max();
      Worker worker(problem, probe);
      worker.run(0, depth, [&](const std::vector<std::uint8_t>& colors) {
        prefixes.push_back(colors);
        return false;
      });
      if (prefixes.size() >= static_cast<std::size_t>(8 * jobs) || depth + 1 >= problem.edge_count / 2 || prefixes.empty())
        break;
      ++depth;
    }
    std::vector<std::optional<std::vector<std::uint8_t>>> results(prefixes.size());
    std::vector<std::uint64_t> worker_prunes(prefixes.size(), 0);
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    parallel_for(prefixes.size(), jobs, [&](std::size_t i) {
      if (i > best.load() || control.out_of_budget.load()) return;
      Worker worker(problem, control);
      if (!worker.assign_prefix(prefixes[i])) return;
      worker.cancel_after(&best, i);
      worker.run(prefixes[i].size(), 0, [&](const std::vector<std::uint8_t>& colors) {
        results[i] = colors;
        return true;
      });
      worker_prunes[i] = worker.prunes();
      if (results[i]) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    });
    for (auto value : worker_prunes) prunes += value;
    const std::size_t winner = best.load();
    if (winner != std::numeric_limits<std::size_t>::max()) found = results[winner];
  }

  cert.stats.nodes = control.nodes.load();
  cert.stats.prunes = prunes;
  if (found) {
    cert.outcome = Outcome::good_coloring;
    cert.coloring = to_coloring(params, *found);
    replay(params, *cert.coloring);
  } else if (control.out_of_budget) {
    cert.outcome = Outcome::indeterminate;
    cert.note = "budget exhausted";
  } else {
    cert.outcome = Outcome::exhausted;
  }
  cert.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return cert;
}

EnumerationResult for_each_good_coloring(const SearchParams& params,
                                         const std::function<bool(const Coloring&)>& visit) {
  const auto started = Clock::now();
  Problem problem(params);
  Control control;
  control.node_budget = params.node_budget;
  control.deadline = started + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(params.time_budget_seconds));
  EnumerationResult result;
  bool stopped = false;
  Worker worker(problem, control);
  worker.run(0, 0, [&](const std::vector<std::uint8_t>& colors) {
    const auto c = to_coloring(params, colors);
    replay(params, c);
    ++result.visited;
    stopped = !visit(c);
    return stopped;
  });
  result.complete = !stopped && !control.out_of_budget;
  result.stats.nodes = control.nodes.load();
  result.stats.prunes = worker.prunes();
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

std::optional<std::uint64_t> default_upper_bound(Kind kind, int k, int n, int r, int s) {
  if (kind == Kind::ms) s = 1;
  if (s >= r) return static_cast<std::uint64_t>(n + k - 1);
  try {
    if (k == 2) {
      const int groups = (r + s - 1) / s;
      std::uint64_t value = 1;
      for (int i = 0; i < groups; ++i) {
        if (value > (std::uint64_t{1} << 40)) return std::nullopt;
        value *= static_cast<std::uint64_t>(n);
      }
      return value + 1;
    }
    if (k == 3 && r == 2 && s == 1) return binomial(2 * n, n) + 1;
    if (k == 3 && r == 3 && s == 2) {
      const std::uint64_t cube = static_cast<std::uint64_t>(n) * n * n;
      return binomial(static_cast<std::int64_t>(cube), 0) + binomial(static_cast<std::int64_t>(cube), 1) +
             binomial(static_cast<std::int64_t>(cube), 2) + binomial(static_cast<std::int64_t>(cube), 3) + 1;
    }
  } catch (const ResourceLimit&) {
  }
  return std::nullopt;
}

ExactResult exact_value(const ExactParams& params) {
  const auto started = Clock::now();
  ExactResult result;
  const int s = params.kind == Kind::ms ? 1 : params.s;
  result.hi = default_upper_bound(params.kind, params.k, params.n, params.r, s);
  int N = params.start.value_or(params.n + params.k - 2);
  if (N < 0) throw InvalidArgument("exact_value: start must be non-negative");
  std::uint64_t remaining = params.node_budget;
  std::optional<SearchCertificate> last_good;
  while (true) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - started).count();
    SearchParams sp;
    sp.k = params.k;
    sp.N = N;
    sp.n = params.n;
    sp.r = params.r;
    sp.s = s;
    sp.node_budget = remaining;
    sp.time_budget_seconds = std::max(0.0, params.time_budget_seconds - elapsed);
    sp.jobs = params.jobs;
    SearchCertificate cert;
    if (N < params.n + params.k - 1) {
      cert.params = sp;
      cert.outcome = Outcome::good_coloring;
      cert.coloring = Coloring::uniform(params.k, N, params.r, 1);
      cert.note = "vacuous: no path with n edges fits";
    } else {
      try {
        cert = exists_good_coloring(sp);
      } catch (const ResourceLimit& e) {
        cert.params = sp;
        cert.outcome = Outcome::indeterminate;
        cert.note = e.what();
      }
    }
    result.total_nodes += cert.stats.nodes;
    remaining = cert.stats.nodes >= remaining ? 0 : remaining - cert.stats.nodes;
    if (cert.outcome == Outcome::good_coloring) {
      last_good = std::move(cert);
      if (result.hi && static_cast<std::uint64_t>(N) >= *result.hi)
        throw std::logic_error("exact_value: good coloring found at or above the proven upper bound");
      ++N;
      continue;
    }
    if (cert.outcome == Outcome::exhausted) {
      result.exact = true;
      result.value = N;
      result.lo = N;
      result.hi = static_cast<std::uint64_t>(N);
      result.exhausted = std::move(cert);
    } else {
      result.exact = false;
      result.lo = N;
      result.exhausted = std::move(cert);
    }
    break;
  }
  result.good = std::move(last_good);
  result.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

}  // namespace monopath::extremal
