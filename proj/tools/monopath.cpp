// monopath: exact values, verification and encodings for colorings of
// ordered hypergraphs with tight monotone paths.
//
// Exit codes: 0 success/GOOD, 1 usage or parse error, 2 budget-limited
// (bracketed or lower-bound) result, 3 property violation/BAD.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monopath/core/combinatorics.hpp"
#include "monopath/core/parallel.hpp"
#include "monopath/encode/encode.hpp"
#include "monopath/errors.hpp"
#include "monopath/extremal/construct.hpp"
#include "monopath/extremal/search.hpp"
#include "monopath/extremal/sequences.hpp"
#include "monopath/harness/report.hpp"
#include "monopath/harness/suite.hpp"
#include "monopath/paths/paths.hpp"
#include "monopath/tournament/tournament.hpp"

namespace {

using monopath::harness::Json;
namespace ex = monopath::extremal;
namespace enc = monopath::encode;
namespace hn = monopath::harness;

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kViolation = 3 };

using Clock = std::chrono::steady_clock;

struct Globals {
  std::string format = "json";
  int jobs = monopath::default_jobs();
  std::uint64_t seed = 1;
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string path_string(const monopath::paths::Path& p) {
  std::string out;
  for (int v : p.vertices) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

// Prints a report in the chosen format.  `text` is the human summary; csv is
// only available where `csv` is non-empty.
int emit(const Globals& g, const Json& report, const std::string& text, const std::string& csv, int code) {
  if (g.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (g.format == "text") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else if (!csv.empty()) {
    std::cout << csv;
  } else {
    std::cerr << "error: --format=csv is only available for audit-tournaments and bench\n";
    return kUsage;
  }
  return code;
}

struct ExactArgs {
  std::string kind;
  int k = 2, n = 2, r = 2, s = 1;
  int start = -1;
  std::uint64_t budget = 100'000'000;
  double seconds = 600.0;
};

int cmd_exact(const Globals& g, const ExactArgs& a) {
  ex::ExactParams p;
  p.kind = a.kind == "ms" ? ex::Kind::ms : ex::Kind::a;
  p.k = a.k;
  p.n = a.n;
  p.r = a.r;
  p.s = p.kind == ex::Kind::ms ? 1 : a.s;
  if (a.start >= 0) p.start = a.start;
  p.node_budget = a.budget;
  p.time_budget_seconds = a.seconds;
  p.jobs = g.jobs;
  Json cfg = {{"kind", a.kind}, {"k", a.k}, {"n", a.n}, {"r", a.r}, {"s", p.s},
              {"node_budget", a.budget}, {"time_budget_seconds", a.seconds}, {"jobs", g.jobs}};
  if (p.start) cfg["start"] = *p.start;
  auto report = hn::envelope("exact", cfg, g.seed);
  const auto res = ex::exact_value(p);
  report["result"] = hn::to_json(res);
  report["timing"]["nodes"] = res.total_nodes;
  report["timing"]["seconds"] = res.seconds;
  const std::string name = std::string(a.kind == "ms" ? "MS" : "A") + "_" + std::to_string(a.k) + "(" +
                           std::to_string(a.n) + ";" + std::to_string(a.r) +
                           (a.kind == "ms" ? "" : "," + std::to_string(p.s)) + ")";
  std::string text;
  if (res.exact) {
    text = name + " = " + std::to_string(res.value);
  } else {
    text = name + " in [" + std::to_string(res.lo) + ", " + (res.hi ? std::to_string(*res.hi) : "unknown") + "]";
  }
  return emit(g, report, text, "", res.exact ? kOk : kBudget);
}

int cmd_verify(const Globals& g, const std::string& file, int n, int s) {
  const auto c = monopath::load_coloring_file(file);
  auto report = hn::envelope("verify", {{"file", file}, {"n", n}, {"s", s}}, g.seed);
  const auto t = Clock::now();
  const auto v = monopath::paths::verify_good(c, n, s);
  report["timing"]["seconds"] = since(t);
  Json res = {{"k", c.k()}, {"N", c.N()}, {"r", c.r()}, {"verdict", v.good ? "GOOD" : "BAD"}, {"vacuous", v.vacuous}};
  if (v.violation) res["witness"] = hn::to_json(*v.violation);
  report["result"] = res;
  std::string text = v.good ? "GOOD" : "BAD";
  if (v.vacuous) text += " (no path with " + std::to_string(n) + " edges)";
  if (v.violation) text += " witness " + path_string(*v.violation);
  return emit(g, report, text, "", v.good ? kOk : kViolation);
}

int cmd_encode(const Globals& g, const std::string& file, int n, int s, const std::string& mode) {
  const auto c = monopath::load_coloring_file(file);
  auto report = hn::envelope("encode", {{"file", file}, {"n", n}, {"s", s}, {"mode", mode}}, g.seed);
  const auto t = Clock::now();
  Json res;
  std::string text;
  int code = kOk;
  if (mode == "seidenberg") {
    const auto images = enc::seidenberg_map(c, n);
    Json list = Json::array();
    for (const auto& d : images) list.push_back(d.profile);
    std::set<enc::DownSet2D> distinct(images.begin(), images.end());
    const auto bound = monopath::binomial(2 * n, n);
    res = {{"downsets", list},
           {"image_count", distinct.size()},
           {"injective", distinct.size() == images.size()},
           {"bound", bound}};
    text = std::string(distinct.size() == images.size() ? "injective" : "NOT injective") + ", " +
           std::to_string(distinct.size()) + " images (bound " + std::to_string(bound) + ")";
    if (distinct.size() != images.size()) code = kViolation;
  } else if (mode == "theta1") {
    enc::Encoder encoder(c, s);
    Json list = Json::array();
    std::size_t max_size = 0;
    std::set<std::string> distinct;
    monopath::for_each_subset(c.N(), c.k() - 2, [&](std::span<const int> suffix) {
      const auto pre = encoder.theta1(suffix);
      const auto key = enc::serialize_vectors(pre.vectors);
      distinct.insert(key);
      max_size = std::max(max_size, pre.vectors.size());
      list.push_back({{"suffix", pre.suffix}, {"vectors", key}});
    });
    res = {{"images", list}, {"image_count", distinct.size()}, {"max_image_size", max_size}};
    text = std::to_string(list.size()) + " tuples, " + std::to_string(distinct.size()) + " distinct images, max size " +
           std::to_string(max_size);
  } else if (mode == "theta2") {
    const auto inj = enc::injectivity_check(c, n, c.r(), s);
    res = hn::to_json(inj);
    text = std::string(enc::verdict_name(inj.status)) + ", " + std::to_string(inj.image_count) +
           " images, max image size " + std::to_string(inj.max_image_size);
    if (inj.status != enc::Verdict::good_injective) code = kViolation;
  } else {
    const auto induced = enc::theorem4_reduction(c, n, s);
    const auto path = enc::find_monochromatic_two_path(induced);
    res = {{"k", induced.k}, {"N", induced.N}, {"labels", induced.labels}, {"palette_size", induced.palette.size()},
           {"greedy_fallback", induced.greedy_fallback},
           {"verdict", path ? "MONOCHROMATIC_2_PATH" : "NO_MONOCHROMATIC_2_PATH"}};
    if (const auto as = induced.as_coloring()) res["hyc"] = monopath::coloring_to_string(*as);
    if (path) res["witness"] = hn::to_json(*path);
    text = std::string(path ? "monochromatic 2-path " + path_string(*path) : "no monochromatic 2-path") + ", " +
           std::to_string(induced.palette.size()) + " labels";
    if (path) code = kViolation;
  }
  report["result"] = res;
  report["timing"]["seconds"] = since(t);
  return emit(g, report, text, "", code);
}

int cmd_audit(const Globals& g, std::uint64_t samples, int grid, int vectors_max) {
  monopath::tournament::AuditConfig cfg;
  cfg.samples = samples;
  cfg.grid = grid;
  cfg.vectors_max = vectors_max;
  cfg.seed = g.seed;
  cfg.jobs = g.jobs;
  auto report = hn::envelope("audit-tournaments",
                             {{"samples", samples}, {"grid", grid}, {"vectors_max", vectors_max}, {"jobs", g.jobs}},
                             g.seed);
  const auto t = Clock::now();
  const auto audit = monopath::tournament::domination_number_2majority_audit(cfg);
  report["result"] = hn::to_json(audit);
  report["timing"]["seconds"] = since(t);
  std::ostringstream text, csv;
  csv << "f,count\n";
  for (const auto& [f, count] : audit.f_histogram) {
    text << "f=" << f << ": " << count << "\n";
    csv << f << "," << count << "\n";
  }
  text << audit.violations.size() << " violations\n";
  return emit(g, report, text.str(), csv.str(), audit.violations.empty() ? kOk : kViolation);
}

int cmd_mseq(const Globals& g, int n, int R, int S, int level, std::uint64_t budget) {
  auto report = hn::envelope("mseq", {{"n", n}, {"R", R}, {"S", S}, {"level", level}, {"budget", budget}}, g.seed);
  const auto t = Clock::now();
  const auto res = level == 2 ? ex::longest_s_increasing(n, R, S, budget) : ex::longest_m3(n, R, S, budget);
  report["result"] = {{"value", res.value}, {"exact", res.exact}, {"witness", hn::to_json(res.witness)}};
  report["timing"]["nodes"] = res.nodes;
  report["timing"]["seconds"] = since(t);
  std::string text = "m_" + std::to_string(level) + "(" + std::to_string(n) + ";" + std::to_string(R) + "," +
                     std::to_string(S) + ") " + (res.exact ? "= " : ">= ") + std::to_string(res.value);
  return emit(g, report, text, "", res.exact ? kOk : kBudget);
}

int cmd_construct(const Globals& g, const std::string& which, int k, int n, int r, const std::string& output) {
  const int S = which == "s1" ? 1 : r - 1;
  auto report = hn::envelope("construct", {{"case", which}, {"k", k}, {"n", n}, {"r", r}}, g.seed);
  const auto t = Clock::now();
  // R = C(r, s) = r and S = C(r - 1, s - 1) for both s = 1 and s = r - 1
  const auto witness = k == 3 ? ex::longest_m3(n, r, S) : ex::longest_s_increasing(n, r, S);
  const auto c = which == "s1" ? ex::construct_coloring_s1(witness.witness, k, r)
                               : ex::construct_coloring_s_rm1(witness.witness, k, r);
  const auto v = monopath::paths::verify_good(c, n, S);
  if (!output.empty()) monopath::save_coloring_file(c, output);
  report["result"] = {{"s", S},
                      {"witness_length", witness.value},
                      {"witness_exact", witness.exact},
                      {"N", c.N()},
                      {"verdict", v.good ? "GOOD" : "BAD"},
                      {"hyc", monopath::coloring_to_string(c)}};
  report["timing"]["seconds"] = since(t);
  std::string text = (v.good ? "GOOD" : "BAD") + std::string(" coloring of [") + std::to_string(c.N()) + "]^(" +
                     std::to_string(k) + ") with " + std::to_string(r) + " colors, s=" + std::to_string(S);
  if (!output.empty()) text += ", written to " + output;
  return emit(g, report, text, "", v.good ? kOk : kViolation);
}

int cmd_downsets(const Globals& g, int n) {
  auto report = hn::envelope("downsets", {{"n", n}}, g.seed);
  const auto t = Clock::now();
  const auto count = enc::count_downsets(n);
  const auto expected = monopath::binomial(2 * n, n);
  report["result"] = {{"count", count}, {"binomial_2n_n", expected}, {"match", count == expected}};
  report["timing"]["seconds"] = since(t);
  return emit(g, report, std::to_string(count) + " down-sets of [" + std::to_string(n) + "]^2", "",
              count == expected ? kOk : kViolation);
}

int cmd_reproduce(const Globals& g, const std::string& suite) {
  hn::SuiteConfig cfg;
  cfg.suite = suite;
  cfg.seed = g.seed;
  cfg.jobs = g.jobs;
  std::ostringstream text;
  const auto report = hn::run_suite(cfg, [&](const hn::CriterionOutcome& o) { text << hn::format_line(o) << "\n"; });
  const int failed = report["result"]["failed"].get<int>();
  text << report["result"]["passed"].get<int>() << " passed, " << failed << " failed\n";
  return emit(g, report, text.str(), "", failed == 0 ? kOk : kViolation);
}

int cmd_bench(const Globals& g, int repeat) {
  struct Case {
    const char* name;
    int k, N, n, r, s;
  };
  static constexpr Case cases[] = {
      {"MS2(3;2) at N=9", 2, 9, 3, 2, 1},    {"MS2(3;2) at N=10", 2, 10, 3, 2, 1},
      {"A2(3;3,2) at N=5", 2, 5, 3, 3, 2},   {"A2(4;3,2) at N=9", 2, 9, 4, 3, 2},
      {"MS3(2;2) at N=7", 3, 7, 2, 2, 1},    {"A3(3;3,2) at N=7", 3, 7, 3, 3, 2},
  };
  auto report = hn::envelope("bench", {{"repeat", repeat}, {"jobs", g.jobs}}, g.seed);
  Json results = Json::array();
  Json timing = Json::array();
  std::ostringstream text, csv;
  csv << "case,outcome,nodes,seconds,nodes_per_second\n";
  for (const auto& c : cases) {
    ex::SearchParams p;
    p.k = c.k;
    p.N = c.N;
    p.n = c.n;
    p.r = c.r;
    p.s = c.s;
    p.jobs = g.jobs;
    ex::SearchCertificate cert;
    double best = 0.0;
    for (int i = 0; i < repeat; ++i) {
      cert = ex::exists_good_coloring(p);
      best = i == 0 ? cert.stats.seconds : std::min(best, cert.stats.seconds);
    }
    const double rate = best > 0 ? static_cast<double>(cert.stats.nodes) / best : 0.0;
    results.push_back({{"case", c.name}, {"outcome", ex::outcome_name(cert.outcome)}});
    timing.push_back({{"case", c.name}, {"nodes", cert.stats.nodes}, {"seconds", best}, {"nodes_per_second", rate}});
    text << c.name << ": " << ex::outcome_name(cert.outcome) << ", " << cert.stats.nodes << " nodes, " << best
         << " s, " << static_cast<std::uint64_t>(rate) << " nodes/s\n";
    csv << c.name << "," << ex::outcome_name(cert.outcome) << "," << cert.stats.nodes << "," << best << "," << rate
        << "\n";
  }
  report["result"] = results;
  report["timing"]["cases"] = timing;
  return emit(g, report, text.str(), csv.str(), kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact values and certificates for tight monotone paths in ordered hypergraphs"};
  app.set_version_flag("--version", hn::version());
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--jobs", g.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--seed", g.seed, "Seed for randomized runs")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  int rc = kOk;

  ExactArgs ea;
  auto* exact = app.add_subcommand("exact", "Exact MS_k(n;r) or A_k(n;r,s) by search");
  exact->add_option("--kind", ea.kind, "ms or a")->required()->check(CLI::IsMember({"ms", "a"}));
  exact->add_option("-k", ea.k, "Uniformity")->check(CLI::Range(2, 8));
  exact->add_option("-n", ea.n, "Path length in edges")->check(CLI::PositiveNumber);
  exact->add_option("-r", ea.r, "Number of colors")->check(CLI::Range(1, 32));
  exact->add_option("-s", ea.s, "Colors allowed on a path (kind a)")->check(CLI::PositiveNumber);
  exact->add_option("--start", ea.start, "First N to search");
  exact->add_option("--budget", ea.budget, "Node budget over the whole run")->check(CLI::PositiveNumber);
  exact->add_option("--time", ea.seconds, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
  exact->callback([&] { rc = cmd_exact(g, ea); });

  std::string file, mode = "theta2", suite = "acceptance", which = "s1", output;
  int n = 2, s = 1, k = 2, r = 2, R = 2, S = 1, level = 2, grid = 8, vectors_max = 120, repeat = 3;
  std::uint64_t samples = 10000, budget = ex::kDefaultSequenceBudget;

  auto* verify = app.add_subcommand("verify", "Check that a HYC coloring is good");
  verify->add_option("file", file, "HYC file")->required();
  verify->add_option("-n", n, "Path length in edges")->required()->check(CLI::PositiveNumber);
  verify->add_option("-s", s, "Colors allowed on a path")->check(CLI::PositiveNumber);
  verify->callback([&] { rc = cmd_verify(g, file, n, s); });

  auto* encode = app.add_subcommand("encode", "Encodings of a good coloring");
  encode->add_option("file", file, "HYC file")->required();
  encode->add_option("-n", n, "Path length in edges")->required()->check(CLI::PositiveNumber);
  encode->add_option("-s", s, "Colors allowed on a path")->check(CLI::PositiveNumber);
  encode->add_option("--mode", mode, "Encoding")
      ->check(CLI::IsMember({"seidenberg", "theta1", "theta2", "theorem4"}));
  encode->callback([&] { rc = cmd_encode(g, file, n, s, mode); });

  auto* audit = app.add_subcommand("audit-tournaments", "Domination numbers of random 2-majority tournaments");
  audit->add_option("--samples", samples, "Number of random vector sets");
  audit->add_option("-n,--grid", grid, "Vectors are drawn from [n]^3")->check(CLI::Range(1, 64));
  audit->add_option("--vectors-max", vectors_max, "Largest vector set")->check(CLI::PositiveNumber);
  audit->callback([&] { rc = cmd_audit(g, samples, grid, vectors_max); });

  auto* mseq = app.add_subcommand("mseq", "Longest S-increasing sequence m_2 or m_3");
  mseq->add_option("-n", n, "Grid side")->required()->check(CLI::PositiveNumber);
  mseq->add_option("-R", R, "Vector length")->required()->check(CLI::PositiveNumber);
  mseq->add_option("-S", S, "Strict coordinates required")->required()->check(CLI::PositiveNumber);
  mseq->add_option("--level", level, "2 or 3")->check(CLI::IsMember({2, 3}));
  mseq->add_option("--budget", budget, "Node budget")->check(CLI::PositiveNumber);
  mseq->callback([&] { rc = cmd_mseq(g, n, R, S, level, budget); });

  auto* construct = app.add_subcommand("construct", "Good coloring from a maximal S-increasing sequence");
  construct->add_option("--case", which, "s1 (s = 1) or s-rm1 (s = r - 1)")->check(CLI::IsMember({"s1", "s-rm1"}));
  construct->add_option("-k", k, "Uniformity")->check(CLI::IsMember({2, 3}));
  construct->add_option("-n", n, "Path length in edges")->required()->check(CLI::PositiveNumber);
  construct->add_option("-r", r, "Number of colors")->check(CLI::Range(2, 16));
  construct->add_option("-o,--output", output, "Write the coloring as HYC");
  construct->callback([&] { rc = cmd_construct(g, which, k, n, r, output); });

  auto* downsets = app.add_subcommand("downsets", "Count down-sets of [n]^2");
  downsets->add_option("-n", n, "Grid side")->required()->check(CLI::PositiveNumber);
  downsets->callback([&] { rc = cmd_downsets(g, n); });

  auto* reproduce = app.add_subcommand("reproduce", "Run the acceptance or smoke suite");
  reproduce->add_option("--suite", suite, "acceptance or smoke");
  reproduce->callback([&] { rc = cmd_reproduce(g, suite); });

  auto* bench = app.add_subcommand("bench", "Search throughput on fixed instances");
  bench->add_option("--repeat", repeat, "Runs per case (best time kept)")->check(CLI::PositiveNumber);
  bench->callback([&] { rc = cmd_bench(g, repeat); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const monopath::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const monopath::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const monopath::UnsupportedRegime& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const monopath::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kBudget;
  } catch (const monopath::PreconditionViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  }
  return rc;
}
