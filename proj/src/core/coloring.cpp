#include "monopath/core/coloring.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

#include "monopath/core/combinatorics.hpp"
#include "monopath/errors.hpp"

namespace monopath {

namespace {

constexpr std::uint64_t kMaxEdges = std::uint64_t{1} << 31;

std::uint64_t fnv1a(int k, int N, int r, const std::vector<std::uint8_t>& colors) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (int v : {k, N, r})
    for (int shift = 0; shift < 32; shift += 8) mix((static_cast<std::uint32_t>(v) >> shift) & 0xff);
  for (auto c : colors) mix(c);
  return h;
}

std::uint64_t checked_edge_count(int k, int N) {
  const std::uint64_t count = binomial(N, k);
  if (count > kMaxEdges) throw ResourceLimit("coloring: too many edges");
  return count;
}

}  // namespace

Coloring::Coloring(int k, int N, int r, std::vector<std::uint8_t> colors)
    : k_(k), N_(N), r_(r), colors_(std::move(colors)) {
  if (k < 2) throw InvalidArgument("coloring: uniformity must be at least 2");
  if (N < 0) throw InvalidArgument("coloring: negative vertex count");
  if (r < 1 || r > kMaxColors) throw InvalidArgument("coloring: r must lie in 1..255");
  if (colors_.size() != checked_edge_count(k, N))
    throw InvalidArgument("coloring: expected C(" + std::to_string(N) + "," + std::to_string(k) +
                          ")=" + std::to_string(binomial(N, k)) + " colors, got " +
                          std::to_string(colors_.size()));
  for (std::size_t e = 0; e < colors_.size(); ++e)
    if (colors_[e] < 1 || colors_[e] > r)
      throw InvalidArgument("coloring: edge " + std::to_string(e) + " has color " +
                            std::to_string(colors_[e]) + " outside 1.." + std::to_string(r));
  fingerprint_ = fnv1a(k_, N_, r_, colors_);
}

Coloring Coloring::uniform(int k, int N, int r, int color) {
  return Coloring(k, N, r,
                  std::vector<std::uint8_t>(checked_edge_count(k, N), static_cast<std::uint8_t>(color)));
}

int Coloring::color_of(std::span<const int> edge) const {
  if (static_cast<int>(edge.size()) != k_) throw InvalidArgument("color_of: edge size != k");
  if (!edge.empty() && edge.back() > N_) throw InvalidArgument("color_of: vertex out of range");
  return colors_[colex_rank(edge)];
}

Coloring Coloring::restricted(int M) const {
  if (M < 0 || M > N_) throw InvalidArgument("restricted: vertex count out of range");
  const auto count = binomial(M, k_);
  return Coloring(k_, M, r_, std::vector<std::uint8_t>(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(count)));
}

std::shared_ptr<const EdgeStructure> EdgeStructure::get(int k, int N) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const EdgeStructure>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({k, N});
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<EdgeStructure>();
  built->k = k;
  built->N = N;
  built->tuple_count = binomial(N, k - 1);
  const auto edges = checked_edge_count(k, N);
  built->prefix.reserve(edges);
  built->suffix.reserve(edges);
  built->last_vertex.reserve(edges);
  for_each_subset(N, k, [&](std::span<const int> edge) {
    built->prefix.push_back(static_cast<std::uint32_t>(colex_rank(edge.first(edge.size() - 1))));
    built->suffix.push_back(static_cast<std::uint32_t>(colex_rank(edge.subspan(1))));
    built->last_vertex.push_back(static_cast<std::uint16_t>(edge.back()));
  });
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(k, N), std::move(built));
  return it->second;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  // A single terminating LF is allowed.
  if (!lines.empty() && lines.back().empty() && !text.empty() && text.back() == '\n')
    lines.pop_back();
  return lines;
}

long parse_number(const std::string& token, int line, const std::string& field) {
  if (token.empty()) throw ParseError(line, field, "empty value");
  long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.front() == '-' || token.front() == '+')
    throw ParseError(line, field, "not a non-negative integer: '" + token + "'");
  return value;
}

std::vector<std::string> split_spaces(const std::string& line) {
  std::vector<std::string> tokens;
  if (line.empty()) return tokens;
  std::size_t start = 0;
  while (true) {
    const auto end = line.find(' ', start);
    tokens.push_back(line.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return tokens;
}

}  // namespace

Coloring coloring_from_string(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "HYC v1") throw ParseError(1, "magic", "expected 'HYC v1'");
  if (lines.size() < 2) throw ParseError(2, "header", "missing header line");

  const auto header = split_spaces(lines[1]);
  static const char* const kKeys[] = {"k", "N", "r"};
  if (header.size() != 3)
    throw ParseError(2, "header", "expected 'k=<k> N=<N> r=<r>'");
  long values[3];
  for (int i = 0; i < 3; ++i) {
    const std::string prefix = std::string(kKeys[i]) + "=";
    if (header[static_cast<std::size_t>(i)].rfind(prefix, 0) != 0)
      throw ParseError(2, kKeys[i], "expected key '" + prefix + "'");
    values[i] = parse_number(header[static_cast<std::size_t>(i)].substr(prefix.size()), 2, kKeys[i]);
  }
  const long k = values[0], N = values[1], r = values[2];
  if (k < 2 || k > 64) throw ParseError(2, "k", "uniformity must lie in 2..64");
  if (N > 65535) throw ParseError(2, "N", "vertex count too large");
  if (r < 1 || r > Coloring::kMaxColors) throw ParseError(2, "r", "must lie in 1..255");

  std::uint64_t expected = 0;
  try {
    expected = checked_edge_count(static_cast<int>(k), static_cast<int>(N));
  } catch (const ResourceLimit&) {
    throw ParseError(2, "N", "edge count too large");
  }

  if (lines.size() < 3) {
    if (expected == 0) return Coloring(static_cast<int>(k), static_cast<int>(N), static_cast<int>(r), {});
    throw ParseError(3, "colors", "missing color line");
  }
  if (lines.size() > 3) throw ParseError(4, "trailing", "unexpected content after color line");

  const auto tokens = split_spaces(lines[2]);
  if (tokens.size() != expected)
    throw ParseError(3, "colors", "expected C(" + std::to_string(N) + "," + std::to_string(k) +
                                      ")=" + std::to_string(expected) + " entries, got " +
                                      std::to_string(tokens.size()));
  std::vector<std::uint8_t> colors;
  colors.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string field = "colors[" + std::to_string(i) + "]";
    const long c = parse_number(tokens[i], 3, field);
    if (c < 1 || c > r) throw ParseError(3, field, "color " + tokens[i] + " outside 1.." + std::to_string(r));
    colors.push_back(static_cast<std::uint8_t>(c));
  }
  return Coloring(static_cast<int>(k), static_cast<int>(N), static_cast<int>(r), std::move(colors));
}

std::string coloring_to_string(const Coloring& coloring) {
  std::string out = "HYC v1\nk=" + std::to_string(coloring.k()) + " N=" + std::to_string(coloring.N()) +
                    " r=" + std::to_string(coloring.r()) + "\n";
  bool first = true;
  for (auto c : coloring.colors()) {
    if (!first) out.push_back(' ');
    first = false;
    out += std::to_string(c);
  }
  out.push_back('\n');
  return out;
}

Coloring load_coloring(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return coloring_from_string(text);
}

void save_coloring(const Coloring& coloring, std::ostream& out) { out << coloring_to_string(coloring); }

Coloring load_coloring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "file", "cannot open '" + path + "'");
  return load_coloring(in);
}

void save_coloring_file(const Coloring& coloring, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  save_coloring(coloring, out);
}

}  // namespace monopath
