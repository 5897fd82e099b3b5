#include <algorithm>
#include <string>

#include "monopath/encode/encode.hpp"
#include "monopath/errors.hpp"

namespace monopath::encode {

bool DownSet2D::contains(int x1, int x2) const {
  if (x1 < 1 || x1 > n || x2 < 1) return false;
  return x2 <= profile[static_cast<std::size_t>(x1 - 1)];
}

std::size_t DownSet2D::size() const {
  std::size_t total = 0;
  for (int h : profile) total += static_cast<std::size_t>(h);
  return total;
}

namespace {

DownSet2D closure(int n, const std::vector<Point>& points) {
  DownSet2D d;
  d.n = n;
  d.profile.assign(static_cast<std::size_t>(n), 0);
  for (const auto& p : points)
    for (int x = 1; x <= p[0]; ++x) {
      auto& h = d.profile[static_cast<std::size_t>(x - 1)];
      h = std::max<int>(h, p[1]);
    }
  return d;
}

void check_input(const Coloring& coloring, int n) {
  if (coloring.k() != 3 || coloring.r() != 2)
    throw InvalidArgument("seidenberg_downset: needs a 2-coloring of triples");
  if (n < 1) throw InvalidArgument("seidenberg_downset: n must be positive");
}

std::vector<Point> predecessors(const paths::PVectorTable& table, int n, int v) {
  std::vector<Point> out;
  for (int u = 1; u < v; ++u) {
    const int pair[2] = {u, v};
    Point p = table.at(pair);
    if (p[0] > n || p[1] > n)
      throw PreconditionViolation("seidenberg_downset: P(" + std::to_string(u) + "," + std::to_string(v) + ") = (" +
                                  std::to_string(p[0]) + "," + std::to_string(p[1]) + ") leaves [" +
                                  std::to_string(n) + "]^2; coloring has a monochromatic path of length " +
                                  std::to_string(n));
    out.push_back(std::move(p));
  }
  return out;
}

std::uint64_t count_profiles(int columns, int max_height) {
  if (columns == 0) return 1;
  std::uint64_t total = 0;
  for (int h = 0; h <= max_height; ++h) total += count_profiles(columns - 1, h);
  return total;
}

}  // namespace

DownSet2D seidenberg_downset(const Coloring& coloring, int n, int v) {
  check_input(coloring, n);
  if (v < 1 || v > coloring.N()) throw InvalidArgument("seidenberg_downset: vertex out of range");
  const paths::PVectorTable table(coloring, 1);
  return closure(n, predecessors(table, n, v));
}

std::vector<DownSet2D> seidenberg_map(const Coloring& coloring, int n) {
  check_input(coloring, n);
  const paths::PVectorTable table(coloring, 1);
  std::vector<DownSet2D> out;
  out.reserve(static_cast<std::size_t>(coloring.N()));
  for (int v = 1; v <= coloring.N(); ++v) out.push_back(closure(n, predecessors(table, n, v)));
  return out;
}

std::uint64_t count_downsets(int n) {
  if (n < 0) throw InvalidArgument("count_downsets: negative side");
  if (n > kMaxDownsetSide)
    throw ResourceLimit("count_downsets: side " + std::to_string(n) + " exceeds the enumeration limit of " +
                        std::to_string(kMaxDownsetSide));
  return count_profiles(n, n);
}

}  // namespace monopath::encode
