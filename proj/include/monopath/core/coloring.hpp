#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace monopath {

/// An r-coloring of all k-subsets of [N].  Entry e of colors() is the color
/// (1..r) of the edge with colex rank e.  Immutable after construction.
///
/// Vertex counts below k are allowed and give an empty edge set.
class Coloring {
 public:
  static constexpr int kMaxColors = 255;

  Coloring(int k, int N, int r, std::vector<std::uint8_t> colors);

  /// Every edge receives `color`.
  static Coloring uniform(int k, int N, int r, int color);

  int k() const noexcept { return k_; }
  int N() const noexcept { return N_; }
  int r() const noexcept { return r_; }
  std::size_t edge_count() const noexcept { return colors_.size(); }

  int color(std::uint64_t rank) const { return colors_[rank]; }
  int color_of(std::span<const int> edge) const;
  const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }

  /// Restriction to the vertex set [M], M <= N.  Colex ranks of edges inside
  /// [M] are unchanged, so this is a prefix of the colors array.
  Coloring restricted(int M) const;

  /// 64-bit FNV-1a hash over (k, N, r, colors).
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.k_ == b.k_ && a.N_ == b.N_ && a.r_ == b.r_ && a.colors_ == b.colors_;
  }

 private:
  int k_;
  int N_;
  int r_;
  std::vector<std::uint8_t> colors_;
  std::uint64_t fingerprint_;
};

/// For every edge (in colex order) the colex ranks of its first k-1 vertices
/// (prefix) and last k-1 vertices (suffix) among the (k-1)-subsets of [N].
struct EdgeStructure {
  int k = 0;
  int N = 0;
  std::size_t tuple_count = 0;
  std::vector<std::uint32_t> prefix;
  std::vector<std::uint32_t> suffix;
  std::vector<std::uint16_t> last_vertex;

  static std::shared_ptr<const EdgeStructure> get(int k, int N);
};

/// HYC v1 text codec.
Coloring load_coloring(std::istream& in);
void save_coloring(const Coloring& coloring, std::ostream& out);

Coloring coloring_from_string(const std::string& text);
std::string coloring_to_string(const Coloring& coloring);

Coloring load_coloring_file(const std::string& path);
void save_coloring_file(const Coloring& coloring, const std::string& path);

}  // namespace monopath
