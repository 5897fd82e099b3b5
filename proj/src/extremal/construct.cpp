#include <algorithm>
#include <map>
#include <string>

#include "monopath/core/combinatorics.hpp"
#include "monopath/errors.hpp"
#include "monopath/extremal/construct.hpp"
#include "monopath/paths/paths.hpp"

namespace monopath::extremal {

Nested distinguished_element(const SIncreasingSequence& seq, std::span<const int> tuple) {
  if (tuple.empty() || static_cast<int>(tuple.size()) > seq.level - 1)
    throw InvalidArgument("distinguished_element: tuple size must lie in 1..level-1");
  if (tuple.size() == 1) {
    const int i = tuple[0];
    if (i < 1 || static_cast<std::size_t>(i) > seq.items.size())
      throw InvalidArgument("distinguished_element: position out of range");
    return seq.items[static_cast<std::size_t>(i - 1)];
  }
  const auto a = distinguished_element(seq, tuple.first(tuple.size() - 1));
  auto b = distinguished_element(seq, tuple.subspan(1));
  const auto w = s_less_k(a, b, seq.S);
  if (!w || b.depth == 0) throw InvalidArgument("distinguished_element: sequence is not S-increasing");
  return b.members[*w];
}

namespace {

void check_witness(SIncreasingSequence witness, int k, int r, int S) {
  if (k != 2 && k != 3) throw InvalidArgument("construct: only k = 2 and k = 3 are supported");
  if (witness.level != k) throw InvalidArgument("construct: witness level must equal k");
  if (witness.R != r || witness.S != S)
    throw InvalidArgument("construct: witness must have R = " + std::to_string(r) + ", S = " + std::to_string(S));
  certify(witness);
}

template <typename ColorOf>
Coloring build(const SIncreasingSequence& witness, int k, int r, ColorOf color_of) {
  const int m = static_cast<int>(witness.items.size());
  std::vector<std::uint8_t> colors;
  colors.reserve(binomial(m, k));
  for_each_subset(m, k, [&](std::span<const int> edge) {
    const auto x = distinguished_element(witness, edge.first(static_cast<std::size_t>(k - 1)));
    const auto y = distinguished_element(witness, edge.subspan(1));
    std::vector<int> strict;
    for (std::size_t i = 0; i < x.vector.size(); ++i)
      if (x.vector[i] < y.vector[i]) strict.push_back(static_cast<int>(i) + 1);
    colors.push_back(static_cast<std::uint8_t>(color_of(strict)));
  });
  return Coloring(k, m, r, std::move(colors));
}

}  // namespace

Coloring construct_coloring_s1(const SIncreasingSequence& witness, int k, int r) {
  check_witness(witness, k, r, 1);
  return build(witness, k, r, [](const std::vector<int>& strict) { return strict.front(); });
}

Coloring construct_coloring_s_rm1(const SIncreasingSequence& witness, int k, int r) {
  if (r < 2) throw InvalidArgument("construct_coloring_s_rm1: needs r >= 2");
  check_witness(witness, k, r, r - 1);
  const ColorSubsetIndex index(r, r - 1);
  return build(witness, k, r, [&](const std::vector<int>& strict) {
    ColorSet mask = 0;
    for (int i = 0; i < r - 1; ++i) mask |= color_bit(strict[static_cast<std::size_t>(i)]);
    return index.index_of(mask) + 1;
  });
}

UpperChain theorem53_upper_chain(const Coloring& coloring, int n, int r, int s) {
  if (r != coloring.r()) throw InvalidArgument("theorem53_upper_chain: r does not match the coloring");
  if (s < 1 || s >= r) throw InvalidArgument("theorem53_upper_chain: need 1 <= s < r");
  const auto verdict = paths::verify_good(coloring, n, s);
  if (!verdict.good) {
    std::string path;
    for (int v : verdict.violation->vertices) path += (path.empty() ? "" : ",") + std::to_string(v);
    throw PreconditionViolation("theorem53_upper_chain: coloring is not good; path " + path);
  }
  const int k = coloring.k();
  const int N = coloring.N();
  UpperChain out;
  out.sequence.level = k;
  out.sequence.n = n;
  out.sequence.R = static_cast<int>(binomial(r, s));
  out.sequence.S = static_cast<int>(binomial(r - 1, s - 1));

  // level[j] holds P_j for every j-tuple, indexed by colex rank
  const paths::PVectorTable table(coloring, s);
  std::vector<Nested> current;
  current.reserve(table.tuple_count());
  for (std::size_t i = 0; i < table.tuple_count(); ++i) current.push_back(Nested::leaf(table.at_rank(i)));
  for (int width = k - 2; width >= 1; --width) {
    std::vector<Nested> next;
    const int depth = k - 1 - width;
    for_each_subset(N, width, [&](std::span<const int> tuple) {
      std::vector<Nested> members;
      std::vector<int> longer(tuple.size() + 1);
      std::copy(tuple.begin(), tuple.end(), longer.begin() + 1);
      for (int u = 1; u < tuple[0]; ++u) {
        longer[0] = u;
        members.push_back(current[colex_rank(longer)]);
      }
      next.push_back(Nested::set(depth, std::move(members)));
    });
    current = std::move(next);
  }
  out.sequence.items = std::move(current);
  out.counterexample = find_violation(out.sequence);
  out.valid = !out.counterexample;
  if (out.valid) certify(out.sequence);
  return out;
}

}  // namespace monopath::extremal
