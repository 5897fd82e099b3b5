#pragma once

#include <optional>
#include <span>
#include <utility>

#include "monopath/core/coloring.hpp"
#include "monopath/extremal/sequences.hpp"

namespace monopath::extremal {

/// Follows distinguished elements down a level-k sequence: for a tuple
/// i_1 < ... < i_j of 1-based positions, the element x_{i_1..i_j} at depth
/// k-1-j, where x_{i} is item i and x_{t} is the least witness of
/// x_{t without last} <_S x_{t without first}.
Nested distinguished_element(const SIncreasingSequence& seq, std::span<const int> tuple);

/// Coloring of [m]^(k) from an S-increasing sequence of length m with R = r,
/// S = 1: each edge gets the least coordinate on which its two extracted
/// vectors strictly increase.  k must be 2 or 3.
Coloring construct_coloring_s1(const SIncreasingSequence& witness, int k, int r);

/// As above with S = r - 1; the color is the position (in colex order of the
/// (r-1)-subsets of [r]) of the r-1 smallest strictly increasing coordinates.
Coloring construct_coloring_s_rm1(const SIncreasingSequence& witness, int k, int r);

struct UpperChain {
  SIncreasingSequence sequence;  // items P_1(1), ..., P_1(N)
  bool valid = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // 0-based item indices
};

/// Builds the nested predecessor maps P_{k-1}, ..., P_1 of a good coloring and
/// checks that (P_1(v)) is C(r-1, s-1)-increasing at level k.  Throws
/// PreconditionViolation for a coloring that is not good.
UpperChain theorem53_upper_chain(const Coloring& coloring, int n, int r, int s);

}  // namespace monopath::extremal
