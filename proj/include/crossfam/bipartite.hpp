#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crossfam/core.hpp"

namespace crossfam {

/// Bipartite graph between two families with an edge exactly when the two
/// sets are disjoint. Vertices are indices into left().masks() and
/// right().masks().
class BipartiteGraph {
 public:
  /// Throws std::invalid_argument if the ground sets differ.
  static BipartiteGraph disjointness(SetFamily left, SetFamily right);

  const SetFamily& left() const { return left_; }
  const SetFamily& right() const { return right_; }

  std::span<const int> neighbors(std::size_t left_index) const {
    return adjacency_[left_index];
  }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  std::vector<std::size_t> left_degrees() const;
  std::vector<std::size_t> right_degrees() const;
  /// Common degree of every vertex on both sides, if there is one.
  std::optional<std::size_t> regular_degree() const;

 private:
  BipartiteGraph(SetFamily left, SetFamily right);

  SetFamily left_;
  SetFamily right_;
  std::vector<std::vector<int>> adjacency_;
};

/// Maximum matching by Hopcroft-Karp. Entry i is the right vertex matched to
/// left vertex i, or -1.
std::vector<int> maximum_matching(const BipartiteGraph& g);

struct MatchedPair {
  KSubset left;
  KSubset right;
};

}  // namespace crossfam
