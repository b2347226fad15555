#include "crossfam/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace crossfam {

BipartiteGraph::BipartiteGraph(SetFamily left, SetFamily right)
    : left_(std::move(left)), right_(std::move(right)) {}

BipartiteGraph BipartiteGraph::disjointness(SetFamily left, SetFamily right) {
  if (left.params().n != right.params().n) {
    throw std::invalid_argument("bipartite graph: ground sets differ");
  }
  BipartiteGraph g(std::move(left), std::move(right));
  const auto lm = g.left_.masks();
  const auto rm = g.right_.masks();
  g.adjacency_.resize(lm.size());
  for (std::size_t i = 0; i < lm.size(); ++i) {
    for (std::size_t j = 0; j < rm.size(); ++j) {
      if ((lm[i] & rm[j]) == 0) g.adjacency_[i].push_back(static_cast<int>(j));
    }
  }
  return g;
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.size();
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteGraph::edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    for (int j : adjacency_[i]) out.emplace_back(i, static_cast<std::size_t>(j));
  }
  return out;
}

std::vector<std::size_t> BipartiteGraph::left_degrees() const {
  std::vector<std::size_t> out;
  out.reserve(adjacency_.size());
  for (const auto& row : adjacency_) out.push_back(row.size());
  return out;
}

std::vector<std::size_t> BipartiteGraph::right_degrees() const {
  std::vector<std::size_t> out(right_.size(), 0);
  for (const auto& row : adjacency_) {
    for (int j : row) ++out[static_cast<std::size_t>(j)];
  }
  return out;
}

std::optional<std::size_t> BipartiteGraph::regular_degree() const {
  std::optional<std::size_t> degree;
  auto agree = [&](std::size_t d) {
    if (!degree) degree = d;
    return *degree == d;
  };
  for (std::size_t d : left_degrees()) {
    if (!agree(d)) return std::nullopt;
  }
  for (std::size_t d : right_degrees()) {
    if (!agree(d)) return std::nullopt;
  }
  return degree;
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        left_count_(g.left().size()),
        match_left_(left_count_, -1),
        match_right_(g.right().size(), -1),
        dist_(left_count_, 0) {}

  std::vector<int> run() {
    while (bfs()) {
      for (std::size_t u = 0; u < left_count_; ++u) {
        if (match_left_[u] == -1) dfs(u);
      }
    }
    return match_left_;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<std::size_t> frontier;
    for (std::size_t u = 0; u < left_count_; ++u) {
      if (match_left_[u] == -1) {
        dist_[u] = 0;
        frontier.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool reached_free = false;
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (int v : g_.neighbors(u)) {
        const int w = match_right_[static_cast<std::size_t>(v)];
        if (w == -1) {
          reached_free = true;
        } else if (dist_[static_cast<std::size_t>(w)] == kInf) {
          dist_[static_cast<std::size_t>(w)] = dist_[u] + 1;
          frontier.push(static_cast<std::size_t>(w));
        }
      }
    }
    return reached_free;
  }

  bool dfs(std::size_t u) {
    for (int v : g_.neighbors(u)) {
      const int w = match_right_[static_cast<std::size_t>(v)];
      if (w == -1 || (dist_[static_cast<std::size_t>(w)] == dist_[u] + 1 &&
                      dfs(static_cast<std::size_t>(w)))) {
        match_left_[u] = v;
        match_right_[static_cast<std::size_t>(v)] = static_cast<int>(u);
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::size_t left_count_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace

std::vector<int> maximum_matching(const BipartiteGraph& g) {
  return HopcroftKarp(g).run();
}

}  // namespace crossfam
