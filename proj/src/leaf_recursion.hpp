#pragma once

#include "coxgrowth/diagram.hpp"

#include <map>
#include <vector>

namespace coxgrowth::detail {

/// Leaf-deletion recursion over vertex subsets of a forest, always at the
/// lowest-index vertex of degree <= 1:
///   P(F) = add_vertex(P(F - v))                              v isolated
///   P(F) = minus_edge_term(add_vertex(P(F - v)), P(F - v - v'), m)   v a leaf
template <class Poly, class Ops>
class LeafRecursion {
public:
  LeafRecursion(const WeightedTree& tree, Ops ops) : tree_(tree), ops_(std::move(ops)) {}

  Poly run() { return phi(std::vector<bool>(tree_.size(), true)); }

private:
  Poly phi(const std::vector<bool>& alive) {
    auto it = memo_.find(alive);
    if (it != memo_.end()) return it->second;
    Poly result = ops_.one();
    for (std::size_t v = 0; v < alive.size(); ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      std::size_t nb = 0;
      Weight w;
      for (auto [u, wu] : tree_.adjacency()[v])
        if (alive[u]) {
          ++deg;
          nb = u;
          w = wu;
        }
      if (deg > 1) continue;
      std::vector<bool> rest = alive;
      rest[v] = false;
      result = ops_.add_vertex(phi(rest));
      if (deg == 1) {
        rest[nb] = false;
        result = ops_.minus_edge_term(result, phi(rest), w);
      }
      break;
    }
    memo_.emplace(alive, result);
    return result;
  }

  const WeightedTree& tree_;
  Ops ops_;
  std::map<std::vector<bool>, Poly> memo_;
};

}  // namespace coxgrowth::detail
