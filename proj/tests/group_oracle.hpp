#pragma once

// Brute-force finite group orders from explicit permutation generators.

#include <cstddef>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline std::size_t closure_size(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  const std::size_t n = gens[0].size();
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        Perm h(n);
        for (std::size_t i = 0; i < n; ++i) h[i] = s[static_cast<std::size_t>(g[i])];
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline Perm swap_perm(std::size_t n, std::size_t a, std::size_t b) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  std::swap(p[a], p[b]);
  return p;
}

/// Symmetric group S_{n+1} from adjacent transpositions.
inline std::size_t order_A(std::size_t n) {
  std::vector<Perm> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(swap_perm(n + 1, i, i + 1));
  return closure_size(g);
}

/// Signed permutations of n letters, acting on 2n points (i and i + n = -i).
inline std::size_t order_B(std::size_t n) {
  std::vector<Perm> g;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Perm p = swap_perm(2 * n, i, i + 1);
    std::swap(p[n + i], p[n + i + 1]);
    g.push_back(p);
  }
  g.push_back(swap_perm(2 * n, n - 1, 2 * n - 1));
  return closure_size(g);
}

/// Even signed permutations.
inline std::size_t order_D(std::size_t n) {
  std::vector<Perm> g;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Perm p = swap_perm(2 * n, i, i + 1);
    std::swap(p[n + i], p[n + i + 1]);
    g.push_back(p);
  }
  // x_{n-1} <-> -x_n.
  Perm p = swap_perm(2 * n, n - 2, 2 * n - 1);
  std::swap(p[n - 1], p[2 * n - 2]);
  g.push_back(p);
  return closure_size(g);
}

/// Two reflections with mirrors pi/m apart, acting on the 2m directions k pi/m.
inline std::size_t order_I2(std::size_t m) {
  const std::size_t n = 2 * m;
  Perm a(n), b(n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = static_cast<int>((n - k) % n);
    b[k] = static_cast<int>((n + 2 - k) % n);
  }
  return closure_size({a, b});
}

}  // namespace oracle
