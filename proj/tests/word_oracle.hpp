#pragma once

// Sphere sizes of a Coxeter group by breadth-first search over the
// geometric representation in floating point. Only trustworthy for short
// lengths and small ranks.

#include "coxgrowth/diagram.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<long> sphere_sizes(const coxgrowth::CoxeterDiagram& d, std::size_t lengths) {
  const std::size_t n = d.rank();
  std::vector<std::vector<double>> form(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        form[i][j] = 1.0;
        continue;
      }
      const auto w = d.weight(i, j);
      form[i][j] = w.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / w.value());
    }
  using Mat = std::vector<double>;  // row-major n x n
  std::vector<Mat> gens;
  for (std::size_t s = 0; s < n; ++s) {
    Mat m(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      m[j * n + j] = 1.0;
      m[s * n + j] -= 2.0 * form[s][j];
    }
    gens.push_back(m);
  }
  auto key = [](const Mat& m) {
    std::vector<long long> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) k[i] = std::llround(m[i] * 1e6);
    return k;
  };
  Mat id(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1.0;
  std::set<std::vector<long long>> seen{key(id)};
  std::vector<Mat> frontier{id};
  std::vector<long> sizes{1};
  while (sizes.size() < lengths) {
    std::vector<Mat> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Mat h(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k) {
            const double a = g[i * n + k];
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) h[i * n + j] += a * s[k * n + j];
          }
        if (seen.insert(key(h)).second) next.push_back(std::move(h));
      }
    sizes.push_back(static_cast<long>(next.size()));
    frontier = std::move(next);
  }
  return sizes;
}

}  // namespace oracle
