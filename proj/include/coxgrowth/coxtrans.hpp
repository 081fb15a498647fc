#pragma once

// Coxeter transformations of Coxeter trees and their characteristic
// polynomials.

#include "coxgrowth/diagram.hpp"
#include "coxgrowth/exactpoly.hpp"

#include <cstddef>
#include <vector>

namespace coxgrowth {

/// Raised when a tree carries a weight whose 4cos^2(pi/m) is irrational.
class InexactWeightError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Bipartite Coxeter element of a tree. The determinant is taken of
///   [ (1+t)I        P     ]
///   [ t Q^T      (1+t)I   ]
/// where P is the 0/1 edge pattern and Q holds 4cos^2(pi/m) per edge; for a
/// tree this is diagonally similar to the block matrix with X = 2cos(pi/m).
struct BipartiteCoxeter {
  std::vector<std::size_t> first;   // V1 in matrix order
  std::vector<std::size_t> second;  // V2 in matrix order
  std::vector<std::vector<int>> pattern;              // |V1| x |V2|
  std::vector<std::vector<Integer>> four_cos_squared; // |V1| x |V2|
  IntPoly char_poly;
};

/// Two-colouring from vertex 0; each class in increasing vertex order.
BipartiteCoxeter bipartite_coxeter_matrix(const WeightedTree& tree);
/// Caller-chosen order; throws unless the two lists form a bipartition.
BipartiteCoxeter bipartite_coxeter_matrix(const WeightedTree& tree, std::vector<std::size_t> first,
                                          std::vector<std::size_t> second);

/// Leaf deletion at the lowest-index leaf:
///   Phi = (1+t) Phi(T - v) - 4cos^2(pi/m) t Phi(T - v - v').
/// Weights must be 3, 4, 6 or infinity.
IntPoly char_poly_recursive(const WeightedTree& tree);

/// Polynomial with each coefficient known only up to a rational enclosure.
struct IntervalPoly {
  std::vector<Rational> low;   // ascending
  std::vector<Rational> high;

  [[nodiscard]] std::size_t size() const noexcept { return low.size(); }
  [[nodiscard]] bool contains(const IntPoly& p) const;
};

/// Same recursion for arbitrary weights; each 4cos^2 enclosed to `width`.
IntervalPoly char_poly_interval(const WeightedTree& tree, const Rational& width = default_width());

/// Phi of Star(p_1..p_k), by reducing arms to length 2 and 3.
IntPoly char_poly_star(const std::vector<unsigned>& arms);

bool verify_delta_eq_phi(const std::vector<unsigned>& arms);

struct DeltaPhiSweep {
  std::size_t checked = 0;
  std::vector<std::vector<unsigned>> failures;
  [[nodiscard]] bool pass() const { return failures.empty(); }
};

/// Every nondecreasing tuple with 1 <= k <= k_max and 2 <= p_i <= p_max.
DeltaPhiSweep verify_delta_eq_phi_sweep(std::size_t k_max, unsigned p_max, std::size_t threads = 0);

/// Largest real root of Phi; the exact interval [1, 1] when no root exceeds 1.
RootInterval spectral_radius_coxeter(const WeightedTree& tree, const Rational& width = default_width());

/// alpha = sqrt(2 + lambda + 1/lambda), the largest real root of the
/// eliminated polynomial, isolated inside an outward enclosure.
RootInterval alpha_from_lambda(const RootInterval& lambda, const Rational& width = default_width());
IntPoly alpha_from_lambda(const IntPoly& lambda_poly);

struct PolygonStarCheck {
  std::vector<unsigned> angles;
  RootInterval growth;
  RootInterval spectral;
  bool delta_equals_phi = false;
  bool intervals_overlap = false;
  bool same_core = false;
  [[nodiscard]] bool pass() const { return delta_equals_phi && intervals_overlap && same_core; }
};

struct PolygonStarSweep {
  std::vector<PolygonStarCheck> rows;
  [[nodiscard]] bool pass() const;
};

/// For each compact hyperbolic polygon in range: the growth rate equals the
/// spectral radius of the Coxeter transformation of the matching star.
PolygonStarSweep verify_polygon_star_sweep(std::size_t k_max, unsigned p_max, const Rational& width = default_width(),
                                           std::size_t threads = 0);

}  // namespace coxgrowth
