#pragma once

// Coxeter diagrams, weighted trees and the spherical-type catalogue.

#include "coxgrowth/exactpoly.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxgrowth {

/// Edge label m_ij: an integer >= 2 or infinity.
class Weight {
public:
  constexpr Weight() = default;
  constexpr explicit Weight(unsigned m) : value_(m) {}
  static constexpr Weight infinity() {
    Weight w;
    w.infinite_ = true;
    return w;
  }

  [[nodiscard]] constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful when finite.
  [[nodiscard]] constexpr unsigned value() const noexcept { return value_; }
  [[nodiscard]] constexpr bool is_edge() const noexcept { return infinite_ || value_ >= 3; }
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(const Weight& a, const Weight& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

private:
  unsigned value_ = 2;
  bool infinite_ = false;
};

Weight parse_weight(std::string_view text);

class CoxeterDiagram {
public:
  explicit CoxeterDiagram(std::size_t rank = 0);

  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
  /// Diagonal entries are reported as Weight(1).
  [[nodiscard]] Weight weight(std::size_t i, std::size_t j) const;
  void set_weight(std::size_t i, std::size_t j, Weight w);

  /// Pairs (i < j) with m_ij >= 3.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  [[nodiscard]] CoxeterDiagram induced(const std::vector<std::size_t>& vertices) const;
  /// Connected components of the graph of edges with m_ij >= 3.
  [[nodiscard]] std::vector<std::vector<std::size_t>> components() const;

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

private:
  std::size_t rank_;
  std::vector<Weight> table_;
};

/// "[3,5,3]" (linear) or "[(3^2,inf)]" (cyclic). Accepts "inf" and "∞".
CoxeterDiagram parse_coxeter_symbol(std::string_view text);
/// Inverse of parse_coxeter_symbol for diagrams that are a path or cycle in
/// index order; nullopt otherwise.
std::optional<std::string> coxeter_symbol(const CoxeterDiagram& d);

/// "rank N" followed by "i j m" lines (1-based, m >= 2 or inf).
CoxeterDiagram parse_diagram_file(std::string_view contents);
std::string format_diagram_file(const CoxeterDiagram& d);

/// Compact polygon with angles pi/p_i; non-adjacent sides get infinity.
CoxeterDiagram polygon_diagram(const std::vector<unsigned>& angles);
/// sum 1/p_i < k - 2.
bool polygon_is_hyperbolic(const std::vector<unsigned>& angles);

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Weight weight{3};
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

class WeightedTree {
public:
  /// Throws unless the edges form a tree on `vertices` vertices.
  WeightedTree(std::size_t vertices, std::vector<TreeEdge> edges);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<std::vector<std::pair<std::size_t, Weight>>>& adjacency() const noexcept {
    return adj_;
  }
  [[nodiscard]] std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  [[nodiscard]] bool all_weights(Weight w) const;
  [[nodiscard]] CoxeterDiagram to_diagram() const;
  /// Same tree with vertex v renamed to perm[v].
  [[nodiscard]] WeightedTree relabeled(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const WeightedTree&, const WeightedTree&) = default;

private:
  std::size_t n_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::pair<std::size_t, Weight>>> adj_;
};

/// Views a diagram as a tree; nullopt if its edge graph is not a tree.
std::optional<WeightedTree> as_tree(const CoxeterDiagram& d);

/// Centre 0, then each arm in order, listed outward; arm i has p_i - 1 vertices.
WeightedTree star_diagram(const std::vector<unsigned>& arms);
/// Two branch vertices joined by a path of length j, each with a pendant
/// leaf; arms of i - 1 and k - 1 further vertices.
WeightedTree h_graph(unsigned i, unsigned j, unsigned k);

/// Number of the form a + b sqrt(r), with a certified enclosure [low, high]
/// that is also filled for values that are not of that form.
struct FormEntry {
  bool exact = true;
  Rational rational;
  Rational surd_coeff;
  unsigned radicand = 1;
  Rational low;
  Rational high;

  [[nodiscard]] double approx() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const FormEntry& a, const FormEntry& b) {
    return a.exact == b.exact && a.rational == b.rational && a.surd_coeff == b.surd_coeff &&
           a.radicand == b.radicand && a.low == b.low && a.high == b.high;
  }
};

using FormMatrix = std::vector<std::vector<FormEntry>>;

/// 2cos(pi/m) as an exact algebraic integer: the largest root of this polynomial.
IntPoly two_cos_pi_over_polynomial(unsigned m);
/// 4cos^2(pi/m) when it is an integer (m = 2, 3, 4, 6, infinity).
std::optional<Integer> four_cos_squared(Weight w);

/// B_ii = 1, B_ij = -cos(pi/m_ij), -1 for infinity.
FormMatrix bilinear_form(const CoxeterDiagram& d, const Rational& width = default_width());
/// 2I - 2B.
FormMatrix coxeter_adjacency(const CoxeterDiagram& d, const Rational& width = default_width());

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

struct SphericalType {
  Family family = Family::A;
  std::size_t rank = 0;
  unsigned dihedral_order = 0;  // m for I2(m), otherwise 0
  std::vector<unsigned> exponents;
  std::vector<std::size_t> vertices;  // indices in the input diagram

  [[nodiscard]] std::string name() const;
};

/// Spherical components, or nullopt if the group is infinite.
std::optional<std::vector<SphericalType>> finite_type_recognize(const CoxeterDiagram& d);

enum class Domination { less, greater, isomorphic, incomparable };
const char* to_string(Domination r);

/// Exists an injection i with m_st <= m'_{i(s) i(t)}.
bool dominated_by(const CoxeterDiagram& d, const CoxeterDiagram& other);
/// Ranks up to 12.
Domination dominates(const CoxeterDiagram& d, const CoxeterDiagram& other);

}  // namespace coxgrowth
