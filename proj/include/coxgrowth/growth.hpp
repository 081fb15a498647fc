#pragma once

// Growth series of Coxeter systems and the polygon case.

#include "coxgrowth/diagram.hpp"
#include "coxgrowth/exactpoly.hpp"

#include <string>
#include <vector>

namespace coxgrowth {

/// Quotient of integer polynomials kept in lowest terms: coprime, joint
/// content 1, denominator with positive leading coefficient.
class RationalFunction {
public:
  RationalFunction() : num_{0}, den_{1} {}
  RationalFunction(IntPoly num, IntPoly den);
  RationalFunction(const IntPoly& p) : RationalFunction(p, IntPoly{1}) {}  // NOLINT: implicit lift

  [[nodiscard]] const IntPoly& numerator() const noexcept { return num_; }
  [[nodiscard]] const IntPoly& denominator() const noexcept { return den_; }
  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

  /// f(1/t).
  [[nodiscard]] RationalFunction inverted_argument() const;
  [[nodiscard]] Rational evaluate(const Rational& x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  IntPoly num_;
  IntPoly den_;
};

using GrowthFunction = RationalFunction;

/// Certifies f > 0 on (0, 1]: neither numerator nor denominator vanishes
/// there and their signs agree at 1.
bool positive_on_unit_interval(const RationalFunction& f);

/// prod [n_i + 1] over all exponents.
IntPoly solomon_poly(const std::vector<SphericalType>& types);

/// Growth function from Steinberg's formula; rank at most 20.
GrowthFunction steinberg_growth(const CoxeterDiagram& d);

/// [2] prod [p_i] - k prod [p_i] + sum_i prod_{j != i} [p_j].
IntPoly polygon_delta(const std::vector<unsigned>& angles);
/// [2] prod [p_i] / Delta, for hyperbolic parameters only.
GrowthFunction polygon_growth(const std::vector<unsigned>& angles);

class NotExponentialGrowth : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Inverse radius of convergence; the interval certifies a root of the
/// reversed denominator.
RootInterval growth_rate(const GrowthFunction& f, const Rational& width = default_width());

/// a_0 .. a_{count-1}.
std::vector<Integer> series_coefficients(const GrowthFunction& f, std::size_t count);

/// f(1/t) = (-1)^dimension f(t).
bool reciprocity_check(const GrowthFunction& f, unsigned dimension);

struct MonotonicityResult {
  bool pass = false;
  RootInterval smaller;
  RootInterval larger;
};

/// Requires dominates(d, d') == less; certifies tau(d) < tau(d').
MonotonicityResult monotonicity_check(const CoxeterDiagram& d, const CoxeterDiagram& other,
                                      const Rational& width = default_width());

struct ChainLink {
  std::string symbol;
  RootInterval rate;
  Domination versus_next = Domination::incomparable;  // last link: incomparable
};

struct ChainReport {
  std::vector<ChainLink> links;
  bool pass = false;  // every rate certified strictly below the next one
};

/// Growth rates of the given Coxeter symbols in order.
ChainReport verify_growth_chain(const std::vector<std::string>& symbols, const Rational& width = default_width());

/// All nondecreasing tuples 2 <= p_1 <= ... <= p_k <= p_max with 3 <= k <= k_max
/// that describe compact hyperbolic polygons.
std::vector<std::vector<unsigned>> hyperbolic_polygons(std::size_t k_max, unsigned p_max);

/// h_k = [k-1]/[k].
RationalFunction help_function(unsigned k);

struct SignCertificate {
  std::string name;
  RationalFunction difference;  // bound minus the [3,8] help sum
  bool pass = false;
};

struct PolygonComparison {
  std::vector<unsigned> angles;
  RootInterval rate;
  int versus_minimum = 0;  // compare_roots against tau_[3,8]
};

struct SecondMinimalReport {
  std::size_t k_max = 0;
  unsigned p_max = 0;
  RootInterval tau_38;
  IntPoly f_poly;
  std::size_t f_roots_in_unit_interval = 0;
  std::vector<PolygonComparison> triangles;
  std::vector<PolygonComparison> quadrilaterals;
  std::vector<PolygonComparison> larger;  // five or more vertices
  std::vector<SignCertificate> certificates;
  bool pass = false;
};

/// Bounds at least k_max = 5, p_max = 9.
SecondMinimalReport verify_second_minimal_polygon(std::size_t k_max, unsigned p_max,
                                                  const Rational& width = default_width(), std::size_t threads = 0);

}  // namespace coxgrowth
