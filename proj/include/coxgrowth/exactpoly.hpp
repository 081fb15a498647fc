#pragma once

// Exact univariate polynomial arithmetic over the integers, real-root
// isolation with Sturm chains, and the unit-circle machinery used to
// classify Salem, 2-Salem and Perron numbers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxgrowth {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised by exact_divide when the divisor does not divide the dividend in Z[t].
class NotDivisibleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised by the text parsers; carries the 0-based character offset.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Dense polynomial with integer coefficients in ascending degree order.
/// The stored sequence never has a zero leading entry; the zero polynomial
/// is the empty sequence.
class IntPoly {
public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> ascending);
  explicit IntPoly(std::vector<Integer> ascending);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(std::size_t degree, const Integer& c = 1);

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] Integer coeff(std::size_t i) const;
  [[nodiscard]] const Integer& leading() const;
  [[nodiscard]] Integer constant_term() const { return coeff(0); }
  [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  [[nodiscard]] IntPoly derivative() const;
  /// t^deg * p(1/t).
  [[nodiscard]] IntPoly reversed() const;
  /// p(-t).
  [[nodiscard]] IntPoly negated_argument() const;

  [[nodiscard]] Integer evaluate(const Integer& x) const;
  [[nodiscard]] Rational evaluate(const Rational& x) const;
  /// Sign of p(x) computed without forming the rational value.
  [[nodiscard]] int sign_at(const Rational& x) const;
  /// Sign of p at +infinity (or -infinity when `negative` is set).
  [[nodiscard]] int sign_at_infinity(bool negative = false) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b);

  /// Comma-separated ascending coefficients, e.g. "1,1,0,-1".
  [[nodiscard]] std::string to_text() const;
  /// Human-readable form in descending powers of `var`.
  [[nodiscard]] std::string pretty(char var = 't') const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly parse_poly(std::string_view text);
IntPoly pow(const IntPoly& p, unsigned e);

/// [k] = 1 + t + ... + t^(k-1).
IntPoly bracket(unsigned k);

/// Long division in Z[t]; nullopt unless b divides a exactly.
std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b);
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);
/// lc(b)^(deg a - deg b + 1) * a = q*b + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b);

/// Non-negative gcd of the coefficients (0 for the zero polynomial).
Integer content(const IntPoly& p);
/// p / content(p), sign preserved.
IntPoly primitive_part(const IntPoly& p);
/// Primitive, positive leading coefficient.
IntPoly normalize_primitive(const IntPoly& p);
IntPoly gcd(const IntPoly& a, const IntPoly& b);

IntPoly square_free_part(const IntPoly& p);
/// Yun decomposition of the primitive part: p ~ prod f_i^i.
std::vector<std::pair<IntPoly, unsigned>> square_free_decomposition(const IntPoly& p);

enum class Reciprocity { reciprocal, anti_reciprocal, neither };
Reciprocity reciprocity_type(const IntPoly& p);
const char* to_string(Reciprocity r);

// ---------------------------------------------------------------------------
// Real roots

/// Sturm chain of the square-free part of a polynomial.
class SturmSequence {
public:
  explicit SturmSequence(const IntPoly& p);

  [[nodiscard]] const IntPoly& base() const noexcept { return chain_.front(); }
  [[nodiscard]] const std::vector<IntPoly>& chain() const noexcept { return chain_; }
  [[nodiscard]] std::size_t variations(const Rational& x) const;
  [[nodiscard]] std::size_t variations_at_infinity(bool negative) const;
  /// Distinct real roots in (a, b].
  [[nodiscard]] std::size_t count(const Rational& a, const Rational& b) const;
  /// Distinct real roots in (a, +infinity).
  [[nodiscard]] std::size_t count_above(const Rational& a) const;
  [[nodiscard]] std::size_t count_all() const;

private:
  std::vector<IntPoly> chain_;
};

/// Number of distinct real roots of p in (a, b].
std::size_t sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

/// Every real root of p lies in [-bound, bound].
Integer cauchy_bound(const IntPoly& p);

/// Certified enclosure of one real root. `poly` is the square-free
/// polynomial used for the certificate; it has exactly one root in
/// [low, high], and either low == high (exact rational root) or poly
/// changes sign strictly between the two endpoints.
struct RootInterval {
  IntPoly poly;
  Rational low;
  Rational high;
  bool simple = true;

  [[nodiscard]] Rational width() const { return high - low; }
  [[nodiscard]] bool is_exact() const { return low == high; }
  [[nodiscard]] bool contains(const Rational& x) const { return low <= x && x <= high; }
  [[nodiscard]] bool overlaps(const RootInterval& o) const { return low <= o.high && o.low <= high; }
  [[nodiscard]] bool strictly_below(const RootInterval& o) const { return high < o.low; }
  [[nodiscard]] double approx() const;
};

/// Bisects until width <= `width`.
RootInterval refine(RootInterval r, const Rational& width);

/// Refines both until the intervals are disjoint; returns -1, +1, or 0 when
/// they still overlap at `min_width` (equal roots, or roots closer than that).
int compare_roots(RootInterval& a, RootInterval& b, const Rational& min_width);

RootInterval isolate_largest_real_root(const IntPoly& p, const Rational& width);
/// All distinct real roots in (a, b], ascending.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p, const Rational& a, const Rational& b,
                                             const Rational& width);
/// Smallest root in (a, b], if any.
std::optional<RootInterval> isolate_smallest_root_in(const IntPoly& p, const Rational& a, const Rational& b,
                                                     const Rational& width);

/// Default isolation width 1e-9.
Rational default_width();

// ---------------------------------------------------------------------------
// Reciprocal polynomials and the unit circle

/// For reciprocal p of degree 2d, the q of degree d with p(t) = t^d q(t + 1/t).
IntPoly palindromic_reduce(const IntPoly& p);
/// Distinct roots of a reciprocal polynomial on |t| = 1.
std::size_t unit_circle_root_count(const IntPoly& p);

/// n-th cyclotomic polynomial via the Moebius product.
IntPoly cyclotomic(unsigned n);
unsigned euler_phi(unsigned n);

struct CyclotomicFactor {
  unsigned index = 0;
  unsigned multiplicity = 0;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicSplit {
  IntPoly core;
  std::vector<CyclotomicFactor> factors;  // ascending index
  [[nodiscard]] IntPoly reassemble() const;
};

CyclotomicSplit strip_cyclotomic(const IntPoly& p);

/// Root counts with multiplicity relative to the circle |t| = 1.
struct DiskCounts {
  std::size_t inside = 0;
  std::size_t on = 0;
  std::size_t outside = 0;
};

DiskCounts disk_counts(const IntPoly& p);
/// Same counts for the circle |t| = radius (radius > 0).
DiskCounts disk_counts(const IntPoly& p, const Rational& radius);

struct NumberClass {
  std::size_t roots_outside_unit_disk = 0;
  std::size_t roots_on_unit_circle = 0;
  std::size_t roots_inside = 0;
  bool salem = false;
  bool two_salem = false;
  bool perron = false;
  bool cyclotomic = false;
  /// False when a label depends on an irreducibility the code cannot prove
  /// (two_salem cores may split into two Salem factors).
  bool irreducibility_certified = true;
  std::optional<RootInterval> largest_real_root;

  [[nodiscard]] std::vector<std::string> labels() const;
};

NumberClass classify(const IntPoly& p);

/// Resultant in lambda of lambda^2 - (alpha^2 - 2) lambda + 1 and p(lambda),
/// as a polynomial in alpha (positive leading coefficient).
IntPoly resultant_eliminate(const IntPoly& p);
/// Square-free part of resultant_eliminate(p).
IntPoly alpha_polynomial(const IntPoly& p);

// ---------------------------------------------------------------------------
// Matrices over Z[t]

using PolyMatrix = std::vector<std::vector<IntPoly>>;
/// Fraction-free (Bareiss) determinant.
IntPoly determinant(PolyMatrix m);

// ---------------------------------------------------------------------------
// Rational helpers

/// Accepts "a/b", decimals ("0.001") and scientific notation ("1e-9").
Rational parse_rational(std::string_view text);
/// Decimal expansion with `digits` fractional digits; direction < 0 rounds
/// down, > 0 up, 0 to nearest.
std::string to_decimal(const Rational& x, int digits, int direction = 0);
Rational pow2(int e);

}  // namespace coxgrowth
