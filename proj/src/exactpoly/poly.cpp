#include "coxgrowth/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coxgrowth {

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::negated_argument() const {
  std::vector<Integer> r = coeffs_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  // d^n p(n/d) = sum c_i n^i d^(n-i); d > 0 so the sign is unchanged.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back();
  Integer dpow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    dpow *= den;
    acc *= num;
    acc += coeffs_[i] * dpow;
  }
  return sgn(acc);
}

int IntPoly::sign_at_infinity(bool negative) const {
  if (coeffs_.empty()) return 0;
  int s = sgn(coeffs_.back());
  if (negative && degree() % 2 == 1) s = -s;
  return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

bool operator==(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

std::string IntPoly::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

std::string IntPoly::pretty(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPoly parse_poly(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == n) throw ParseError("empty polynomial", i);
  while (true) {
    skip_ws();
    std::string digits;
    const std::size_t start = i;
    if (i < n && text[i] == '+') throw ParseError("leading '+' is not allowed", i);
    if (i < n && text[i] == '-') digits += text[i++];
    skip_ws();
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    if (digits.empty() || digits == "-") throw ParseError("expected an integer coefficient", start);
    coeffs.emplace_back(digits, 10);
    skip_ws();
    if (i == n) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result{1};
  IntPoly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

IntPoly bracket(unsigned k) {
  if (k == 0) throw std::invalid_argument("bracket: k must be >= 1");
  return IntPoly(std::vector<Integer>(k, Integer(1)));
}

std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> q(rem.size() - db);
  Integer quo;
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(quo.get_mpz_t(), top.get_mpz_t(), bc.back().get_mpz_t());
    q[k] = quo;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= quo * bc[j];
  }
  for (std::size_t j = 0; j < db; ++j)
    if (sgn(rem[j]) != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisibleError("exact_divide: (" + b.pretty() + ") does not divide (" + a.pretty() + ")");
  return *q;
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by the zero polynomial");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  const int db = b.degree();
  const Integer& lc = b.leading();
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(r.size() - static_cast<std::size_t>(db));
  // Classic pseudo-division: each step multiplies everything by lc(b).
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const Integer top = r[static_cast<std::size_t>(k + db)];
    for (auto& x : q) x *= lc;
    for (auto& x : r) x *= lc;
    q[static_cast<std::size_t>(k)] += top;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (g == 1) return p;
  std::vector<Integer> v = p.coeffs();
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly normalize_primitive(const IntPoly& p) {
  IntPoly q = primitive_part(p);
  if (!q.is_zero() && sgn(q.leading()) < 0) q = -q;
  return q;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = normalize_primitive(a);
  IntPoly y = normalize_primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_divmod(x, y).second;
    x = std::move(y);
    y = normalize_primitive(r);
  }
  return x;
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.degree() <= 0) return normalize_primitive(p);
  IntPoly g = gcd(p, p.derivative());
  return normalize_primitive(exact_divide(normalize_primitive(p), g));
}

std::vector<std::pair<IntPoly, unsigned>> square_free_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly f = normalize_primitive(p);
  if (f.degree() <= 0) return out;
  IntPoly fp = f.derivative();
  IntPoly a = gcd(f, fp);
  IntPoly b = exact_divide(f, a);
  IntPoly c = exact_divide(primitive_part(fp) * content(fp), a);
  IntPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    IntPoly nb = exact_divide(b, a);
    c = exact_divide(d, a);
    b = normalize_primitive(nb);
    // Keep c consistent with the sign change applied to b.
    if (!(b == nb)) c = -c;
    d = c - b.derivative();
  }
  return out;
}

Reciprocity reciprocity_type(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("reciprocity_type: zero polynomial");
  IntPoly r = p.reversed();
  // A root at 0 shortens the reversal; such p is never (anti-)reciprocal.
  if (r.degree() != p.degree()) return Reciprocity::neither;
  if (r == p) return Reciprocity::reciprocal;
  if (r == -p) return Reciprocity::anti_reciprocal;
  return Reciprocity::neither;
}

const char* to_string(Reciprocity r) {
  switch (r) {
    case Reciprocity::reciprocal: return "reciprocal";
    case Reciprocity::anti_reciprocal: return "anti_reciprocal";
    case Reciprocity::neither: return "neither";
  }
  return "neither";
}

IntPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly{1};
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  int sign = 1;
  IntPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = IntPoly{};
    }
    prev = m[k][k];
  }
  IntPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace coxgrowth
