#include "coxgrowth/exactpoly.hpp"

#include <algorithm>
#include <cctype>

namespace coxgrowth {

namespace {

/// Next element of a signed remainder sequence: -rem(a, b), scaled by a
/// positive constant and divided by its content.
IntPoly negated_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = pseudo_divmod(a, b).second;
  const int k = a.degree() - b.degree() + 1;
  bool flip = true;
  if (sgn(b.leading()) < 0 && k % 2 == 1) flip = !flip;
  if (r.is_zero()) return r;
  r = primitive_part(r);
  return flip ? -r : r;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(square_free_part(p));
  if (chain_[0].degree() <= 0) return;
  chain_.push_back(chain_[0].derivative());
  while (chain_.back().degree() > 0) {
    IntPoly next = negated_remainder(chain_[chain_.size() - 2], chain_.back());
    if (next.is_zero()) break;
    chain_.push_back(std::move(next));
  }
}

std::size_t SturmSequence::variations(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(q.sign_at(x));
  return sign_changes(s);
}

std::size_t SturmSequence::variations_at_infinity(bool negative) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(q.sign_at_infinity(negative));
  return sign_changes(s);
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations(a) - variations(b);
}

std::size_t SturmSequence::count_above(const Rational& a) const {
  return variations(a) - variations_at_infinity(false);
}

std::size_t SturmSequence::count_all() const {
  return variations_at_infinity(true) - variations_at_infinity(false);
}

std::size_t sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
  return SturmSequence(p).count(a, b);
}

Integer cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  Integer m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer c = abs(p.coeffs()[static_cast<std::size_t>(i)]);
    if (c > m) m = c;
  }
  Integer lc = abs(p.leading());
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
  return q + 1;
}

double RootInterval::approx() const {
  Rational mid = (low + high) / 2;
  return mid.get_d();
}

Rational default_width() { return Rational(1, 1000000000); }

namespace {

void mark_exact(RootInterval& r, const Rational& x) {
  r.low = x;
  r.high = x;
}

/// Turn "exactly one root of s.base() in (lo, hi]" into a RootInterval whose
/// endpoints are not roots unless the interval is a point.
RootInterval make_interval(const SturmSequence& s, Rational lo, Rational hi) {
  RootInterval r;
  r.poly = s.base();
  if (r.poly.sign_at(hi) == 0) {
    mark_exact(r, hi);
    return r;
  }
  while (r.poly.sign_at(lo) == 0) {
    Rational mid = (lo + hi) / 2;
    if (r.poly.sign_at(mid) == 0) {
      mark_exact(r, mid);
      return r;
    }
    if (s.count(mid, hi) == 1) lo = mid;
    else hi = mid;
  }
  r.low = lo;
  r.high = hi;
  if (r.poly.degree() == 1) {
    mark_exact(r, Rational(-r.poly.coeffs()[0], r.poly.coeffs()[1]));
    return r;
  }
  // Integer roots (e.g. t = 1) are worth catching exactly.
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  for (int tries = 0; Rational(k) <= hi && tries < 64; ++k, ++tries) {
    if (r.poly.sign_at(Rational(k)) == 0) {
      mark_exact(r, Rational(k));
      return r;
    }
  }
  return r;
}

void set_simplicity(RootInterval& r, const IntPoly& original) {
  IntPoly g = gcd(original, original.derivative());
  if (g.degree() <= 0) {
    r.simple = true;
    return;
  }
  if (r.is_exact()) r.simple = g.sign_at(r.low) != 0;
  else r.simple = sturm_count(g, r.low, r.high) == 0;
}

void isolate_rec(const SturmSequence& s, const Rational& lo, const Rational& hi, std::size_t n,
                 std::vector<RootInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back(make_interval(s, lo, hi));
    return;
  }
  Rational mid = (lo + hi) / 2;
  const std::size_t left = s.count(lo, mid);
  isolate_rec(s, lo, mid, left, out);
  isolate_rec(s, mid, hi, n - left, out);
}

}  // namespace

RootInterval refine(RootInterval r, const Rational& width) {
  if (r.is_exact() || r.width() <= width) return r;
  const int s_low = r.poly.sign_at(r.low);
  while (r.width() > width) {
    Rational mid = (r.low + r.high) / 2;
    const int s = r.poly.sign_at(mid);
    if (s == 0) {
      mark_exact(r, mid);
      break;
    }
    if (s == s_low) r.low = mid;
    else r.high = mid;
  }
  return r;
}

int compare_roots(RootInterval& a, RootInterval& b, const Rational& min_width) {
  while (true) {
    if (a.strictly_below(b)) return -1;
    if (b.strictly_below(a)) return 1;
    const bool a_done = a.is_exact() || a.width() <= min_width;
    const bool b_done = b.is_exact() || b.width() <= min_width;
    if (a_done && b_done) return 0;
    if (!a_done && (b_done || a.width() >= b.width())) a = refine(a, a.width() / 2);
    else b = refine(b, b.width() / 2);
  }
}

RootInterval isolate_largest_real_root(const IntPoly& p, const Rational& width) {
  if (p.degree() < 1) throw std::domain_error("isolate_largest_real_root: polynomial has no roots");
  SturmSequence s(p);
  const Rational bound(cauchy_bound(p));
  Rational lo = -bound;
  Rational hi = bound;
  if (s.count(lo, hi) == 0) throw std::domain_error("isolate_largest_real_root: no real roots");
  while (s.count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (s.count(mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  RootInterval r = refine(make_interval(s, lo, hi), width);
  set_simplicity(r, p);
  return r;
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& p, const Rational& a, const Rational& b,
                                             const Rational& width) {
  std::vector<RootInterval> out;
  if (p.degree() < 1 || b <= a) return out;
  SturmSequence s(p);
  isolate_rec(s, a, b, s.count(a, b), out);
  for (auto& r : out) {
    r = refine(r, width);
    set_simplicity(r, p);
  }
  return out;
}

std::optional<RootInterval> isolate_smallest_root_in(const IntPoly& p, const Rational& a, const Rational& b,
                                                     const Rational& width) {
  if (p.degree() < 1 || b <= a) return std::nullopt;
  SturmSequence s(p);
  Rational lo = a;
  Rational hi = b;
  if (s.count(lo, hi) == 0) return std::nullopt;
  while (s.count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (s.count(lo, mid) >= 1) hi = mid;
    else lo = mid;
  }
  RootInterval r = refine(make_interval(s, lo, hi), width);
  set_simplicity(r, p);
  return r;
}

// ---------------------------------------------------------------------------

Rational pow2(int e) {
  Rational r = 1;
  if (e >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty number", 0);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw ParseError("malformed fraction", 0);
    r.canonicalize();
    return r;
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '-' || s[i] == '+') neg = s[i++] == '-';
  std::string digits;
  int scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_point) throw ParseError("second decimal point", i);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      any_digit = true;
      if (seen_point) --scale;
    } else {
      throw ParseError("unexpected character in number", i);
    }
  }
  if (!any_digit) throw ParseError("number has no digits", i);
  if (i < s.size()) {
    ++i;
    const std::size_t start = i;
    try {
      std::size_t used = 0;
      int e = std::stoi(s.substr(i), &used);
      if (start + used != s.size()) throw ParseError("malformed exponent", start + used);
      scale += e;
    } catch (const std::logic_error&) {
      throw ParseError("malformed exponent", start);
    }
  }
  Rational r{Integer(digits, 10)};
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale >= 0) r *= ten;
  else r /= ten;
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string to_decimal(const Rational& x, int digits, int direction) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = x * scale;
  Integer q;
  if (direction < 0) {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else if (direction > 0) {
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    Rational shifted = scaled + Rational(1, 2);
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  }
  const bool neg = sgn(q) < 0;
  std::string body = Integer(abs(q)).get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return neg ? "-" + body : body;
}

}  // namespace coxgrowth
