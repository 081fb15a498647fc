#include "coxgrowth/exactpoly.hpp"

#include <map>
#include <mutex>

namespace coxgrowth {

IntPoly palindromic_reduce(const IntPoly& p) {
  if (reciprocity_type(p) != Reciprocity::reciprocal)
    throw std::invalid_argument("palindromic_reduce: polynomial is not reciprocal");
  if (p.degree() % 2 != 0) throw std::invalid_argument("palindromic_reduce: odd degree");
  const std::size_t d = static_cast<std::size_t>(p.degree()) / 2;
  // t^-k + t^k = V_k(t + 1/t), V_0 = 2, V_1 = x, V_k = x V_{k-1} - V_{k-2}.
  const IntPoly x = IntPoly::monomial(1);
  IntPoly prev{2};
  IntPoly cur = x;
  IntPoly q = IntPoly::constant(p.coeff(d));
  for (std::size_t k = 1; k <= d; ++k) {
    q += cur * p.coeff(d + k);
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

namespace {

/// Removes every factor (t - root) for root = +-1; returns the multiplicity.
unsigned strip_linear(IntPoly& p, long root) {
  const IntPoly factor{-root, 1};
  unsigned m = 0;
  while (!p.is_zero() && p.sign_at(Rational(root)) == 0) {
    p = exact_divide(p, factor);
    ++m;
  }
  return m;
}

}  // namespace

std::size_t unit_circle_root_count(const IntPoly& p) {
  if (reciprocity_type(p) != Reciprocity::reciprocal)
    throw std::invalid_argument("unit_circle_root_count: polynomial is not reciprocal");
  IntPoly s = square_free_part(p);
  std::size_t count = 0;
  count += strip_linear(s, 1);
  count += strip_linear(s, -1);
  if (s.degree() <= 0) return count;
  s = normalize_primitive(s);
  IntPoly q = palindromic_reduce(s);
  return count + 2 * sturm_count(q, Rational(-2), Rational(2));
}

unsigned euler_phi(unsigned n) {
  if (n == 0) return 0;
  unsigned result = n;
  unsigned m = n;
  for (unsigned f = 2; f * f <= m; ++f) {
    if (m % f) continue;
    while (m % f == 0) m /= f;
    result -= result / f;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    n /= f;
    if (n % f == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntPoly x_pow_minus_one(unsigned d) { return IntPoly::monomial(d) - IntPoly{1}; }

}  // namespace

IntPoly cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly num{1};
  IntPoly den{1};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int m = moebius(n / d);
    if (m == 1) num *= x_pow_minus_one(d);
    else if (m == -1) den *= x_pow_minus_one(d);
  }
  IntPoly phi = exact_divide(num, den);
  std::lock_guard lock(mu);
  cache.emplace(n, phi);
  return phi;
}

IntPoly CyclotomicSplit::reassemble() const {
  IntPoly p = core;
  for (const auto& f : factors) p *= pow(cyclotomic(f.index), f.multiplicity);
  return p;
}

CyclotomicSplit strip_cyclotomic(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("strip_cyclotomic: zero polynomial");
  CyclotomicSplit out;
  out.core = p;
  // phi(n) >= sqrt(n / 2), so indices beyond 2 deg^2 cannot divide.
  const unsigned deg = static_cast<unsigned>(std::max(p.degree(), 0));
  const unsigned limit = 2 * deg * deg + 2;
  for (unsigned n = 1; n <= limit && out.core.degree() > 0; ++n) {
    if (euler_phi(n) > static_cast<unsigned>(out.core.degree())) continue;
    const IntPoly phi = cyclotomic(n);
    unsigned m = 0;
    while (out.core.degree() >= phi.degree()) {
      auto q = try_divide(out.core, phi);
      if (!q) break;
      out.core = std::move(*q);
      ++m;
    }
    if (m) out.factors.push_back({n, m});
  }
  return out;
}

namespace {

/// Signed remainder sequence of (a, b).
std::vector<IntPoly> signed_remainders(const IntPoly& a, const IntPoly& b) {
  std::vector<IntPoly> seq{a, b};
  while (!seq.back().is_zero()) {
    const IntPoly& x = seq[seq.size() - 2];
    const IntPoly& y = seq.back();
    if (y.degree() == 0) break;
    IntPoly r = pseudo_divmod(x, y).second;
    if (r.is_zero()) break;
    const int k = x.degree() - y.degree() + 1;
    bool negate = !(sgn(y.leading()) < 0 && k % 2 == 1);
    r = primitive_part(r);
    seq.push_back(negate ? -r : r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

long variations_at_infinity(const std::vector<IntPoly>& seq, bool negative) {
  long changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at_infinity(negative);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Cauchy index of num/den over the whole real line.
long cauchy_index(const IntPoly& num, const IntPoly& den) {
  if (num.is_zero() || den.is_zero()) return 0;
  auto seq = signed_remainders(den, num);
  return variations_at_infinity(seq, true) - variations_at_infinity(seq, false);
}

/// Roots of h strictly inside the unit disk, for h with no roots on |t| = 1.
std::size_t inside_count_off_circle(const IntPoly& h) {
  const int n = h.degree();
  if (n <= 0) return 0;
  // Cayley transform t = (1 + w) / (1 - w) maps |t| < 1 onto Re w < 0.
  const IntPoly one_plus{1, 1};
  const IntPoly one_minus{1, -1};
  std::vector<IntPoly> plus_pows{IntPoly{1}};
  std::vector<IntPoly> minus_pows{IntPoly{1}};
  for (int i = 1; i <= n; ++i) {
    plus_pows.push_back(plus_pows.back() * one_plus);
    minus_pows.push_back(minus_pows.back() * one_minus);
  }
  IntPoly q;
  for (int i = 0; i <= n; ++i) {
    const Integer& c = h.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    q += plus_pows[static_cast<std::size_t>(i)] * minus_pows[static_cast<std::size_t>(n - i)] * c;
  }
  const int m = q.degree();
  // q(iy) = A(y) + i B(y).
  std::vector<Integer> a(static_cast<std::size_t>(m) + 1);
  std::vector<Integer> b(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    const Integer& c = q.coeffs()[static_cast<std::size_t>(k)];
    const bool neg = (k / 2) % 2 == 1;
    if (k % 2 == 0) a[static_cast<std::size_t>(k)] = neg ? Integer(-c) : c;
    else b[static_cast<std::size_t>(k)] = neg ? Integer(-c) : c;
  }
  const IntPoly ap(std::move(a));
  const IntPoly bp(std::move(b));
  const long diff = (m % 2 == 0) ? -cauchy_index(bp, ap) : cauchy_index(ap, bp);
  const long left = (m + diff) / 2;
  return static_cast<std::size_t>(left);
}

}  // namespace

DiskCounts disk_counts(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("disk_counts: zero polynomial");
  DiskCounts dc;
  IntPoly f = p;
  while (!f.is_zero() && sgn(f.constant_term()) == 0) {
    std::vector<Integer> shifted(f.coeffs().begin() + 1, f.coeffs().end());
    f = IntPoly(std::move(shifted));
    ++dc.inside;
  }
  if (f.degree() <= 0) return dc;

  // g collects the roots closed under t -> 1/t, which includes the whole circle.
  const IntPoly g = gcd(f, f.reversed());
  const IntPoly h = exact_divide(f, g);

  IntPoly gr = g;
  dc.on += strip_linear(gr, 1);
  dc.on += strip_linear(gr, -1);
  if (gr.degree() > 0) {
    gr = normalize_primitive(gr);
    const IntPoly q = palindromic_reduce(gr);
    std::size_t circle = 0;
    for (const auto& [factor, mult] : square_free_decomposition(q))
      circle += 2 * mult * sturm_count(factor, Rational(-2), Rational(2));
    dc.on += circle;
    const std::size_t rest = static_cast<std::size_t>(gr.degree()) - circle;
    dc.inside += rest / 2;
    dc.outside += rest / 2;
  }

  const std::size_t h_inside = inside_count_off_circle(h);
  dc.inside += h_inside;
  dc.outside += static_cast<std::size_t>(std::max(h.degree(), 0)) - h_inside;
  return dc;
}

DiskCounts disk_counts(const IntPoly& p, const Rational& radius) {
  if (radius <= 0) throw std::invalid_argument("disk_counts: radius must be positive");
  if (radius == 1) return disk_counts(p);
  const Integer& a = radius.get_num();
  const Integer& b = radius.get_den();
  const int n = p.degree();
  std::vector<Integer> c(static_cast<std::size_t>(std::max(n, 0)) + 1);
  Integer apow = 1;
  for (int i = 0; i <= n; ++i) {
    Integer bpow;
    mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n - i));
    c[static_cast<std::size_t>(i)] = p.coeffs()[static_cast<std::size_t>(i)] * apow * bpow;
    apow *= a;
  }
  return disk_counts(IntPoly(std::move(c)));
}

std::vector<std::string> NumberClass::labels() const {
  std::vector<std::string> out;
  if (salem) out.emplace_back("salem");
  if (two_salem) out.emplace_back("two_salem");
  if (perron) out.emplace_back("perron");
  if (cyclotomic) out.emplace_back("cyclotomic");
  return out;
}

NumberClass classify(const IntPoly& p) {
  if (p.is_zero() || sgn(p.constant_term()) == 0)
    throw std::domain_error("classify: polynomial has zero constant term");
  NumberClass nc;
  const DiskCounts total = disk_counts(p);
  nc.roots_inside = total.inside;
  nc.roots_on_unit_circle = total.on;
  nc.roots_outside_unit_disk = total.outside;

  const CyclotomicSplit split = strip_cyclotomic(p);
  if (split.core.degree() <= 0) {
    nc.cyclotomic = true;
    return nc;
  }
  const IntPoly& core = split.core;
  const DiskCounts cc = disk_counts(core);

  if (SturmSequence(core).count_above(Rational(1)) > 0)
    nc.largest_real_root = isolate_largest_real_root(core, default_width());

  const bool monic = abs(core.leading()) == 1;
  const bool real_outside = nc.largest_real_root.has_value();
  // A monic integer polynomial with one root outside the disk, a root on the
  // circle and no cyclotomic factor is irreducible (Kronecker).
  if (monic && real_outside && cc.outside == 1 && cc.on >= 1) nc.salem = true;
  if (monic && real_outside && cc.outside == 2 && cc.on >= 1) {
    nc.two_salem = true;
    nc.irreducibility_certified = false;
  }

  if (monic && real_outside && nc.largest_real_root->simple) {
    RootInterval rho = *nc.largest_real_root;
    for (int step = 0; step < 24; ++step) {
      const Rational radius = rho.is_exact() ? Rational(rho.low - pow2(-8 * (step + 1))) : rho.low;
      if (disk_counts(core, radius).outside == 1) {
        nc.perron = true;
        break;
      }
      if (!rho.is_exact()) rho = refine(rho, rho.width() / 256);
    }
  }
  return nc;
}

IntPoly resultant_eliminate(const IntPoly& p) {
  if (p.is_zero() || sgn(p.constant_term()) == 0)
    throw std::domain_error("resultant_eliminate: polynomial has zero constant term");
  // lambda^k = U_k(s) lambda + V_k(s) modulo lambda^2 - s lambda + 1.
  const IntPoly s = IntPoly::monomial(1);
  IntPoly u;
  IntPoly v{1};
  IntPoly a;
  IntPoly b;
  for (const auto& c : p.coeffs()) {
    a += v * c;
    b += u * c;
    IntPoly nu = s * u + v;
    v = -u;
    u = std::move(nu);
  }
  const IntPoly rs = a * a + s * a * b + b * b;
  // s = alpha^2 - 2.
  const IntPoly sub{-2, 0, 1};
  IntPoly r;
  IntPoly power{1};
  for (const auto& c : rs.coeffs()) {
    r += power * c;
    power *= sub;
  }
  if (!r.is_zero() && sgn(r.leading()) < 0) r = -r;
  return r;
}

IntPoly alpha_polynomial(const IntPoly& p) { return square_free_part(resultant_eliminate(p)); }

}  // namespace coxgrowth
