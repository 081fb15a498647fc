#include "coxgrowth/growth.hpp"

#include "coxgrowth/parallel.hpp"

#include <map>

namespace coxgrowth {

RationalFunction::RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  const IntPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  Integer c;
  const Integer cn = content(num_);
  const Integer cd = content(den_);
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c != 1) {
    std::vector<Integer> a = num_.coeffs();
    std::vector<Integer> b = den_.coeffs();
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : b) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    num_ = IntPoly(std::move(a));
    den_ = IntPoly(std::move(b));
  }
  if (sgn(den_.leading()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::inverted_argument() const {
  if (num_.is_zero()) return *this;
  const int dn = num_.degree();
  const int dd = den_.degree();
  IntPoly n = num_.reversed();
  IntPoly d = den_.reversed();
  if (dd >= dn) n *= IntPoly::monomial(static_cast<std::size_t>(dd - dn));
  else d *= IntPoly::monomial(static_cast<std::size_t>(dn - dd));
  return {n, d};
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool positive_on_unit_interval(const RationalFunction& f) {
  const IntPoly& n = f.numerator();
  const IntPoly& d = f.denominator();
  if (n.is_zero()) return false;
  if (n.degree() > 0 && sturm_count(n, Rational(0), Rational(1)) != 0) return false;
  if (d.degree() > 0 && sturm_count(d, Rational(0), Rational(1)) != 0) return false;
  return n.sign_at(Rational(1)) * d.sign_at(Rational(1)) > 0;
}

// ---------------------------------------------------------------------------

IntPoly solomon_poly(const std::vector<SphericalType>& types) {
  IntPoly p{1};
  for (const auto& t : types)
    for (unsigned e : t.exponents) p *= bracket(e + 1);
  return p;
}

namespace {

using CycloMultiset = std::map<unsigned, unsigned>;

/// [k] = prod over d | k, d > 1 of Phi_d.
void add_bracket_factors(CycloMultiset& m, unsigned k) {
  for (unsigned d = 2; d <= k; ++d)
    if (k % d == 0) ++m[d];
}

IntPoly cyclo_product(const CycloMultiset& m) {
  IntPoly p{1};
  for (auto [d, mult] : m) p *= pow(cyclotomic(d), mult);
  return p;
}

}  // namespace

GrowthFunction steinberg_growth(const CoxeterDiagram& d) {
  const std::size_t n = d.rank();
  if (n > 20) throw std::invalid_argument("steinberg_growth: rank above 20 is not supported");
  const std::size_t subsets = std::size_t{1} << n;

  // Finite parabolic subgroups, grouped by exponent multiset with signed counts.
  std::vector<bool> finite(subsets, false);
  std::map<std::vector<unsigned>, long> terms;
  finite[0] = true;
  terms[{}] = 1;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    bool candidate = true;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n && candidate; ++i) {
      if (!(mask >> i & 1U)) continue;
      members.push_back(i);
      if (!finite[mask ^ (std::size_t{1} << i)]) candidate = false;
    }
    if (!candidate) continue;
    auto types = finite_type_recognize(d.induced(members));
    if (!types) continue;
    finite[mask] = true;
    std::vector<unsigned> exps;
    for (const auto& t : *types) exps.insert(exps.end(), t.exponents.begin(), t.exponents.end());
    std::sort(exps.begin(), exps.end());
    terms[exps] += members.size() % 2 == 0 ? 1 : -1;
  }

  CycloMultiset lcm;
  std::vector<std::tuple<CycloMultiset, unsigned, long>> parts;
  for (const auto& [exps, count] : terms) {
    if (count == 0) continue;
    CycloMultiset m;
    unsigned degree = 0;
    for (unsigned e : exps) {
      add_bracket_factors(m, e + 1);
      degree += e;
    }
    for (auto [dd, mult] : m) lcm[dd] = std::max(lcm[dd], mult);
    parts.emplace_back(std::move(m), degree, count);
  }

  // 1/f(t) = sum (-1)^|T| t^deg(f_T) / f_T(t) = N / L.
  IntPoly numer;
  for (const auto& [m, degree, count] : parts) {
    CycloMultiset cofactor;
    for (auto [dd, mult] : lcm) {
      auto it = m.find(dd);
      const unsigned have = it == m.end() ? 0 : it->second;
      if (mult > have) cofactor[dd] = mult - have;
    }
    numer += IntPoly::monomial(degree, Integer(count)) * cyclo_product(cofactor);
  }
  return {cyclo_product(lcm), numer};
}

IntPoly polygon_delta(const std::vector<unsigned>& angles) {
  if (angles.empty()) throw std::invalid_argument("polygon_delta needs at least one parameter");
  for (unsigned p : angles)
    if (p < 2) throw std::invalid_argument("polygon_delta parameters must be >= 2");
  const std::size_t k = angles.size();
  // Prefix and suffix products give every prod_{j != i} in linear time.
  std::vector<IntPoly> prefix(k + 1, IntPoly{1});
  std::vector<IntPoly> suffix(k + 1, IntPoly{1});
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * bracket(angles[i]);
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * bracket(angles[i]);
  const IntPoly& all = prefix[k];
  IntPoly delta = bracket(2) * all - all * Integer(static_cast<unsigned long>(k));
  for (std::size_t i = 0; i < k; ++i) delta += prefix[i] * suffix[i + 1];
  return delta;
}

GrowthFunction polygon_growth(const std::vector<unsigned>& angles) {
  if (angles.size() < 3 || !polygon_is_hyperbolic(angles))
    throw std::invalid_argument("polygon_growth: parameters do not describe a compact hyperbolic polygon");
  IntPoly num = bracket(2);
  for (unsigned p : angles) num *= bracket(p);
  return {num, polygon_delta(angles)};
}

RootInterval growth_rate(const GrowthFunction& f, const Rational& width) {
  const IntPoly& den = f.denominator();
  auto radius = isolate_smallest_root_in(den, Rational(0), Rational(1), Rational(1, 1024));
  if (!radius || (radius->is_exact() && radius->low == 1))
    throw NotExponentialGrowth("not exponential growth: denominator has no root in (0,1)");
  RootInterval tau = isolate_largest_real_root(den.reversed(), width);
  if (tau.low * radius->low <= 1 && tau.high * radius->high >= 1) return tau;
  // Pairing failed: invert the enclosure of R directly.
  RootInterval r = *radius;
  while (r.is_exact() ? false : 1 / r.low - 1 / r.high > width) r = refine(r, r.width() / 2);
  RootInterval inverted;
  inverted.poly = square_free_part(den.reversed());
  inverted.low = 1 / r.high;
  inverted.high = 1 / r.low;
  inverted.simple = r.simple;
  return inverted;
}

std::vector<Integer> series_coefficients(const GrowthFunction& f, std::size_t count) {
  const auto& n = f.numerator();
  const auto& d = f.denominator();
  const Integer d0 = d.constant_term();
  if (sgn(d0) == 0) throw std::domain_error("series_coefficients: pole at 0");
  std::vector<Integer> a(count);
  for (std::size_t k = 0; k < count; ++k) {
    Integer acc = n.coeff(k);
    for (std::size_t i = 1; i <= k && i < d.coeffs().size(); ++i) acc -= d.coeffs()[i] * a[k - i];
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
      throw std::domain_error("series_coefficients: coefficients are not integral");
    mpz_divexact(a[k].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return a;
}

bool reciprocity_check(const GrowthFunction& f, unsigned dimension) {
  const RationalFunction g = f.inverted_argument();
  return dimension % 2 == 0 ? g == f : g == -f;
}

MonotonicityResult monotonicity_check(const CoxeterDiagram& d, const CoxeterDiagram& other, const Rational& width) {
  if (dominates(d, other) != Domination::less)
    throw std::invalid_argument("monotonicity_check: first system is not strictly dominated by the second");
  MonotonicityResult r;
  r.smaller = growth_rate(steinberg_growth(d), width);
  r.larger = growth_rate(steinberg_growth(other), width);
  r.pass = compare_roots(r.smaller, r.larger, pow2(-200)) < 0;
  return r;
}

ChainReport verify_growth_chain(const std::vector<std::string>& symbols, const Rational& width) {
  ChainReport r;
  std::vector<CoxeterDiagram> diagrams;
  for (const auto& s : symbols) {
    diagrams.push_back(parse_coxeter_symbol(s));
    r.links.push_back({s, growth_rate(steinberg_growth(diagrams.back()), width), Domination::incomparable});
  }
  r.pass = !r.links.empty();
  for (std::size_t i = 0; i + 1 < r.links.size(); ++i) {
    r.links[i].versus_next = dominates(diagrams[i], diagrams[i + 1]);
    RootInterval a = r.links[i].rate;
    RootInterval b = r.links[i + 1].rate;
    r.pass = r.pass && compare_roots(a, b, pow2(-200)) < 0;
  }
  return r;
}

std::vector<std::vector<unsigned>> hyperbolic_polygons(std::size_t k_max, unsigned p_max) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned lo) -> void {
    if (cur.size() >= 3 && polygon_is_hyperbolic(cur)) out.push_back(cur);
    if (cur.size() == k_max) return;
    for (unsigned p = lo; p <= p_max; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

RationalFunction help_function(unsigned k) {
  if (k < 2) throw std::invalid_argument("help_function needs k >= 2");
  return {bracket(k - 1), bracket(k)};
}

SecondMinimalReport verify_second_minimal_polygon(std::size_t k_max, unsigned p_max, const Rational& width,
                                                  std::size_t threads) {
  if (k_max < 5 || p_max < 9) throw std::invalid_argument("verify_second_minimal_polygon needs k_max >= 5 and p_max >= 9");
  SecondMinimalReport rep;
  rep.k_max = k_max;
  rep.p_max = p_max;
  rep.tau_38 = growth_rate(steinberg_growth(parse_coxeter_symbol("[3,8]")), width);
  rep.f_poly = parse_poly("1,1,0,-1,-1,-1,0,1,1");
  rep.f_roots_in_unit_interval = sturm_count(rep.f_poly, Rational(0), Rational(1));
  bool ok = rep.f_roots_in_unit_interval == 0;

  const auto polygons = hyperbolic_polygons(k_max, p_max);
  const RootInterval tau38 = rep.tau_38;
  auto rows = parallel_map(
      polygons.size(),
      [&](std::size_t i) {
        PolygonComparison c;
        c.angles = polygons[i];
        c.rate = growth_rate(polygon_growth(c.angles), width);
        RootInterval ref = tau38;
        c.versus_minimum = compare_roots(c.rate, ref, pow2(-120));
        return c;
      },
      threads);
  const std::vector<unsigned> t237{2, 3, 7}, t238{2, 3, 8};
  for (auto& c : rows) {
    int expected = 1;
    if (c.angles == t237) expected = -1;
    if (c.angles == t238) expected = 0;
    if (c.versus_minimum != expected) ok = false;
    if (c.angles.size() == 3) rep.triangles.push_back(std::move(c));
    else if (c.angles.size() == 4) rep.quadrilaterals.push_back(std::move(c));
    else rep.larger.push_back(std::move(c));
  }

  // Help-function bounds for the unbounded families.
  const RationalFunction h38 = help_function(2) + help_function(3) + help_function(8);
  const unsigned l_max = std::max(64U, p_max);
  auto certify = [&](std::string name, RationalFunction diff, bool extra) {
    SignCertificate s{std::move(name), diff, extra && positive_on_unit_interval(diff)};
    ok = ok && s.pass;
    rep.certificates.push_back(std::move(s));
  };

  bool increasing = true;
  bool bounded = true;
  for (unsigned k = 2; k < l_max; ++k) {
    increasing = increasing && positive_on_unit_interval(help_function(k + 1) - help_function(k));
    bounded = bounded && positive_on_unit_interval(RationalFunction(IntPoly{2}, bracket(2)) - help_function(k));
  }
  certify("help functions increase in k (k < " + std::to_string(l_max) + ")", help_function(3) - help_function(2),
          increasing);
  certify("2/[2] exceeds every help function (k <= " + std::to_string(l_max) + ")",
          RationalFunction(IntPoly{2}, bracket(2)) - help_function(l_max), bounded);

  bool identity = true;
  bool positive = true;
  for (unsigned l = 8; l <= l_max; ++l) {
    const RationalFunction hl = help_function(2) + help_function(3) + help_function(l + 1);
    identity = identity && bracket(8) * bracket(l) - bracket(7) * bracket(l + 1) ==
                               IntPoly::monomial(7) * (l == 7 ? IntPoly{} : bracket(l - 7));
    positive = positive && positive_on_unit_interval(hl - h38);
  }
  certify("triangles with angles pi/2, pi/3: H_l > H_[3,8] for 8 <= l <= " + std::to_string(l_max),
          help_function(2) + help_function(3) + help_function(9) - h38, identity && positive);

  const RationalFunction h4 = help_function(2) + help_function(4) + help_function(5);
  const RationalFunction closed_form(IntPoly::monomial(2) * rep.f_poly,
                                     bracket(2) * bracket(3) * bracket(5) * IntPoly{1, 0, 1} * IntPoly{1, 0, 0, 0, 1});
  certify("right-angled triangles without pi/3: H_4 > H_[3,8]", h4 - h38, h4 - h38 == closed_form);
  certify("quadrilaterals: 3/[2] + [2]/[3] > H_[3,8]",
          RationalFunction(IntPoly{3}, bracket(2)) + help_function(3) - h38, true);
  certify("five or more vertices: 5/[2] > H_[3,8]", RationalFunction(IntPoly{5}, bracket(2)) - h38, true);

  rep.pass = ok;
  return rep;
}

}  // namespace coxgrowth
