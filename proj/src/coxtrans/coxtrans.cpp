#include "coxgrowth/coxtrans.hpp"

#include "coxgrowth/growth.hpp"
#include "coxgrowth/parallel.hpp"
#include "leaf_recursion.hpp"

#include <algorithm>
#include <map>

namespace coxgrowth {

namespace {

Integer exact_coefficient(Weight w) {
  auto q = four_cos_squared(w);
  if (!q) throw InexactWeightError("weight " + w.to_string() + " has irrational 4cos^2(pi/m); use char_poly_interval");
  return *q;
}

void require_exact_weights(const WeightedTree& tree) {
  for (const auto& e : tree.edges()) exact_coefficient(e.weight);
}

const IntPoly one_plus_t{1, 1};
const IntPoly t_poly{0, 1};

}  // namespace

BipartiteCoxeter bipartite_coxeter_matrix(const WeightedTree& tree) {
  const std::size_t n = tree.size();
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (auto [u, w] : tree.adjacency()[v]) {
      if (colour[u] >= 0) continue;
      colour[u] = 1 - colour[v];
      stack.push_back(u);
    }
  }
  std::vector<std::size_t> first, second;
  for (std::size_t v = 0; v < n; ++v) (colour[v] == 0 ? first : second).push_back(v);
  return bipartite_coxeter_matrix(tree, std::move(first), std::move(second));
}

BipartiteCoxeter bipartite_coxeter_matrix(const WeightedTree& tree, std::vector<std::size_t> first,
                                          std::vector<std::size_t> second) {
  const std::size_t n = tree.size();
  if (first.size() + second.size() != n) throw std::invalid_argument("bipartition does not cover the tree");
  std::vector<int> side(n, -1);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i] >= n || side[first[i]] >= 0) throw std::invalid_argument("bipartition repeats a vertex");
    side[first[i]] = 0;
    pos[first[i]] = i;
  }
  for (std::size_t j = 0; j < second.size(); ++j) {
    if (second[j] >= n || side[second[j]] >= 0) throw std::invalid_argument("bipartition repeats a vertex");
    side[second[j]] = 1;
    pos[second[j]] = j;
  }

  BipartiteCoxeter b;
  b.pattern.assign(first.size(), std::vector<int>(second.size(), 0));
  b.four_cos_squared.assign(first.size(), std::vector<Integer>(second.size(), 0));
  for (const auto& e : tree.edges()) {
    if (side[e.u] == side[e.v]) throw std::invalid_argument("edge inside one side of the bipartition");
    const std::size_t r = side[e.u] == 0 ? e.u : e.v;
    const std::size_t c = side[e.u] == 0 ? e.v : e.u;
    b.pattern[pos[r]][pos[c]] = 1;
    b.four_cos_squared[pos[r]][pos[c]] = exact_coefficient(e.weight);
  }

  const std::size_t k = first.size();
  PolyMatrix m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = one_plus_t;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < second.size(); ++j) {
      if (!b.pattern[i][j]) continue;
      m[i][k + j] = IntPoly{1};
      m[k + j][i] = IntPoly::monomial(1, b.four_cos_squared[i][j]);
    }
  b.char_poly = determinant(std::move(m));
  b.first = std::move(first);
  b.second = std::move(second);
  return b;
}

// ---------------------------------------------------------------------------

namespace {

struct ExactOps {
  IntPoly one() const { return IntPoly{1}; }
  IntPoly add_vertex(const IntPoly& p) const { return p * one_plus_t; }
  IntPoly minus_edge_term(const IntPoly& a, const IntPoly& b, Weight w) const {
    return a - IntPoly::monomial(1, exact_coefficient(w)) * b;
  }
};

struct IntervalOps {
  Rational width;
  std::map<unsigned, std::pair<Rational, Rational>> cache;

  IntervalPoly one() const { return {{Rational(1)}, {Rational(1)}}; }

  IntervalPoly add_vertex(const IntervalPoly& p) const {
    IntervalPoly r{std::vector<Rational>(p.size() + 1), std::vector<Rational>(p.size() + 1)};
    for (std::size_t i = 0; i < p.size(); ++i) {
      r.low[i] += p.low[i];
      r.high[i] += p.high[i];
      r.low[i + 1] += p.low[i];
      r.high[i + 1] += p.high[i];
    }
    return r;
  }

  std::pair<Rational, Rational> coefficient(Weight w) {
    if (auto q = four_cos_squared(w)) return {Rational(*q), Rational(*q)};
    auto it = cache.find(w.value());
    if (it != cache.end()) return it->second;
    const RootInterval c = isolate_largest_real_root(two_cos_pi_over_polynomial(w.value()), width);
    std::pair<Rational, Rational> q{c.low * c.low, c.high * c.high};
    cache.emplace(w.value(), q);
    return q;
  }

  IntervalPoly minus_edge_term(const IntervalPoly& a, const IntervalPoly& b, Weight w) {
    const auto [ql, qh] = coefficient(w);
    const std::size_t size = std::max(a.size(), b.size() + 1);
    IntervalPoly r{std::vector<Rational>(size), std::vector<Rational>(size)};
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.low[i] = a.low[i];
      r.high[i] = a.high[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      // q >= 0, so q*[l, h] spans the four corner products.
      const Rational c[4] = {ql * b.low[i], ql * b.high[i], qh * b.low[i], qh * b.high[i]};
      r.low[i + 1] -= *std::max_element(c, c + 4);
      r.high[i + 1] -= *std::min_element(c, c + 4);
    }
    return r;
  }
};

}  // namespace

IntPoly char_poly_recursive(const WeightedTree& tree) {
  require_exact_weights(tree);
  return detail::LeafRecursion<IntPoly, ExactOps>(tree, ExactOps{}).run();
}

bool IntervalPoly::contains(const IntPoly& p) const {
  const std::size_t n = std::max(size(), p.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational c(p.coeff(i));
    const Rational lo = i < size() ? low[i] : Rational(0);
    const Rational hi = i < size() ? high[i] : Rational(0);
    if (c < lo || c > hi) return false;
  }
  return true;
}

IntervalPoly char_poly_interval(const WeightedTree& tree, const Rational& width) {
  return detail::LeafRecursion<IntervalPoly, IntervalOps>(tree, IntervalOps{width, {}}).run();
}

IntPoly char_poly_star(const std::vector<unsigned>& arms) {
  std::map<std::vector<unsigned>, IntPoly> memo;
  auto phi = [&](auto&& self, std::vector<unsigned> p) -> IntPoly {
    p.erase(std::remove(p.begin(), p.end(), 1U), p.end());
    std::sort(p.begin(), p.end());
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    IntPoly r;
    if (p.empty() || p.back() == 2) {
      const long k = static_cast<long>(p.size());
      r = k == 0 ? one_plus_t : pow(one_plus_t, static_cast<unsigned>(k - 1)) * IntPoly{1, -(k - 2), 1};
    } else {
      auto shorter = p;
      shorter.back() -= 1;
      auto shortest = p;
      if (p.back() >= 4) shortest.back() -= 2;
      else shortest.pop_back();
      r = one_plus_t * self(self, shorter) - t_poly * self(self, shortest);
    }
    memo.emplace(p, r);
    return r;
  };
  for (unsigned p : arms)
    if (p < 2) throw std::invalid_argument("star arms need p_i >= 2");
  return phi(phi, arms);
}

bool verify_delta_eq_phi(const std::vector<unsigned>& arms) {
  const IntPoly delta = polygon_delta(arms);
  return delta == char_poly_star(arms) && delta == char_poly_recursive(star_diagram(arms));
}

DeltaPhiSweep verify_delta_eq_phi_sweep(std::size_t k_max, unsigned p_max, std::size_t threads) {
  std::vector<std::vector<unsigned>> tuples;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned lo) -> void {
    if (!cur.empty()) tuples.push_back(cur);
    if (cur.size() == k_max) return;
    for (unsigned p = lo; p <= p_max; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  const auto ok = parallel_map(tuples.size(), [&](std::size_t i) { return verify_delta_eq_phi(tuples[i]); }, threads);
  DeltaPhiSweep s;
  s.checked = tuples.size();
  for (std::size_t i = 0; i < tuples.size(); ++i)
    if (!ok[i]) s.failures.push_back(tuples[i]);
  return s;
}

RootInterval spectral_radius_coxeter(const WeightedTree& tree, const Rational& width) {
  const IntPoly phi = char_poly_recursive(tree);
  if (SturmSequence(phi).count_above(Rational(1)) == 0) return RootInterval{IntPoly{-1, 1}, 1, 1, true};
  return isolate_largest_real_root(phi, width);
}

// ---------------------------------------------------------------------------

namespace {

Rational sqrt_bound(const Rational& x, unsigned bits, bool up) {
  Integer scaled;
  const Rational s = x * Rational(Integer(1) << (2 * bits));
  if (up) mpz_cdiv_q(scaled.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  else mpz_fdiv_q(scaled.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  if (up && r * r < scaled) r += 1;
  return Rational(r, Integer(1) << bits);
}

}  // namespace

RootInterval alpha_from_lambda(const RootInterval& lambda, const Rational& width) {
  if (sgn(lambda.low) <= 0) throw std::domain_error("alpha_from_lambda needs a positive lambda");
  const IntPoly alpha_poly = alpha_polynomial(lambda.poly);
  RootInterval lam = lambda;
  unsigned bits = 64;
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto g = [](const Rational& x) -> Rational { return x + 1 / x; };
    Rational g_lo, g_hi;
    if (lam.high <= 1) {
      g_lo = g(lam.high);
      g_hi = g(lam.low);
    } else if (lam.low >= 1) {
      g_lo = g(lam.low);
      g_hi = g(lam.high);
    } else {
      g_lo = 2;
      g_hi = std::max(g(lam.low), g(lam.high));
    }
    const Rational lo = sqrt_bound(2 + g_lo, bits, false);
    const Rational hi = sqrt_bound(2 + g_hi, bits, true);
    const Rational margin = Rational(1, Integer(1) << bits);
    auto roots = isolate_real_roots(alpha_poly, lo - margin, hi, width);
    if (roots.size() == 1) return roots.front();
    lam = refine(lam, lam.width() / 1024);
    bits += 10;
  }
  throw std::logic_error("alpha_from_lambda: could not separate the alpha root");
}

IntPoly alpha_from_lambda(const IntPoly& lambda_poly) { return alpha_polynomial(lambda_poly); }

// ---------------------------------------------------------------------------

bool PolygonStarSweep::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const PolygonStarCheck& c) { return c.pass(); });
}

PolygonStarSweep verify_polygon_star_sweep(std::size_t k_max, unsigned p_max, const Rational& width,
                                           std::size_t threads) {
  const auto polygons = hyperbolic_polygons(k_max, p_max);
  PolygonStarSweep sweep;
  sweep.rows = parallel_map(
      polygons.size(),
      [&](std::size_t i) {
        PolygonStarCheck c;
        c.angles = polygons[i];
        const GrowthFunction f = polygon_growth(c.angles);
        const WeightedTree star = star_diagram(c.angles);
        const IntPoly phi = char_poly_recursive(star);
        c.delta_equals_phi = polygon_delta(c.angles) == phi && char_poly_star(c.angles) == phi;
        c.growth = growth_rate(f, width);
        c.spectral = spectral_radius_coxeter(star, width);
        c.intervals_overlap = c.growth.overlaps(c.spectral);
        c.same_core = normalize_primitive(strip_cyclotomic(f.denominator()).core) ==
                      normalize_primitive(strip_cyclotomic(phi).core);
        return c;
      },
      threads);
  return sweep;
}

}  // namespace coxgrowth
