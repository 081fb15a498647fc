#include "coxgrowth/coxtrans.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/parallel.hpp"
#include "coxgrowth/spectra.hpp"

#include "doctest.h"
#include "matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace coxgrowth;

namespace {

IntPoly oracle_char_poly(const WeightedTree& tree) {
  const std::size_t n = tree.size();
  oracle::QMatrix a(n, std::vector<mpq_class>(n, 0));
  for (const auto& e : tree.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  std::vector<Integer> c;
  for (const auto& q : oracle::char_poly(a)) {
    REQUIRE(q.get_den() == 1);
    c.push_back(q.get_num());
  }
  return IntPoly(std::move(c));
}

/// Every unlabelled tree on 1..n_max vertices, by adding leaves and deduplicating.
std::vector<WeightedTree> all_trees(std::size_t n_max) {
  std::vector<WeightedTree> out{WeightedTree(1, {})};
  std::vector<WeightedTree> layer = out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::map<std::string, WeightedTree> next;
    for (const auto& t : layer)
      for (std::size_t v = 0; v < t.size(); ++v) {
        auto edges = t.edges();
        edges.push_back({v, t.size(), Weight(3)});
        WeightedTree grown(n, edges);
        next.emplace(canonical_form(grown), grown);
      }
    layer.clear();
    for (auto& [key, t] : next) layer.push_back(t);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

WeightedTree random_tree(std::mt19937& rng, std::size_t n) {
  std::vector<TreeEdge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v, Weight(3)});
  return WeightedTree(n, edges);
}

WeightedTree with_weight(const WeightedTree& t, std::size_t u, std::size_t v, Weight w) {
  auto edges = t.edges();
  for (auto& e : edges)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) e.weight = w;
  return WeightedTree(t.size(), edges);
}

}  // namespace

TEST_CASE("adjacency characteristic polynomials") {
  CHECK(adjacency_char_poly(WeightedTree(1, {})) == IntPoly{0, 1});
  CHECK(adjacency_char_poly(WeightedTree(2, {{0, 1, Weight(3)}})) == IntPoly{-1, 0, 1});
  CHECK(adjacency_char_poly(star_diagram({2, 2, 2})) == IntPoly{0, 0, -3, 0, 1});
  CHECK_THROWS(adjacency_char_poly(WeightedTree(2, {{0, 1, Weight(4)}})));
  CHECK(coxeter_adjacency_char_poly(WeightedTree(2, {{0, 1, Weight(4)}})) == IntPoly{-2, 0, 1});
}

TEST_CASE("recursion matches a dense determinant on every tree up to 10 vertices") {
  const auto trees = all_trees(10);
  CHECK(trees.size() == 201);
  for (const auto& t : trees) CHECK(adjacency_char_poly(t) == oracle_char_poly(t));
}

TEST_CASE("canonical form identifies isomorphic trees") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_tree(rng, 1 + trial % 15);
    std::vector<std::size_t> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(t) == canonical_form(t.relabeled(perm)));
  }
  CHECK(canonical_form(h_graph(2, 5, 3)) == canonical_form(h_graph(3, 5, 2)));
  CHECK(canonical_form(h_graph(2, 5, 3)) != canonical_form(h_graph(2, 6, 3)));
}

TEST_CASE("reference spectral radii") {
  for (const auto& row : reference_radii(Rational(1, 1000000000))) CHECK_MESSAGE(row.pass, row.graph);
  CHECK(std::abs(spectral_radius_adjacency(star_diagram({2, 4, 5})).approx() - 2.0153161) < 1e-6);
  CHECK(std::abs(spectral_radius_adjacency(h_graph(2, 10, 3)).approx() - 2.0220988) < 1e-6);
  CHECK(std::abs(spectral_radius_adjacency(star_diagram({3, 3, 4})).approx() - 2.0285235) < 1e-6);
}

TEST_CASE("small spectral radius families") {
  const auto small = brouwer_neumaier_enumerate({8, 8});
  auto has = [&](const std::string& name) {
    return std::any_of(small.begin(), small.end(), [&](const TreeFamilyItem& i) { return i.name() == name; });
  };
  CHECK(has("Star(2,3,7)"));
  CHECK(has("Star(2,3,8)"));
  CHECK(has("Star(2,4,5)"));
  CHECK(std::count_if(small.begin(), small.end(), [](const TreeFamilyItem& i) { return i.family == "H sporadic"; }) == 5);

  std::set<std::string> forms;
  for (const auto& i : small) CHECK(forms.insert(canonical_form(i.tree)).second);

  // Every item of at most 30 vertices has largest eigenvalue strictly between 2 and
  // sqrt(2 + sqrt 5); smaller eigenvalues may equal or exceed 2.
  const auto items = brouwer_neumaier_enumerate({25, 25});
  std::vector<const TreeFamilyItem*> sized;
  for (const auto& i : items)
    if (i.tree.size() <= 30) sized.push_back(&i);
  const IntPoly upper{-1, 0, -4, 0, 1};
  const auto ok = parallel_map(sized.size(), [&](std::size_t n) {
    const IntPoly chi = adjacency_char_poly(sized[n]->tree);
    const SturmSequence s(chi);
    RootInterval r = isolate_largest_real_root(chi, Rational(1, 1000));
    RootInterval bound = isolate_largest_real_root(upper, Rational(1, 1000));
    return s.count_above(Rational(2)) >= 1 &&
           compare_roots(r, bound, Rational(1, Integer("1000000000000"))) == -1;
  });
  CHECK(sized.size() > 300);
  for (std::size_t n = 0; n < sized.size(); ++n) CHECK_MESSAGE(ok[n], sized[n]->name());
}

TEST_CASE("weight-4 leaf replacement") {
  const auto path = weight4_leaf_replace(WeightedTree(2, {{0, 1, Weight(4)}}));
  CHECK(path.pass);
  CHECK(path.output.size() == 3);
  CHECK(std::abs(path.radius.approx() - std::sqrt(2.0)) < 1e-10);

  // Arm 1 of a star is the single leaf vertex 1 on the centre 0.
  for (const auto& arms : {std::vector<unsigned>{2, 4, 5}, std::vector<unsigned>{2, 3, 7}}) {
    const auto r = weight4_leaf_replace(with_weight(star_diagram(arms), 0, 1, Weight(4)));
    CHECK(r.pass);
    CHECK(r.output.all_weights(Weight(3)));
  }
  // Weight 4 on an inner edge, or on two edges, is refused.
  const WeightedTree p4(4, {{0, 1, Weight(3)}, {1, 2, Weight(3)}, {2, 3, Weight(3)}});
  CHECK_THROWS(weight4_leaf_replace(with_weight(p4, 1, 2, Weight(4))));
  CHECK_THROWS(weight4_leaf_replace(with_weight(with_weight(p4, 0, 1, Weight(4)), 2, 3, Weight(4))));
  CHECK_THROWS(weight4_leaf_replace(p4));
}

TEST_CASE("monotonicity of adjacency radii") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_tree(rng, 3 + trial % 14);
    // Drop random leaves; the remainder stays a subtree.
    std::vector<bool> alive(t.size(), true);
    std::size_t keep = t.size();
    const std::size_t target = 1 + rng() % (t.size() - 1);
    while (keep > target) {
      std::vector<std::size_t> leaves;
      for (std::size_t v = 0; v < t.size(); ++v) {
        if (!alive[v]) continue;
        std::size_t deg = 0;
        for (auto [u, w] : t.adjacency()[v]) deg += alive[u];
        if (deg <= 1) leaves.push_back(v);
      }
      alive[leaves[rng() % leaves.size()]] = false;
      --keep;
    }
    std::vector<std::size_t> index(t.size(), 0);
    std::size_t next = 0;
    for (std::size_t v = 0; v < t.size(); ++v)
      if (alive[v]) index[v] = next++;
    std::vector<TreeEdge> edges;
    for (const auto& e : t.edges())
      if (alive[e.u] && alive[e.v]) edges.push_back({index[e.u], index[e.v], Weight(3)});
    const WeightedTree sub(next, edges);
    RootInterval a = spectral_radius_adjacency(sub);
    RootInterval b = spectral_radius_adjacency(t);
    CHECK(compare_roots(a, b, Rational(1, Integer("1000000000000"))) <= 0);
  }

  RootInterval prev = spectral_radius_adjacency(h_graph(2, 1, 3));
  for (unsigned j = 2; j <= 30; ++j) {
    RootInterval cur = spectral_radius_adjacency(h_graph(2, j, 3));
    CHECK(compare_roots(cur, prev, Rational(1, Integer("1000000000000"))) <= 0);
    prev = cur;
  }
}

TEST_CASE("adjacency and Coxeter radii of weight-3 trees") {
  // alpha^2 = 2 + lambda + 1/lambda.
  std::mt19937 rng(41);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = random_tree(rng, 6 + trial % 12);
    const RootInterval lambda = spectral_radius_coxeter(t, Rational(1, Integer("1000000000000")));
    if (lambda.is_exact()) continue;
    ++compared;
    const RootInterval alpha = alpha_from_lambda(lambda, Rational(1, 1000000000));
    CHECK(alpha.overlaps(spectral_radius_adjacency(t, Rational(1, 1000000000))));
  }
  CHECK(compared > 10);

  const IntPoly phi = char_poly_recursive(h_graph(2, 8, 3));
  const GrowthFunction f435 = steinberg_growth(parse_coxeter_symbol("[4,3,5]"));
  CHECK(normalize_primitive(strip_cyclotomic(phi).core) ==
        normalize_primitive(strip_cyclotomic(f435.denominator()).core));
}

TEST_CASE("the [3,5,3] growth rate is not a Coxeter spectral radius") {
  const auto rep = prop52_pipeline({25, 25});
  CHECK(std::abs(rep.lambda0.approx() - 1.350980) < 1e-6);
  CHECK(rep.lambda_below_threshold);
  CHECK(std::abs(rep.alpha0.approx() - 2.0226674) < 1e-7);
  CHECK(rep.alpha_below_bound);
  for (const auto& b : rep.trees.brackets) CHECK_MESSAGE(b.pass, b.claim);
  for (const auto& c : rep.trees.items) CHECK_MESSAGE(c.pass, c.item.name());
  CHECK(rep.trees.pass);
  CHECK(rep.pass);
  CHECK_FALSE(rep.trees.assumptions.empty());
  CHECK_THROWS(verify_alpha0_not_tree_radius(parse_poly("1,-1,0,0,-1,1,-1,0,0,-1,1"), {10, 25}));
}
