#include "coxgrowth/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace coxgrowth {

std::string Weight::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

Weight parse_weight(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "inf" || s == "\xE2\x88\x9E") return Weight::infinity();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a weight, got '" + s + "'", 0);
  if (s.size() > 9) throw ParseError("weight too large", 0);
  return Weight(static_cast<unsigned>(std::stoul(s)));
}

// ---------------------------------------------------------------------------

CoxeterDiagram::CoxeterDiagram(std::size_t rank) : rank_(rank), table_(rank * rank, Weight(2)) {
  for (std::size_t i = 0; i < rank; ++i) table_[i * rank + i] = Weight(1);
}

Weight CoxeterDiagram::weight(std::size_t i, std::size_t j) const {
  if (i >= rank_ || j >= rank_) throw std::out_of_range("diagram index out of range");
  return table_[i * rank_ + j];
}

void CoxeterDiagram::set_weight(std::size_t i, std::size_t j, Weight w) {
  if (i >= rank_ || j >= rank_) throw std::out_of_range("diagram index out of range");
  if (i == j) throw std::invalid_argument("diagonal weights are fixed at 1");
  if (!w.is_infinite() && w.value() < 2) throw std::invalid_argument("off-diagonal weights must be >= 2");
  table_[i * rank_ + j] = w;
  table_[j * rank_ + i] = w;
}

std::vector<std::pair<std::size_t, std::size_t>> CoxeterDiagram::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j)
      if (weight(i, j).is_edge()) out.emplace_back(i, j);
  return out;
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<std::size_t>& vertices) const {
  CoxeterDiagram d(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) d.set_weight(a, b, weight(vertices[a], vertices[b]));
  return d;
}

std::vector<std::vector<std::size_t>> CoxeterDiagram::components() const {
  std::vector<int> comp(rank_, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < rank_; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size() - 1);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t u = 0; u < rank_; ++u) {
        if (u == v || comp[u] >= 0 || !weight(u, v).is_edge()) continue;
        comp[u] = comp[s];
        stack.push_back(u);
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coxeter symbols

namespace {

class SymbolParser {
public:
  explicit SymbolParser(std::string_view text) : s_(text) {}

  CoxeterDiagram parse() {
    skip_ws();
    expect('[');
    skip_ws();
    bool cyclic = false;
    if (peek() == '(') {
      cyclic = true;
      ++pos_;
    }
    std::vector<Weight> weights = items();
    if (cyclic) {
      skip_ws();
      expect(')');
    }
    skip_ws();
    expect(']');
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing characters after symbol", pos_);

    if (cyclic) {
      if (weights.size() < 3) throw ParseError("a cyclic symbol needs at least 3 weights", 0);
      const std::size_t k = weights.size();
      CoxeterDiagram d(k);
      for (std::size_t i = 0; i < k; ++i) d.set_weight(i, (i + 1) % k, weights[i]);
      return d;
    }
    CoxeterDiagram d(weights.size() + 1);
    for (std::size_t i = 0; i < weights.size(); ++i) d.set_weight(i, i + 1, weights[i]);
    return d;
  }

private:
  std::vector<Weight> items() {
    std::vector<Weight> out;
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      Weight w = weight();
      if (!w.is_infinite() && w.value() < 3) throw ParseError("symbol weights must be >= 3 or inf", at);
      skip_ws();
      std::size_t repeat = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t rat = pos_;
        repeat = number();
        if (repeat == 0) throw ParseError("repetition count must be positive", rat);
      }
      out.insert(out.end(), repeat, w);
      skip_ws();
      if (peek() != ',') break;
      ++pos_;
    }
    return out;
  }

  Weight weight() {
    if (s_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return Weight::infinity();
    }
    if (s_.substr(pos_, 3) == "\xE2\x88\x9E") {
      pos_ += 3;
      return Weight::infinity();
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(pos_ >= s_.size() ? "unexpected end of symbol" : "expected a weight", pos_);
    const std::size_t n = number();
    return Weight(static_cast<unsigned>(n));
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (n > 1000000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return n;
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' before end of symbol", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool only_listed_edges(const CoxeterDiagram& d, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<bool> listed(d.rank() * d.rank(), false);
  for (auto [a, b] : pairs) {
    if (!d.weight(a, b).is_edge()) return false;
    listed[a * d.rank() + b] = listed[b * d.rank() + a] = true;
  }
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = i + 1; j < d.rank(); ++j)
      if (!listed[i * d.rank() + j] && d.weight(i, j) != Weight(2)) return false;
  return true;
}

}  // namespace

CoxeterDiagram parse_coxeter_symbol(std::string_view text) { return SymbolParser(text).parse(); }

std::optional<std::string> coxeter_symbol(const CoxeterDiagram& d) {
  const std::size_t n = d.rank();
  if (n < 2) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> path;
  for (std::size_t i = 0; i + 1 < n; ++i) path.emplace_back(i, i + 1);
  if (only_listed_edges(d, path)) {
    std::string out = "[";
    for (std::size_t i = 0; i + 1 < n; ++i) out += (i ? "," : "") + d.weight(i, i + 1).to_string();
    return out + "]";
  }
  if (n < 3) return std::nullopt;
  auto cycle = path;
  cycle.emplace_back(n - 1, 0);
  if (!only_listed_edges(d, cycle)) return std::nullopt;
  std::string out = "[(";
  for (std::size_t i = 0; i < n;) {
    const Weight w = d.weight(i, (i + 1) % n);
    std::size_t run = 1;
    while (i + run < n && d.weight(i + run, (i + run + 1) % n) == w) ++run;
    if (i) out += ',';
    out += w.to_string();
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out + ")]";
}

CoxeterDiagram parse_diagram_file(std::string_view contents) {
  std::istringstream in{std::string(contents)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<CoxeterDiagram> d;
  std::vector<bool> seen;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!d) {
      if (tok.size() != 2 || tok[0] != "rank") throw fail("expected 'rank N'");
      std::size_t n = 0;
      try {
        n = std::stoul(tok[1]);
      } catch (const std::logic_error&) {
        throw fail("malformed rank");
      }
      if (n == 0 || n > 64) throw fail("rank must be between 1 and 64");
      d.emplace(n);
      seen.assign(n * n, false);
      continue;
    }
    if (tok.size() != 3) throw fail("expected 'i j m'");
    std::size_t i = 0, j = 0;
    try {
      i = std::stoul(tok[0]);
      j = std::stoul(tok[1]);
    } catch (const std::logic_error&) {
      throw fail("malformed index");
    }
    if (i < 1 || j < 1 || i > d->rank() || j > d->rank()) throw fail("index out of range");
    if (i == j) throw fail("a generator cannot be paired with itself");
    Weight w;
    try {
      w = parse_weight(tok[2]);
    } catch (const ParseError&) {
      throw fail("malformed weight '" + tok[2] + "'");
    }
    if (!w.is_infinite() && w.value() < 2) throw fail("weights must be >= 2");
    --i;
    --j;
    if (seen[i * d->rank() + j]) throw fail("duplicate pair");
    seen[i * d->rank() + j] = seen[j * d->rank() + i] = true;
    d->set_weight(i, j, w);
  }
  if (!d) throw ParseError("missing 'rank N' line", 0);
  return *d;
}

std::string format_diagram_file(const CoxeterDiagram& d) {
  std::string out = "rank " + std::to_string(d.rank()) + "\n";
  for (auto [i, j] : d.edges())
    out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + d.weight(i, j).to_string() + "\n";
  return out;
}

CoxeterDiagram polygon_diagram(const std::vector<unsigned>& angles) {
  const std::size_t k = angles.size();
  if (k < 3) throw std::invalid_argument("a polygon needs at least 3 vertices");
  for (unsigned p : angles)
    if (p < 2) throw std::invalid_argument("polygon angles pi/p need p >= 2");
  CoxeterDiagram d(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) d.set_weight(i, j, Weight::infinity());
  for (std::size_t i = 0; i < k; ++i) d.set_weight(i, (i + 1) % k, Weight(angles[i]));
  return d;
}

bool polygon_is_hyperbolic(const std::vector<unsigned>& angles) {
  Rational sum = 0;
  for (unsigned p : angles) {
    if (p == 0) throw std::invalid_argument("polygon angle parameter must be positive");
    sum += Rational(1, p);
  }
  return sum < static_cast<long>(angles.size()) - 2;
}

// ---------------------------------------------------------------------------
// Trees

WeightedTree::WeightedTree(std::size_t vertices, std::vector<TreeEdge> edges)
    : n_(vertices), edges_(std::move(edges)), adj_(vertices) {
  if (n_ == 0) throw std::invalid_argument("a tree needs at least one vertex");
  if (edges_.size() + 1 != n_) throw std::invalid_argument("a tree on n vertices has n - 1 edges");
  for (const auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_ || e.u == e.v) throw std::invalid_argument("tree edge has a bad endpoint");
    if (!e.weight.is_edge()) throw std::invalid_argument("tree edges need weight >= 3");
    adj_[e.u].emplace_back(e.v, e.weight);
    adj_[e.v].emplace_back(e.u, e.weight);
  }
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (auto [u, w] : adj_[v]) {
      if (seen[u]) continue;
      seen[u] = true;
      ++reached;
      stack.push_back(u);
    }
  }
  if (reached != n_) throw std::invalid_argument("graph is disconnected, not a tree");
  for (auto& list : adj_) std::sort(list.begin(), list.end(), [](auto& a, auto& b) { return a.first < b.first; });
}

bool WeightedTree::all_weights(Weight w) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const TreeEdge& e) { return e.weight == w; });
}

CoxeterDiagram WeightedTree::to_diagram() const {
  CoxeterDiagram d(n_);
  for (const auto& e : edges_) d.set_weight(e.u, e.v, e.weight);
  return d;
}

WeightedTree WeightedTree::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<TreeEdge> e;
  for (const auto& x : edges_) e.push_back({perm[x.u], perm[x.v], x.weight});
  return WeightedTree(n_, std::move(e));
}

std::optional<WeightedTree> as_tree(const CoxeterDiagram& d) {
  if (d.rank() == 0) return std::nullopt;
  std::vector<TreeEdge> e;
  for (auto [i, j] : d.edges()) e.push_back({i, j, d.weight(i, j)});
  if (e.size() + 1 != d.rank()) return std::nullopt;
  try {
    return WeightedTree(d.rank(), std::move(e));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

WeightedTree star_diagram(const std::vector<unsigned>& arms) {
  if (arms.empty()) throw std::invalid_argument("a star needs at least one arm");
  std::vector<TreeEdge> e;
  std::size_t next = 1;
  for (unsigned p : arms) {
    if (p < 2) throw std::invalid_argument("star arm parameters must be >= 2");
    std::size_t prev = 0;
    for (unsigned s = 0; s + 1 < p; ++s) {
      e.push_back({prev, next, Weight(3)});
      prev = next++;
    }
  }
  return WeightedTree(next, std::move(e));
}

WeightedTree h_graph(unsigned i, unsigned j, unsigned k) {
  if (i < 2 || k < 2 || j < 1) throw std::invalid_argument("H(i,j,k) needs i, k >= 2 and j >= 1");
  std::vector<TreeEdge> e;
  const std::size_t v1 = 0;
  std::size_t next = 1;
  auto chain = [&](std::size_t from, unsigned length) {
    std::size_t prev = from;
    for (unsigned s = 0; s < length; ++s) {
      e.push_back({prev, next, Weight(3)});
      prev = next++;
    }
    return prev;
  };
  chain(v1, i - 1);
  chain(v1, 1);
  // Spine: j - 1 interior vertices, then the second branch vertex.
  const std::size_t v2 = chain(v1, j);
  chain(v2, 1);
  chain(v2, k - 1);
  return WeightedTree(next, std::move(e));
}

// ---------------------------------------------------------------------------
// Bilinear form

IntPoly two_cos_pi_over_polynomial(unsigned m) {
  if (m < 2) throw std::invalid_argument("2cos(pi/m) needs m >= 2");
  return palindromic_reduce(cyclotomic(2 * m));
}

std::optional<Integer> four_cos_squared(Weight w) {
  if (w.is_infinite()) return Integer(4);
  switch (w.value()) {
    case 2: return Integer(0);
    case 3: return Integer(1);
    case 4: return Integer(2);
    case 6: return Integer(3);
    default: return std::nullopt;
  }
}

double FormEntry::approx() const {
  Rational mid = (low + high) / 2;
  return mid.get_d();
}

std::string FormEntry::to_string() const {
  if (!exact) return "[" + to_decimal(low, 12, -1) + ", " + to_decimal(high, 12, 1) + "]";
  std::string out;
  if (sgn(rational) != 0 || sgn(surd_coeff) == 0) out = rational.get_str();
  if (sgn(surd_coeff) != 0) {
    if (!out.empty()) out += sgn(surd_coeff) < 0 ? " - " : " + ";
    else if (sgn(surd_coeff) < 0) out += "-";
    out += Rational(abs(surd_coeff)).get_str() + "*sqrt(" + std::to_string(radicand) + ")";
  }
  return out;
}

namespace {

FormEntry exact_entry(const Rational& a, const Rational& b, unsigned r, const Rational& width) {
  FormEntry e;
  e.rational = a;
  e.surd_coeff = b;
  e.radicand = r;
  if (sgn(b) == 0 || r == 1) {
    e.rational = a + b;
    e.surd_coeff = 0;
    e.radicand = 1;
    e.low = e.high = e.rational;
    return e;
  }
  const Rational scale = abs(b) == 0 ? Rational(1) : Rational(abs(b));
  const RootInterval root = isolate_largest_real_root(IntPoly{-static_cast<long>(r), 0, 1}, width / scale);
  const Rational lo = a + b * (sgn(b) > 0 ? root.low : root.high);
  const Rational hi = a + b * (sgn(b) > 0 ? root.high : root.low);
  e.low = lo;
  e.high = hi;
  return e;
}

/// Exact or enclosed -cos(pi/m).
FormEntry minus_cos(Weight w, const Rational& width) {
  if (w.is_infinite()) return exact_entry(Rational(-1), 0, 1, width);
  switch (w.value()) {
    case 1: return exact_entry(Rational(1), 0, 1, width);
    case 2: return exact_entry(Rational(0), 0, 1, width);
    case 3: return exact_entry(Rational(-1, 2), 0, 1, width);
    case 4: return exact_entry(0, Rational(-1, 2), 2, width);
    case 6: return exact_entry(0, Rational(-1, 2), 3, width);
    default: break;
  }
  const RootInterval two_cos = isolate_largest_real_root(two_cos_pi_over_polynomial(w.value()), 2 * width);
  FormEntry e;
  e.exact = false;
  e.low = -two_cos.high / 2;
  e.high = -two_cos.low / 2;
  return e;
}

FormEntry scaled(const FormEntry& e, const Rational& factor, const Rational& shift) {
  FormEntry out = e;
  out.rational = e.rational * factor + shift;
  out.surd_coeff = e.surd_coeff * factor;
  out.low = (sgn(factor) >= 0 ? e.low : e.high) * factor + shift;
  out.high = (sgn(factor) >= 0 ? e.high : e.low) * factor + shift;
  return out;
}

}  // namespace

FormMatrix bilinear_form(const CoxeterDiagram& d, const Rational& width) {
  FormMatrix b(d.rank(), std::vector<FormEntry>(d.rank()));
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j) b[i][j] = i == j ? minus_cos(Weight(1), width) : minus_cos(d.weight(i, j), width);
  return b;
}

FormMatrix coxeter_adjacency(const CoxeterDiagram& d, const Rational& width) {
  FormMatrix a = bilinear_form(d, width / 2);
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j) a[i][j] = scaled(a[i][j], Rational(-2), i == j ? Rational(2) : Rational(0));
  return a;
}

// ---------------------------------------------------------------------------
// Spherical types

std::string SphericalType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(dihedral_order) + ")";
  }
  return "?";
}

namespace {

std::vector<unsigned> range_exponents(unsigned first, unsigned step, std::size_t count) {
  std::vector<unsigned> e;
  for (std::size_t i = 0; i < count; ++i) e.push_back(first + step * static_cast<unsigned>(i));
  return e;
}

SphericalType make_type(Family f, std::size_t rank, std::vector<unsigned> exps) {
  SphericalType t;
  t.family = f;
  t.rank = rank;
  t.exponents = std::move(exps);
  return t;
}

std::optional<SphericalType> recognize_component(const CoxeterDiagram& c) {
  const std::size_t n = c.rank();
  if (n == 1) return make_type(Family::A, 1, {1});
  const auto edges = c.edges();
  for (auto [i, j] : edges)
    if (c.weight(i, j).is_infinite()) return std::nullopt;
  if (n == 2) {
    const unsigned m = c.weight(0, 1).value();
    if (m == 3) return make_type(Family::A, 2, {1, 2});
    if (m == 4) return make_type(Family::B, 2, {1, 3});
    SphericalType t = make_type(Family::I2, 2, {1, m - 1});
    t.dihedral_order = m;
    return t;
  }
  if (edges.size() != n - 1) return std::nullopt;  // contains a cycle
  std::vector<std::size_t> deg(n, 0);
  for (auto [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }
  const std::size_t max_deg = *std::max_element(deg.begin(), deg.end());
  if (max_deg > 3) return std::nullopt;

  if (max_deg == 2) {
    // Walk the path from an end to read the weight sequence.
    std::size_t v = static_cast<std::size_t>(std::find(deg.begin(), deg.end(), 1) - deg.begin());
    std::size_t prev = n;
    std::vector<unsigned> w;
    for (std::size_t step = 0; step + 1 < n; ++step) {
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v || u == prev || !c.weight(u, v).is_edge()) continue;
        w.push_back(c.weight(u, v).value());
        prev = v;
        v = u;
        break;
      }
    }
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 3) odd.push_back(i);
    if (odd.empty()) return make_type(Family::A, n, range_exponents(1, 1, n));
    if (odd.size() > 1) return std::nullopt;
    const std::size_t at = odd[0];
    const bool at_end = at == 0 || at + 1 == w.size();
    if (w[at] == 4 && at_end) return make_type(Family::B, n, range_exponents(1, 2, n));
    if (w[at] == 4 && n == 4) return make_type(Family::F4, 4, {1, 5, 7, 11});
    if (w[at] == 5 && at_end && n == 3) return make_type(Family::H3, 3, {1, 5, 9});
    if (w[at] == 5 && at_end && n == 4) return make_type(Family::H4, 4, {1, 11, 19, 29});
    return std::nullopt;
  }

  // One branch vertex, simply laced.
  for (auto [i, j] : edges)
    if (c.weight(i, j).value() != 3) return std::nullopt;
  if (std::count(deg.begin(), deg.end(), 3) != 1) return std::nullopt;
  const std::size_t centre = static_cast<std::size_t>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
  std::vector<std::size_t> arms;
  for (std::size_t start = 0; start < n; ++start) {
    if (start == centre || !c.weight(start, centre).is_edge()) continue;
    std::size_t len = 1, prev = centre, v = start;
    while (deg[v] == 2) {
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v || u == prev || !c.weight(u, v).is_edge()) continue;
        prev = v;
        v = u;
        break;
      }
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    std::vector<unsigned> e = range_exponents(1, 2, n - 1);
    e.push_back(static_cast<unsigned>(n - 1));
    std::sort(e.begin(), e.end());
    return make_type(Family::D, n, e);
  }
  if (arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return make_type(Family::E6, 6, {1, 4, 5, 7, 8, 11});
    if (arms[2] == 3) return make_type(Family::E7, 7, {1, 5, 7, 9, 11, 13, 17});
    if (arms[2] == 4) return make_type(Family::E8, 8, {1, 7, 11, 13, 17, 19, 23, 29});
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<SphericalType>> finite_type_recognize(const CoxeterDiagram& d) {
  std::vector<SphericalType> out;
  for (auto& comp : d.components()) {
    auto t = recognize_component(d.induced(comp));
    if (!t) return std::nullopt;
    t->vertices = comp;
    out.push_back(std::move(*t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Domination

const char* to_string(Domination r) {
  switch (r) {
    case Domination::less: return "less";
    case Domination::greater: return "greater";
    case Domination::isomorphic: return "isomorphic";
    case Domination::incomparable: return "incomparable";
  }
  return "incomparable";
}

bool dominated_by(const CoxeterDiagram& d, const CoxeterDiagram& other) {
  const std::size_t n = d.rank();
  const std::size_t m = other.rank();
  if (n > m) return false;
  if (m > 12) throw std::invalid_argument("dominates: rank above 12 is not supported");

  // Sorted off-diagonal weight rows act as a cheap necessary condition.
  auto profile = [](const CoxeterDiagram& g, std::size_t v) {
    std::vector<Weight> row;
    for (std::size_t u = 0; u < g.rank(); ++u)
      if (u != v) row.push_back(g.weight(u, v));
    std::sort(row.rbegin(), row.rend());
    return row;
  };
  std::vector<std::vector<Weight>> pd(n), po(m);
  for (std::size_t v = 0; v < n; ++v) pd[v] = profile(d, v);
  for (std::size_t v = 0; v < m; ++v) po[v] = profile(other, v);
  auto fits = [&](std::size_t s, std::size_t t) {
    for (std::size_t i = 0; i < pd[s].size(); ++i)
      if (pd[s][i] > po[t][i]) return false;
    return true;
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pd[a] > pd[b]; });
  std::vector<std::size_t> image(n, m);
  std::vector<bool> used(m, false);
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == n) return true;
    const std::size_t s = order[k];
    for (std::size_t t = 0; t < m; ++t) {
      if (used[t] || !fits(s, t)) continue;
      bool ok = true;
      for (std::size_t q = 0; q < k && ok; ++q) {
        const std::size_t r = order[q];
        if (d.weight(s, r) > other.weight(t, image[r])) ok = false;
      }
      if (!ok) continue;
      used[t] = true;
      image[s] = t;
      if (place(k + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return place(0);
}

Domination dominates(const CoxeterDiagram& d, const CoxeterDiagram& other) {
  if (d.rank() > 12 || other.rank() > 12) throw std::invalid_argument("dominates: rank above 12 is not supported");
  const bool le = dominated_by(d, other);
  const bool ge = dominated_by(other, d);
  if (le && ge) return Domination::isomorphic;
  if (le) return Domination::less;
  if (ge) return Domination::greater;
  return Domination::incomparable;
}

}  // namespace coxgrowth
