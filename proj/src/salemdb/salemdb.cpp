#include "coxgrowth/salemdb.hpp"

#include "coxgrowth/diagram.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace coxgrowth {

namespace {

const Rational& tie_width() {
  static const Rational w = pow2(-200);
  return w;
}

std::string trim(std::string s) {
  const auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && ws(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

bool hint_matches(const std::string& hint, const RootInterval& root) {
  if (hint.empty()) return true;
  const auto dot = hint.find('.');
  const int digits = dot == std::string::npos ? 0 : static_cast<int>(hint.size() - dot - 1);
  Rational tol(1);
  for (int i = 0; i < digits; ++i) tol /= 10;
  const Rational h = parse_rational(hint);
  return root.low - tol <= h && h <= root.high + tol;
}

/// -1, 0, +1 with ties certified by a common factor.
int certified_compare(RootInterval a, RootInterval b) {
  const int c = compare_roots(a, b, tie_width());
  if (c != 0) return c;
  if (gcd(a.poly, b.poly).degree() < 1)
    throw std::runtime_error("roots agree to 2^-200 without a common factor");
  return 0;
}

void sort_entries(std::vector<SalemEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const SalemEntry& a, const SalemEntry& b) {
    if (a.root.strictly_below(b.root)) return true;
    if (b.root.strictly_below(a.root)) return false;
    return certified_compare(a.root, b.root) < 0;
  });
}

RootInterval polygon_rate(const std::vector<unsigned>& angles, const Rational& width) {
  return growth_rate(polygon_growth(angles), width);
}

}  // namespace

std::optional<std::string> salem_incompatibility(const IntPoly& p) {
  if (p.degree() < 4) return "degree below 4";
  if (p.leading() != 1) return "not monic";
  if (reciprocity_type(p) != Reciprocity::reciprocal) return "not reciprocal";
  const auto split_off = strip_cyclotomic(p);
  if (!split_off.factors.empty()) return "has a cyclotomic factor";
  if (square_free_part(p).degree() != p.degree()) return "repeated factor";
  const DiskCounts c = disk_counts(p);
  if (c.outside != 1 || c.inside != 1)
    return "roots outside/inside the unit circle: " + std::to_string(c.outside) + "/" + std::to_string(c.inside);
  if (c.on != static_cast<std::size_t>(p.degree()) - 2) return "unit-circle root count differs from degree - 2";
  if (SturmSequence(p).count_above(Rational(1)) != 1) return "the root outside the unit circle is negative";
  return std::nullopt;
}

SalemEntry make_salem_entry(const IntPoly& p, const Rational& width) {
  if (auto reason = salem_incompatibility(p)) throw std::invalid_argument("not a Salem polynomial: " + *reason);
  SalemEntry e;
  e.poly = p;
  e.root = isolate_largest_real_root(p, width);
  return e;
}

SalemList parse_salem_list(std::istream& in, const std::string& source, const Rational& width) {
  SalemList list;
  list.source = source;
  list.loaded = true;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, ';');
    if (fields.size() < 2 || fields.size() > 3)
      throw SalemListError(source, line_no, "expected degree;coefficients;approximation");
    long degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stol(fields[0], &used);
      if (used != fields[0].size() || degree < 0) throw std::invalid_argument("degree");
    } catch (const std::exception&) {
      throw SalemListError(source, line_no, "bad degree '" + fields[0] + "'");
    }
    IntPoly p;
    try {
      p = parse_poly(fields[1]);
    } catch (const std::exception& ex) {
      throw SalemListError(source, line_no, std::string("bad coefficients: ") + ex.what());
    }
    if (split(fields[1], ',').size() != static_cast<std::size_t>(degree) + 1 || p.degree() != degree)
      throw SalemListError(source, line_no, "coefficient count does not match degree " + std::to_string(degree));
    std::string hint = fields.size() == 3 ? fields[2] : std::string();
    if (!hint.empty()) {
      try {
        (void)parse_rational(hint);
      } catch (const std::exception&) {
        throw SalemListError(source, line_no, "bad approximation '" + hint + "'");
      }
    }
    if (auto reason = salem_incompatibility(p)) {
      list.rejected.push_back({line_no, line, *reason});
      continue;
    }
    SalemEntry e = make_salem_entry(p, width);
    e.hint = hint;
    e.hint_consistent = hint_matches(hint, e.root);
    e.line = line_no;
    list.entries.push_back(std::move(e));
  }
  sort_entries(list.entries);
  return list;
}

SalemList load_salem_list(const std::string& path, const Rational& width) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Salem list '" + path + "'");
  return parse_salem_list(in, path, width);
}

const char* bundled_salem_text() {
  return "# degree;ascending coefficients;approximation\n"
         "10;1,1,0,-1,-1,-1,-1,-1,0,1,1;1.176281\n"
         "10;1,0,0,0,-1,-1,-1,0,0,0,1;1.216391\n"
         "10;1,0,0,-1,0,-1,0,-1,0,0,1;1.230391\n";
}

SalemList bundled_salem_list(const Rational& width) {
  std::istringstream in(bundled_salem_text());
  SalemList list = parse_salem_list(in, "<bundled>", width);
  list.bundled = true;
  return list;
}

std::optional<std::string> default_salem_list_path() {
  const char* v = std::getenv("COXGROWTH_SALEM_LIST");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

GapReport gap_report(const SalemList& list, const Rational& width) {
  if (!list.loaded) throw std::invalid_argument("gap_report: list not loaded");
  GapReport r;
  r.tau_triangle = polygon_rate({2, 3, 7}, width);
  r.tau_square = growth_rate(steinberg_growth(parse_coxeter_symbol("[3,8]")), width);
  r.tau_353 = growth_rate(steinberg_growth(parse_coxeter_symbol("[3,5,3]")), width);
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    const SalemEntry& e = list.entries[i];
    const int lo = certified_compare(e.root, r.tau_triangle);
    const int hi = certified_compare(e.root, r.tau_square);
    if (lo < 0)
      r.below.push_back(e);
    else if (lo == 0)
      r.at_tau_triangle.push_back(e);
    else if (hi < 0)
      r.band.push_back(e);
    else
      r.at_or_above.push_back(e);
    if (hi == 0 && !r.tau_square_rank) r.tau_square_rank = i + 1;
    if (certified_compare(e.root, r.tau_353) < 0) ++r.below_353;
  }
  r.ordinal_claims_available = !list.bundled;
  if (list.bundled) {
    r.notices.emplace_back("band size 5, rank 7 of [3,8] and 47 entries below [3,5,3]: requires full Salem list");
  } else {
    r.notices.emplace_back("counts refer to the supplied file " + list.source + "; completeness is not checked");
  }
  return r;
}

std::vector<std::vector<unsigned>> dihedral_classes(std::vector<unsigned> multiset) {
  std::sort(multiset.begin(), multiset.end());
  std::set<std::vector<unsigned>> reps;
  const std::size_t k = multiset.size();
  do {
    std::vector<unsigned> best = multiset;
    std::vector<unsigned> cand(k);
    for (int dir = 0; dir < 2; ++dir)
      for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t i = 0; i < k; ++i) cand[i] = dir == 0 ? multiset[(s + i) % k] : multiset[(s + k - i) % k];
        best = std::min(best, cand);
      }
    reps.insert(best);
  } while (std::next_permutation(multiset.begin(), multiset.end()));
  return {reps.begin(), reps.end()};
}

RealizationSearch polygon_realization_search(const SalemEntry& target, std::size_t k_max, unsigned p_max,
                                             const Rational& width, std::size_t threads) {
  RealizationSearch out;
  out.target = target.poly;
  out.k_max = k_max;
  out.p_max = p_max;
  const IntPoly goal = normalize_primitive(target.poly);

  struct Task {
    std::size_t k;
    unsigned first;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 3; k <= k_max; ++k)
    for (unsigned p = 2; p <= p_max; ++p) tasks.push_back({k, p});

  struct Partial {
    std::size_t examined = 0;
    std::size_t pruned = 0;
    std::vector<PolygonMatch> matches;
  };

  auto results = parallel_map(tasks.size(), [&](std::size_t t) {
    Partial part;
    const std::size_t k = tasks[t].k;
    std::vector<unsigned> cur{tasks[t].first};
    // Growth rates increase with every parameter, so the cheapest completion
    // of a prefix bounds all of its completions from below.
    auto exceeds = [&](const std::vector<unsigned>& prefix) {
      std::vector<unsigned> completion = prefix;
      completion.resize(k, prefix.back());
      if (!polygon_is_hyperbolic(completion)) return false;
      const RootInterval r = polygon_rate(completion, width);
      ++part.examined;
      return target.root.high < r.low;
    };
    auto rec = [&](auto&& self) -> void {
      if (cur.size() == k) {
        if (!polygon_is_hyperbolic(cur)) return;
        const IntPoly delta = polygon_delta(cur);
        const IntPoly core = normalize_primitive(strip_cyclotomic(delta).core);
        if (!try_divide(core, goal)) return;
        RootInterval rate = polygon_rate(cur, width);
        RootInterval goal_root = target.root;
        if (compare_roots(rate, goal_root, tie_width()) != 0) return;
        for (auto& arrangement : dihedral_classes(cur))
          part.matches.push_back({std::move(arrangement), delta, rate, core == goal});
        return;
      }
      for (unsigned v = cur.back(); v <= p_max; ++v) {
        cur.push_back(v);
        const bool cut = exceeds(cur);
        if (!cut) self(self);
        cur.pop_back();
        if (cut) {
          ++part.pruned;
          break;
        }
      }
    };
    if (exceeds(cur)) {
      ++part.pruned;
      return part;
    }
    rec(rec);
    return part;
  }, threads);

  for (auto& part : results) {
    out.examined += part.examined;
    out.pruned += part.pruned;
    for (auto& m : part.matches) out.matches.push_back(std::move(m));
  }
  std::sort(out.matches.begin(), out.matches.end(), [](const PolygonMatch& a, const PolygonMatch& b) {
    if (a.angles.size() != b.angles.size()) return a.angles.size() < b.angles.size();
    return a.angles < b.angles;
  });
  return out;
}

}  // namespace coxgrowth
