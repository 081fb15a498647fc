#include "coxgrowth/cli.hpp"

#include "coxgrowth/coxtrans.hpp"
#include "coxgrowth/diagram.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/parallel.hpp"
#include "coxgrowth/salemdb.hpp"
#include "coxgrowth/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace coxgrowth::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json_out = false;
  bool no_meta = false;
  std::string width_text = "1e-9";
  std::size_t threads = 0;

  std::string symbol, file, polygon, star, hgraph, tree, poly, list, target;
  std::size_t series = 0;
  bool table1 = false, gap = false, search = false;
  std::size_t max_k = 0;
  unsigned max_p = 0;
  unsigned rmax = 25, jmax = 25;

  Rational width;
};

// ---------------------------------------------------------------------------
// Formatting

std::string width_text(const Rational& w) {
  if (w == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", w.get_d());
  return buf;
}

json interval_json(const RootInterval& r) {
  return {{"value", to_decimal((r.low + r.high) / 2, 7)},
          {"low", to_decimal(r.low, 12, -1)},
          {"high", to_decimal(r.high, 12, 1)},
          {"width", width_text(r.width())}};
}

json factors_json(const std::vector<CyclotomicFactor>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back({{"index", f.index}, {"multiplicity", f.multiplicity}});
  return out;
}

json class_json(const NumberClass& c) {
  json out{{"labels", c.labels()},
           {"roots_outside_unit_disk", c.roots_outside_unit_disk},
           {"roots_on_unit_circle", c.roots_on_unit_circle},
           {"roots_inside", c.roots_inside},
           {"irreducibility_certified", c.irreducibility_certified}};
  out["largest_real_root"] = c.largest_real_root ? interval_json(*c.largest_real_root) : json(nullptr);
  return out;
}

json angles_json(const std::vector<unsigned>& a) { return json(a); }

std::string join(const std::vector<unsigned>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() && !v.empty()) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 1);
      } else if (v.is_array() && !flat(v)) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 1);
      } else if (v.is_array() && v.empty()) {
        out << pad << k << ": none\n";
      } else if (v.is_array()) {
        out << pad << k << ": ";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << scalar(v[i]);
        out << "\n";
      } else {
        out << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render_text(v, out, indent + 1);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

// ---------------------------------------------------------------------------
// Input parsing

std::vector<unsigned> parse_uints(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("expected a list of integers, got '" + text + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedTree parse_tree_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("tree spec must be H:i,j,k or star:p1,...");
  std::string kind = spec.substr(0, colon);
  for (auto& c : kind) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto params = parse_uints(spec.substr(colon + 1));
  if (kind == "h") {
    if (params.size() != 3) throw std::invalid_argument("H-graph needs three parameters");
    return h_graph(params[0], params[1], params[2]);
  }
  if (kind == "star") return star_diagram(params);
  throw std::invalid_argument("unknown tree kind '" + kind + "'");
}

std::string describe_tree_input(const Options& o) {
  if (!o.tree.empty()) return o.tree;
  if (!o.star.empty()) return "star:" + o.star;
  if (!o.hgraph.empty()) return "H:" + o.hgraph;
  if (!o.symbol.empty()) return o.symbol;
  return o.file;
}

WeightedTree tree_input(const Options& o) {
  if (!o.tree.empty()) return parse_tree_spec(o.tree);
  if (!o.star.empty()) return star_diagram(parse_uints(o.star));
  if (!o.hgraph.empty()) return parse_tree_spec("H:" + o.hgraph);
  CoxeterDiagram d;
  if (!o.symbol.empty())
    d = parse_coxeter_symbol(o.symbol);
  else if (!o.file.empty())
    d = parse_diagram_file(read_file(o.file));
  else
    throw UsageError("one of --tree, --star, --hgraph, --symbol or --file is required");
  auto t = as_tree(d);
  if (!t) throw std::invalid_argument("diagram is not a tree");
  return *t;
}

SalemList salem_input(const Options& o) {
  if (!o.list.empty()) return load_salem_list(o.list, o.width);
  if (auto path = default_salem_list_path()) return load_salem_list(*path, o.width);
  return bundled_salem_list(o.width);
}

// ---------------------------------------------------------------------------
// Commands. Each returns the payload and sets `pass` for verifications.

json cmd_growth(const Options& o) {
  json p;
  GrowthFunction f;
  if (!o.symbol.empty() + !o.file.empty() + !o.polygon.empty() != 1)
    throw UsageError("growth needs exactly one of --symbol, --file or --polygon");
  if (!o.polygon.empty()) {
    const auto angles = parse_uints(o.polygon);
    p["input"] = "polygon " + o.polygon;
    f = steinberg_growth(polygon_diagram(angles));
    if (polygon_is_hyperbolic(angles) && polygon_growth(angles) != f) throw std::logic_error("polygon formula disagrees with the subset sum");
  } else {
    const CoxeterDiagram d = o.symbol.empty() ? parse_diagram_file(read_file(o.file)) : parse_coxeter_symbol(o.symbol);
    p["input"] = o.symbol.empty() ? o.file : o.symbol;
    p["rank"] = d.rank();
    f = steinberg_growth(d);
  }
  const CyclotomicSplit split = strip_cyclotomic(f.denominator());
  p["numerator"] = f.numerator().to_text();
  p["denominator"] = f.denominator().to_text();
  p["denominator_core"] = normalize_primitive(split.core).to_text();
  p["cyclotomic_factors"] = factors_json(split.factors);
  if (f.denominator().is_constant()) {
    p["growth_type"] = "finite";
    p["group_order"] = Integer(f.numerator().evaluate(Integer(1)) / f.denominator().constant_term()).get_str();
    p["growth_rate"] = nullptr;
  } else {
    try {
      const RootInterval rate = growth_rate(f, o.width);
      p["growth_type"] = "exponential";
      p["growth_rate"] = interval_json(rate);
      p["classification"] = class_json(classify(normalize_primitive(split.core)));
    } catch (const NotExponentialGrowth&) {
      p["growth_type"] = "polynomial";
      p["growth_rate"] = nullptr;
    }
  }
  if (o.series > 0) {
    json s = json::array();
    for (const auto& a : series_coefficients(f, o.series)) s.push_back(a.get_str());
    p["series"] = s;
  }
  return p;
}

json cmd_coxtrans(const Options& o) {
  const WeightedTree t = tree_input(o);
  json p{{"input", describe_tree_input(o)}, {"vertices", t.size()}};
  try {
    const BipartiteCoxeter b = bipartite_coxeter_matrix(t);
    const IntPoly phi = char_poly_recursive(t);
    if (phi != b.char_poly) throw std::logic_error("recursion disagrees with the bipartite determinant");
    const CyclotomicSplit split = strip_cyclotomic(phi);
    p["first_class"] = b.first;
    p["second_class"] = b.second;
    p["char_poly"] = phi.to_text();
    p["core"] = normalize_primitive(split.core).to_text();
    p["cyclotomic_factors"] = factors_json(split.factors);
    p["spectral_radius"] = interval_json(spectral_radius_coxeter(t, o.width));
    if (split.core.degree() > 0) p["classification"] = class_json(classify(normalize_primitive(split.core)));
  } catch (const InexactWeightError&) {
    const IntervalPoly ip = char_poly_interval(t, o.width);
    json c = json::array();
    for (std::size_t i = 0; i < ip.size(); ++i)
      c.push_back({{"low", to_decimal(ip.low[i], 12, -1)}, {"high", to_decimal(ip.high[i], 12, 1)}});
    p["char_poly_interval"] = c;
    p["spectral_radius"] = nullptr;
  }
  return p;
}

json radius_rows_json(const std::vector<RadiusRow>& rows, bool& pass) {
  json out = json::array();
  pass = true;
  for (const auto& r : rows) {
    char expected[32];
    std::snprintf(expected, sizeof expected, "%.7f", r.expected);
    out.push_back({{"graph", r.graph}, {"expected", expected}, {"computed", interval_json(r.radius)}, {"pass", r.pass}});
    pass = pass && r.pass;
  }
  return out;
}

json cmd_spectra(const Options& o, bool& pass) {
  if (o.table1) return {{"reference_radii", radius_rows_json(reference_radii(o.width), pass)}};
  const WeightedTree t = tree_input(o);
  json p{{"input", describe_tree_input(o)}, {"vertices", t.size()}};
  const IntPoly chi = coxeter_adjacency_char_poly(t);
  p["adjacency_char_poly"] = chi.to_text();
  p["spectral_radius"] = interval_json(t.all_weights(Weight(3)) ? spectral_radius_adjacency(t, o.width)
                                                                  : isolate_largest_real_root(chi, o.width));
  if (t.all_weights(Weight(3))) {
    const RootInterval lambda = spectral_radius_coxeter(t, o.width);
    p["coxeter_spectral_radius"] = interval_json(lambda);
  }
  return p;
}

json cmd_classify(const Options& o) {
  if (o.poly.empty()) throw UsageError("classify needs --poly");
  const IntPoly p = parse_poly(o.poly);
  const CyclotomicSplit split = strip_cyclotomic(p);
  json out{{"input", p.to_text()}, {"pretty", p.pretty()}, {"reciprocity", to_string(reciprocity_type(p))},
           {"core", normalize_primitive(split.core).to_text()}, {"cyclotomic_factors", factors_json(split.factors)}};
  out["classification"] = class_json(classify(p));
  return out;
}

json entry_json(const SalemEntry& e) {
  json j{{"poly", e.poly.to_text()}, {"root", interval_json(e.root)}};
  if (!e.hint.empty()) {
    j["hint"] = e.hint;
    j["hint_consistent"] = e.hint_consistent;
  }
  if (e.line > 0) j["line"] = e.line;
  return j;
}

json entries_json(const std::vector<SalemEntry>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(entry_json(e));
  return out;
}

json cmd_salem(const Options& o) {
  if (o.search) {
    if (o.target.empty()) throw UsageError("--search needs --target");
    const SalemEntry target = make_salem_entry(parse_poly(o.target), o.width);
    const std::size_t k = o.max_k ? o.max_k : 6;
    const unsigned pm = o.max_p ? o.max_p : 12;
    const RealizationSearch s = polygon_realization_search(target, k, pm, o.width, o.threads);
    json matches = json::array();
    for (const auto& m : s.matches)
      matches.push_back({{"angles", angles_json(m.angles)},
                         {"delta", m.delta.to_text()},
                         {"rate", interval_json(m.rate)},
                         {"core_equals_target", m.core_equals_target}});
    return {{"target", entry_json(target)}, {"max_k", k},          {"max_p", pm},
            {"examined", s.examined},       {"pruned", s.pruned}, {"matches", matches}};
  }
  if (!o.target.empty()) throw UsageError("--target is only used with --search");
  const SalemList list = salem_input(o);
  json p{{"source", list.source}, {"bundled", list.bundled}, {"entries", list.entries.size()}};
  json rejected = json::array();
  for (const auto& r : list.rejected) rejected.push_back({{"line", r.line}, {"text", r.text}, {"reason", r.reason}});
  if (!o.gap) {
    p["list"] = entries_json(list.entries);
    p["rejected"] = rejected;
    return p;
  }
  const GapReport g = gap_report(list, o.width);
  p["rejected"] = rejected.size();
  p["tau_triangle_237"] = interval_json(g.tau_triangle);
  p["tau_square_38"] = interval_json(g.tau_square);
  p["below"] = entries_json(g.below);
  p["at_tau_triangle"] = entries_json(g.at_tau_triangle);
  p["band"] = entries_json(g.band);
  p["at_or_above"] = entries_json(g.at_or_above);
  p["tau_square_in_list"] = g.tau_square_rank.has_value();
  if (g.ordinal_claims_available) {
    p["tau_square_rank"] = g.tau_square_rank ? json(*g.tau_square_rank) : json(nullptr);
    p["below_tau_353"] = g.below_353;
  } else {
    p["tau_square_rank"] = nullptr;
    p["below_tau_353"] = nullptr;
  }
  p["notices"] = g.notices;
  return p;
}

json cmd_verify(const std::string& which, const Options& o, bool& pass) {
  if (which == "delta-phi") {
    const std::size_t k = o.max_k ? o.max_k : 5;
    const unsigned pm = o.max_p ? o.max_p : 8;
    const DeltaPhiSweep s = verify_delta_eq_phi_sweep(k, pm, o.threads);
    pass = s.pass();
    json failures = json::array();
    for (const auto& f : s.failures) failures.push_back(join(f));
    return {{"max_k", k}, {"max_p", pm}, {"checked", s.checked}, {"failures", failures}, {"pass", pass}};
  }
  if (which == "theorem2") {
    const std::size_t k = o.max_k ? o.max_k : 5;
    const unsigned pm = o.max_p ? o.max_p : 8;
    const PolygonStarSweep s = verify_polygon_star_sweep(k, pm, o.width, o.threads);
    pass = s.pass();
    json failures = json::array();
    for (const auto& r : s.rows)
      if (!r.pass())
        failures.push_back({{"angles", join(r.angles)},
                            {"delta_equals_phi", r.delta_equals_phi},
                            {"intervals_overlap", r.intervals_overlap},
                            {"same_core", r.same_core}});
    return {{"max_k", k}, {"max_p", pm}, {"polygons", s.rows.size()}, {"failures", failures}, {"pass", pass}};
  }
  if (which == "second-minimal") {
    const std::size_t k = o.max_k ? o.max_k : 5;
    const unsigned pm = o.max_p ? o.max_p : 9;
    const SecondMinimalReport r = verify_second_minimal_polygon(k, pm, o.width, o.threads);
    pass = r.pass;
    auto group = [](const std::vector<PolygonComparison>& v) {
      std::size_t below = 0, equal = 0, above = 0;
      for (const auto& c : v) (c.versus_minimum < 0 ? below : c.versus_minimum == 0 ? equal : above) += 1;
      json at = json::array();
      for (const auto& c : v)
        if (c.versus_minimum <= 0) at.push_back({{"angles", join(c.angles)}, {"versus_tau_38", c.versus_minimum}});
      return json{{"count", v.size()}, {"below", below}, {"equal", equal}, {"above", above}, {"not_above", at}};
    };
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back({{"name", c.name}, {"pass", c.pass}});
    return {{"max_k", k},
            {"max_p", pm},
            {"tau_38", interval_json(r.tau_38)},
            {"f_poly", r.f_poly.to_text()},
            {"f_roots_in_unit_interval", r.f_roots_in_unit_interval},
            {"triangles", group(r.triangles)},
            {"quadrilaterals", group(r.quadrilaterals)},
            {"larger", group(r.larger)},
            {"certificates", certs},
            {"pass", pass}};
  }
  if (which == "prop52") {
    const Prop52Report r = prop52_pipeline({o.rmax, o.jmax}, o.threads);
    pass = r.pass;
    json failing = json::array();
    for (const auto& c : r.trees.items)
      if (!c.pass) failing.push_back(c.item.name());
    json brackets = json::array();
    for (const auto& b : r.trees.brackets) brackets.push_back({{"claim", b.claim}, {"pass", b.pass}});
    return {{"rmax", o.rmax},
            {"jmax", o.jmax},
            {"lambda0", interval_json(r.lambda0)},
            {"lambda0_below_1_35999", r.lambda_below_threshold},
            {"alpha0", interval_json(r.alpha0)},
            {"alpha0_polynomial", r.trees.alpha_poly.to_text()},
            {"alpha0_below_sqrt_2_plus_sqrt5", r.alpha_below_bound},
            {"trees_checked", r.trees.items.size()},
            {"trees_failing", failing},
            {"brackets", brackets},
            {"assumptions", r.trees.assumptions},
            {"cited_steps", r.cited_steps},
            {"pass", pass}};
  }
  if (which == "table1") return {{"reference_radii", radius_rows_json(reference_radii(o.width), pass)}, {"pass", pass}};
  if (which == "chain-fig1") {
    const ChainReport r = verify_growth_chain({"[3,8]", "[3,inf]", "[(3^2,inf)]"}, o.width);
    pass = r.pass;
    json links = json::array();
    for (const auto& l : r.links)
      links.push_back({{"symbol", l.symbol}, {"rate", interval_json(l.rate)}, {"versus_next", to_string(l.versus_next)}});
    return {{"chain", links}, {"pass", pass}};
  }
  throw UsageError("unknown verification '" + which + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact growth series, Coxeter transformations and Salem numbers", "coxgrowth"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_out, "Machine-readable output");
  app.add_flag("--no-meta", o.no_meta, "Omit the meta block (timestamp, version)");
  app.add_option("--width", o.width_text, "Isolation width as a rational or decimal");
  app.add_option("--threads", o.threads, "Worker threads (0 = hardware)");

  auto* growth = app.add_subcommand("growth", "Growth function and growth rate");
  growth->add_option("--symbol", o.symbol, "Coxeter symbol, e.g. [3,5,3]");
  growth->add_option("--file", o.file, "Diagram file");
  growth->add_option("--polygon", o.polygon, "Polygon angle parameters, e.g. 2,3,7");
  growth->add_option("--series", o.series, "Print this many series coefficients");

  auto add_tree_options = [&](CLI::App* sub) {
    sub->add_option("--tree", o.tree, "H:i,j,k or star:p1,...");
    sub->add_option("--star", o.star, "Star arm parameters");
    sub->add_option("--hgraph", o.hgraph, "H-graph parameters i,j,k");
    sub->add_option("--symbol", o.symbol, "Coxeter symbol of a tree diagram");
    sub->add_option("--file", o.file, "Diagram file of a tree");
  };
  auto* coxtrans = app.add_subcommand("coxtrans", "Characteristic polynomial of a Coxeter transformation");
  add_tree_options(coxtrans);
  auto* spectra = app.add_subcommand("spectra", "Adjacency spectral radius of a tree");
  add_tree_options(spectra);
  spectra->add_flag("--table1", o.table1, "Reference spectral radii");

  auto* classify_cmd = app.add_subcommand("classify", "Salem, 2-Salem and Perron labels");
  classify_cmd->add_option("--poly", o.poly, "Ascending coefficients")->required();

  auto* salem = app.add_subcommand("salem", "Salem list queries");
  salem->add_option("--list", o.list, "List file (default: $COXGROWTH_SALEM_LIST, else the bundled list)");
  salem->add_flag("--gap", o.gap, "Partition against the two smallest polygon growth rates");
  salem->add_option("--target", o.target, "Target polynomial for --search");
  salem->add_flag("--search", o.search, "Search polygons realizing the target");

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  verify->fallthrough();
  std::vector<std::string> names{"delta-phi", "second-minimal", "prop52", "theorem2", "table1", "chain-fig1"};
  for (const auto& n : names) verify->add_subcommand(n)->fallthrough();
  for (auto* sub : {salem, verify}) {
    sub->add_option("--max-k", o.max_k, "Largest polygon size");
    sub->add_option("--max-p", o.max_p, "Largest angle parameter");
  }
  verify->add_option("--rmax", o.rmax, "Largest star arm parameter");
  verify->add_option("--jmax", o.jmax, "Longest H-graph spine");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  std::string command;
  json payload;
  bool pass = true;
  bool is_verify = false;
  try {
    o.width = parse_rational(o.width_text);
    if (o.width <= 0) throw UsageError("--width must be positive");
    if (o.threads > 0) set_default_threads(o.threads);
    if (growth->parsed()) {
      command = "growth";
      payload = cmd_growth(o);
    } else if (coxtrans->parsed()) {
      command = "coxtrans";
      payload = cmd_coxtrans(o);
    } else if (spectra->parsed()) {
      command = "spectra";
      payload = cmd_spectra(o, pass);
      is_verify = o.table1;
    } else if (classify_cmd->parsed()) {
      command = "classify";
      payload = cmd_classify(o);
    } else if (salem->parsed()) {
      command = "salem";
      payload = cmd_salem(o);
    } else {
      const std::string which = verify->get_subcommands().front()->get_name();
      command = "verify " + which;
      is_verify = true;
      payload = cmd_verify(which, o, pass);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (o.json_out) {
      json j{{"command", command}, {"error", e.what()}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const bool ok = !is_verify || pass;
  if (o.json_out) {
    json j{{"command", command}, {"ok", ok}, {"payload", payload}};
    if (!o.no_meta) {
      const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      char stamp[32];
      std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
      j["meta"] = {{"version", kVersion}, {"timestamp", stamp}, {"width", o.width_text}, {"threads", default_threads()}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << command << "\n";
    render_text(payload, out, 1);
    if (is_verify) out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace coxgrowth::cli
