#pragma once

// Salem-number list files, the gap between the two smallest polygon growth
// rates, and the search for polygons realizing a given Salem number.

#include "coxgrowth/exactpoly.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxgrowth {

/// Malformed line in a list file; line numbers start at 1.
class SalemListError : public std::runtime_error {
public:
  SalemListError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

struct SalemEntry {
  IntPoly poly;       // monic, reciprocal, no cyclotomic factor
  RootInterval root;  // the unique root above 1
  std::string hint;   // decimal from the file; never used for ordering
  bool hint_consistent = true;
  std::size_t line = 0;  // 0 when not read from a file
};

struct RejectedEntry {
  std::size_t line = 0;
  std::string text;
  std::string reason;
};

struct SalemList {
  std::string source;
  bool loaded = false;
  bool bundled = false;
  std::vector<SalemEntry> entries;  // ascending by certified root
  std::vector<RejectedEntry> rejected;
};

/// Reason the polynomial cannot be the minimal polynomial of a Salem number,
/// or nullopt when the root counts fit: reciprocal, monic, no cyclotomic
/// factor, one root outside and one inside the unit circle, the rest on it.
std::optional<std::string> salem_incompatibility(const IntPoly& p);

/// Throws std::invalid_argument with the incompatibility reason.
SalemEntry make_salem_entry(const IntPoly& p, const Rational& width = default_width());

/// Lines `degree;c0,...,cd;approx`; blank lines and lines starting with '#' are skipped.
SalemList parse_salem_list(std::istream& in, const std::string& source, const Rational& width = default_width());
SalemList load_salem_list(const std::string& path, const Rational& width = default_width());

/// The three Salem numbers of degree 10 near the bottom of the known list.
SalemList bundled_salem_list(const Rational& width = default_width());
const char* bundled_salem_text();

/// Value of COXGROWTH_SALEM_LIST, if set and non-empty.
std::optional<std::string> default_salem_list_path();

struct GapReport {
  RootInterval tau_triangle;  // (2,3,7)
  RootInterval tau_square;    // [3,8]
  RootInterval tau_353;       // [3,5,3]
  std::vector<SalemEntry> below;
  std::vector<SalemEntry> at_tau_triangle;
  std::vector<SalemEntry> band;  // strictly between the two rates
  std::vector<SalemEntry> at_or_above;
  std::optional<std::size_t> tau_square_rank;  // 1-based position in the list
  std::size_t below_353 = 0;
  bool ordinal_claims_available = false;  // false for the bundled list
  std::vector<std::string> notices;
  [[nodiscard]] std::size_t total() const {
    return below.size() + at_tau_triangle.size() + band.size() + at_or_above.size();
  }
};

/// Partitions the list against the growth rates of the (2,3,7) triangle and [3,8].
GapReport gap_report(const SalemList& list, const Rational& width = default_width());

struct PolygonMatch {
  std::vector<unsigned> angles;  // cyclic order, least dihedral representative
  IntPoly delta;
  RootInterval rate;
  bool core_equals_target = false;
};

struct RealizationSearch {
  IntPoly target;
  std::size_t k_max = 0;
  unsigned p_max = 0;
  std::size_t examined = 0;  // multisets whose rate was computed
  std::size_t pruned = 0;    // branches cut because the rate already exceeds the target
  std::vector<PolygonMatch> matches;
};

/// Hyperbolic polygons with at most k_max vertices and parameters at most
/// p_max whose growth rate is the target Salem number.
RealizationSearch polygon_realization_search(const SalemEntry& target, std::size_t k_max, unsigned p_max,
                                             const Rational& width = default_width(), std::size_t threads = 0);

/// Distinct cyclic arrangements of a multiset up to rotation and reflection.
std::vector<std::vector<unsigned>> dihedral_classes(std::vector<unsigned> multiset);

}  // namespace coxgrowth
