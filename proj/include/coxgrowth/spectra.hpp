#pragma once

// Adjacency spectra of trees and the small-spectral-radius tree families.

#include "coxgrowth/diagram.hpp"
#include "coxgrowth/exactpoly.hpp"

#include <string>
#include <vector>

namespace coxgrowth {

/// det(tI - A) for a tree with all weights 3.
IntPoly adjacency_char_poly(const WeightedTree& tree);
/// Same for the Coxeter adjacency matrix (entries 2cos(pi/m)); weights 3, 4, 6, infinity.
IntPoly coxeter_adjacency_char_poly(const WeightedTree& tree);

RootInterval spectral_radius_adjacency(const WeightedTree& tree, const Rational& width = default_width());

/// Canonical string of an unrooted weighted tree (AHU encoding at the centre).
std::string canonical_form(const WeightedTree& tree);

struct TreeFamilyItem {
  std::string family;
  bool star = true;             // otherwise an H-graph
  std::vector<unsigned> params;  // star arms, or (i, j, k)
  WeightedTree tree{1, {}};

  [[nodiscard]] std::string name() const;
};

struct FamilyBounds {
  unsigned r_max = 25;  // largest star arm parameter
  unsigned j_max = 25;  // longest H-graph spine
};

/// Trees with adjacency spectral radius strictly between 2 and sqrt(2 + sqrt 5),
/// within bounds, one per isomorphism class.
std::vector<TreeFamilyItem> brouwer_neumaier_enumerate(const FamilyBounds& bounds);

struct LeafReplacement {
  WeightedTree input{1, {}};
  WeightedTree output{1, {}};
  IntPoly input_poly;   // Coxeter adjacency char poly
  IntPoly output_poly;  // 0/1 adjacency char poly
  IntPoly common;       // gcd
  RootInterval radius;  // largest root of the gcd
  bool pass = false;
};

/// Replaces the leaf on the single weight-4 edge by two weight-3 leaves and
/// certifies that the spectral radius is unchanged.
LeafReplacement weight4_leaf_replace(const WeightedTree& tree);

struct FamilyCheck {
  TreeFamilyItem item;
  RootInterval radius;
  int versus_alpha = 0;  // -1 below, +1 above
  int common_degree = 0;  // degree of gcd with the alpha polynomial
  bool pass = false;
};

struct BracketCheck {
  std::string claim;
  bool pass = false;
};

struct AlphaReport {
  FamilyBounds bounds;
  IntPoly alpha_poly;
  RootInterval alpha0;
  std::vector<FamilyCheck> items;
  std::vector<BracketCheck> brackets;
  std::vector<std::string> assumptions;  // extrapolations beyond the tested range
  bool pass = false;
};

/// lambda_poly: minimal polynomial of the Coxeter spectral radius lambda_0.
/// Certifies alpha_0 = sqrt(2 + lambda_0 + 1/lambda_0) is not an adjacency
/// eigenvalue of any enumerated tree; bounds must be at least 25.
AlphaReport verify_alpha0_not_tree_radius(const IntPoly& lambda_poly, const FamilyBounds& bounds,
                                          const Rational& width = Rational(1, Integer("1000000000000")),
                                          std::size_t threads = 0);

struct Prop52Report {
  RootInterval lambda0;
  bool lambda_below_threshold = false;  // lambda_0 < 1.35999
  RootInterval alpha0;
  bool alpha_below_bound = false;  // alpha_0 < sqrt(2 + sqrt 5)
  AlphaReport trees;
  std::vector<std::string> cited_steps;
  bool pass = false;
};

/// The [3,5,3] growth rate is not the spectral radius of a Coxeter transformation.
Prop52Report prop52_pipeline(const FamilyBounds& bounds = {}, std::size_t threads = 0);

struct RadiusRow {
  std::string graph;
  WeightedTree tree{1, {}};
  double expected = 0;  // 7-decimal reference value
  RootInterval radius;
  bool pass = false;  // |radius - expected| <= 5e-8 + width
};

/// Spectral radii of the eight reference graphs (stars and H-graphs near alpha_0).
std::vector<RadiusRow> reference_radii(const Rational& width = default_width());

}  // namespace coxgrowth
