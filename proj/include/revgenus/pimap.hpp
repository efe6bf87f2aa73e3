#pragma once

#include <string>
#include <vector>

#include "revgenus/fatgraph.hpp"
#include "revgenus/sigperm.hpp"

namespace revgenus {

// A unicellular fatgraph on 2n+2 sectors whose center vertex is
// (2n+1, 2n-1, ..., 3, 1). The single boundary cycle is read as a sequence of
// positions: x_1 is sector 1 and x_{k+1} = gamma^-1(x_k), so gamma is
// (x_{2n+2}, ..., x_1). Odd positions carry odd labels, even positions even
// labels; every ribbon joins one center corner to one external corner.
class PiMap {
 public:
  /// The map of the empty permutation: sectors 1 and 2, both degree one.
  PiMap();

  /// Validates g and indexes its boundary. Throws MalformedPiMap.
  static PiMap from_graph(Fatgraph g);

  const Fatgraph& graph() const noexcept { return g_; }
  int n() const noexcept { return n_; }

  /// Signed center listing starting at 2n+1, e.g. (-11, 9, -7, 5, 3, 1).
  std::vector<int> center() const;
  std::string center_string() const;

  /// Signed cycles of the non-center vertices, smallest label first.
  std::vector<std::vector<int>> external_vertices() const;

  /// Signed labels x_{2n+2}, ..., x_1.
  std::vector<int> boundary_order() const;

  /// Unsigned label at a boundary position 1..2n+2.
  int sector_at(int position) const;
  int position_of(int label) const;

  std::vector<Ribbon> ribbons() const { return extract_ribbons(g_); }

  friend bool operator==(const PiMap& a, const PiMap& b) { return a.g_ == b.g_; }

 private:
  struct Unchecked {};
  explicit PiMap(Unchecked) {}

  Fatgraph g_;
  int n_ = 0;
  std::vector<int> at_;   // position -> label
  std::vector<int> pos_;  // label -> position
};

/// Canonical representative of the class of b.
PiMap to_pimap(const SignedPermutation& b);

/// Reads odd positions 3, 5, ..., 2n+1. Throws MalformedPiMap if they do not
/// spell a signed permutation.
SignedPermutation from_pimap(const PiMap& p);

/// Removes the degree-one external vertex (s) together with its ribbon and
/// one center sector, then relabels. Throws NotExternal or UnknownVertex.
PiMap remove_leaf(const PiMap& p, int s);

/// Removes degree-one external vertices (and their ribbons) until none are
/// left or n reaches 0. Genus and reversal distance are unchanged.
PiMap reduce(const PiMap& p);

/// Renumbers even labels so position 2i carries 2i, then flips every external
/// vertex whose smallest label is clockwise.
PiMap canonicalize(const PiMap& p);

int genus(const PiMap& p);

/// Multi-line text: center, external vertices, ribbons with twist and kind.
std::string dump(const PiMap& p);

}  // namespace revgenus
