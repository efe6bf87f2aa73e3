#pragma once

#include <string>
#include <vector>

#include "revgenus/pimap.hpp"

namespace revgenus {

// Center corners are indexed by their place in the center cycle read from
// sector 2n+1: corner (t, sigma(t)) has index (2n+1-t)/2, so indices run 0..n.
// An external vertex's attachment points are the indices of the center
// corners its ribbons reach.

/// A stretch of the center walked along sigma from `from` to `to`.
struct SectorInterval {
  int from = 0;
  int to = 0;
  friend bool operator==(const SectorInterval&, const SectorInterval&) = default;
};

struct Component {
  std::vector<std::vector<int>> vertices;  // signed cycles
  std::vector<int> points;                 // sorted attachment points
  std::vector<SectorInterval> intervals;   // maximal runs of consecutive points
  bool trivial = false;
  bool orientable = false;
  int genus = 0;

  int min_point() const { return points.front(); }
  int max_point() const { return points.back(); }
};

std::string to_string(const SectorInterval& iv);

/// Sorted attachment points of the external vertex containing `sector`.
/// Throws NotExternal for odd or out-of-range sectors.
std::vector<int> attachment_points(const PiMap& p, int sector);

/// True iff the two external vertices containing the given sectors
/// interleave around the center. A vertex never crosses itself.
bool sigma_crossing(const PiMap& p, int sector_a, int sector_b);

/// Crossing-connected groups of external vertices, ordered by smallest point.
std::vector<Component> components(const PiMap& p);

// Nontrivial orientable components ordered by largest point. Node C nests in
// C' when the span of C lies strictly inside the span of C'. Parent -1 is the
// virtual root above every top-level node.
struct HurdleForest {
  std::vector<Component> nodes;
  std::vector<int> parent;

  int size() const { return static_cast<int>(nodes.size()); }
  bool nested(int a, int b) const;  // a strictly inside b
  bool minimal(int a) const;
  /// Which gap of node c the node d sits in; 0 is the outer gap.
  int gap(int c, int d) const;
  /// Node c separates a and b when they sit in different gaps of c.
  bool separates(int c, int a, int b) const;
  /// Smallest node containing both a and b, or -1 for the root.
  int common_container(int a, int b) const;
  /// a, parent(a), ... up to and including `top` (or the top-level ancestor
  /// when top is -1).
  std::vector<int> chain(int a, int top) const;
};

HurdleForest orientable_forest(const std::vector<Component>& comps);
HurdleForest orientable_forest(const PiMap& p);

struct HurdleMarks {
  bool hurdle = false;
  bool super_hurdle = false;
};

struct HurdleReport {
  int h = 0;
  std::vector<HurdleMarks> marks;  // parallel to forest.nodes
  /// Hurdle node indices in forest order.
  std::vector<int> hurdle_nodes() const;
  bool all_super() const;
};

HurdleReport hurdles(const HurdleForest& f);

}  // namespace revgenus
