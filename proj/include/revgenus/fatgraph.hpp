#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revgenus {

// Sector labels are 1..size(). A sector is counterclockwise (+1) or
// clockwise (-1); in cycle notation a clockwise sector prints as -label.
//
// sigma and gamma are plain permutations of labels. Cycle notation
// (a1,...,ak) means a1 -> a2 -> ... -> ak -> a1.
//
// Every sector is a wedge bounded by two sides: its "after" side, shared with
// the corner (x, sigma(x)), and its "before" side, shared with the corner
// (sigma^-1(x), x). A boundary walk leaves a counterclockwise sector through
// its after side and a clockwise one through its before side.
class Fatgraph {
 public:
  Fatgraph() = default;

  /// Index 0 of each vector is unused. Throws NotAFatgraph unless sigma and
  /// gamma are bijections of the same label set and omega holds only +/-1.
  /// The ribbon pairing itself is checked by extract_ribbons().
  Fatgraph(std::vector<int> sigma, std::vector<int> gamma, std::vector<int> omega);

  /// Builds from signed cycle notation. Labels must agree in sign between
  /// the two strings, e.g. ("(1,8,-3,5)(6)(2,-4,7)", "(1,2,-3,-4,5,6)(7,8)").
  static Fatgraph from_cycles(std::string_view sigma_cycles, std::string_view gamma_cycles);

  int size() const noexcept { return static_cast<int>(sigma_.size()) - 1; }
  int sigma(int x) const { return sigma_[x]; }
  int sigma_inv(int x) const { return sigma_inv_[x]; }
  int gamma(int x) const { return gamma_[x]; }
  int gamma_inv(int x) const { return gamma_inv_[x]; }
  int orientation(int x) const { return omega_[x]; }
  int signed_label(int x) const { return omega_[x] * x; }

  /// Cycles of sigma, each rotated to start at its smallest label, sorted by
  /// that label. Entries are unsigned labels.
  std::vector<std::vector<int>> vertices() const;
  std::vector<std::vector<int>> boundaries() const;

  std::string sigma_string() const;
  std::string gamma_string() const;

  /// Exact equality of sigma, gamma and orientations.
  friend bool operator==(const Fatgraph&, const Fatgraph&) = default;

 private:
  std::vector<int> sigma_, sigma_inv_, gamma_, gamma_inv_, omega_;
};

enum class RibbonKind { M, B };

/// The corner (x, sigma(x)); x and sigma(x) are unsigned labels.
struct Corner {
  int first = 0;
  int second = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct Ribbon {
  Corner a;
  Corner b;
  bool twisted = false;
  RibbonKind kind = RibbonKind::B;
};

/// Pairs every corner with its unique partner. Ribbons come back ordered by
/// the second label of their first corner; within a ribbon, corner a is the
/// one with the smaller second label. Throws NotAFatgraph when a corner has
/// no consistent partner.
std::vector<Ribbon> extract_ribbons(const Fatgraph& g);

/// Reverses the cyclic order of `vertex` (a sigma-cycle given in any
/// rotation) and negates its orientations; gamma is unchanged.
/// Throws UnknownVertex if `vertex` is not a sigma-cycle of g.
Fatgraph flip_vertex(const Fatgraph& g, std::span<const int> vertex);

/// Flips the vertex containing sector x.
Fatgraph flip_vertex_at(const Fatgraph& g, int x);

/// Exchanges sigma and gamma; orientations are kept.
Fatgraph dual(const Fatgraph& g);

struct EulerCounts {
  int genus = 0;
  int vertices = 0;
  int edges = 0;
  int boundaries = 0;
};

/// g from 2 - g - b = v - e, with e = size/2.
EulerCounts euler_genus(const Fatgraph& g);

/// Same orientations, and the same ribbons as sector sets with the same
/// twist and kind flags. Used to compare a graph with its dual, where sigma
/// and gamma trade places but each ribbon keeps its four sectors.
bool same_ribbon_structure(const Fatgraph& a, const Fatgraph& b);

/// Applies a relabeling (map[old] = new, index 0 unused) to every sector.
Fatgraph relabel(const Fatgraph& g, std::span<const int> map);

// -- Ribbon-level representation ---------------------------------------------
//
// A corner is keyed by its second sector: key k names (sigma^-1(k), k).
// Surgery on vertices is easiest here, because splitting or merging vertices
// at two sectors leaves the keys of all corners untouched.
struct RibbonGraph {
  std::vector<int> sigma;    // index 0 unused
  std::vector<int> partner;  // corner key -> partner corner key
  std::vector<char> twisted; // per corner key

  int size() const noexcept { return static_cast<int>(sigma.size()) - 1; }
};

RibbonGraph ribbon_graph(const Fatgraph& g);

/// Walks every boundary component and returns the resulting fatgraph. The
/// smallest label of each boundary component is traversed counterclockwise,
/// which fixes the orientation of every other sector on it.
Fatgraph trace_boundaries(const RibbonGraph& r);

}  // namespace revgenus
