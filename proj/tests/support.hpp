#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "revgenus/fatgraph.hpp"
#include "revgenus/oracle.hpp"
#include "revgenus/pimap.hpp"
#include "revgenus/sigperm.hpp"

namespace support {

using revgenus::Fatgraph;
using revgenus::PiMap;
using revgenus::SignedPermutation;

inline SignedPermutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  for (int& x : v)
    if (rng() & 1) x = -x;
  return SignedPermutation(std::move(v));
}

inline std::vector<SignedPermutation> all_perms(int n) {
  std::uint64_t count = 1;
  for (int k = 2; k <= n; ++k) count *= k;
  count <<= n;
  std::vector<SignedPermutation> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(revgenus::unrank(n, r));
  return out;
}

/// A random connected fatgraph with `ribbons` ribbons: random vertex
/// rotations, corner pairing and twists; orientations come from tracing.
inline Fatgraph random_fatgraph(std::mt19937_64& rng, int ribbons, bool allow_twists = true) {
  const int size = 2 * ribbons;
  for (;;) {
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    revgenus::RibbonGraph r;
    r.sigma.assign(size + 1, 0);
    r.partner.assign(size + 1, 0);
    r.twisted.assign(size + 1, 0);
    // Cut the shuffled labels into random cycles.
    std::vector<int> vertex_of(size + 1);
    int vertices = 0;
    for (int start = 0; start < size; ++vertices) {
      const int len = 1 + static_cast<int>(rng() % 3);
      const int end = std::min(size, start + len);
      for (int k = start; k < end; ++k) {
        r.sigma[order[k]] = order[k + 1 < end ? k + 1 : start];
        vertex_of[order[k]] = vertices;
      }
      start = end;
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> root(vertices);
    std::iota(root.begin(), root.end(), 0);
    const auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    int merged = 0;
    for (int k = 0; k < size; k += 2) {
      r.partner[order[k]] = order[k + 1];
      r.partner[order[k + 1]] = order[k];
      const char tw = allow_twists ? static_cast<char>(rng() & 1) : 0;
      r.twisted[order[k]] = r.twisted[order[k + 1]] = tw;
      const int a = find(vertex_of[order[k]]), b = find(vertex_of[order[k + 1]]);
      if (a != b) {
        root[a] = b;
        ++merged;
      }
    }
    if (merged == vertices - 1) return revgenus::trace_boundaries(r);
  }
}

/// The map of b with a random subset of external vertices flipped.
inline PiMap scrambled_pimap(std::mt19937_64& rng, const SignedPermutation& b) {
  Fatgraph g = revgenus::to_pimap(b).graph();
  for (const auto& v : g.vertices())
    if (v.front() % 2 == 0 && (rng() & 1)) g = revgenus::flip_vertex(g, v);
  return PiMap::from_graph(std::move(g));
}

// Small maps built to exhibit specific component and hurdle structures.
namespace fixtures {

// Six orientable components C1..C6 in order of their largest point.
// C1 nests in C2, C3 in C4, C2 and C4 in different gaps of C5, all in C6.
inline const char* const kHurdleA = "2,11,14,16,15,17,13,18,12,19,3,5,7,6,8,4,9,10,20,1,21";
// Same shape, but C2 and C4 share a gap of C5.
inline const char* const kHurdleB = "2,4,6,8,7,9,5,10,11,13,15,14,16,12,17,18,3,19,1,20";
// C1, C2 inside C3 and not separated by it.
inline const char* const kContractA = "2,1,3,6,5,4,7,9,8";
// C1, C2 inside C3 and separated by it.
inline const char* const kContractB = "3,1,2,4,11,5,6,9,8,7,10";
// Irreducible non-orientable map whose first m-ribbon slice leaves two
// orientable components.
inline const char* const kAlter = "-3,-1,5,4,6,2";
// External vertices (6,10) and (8,-12) cross; (6,10) and (2,-4) do not.
inline const char* const kCross = "-1,2,-4,-5,3";
// Two components with points {1,2,3} and {0,4,5}.
inline const char* const kTwoComponents = "-4,-2,3,-1,-5";
// Three and five framed hurdles side by side; every hurdle is super.
inline const char* const kFortress3 = "2,4,3,5,1,6,8,10,9,11,7,12,14,16,15,17,13,18";
inline const char* const kFortress5 =
    "2,4,3,5,1,6,8,10,9,11,7,12,14,16,15,17,13,18,20,22,21,23,19,24,26,28,27,29,25,30";

}  // namespace fixtures

}  // namespace support
