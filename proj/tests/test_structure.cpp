#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "revgenus/error.hpp"
#include "revgenus/structure.hpp"
#include "support.hpp"

using namespace revgenus;
namespace fx = support::fixtures;

namespace {

// Two point sets on a line cross when they interleave a < b < a' < b'.
bool interleave(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::pair<int, int>> merged;
  for (int x : a) merged.push_back({x, 0});
  for (int x : b) merged.push_back({x, 1});
  std::sort(merged.begin(), merged.end());
  // Look for the pattern 0,1,0,1 or 1,0,1,0 as a subsequence.
  for (int start = 0; start < 2; ++start) {
    int want = start, found = 0;
    for (const auto& m : merged)
      if (m.second == want) {
        ++found;
        want ^= 1;
      }
    if (found >= 4) return true;
  }
  return false;
}

std::vector<int> even_reps(const PiMap& p) {
  std::vector<int> out;
  for (const auto& v : p.external_vertices()) out.push_back(std::abs(v.front()));
  return out;
}

// Odd sectors met walking from `from` to `to` around the center, or along the
// boundary in the direction the orientation of `from` dictates.
std::vector<int> odd_walk(const PiMap& p, int from, int to, bool along_sigma) {
  const Fatgraph& g = p.graph();
  const bool forward = g.orientation(from) > 0;
  std::vector<int> out;
  for (int x = from;; x = along_sigma ? g.sigma(x) : forward ? g.gamma(x) : g.gamma_inv(x)) {
    if (x % 2 == 1) out.push_back(x);
    if (x == to) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Points of b all sit in one cyclic gap of a.
bool in_one_gap(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> gaps;
  for (int x : b) {
    const auto it = std::upper_bound(a.begin(), a.end(), x);
    gaps.insert(static_cast<int>(it - a.begin()) % static_cast<int>(a.size()));
  }
  return gaps.size() == 1;
}

}  // namespace

TEST_CASE("crossing fixture") {
  const PiMap p = to_pimap(parse(fx::kCross));
  CHECK(sigma_crossing(p, 6, 8));
  CHECK(sigma_crossing(p, 10, 12));
  CHECK_FALSE(sigma_crossing(p, 6, 2));
  CHECK_FALSE(sigma_crossing(p, 8, 4));
  CHECK_FALSE(sigma_crossing(p, 6, 10));
  CHECK_THROWS_AS(sigma_crossing(p, 3, 6), Error);
  CHECK_THROWS_AS(attachment_points(p, 14), Error);
}

TEST_CASE("crossing agrees with point interleaving") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const PiMap p = to_pimap(support::random_perm(rng, 1 + static_cast<int>(rng() % 8)));
    const auto reps = even_reps(p);
    for (int a : reps)
      for (int b : reps) {
        const bool want = a != b && interleave(attachment_points(p, a), attachment_points(p, b));
        CHECK(sigma_crossing(p, a, b) == want);
      }
  }
}

TEST_CASE("degree-one vertices never cross (exhaustive n <= 3)") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& b : support::all_perms(n)) {
      const PiMap p = to_pimap(b);
      for (const auto& v : p.external_vertices()) {
        if (v.size() != 1) continue;
        for (const auto& w : p.external_vertices()) CHECK_FALSE(sigma_crossing(p, std::abs(v[0]), std::abs(w[0])));
      }
    }
}

TEST_CASE("two-component fixture") {
  const auto comps = components(to_pimap(parse(fx::kTwoComponents)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].points == std::vector<int>{0, 4, 5});
  CHECK(comps[1].points == std::vector<int>{1, 2, 3});
  REQUIRE(comps[1].intervals.size() == 1);
  CHECK(to_string(comps[1].intervals[0]) == "[9->3]");
  // The other component is the whole center minus that stretch.
  REQUIRE(comps[0].intervals.size() == 2);
  CHECK(to_string(comps[0].intervals[0]) == "[11->9]");
  CHECK(to_string(comps[0].intervals[1]) == "[3->11]");
}

TEST_CASE("identity components are trivial") {
  const auto comps = components(to_pimap(SignedPermutation::identity(5)));
  CHECK(comps.size() == 6);
  for (const auto& c : comps) {
    CHECK(c.trivial);
    CHECK(c.genus == 0);
    CHECK(c.vertices.size() == 1);
  }
  const HurdleForest f = orientable_forest(to_pimap(SignedPermutation::identity(5)));
  CHECK(f.size() == 0);
  const HurdleReport h = hurdles(f);
  CHECK(h.h == 0);
  CHECK(h.marks.empty());
}

TEST_CASE("alternating fixture is one non-orientable component") {
  const PiMap p = reduce(to_pimap(parse(fx::kAlter)));
  const auto comps = components(p);
  REQUIRE(comps.size() == 1);
  CHECK_FALSE(comps[0].orientable);
  CHECK_FALSE(comps[0].trivial);
  CHECK(comps[0].genus == genus(p));
  int m = 0;
  for (const Ribbon& r : p.ribbons()) m += r.kind == RibbonKind::M;
  CHECK(m >= 2);
}

TEST_CASE("hurdle fixture A") {
  const HurdleForest f = orientable_forest(to_pimap(parse(fx::kHurdleA)));
  REQUIRE(f.size() == 6);
  CHECK(f.nested(0, 1));
  CHECK(f.nested(2, 3));
  CHECK_FALSE(f.nested(0, 3));
  for (int k = 0; k < 5; ++k) CHECK(f.nested(k, 5));
  CHECK(f.parent[5] == -1);
  CHECK(f.minimal(0));
  CHECK(f.minimal(2));
  CHECK_FALSE(f.minimal(5));
  CHECK(f.separates(4, 0, 2));
  CHECK(f.common_container(0, 2) == 4);
  CHECK(f.chain(0, 4) == std::vector<int>{0, 1, 4});

  const HurdleReport h = hurdles(f);
  CHECK(h.h == 3);
  CHECK(h.hurdle_nodes() == std::vector<int>{0, 2, 5});
  CHECK(h.marks[0].super_hurdle);
  CHECK(h.marks[2].super_hurdle);
  CHECK_FALSE(h.marks[5].super_hurdle);
  CHECK_FALSE(h.all_super());
}

TEST_CASE("hurdle fixture B") {
  const HurdleForest f = orientable_forest(to_pimap(parse(fx::kHurdleB)));
  REQUIRE(f.size() == 6);
  CHECK_FALSE(f.separates(4, 0, 2));
  const HurdleReport h = hurdles(f);
  CHECK(h.marks[5].hurdle);
  CHECK(h.marks[5].super_hurdle);
}

TEST_CASE("contraction fixtures") {
  const HurdleForest a = orientable_forest(to_pimap(parse(fx::kContractA)));
  REQUIRE(a.size() == 3);
  CHECK(a.common_container(0, 1) == 2);
  CHECK_FALSE(a.separates(2, 0, 1));

  const HurdleForest b = orientable_forest(to_pimap(parse(fx::kContractB)));
  REQUIRE(b.size() == 3);
  CHECK(b.common_container(0, 1) == 2);
  CHECK(b.separates(2, 0, 1));
}

TEST_CASE("component properties on random maps") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const PiMap p = to_pimap(support::random_perm(rng, 1 + static_cast<int>(rng() % 8)));
    const auto comps = components(p);

    // A partition of the external vertices, and of the attachment points.
    std::multiset<int> seen;
    std::vector<int> all_points;
    int genus_sum = 0;
    for (const auto& c : comps) {
      for (const auto& v : c.vertices) seen.insert(std::abs(v.front()));
      all_points.insert(all_points.end(), c.points.begin(), c.points.end());
      genus_sum += c.genus;
    }
    const auto reps = even_reps(p);
    CHECK(seen == std::multiset<int>(reps.begin(), reps.end()));
    std::sort(all_points.begin(), all_points.end());
    std::vector<int> expect(p.n() + 1);
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(all_points == expect);
    CHECK(genus_sum == genus(p));

    for (std::size_t i = 0; i < comps.size(); ++i) {
      // Any two components are side by side or nested inside one gap.
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (i != j) CHECK(in_one_gap(comps[i].points, comps[j].points));
      // Trivial components are exactly the single degree-one vertices.
      CHECK(comps[i].trivial == (comps[i].vertices.size() == 1 && comps[i].vertices[0].size() == 1));
    }

    // A block of consecutive center corners holding whole components spans
    // the same odd sectors around the center and along the boundary.
    const int n = p.n();
    for (int k1 = 0; k1 <= n; ++k1)
      for (int k2 = k1; k2 <= n; ++k2) {
        if (k1 == 0 && k2 == n) continue;
        bool closed = true;
        for (const auto& c : comps) {
          const auto inside = std::count_if(c.points.begin(), c.points.end(), [&](int x) { return x >= k1 && x <= k2; });
          closed = closed && (inside == 0 || inside == static_cast<long>(c.points.size()));
        }
        if (!closed) continue;
        const int from = 2 * n + 1 - 2 * k1;
        const int to = p.graph().sigma(2 * n + 1 - 2 * k2);
        CHECK(odd_walk(p, from, to, true) == odd_walk(p, from, to, false));
      }

    const HurdleForest f = orientable_forest(comps);
    const HurdleReport h = hurdles(f);
    int non_minimal = 0;
    for (int k : h.hurdle_nodes()) non_minimal += !f.minimal(k);
    CHECK(non_minimal <= 1);
    for (int k = 0; k < f.size(); ++k)
      if (f.minimal(k)) CHECK(h.marks[k].hurdle);
  }
}
