#include "revgenus/solver.hpp"

#include <algorithm>
#include <set>

#include "revgenus/error.hpp"

namespace revgenus {

namespace {

bool same_vertex(const Fatgraph& g, int x, int y) {
  for (int z = g.sigma(x);; z = g.sigma(z)) {
    if (z == y) return true;
    if (z == x) return false;
  }
}

void check_range(const PiMap& p, Reversal r) {
  if (r.i < 1 || r.i > r.j || r.j > p.n())
    throw Error(Errc::IndexOutOfRange, to_string(r) + " on n=" + std::to_string(p.n()));
}

// rho(i,j) whose acting sectors sit at even positions lo < hi.
Reversal reversal_between(int lo, int hi) { return {lo / 2, hi / 2 - 1}; }

Reversal reversal_for_sectors(const PiMap& p, int a, int b) {
  int lo = p.position_of(a), hi = p.position_of(b);
  if (lo > hi) std::swap(lo, hi);
  return reversal_between(lo, hi);
}

int smallest_label(const Component& c) {
  int best = 0;
  for (const auto& v : c.vertices)
    for (int x : v)
      if (best == 0 || std::abs(x) < best) best = std::abs(x);
  return best;
}

Reversal half_flip_in(const PiMap& p, const Component& c) {
  for (const auto& v : c.vertices) {
    if (v.size() < 2) continue;
    std::vector<int> pos;
    for (int x : v) pos.push_back(p.position_of(std::abs(x)));
    std::sort(pos.begin(), pos.end());
    for (std::size_t a = 0; a < pos.size(); ++a)
      for (std::size_t b = a + 1; b < pos.size(); ++b) {
        const Reversal r = reversal_between(pos[a], pos[b]);
        if (classify(p, r) == ActionKind::HalfFlip) return r;
      }
  }
  throw Error(Errc::InternalInvariant, "hurdle offers no half-flip");
}

std::set<std::vector<int>> orientable_point_sets(const std::vector<Component>& comps) {
  std::set<std::vector<int>> out;
  for (const Component& c : comps)
    if (c.orientable) out.insert(c.points);
  return out;
}

}  // namespace

const char* to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Glue: return "Glue";
    case ActionKind::Slice: return "Slice";
    case ActionKind::HalfFlip: return "HalfFlip";
  }
  return "?";
}

ActionKind classify(const PiMap& p, Reversal r) {
  check_range(p, r);
  const Fatgraph& g = p.graph();
  const int x = p.sector_at(2 * r.j + 2);
  const int y = p.sector_at(2 * r.i);
  if (!same_vertex(g, x, y)) return ActionKind::Glue;
  return g.orientation(x) != g.orientation(y) ? ActionKind::Slice : ActionKind::HalfFlip;
}

PiMap act(const PiMap& p, Reversal r) {
  const ActionKind kind = classify(p, r);
  const int x = p.sector_at(2 * r.j + 2);
  const int y = p.sector_at(2 * r.i);

  // Flipping external vertices keeps the class; bring X and Y to the
  // orientations the surgeries below assume.
  Fatgraph g = p.graph();
  switch (kind) {
    case ActionKind::Glue:
      if (g.orientation(x) < 0) g = flip_vertex_at(g, x);
      if (g.orientation(y) > 0) g = flip_vertex_at(g, y);
      break;
    case ActionKind::Slice:
    case ActionKind::HalfFlip:
      if (g.orientation(x) < 0) g = flip_vertex_at(g, x);
      break;
  }

  RibbonGraph rg = ribbon_graph(g);
  if (kind != ActionKind::HalfFlip) {
    std::swap(rg.sigma[x], rg.sigma[y]);
  } else {
    // v = (X, h1..hm, Y, ...) becomes (X, hm..h1, Y, ...). The corner keys
    // [h1..hm, Y] move to [Y, h1..hm] and every moved corner changes twist.
    std::vector<int> arc;
    for (int z = g.sigma(x); z != y; z = g.sigma(z)) arc.push_back(z);
    std::vector<int> old_keys = arc;
    old_keys.push_back(y);
    std::vector<int> new_keys{y};
    new_keys.insert(new_keys.end(), arc.begin(), arc.end());

    const RibbonGraph before = rg;
    int prev = x;
    for (auto it = arc.rbegin(); it != arc.rend(); ++it) {
      rg.sigma[prev] = *it;
      prev = *it;
    }
    rg.sigma[prev] = y;
    for (std::size_t k = 0; k < old_keys.size(); ++k) {
      const int q = before.partner[old_keys[k]];
      rg.partner[new_keys[k]] = q;
      rg.partner[q] = new_keys[k];
      rg.twisted[new_keys[k]] = !before.twisted[old_keys[k]];
      rg.twisted[q] = rg.twisted[new_keys[k]];
    }
  }
  return canonicalize(PiMap::from_graph(trace_boundaries(rg)));
}

Analysis analyze(const PiMap& p) {
  Analysis a;
  a.genus = genus(p);
  a.comps = components(p);
  a.forest = orientable_forest(a.comps);
  a.hurdles = hurdles(a.forest);
  const int h = a.hurdles.h;
  a.penalty = (h % 2 == 1 && h != 1 && a.hurdles.all_super()) ? 1 : 0;
  a.distance = a.genus + h + a.penalty;
  return a;
}

Reversal splice_choice(const PiMap& p, const Component& c) {
  if (c.trivial || c.orientable) throw Error(Errc::NotNonOrientable, "component has no m-ribbon to slice");
  const int n = p.n();
  const std::set<int> pts(c.points.begin(), c.points.end());

  struct Candidate {
    int key;  // smaller center label of the ribbon
    Corner outer;
  };
  std::vector<Candidate> cands;
  for (const Ribbon& rb : p.ribbons()) {
    if (rb.kind != RibbonKind::M) continue;
    const bool a_center = rb.a.second % 2 == 1;
    const Corner center = a_center ? rb.a : rb.b;
    const Corner outer = a_center ? rb.b : rb.a;
    if (!pts.count((2 * n + 1 - center.first) / 2)) continue;
    cands.push_back({std::min(center.first, center.second), outer});
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& u, const Candidate& v) { return u.key < v.key; });

  const int g0 = genus(p);
  const auto before = orientable_point_sets(components(p));
  for (const Candidate& cd : cands) {
    if (cd.outer.first == cd.outer.second) continue;
    const Reversal r = reversal_for_sectors(p, cd.outer.first, cd.outer.second);
    if (classify(p, r) != ActionKind::Slice) continue;
    const PiMap q = act(p, r);
    if (genus(q) != g0 - 1) continue;
    const auto after = orientable_point_sets(components(q));
    if (std::includes(before.begin(), before.end(), after.begin(), after.end())) return r;
  }
  throw Error(Errc::InternalInvariant, "no m-ribbon slice keeps the component non-orientable");
}

SafeChoice safe_reversal(const PiMap& p) {
  const Analysis a = analyze(p);
  const int h = a.hurdles.h;
  if (h == 0) throw Error(Errc::NoHurdles, "map has no hurdles");
  const std::vector<int> hs = a.hurdles.hurdle_nodes();
  const auto& nodes = a.forest.nodes;

  auto glue = [&](int u, int v, bool safe) {
    SafeChoice c;
    c.reversal = reversal_for_sectors(p, smallest_label(nodes[hs[u]]), smallest_label(nodes[hs[v]]));
    c.kind = ActionKind::Glue;
    c.is_safe = safe;
    return c;
  };

  if (h % 2 == 1) {
    for (int k : hs)
      if (!a.hurdles.marks[k].super_hurdle) return {half_flip_in(p, nodes[k]), ActionKind::HalfFlip, true};
    if (h == 3) return glue(0, 1, false);
    return glue(0, h / 2, true);
  }
  return glue(0, h / 2, true);
}

DistanceResult distance(const SignedPermutation& b) {
  const Analysis a = analyze(reduce(to_pimap(b)));
  return {a.distance, a.genus, a.hurdles.h, a.penalty};
}

SortingTrace sort_by_reversals(const SignedPermutation& b) {
  SortingTrace trace;
  SignedPermutation cur = b;
  PiMap p = to_pimap(b);
  const int cap = 2 * b.size() + 4;
  for (int step = 0; step <= cap; ++step) {
    const Analysis a = analyze(p);
    SortStep s;
    if (a.hurdles.h > 0) {
      const SafeChoice c = safe_reversal(p);
      s.reversal = c.reversal;
      s.kind = c.kind;
    } else {
      const Component* target = nullptr;
      for (const Component& c : a.comps)
        if (!c.trivial) {
          target = &c;
          break;
        }
      if (!target) break;
      s.reversal = splice_choice(p, *target);
      s.kind = ActionKind::Slice;
    }
    p = act(p, s.reversal);
    cur = apply_reversal(cur, s.reversal);
    if (from_pimap(p) != cur)
      throw Error(Errc::InternalInvariant, "map and permutation disagree after " + to_string(s.reversal));
    const Analysis after = analyze(p);
    s.genus_after = after.genus;
    s.hurdles_after = after.hurdles.h;
    trace.steps.push_back(s);
  }
  if (!cur.is_identity()) throw Error(Errc::InternalInvariant, "sorting stopped at " + cur.to_string());
  trace.final = cur;
  return trace;
}

}  // namespace revgenus
