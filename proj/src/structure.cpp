#include "revgenus/structure.hpp"

#include <algorithm>
#include <numeric>

#include "revgenus/error.hpp"

namespace revgenus {

namespace {

int corner_index(int n, int t) { return (2 * n + 1 - t) / 2; }

int corner_start(int n, int index) { return 2 * n + 1 - 2 * index; }

struct Attachments {
  std::vector<std::vector<int>> vertices;  // unsigned cycles of external vertices
  std::vector<std::vector<int>> points;
  std::vector<int> vertex_of;              // sector -> vertex index, -1 for center
};

Attachments attachments(const PiMap& p) {
  const Fatgraph& g = p.graph();
  const RibbonGraph r = ribbon_graph(g);
  Attachments a;
  a.vertex_of.assign(g.size() + 1, -1);
  for (const auto& v : g.vertices()) {
    if (v.front() % 2 == 1) continue;
    std::vector<int> pts;
    for (int x : v) {
      a.vertex_of[x] = static_cast<int>(a.vertices.size());
      pts.push_back(corner_index(p.n(), g.sigma_inv(r.partner[x])));
    }
    std::sort(pts.begin(), pts.end());
    a.vertices.push_back(v);
    a.points.push_back(std::move(pts));
  }
  return a;
}

bool interleave(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::pair<int, int>> merged;
  for (int x : a) merged.emplace_back(x, 0);
  for (int x : b) merged.emplace_back(x, 1);
  std::sort(merged.begin(), merged.end());
  int changes = 0;
  for (std::size_t k = 0; k < merged.size(); ++k)
    if (merged[k].second != merged[(k + 1) % merged.size()].second) ++changes;
  return changes >= 4;
}

int find(std::vector<int>& up, int x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}

bool inside(const Component& a, const Component& b) {
  return b.min_point() < a.min_point() && a.max_point() < b.max_point();
}

int gap_of(const Component& c, const Component& d) {
  const auto below = std::lower_bound(c.points.begin(), c.points.end(), d.min_point()) - c.points.begin();
  return static_cast<int>(below % static_cast<long>(c.points.size()));
}

// Hurdle flags over the nodes listed in `alive`.
std::vector<char> hurdle_flags(const std::vector<Component>& nodes, const std::vector<int>& alive) {
  std::vector<char> flag(nodes.size(), 0);
  std::vector<int> minimal, roots;
  for (int a : alive) {
    bool has_child = false, has_parent = false;
    for (int b : alive) {
      if (a == b) continue;
      has_child = has_child || inside(nodes[b], nodes[a]);
      has_parent = has_parent || inside(nodes[a], nodes[b]);
    }
    if (!has_child) {
      minimal.push_back(a);
      flag[a] = 1;
    }
    if (!has_parent) roots.push_back(a);
  }
  if (roots.size() == 1 && !flag[roots[0]]) {
    const int r = roots[0];
    bool one_gap = true;
    for (int m : minimal) one_gap = one_gap && gap_of(nodes[r], nodes[m]) == gap_of(nodes[r], nodes[minimal[0]]);
    if (one_gap) flag[r] = 1;
  }
  return flag;
}

}  // namespace

std::string to_string(const SectorInterval& iv) {
  return "[" + std::to_string(iv.from) + "->" + std::to_string(iv.to) + "]";
}

std::vector<int> attachment_points(const PiMap& p, int sector) {
  if (sector < 2 || sector > p.graph().size() || sector % 2 != 0)
    throw Error(Errc::NotExternal, "sector " + std::to_string(sector));
  const Attachments a = attachments(p);
  return a.points[a.vertex_of[sector]];
}

bool sigma_crossing(const PiMap& p, int sector_a, int sector_b) {
  for (int s : {sector_a, sector_b})
    if (s < 2 || s > p.graph().size() || s % 2 != 0) throw Error(Errc::NotExternal, "sector " + std::to_string(s));
  const Attachments a = attachments(p);
  const int va = a.vertex_of[sector_a];
  const int vb = a.vertex_of[sector_b];
  if (va == vb) return false;
  return interleave(a.points[va], a.points[vb]);
}

std::vector<Component> components(const PiMap& p) {
  const Fatgraph& g = p.graph();
  const int n = p.n();
  const Attachments a = attachments(p);
  const int k = static_cast<int>(a.vertices.size());
  std::vector<int> up(k);
  std::iota(up.begin(), up.end(), 0);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      if (interleave(a.points[u], a.points[v])) up[find(up, u)] = find(up, v);

  std::vector<Component> out;
  std::vector<int> slot(k, -1);
  for (int u = 0; u < k; ++u) {
    const int root = find(up, u);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    Component& c = out[slot[root]];
    std::vector<int> signed_cycle;
    for (int x : a.vertices[u]) signed_cycle.push_back(g.signed_label(x));
    c.vertices.push_back(std::move(signed_cycle));
    c.points.insert(c.points.end(), a.points[u].begin(), a.points[u].end());
  }

  for (Component& c : out) {
    std::sort(c.points.begin(), c.points.end());
    const int pts = static_cast<int>(c.points.size());
    const int verts = static_cast<int>(c.vertices.size());
    c.trivial = verts == 1 && pts == 1;
    c.genus = pts - verts;
    bool has_m = false;
    for (int q : c.points) {
      const int t = corner_start(n, q);
      has_m = has_m || g.orientation(t) != g.orientation(g.sigma(t));
    }
    c.orientable = !c.trivial && !has_m;
    for (int s = 0; s < pts;) {
      int e = s;
      while (e + 1 < pts && c.points[e + 1] == c.points[e] + 1) ++e;
      c.intervals.push_back({corner_start(n, c.points[s]), g.sigma(corner_start(n, c.points[e]))});
      s = e + 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) { return x.min_point() < y.min_point(); });
  return out;
}

bool HurdleForest::nested(int a, int b) const { return inside(nodes[a], nodes[b]); }

bool HurdleForest::minimal(int a) const {
  for (int b = 0; b < size(); ++b)
    if (b != a && nested(b, a)) return false;
  return true;
}

int HurdleForest::gap(int c, int d) const { return gap_of(nodes[c], nodes[d]); }

bool HurdleForest::separates(int c, int a, int b) const { return gap(c, a) != gap(c, b); }

int HurdleForest::common_container(int a, int b) const {
  for (int c = parent[a]; c >= 0; c = parent[c])
    if (c == b || nested(b, c)) return c;
  return -1;
}

std::vector<int> HurdleForest::chain(int a, int top) const {
  std::vector<int> out;
  for (int c = a; c >= 0; c = parent[c]) {
    out.push_back(c);
    if (c == top) break;
  }
  return out;
}

HurdleForest orientable_forest(const std::vector<Component>& comps) {
  HurdleForest f;
  for (const Component& c : comps)
    if (c.orientable) f.nodes.push_back(c);
  std::stable_sort(f.nodes.begin(), f.nodes.end(),
                   [](const Component& x, const Component& y) { return x.max_point() < y.max_point(); });
  f.parent.assign(f.nodes.size(), -1);
  for (int a = 0; a < f.size(); ++a) {
    int best = -1;
    for (int b = 0; b < f.size(); ++b) {
      if (b == a || !f.nested(a, b)) continue;
      if (best < 0 || f.nested(b, best)) best = b;
    }
    f.parent[a] = best;
  }
  return f;
}

HurdleForest orientable_forest(const PiMap& p) { return orientable_forest(components(p)); }

std::vector<int> HurdleReport::hurdle_nodes() const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(marks.size()); ++k)
    if (marks[k].hurdle) out.push_back(k);
  return out;
}

bool HurdleReport::all_super() const {
  for (const HurdleMarks& m : marks)
    if (m.hurdle && !m.super_hurdle) return false;
  return true;
}

HurdleReport hurdles(const HurdleForest& f) {
  HurdleReport rep;
  rep.marks.resize(f.nodes.size());
  std::vector<int> all(f.nodes.size());
  std::iota(all.begin(), all.end(), 0);
  const std::vector<char> base = hurdle_flags(f.nodes, all);
  for (int c : all) {
    if (!base[c]) continue;
    rep.marks[c].hurdle = true;
    ++rep.h;
    std::vector<int> rest;
    for (int d : all)
      if (d != c) rest.push_back(d);
    const std::vector<char> after = hurdle_flags(f.nodes, rest);
    for (int d : rest)
      if (after[d] && !base[d]) rep.marks[c].super_hurdle = true;
  }
  return rep;
}

}  // namespace revgenus
