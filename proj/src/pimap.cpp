#include "revgenus/pimap.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "revgenus/error.hpp"

namespace revgenus {

namespace {

std::string cycle_string(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(c[k]);
  }
  return s + ')';
}

Fatgraph empty_map_graph() {
  // sigma = (1)(2), gamma = (2,1)
  return Fatgraph({0, 1, 2}, {0, 2, 1}, {0, 1, 1});
}

// Corner sides as used by the ribbon-level representation; see fatgraph.cpp.
struct KeyedSide {
  int key;
  bool first;
};

}  // namespace

PiMap::PiMap() : PiMap(from_graph(empty_map_graph())) {}

PiMap PiMap::from_graph(Fatgraph g) {
  const int size = g.size();
  if (size < 2 || size % 2 != 0) throw Error(Errc::MalformedPiMap, "sector count must be even and positive");
  const int n = size / 2 - 1;
  const int top = 2 * n + 1;
  for (int k = 1; k <= n; ++k)
    if (g.sigma(2 * k + 1) != 2 * k - 1) throw Error(Errc::MalformedPiMap, "center is not (2n+1, ..., 3, 1)");
  if (g.sigma(1) != top) throw Error(Errc::MalformedPiMap, "center is not (2n+1, ..., 3, 1)");
  for (int e = 2; e <= size; e += 2)
    if (g.sigma(e) % 2 != 0) throw Error(Errc::MalformedPiMap, "external vertex holds an odd label");
  if (g.orientation(1) != 1) throw Error(Errc::MalformedPiMap, "sector 1 must be counterclockwise");

  PiMap p{Unchecked{}};
  p.n_ = n;
  p.at_.assign(size + 1, 0);
  p.pos_.assign(size + 1, 0);
  int x = 1;
  for (int k = 1; k <= size; ++k) {
    if (p.pos_[x] != 0) throw Error(Errc::MalformedPiMap, "boundary is not a single cycle");
    if ((x % 2) != (k % 2)) throw Error(Errc::MalformedPiMap, "label parity differs from its position");
    p.at_[k] = x;
    p.pos_[x] = k;
    x = g.gamma_inv(x);
  }
  if (x != 1) throw Error(Errc::MalformedPiMap, "boundary is not a single cycle");

  std::vector<Ribbon> ribbons;
  try {
    ribbons = extract_ribbons(g);
  } catch (const Error& e) {
    throw Error(Errc::MalformedPiMap, e.what());
  }
  for (const Ribbon& r : ribbons) {
    const bool a_center = r.a.second % 2 == 1;
    const bool b_center = r.b.second % 2 == 1;
    if (a_center == b_center) throw Error(Errc::MalformedPiMap, "ribbon not incident to both center and external");
  }
  p.g_ = std::move(g);
  return p;
}

std::vector<int> PiMap::center() const {
  std::vector<int> c;
  for (int l = 2 * n_ + 1; l >= 1; l -= 2) c.push_back(g_.signed_label(l));
  return c;
}

std::string PiMap::center_string() const { return cycle_string(center()); }

std::vector<std::vector<int>> PiMap::external_vertices() const {
  std::vector<std::vector<int>> out;
  for (const auto& v : g_.vertices()) {
    if (v.front() % 2 == 1) continue;
    std::vector<int> c;
    for (int x : v) c.push_back(g_.signed_label(x));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> PiMap::boundary_order() const {
  std::vector<int> out;
  for (int k = g_.size(); k >= 1; --k) out.push_back(g_.signed_label(at_[k]));
  return out;
}

int PiMap::sector_at(int position) const {
  if (position < 1 || position > g_.size()) throw Error(Errc::IndexOutOfRange, "position " + std::to_string(position));
  return at_[position];
}

int PiMap::position_of(int label) const {
  if (label < 1 || label > g_.size()) throw Error(Errc::IndexOutOfRange, "label " + std::to_string(label));
  return pos_[label];
}

PiMap to_pimap(const SignedPermutation& b) {
  const int n = b.size();
  const int size = 2 * n + 2;
  std::vector<int> label_at(size + 1, 0);
  std::vector<int> omega(size + 1, 0);
  label_at[1] = 1;
  omega[1] = 1;
  for (int i = 1; i <= n; ++i) {
    const int y = b.at(i);
    label_at[2 * i + 1] = 2 * std::abs(y) + 1;
    omega[2 * std::abs(y) + 1] = y > 0 ? 1 : -1;
  }
  for (int i = 1; i <= n + 1; ++i) label_at[2 * i] = 2 * i;

  // The pre-dual graph: one vertex listing the boundary positions downward,
  // and one ribbon per odd label joining it to the next lower odd label.
  RibbonGraph r;
  r.sigma.assign(size + 1, 0);
  r.partner.assign(size + 1, 0);
  r.twisted.assign(size + 1, 0);
  for (int k = 1; k < size; ++k) r.sigma[label_at[k + 1]] = label_at[k];
  r.sigma[label_at[1]] = label_at[size];

  auto exit_of = [&](int s) { return omega[s] > 0 ? KeyedSide{r.sigma[s], true} : KeyedSide{s, false}; };
  auto entry_of = [&](int t) { return omega[t] > 0 ? KeyedSide{t, false} : KeyedSide{r.sigma[t], true}; };
  const int top = 2 * n + 1;
  for (int s = 1; s <= top; s += 2) {
    const int t = s == 1 ? top : s - 2;
    const KeyedSide e = exit_of(s);
    const KeyedSide f = entry_of(t);
    if (r.partner[e.key] != 0 || r.partner[f.key] != 0)
      throw Error(Errc::InternalInvariant, "corner used by two ribbons");
    r.partner[e.key] = f.key;
    r.partner[f.key] = e.key;
    r.twisted[e.key] = r.twisted[f.key] = e.first == f.first;
  }

  const Fatgraph g = trace_boundaries(r);
  for (int s = 1; s <= top; s += 2) {
    const int t = s == 1 ? top : s - 2;
    if (g.gamma(s) != t || g.orientation(s) != omega[s])
      throw Error(Errc::InternalInvariant, "pre-dual boundary does not follow the odd labels");
  }
  return PiMap::from_graph(dual(g));
}

SignedPermutation from_pimap(const PiMap& p) {
  const int n = p.n();
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) {
    const int x = p.sector_at(2 * i + 1);
    v[i - 1] = p.graph().orientation(x) * ((x - 1) / 2);
  }
  try {
    return SignedPermutation(std::move(v));
  } catch (const Error& e) {
    throw Error(Errc::MalformedPiMap, e.what());
  }
}

PiMap canonicalize(const PiMap& p) {
  const int size = p.graph().size();
  std::vector<int> map(size + 1, 0);
  for (int x = 1; x <= size; ++x) map[x] = x % 2 == 1 ? x : p.position_of(x);
  Fatgraph g = relabel(p.graph(), map);
  for (const auto& v : g.vertices()) {
    if (v.front() % 2 == 1) continue;
    if (g.orientation(v.front()) < 0) g = flip_vertex(g, v);
  }
  return PiMap::from_graph(std::move(g));
}

int genus(const PiMap& p) { return euler_genus(p.graph()).genus; }

PiMap remove_leaf(const PiMap& p, int s) {
  const Fatgraph& g = p.graph();
  if (s < 2 || s > g.size() || s % 2 != 0) throw Error(Errc::NotExternal, "label " + std::to_string(s));
  if (g.sigma(s) != s) throw Error(Errc::UnknownVertex, "sector " + std::to_string(s) + " is not a degree-one vertex");
  if (p.n() == 0) throw Error(Errc::UnknownVertex, "the empty map has no removable vertex");

  RibbonGraph r = ribbon_graph(g);
  const int c = r.partner[s];
  const int t = g.sigma_inv(c);
  int removed = 0;
  if (c != 1) {
    // Drop sector c; corner (c, sigma c) becomes (t, sigma c) under the same key.
    removed = c;
    r.sigma[t] = r.sigma[c];
  } else {
    // Sector 1 stays; drop t and move the corner keyed t onto key 1.
    removed = t;
    const int q = r.partner[t];
    r.sigma[g.sigma_inv(t)] = 1;
    r.partner[1] = q;
    r.partner[q] = 1;
    r.twisted[1] = r.twisted[t];
  }

  const int size = g.size();
  std::vector<int> map(size + 1, 0);
  for (int x = 1; x <= size; ++x) {
    if (x == removed || x == s) continue;
    const int gone = x % 2 == 1 ? removed : s;
    map[x] = x > gone ? x - 2 : x;
  }
  RibbonGraph next;
  next.sigma.assign(size - 1, 0);
  next.partner.assign(size - 1, 0);
  next.twisted.assign(size - 1, 0);
  for (int x = 1; x <= size; ++x) {
    if (map[x] == 0) continue;
    next.sigma[map[x]] = map[r.sigma[x]];
    next.partner[map[x]] = map[r.partner[x]];
    next.twisted[map[x]] = r.twisted[x];
  }
  return canonicalize(PiMap::from_graph(trace_boundaries(next)));
}

PiMap reduce(const PiMap& p) {
  PiMap cur = p;
  while (cur.n() > 0) {
    const Fatgraph& g = cur.graph();
    int s = 0;
    for (int e = 2; e <= g.size() && s == 0; e += 2)
      if (g.sigma(e) == e) s = e;
    if (s == 0) break;
    cur = remove_leaf(cur, s);
  }
  return cur;
}

std::string dump(const PiMap& p) {
  std::ostringstream os;
  os << "center: " << p.center_string() << '\n';
  os << "external:";
  for (const auto& v : p.external_vertices()) os << ' ' << cycle_string(v);
  os << '\n';
  os << "boundary: " << cycle_string(p.boundary_order()) << '\n';
  os << "ribbons:\n";
  const Fatgraph& g = p.graph();
  for (const Ribbon& r : p.ribbons()) {
    os << "  ((" << g.signed_label(r.a.first) << ',' << g.signed_label(r.a.second) << "),("
       << g.signed_label(r.b.first) << ',' << g.signed_label(r.b.second) << ")) "
       << (r.twisted ? "twisted" : "untwisted") << ' ' << (r.kind == RibbonKind::M ? 'm' : 'b') << '\n';
  }
  return os.str();
}

}  // namespace revgenus
