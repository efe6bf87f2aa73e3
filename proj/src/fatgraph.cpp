#include "revgenus/fatgraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <tuple>

#include "revgenus/error.hpp"

namespace revgenus {

namespace {

std::vector<int> invert(const std::vector<int>& p, const char* what) {
  std::vector<int> inv(p.size(), 0);
  const int n = static_cast<int>(p.size()) - 1;
  for (int x = 1; x <= n; ++x) {
    const int y = p[x];
    if (y < 1 || y > n || inv[y] != 0)
      throw Error(Errc::NotAFatgraph, std::string(what) + " is not a bijection");
    inv[y] = x;
  }
  return inv;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<char> seen(p.size(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 1; x <= n; ++x) {
    if (seen[x]) continue;
    std::vector<int> c;
    for (int y = x; !seen[y]; y = p[y]) {
      seen[y] = 1;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string cycles_string(const std::vector<int>& p, const std::vector<int>& omega) {
  std::string s;
  for (const auto& c : cycles_of(p)) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(omega[c[k]] * c[k]);
    }
    s += ')';
  }
  return s;
}

std::vector<std::vector<int>> parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool open = false;
  std::size_t p = 0;
  while (p < text.size()) {
    const char c = text[p];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++p;
    } else if (c == '(') {
      if (open) throw Error(Errc::MalformedToken, "nested '(' in cycle notation");
      open = true;
      current.clear();
      ++p;
    } else if (c == ')') {
      if (!open) throw Error(Errc::MalformedToken, "unbalanced ')' in cycle notation");
      open = false;
      cycles.push_back(current);
      ++p;
    } else {
      if (!open) throw Error(Errc::MalformedToken, "label outside a cycle");
      std::size_t q = p;
      if (text[q] == '+' || text[q] == '-') ++q;
      while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
      std::string_view tok = text.substr(p, q - p);
      std::string_view digits = tok;
      const bool neg = !digits.empty() && digits.front() == '-';
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
      int v = 0;
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() || v == 0)
        throw Error(Errc::MalformedToken, "bad label '" + std::string(tok) + "'");
      current.push_back(neg ? -v : v);
      p = q;
    }
  }
  if (open) throw Error(Errc::MalformedToken, "unterminated cycle");
  return cycles;
}

// A side of a corner: the corner is keyed by its second sector, and the side
// is either the first sector's "after" side or the second sector's "before"
// side.
enum class Role { First, Second };

struct Side {
  int key;
  Role role;
  friend bool operator==(const Side&, const Side&) = default;
};

struct SideWalker {
  const Fatgraph& g;

  Side exit_side(int x) const {
    return g.orientation(x) > 0 ? Side{g.sigma(x), Role::First} : Side{x, Role::Second};
  }
  Side entry_side(int x) const {
    return g.orientation(x) > 0 ? Side{x, Role::Second} : Side{g.sigma(x), Role::First};
  }
  int sector_of(Side s) const { return s.role == Role::First ? g.sigma_inv(s.key) : s.key; }

  // The side glued to s along a ribbon, read off from the boundary walk.
  Side matched(Side s) const {
    const int x = sector_of(s);
    if (exit_side(x) == s) return entry_side(g.gamma(x));
    return exit_side(g.gamma_inv(x));
  }
};

}  // namespace

Fatgraph::Fatgraph(std::vector<int> sigma, std::vector<int> gamma, std::vector<int> omega)
    : sigma_(std::move(sigma)), gamma_(std::move(gamma)), omega_(std::move(omega)) {
  if (sigma_.empty()) sigma_.assign(1, 0);
  if (gamma_.empty()) gamma_.assign(1, 0);
  if (omega_.empty()) omega_.assign(1, 0);
  if (gamma_.size() != sigma_.size() || omega_.size() != sigma_.size())
    throw Error(Errc::NotAFatgraph, "sigma, gamma and orientation differ in size");
  sigma_inv_ = invert(sigma_, "sigma");
  gamma_inv_ = invert(gamma_, "gamma");
  for (int x = 1; x <= size(); ++x)
    if (omega_[x] != 1 && omega_[x] != -1)
      throw Error(Errc::NotAFatgraph, "orientation must be +1 or -1");
}

Fatgraph Fatgraph::from_cycles(std::string_view sigma_cycles, std::string_view gamma_cycles) {
  const auto sc = parse_cycles(sigma_cycles);
  const auto gc = parse_cycles(gamma_cycles);
  int n = 0;
  for (const auto& c : sc)
    for (int v : c) n = std::max(n, std::abs(v));
  std::vector<int> sigma(n + 1, 0), gamma(n + 1, 0), omega(n + 1, 0);
  for (const auto& c : sc) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int x = std::abs(c[k]);
      if (omega[x] != 0) throw Error(Errc::NotAFatgraph, "label repeated in sigma");
      omega[x] = c[k] > 0 ? 1 : -1;
      sigma[x] = std::abs(c[(k + 1) % c.size()]);
    }
  }
  for (const auto& c : gc) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int x = std::abs(c[k]);
      if (x > n || gamma[x] != 0) throw Error(Errc::NotAFatgraph, "gamma label unknown or repeated");
      if (omega[x] != (c[k] > 0 ? 1 : -1))
        throw Error(Errc::NotAFatgraph, "orientation of " + std::to_string(x) + " differs between sigma and gamma");
      gamma[x] = std::abs(c[(k + 1) % c.size()]);
    }
  }
  return Fatgraph(std::move(sigma), std::move(gamma), std::move(omega));
}

std::vector<std::vector<int>> Fatgraph::vertices() const { return cycles_of(sigma_); }
std::vector<std::vector<int>> Fatgraph::boundaries() const { return cycles_of(gamma_); }
std::string Fatgraph::sigma_string() const { return cycles_string(sigma_, omega_); }
std::string Fatgraph::gamma_string() const { return cycles_string(gamma_, omega_); }

std::vector<Ribbon> extract_ribbons(const Fatgraph& g) {
  const int n = g.size();
  const SideWalker w{g};
  std::vector<int> partner(n + 1, 0);
  std::vector<char> twisted(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    const Side a = w.matched({k, Role::First});
    const Side b = w.matched({k, Role::Second});
    const bool ok = a.key == b.key && a.key != k && a.role != b.role;
    if (!ok)
      throw Error(Errc::NotAFatgraph, "corner (" + std::to_string(g.sigma_inv(k)) + "," + std::to_string(k) +
                                          ") has no consistent partner");
    partner[k] = a.key;
    twisted[k] = a.role == Role::First;
  }
  std::vector<Ribbon> out;
  for (int k = 1; k <= n; ++k) {
    const int p = partner[k];
    if (partner[p] != k || twisted[p] != twisted[k])
      throw Error(Errc::NotAFatgraph, "ribbon pairing is not symmetric");
    if (p < k) continue;
    Ribbon r;
    r.a = {g.sigma_inv(k), k};
    r.b = {g.sigma_inv(p), p};
    r.twisted = twisted[k] != 0;
    r.kind = g.orientation(r.a.first) != g.orientation(r.a.second) ? RibbonKind::M : RibbonKind::B;
    out.push_back(r);
  }
  if (2 * static_cast<int>(out.size()) != n) throw Error(Errc::NotAFatgraph, "ribbon count mismatch");
  return out;
}

Fatgraph flip_vertex(const Fatgraph& g, std::span<const int> vertex) {
  const int n = g.size();
  if (vertex.empty()) throw Error(Errc::UnknownVertex, "empty vertex");
  std::vector<int> cyc;
  for (int v : vertex) {
    const int x = std::abs(v);
    if (x < 1 || x > n) throw Error(Errc::UnknownVertex, "label out of range");
    cyc.push_back(x);
  }
  for (std::size_t k = 0; k < cyc.size(); ++k)
    if (g.sigma(cyc[k]) != cyc[(k + 1) % cyc.size()])
      throw Error(Errc::UnknownVertex, "not a sigma-cycle");
  std::vector<int> sigma(n + 1), gamma(n + 1), omega(n + 1);
  for (int x = 1; x <= n; ++x) {
    sigma[x] = g.sigma(x);
    gamma[x] = g.gamma(x);
    omega[x] = g.orientation(x);
  }
  for (int x : cyc) {
    sigma[x] = g.sigma_inv(x);
    omega[x] = -omega[x];
  }
  return Fatgraph(std::move(sigma), std::move(gamma), std::move(omega));
}

Fatgraph flip_vertex_at(const Fatgraph& g, int x) {
  if (x < 1 || x > g.size()) throw Error(Errc::UnknownVertex, "label out of range");
  std::vector<int> cyc{x};
  for (int y = g.sigma(x); y != x; y = g.sigma(y)) cyc.push_back(y);
  return flip_vertex(g, cyc);
}

Fatgraph dual(const Fatgraph& g) {
  const int n = g.size();
  std::vector<int> sigma(n + 1), gamma(n + 1), omega(n + 1);
  for (int x = 1; x <= n; ++x) {
    sigma[x] = g.gamma(x);
    gamma[x] = g.sigma(x);
    omega[x] = g.orientation(x);
  }
  return Fatgraph(std::move(sigma), std::move(gamma), std::move(omega));
}

EulerCounts euler_genus(const Fatgraph& g) {
  EulerCounts c;
  c.vertices = static_cast<int>(g.vertices().size());
  c.boundaries = static_cast<int>(g.boundaries().size());
  c.edges = g.size() / 2;
  c.genus = 2 - c.boundaries - c.vertices + c.edges;
  return c;
}

bool same_ribbon_structure(const Fatgraph& a, const Fatgraph& b) {
  if (a.size() != b.size()) return false;
  for (int x = 1; x <= a.size(); ++x)
    if (a.orientation(x) != b.orientation(x)) return false;
  using Key = std::tuple<std::vector<int>, bool, RibbonKind>;
  auto keys = [](const Fatgraph& g) {
    std::vector<Key> out;
    for (const Ribbon& r : extract_ribbons(g)) {
      std::vector<int> s{r.a.first, r.a.second, r.b.first, r.b.second};
      std::sort(s.begin(), s.end());
      out.emplace_back(std::move(s), r.twisted, r.kind);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(a) == keys(b);
}

Fatgraph relabel(const Fatgraph& g, std::span<const int> map) {
  const int n = g.size();
  if (static_cast<int>(map.size()) != n + 1) throw Error(Errc::NotAFatgraph, "relabel map has wrong size");
  std::vector<int> sigma(n + 1, 0), gamma(n + 1, 0), omega(n + 1, 0);
  for (int x = 1; x <= n; ++x) {
    sigma[map[x]] = map[g.sigma(x)];
    gamma[map[x]] = map[g.gamma(x)];
    omega[map[x]] = g.orientation(x);
  }
  return Fatgraph(std::move(sigma), std::move(gamma), std::move(omega));
}

RibbonGraph ribbon_graph(const Fatgraph& g) {
  const int n = g.size();
  RibbonGraph r;
  r.sigma.assign(n + 1, 0);
  r.partner.assign(n + 1, 0);
  r.twisted.assign(n + 1, 0);
  for (int x = 1; x <= n; ++x) r.sigma[x] = g.sigma(x);
  for (const Ribbon& rb : extract_ribbons(g)) {
    r.partner[rb.a.second] = rb.b.second;
    r.partner[rb.b.second] = rb.a.second;
    r.twisted[rb.a.second] = r.twisted[rb.b.second] = rb.twisted;
  }
  return r;
}

Fatgraph trace_boundaries(const RibbonGraph& r) {
  const int n = r.size();
  if (static_cast<int>(r.partner.size()) != n + 1 || static_cast<int>(r.twisted.size()) != n + 1)
    throw Error(Errc::NotAFatgraph, "ribbon graph arrays differ in size");
  const std::vector<int> sigma_inv = invert(r.sigma, "sigma");
  for (int k = 1; k <= n; ++k) {
    const int p = r.partner[k];
    if (p < 1 || p > n || p == k || r.partner[p] != k || r.twisted[p] != r.twisted[k])
      throw Error(Errc::NotAFatgraph, "corner pairing is not a fixed-point-free involution");
  }

  std::vector<int> gamma(n + 1, 0), omega(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (omega[start] != 0) continue;
    omega[start] = 1;
    int cur = start;
    int dir = 1;
    while (true) {
      const Side out = dir > 0 ? Side{r.sigma[cur], Role::First} : Side{cur, Role::Second};
      const int p = r.partner[out.key];
      const Role in_role = r.twisted[out.key] ? out.role : (out.role == Role::First ? Role::Second : Role::First);
      int next = 0;
      int next_dir = 0;
      if (in_role == Role::Second) {
        next = p;
        next_dir = 1;
      } else {
        next = sigma_inv[p];
        next_dir = -1;
      }
      gamma[cur] = next;
      if (next == start) {
        if (next_dir != 1) throw Error(Errc::NotAFatgraph, "boundary walk returns with reversed direction");
        break;
      }
      if (omega[next] != 0) throw Error(Errc::NotAFatgraph, "boundary walk revisits a sector");
      omega[next] = next_dir;
      cur = next;
      dir = next_dir;
    }
  }
  return Fatgraph(r.sigma, std::move(gamma), std::move(omega));
}

}  // namespace revgenus
