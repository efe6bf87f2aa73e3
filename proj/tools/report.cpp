#include "report.hpp"

#include <sstream>

#include "revgenus/solver.hpp"

namespace revgenus::cli {

namespace {

std::string cycle_string(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(c[k]);
  }
  return s + ')';
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += p;
  return s;
}

}  // namespace

AnalysisReport make_report(const SignedPermutation& b) {
  const PiMap p = to_pimap(b);
  const Analysis a = analyze(p);
  const EulerCounts e = euler_genus(p.graph());

  AnalysisReport r;
  r.permutation = b.to_string();
  r.n = b.size();
  r.genus = a.genus;
  r.boundaries = e.boundaries;
  r.vertices = e.vertices;
  r.ribbons = e.edges;
  r.h = a.hurdles.h;
  r.penalty = a.penalty;
  r.distance = a.distance;
  for (const Component& c : a.comps) {
    ComponentReport cr;
    for (const SectorInterval& iv : c.intervals) cr.intervals.push_back(to_string(iv));
    for (const auto& v : c.vertices) cr.vertices.push_back(cycle_string(v));
    cr.trivial = c.trivial;
    cr.orientable = c.orientable;
    cr.genus = c.genus;
    for (int k = 0; k < a.forest.size(); ++k) {
      if (a.forest.nodes[k].points != c.points) continue;
      cr.hurdle = a.hurdles.marks[k].hurdle;
      cr.super_hurdle = a.hurdles.marks[k].super_hurdle;
    }
    r.components.push_back(std::move(cr));
  }
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << r.permutation << '\n';
  os << "n=" << r.n << " genus=" << r.genus << " vertices=" << r.vertices << " boundaries=" << r.boundaries
     << " ribbons=" << r.ribbons << '\n';
  os << "h=" << r.h << " penalty=" << r.penalty << " distance=" << r.distance << '\n';
  for (const ComponentReport& c : r.components) {
    os << "component " << join(c.intervals) << ' ' << join(c.vertices);
    if (c.trivial) {
      os << " trivial\n";
      continue;
    }
    os << (c.orientable ? " orientable" : " non-orientable") << " genus=" << c.genus;
    if (c.hurdle) os << (c.super_hurdle ? " super-hurdle" : " hurdle");
    os << '\n';
  }
  return os.str();
}

}  // namespace revgenus::cli
