#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "revgenus/sigperm.hpp"

namespace revgenus::cli {

struct ComponentReport {
  std::vector<std::string> intervals;
  std::vector<std::string> vertices;
  bool trivial = false;
  bool orientable = false;
  int genus = 0;
  bool hurdle = false;
  bool super_hurdle = false;

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct AnalysisReport {
  std::string permutation;
  int n = 0;
  int genus = 0;
  int boundaries = 0;
  int vertices = 0;
  int ribbons = 0;
  std::vector<ComponentReport> components;
  int h = 0;
  int penalty = 0;
  int distance = 0;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComponentReport, intervals, vertices, trivial, orientable, genus, hurdle,
                                   super_hurdle)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, permutation, n, genus, boundaries, vertices, ribbons, components,
                                   h, penalty, distance)

/// Built on the unreduced map of b, so trivial components are listed too.
AnalysisReport make_report(const SignedPermutation& b);

std::string to_text(const AnalysisReport& r);

}  // namespace revgenus::cli
