#pragma once

#include <vector>

#include "revgenus/pimap.hpp"
#include "revgenus/sigperm.hpp"
#include "revgenus/structure.hpp"

namespace revgenus {

// How a reversal rho(i,j) acts on the external sectors X = x_{2j+2} and
// Y = x_{2i}: merge their two vertices, split their shared vertex, or reverse
// the arc between them on their shared vertex.
enum class ActionKind { Glue, Slice, HalfFlip };

const char* to_string(ActionKind k);

/// Throws IndexOutOfRange unless 1 <= i <= j <= n.
ActionKind classify(const PiMap& p, Reversal r);

/// The canonical map of the reversed permutation.
PiMap act(const PiMap& p, Reversal r);

struct Analysis {
  int genus = 0;
  std::vector<Component> comps;
  HurdleForest forest;
  HurdleReport hurdles;
  int penalty = 0;
  int distance = 0;
};

Analysis analyze(const PiMap& p);

/// A reversal slicing an m-ribbon of the non-orientable component c so that
/// genus drops by one and no new orientable component appears. Throws
/// NotNonOrientable if c is trivial or orientable.
Reversal splice_choice(const PiMap& p, const Component& c);

struct SafeChoice {
  Reversal reversal;
  ActionKind kind = ActionKind::Glue;
  bool is_safe = true;
};

/// Throws NoHurdles when the map has none.
SafeChoice safe_reversal(const PiMap& p);

struct DistanceResult {
  int d = 0;
  int g = 0;
  int h = 0;
  int penalty = 0;
};

DistanceResult distance(const SignedPermutation& b);

struct SortStep {
  Reversal reversal;
  ActionKind kind = ActionKind::Glue;
  int genus_after = 0;
  int hurdles_after = 0;
};

struct SortingTrace {
  std::vector<SortStep> steps;
  SignedPermutation final;
};

/// Hurdles first, then splice every non-orientable component down to trivial
/// pieces. Throws InternalInvariant if a step disagrees with apply_reversal
/// or the walk does not end at the identity.
SortingTrace sort_by_reversals(const SignedPermutation& b);

}  // namespace revgenus
