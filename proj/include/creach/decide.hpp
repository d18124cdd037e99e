#pragma once

#include <optional>
#include <string>
#include <vector>

#include "creach/tree.hpp"

namespace creach {

enum class Reason { kCondition1, kCondition2, kNoPath };

std::string to_string(Reason r);

struct Decision {
  bool reachable = false;
  u64 min_steps = 0;       // meaningful when reachable
  Reason reason = Reason::kNoPath;  // meaningful when not reachable
  int at_level = 0;        // level where the abort fired
  u64 explored_edges = 0;
};

// Testing hook: edge paths kept after each pruned level, in level order.
struct DecideTrace {
  std::vector<std::vector<PathVal>> kept;
  std::vector<u64> built;  // edge count per level before pruning
};

struct DecideOptions {
  int min_steps_required = 0;  // 0 or 1; 1 demands a strictly positive step count
  bool count_edges = true;
  bool prune_enabled = true;
  bool shortcuts_enabled = true;  // condition-1/2 aborts; disable for cross-checks
  DecideTrace* trace = nullptr;
};

Decision decide(const RuleVector& rv, const Configuration& S, const Configuration& D,
                const DecideOptions& opts = {});

// Destination prefix edge missing or carrying no RMTs.
bool check_condition1(const Level& lv);

// Source prefix edge has incoming link records and every one of them starts at
// the source edge itself; only meaningful when the prefixes differ.
bool check_condition2(const Level& lv);

std::optional<u64> min_steps(const RuleVector& rv, const Configuration& S,
                             const Configuration& D);

}  // namespace creach
