#pragma once

#include <optional>
#include <string>
#include <vector>

#include "creach/ca.hpp"

namespace creach {

// Forward orbit of S up to the first repeated state. states are distinct;
// the successor of states.back() is states[tail_index].
struct Trajectory {
  std::vector<Configuration> states;
  std::size_t tail_index = 0;
};

Trajectory trajectory(const RuleVector& rv, const Configuration& S);

// Earliest t >= min_steps_required with F^t(S) = D, given D's first occurrence
// in the orbit (or nullopt), the orbit length and its tail index.
std::optional<u64> occurrence_at_least(std::optional<u64> first, u64 orbit_len,
                                       u64 tail_index, int min_steps_required);

std::optional<u64> oracle_decide(const RuleVector& rv, const Configuration& S,
                                 const Configuration& D, int min_steps_required = 0);

inline constexpr int kStgCap = 20;

// Full state-transition graph: succ[x] = F(x) over all 2^n configurations.
struct Stg {
  int n = 0;
  std::vector<u64> succ;
};

Stg build_stg(const RuleVector& rv, int cap = kStgCap);
Stg build_stg_serial(const RuleVector& rv, int cap = kStgCap);

std::vector<u64> reachable_states(const Stg& g);  // sorted image of F
bool is_reachable_state(const Stg& g, u64 c);
std::vector<u64> predecessors(const Stg& g, u64 c);

std::vector<u64> reachable_states(const RuleVector& rv);
bool is_reachable_state(const RuleVector& rv, const Configuration& c);
std::vector<Configuration> predecessors(const RuleVector& rv, const Configuration& c);

std::string stg_to_dot(const Stg& g);

}  // namespace creach
