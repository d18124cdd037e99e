#include "creach/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace creach {

Trajectory trajectory(const RuleVector& rv, const Configuration& S) {
  check_lattice(rv, S);
  Trajectory t;
  std::unordered_map<u128, std::size_t, U128Hash> seen;
  u128 x = S.val;
  while (true) {
    auto [it, fresh] = seen.emplace(x, t.states.size());
    if (!fresh) {
      t.tail_index = it->second;
      return t;
    }
    t.states.push_back({x, S.len});
    x = evolve_value128(rv, x, S.len);
  }
}

std::optional<u64> occurrence_at_least(std::optional<u64> first, u64 orbit_len,
                                       u64 tail_index, int min_steps_required) {
  if (!first) return std::nullopt;
  if (*first >= static_cast<u64>(min_steps_required)) return *first;
  // first occurrence is too early; D recurs iff it lies on the cycle
  if (*first >= tail_index) return *first + (orbit_len - tail_index);
  return std::nullopt;
}

std::optional<u64> oracle_decide(const RuleVector& rv, const Configuration& S,
                                 const Configuration& D, int min_steps_required) {
  check_lattice(rv, S);
  check_lattice(rv, D);
  if (min_steps_required != 0 && min_steps_required != 1)
    throw std::invalid_argument("min_steps_required must be 0 or 1");
  Trajectory t = trajectory(rv, S);
  std::optional<u64> first;
  for (std::size_t k = 0; k < t.states.size(); ++k)
    if (t.states[k].val == D.val) {
      first = k;
      break;
    }
  return occurrence_at_least(first, t.states.size(), t.tail_index, min_steps_required);
}

static void check_stg_args(const RuleVector& rv, int cap) {
  if (rv.empty()) throw std::invalid_argument("rule vector is empty");
  if (static_cast<int>(rv.size()) > cap)
    throw std::invalid_argument("state-transition graph needs n <= " + std::to_string(cap) +
                                ", got n = " + std::to_string(rv.size()));
}

Stg build_stg_serial(const RuleVector& rv, int cap) {
  check_stg_args(rv, cap);
  int n = static_cast<int>(rv.size());
  Stg g{n, std::vector<u64>(u64{1} << n)};
  for (u64 x = 0; x < g.succ.size(); ++x) g.succ[x] = evolve_value(rv, x, n);
  return g;
}

Stg build_stg(const RuleVector& rv, int cap) {
  check_stg_args(rv, cap);
  int n = static_cast<int>(rv.size());
  Stg g{n, std::vector<u64>(u64{1} << n)};
  const std::int64_t total = static_cast<std::int64_t>(g.succ.size());
#ifdef CREACH_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t x = 0; x < total; ++x)
    g.succ[x] = evolve_value(rv, static_cast<u64>(x), n);
  return g;
}

std::vector<u64> reachable_states(const Stg& g) {
  std::vector<u64> image = g.succ;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

bool is_reachable_state(const Stg& g, u64 c) {
  for (u64 y : g.succ)
    if (y == c) return true;
  return false;
}

std::vector<u64> predecessors(const Stg& g, u64 c) {
  std::vector<u64> pre;
  for (u64 x = 0; x < g.succ.size(); ++x)
    if (g.succ[x] == c) pre.push_back(x);
  return pre;
}

std::vector<u64> reachable_states(const RuleVector& rv) {
  return reachable_states(build_stg(rv));
}

bool is_reachable_state(const RuleVector& rv, const Configuration& c) {
  check_lattice(rv, c);
  return is_reachable_state(build_stg(rv), static_cast<u64>(c.val));
}

std::vector<Configuration> predecessors(const RuleVector& rv, const Configuration& c) {
  check_lattice(rv, c);
  std::vector<Configuration> out;
  for (u64 x : predecessors(build_stg(rv), static_cast<u64>(c.val)))
    out.push_back({x, c.len});
  return out;
}

std::string stg_to_dot(const Stg& g) {
  std::string dot = "digraph stg {\n";
  for (u64 x = 0; x < g.succ.size(); ++x) {
    dot += "  \"" + to_string(Bits{x, g.n}) + "\" -> \"" + to_string(Bits{g.succ[x], g.n}) +
           "\";\n";
  }
  dot += "}\n";
  return dot;
}

}  // namespace creach
