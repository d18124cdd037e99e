#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "creach/bits.hpp"

namespace creach {

// One Wolfram rule: bit r of the code is the next state for neighborhood r.
struct Rule {
  std::uint8_t code = 0;
  friend bool operator==(const Rule&, const Rule&) = default;
};

using Rmt = int;  // rule min term, 4x + 2y + z for neighborhood (x, y, z)
using RuleVector = std::vector<Rule>;
using Configuration = Bits;

inline int rule_apply(Rule rule, Rmt r) { return rule.code >> r & 1; }
inline int rmt_middle(Rmt r) { return r >> 1 & 1; }
inline std::pair<Rmt, Rmt> rmt_children(Rmt r) {
  return {2 * r & 7, (2 * r + 1) & 7};
}

// RMTs a cell can see under null boundary: first cell has x = 0, last has z = 0.
std::vector<Rmt> valid_rmts(int i, int n);

inline bool is_self_replicating(Rule rule, Rmt r) {
  return rule_apply(rule, r) == rmt_middle(r);
}

// Both throw std::invalid_argument when r == s.
bool are_sibling(Rmt r, Rmt s);
bool are_equivalent(Rmt r, Rmt s);

std::vector<Rmt> rmt_sequence(const Configuration& c);

Configuration evolve(const RuleVector& rv, const Configuration& c);
Configuration evolve_t(const RuleVector& rv, const Configuration& c, u64 t);

// Same step on a raw value, for hot loops; n <= 64.
u64 evolve_value(const RuleVector& rv, u64 x, int n);
u128 evolve_value128(const RuleVector& rv, u128 x, int n);

RuleVector parse_rule_vector(std::string_view text);  // "9,170,195,80"
std::string to_string(const RuleVector& rv);
Configuration parse_configuration(std::string_view text);  // "0101"

void check_lattice(const RuleVector& rv, const Configuration& c);

}  // namespace creach
