#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "creach/ca.hpp"

namespace creach {

using PathVal = u128;  // integer value of an edge path, cell 0 most significant
using EdgeId = Bits;

// Per-edge label: which RMTs sit on the edge and, for each, the paths its
// link records point at. Equivalent parent RMTs merge, so an RMT can carry
// more than one target.
struct Label {
  std::array<std::vector<PathVal>, 8> targets;
  std::uint8_t rmts = 0;

  bool has(Rmt r) const { return rmts >> r & 1; }
  bool empty() const { return rmts == 0; }
};

struct Edge {
  PathVal path = 0;
  Label label;
};

// One level of the reachability tree. Edges at level i carry (i+1)-bit paths
// and hold RMTs of cell i. The full source/destination configurations ride
// along so expansion can materialize their prefixes even when empty.
struct Level {
  int index = 0;
  int n = 0;
  std::vector<Edge> edges;  // sorted by path
  std::optional<Configuration> src, dst;

  std::optional<PathVal> s_path() const { return prefix_of(src); }
  std::optional<PathVal> d_path() const { return prefix_of(dst); }
  int find_index(PathVal p) const;  // -1 when absent
  const Edge* find(PathVal p) const;

  EdgeId edge_id(PathVal p) const { return {p, index + 1}; }
  std::size_t multi_target_entries() const;

 private:
  std::optional<PathVal> prefix_of(const std::optional<Configuration>& c) const {
    if (!c) return std::nullopt;
    return c->val >> (c->len - (index + 1));
  }
};

inline EdgeId link_target(const EdgeId& parent_target, Rmt child_rmt) {
  return parent_target.child(rmt_middle(child_rmt));
}

Level build_root(const RuleVector& rv, std::optional<Configuration> S = std::nullopt,
                 std::optional<Configuration> D = std::nullopt);

Level expand_level(const Level& prev, Rule rule, int i, int n);

struct PathSearchResult {
  bool exists = false;
  u64 min_length = 0;  // meaningful only when exists
  std::vector<PathVal> survivors;  // sorted; always holds d and s paths
};

// Walks from the destination edge to the source edge along link records;
// reflexive treats the destination as reached at length 0.
PathSearchResult path_search(const Level& lv, bool reflexive);

Level prune(Level lv, const std::vector<PathVal>& survivors);

inline constexpr int kTreeCap = 16;

struct FullTree {
  std::vector<Level> levels;
  u64 leaf_count = 0;  // reachable configurations
};

FullTree enumerate_full_tree(const RuleVector& rv, int cap = kTreeCap);

std::string tree_to_dot(const FullTree& t);

}  // namespace creach
