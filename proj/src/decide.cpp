#include "creach/decide.hpp"

#include <stdexcept>

namespace creach {

std::string to_string(Reason r) {
  switch (r) {
    case Reason::kCondition1: return "condition1";
    case Reason::kCondition2: return "condition2";
    default: return "no_path";
  }
}

bool check_condition1(const Level& lv) {
  if (!lv.dst) throw std::invalid_argument("condition 1 needs a destination prefix");
  const Edge* d = lv.find(*lv.d_path());
  return d == nullptr || d->label.empty();
}

bool check_condition2(const Level& lv) {
  if (!lv.src || !lv.dst) throw std::invalid_argument("condition 2 needs both prefixes");
  PathVal s = *lv.s_path();
  if (s == *lv.d_path()) return false;
  bool any_incoming = false;
  for (const Edge& e : lv.edges)
    for (int r = 0; r < 8; ++r) {
      if (!e.label.has(r)) continue;
      for (PathVal t : e.label.targets[r])
        if (t == s) {
          if (e.path != s) return false;
          any_incoming = true;
        }
    }
  return any_incoming;
}

static Decision not_reachable(Reason why, int level, u64 edges) {
  Decision d;
  d.reachable = false;
  d.reason = why;
  d.at_level = level;
  d.explored_edges = edges;
  return d;
}

Decision decide(const RuleVector& rv, const Configuration& S, const Configuration& D,
                const DecideOptions& opts) {
  check_lattice(rv, S);
  check_lattice(rv, D);
  if (opts.min_steps_required != 0 && opts.min_steps_required != 1)
    throw std::invalid_argument("min_steps_required must be 0 or 1");
  int n = static_cast<int>(rv.size());

  auto finish = [&](Decision d) {
    if (!opts.count_edges) d.explored_edges = 0;
    return d;
  };

  if (S.val == D.val && opts.min_steps_required == 0)
    return finish({true, 0, Reason::kNoPath, 0, 0});

  u64 total = 0;
  u64 count = 1;  // nodes feeding the current level
  Level cur;
  for (int i = 0; i < n; ++i) {
    cur = i == 0 ? build_root(rv, S, D) : expand_level(cur, rv[i], i, n);
    if (opts.trace) opts.trace->built.push_back(cur.edges.size());
    if (opts.shortcuts_enabled) {
      if (check_condition1(cur)) return finish(not_reachable(Reason::kCondition1, i, total));
      if (check_condition2(cur)) return finish(not_reachable(Reason::kCondition2, i, total));
    }
    bool leaf = i == n - 1;
    PathSearchResult res = path_search(cur, leaf ? opts.min_steps_required == 0 : true);
    if (!res.exists) return finish(not_reachable(Reason::kNoPath, i, total));
    total += 2 * count;
    if (leaf) return finish({true, res.min_length, Reason::kNoPath, i, total});
    if (opts.prune_enabled) cur = prune(std::move(cur), res.survivors);
    if (opts.trace) {
      auto& row = opts.trace->kept.emplace_back();
      for (const Edge& e : cur.edges) row.push_back(e.path);
    }
    count = cur.edges.size();
  }
  throw std::logic_error("unreachable");
}

std::optional<u64> min_steps(const RuleVector& rv, const Configuration& S,
                             const Configuration& D) {
  Decision d = decide(rv, S, D);
  if (!d.reachable) return std::nullopt;
  return d.min_steps;
}

}  // namespace creach
