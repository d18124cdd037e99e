#include "creach/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace creach {

int Level::find_index(PathVal p) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), p,
                             [](const Edge& e, PathVal v) { return e.path < v; });
  if (it == edges.end() || it->path != p) return -1;
  return static_cast<int>(it - edges.begin());
}

const Edge* Level::find(PathVal p) const {
  int i = find_index(p);
  return i < 0 ? nullptr : &edges[i];
}

std::size_t Level::multi_target_entries() const {
  std::size_t k = 0;
  for (const Edge& e : edges)
    for (int r = 0; r < 8; ++r)
      if (e.label.has(r) && e.label.targets[r].size() > 1) ++k;
  return k;
}

static void add_target(Label& lab, Rmt s, PathVal t) {
  auto& v = lab.targets[s];
  auto it = std::lower_bound(v.begin(), v.end(), t);
  if (it == v.end() || *it != t) v.insert(it, t);
  lab.rmts |= std::uint8_t(1u << s);
}

// Emit the <= 2 child edges of one parent edge, keeping empties only when
// they carry the S or D prefix.
static void push_children(std::vector<Edge>& out, PathVal parent, Label built[2],
                          std::optional<PathVal> sp, std::optional<PathVal> dp) {
  for (int b = 0; b < 2; ++b) {
    PathVal p = parent << 1 | static_cast<PathVal>(b);
    bool keep = !built[b].empty() || (sp && *sp == p) || (dp && *dp == p);
    if (keep) out.push_back({p, std::move(built[b])});
  }
}

Level build_root(const RuleVector& rv, std::optional<Configuration> S,
                 std::optional<Configuration> D) {
  if (rv.empty()) throw std::invalid_argument("rule vector is empty");
  if (S) check_lattice(rv, *S);
  if (D) check_lattice(rv, *D);
  int n = static_cast<int>(rv.size());
  Level lv{0, n, {}, std::move(S), std::move(D)};
  Label built[2];
  for (Rmt r : valid_rmts(0, n))
    add_target(built[rule_apply(rv[0], r)], r, rmt_middle(r));
  push_children(lv.edges, 0, built, lv.s_path(), lv.d_path());
  return lv;
}

Level expand_level(const Level& prev, Rule rule, int i, int n) {
  if (i != prev.index + 1 || n != prev.n || i > n - 1)
    throw std::invalid_argument("level expansion out of order");
  Level lv{i, n, {}, prev.src, prev.dst};
  auto sp = lv.s_path(), dp = lv.d_path();
  bool leaf = i == n - 1;
  for (const Edge& pe : prev.edges) {
    Label built[2];
    for (int r = 0; r < 8; ++r) {
      if (!pe.label.has(r)) continue;
      auto [c0, c1] = rmt_children(r);
      for (Rmt s : {c0, c1}) {
        if (leaf && s != c0) continue;
        Label& lab = built[rule_apply(rule, s)];
        for (PathVal t : pe.label.targets[r])
          add_target(lab, s, t << 1 | static_cast<PathVal>(rmt_middle(s)));
      }
    }
    push_children(lv.edges, pe.path, built, sp, dp);
  }
  return lv;
}

PathSearchResult path_search(const Level& lv, bool reflexive) {
  if (!lv.src || !lv.dst)
    throw std::invalid_argument("path search needs source and destination prefixes");
  int di = lv.find_index(*lv.d_path());
  int si = lv.find_index(*lv.s_path());
  if (di < 0 || si < 0) return {};

  int m = static_cast<int>(lv.edges.size());
  // arcs follow link records; targets outside the level are not traversable
  std::vector<std::vector<int>> adj(m), radj(m);
  for (int u = 0; u < m; ++u)
    for (int r = 0; r < 8; ++r) {
      if (!lv.edges[u].label.has(r)) continue;
      for (PathVal t : lv.edges[u].label.targets[r]) {
        int v = lv.find_index(t);
        if (v < 0) continue;
        adj[u].push_back(v);
        radj[v].push_back(u);
      }
    }

  std::vector<std::int64_t> dist(m, -1);
  std::vector<int> queue;
  if (reflexive) {
    dist[di] = 0;
    queue.push_back(di);
  } else {
    for (int v : adj[di])
      if (dist[v] < 0) {
        dist[v] = 1;
        queue.push_back(v);
      }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }

  std::vector<char> bvis(m, 0);
  bvis[si] = 1;
  queue.assign(1, si);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : radj[u])
      if (!bvis[v]) {
        bvis[v] = 1;
        queue.push_back(v);
      }
  }

  PathSearchResult res;
  res.exists = dist[si] >= 0;
  res.min_length = res.exists ? static_cast<u64>(dist[si]) : 0;
  for (int u = 0; u < m; ++u) {
    bool fwd = dist[u] >= 0 || u == di;
    if ((fwd && bvis[u]) || u == di || u == si) res.survivors.push_back(lv.edges[u].path);
  }
  return res;
}

Level prune(Level lv, const std::vector<PathVal>& survivors) {
  auto sp = lv.s_path(), dp = lv.d_path();
  auto kept = std::remove_if(lv.edges.begin(), lv.edges.end(), [&](const Edge& e) {
    if (std::binary_search(survivors.begin(), survivors.end(), e.path)) return false;
    if (sp && *sp == e.path) return false;
    if (dp && *dp == e.path) return false;
    return true;
  });
  lv.edges.erase(kept, lv.edges.end());
  return lv;
}

FullTree enumerate_full_tree(const RuleVector& rv, int cap) {
  if (rv.empty()) throw std::invalid_argument("rule vector is empty");
  int n = static_cast<int>(rv.size());
  if (n > cap)
    throw std::invalid_argument("full tree needs n <= " + std::to_string(cap) +
                                ", got n = " + std::to_string(n));
  FullTree t;
  t.levels.push_back(build_root(rv));
  for (int i = 1; i < n; ++i) t.levels.push_back(expand_level(t.levels.back(), rv[i], i, n));
  t.leaf_count = t.levels.back().edges.size();
  return t;
}

std::string tree_to_dot(const FullTree& t) {
  std::string dot = "digraph tree {\n  root;\n";
  for (const Level& lv : t.levels) {
    for (const Edge& e : lv.edges) {
      std::string name = to_string(lv.edge_id(e.path));
      std::string parent = lv.index == 0 ? "root" : '"' + to_string(Bits{e.path >> 1, lv.index}) + '"';
      dot += "  " + parent + " -> \"" + name + "\";\n";
      for (int r = 0; r < 8; ++r) {
        if (!e.label.has(r)) continue;
        for (PathVal tp : e.label.targets[r])
          dot += "  \"" + name + "\" -> \"" + to_string(lv.edge_id(tp)) +
                 "\" [style=dashed, label=\"" + std::to_string(r) + "\"];\n";
      }
    }
  }
  dot += "}\n";
  return dot;
}

}  // namespace creach
