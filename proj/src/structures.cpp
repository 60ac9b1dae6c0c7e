#include "pcsym/structures.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pcsym {

// ---------------------------------------------------------------------------
// Core types
// ---------------------------------------------------------------------------

Graph::Graph(int vertex_count) : n(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n || v < 1 || v > n)
    throw std::invalid_argument("graph edge endpoint out of range");
  if (u == v) throw std::invalid_argument("graph edge may not be a loop");
  edges.insert({std::min(u, v), std::max(u, v)});
}

bool Graph::has_edge(int u, int v) const {
  return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  return {edges.begin(), edges.end()};
}

Digraph::Digraph(int vertex_count) : d(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void Digraph::add_edge(int u, int v) {
  if (u < 1 || u > d || v < 1 || v > d)
    throw std::invalid_argument("digraph edge endpoint out of range");
  edges.insert({u, v});
}

bool Digraph::has_edge(int u, int v) const { return edges.count({u, v}) > 0; }

std::vector<std::pair<int, int>> Digraph::edge_list() const {
  return {edges.begin(), edges.end()};
}

Poset::Poset(int vertex_count, const std::vector<std::pair<int, int>>& relations)
    : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative element count");
  std::vector<std::vector<bool>> lt(n_ + 1, std::vector<bool>(n_ + 1, false));
  for (auto [u, v] : relations) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw std::invalid_argument("poset relation endpoint out of range");
    lt[u][v] = true;
  }
  for (int w = 1; w <= n_; ++w)
    for (int u = 1; u <= n_; ++u)
      if (lt[u][w])
        for (int v = 1; v <= n_; ++v)
          if (lt[w][v]) lt[u][v] = true;
  for (int u = 1; u <= n_; ++u)
    if (lt[u][u])
      throw std::invalid_argument(
          "order relation contains a cycle through element " +
          std::to_string(u));
  for (int u = 1; u <= n_; ++u)
    for (int v = 1; v <= n_; ++v)
      if (lt[u][v]) less_.insert({u, v});
}

bool Poset::less(int u, int v) const { return less_.count({u, v}) > 0; }

std::vector<std::pair<int, int>> Poset::relation_list() const {
  return {less_.begin(), less_.end()};
}

namespace {

bool graph_connected(const Graph& G) {
  if (G.n <= 1) return true;
  std::vector<bool> seen(G.n + 1, false);
  std::vector<int> stack = {1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 1; v <= G.n; ++v) {
      if (!seen[v] && G.has_edge(u, v)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == G.n;
}

}  // namespace

RootedTree::RootedTree(Graph g, int root_vertex)
    : graph(std::move(g)), root(root_vertex) {
  if (graph.n < 1) throw std::invalid_argument("tree must have a vertex");
  if (root < 1 || root > graph.n)
    throw std::invalid_argument("tree root out of range");
  if (static_cast<int>(graph.edges.size()) != graph.n - 1 ||
      !graph_connected(graph))
    throw std::invalid_argument("edge set is not a tree");
}

Partition PathCycleCover::path_type() const {
  std::vector<int> parts;
  for (const auto& p : paths) parts.push_back(static_cast<int>(p.size()));
  return Partition(parts);
}

Partition PathCycleCover::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles) parts.push_back(static_cast<int>(c.size()));
  return Partition(parts);
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

Digraph complement(const Digraph& D) {
  Digraph out(D.d);
  for (int u = 1; u <= D.d; ++u)
    for (int v = 1; v <= D.d; ++v)
      if (!D.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Digraph path_digraph(int d) {
  Digraph out(d);
  for (int u = 1; u < d; ++u) out.add_edge(u, u + 1);
  return out;
}

Digraph cycle_digraph(int d) {
  Digraph out(d);
  for (int u = 1; u < d; ++u) out.add_edge(u, u + 1);
  if (d >= 1) out.add_edge(d, 1);
  return out;
}

Digraph build_D_lambda_mu(const Partition& lam, const Partition& mu) {
  Digraph out(static_cast<int>(lam.weight() + mu.weight()));
  int next = 1;
  for (int a : lam.parts) {
    for (int k = 0; k + 1 < a; ++k) out.add_edge(next + k, next + k + 1);
    next += a;
  }
  for (int a : mu.parts) {
    for (int k = 0; k + 1 < a; ++k) out.add_edge(next + k, next + k + 1);
    out.add_edge(next + a - 1, next);
    next += a;
  }
  return out;
}

Digraph digraph_of_poset(const Poset& P) {
  Digraph out(P.size());
  for (auto [u, v] : P.relation_list()) out.add_edge(u, v);
  return out;
}

Graph incomparability_graph(const Poset& P) {
  Graph out(P.size());
  for (int u = 1; u <= P.size(); ++u)
    for (int v = u + 1; v <= P.size(); ++v)
      if (!P.comparable(u, v)) out.add_edge(u, v);
  return out;
}

Digraph ordinal_join(const Digraph& D1, const Digraph& D2) {
  Digraph out(D1.d + D2.d);
  for (auto [u, v] : D1.edges) out.add_edge(u, v);
  for (auto [u, v] : D2.edges) out.add_edge(u + D1.d, v + D1.d);
  for (int u = 1; u <= D1.d; ++u)
    for (int v = 1; v <= D2.d; ++v) out.add_edge(u, v + D1.d);
  return out;
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool is_acyclic(const Digraph& D) {
  // Depth-first search with three colours; a back edge closes a cycle.
  std::vector<int> colour(D.d + 1, 0);
  std::function<bool(int)> visit = [&](int u) {
    colour[u] = 1;
    for (auto it = D.edges.lower_bound({u, 0});
         it != D.edges.end() && it->first == u; ++it) {
      int v = it->second;
      if (colour[v] == 1) return false;
      if (colour[v] == 0 && !visit(v)) return false;
    }
    colour[u] = 2;
    return true;
  };
  for (int u = 1; u <= D.d; ++u)
    if (colour[u] == 0 && !visit(u)) return false;
  return true;
}

bool is_transitively_closed(const Digraph& D) {
  for (auto [u, w] : D.edges)
    for (auto it = D.edges.lower_bound({w, 0});
         it != D.edges.end() && it->first == w; ++it)
      if (!D.has_edge(u, it->second)) return false;
  return true;
}

namespace {

// path2[u][v]: some w has (u,w) and (w,v) as non-loop edges.  Loops never
// participate in a length-two path, so u = v needs a genuine 2-cycle
// through some other vertex.
std::vector<std::vector<bool>> paths_of_length_two(const Digraph& D) {
  std::vector<std::vector<bool>> out(D.d + 1, std::vector<bool>(D.d + 1, false));
  for (auto [u, w] : D.edges) {
    if (u == w) continue;
    for (auto it = D.edges.lower_bound({w, 0});
         it != D.edges.end() && it->first == w; ++it)
      if (it->second != w) out[u][it->second] = true;
  }
  return out;
}

}  // namespace

bool is_weakly_31_free(const Digraph& D) {
  for (int u = 1; u <= D.d; ++u)
    if (D.has_edge(u, u))
      throw std::invalid_argument(
          "weak (3+1)-freeness is defined for loopless digraphs only");
  auto p2 = paths_of_length_two(D);
  auto q2 = paths_of_length_two(complement(D));
  for (int u = 1; u <= D.d; ++u)
    for (int v = 1; v <= D.d; ++v)
      if (p2[u][v] && q2[u][v]) return false;
  return true;
}

bool is_three_free(const Poset& P) {
  for (auto [a, b] : P.relation_list())
    for (int c = 1; c <= P.size(); ++c)
      if (P.less(b, c)) return false;
  return true;
}

bool is_three_one_free(const Poset& P) {
  int n = P.size();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!P.less(a, b)) continue;
      for (int c = 1; c <= n; ++c) {
        if (!P.less(b, c)) continue;
        for (int x = 1; x <= n; ++x)
          if (x != a && x != b && x != c && !P.comparable(x, a) &&
              !P.comparable(x, b) && !P.comparable(x, c))
            return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Stable and connected partitions
// ---------------------------------------------------------------------------

std::vector<SetPartition> stable_partitions(const Graph& G) {
  std::vector<SetPartition> out;
  for (const auto& sp : set_partitions(G.n)) {
    bool stable = true;
    for (const auto& block : sp.blocks) {
      for (size_t i = 0; i < block.size() && stable; ++i)
        for (size_t j = i + 1; j < block.size(); ++j)
          if (G.has_edge(block[i], block[j])) {
            stable = false;
            break;
          }
      if (!stable) break;
    }
    if (stable) out.push_back(sp);
  }
  return out;
}

namespace {

bool block_connected(const Graph& G, const std::vector<int>& block) {
  if (block.size() <= 1) return true;
  std::set<int> in_block(block.begin(), block.end());
  std::set<int> seen = {block[0]};
  std::vector<int> stack = {block[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : in_block)
      if (!seen.count(v) && G.has_edge(u, v)) {
        seen.insert(v);
        stack.push_back(v);
      }
  }
  return seen.size() == block.size();
}

}  // namespace

std::vector<SetPartition> contraction_lattice(const Graph& G) {
  std::vector<SetPartition> out;
  for (const auto& sp : set_partitions(G.n)) {
    bool ok = true;
    for (const auto& block : sp.blocks)
      if (!block_connected(G, block)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(sp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Path-cycle covers
// ---------------------------------------------------------------------------

namespace {

// Decompose a partial permutation (next[u] = 0 if row u is unused) into the
// directed paths and cycles it induces on [d].
PathCycleCover decompose_cover(int d, const std::vector<int>& next) {
  PathCycleCover cover;
  for (int u = 1; u <= d; ++u)
    if (next[u] != 0) cover.edges.push_back({u, next[u]});
  std::vector<bool> has_prev(d + 1, false);
  for (int u = 1; u <= d; ++u)
    if (next[u] != 0) has_prev[next[u]] = true;
  std::vector<bool> placed(d + 1, false);
  // Paths start at vertices with no incoming chosen edge.
  for (int u = 1; u <= d; ++u) {
    if (has_prev[u]) continue;
    std::vector<int> path;
    for (int v = u; v != 0; v = next[v]) {
      path.push_back(v);
      placed[v] = true;
    }
    cover.paths.push_back(std::move(path));
  }
  // Everything else lies on a cycle; scanning upward starts each cycle at
  // its smallest vertex.
  for (int u = 1; u <= d; ++u) {
    if (placed[u]) continue;
    std::vector<int> cycle;
    int v = u;
    do {
      cycle.push_back(v);
      placed[v] = true;
      v = next[v];
    } while (v != u);
    cover.cycles.push_back(std::move(cycle));
  }
  return cover;
}

}  // namespace

void for_each_cover(const Digraph& D,
                    const std::function<void(const PathCycleCover&)>& fn) {
  int d = D.d;
  std::vector<std::vector<int>> out_edges(d + 1);
  for (auto [u, v] : D.edges) out_edges[u].push_back(v);
  std::vector<int> next(d + 1, 0);
  std::vector<bool> col_used(d + 1, false);
  std::function<void(int)> recurse = [&](int u) {
    if (u > d) {
      fn(decompose_cover(d, next));
      return;
    }
    recurse(u + 1);  // row u contributes no edge
    for (int v : out_edges[u]) {
      if (col_used[v]) continue;
      next[u] = v;
      col_used[v] = true;
      recurse(u + 1);
      col_used[v] = false;
      next[u] = 0;
    }
  };
  recurse(1);
}

std::vector<PathCycleCover> path_cycle_covers(const Digraph& D) {
  std::vector<PathCycleCover> out;
  for_each_cover(D, [&](const PathCycleCover& c) { out.push_back(c); });
  return out;
}

PathCycleCover cover_from_edges(int d,
                                const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> next(d + 1, 0);
  std::vector<bool> col_used(d + 1, false);
  for (auto [u, v] : edges) {
    if (u < 1 || u > d || v < 1 || v > d)
      throw std::invalid_argument("cover edge endpoint out of range");
    if (next[u] != 0 || col_used[v])
      throw std::invalid_argument("cover edges share a row or column");
    next[u] = v;
    col_used[v] = true;
  }
  return decompose_cover(d, next);
}

std::map<std::pair<Partition, Partition>, Int> cover_type_tally(
    const Digraph& D) {
  std::map<std::pair<Partition, Partition>, Int> tally;
  for_each_cover(D, [&](const PathCycleCover& c) {
    tally[{c.path_type(), c.cycle_type()}] += 1;
  });
  return tally;
}

// ---------------------------------------------------------------------------
// Orientations, extensions, rooks
// ---------------------------------------------------------------------------

std::vector<Digraph> acyclic_orientations(const Graph& G) {
  auto edges = G.edge_list();
  int m = static_cast<int>(edges.size());
  std::vector<Digraph> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    Digraph o(G.n);
    for (int k = 0; k < m; ++k) {
      auto [u, v] = edges[k];
      if (mask & (1L << k))
        o.add_edge(v, u);
      else
        o.add_edge(u, v);
    }
    if (is_acyclic(o)) out.push_back(std::move(o));
  }
  return out;
}

std::vector<Permutation> linear_extensions(const Poset& P) {
  int n = P.size();
  std::vector<Permutation> out;
  std::vector<int> word;
  std::vector<bool> used(n + 1, false);
  std::function<void()> extend = [&]() {
    if (static_cast<int>(word.size()) == n) {
      out.push_back(Permutation{word});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      bool ready = true;
      for (int u = 1; u <= n; ++u)
        if (!used[u] && P.less(u, v)) {
          ready = false;
          break;
        }
      if (!ready) continue;
      used[v] = true;
      word.push_back(v);
      extend();
      word.pop_back();
      used[v] = false;
    }
  };
  extend();
  return out;
}

std::vector<RookPlacement> rook_placements_full(int d) {
  std::vector<RookPlacement> out;
  for (const auto& perm : all_permutations(d))
    out.push_back(RookPlacement{perm.word});
  return out;
}

std::vector<std::pair<int, int>> drop(const RookPlacement& T, const Digraph& D) {
  if (T.size() != D.d)
    throw std::invalid_argument("rook placement size differs from board size");
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= D.d; ++i) {
    int j = T.column_of[i - 1];
    if (D.has_edge(i, j)) out.push_back({i, j});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tableaux
// ---------------------------------------------------------------------------

namespace {

// Shared backtracking for the digraph and poset tableau variants.  row_step
// checks whether b may follow a within a row; column_step checks whether b
// may sit directly below a.
std::vector<Tableau> enumerate_tableaux(
    int n, const Partition& shape,
    const std::function<bool(int, int)>& row_step,
    const std::function<bool(int, int)>& column_step) {
  if (shape.weight() != n)
    throw std::invalid_argument("tableau shape size differs from vertex count");
  std::vector<int> lens = shape.parts;
  int num_rows = static_cast<int>(lens.size());
  std::vector<Tableau> out;
  Tableau current;
  current.rows.assign(num_rows, {});
  std::vector<bool> used(n + 1, false);
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == num_rows) {
      out.push_back(current);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == lens[r]) {
      ++nr;
      nc = 0;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (c > 0 && !row_step(current.rows[r][c - 1], v)) continue;
      if (r > 0 && !column_step(current.rows[r - 1][c], v)) continue;
      used[v] = true;
      current.rows[r].push_back(v);
      fill(nr, nc);
      current.rows[r].pop_back();
      used[v] = false;
    }
  };
  if (num_rows == 0)
    out.push_back(current);
  else
    fill(0, 0);
  return out;
}

}  // namespace

std::vector<Tableau> enumerate_D_tableaux(const Digraph& D,
                                          const Partition& shape) {
  return enumerate_tableaux(
      D.d, shape, [&](int a, int b) { return D.has_edge(a, b); },
      [&](int above, int below) { return !D.has_edge(below, above); });
}

std::vector<Tableau> enumerate_P_tableaux(const Poset& P,
                                          const Partition& shape) {
  return enumerate_tableaux(
      P.size(), shape, [&](int a, int b) { return P.less(a, b); },
      [&](int above, int below) { return !P.less(below, above); });
}

// ---------------------------------------------------------------------------
// Popping classes
// ---------------------------------------------------------------------------

namespace {

// Rebuild the two-column diagram with the given columns as tableau rows.
Tableau columns_to_tableau(const std::vector<int>& left,
                           const std::vector<int>& right) {
  Tableau t;
  for (size_t i = 0; i < left.size(); ++i) {
    std::vector<int> row = {left[i]};
    if (i < right.size()) row.push_back(right[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

bool is_two_column_tableau(const Poset& P, const std::vector<int>& left,
                           const std::vector<int>& right) {
  for (size_t i = 0; i < right.size(); ++i)
    if (!P.less(left[i], right[i])) return false;
  for (size_t i = 0; i + 1 < left.size(); ++i)
    if (P.less(left[i + 1], left[i])) return false;
  for (size_t i = 0; i + 1 < right.size(); ++i)
    if (P.less(right[i + 1], right[i])) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Tableau>> popping_classes(const Poset& P) {
  if (!is_three_free(P))
    throw std::invalid_argument("popping requires a poset with no 3-chain");
  int n = P.size();
  // With no 3-chain every row has at most two entries, so the admissible
  // shapes are exactly the partitions of n with parts <= 2.
  std::vector<Tableau> all;
  for (const auto& shape : integer_partitions(n)) {
    if (!shape.empty() && shape.parts[0] > 2) continue;
    for (auto& t : enumerate_P_tableaux(P, shape)) all.push_back(std::move(t));
  }
  std::map<std::vector<std::vector<int>>, int> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i].rows] = static_cast<int>(i);
  // Union-find: each tableau joins every tableau among its pop iterates
  // (intermediate diagrams need not themselves be tableaux).
  std::vector<int> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (size_t i = 0; i < all.size(); ++i) {
    std::vector<int> left, right;
    for (const auto& row : all[i].rows) {
      left.push_back(row[0]);
      if (row.size() > 1) right.push_back(row[1]);
    }
    while (!right.empty()) {
      left.push_back(right.back());
      right.pop_back();
      if (is_two_column_tableau(P, left, right)) {
        auto it = index.find(columns_to_tableau(left, right).rows);
        unite(static_cast<int>(i), it->second);
      }
    }
  }
  std::map<int, std::vector<Tableau>> grouped;
  for (size_t i = 0; i < all.size(); ++i)
    grouped[find(static_cast<int>(i))].push_back(all[i]);
  std::vector<std::vector<Tableau>> out;
  for (auto& [root, members] : grouped) out.push_back(std::move(members));
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism classes
// ---------------------------------------------------------------------------

namespace {

// Minimal adjacency bitstring over all vertex relabellings; bit
// (u-1)*d + (v-1) records edge (u,v).  Fits in 64 bits for d <= 8.
uint64_t canonical_key(int d, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<Permutation>& perms) {
  uint64_t best = ~uint64_t{0};
  for (const auto& perm : perms) {
    uint64_t bits = 0;
    for (auto [u, v] : edges) {
      int pu = perm.word[u - 1], pv = perm.word[v - 1];
      bits |= uint64_t{1} << ((pu - 1) * d + (pv - 1));
    }
    best = std::min(best, bits);
  }
  return best;
}

template <typename S>
std::vector<S> iso_classes_impl(const std::vector<S>& values, int d) {
  if (d > 8)
    throw std::invalid_argument("isomorphism classes support at most 8 vertices");
  auto perms = all_permutations(d);
  std::set<uint64_t> seen;
  std::vector<S> out;
  for (const auto& value : values) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : value.edges) {
      edges.push_back({u, v});
      edges.push_back({v, u});  // undirected: record both directions
    }
    uint64_t key = canonical_key(d, edges, perms);
    if (seen.insert(key).second) out.push_back(value);
  }
  return out;
}

}  // namespace

std::vector<Digraph> iso_classes(const std::vector<Digraph>& values) {
  if (values.empty()) return {};
  int d = values[0].d;
  for (const auto& v : values)
    if (v.d != d) throw std::invalid_argument("mixed vertex counts");
  if (d > 8)
    throw std::invalid_argument("isomorphism classes support at most 8 vertices");
  auto perms = all_permutations(d);
  std::set<uint64_t> seen;
  std::vector<Digraph> out;
  for (const auto& value : values) {
    uint64_t key = canonical_key(d, value.edge_list(), perms);
    if (seen.insert(key).second) out.push_back(value);
  }
  return out;
}

std::vector<Graph> iso_classes(const std::vector<Graph>& values) {
  if (values.empty()) return {};
  int d = values[0].n;
  for (const auto& v : values)
    if (v.n != d) throw std::invalid_argument("mixed vertex counts");
  return iso_classes_impl(values, d);
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

ParseError::ParseError(int line_number, const std::string& message)
    : std::runtime_error(line_number > 0 ? "line " +
                                               std::to_string(line_number) +
                                               ": " + message
                                         : message),
      line_(line_number) {}

namespace {

struct NumberedLine {
  int number;
  std::string text;
};

std::vector<NumberedLine> content_lines(const std::string& text) {
  std::vector<NumberedLine> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

bool read_int(std::istringstream& in, int& value) {
  return static_cast<bool>(in >> value);
}

bool at_end(std::istringstream& in) {
  std::string rest;
  return !(in >> rest);
}

std::pair<int, int> parse_edge_line(const NumberedLine& line) {
  std::istringstream in(line.text);
  int u, v;
  if (!read_int(in, u) || !read_int(in, v) || !at_end(in))
    throw ParseError(line.number, "expected two vertex numbers");
  return {u, v};
}

}  // namespace

ParsedStructure parse_structure(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line");
  std::istringstream header(lines[0].text);
  std::string kind;
  header >> kind;
  auto body = std::vector<NumberedLine>(lines.begin() + 1, lines.end());

  if (kind == "graph" || kind == "digraph" || kind == "poset") {
    int n;
    if (!read_int(header, n) || !at_end(header) || n < 0)
      throw ParseError(lines[0].number,
                       "header must be '" + kind + " <count>'");
    if (kind == "graph") {
      Graph G(n);
      for (const auto& line : body) {
        auto [u, v] = parse_edge_line(line);
        try {
          G.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
          throw ParseError(line.number, e.what());
        }
      }
      return G;
    }
    if (kind == "digraph") {
      Digraph D(n);
      for (const auto& line : body) {
        auto [u, v] = parse_edge_line(line);
        try {
          D.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
          throw ParseError(line.number, e.what());
        }
      }
      return D;
    }
    std::vector<std::pair<int, int>> relations;
    for (const auto& line : body) {
      auto [u, v] = parse_edge_line(line);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line.number, "poset relation endpoint out of range");
      relations.push_back({u, v});
    }
    try {
      return Poset(n, relations);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lines[0].number, e.what());
    }
  }

  if (kind == "tree") {
    int n, r;
    std::string root_word;
    if (!read_int(header, n) || !(header >> root_word) || root_word != "root" ||
        !read_int(header, r) || !at_end(header) || n < 0)
      throw ParseError(lines[0].number, "header must be 'tree <count> root <vertex>'");
    Graph G(n);
    for (const auto& line : body) {
      auto [u, v] = parse_edge_line(line);
      try {
        G.add_edge(u, v);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    }
    try {
      return RootedTree(std::move(G), r);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lines[0].number, e.what());
    }
  }

  throw ParseError(lines[0].number,
                   "unknown structure kind '" + kind + "'");
}

namespace {

std::string edges_text(const std::vector<std::pair<int, int>>& edges) {
  std::string out;
  for (auto [u, v] : edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace

std::string serialize_structure(const Graph& G) {
  return "graph " + std::to_string(G.n) + "\n" + edges_text(G.edge_list());
}

std::string serialize_structure(const Digraph& D) {
  return "digraph " + std::to_string(D.d) + "\n" + edges_text(D.edge_list());
}

std::string serialize_structure(const Poset& P) {
  return "poset " + std::to_string(P.size()) + "\n" +
         edges_text(P.relation_list());
}

std::string serialize_structure(const RootedTree& T) {
  return "tree " + std::to_string(T.graph.n) + " root " +
         std::to_string(T.root) + "\n" + edges_text(T.graph.edge_list());
}

std::string serialize_structure(const ParsedStructure& value) {
  return std::visit([](const auto& v) { return serialize_structure(v); },
                    value);
}

}  // namespace pcsym
