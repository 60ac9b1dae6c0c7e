#include "pcsym/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pcsym {

namespace {

// Union-find over vertices 1..n, for component shapes of edge subsets.
struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  Partition component_sizes(int n) {
    std::vector<int> count(n + 1, 0);
    for (int v = 1; v <= n; ++v) ++count[find(v)];
    std::vector<int> parts;
    for (int v = 1; v <= n; ++v)
      if (count[v] > 0) parts.push_back(count[v]);
    return Partition(parts);
  }
};

// The subdigraph induced on a sorted vertex subset, relabelled 1..k.
Digraph induced_subdigraph(const Digraph& D, const std::vector<int>& verts) {
  std::vector<int> rank(D.d + 1, 0);
  for (int k = 0; k < static_cast<int>(verts.size()); ++k)
    rank[verts[k]] = k + 1;
  Digraph H(static_cast<int>(verts.size()));
  for (auto [u, v] : D.edges)
    if (rank[u] != 0 && rank[v] != 0) H.add_edge(rank[u], rank[v]);
  return H;
}

// All set partitions of an arbitrary element list, as block lists.
std::vector<std::vector<std::vector<int>>> partitions_of_elements(
    const std::vector<int>& elems) {
  int k = static_cast<int>(elems.size());
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int max_used) {
    if (pos == k) {
      std::vector<std::vector<int>> blocks(max_used + 1);
      for (int t = 0; t < k; ++t) blocks[rgs[t]].push_back(elems[t]);
      out.push_back(std::move(blocks));
      return;
    }
    for (int id = 0; id <= max_used + 1; ++id) {
      rgs[pos] = id;
      rec(pos + 1, std::max(max_used, id));
    }
  };
  if (k == 0)
    out.push_back({});
  else
    rec(0, -1);
  return out;
}

// Linear combination of m-tilde basis elements from a type tally.
SymFunc assemble_mtilde(const PartitionMap<Rat>& tally) {
  SymFunc res;
  for (const auto& [lam, c] : tally)
    res = res + SymFunc::basis_elem(Basis::mtilde, lam).scaled(c);
  return res;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoverStatistics
// ---------------------------------------------------------------------------

Int CoverStatistics::total() const {
  Int t = 0;
  for (const auto& [key, c] : by_type) t += c;
  return t;
}

std::vector<Int> CoverStatistics::by_edge_count(int d) const {
  std::vector<Int> counts(d + 1, Int(0));
  for (const auto& [key, c] : by_type) {
    int edges_used = d - key.first.length();
    counts.at(edges_used) += c;
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Chromatic symmetric function
// ---------------------------------------------------------------------------

SymFunc chromatic_sym(const Graph& G) {
  PartitionMap<Rat> tally;
  for (const SetPartition& sp : stable_partitions(G)) tally[sp.type()] += 1;
  return assemble_mtilde(tally);
}

SymFunc chromatic_sym_edges(const Graph& G) {
  auto edges = G.edge_list();
  int m = static_cast<int>(edges.size());
  SymFunc res;
  for (long mask = 0; mask < (1L << m); ++mask) {
    DSU dsu(G.n);
    int chosen = 0;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) {
        dsu.unite(edges[k].first, edges[k].second);
        ++chosen;
      }
    res.add_p_term(dsu.component_sizes(G.n), Rat(chosen % 2 == 0 ? 1 : -1));
  }
  return res;
}

BivarPoly chromatic_poly(const Graph& G) {
  return chromatic_sym(G).specialize_ones();
}

// ---------------------------------------------------------------------------
// Path-cycle symmetric function and rook polynomials
// ---------------------------------------------------------------------------

SymFunc2 path_cycle_sym(const Digraph& D) {
  SymFunc2 res;
  for (const auto& [key, count] : cover_type_tally(D)) {
    SymFunc mx = SymFunc::basis_elem(Basis::mtilde, key.first);
    for (const auto& [lx, c] : mx.p_coeffs())
      res.add_term(lx, key.second, c * Rat(count));
  }
  return res;
}

BivarPoly cover_poly(const Digraph& D) {
  BivarPoly::Vars ij{"i", "j"};
  BivarPoly res(ij);
  BivarPoly vi = BivarPoly::variable(ij, 0);
  BivarPoly vj = BivarPoly::variable(ij, 1);
  for (const auto& [key, count] : cover_type_tally(D)) {
    BivarPoly term = falling_factorial(vi, key.first.length()) *
                     vj.pow(key.second.length());
    res = res + term.scaled(Rat(count));
  }
  return res;
}

std::vector<Int> rook_numbers(const Digraph& B) {
  std::vector<Int> r(B.d + 1, Int(0));
  for_each_cover(B, [&](const PathCycleCover& c) {
    r.at(c.edges.size()) += 1;
  });
  return r;
}

BivarPoly factorial_poly(const Digraph& B) {
  BivarPoly::Vars ij{"i", "j"};
  BivarPoly vi = BivarPoly::variable(ij, 0);
  BivarPoly res(ij);
  std::vector<Int> r = rook_numbers(B);
  for (int k = 0; k <= B.d; ++k)
    res = res + falling_factorial(vi, B.d - k).scaled(Rat(r[k]));
  return res;
}

// ---------------------------------------------------------------------------
// Inclusion-exclusion over full placements
// ---------------------------------------------------------------------------

CoverStatistics n_statistics(const Digraph& D) {
  CoverStatistics stats;
  for (const RookPlacement& T : rook_placements_full(D.d)) {
    PathCycleCover c = cover_from_edges(D.d, drop(T, D));
    stats.by_type[{c.path_type(), c.cycle_type()}] += 1;
  }
  return stats;
}

SymFunc2 xi_tilde(const Partition& lam, const Partition& mu) {
  Digraph D = build_D_lambda_mu(lam, mu);
  SymFunc2 res;
  for (const auto& [key, count] : cover_type_tally(D)) {
    Rat scale = Rat(count) / Rat(factorial(key.first.length()));
    SymFunc mx = SymFunc::basis_elem(Basis::mtilde, key.first);
    for (const auto& [lx, c] : mx.p_coeffs())
      res.add_term(lx, key.second, c * scale);
  }
  return res;
}

std::map<std::pair<Partition, Partition>, Int> inclusion_exclusion_expand(
    const Digraph& D) {
  CoverStatistics stats = n_statistics(D);
  SymFunc2 reassembled;
  for (const auto& [key, count] : stats.by_type)
    reassembled = reassembled + xi_tilde(key.first, key.second).scaled(Rat(count));
  if (!(reassembled == path_cycle_sym(D)))
    throw std::logic_error(
        "inclusion_exclusion_expand: placement expansion disagrees with the "
        "cover sum");
  return stats.by_type;
}

std::map<std::tuple<int, int, int>, Int> delta_statistics(const Digraph& D) {
  std::map<std::tuple<int, int, int>, Int> delta;
  for (const RookPlacement& T : rook_placements_full(D.d)) {
    std::vector<std::pair<int, int>> dropped = drop(T, D);
    PathCycleCover c = cover_from_edges(D.d, dropped);
    int q0 = static_cast<int>(dropped.size());
    // Any cycle inside a partial permutation is a full cycle component,
    // so the admissible S are exactly unions of cycle components.
    int t = c.num_cycles();
    for (int mask = 0; mask < (1 << t); ++mask) {
      int r = 0, s = 0;
      for (int b = 0; b < t; ++b)
        if (mask >> b & 1) {
          r += static_cast<int>(c.cycles[b].size());
          ++s;
        }
      delta[{q0 - r, r, s}] += 1;
    }
  }
  return delta;
}

SymFunc t_geq(const Digraph& D, const SetPartition& pi) {
  if (pi.n != D.d)
    throw std::invalid_argument("t_geq: partition ground set must match D");
  if (!is_acyclic(D))
    throw std::invalid_argument("t_geq requires an acyclic digraph");
  int d = D.d;
  std::vector<std::vector<int>> in_edges(d + 1);
  for (auto [u, v] : D.edges) in_edges[v].push_back(u);

  PartitionMap<Rat> tally;
  std::vector<int> choice(d + 1, 0);  // 0 = appended, else the board row
  auto process = [&]() {
    std::vector<int> appended;
    std::map<int, std::vector<int>> board_rows;
    for (int v = 1; v <= d; ++v) {
      if (choice[v] == 0)
        appended.push_back(v);
      else
        board_rows[choice[v]].push_back(v);
    }
    for (const auto& tau : partitions_of_elements(appended)) {
      // Row equivalence: board rooks sharing an original row, appended
      // rooks sharing an appended row; never across the two kinds.
      std::vector<std::vector<int>> blocks;
      for (const auto& [row, cols] : board_rows) blocks.push_back(cols);
      for (const auto& block : tau) blocks.push_back(block);
      SetPartition row_classes(d, blocks);
      if (!refines(pi, row_classes)) continue;
      // Color every vertex by the appended block its chain terminates in.
      std::vector<int> block_of(d + 1, -1);
      for (int b = 0; b < static_cast<int>(tau.size()); ++b)
        for (int v : tau[b]) block_of[v] = b;
      std::vector<int> count(tau.size(), 0);
      for (int v = 1; v <= d; ++v) {
        int t = v;
        while (choice[t] != 0) t = choice[t];
        ++count[block_of[t]];
      }
      tally[Partition(count)] += 1;
    }
  };
  std::function<void(int)> rec = [&](int v) {
    if (v > d) {
      process();
      return;
    }
    rec(v + 1);  // column v appended
    for (int u : in_edges[v]) {
      choice[v] = u;
      rec(v + 1);
      choice[v] = 0;
    }
  };
  rec(1);
  return assemble_mtilde(tally);
}

// ---------------------------------------------------------------------------
// Quasi-symmetric and ascent expansions
// ---------------------------------------------------------------------------

std::map<std::uint32_t, Int> quasisym_expansion(const Digraph& D) {
  std::map<std::uint32_t, Int> tally;
  for (const Permutation& pi : all_permutations(D.d)) {
    std::uint32_t mask = 0;
    for (int s = 1; s < D.d; ++s)
      if (!D.has_edge(pi.word[s - 1], pi.word[s])) mask |= 1u << (s - 1);
    tally[mask] += 1;
  }
  return tally;
}

Partition g_ascent_type(const Graph& G, const Permutation& pi) {
  int n = pi.size();
  if (n != G.n)
    throw std::invalid_argument("g_ascent_type: permutation size must match G");
  // rho[t]: longest chain of positions s_1 < ... < s_r < t whose
  // consecutive letters are adjacent in G.
  std::vector<int> rho(n + 1, 0);
  for (int t = 1; t <= n; ++t)
    for (int s = 1; s < t; ++s)
      if (G.has_edge(pi.word[s - 1], pi.word[t - 1]))
        rho[t] = std::max(rho[t], rho[s] + 1);
  std::vector<int> parts;
  int segment = 0;
  for (int t = 1; t <= n; ++t) {
    ++segment;
    if (t == n) break;
    int v = pi.word[t - 1], w = pi.word[t];
    bool ascent = rho[t] < rho[t + 1] || (rho[t] == rho[t + 1] && v < w);
    if (ascent) {
      parts.push_back(segment);
      segment = 0;
    }
  }
  if (segment > 0) parts.push_back(segment);
  return Partition(parts);
}

PartitionMap<Int> g_ascent_counts(const Graph& G) {
  PartitionMap<Int> counts;
  for (const Permutation& pi : all_permutations(G.n))
    counts[g_ascent_type(G, pi)] += 1;
  return counts;
}

// ---------------------------------------------------------------------------
// Tableau counts
// ---------------------------------------------------------------------------

PartitionMap<Int> schur_coeffs_via_D_tableaux(const Digraph& D) {
  if (!is_weakly_31_free(D))
    throw std::invalid_argument(
        "schur_coeffs_via_D_tableaux requires a weakly free digraph");
  PartitionMap<Int> counts;
  for (const Partition& shape : integer_partitions(D.d)) {
    auto tableaux = enumerate_D_tableaux(D, shape);
    if (!tableaux.empty()) counts[shape] = Int(tableaux.size());
  }
  return counts;
}

PartitionMap<Int> schur_coeffs_via_P_tableaux(const Poset& P) {
  if (!is_three_one_free(P))
    throw std::invalid_argument(
        "schur_coeffs_via_P_tableaux requires a poset with no 3+1 "
        "obstruction");
  PartitionMap<Int> counts;
  for (const Partition& shape : integer_partitions(P.size())) {
    auto tableaux = enumerate_P_tableaux(P, shape);
    if (!tableaux.empty()) counts[shape] = Int(tableaux.size());
  }
  return counts;
}

PartitionMap<Int> threefree_e_expansion(const Poset& P) {
  PartitionMap<Int> counts;
  for (const auto& cls : popping_classes(P)) {
    // The class member with the tallest right-hand column; shapes are
    // distinct within a class, so the choice is unique.
    const Tableau* top = &cls.front();
    auto right_height = [](const Tableau& t) {
      int h = 0;
      for (const auto& row : t.rows)
        if (row.size() == 2) ++h;
      return h;
    };
    for (const Tableau& t : cls)
      if (right_height(t) > right_height(*top)) top = &t;
    counts[conjugate(top->shape())] += 1;
  }
  SymFunc reassembled;
  for (const auto& [lam, c] : counts)
    reassembled = reassembled + SymFunc::basis_elem(Basis::e, lam).scaled(Rat(c));
  if (!(reassembled == chromatic_sym(incomparability_graph(P))))
    throw std::logic_error(
        "threefree_e_expansion: popping classes disagree with the stable "
        "partition sum");
  return counts;
}

// ---------------------------------------------------------------------------
// t-graded chromatic function
// ---------------------------------------------------------------------------

TPoly xg_t(const Graph& G) {
  auto edges = G.edge_list();
  int m = static_cast<int>(edges.size());
  TPoly primary;
  for (long mask = 0; mask < (1L << m); ++mask) {
    DSU dsu(G.n);
    int chosen = 0;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) {
        dsu.unite(edges[k].first, edges[k].second);
        ++chosen;
      }
    primary.add_term(chosen, SymFunc::p_term(dsu.component_sizes(G.n)));
  }

  // Second route: over pairs pi <= sigma of connected partitions,
  // (1+t)^{edges inside pi} mu(pi, sigma) p_{type(sigma)}.
  std::vector<SetPartition> lattice = contraction_lattice(G);
  std::vector<std::vector<Int>> mob = mobius_matrix(lattice);
  TPoly second;
  for (int a = 0; a < static_cast<int>(lattice.size()); ++a) {
    int inside = 0;
    for (auto [u, v] : edges)
      if (lattice[a].block_of(u) == lattice[a].block_of(v)) ++inside;
    for (int b = 0; b < static_cast<int>(lattice.size()); ++b) {
      if (mob[a][b] == 0) continue;
      SymFunc term = SymFunc::p_term(lattice[b].type(), Rat(mob[a][b]));
      for (int k = 0; k <= inside; ++k)
        second.add_term(k, term.scaled(Rat(binomial(Int(inside), k))));
    }
  }
  if (!(primary == second))
    throw std::logic_error(
        "xg_t: edge-subset and contraction-lattice expansions disagree");
  return primary;
}

// ---------------------------------------------------------------------------
// Superfication evaluations
// ---------------------------------------------------------------------------

namespace {

const BivarPoly::Vars kMN{"m", "n"};

std::vector<std::vector<int>> children_of(const RootedTree& T) {
  int n = T.graph.n;
  std::vector<std::vector<int>> children(n + 1);
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{T.root};
  seen[T.root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 1; u <= n; ++u)
      if (!seen[u] && T.graph.has_edge(v, u)) {
        seen[u] = true;
        children[v].push_back(u);
        stack.push_back(u);
      }
  }
  return children;
}

// (alpha, beta) of the subtree rooted at v, given child products.
std::pair<BivarPoly, BivarPoly> alpha_beta_at(
    int v, const std::vector<std::vector<int>>& children) {
  BivarPoly prod_a = BivarPoly::constant(kMN, Rat(1));
  BivarPoly prod_b = BivarPoly::constant(kMN, Rat(1));
  for (int c : children[v]) {
    auto [a, b] = alpha_beta_at(c, children);
    prod_a = prod_a * a;
    prod_b = prod_b * b;
  }
  BivarPoly m = BivarPoly::variable(kMN, 0);
  BivarPoly n = BivarPoly::variable(kMN, 1);
  BivarPoly two = BivarPoly::constant(kMN, Rat(2));
  BivarPoly alpha = ((m - n - two) * prod_a + (m + n) * prod_b).scaled(Rat(1, 2));
  BivarPoly beta = ((m + n + two) * prod_b + (m - n) * prod_a).scaled(Rat(1, 2));
  return {alpha, beta};
}

}  // namespace

AlphaBeta alpha_beta(const RootedTree& T) {
  auto children = children_of(T);
  auto [a, b] = alpha_beta_at(T.root, children);
  return AlphaBeta{a, b};
}

BivarPoly chi_tilde_tree(const RootedTree& T) {
  auto children = children_of(T);
  BivarPoly prod_a = BivarPoly::constant(kMN, Rat(1));
  BivarPoly prod_b = BivarPoly::constant(kMN, Rat(1));
  for (int c : children[T.root]) {
    auto [a, b] = alpha_beta_at(c, children);
    prod_a = prod_a * a;
    prod_b = prod_b * b;
  }
  BivarPoly m = BivarPoly::variable(kMN, 0);
  BivarPoly n = BivarPoly::variable(kMN, 1);
  return ((m - n) * prod_a + (m + n) * prod_b).scaled(Rat(1, 2));
}

BivarPoly chi_tilde(const Graph& G) {
  BivarPoly counting = chromatic_sym(G).superficiate().specialize2();
  BivarPoly m = BivarPoly::variable(kMN, 0);
  BivarPoly n = BivarPoly::variable(kMN, 1);
  BivarPoly result =
      counting.subst((m - n).scaled(Rat(1, 2)), (m + n).scaled(Rat(1, 2)));
  if (!result.integer_coeffs())
    throw std::logic_error("chi_tilde produced non-integer coefficients");
  return result;
}

Int supercolor_count(const Graph& G, int i, int j) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("supercolor_count needs nonnegative i, j");
  int n = G.n, c = i + j;
  auto edge_list = G.edge_list();
  Int total = 0;
  for (const Digraph& o : acyclic_orientations(G)) {
    if (n == 0) {
      total += 1;
      continue;
    }
    if (c == 0) continue;
    // Colors 0..i-1 are unbarred, i..i+j-1 barred; barred above unbarred.
    std::vector<int> kappa(n + 1, 0);
    long maps = 1;
    for (int v = 0; v < n; ++v) maps *= c;
    for (long code = 0; code < maps; ++code) {
      long rest = code;
      for (int v = 1; v <= n; ++v) {
        kappa[v] = static_cast<int>(rest % c);
        rest /= c;
      }
      bool ok = true;
      for (auto [u, v] : o.edges) {
        if (kappa[u] < kappa[v] ||
            (kappa[u] == kappa[v] && kappa[u] < i)) {
          ok = false;
          break;
        }
      }
      if (ok) total += 1;
    }
  }
  return total;
}

namespace {

// Labels 1..n assigned by repeatedly taking the smallest-named minimal
// element of the remaining order.
std::vector<int> natural_labels(const Poset& P) {
  int n = P.size();
  std::vector<int> label(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  for (int next = 1; next <= n; ++next) {
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      bool minimal = true;
      for (int u = 1; u <= n && minimal; ++u)
        if (!used[u] && P.less(u, v)) minimal = false;
      if (minimal) {
        label[v] = next;
        used[v] = true;
        break;
      }
    }
  }
  return label;
}

}  // namespace

Int ppartition_formula(const Graph& G, int i, int j) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("ppartition_formula needs nonnegative i, j");
  int n = G.n;
  Int total = 0;
  for (const Digraph& o : acyclic_orientations(G)) {
    // Edge targets sit below sources in the induced order.
    std::vector<std::pair<int, int>> relations;
    for (auto [u, v] : o.edges) relations.push_back({v, u});
    Poset P(n, relations);
    std::vector<int> label = natural_labels(P);
    for (const Permutation& ext : linear_extensions(P)) {
      std::vector<int> word(n);
      for (int t = 0; t < n; ++t) word[t] = label[ext.word[t]];
      // descents[s] / ascents[s]: comparison between digits s and s+1.
      std::vector<int> descent_prefix(n + 1, 0), ascent_suffix(n + 2, 0);
      for (int s = 1; s < n; ++s)
        descent_prefix[s + 1] = descent_prefix[s] + (word[s - 1] > word[s]);
      for (int s = n - 1; s >= 1; --s)
        ascent_suffix[s] = ascent_suffix[s + 1] + (word[s - 1] < word[s]);
      for (int k = 0; k <= n; ++k) {
        // D_{n-k}: descents among the first n-k digits; A_k: ascents
        // among the last k digits.
        int D = n - k >= 2 ? descent_prefix[n - k] : 0;
        int A = k >= 2 ? ascent_suffix[n - k + 1] : 0;
        total += binomial(Int(i + D), n - k) * binomial(Int(j + A), k);
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Walk series
// ---------------------------------------------------------------------------

namespace {

std::vector<TruncatedMultiPoly> walks_of(const Digraph& D, int N) {
  std::vector<TruncatedMultiPoly> alpha;
  alpha.push_back(TruncatedMultiPoly::constant(D.d, N, Rat(1)));
  for (int n = 1; n <= N; ++n) {
    TruncatedMultiPoly a(D.d, N);
    std::vector<int> exps(D.d, 0);
    std::function<void(int, int)> rec = [&](int pos, int last) {
      if (pos == n) {
        a.add_term(exps, Rat(1));
        return;
      }
      for (int v = 1; v <= D.d; ++v) {
        if (pos > 0 && !D.has_edge(last, v)) continue;
        ++exps[v - 1];
        rec(pos + 1, v);
        --exps[v - 1];
      }
    };
    rec(0, 0);
    alpha.push_back(std::move(a));
  }
  return alpha;
}

}  // namespace

std::pair<std::vector<TruncatedMultiPoly>, std::vector<TruncatedMultiPoly>>
walk_series(const Digraph& D, int N) {
  if (D.d > 4 || N > 6)
    throw std::invalid_argument("walk_series limits: d <= 4, N <= 6");
  return {walks_of(D, N), walks_of(complement(D), N)};
}

// ---------------------------------------------------------------------------
// Derivative expansion
// ---------------------------------------------------------------------------

SymFunc xi_partial_p_formula(const Digraph& D, int i) {
  if (!is_acyclic(D))
    throw std::invalid_argument(
        "xi_partial_p_formula requires an acyclic digraph");
  if (i < 1) throw std::invalid_argument("derivative index must be positive");
  int d = D.d;
  SymFunc res;
  std::vector<int> verts;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(verts.size()) == i) {
      Digraph H = induced_subdigraph(D, verts);
      // Moebius value from the path partition to the one-block top:
      // (-1)^{l-1} (l-1)! for a cover with l paths.
      Rat coeff(0);
      for_each_cover(H, [&](const PathCycleCover& c) {
        int l = c.num_paths();
        Int mu = factorial(l - 1);
        if (l % 2 == 0) mu = -mu;
        coeff += Rat(mu);
      });
      if (coeff != 0) {
        std::vector<int> rest;
        for (int v = 1; v <= d; ++v)
          if (std::find(verts.begin(), verts.end(), v) == verts.end())
            rest.push_back(v);
        SymFunc xi_rest =
            path_cycle_sym(induced_subdigraph(D, rest)).restrict_y0();
        res = res + xi_rest.scaled(coeff);
      }
      return;
    }
    for (int v = from; v <= d; ++v) {
      verts.push_back(v);
      choose(v + 1);
      verts.pop_back();
    }
  };
  if (i <= d) choose(1);
  return res;
}

}  // namespace pcsym
