// Discrete structures: graphs, digraphs (= boards), posets, rooted trees,
// and the enumerations the invariant layer is built on: stable partitions,
// path-cycle covers, rook placements, acyclic orientations, linear
// extensions, row-path tableaux, and popping classes.  Also structural
// predicates (acyclicity, transitive closure, weak (3+1)-freeness) and a
// small text format for reading and writing structures.
//
// Vertices are 1-indexed throughout and named 1..n; a digraph on d vertices
// is identified with its board, the subset of [d] x [d] given by its edge
// set (row = source, column = target).
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcsym/partitions.hpp"
#include "pcsym/permutations.hpp"
#include "pcsym/rational.hpp"
#include "pcsym/setpartitions.hpp"

namespace pcsym {

// ---------------------------------------------------------------------------
// Core types
// ---------------------------------------------------------------------------

// Finite simple labelled undirected graph on vertex set [n].
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // stored with u < v

  Graph() = default;
  explicit Graph(int vertex_count);

  void add_edge(int u, int v);  // rejects loops and out-of-range vertices
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edge_list() const;
  bool operator==(const Graph&) const = default;
};

// Directed graph on [d]; loops are allowed.  Edge (u,v) = board square in
// row u, column v.
struct Digraph {
  int d = 0;
  std::set<std::pair<int, int>> edges;

  Digraph() = default;
  explicit Digraph(int vertex_count);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edge_list() const;
  bool operator==(const Digraph&) const = default;
};

// Finite poset on [n], stored as its full strict order relation.
// Constructed from arbitrary generating relations; the transitive closure
// is taken, and a cycle (which would force u < u) is an error.
class Poset {
 public:
  Poset() = default;
  Poset(int vertex_count, const std::vector<std::pair<int, int>>& relations);

  int size() const { return n_; }
  bool less(int u, int v) const;
  bool comparable(int u, int v) const { return less(u, v) || less(v, u); }
  // All strict pairs (u,v) with u < v in the order, sorted.
  std::vector<std::pair<int, int>> relation_list() const;
  bool operator==(const Poset&) const = default;

 private:
  int n_ = 0;
  std::set<std::pair<int, int>> less_;
};

// A tree with a distinguished root vertex.
struct RootedTree {
  Graph graph;
  int root = 1;

  RootedTree() = default;
  RootedTree(Graph g, int root_vertex);  // validates connectivity and edge count
  bool operator==(const RootedTree&) const = default;
};

// A path-cycle cover of a digraph: a set S of edges with no two in the same
// row or column of the board, decomposed into the directed paths and cycles
// it induces on the full vertex set.  An isolated vertex is a path with one
// vertex; a loop is a cycle with one vertex.
struct PathCycleCover {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> paths;   // vertex sequences, source first
  std::vector<std::vector<int>> cycles;  // rotated to start at smallest vertex

  int num_paths() const { return static_cast<int>(paths.size()); }
  int num_cycles() const { return static_cast<int>(cycles.size()); }
  Partition path_type() const;   // vertex counts of the paths
  Partition cycle_type() const;  // vertex counts of the cycles
};

// A placement of d non-taking rooks on [d] x [d]: one rook per row, one per
// column, i.e. a permutation.  column_of[i-1] is the column of row i's rook.
struct RookPlacement {
  std::vector<int> column_of;

  int size() const { return static_cast<int>(column_of.size()); }
};

// A filling of a partition shape with vertices, one row per line.  The
// validity conditions differ between the digraph and poset variants and are
// enforced by the enumerators that produce these.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  bool operator==(const Tableau&) const = default;
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

// Complement board: all squares of [d] x [d] not in D, loops included.
Digraph complement(const Digraph& D);

// Directed path 1 -> 2 -> ... -> d and directed cycle 1 -> 2 -> ... -> d -> 1.
Digraph path_digraph(int d);
Digraph cycle_digraph(int d);

// Disjoint union of directed paths of sizes lam_i followed by directed
// cycles of sizes mu_j, with vertices numbered sequentially (paths first).
Digraph build_D_lambda_mu(const Partition& lam, const Partition& mu);

// D(P): edge (u,v) for every strict pair u < v of the poset.
Digraph digraph_of_poset(const Poset& P);

// G(P): u,v adjacent iff incomparable in P.
Graph incomparability_graph(const Poset& P);

// Disjoint union of D1 and D2 (D2's vertices shifted up by D1's count) plus
// every edge from a vertex of D1 to a vertex of D2.
Digraph ordinal_join(const Digraph& D1, const Digraph& D2);

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool is_acyclic(const Digraph& D);  // loops count as cycles

// Whether every directed path of length two has its transitive shortcut.
bool is_transitively_closed(const Digraph& D);

// Whether for every ordered pair (u,v), including u = v, at most one of D
// and its complement has a directed path of length two from u to v.
// Requires D loopless; throws std::invalid_argument otherwise.
bool is_weakly_31_free(const Digraph& D);

bool is_three_free(const Poset& P);     // no chain a < b < c
bool is_three_one_free(const Poset& P);  // no 3-chain plus incomparable element

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

// All set partitions of V(G) with no edge inside a block.
std::vector<SetPartition> stable_partitions(const Graph& G);

// All set partitions of V(G) in which every block induces a connected
// subgraph (the lattice of contractions of G, ordered by refinement).
std::vector<SetPartition> contraction_lattice(const Graph& G);

// Path-cycle covers.  for_each_cover streams them; path_cycle_covers
// materializes the list; cover_type_tally counts covers by
// (path type, cycle type).
void for_each_cover(const Digraph& D,
                    const std::function<void(const PathCycleCover&)>& fn);
std::vector<PathCycleCover> path_cycle_covers(const Digraph& D);
std::map<std::pair<Partition, Partition>, Int> cover_type_tally(
    const Digraph& D);

// Decomposes an explicit edge set (no two edges sharing a row or column;
// throws std::invalid_argument otherwise) into a cover of [d].
PathCycleCover cover_from_edges(int d,
                                const std::vector<std::pair<int, int>>& edges);

// All orientations of E(G) containing no directed cycle.
std::vector<Digraph> acyclic_orientations(const Graph& G);

// All words p_1 ... p_n listing the elements of P so that u < v in P
// implies u appears before v.
std::vector<Permutation> linear_extensions(const Poset& P);

// All d! placements of d non-taking rooks on [d] x [d], and the subset of a
// placement's squares that lie on the board of D.
std::vector<RookPlacement> rook_placements_full(int d);
std::vector<std::pair<int, int>> drop(const RookPlacement& T, const Digraph& D);

// All fillings of the given shape with each vertex of D exactly once such
// that every row is a directed path of D and no entry sits directly above
// the source of an edge pointing at it (that is, (v_{i+1,j}, v_{i,j}) is
// never an edge).  Throws if |shape| differs from the vertex count.
std::vector<Tableau> enumerate_D_tableaux(const Digraph& D,
                                          const Partition& shape);

// Poset analogue: rows increase strictly in P, and v_{i+1,j} < v_{i,j} in P
// is forbidden.
std::vector<Tableau> enumerate_P_tableaux(const Poset& P,
                                          const Partition& shape);

// For a poset with no 3-chain (so every tableau has at most two columns):
// all P-tableaux of all shapes, grouped into classes under the pop move
// (move the bottom of the right column to the bottom of the left column,
// iterated; two tableaux are equivalent when some iterate of one is the
// other).  Throws if P has a 3-chain.
std::vector<std::vector<Tableau>> popping_classes(const Poset& P);

// Representatives of the input structures under vertex relabelling, chosen
// by minimal adjacency bitstring over all permutations.  All inputs must
// share one vertex count, at most 8.
std::vector<Digraph> iso_classes(const std::vector<Digraph>& values);
std::vector<Graph> iso_classes(const std::vector<Graph>& values);

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------
//
//   graph n        followed by lines "u v"   (unordered edges, no loops)
//   digraph n      followed by lines "u v"   (ordered edges, loops allowed)
//   poset n        followed by lines "u v"   (meaning u < v; closure taken)
//   tree n root r  followed by lines "u v"   (must form a tree)
//
// Blank lines and lines starting with '#' are ignored.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line_number, const std::string& message);
  int line() const { return line_; }

 private:
  int line_ = 0;
};

using ParsedStructure = std::variant<Graph, Digraph, Poset, RootedTree>;

ParsedStructure parse_structure(const std::string& text);

std::string serialize_structure(const Graph& G);
std::string serialize_structure(const Digraph& D);
std::string serialize_structure(const Poset& P);
std::string serialize_structure(const RootedTree& T);
std::string serialize_structure(const ParsedStructure& value);

}  // namespace pcsym
