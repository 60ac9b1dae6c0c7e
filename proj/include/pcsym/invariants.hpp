// Graph and digraph invariants: the chromatic symmetric function and its
// relatives.  Everything here is assembled from the enumerations in
// structures.hpp and the exact ring arithmetic in symfunc.hpp:
//
//   - chromatic_sym / chromatic_poly and the alternating edge-subset form;
//   - path_cycle_sym (the two-alphabet cover sum) with its counting
//     specialization cover_poly, rook numbers, and the rook polynomial;
//   - the inclusion-exclusion machinery: full-placement statistics
//     (n_statistics), the normalized basis functions xi_tilde, and the
//     drop-cycle refinement delta_statistics;
//   - the appended-row placement sums t_geq used by the rook-theoretic
//     expansion of the cover sum;
//   - quasi-symmetric descent-set expansions and graph-ascent counts;
//   - Schur coefficients by row-path tableaux, and the two-column popping
//     construction that writes 3-free poset functions in the e basis;
//   - the t-graded refinement xg_t interpolating between power sums and
//     the chromatic symmetric function;
//   - superfication specializations: two-parameter chromatic evaluations
//     chi_tilde, the tree recurrence alpha_beta / chi_tilde_tree, and the
//     brute-force supercolor and order-theoretic counting formulas;
//   - truncated walk generating functions feeding the closed-walk series
//     identity.
//
// Operations that internally recompute a value along two independent
// routes (inclusion_exclusion_expand, threefree_e_expansion, xg_t) throw
// std::logic_error when the routes disagree: such a disagreement always
// signals a bug, never data.

#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "pcsym/bivar.hpp"
#include "pcsym/multipoly.hpp"
#include "pcsym/partitions.hpp"
#include "pcsym/permutations.hpp"
#include "pcsym/rational.hpp"
#include "pcsym/setpartitions.hpp"
#include "pcsym/structures.hpp"
#include "pcsym/symfunc.hpp"

namespace pcsym {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// Counts of rook placements or covers grouped by the (path type, cycle
// type) pair of the cover their board edges decompose into.
struct CoverStatistics {
  std::map<std::pair<Partition, Partition>, Int> by_type;

  Int total() const;
  // Aggregate by number of board edges: a class (lam, mu) on d vertices
  // uses d - l(lam) edges.  Returns counts indexed 0..d.
  std::vector<Int> by_edge_count(int d) const;
};

// The pair of auxiliary two-parameter polynomials attached to a rooted
// tree by the chromatic-evaluation recurrence; variables are (m, n).
struct AlphaBeta {
  BivarPoly alpha{BivarPoly::Vars{"m", "n"}};
  BivarPoly beta{BivarPoly::Vars{"m", "n"}};
};

// ---------------------------------------------------------------------------
// Chromatic symmetric function
// ---------------------------------------------------------------------------

// Sum of augmented monomials m-tilde over all stable partitions of G.
SymFunc chromatic_sym(const Graph& G);

// The same function as an alternating sum of power sums over edge
// subsets: sum_S (-1)^{|S|} p_{lambda(S)}, lambda(S) = component sizes
// of the spanning subgraph (V, S).
SymFunc chromatic_sym_edges(const Graph& G);

// Proper-coloring counting polynomial, univariate in i.
BivarPoly chromatic_poly(const Graph& G);

// ---------------------------------------------------------------------------
// Path-cycle symmetric function and rook polynomials
// ---------------------------------------------------------------------------

// The two-alphabet cover sum: over every path-cycle cover S of D,
// m-tilde_{path type}(x) p_{cycle type}(y).
SymFunc2 path_cycle_sym(const Digraph& D);

// Counting polynomial in (i, j): sum over covers of
// falling(i, #paths) j^{#cycles}.  Equals the (1^i; 1^j) specialization
// of path_cycle_sym.
BivarPoly cover_poly(const Digraph& D);

// r_k = number of placements of k non-taking rooks on the board of B,
// for k = 0..d (equivalently, covers using exactly k edges).
std::vector<Int> rook_numbers(const Digraph& B);

// R(B;i) = sum_k r_k falling(i, d-k), univariate in i.
BivarPoly factorial_poly(const Digraph& B);

// ---------------------------------------------------------------------------
// Inclusion-exclusion over full placements
// ---------------------------------------------------------------------------

// Classifies all d! full non-taking placements T on [d] x [d] by the
// cover type of drop(T), the set of board edges of D selected by T.
CoverStatistics n_statistics(const Digraph& D);

// The normalized cover sum of the disjoint union of paths of sizes lam
// and cycles of sizes mu: each cover S contributes
// m-tilde_{path type}(x) p_{cycle type}(y) / (#paths of S)!.
SymFunc2 xi_tilde(const Partition& lam, const Partition& mu = Partition());

// Expands path_cycle_sym(D) in the xi_tilde functions with the
// coefficients from n_statistics, verifies the expansion reproduces the
// cover sum exactly (std::logic_error otherwise), and returns the
// coefficient table.
std::map<std::pair<Partition, Partition>, Int> inclusion_exclusion_expand(
    const Digraph& D);

// delta[(q, r, s)] counts pairs (S, T) where T is a full placement, S is
// a subset of drop(T) forming exactly s vertex-disjoint cycles with r
// edges total and nothing else, and |drop(T)| = q + r.  Feeds the
// alternate expansion of cover_poly in binomials times powers of (j-1).
std::map<std::tuple<int, int, int>, Int> delta_statistics(const Digraph& D);

// Appended-row placement sum for an acyclic digraph: place one rook per
// column, on a board square or an appended square below the board; two
// placements' columns are equivalent when their rooks share a row; each
// placement contributes the monomial that colors every vertex by the
// appended row its column chain terminates in.  Sums x^S over all
// placements whose row equivalence coarsens pi.  Throws
// std::invalid_argument when D has a directed cycle.
SymFunc t_geq(const Digraph& D, const SetPartition& pi);

// ---------------------------------------------------------------------------
// Quasi-symmetric and ascent expansions
// ---------------------------------------------------------------------------

// For each permutation pi of [d], the set of positions i with
// (pi_i, pi_{i+1}) not an edge of D, as a bitmask over [d-1]; returns
// the multiset of these sets.  Summing the corresponding fundamental
// quasi-symmetric functions reassembles the y-free part of the cover sum.
std::map<std::uint32_t, Int> quasisym_expansion(const Digraph& D);

// Rank-based ascent type of one permutation, and the tally over all n!
// permutations.  The counts are exactly the coefficients of the
// chromatic symmetric function in the xi_tilde basis.
Partition g_ascent_type(const Graph& G, const Permutation& pi);
PartitionMap<Int> g_ascent_counts(const Graph& G);

// ---------------------------------------------------------------------------
// Tableau counts
// ---------------------------------------------------------------------------

// Number of row-path tableaux of each shape; for a weakly-free digraph
// these are the Schur coefficients of the y-free cover sum.  Throws
// std::invalid_argument unless is_weakly_31_free(D).
PartitionMap<Int> schur_coeffs_via_D_tableaux(const Digraph& D);

// Poset analogue; requires a poset with no induced 3-chain-plus-element
// obstruction (std::invalid_argument otherwise).
PartitionMap<Int> schur_coeffs_via_P_tableaux(const Poset& P);

// For a poset with no 3-chain: one e-index per popping class, the
// conjugate of the shape of the class member with the tallest right
// column.  Verifies sum e = chromatic_sym(incomparability_graph(P))
// exactly and throws std::logic_error on mismatch.
PartitionMap<Int> threefree_e_expansion(const Poset& P);

// ---------------------------------------------------------------------------
// t-graded chromatic function
// ---------------------------------------------------------------------------

// sum over edge subsets S of t^{|S|} p_{lambda(S)}; recomputed through
// the connected-partition lattice as sum over pi <= sigma of
// (1+t)^{#edges inside pi} mu(pi, sigma) p_{type sigma} and compared
// (std::logic_error on disagreement).  Evaluating at t = -1 recovers
// chromatic_sym.
TPoly xg_t(const Graph& G);

// ---------------------------------------------------------------------------
// Superfication evaluations
// ---------------------------------------------------------------------------

// Two-parameter chromatic evaluation: expand chromatic_sym over the
// doubled alphabet, specialize both alphabets to counting variables
// (i, j), and substitute i = (m-n)/2, j = (m+n)/2.  The result always
// has integer coefficients (std::logic_error otherwise).
BivarPoly chi_tilde(const Graph& G);

// Bottom-up tree recurrence for the auxiliary pair (alpha, beta) of the
// root, and the evaluation it yields for the underlying unrooted tree.
AlphaBeta alpha_beta(const RootedTree& T);
BivarPoly chi_tilde_tree(const RootedTree& T);

// Brute-force count of pairs (acyclic orientation, coloring into i
// unbarred plus j barred colors) with weak decrease along edges, strict
// between unbarred pairs.  Equals chi-tilde's (i, j) evaluation.
Int supercolor_count(const Graph& G, int i, int j);

// Order-theoretic formula for the same count: sum over acyclic
// orientations, over label words of the linear extensions of the induced
// order (targets below sources, vertices labelled by the canonical
// natural labeling), of binomial products in descent and ascent
// statistics of the word.
Int ppartition_formula(const Graph& G, int i, int j);

// ---------------------------------------------------------------------------
// Walk series
// ---------------------------------------------------------------------------

// Lists of the homogeneous walk generating functions alpha_{D,n} for
// n = 0..N, for D and for its complement; a walk visits n vertices along
// edges of the digraph and contributes the product of its vertex
// variables.  Requires d <= 4 and N <= 6 (std::invalid_argument).
std::pair<std::vector<TruncatedMultiPoly>, std::vector<TruncatedMultiPoly>>
walk_series(const Digraph& D, int N);

// ---------------------------------------------------------------------------
// Derivative expansion
// ---------------------------------------------------------------------------

// Right-hand side of the power-sum partial derivative expansion for an
// acyclic digraph: sum over i-vertex induced subdigraphs H of
// (sum over covers of H of the partition-lattice Moebius value to the
// full block) times the cover sum of D with V(H) deleted.  Matches
// d(path_cycle_sym)/d(p_i).  Throws std::invalid_argument on cyclic D.
SymFunc xi_partial_p_formula(const Digraph& D, int i);

}  // namespace pcsym
