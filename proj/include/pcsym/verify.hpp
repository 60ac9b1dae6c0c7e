// Theorem-verification suites, brute-force oracles, and the exhaustive
// four-vertex e-positivity census.
//
// Every identity the library claims is registered here as one named
// check: a deterministic sweep over a bounded instance family that
// compares two independently computed exact values and reports each
// mismatch with a replayable instance serialization.  run_identity_suite
// executes every registered check and is byte-deterministic for a fixed
// seed; unknown check names are a hard error (the suite fails closed,
// never skips silently).  Elapsed time is measured into every report but
// kept out of the default JSON so that report bytes are reproducible.
//
// The census enumerates all loopless digraphs on four vertices, filters
// the acyclic, weakly-(3+1)-free, non-transitively-closed ones, reduces
// them to isomorphism classes, and reports each class's one-alphabet
// cover sum with its e- and s-expansions.  The recorded historical
// counts (five classes, one of them e-positive) are checked as claims
// inside the returned report rather than assumed, so a discrepancy is
// observable in the output instead of silently patched.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "pcsym/invariants.hpp"
#include "pcsym/structures.hpp"
#include "pcsym/symfunc.hpp"

namespace pcsym {

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct CheckFailure {
  std::string instance;  // replayable serialization of the failing instance
  std::string expected;
  std::string actual;

  bool operator==(const CheckFailure&) const = default;
};

struct CheckReport {
  std::string check_name;
  long instances_run = 0;
  // At most 50 failures are retained per report (the earliest in sweep
  // order); instances_run always counts the full sweep.
  std::vector<CheckFailure> failures;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

// One JSON object per report.  elapsed is excluded unless requested so
// that fixed-seed runs serialize to identical bytes.
nlohmann::json check_report_json(const CheckReport& report,
                                 bool include_elapsed = false);
// One compact JSON object per line, in the order given.
std::string check_reports_json_lines(const std::vector<CheckReport>& reports,
                                     bool include_elapsed = false);

// ---------------------------------------------------------------------------
// The identity suite
// ---------------------------------------------------------------------------

struct CheckOptions {
  int max_vertices = 4;        // family size bound; each check also clamps
                               // to its own documented limit
  std::uint64_t random_seed = 0;
  // Per-check override of how many random instances a sampled sweep
  // draws, keyed by check name.
  std::map<std::string, int> sample_counts;

  int samples_for(const std::string& check_name, int default_count) const;
};

// All registered check names, sorted.
std::vector<std::string> check_names();

// Runs a single named check; throws std::invalid_argument for names not
// in check_names().
CheckReport run_check(const std::string& name, const CheckOptions& opts);

// Runs every registered check in name order.  max_vertices is clamped
// to [0, 6]; identity failures are data in the reports, never thrown.
std::vector<CheckReport> run_identity_suite(
    int max_vertices, std::uint64_t random_seed,
    const std::map<std::string, int>& sample_counts = {});

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

struct CensusClass {
  Digraph representative;  // canonical form: minimal adjacency bitstring
  long labelled_count = 0;
  SymFunc xi;              // the one-alphabet cover sum of the class
  PartitionMap<Rat> e_expansion;
  PartitionMap<Rat> s_expansion;
  bool e_positive = false;
};

struct CensusResult {
  long labelled_total = 0;
  std::vector<CensusClass> classes;
  int e_positive_classes = 0;
  // Classes grouped by edge reversal; a group is {i} when class i is
  // self-converse and {i, j} when classes i and j swap.
  std::vector<std::vector<int>> converse_orbits;
  int e_positive_orbits = 0;  // orbits whose classes are all e-positive
  // Claim check against the recorded counts (five classes, one
  // e-positive, the displayed expansion realized by some class).
  CheckReport report;
};

CensusResult census_weakly_free_four();

nlohmann::json census_json(const CensusResult& census);

// ---------------------------------------------------------------------------
// Brute-force color-tally oracles
// ---------------------------------------------------------------------------

// Key: exponent vector of x_1..x_k (and y_1..y_k for the two-alphabet
// table); value: number of colorings producing that monomial.
using MonomialTable = std::map<std::vector<int>, Int>;
using MonomialTable2 =
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int>;

// All proper colorings of G with colors in [k]; requires k <= 6.
MonomialTable brute_force_truncated_Xg(const Graph& G, int k);

// All pairs (cover, coloring) where the paths receive pairwise distinct
// colors in [k] (each contributing its vertex count to that x variable)
// and the cycles receive arbitrary colors in [k] (contributing to y).
// Requires k <= 5.
MonomialTable2 brute_force_truncated_Xi(const Digraph& D, int k);

// Algebraic truncations to finitely many variables, for comparison
// against the tallies above.
std::map<std::vector<int>, Rat> truncate_to_variables(const SymFunc& g, int k);
std::map<std::pair<std::vector<int>, std::vector<int>>, Rat>
truncate_to_variables2(const SymFunc2& g, int k);

// ---------------------------------------------------------------------------
// Instance generators (deterministic enumeration orders)
// ---------------------------------------------------------------------------

std::vector<Graph> all_labeled_graphs(int n);                      // n <= 6
std::vector<Digraph> all_labeled_digraphs(int d, bool with_loops); // <= 16 slots
std::vector<Poset> all_labeled_posets(int n);                      // n <= 6
std::vector<Graph> all_labeled_trees(int n);                       // Pruefer order
std::vector<Graph> all_labeled_forests(int n);                     // n <= 6
// One digraph with each edge slot filled by one bit of rng output,
// row-major over the board.
Digraph random_digraph(std::mt19937_64& rng, int d, bool with_loops);

// ---------------------------------------------------------------------------
// Golden data
// ---------------------------------------------------------------------------

// The frozen transition tables of the normalized cover-sum basis over
// the monomial basis: for each degree 2..5, row lambda (reverse-lex
// order) lists the m_mu coefficients of xi_tilde(lambda) restricted to
// one alphabet.
const std::map<int, std::vector<std::vector<Rat>>>& golden_xitilde_tables();

}  // namespace pcsym
