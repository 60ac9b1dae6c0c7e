// pcsym — command-line front end.
//
// One verb per invocation:
//
//   pcsym xg <file> [--basis B]   chromatic symmetric function of a graph
//   pcsym xi <file> [--y0]        path-cycle symmetric function of a digraph
//   pcsym cover <file>            cover polynomial C(D;i,j)
//   pcsym rook <file>             rook numbers and factorial polynomial
//   pcsym xgt <file>              the t-refinement of the chromatic function
//   pcsym chitilde <file>         two-parameter chromatic polynomial
//   pcsym ascent <file>           ascent-type counts N_lambda
//   pcsym expand --basis B        re-express a function JSON from stdin
//   pcsym check <name|all>        run verification checks, JSON line each
//   pcsym census                  the four-vertex digraph census
//
// Structured output is JSON (deterministic, keys sorted); --pretty switches
// to a human-readable rendering.  <file> may be "-" or omitted for stdin.
// Exit codes: 0 success / all checks pass, 1 check or computation failure,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "pcsym/invariants.hpp"
#include "pcsym/json_io.hpp"
#include "pcsym/verify.hpp"

using namespace pcsym;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph parse_graph(const std::string& path) {
  ParsedStructure value = parse_structure(read_input(path));
  if (auto* g = std::get_if<Graph>(&value)) return *g;
  if (auto* t = std::get_if<RootedTree>(&value)) return t->graph;
  throw std::invalid_argument("this command expects a graph (or tree) input");
}

Digraph parse_digraph(const std::string& path) {
  ParsedStructure value = parse_structure(read_input(path));
  if (auto* d = std::get_if<Digraph>(&value)) return *d;
  throw std::invalid_argument("this command expects a digraph input");
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::m, Basis::mtilde, Basis::p, Basis::e, Basis::h,
                  Basis::s, Basis::f, Basis::xitilde})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis: " + name);
}

json json_int(const Int& value) {
  if (value.fits_slong_p()) return json(value.get_si());
  return json(value.get_str());
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

bool symfunc2_is_pure_x(const SymFunc2& g) {
  for (const auto& [key, c] : g.terms())
    if (key.second.length() != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Verb bodies (return the process exit code)
// ---------------------------------------------------------------------------

int run_xg(const std::string& path, const std::string& basis, bool pretty) {
  Basis b = parse_basis(basis);
  SymFunc g = chromatic_sym(parse_graph(path));
  if (pretty)
    std::cout << pretty_symfunc(g, b) << "\n";
  else
    emit(symfunc_to_json(g, b));
  return 0;
}

int run_xi(const std::string& path, bool y0, bool pretty) {
  SymFunc2 xi = path_cycle_sym(parse_digraph(path));
  if (y0 || symfunc2_is_pure_x(xi)) {
    SymFunc g = xi.restrict_y0();
    if (pretty)
      std::cout << pretty_symfunc(g, Basis::m) << "\n";
    else
      emit(symfunc_to_json(g, Basis::m));
  } else {
    if (pretty)
      std::cout << pretty_symfunc2(xi) << "\n";
    else
      emit(symfunc2_to_json(xi));
  }
  return 0;
}

int run_cover(const std::string& path, bool pretty) {
  BivarPoly c = cover_poly(parse_digraph(path));
  if (pretty)
    std::cout << c.str() << "\n";
  else
    emit(bivar_to_json(c));
  return 0;
}

int run_rook(const std::string& path, bool pretty) {
  Digraph board = parse_digraph(path);
  std::vector<Int> numbers = rook_numbers(board);
  BivarPoly poly = factorial_poly(board);
  if (pretty) {
    std::cout << "rook numbers:";
    for (const Int& r : numbers) std::cout << " " << r.get_str();
    std::cout << "\nR = " << poly.str() << "\n";
  } else {
    json doc;
    json values = json::array();
    for (const Int& r : numbers) values.push_back(json_int(r));
    doc["rook_numbers"] = values;
    doc["polynomial"] = bivar_to_json(poly);
    emit(doc);
  }
  return 0;
}

int run_xgt(const std::string& path, bool pretty) {
  TPoly f = xg_t(parse_graph(path));
  if (pretty)
    std::cout << pretty_tpoly(f, Basis::p) << "\n";
  else
    emit(tpoly_to_json(f, Basis::p));
  return 0;
}

int run_chitilde(const std::string& path, bool pretty) {
  BivarPoly chi = chi_tilde(parse_graph(path));
  if (pretty)
    std::cout << chi.str() << "\n";
  else
    emit(bivar_to_json(chi));
  return 0;
}

int run_ascent(const std::string& path, bool pretty) {
  PartitionMap<Int> counts = g_ascent_counts(parse_graph(path));
  if (pretty) {
    for (const auto& [lam, c] : counts)
      std::cout << lam.str() << ": " << c.get_str() << "\n";
  } else {
    json rows = json::array();
    for (const auto& [lam, c] : counts) {
      json row;
      json parts = json::array();
      for (int part : lam.parts) parts.push_back(part);
      row["partition"] = parts;
      row["count"] = json_int(c);
      rows.push_back(row);
    }
    json doc;
    doc["counts"] = rows;
    emit(doc);
  }
  return 0;
}

int run_expand(const std::string& path, const std::string& basis,
               bool pretty) {
  Basis b = parse_basis(basis);
  json doc = json::parse(read_input(path));
  SymFunc g = symfunc_from_json(doc);
  if (pretty)
    std::cout << pretty_symfunc(g, b) << "\n";
  else
    emit(symfunc_to_json(g, b));
  return 0;
}

int run_checks(const std::string& which, int max_vertices,
               std::uint64_t seed, bool timings, bool pretty) {
  std::vector<CheckReport> reports;
  if (which == "all") {
    reports = run_identity_suite(max_vertices, seed);
  } else {
    CheckOptions opts;
    opts.max_vertices = max_vertices;
    opts.random_seed = seed;
    reports.push_back(run_check(which, opts));
  }
  bool all_pass = true;
  for (const auto& rep : reports)
    if (!rep.passed()) all_pass = false;
  if (pretty) {
    for (const auto& rep : reports) {
      std::cout << rep.check_name << ": "
                << (rep.passed() ? "pass" : "FAIL") << " ("
                << rep.instances_run << " instances";
      if (timings) {
        std::ostringstream ms;
        ms << static_cast<long>(rep.elapsed_seconds * 1000.0) << " ms";
        std::cout << ", " << ms.str();
      }
      std::cout << ")\n";
      for (const auto& f : rep.failures)
        std::cout << "  failed: " << f.instance << "\n    expected "
                  << f.expected << "\n    actual   " << f.actual << "\n";
    }
  } else {
    std::cout << check_reports_json_lines(reports, timings);
  }
  return all_pass ? 0 : 1;
}

int run_census(bool pretty) {
  CensusResult census = census_weakly_free_four();
  if (pretty) {
    std::cout << census.labelled_total << " labelled digraphs in "
              << census.classes.size() << " isomorphism classes ("
              << census.e_positive_classes << " e-positive)\n";
    for (std::size_t idx = 0; idx < census.classes.size(); ++idx) {
      const CensusClass& cls = census.classes[idx];
      std::cout << "class " << idx << " (" << cls.labelled_count
                << " labelled, "
                << (cls.e_positive ? "e-positive" : "not e-positive")
                << "):\n"
                << cls.representative.edge_list().size() << " edges, e = "
                << pretty_symfunc(cls.xi, Basis::e) << "\n";
    }
    std::cout << census.converse_orbits.size() << " reversal orbits, "
              << census.e_positive_orbits << " e-positive\n";
    for (const auto& f : census.report.failures)
      std::cout << "claim failed: " << f.instance << " (expected "
                << f.expected << ", actual " << f.actual << ")\n";
  } else {
    emit(census_json(census));
  }
  return census.report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic / path-cycle symmetric function toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
  auto with_common = [&pretty](CLI::App* sub) {
    sub->add_flag("--pretty", pretty,
                  "human-readable output instead of JSON");
    return sub;
  };

  std::string path;       // shared positional; empty or "-" means stdin
  std::string basis = "m";
  bool y0 = false;
  std::string check_name;
  int max_vertices = 4;
  std::uint64_t seed = 0;
  bool timings = false;

  auto* xg = with_common(app.add_subcommand("xg", "chromatic symmetric function"));
  xg->add_option("file", path, "structure file (default stdin)");
  xg->add_option("--basis", basis, "output basis (default m)");

  auto* xi = with_common(app.add_subcommand("xi", "path-cycle symmetric function"));
  xi->add_option("file", path, "structure file (default stdin)");
  xi->add_flag("--y0", y0, "restrict the cycle alphabet to zero");

  auto* cover = with_common(app.add_subcommand("cover", "cover polynomial"));
  cover->add_option("file", path, "structure file (default stdin)");

  auto* rook = with_common(app.add_subcommand("rook", "rook numbers and polynomial"));
  rook->add_option("file", path, "structure file (default stdin)");

  auto* xgt = with_common(app.add_subcommand("xgt", "t-refined chromatic function"));
  xgt->add_option("file", path, "structure file (default stdin)");

  auto* chitilde =
      with_common(app.add_subcommand("chitilde", "two-parameter chromatic polynomial"));
  chitilde->add_option("file", path, "structure file (default stdin)");

  auto* ascent = with_common(app.add_subcommand("ascent", "ascent-type counts"));
  ascent->add_option("file", path, "structure file (default stdin)");

  auto* expand = with_common(app.add_subcommand("expand", "re-express a function JSON"));
  expand->add_option("file", path, "function JSON file (default stdin)");
  expand->add_option("--basis", basis, "output basis (default m)");

  auto* check = with_common(app.add_subcommand("check", "run verification checks"));
  check->add_option("name", check_name, "check name or 'all'")->required();
  check->add_option("--max-vertices", max_vertices,
                    "instance size bound (default 4)");
  check->add_option("--seed", seed, "seed for sampled instances (default 0)");
  check->add_flag("--timings", timings, "include per-check elapsed time");

  auto* census = with_common(app.add_subcommand("census", "four-vertex digraph census"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 returns 0 for --help/--version; anything else is usage error.
    return code == 0 ? 0 : 2;
  }

  try {
    if (xg->parsed()) return run_xg(path, basis, pretty);
    if (xi->parsed()) return run_xi(path, y0, pretty);
    if (cover->parsed()) return run_cover(path, pretty);
    if (rook->parsed()) return run_rook(path, pretty);
    if (xgt->parsed()) return run_xgt(path, pretty);
    if (chitilde->parsed()) return run_chitilde(path, pretty);
    if (ascent->parsed()) return run_ascent(path, pretty);
    if (expand->parsed()) return run_expand(path, basis, pretty);
    if (check->parsed())
      return run_checks(check_name, max_vertices, seed, timings, pretty);
    if (census->parsed()) return run_census(pretty);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // An identity cross-check inside the library failed on this input.
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
