#include "pcsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pcsym/json_io.hpp"
#include "pcsym/multipoly.hpp"
#include "pcsym/permutations.hpp"
#include "pcsym/qsym.hpp"
#include "pcsym/setpartitions.hpp"

namespace pcsym {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxStoredFailures = 50;

// ---------------------------------------------------------------------------
// Sweep plumbing
// ---------------------------------------------------------------------------

class Sweep {
 public:
  explicit Sweep(std::string name)
      : t0_(std::chrono::steady_clock::now()) {
    rep_.check_name = std::move(name);
  }

  // Records one instance.  describe() builds the failure payload and is
  // only invoked when the comparison failed.
  template <typename F>
  void check(bool ok, F&& describe) {
    ++rep_.instances_run;
    if (!ok && rep_.failures.size() < kMaxStoredFailures)
      rep_.failures.push_back(describe());
    else if (!ok)
      overflowed_ = true;
  }

  CheckReport finish() {
    if (overflowed_ && !rep_.failures.empty())
      rep_.failures.back().actual += " [additional failures not stored]";
    rep_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
            .count();
    return std::move(rep_);
  }

 private:
  CheckReport rep_;
  bool overflowed_ = false;
  std::chrono::steady_clock::time_point t0_;
};

int bound(const CheckOptions& o, int own_limit) {
  return std::min(o.max_vertices, own_limit);
}

std::mt19937_64 seeded_rng(const CheckOptions& o, const std::string& name) {
  // A stable per-check stream: the user seed xor an FNV-1a hash of the
  // check name, so checks cannot perturb one another's draws.
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return std::mt19937_64(o.random_seed ^ h);
}

long rand_below(std::mt19937_64& rng, long k) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(k));
}

SymFunc random_symfunc(std::mt19937_64& rng, int max_deg) {
  SymFunc g;
  long terms = 1 + rand_below(rng, 5);
  for (long t = 0; t < terms; ++t) {
    int deg = static_cast<int>(rand_below(rng, max_deg + 1));
    const auto parts = integer_partitions(deg);
    Partition lam = parts[rand_below(rng, static_cast<long>(parts.size()))];
    Rat c(Int(rand_below(rng, 19) - 9), Int(1 + rand_below(rng, 4)));
    c.canonicalize();
    g.add_p_term(lam, c);
  }
  return g;
}

SymFunc random_homogeneous(std::mt19937_64& rng, int deg) {
  SymFunc g;
  const auto parts = integer_partitions(deg);
  long terms = 1 + rand_below(rng, 3);
  for (long t = 0; t < terms; ++t) {
    Partition lam = parts[rand_below(rng, static_cast<long>(parts.size()))];
    Rat c(Int(rand_below(rng, 19) - 9), Int(1 + rand_below(rng, 4)));
    c.canonicalize();
    g.add_p_term(lam, c);
  }
  return g;
}

std::string sf_str(const SymFunc& g) { return pretty_symfunc(g, Basis::p); }
std::string sf2_str(const SymFunc2& g) { return pretty_symfunc2(g); }

std::string pmap_str(const PartitionMap<Rat>& coeffs) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [lam, c] : coeffs) {
    if (!first) out << ", ";
    first = false;
    out << lam.str() << ": " << rat_str(c);
  }
  out << "}";
  return out.str();
}

PartitionMap<Rat> rat_map(const PartitionMap<Int>& counts) {
  PartitionMap<Rat> out;
  for (const auto& [lam, c] : counts)
    if (c != 0) out[lam] = Rat(c);
  return out;
}

PartitionMap<Rat> drop_zeros(const PartitionMap<Rat>& coeffs) {
  PartitionMap<Rat> out;
  for (const auto& [lam, c] : coeffs)
    if (c != 0) out[lam] = c;
  return out;
}

Partition hook_partition(int d, int r) {
  std::vector<int> parts{d - r};
  for (int t = 0; t < r; ++t) parts.push_back(1);
  return Partition(parts);
}

// Whether the parts of mu can be grouped so the group sums are exactly
// the parts of lam (mu is a refinement of lam as integer partitions).
bool partition_refines(const Partition& mu, const Partition& lam) {
  if (mu.weight() != lam.weight()) return false;
  int groups = lam.length(), items = mu.length();
  if (groups == 0) return items == 0;
  std::vector<int> assign(items, 0);
  while (true) {
    std::vector<int> sums(groups, 0);
    for (int t = 0; t < items; ++t) sums[assign[t]] += mu.parts[t];
    bool match = true;
    for (int b = 0; b < groups; ++b)
      if (sums[b] != lam.parts[b]) { match = false; break; }
    if (match) return true;
    int t = 0;
    while (t < items && ++assign[t] == groups) assign[t++] = 0;
    if (t == items) return false;
  }
}

// Isomorphism-class canonical form: the vertex relabelling whose
// row-major adjacency bitstring is smallest.
Digraph canonical_digraph(const Digraph& D) {
  long best_key = -1;
  Digraph best;
  for (const Permutation& p : all_permutations(D.d)) {
    Digraph img(D.d);
    for (auto [u, v] : D.edge_list())
      img.add_edge(p.word[u - 1], p.word[v - 1]);
    long key = 0;
    for (auto [u, v] : img.edge_list())
      key |= 1L << ((u - 1) * D.d + (v - 1));
    if (best_key < 0 || key < best_key) {
      best_key = key;
      best = std::move(img);
    }
  }
  return best;
}

Digraph loopless_complement(const Digraph& D) {
  Digraph out(D.d);
  for (int u = 1; u <= D.d; ++u)
    for (int v = 1; v <= D.d; ++v)
      if (u != v && !D.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

const BivarPoly::Vars kIJ{"i", "j"};

// ---------------------------------------------------------------------------
// Checks: combinatorics layer
// ---------------------------------------------------------------------------

CheckReport check_mobius_recursion(const CheckOptions& o) {
  Sweep sw("mobius_recursion");
  for (int n = 1; n <= bound(o, 5); ++n) {
    const auto elems = set_partitions(n);
    for (const auto& pi : elems)
      for (const auto& sigma : elems) {
        if (!refines(pi, sigma)) continue;
        Int total = 0;
        for (const auto& tau : elems)
          if (refines(pi, tau) && refines(tau, sigma))
            total += mobius_interval(pi, tau);
        Int expect = (pi == sigma) ? 1 : 0;
        sw.check(total == expect, [&] {
          return CheckFailure{"interval " + pi.str() + " <= " + sigma.str(),
                              expect.get_str(), total.get_str()};
        });
      }
  }
  return sw.finish();
}

CheckReport check_mobius_product_formula(const CheckOptions& o) {
  Sweep sw("mobius_product_formula");
  for (int n = 1; n <= bound(o, 5); ++n) {
    const auto elems = set_partitions(n);
    for (const auto& pi : elems)
      for (const auto& sigma : elems) {
        if (!refines(pi, sigma)) continue;
        Int got = abs(mobius_interval(pi, sigma));
        Int expect = 1;
        for (int part : interval_type(pi, sigma).parts)
          expect *= factorial(part - 1);
        sw.check(got == expect, [&] {
          return CheckFailure{"interval " + pi.str() + " <= " + sigma.str(),
                              expect.get_str(), got.get_str()};
        });
      }
  }
  return sw.finish();
}

CheckReport check_subset_type_fibers(const CheckOptions& o) {
  Sweep sw("subset_type_fibers");
  for (int d = 1; d <= bound(o, 6); ++d) {
    PartitionMap<Int> tally;
    for (std::uint32_t mask = 0;; ++mask) {
      tally[subset_type(mask, d)] += 1;
      if (mask == full_mask(d)) break;
    }
    for (const Partition& lam : integer_partitions(d)) {
      Int expect = factorial(lam.length()) / r_factorial(lam);
      Int got = tally.count(lam) ? tally.at(lam) : Int(0);
      sw.check(got == expect, [&] {
        return CheckFailure{"fiber of " + lam.str() + " over subsets of [" +
                                std::to_string(d) + "-1]",
                            expect.get_str(), got.get_str()};
      });
    }
  }
  return sw.finish();
}

CheckReport check_u_v_binomial_sums(const CheckOptions& o) {
  Sweep sw("u_v_binomial_sums");
  for (int k = 1; k <= bound(o, 7); ++k) {
    Int usum = 0, vsum = 0;
    for (int r = 0; r <= k - 1; ++r) {
      usum += u_sequence(r) * binomial(Int(k - 1), r);
      vsum += v_sequence(r) * binomial(Int(k - 1), r);
    }
    sw.check(usum == factorial(k), [&] {
      return CheckFailure{"sum_r u_r C(" + std::to_string(k - 1) + ",r)",
                          factorial(k).get_str(), usum.get_str()};
    });
    sw.check(vsum == factorial(k - 1), [&] {
      return CheckFailure{"sum_r v_r C(" + std::to_string(k - 1) + ",r)",
                          factorial(k - 1).get_str(), vsum.get_str()};
    });
  }
  return sw.finish();
}

CheckReport check_lattice_join_laws(const CheckOptions& o) {
  Sweep sw("lattice_join_laws");
  for (int n = 1; n <= bound(o, 5); ++n) {
    const auto elems = set_partitions(n);
    for (const auto& pi : elems) {
      sw.check(lattice_join(pi, pi) == pi, [&] {
        return CheckFailure{"join(" + pi.str() + ", itself)", pi.str(),
                            lattice_join(pi, pi).str()};
      });
      for (const auto& sigma : elems) {
        SetPartition ab = lattice_join(pi, sigma);
        sw.check(ab == lattice_join(sigma, pi) && refines(pi, ab) &&
                     refines(sigma, ab),
                 [&] {
                   return CheckFailure{
                       "join(" + pi.str() + ", " + sigma.str() + ")",
                       "commutative upper bound", ab.str()};
                 });
      }
    }
    // Associativity over all triples (n <= 4 keeps this small; n = 5 is
    // 52^3 joins and still runs in well under a second).
    for (const auto& a : elems)
      for (const auto& b : elems)
        for (const auto& c : elems) {
          SetPartition left = lattice_join(lattice_join(a, b), c);
          SetPartition right = lattice_join(a, lattice_join(b, c));
          sw.check(left == right, [&] {
            return CheckFailure{"join associativity on " + a.str() + ", " +
                                    b.str() + ", " + c.str(),
                                left.str(), right.str()};
          });
        }
  }
  return sw.finish();
}

// ---------------------------------------------------------------------------
// Checks: symmetric-function layer
// ---------------------------------------------------------------------------

CheckReport check_basis_roundtrip(const CheckOptions& o) {
  Sweep sw("basis_roundtrip");
  auto rng = seeded_rng(o, "basis_roundtrip");
  int deg = bound(o, 6);
  int count = o.samples_for("basis_roundtrip", 200);
  const Basis bases[] = {Basis::m, Basis::mtilde, Basis::p, Basis::e,
                         Basis::h, Basis::s,      Basis::f, Basis::xitilde};
  for (int t = 0; t < count; ++t) {
    SymFunc g = random_symfunc(rng, deg);
    for (Basis b : bases) {
      SymFunc back = SymFunc::from_basis(b, g.in_basis(b));
      sw.check(back == g, [&] {
        return CheckFailure{"roundtrip through " + basis_name(b) + " of " +
                                sf_str(g),
                            sf_str(g), sf_str(back)};
      });
    }
  }
  return sw.finish();
}

CheckReport check_omega_involution_ring_map(const CheckOptions& o) {
  Sweep sw("omega_involution_ring_map");
  auto rng = seeded_rng(o, "omega_involution_ring_map");
  int deg = bound(o, 5);
  int count = o.samples_for("omega_involution_ring_map", 50);
  for (int t = 0; t < count; ++t) {
    SymFunc f = random_symfunc(rng, deg);
    SymFunc g = random_symfunc(rng, deg);
    sw.check(f.omega().omega() == f, [&] {
      return CheckFailure{"omega twice on " + sf_str(f), sf_str(f),
                          sf_str(f.omega().omega())};
    });
    SymFunc lhs = (f * g).omega();
    SymFunc rhs = f.omega() * g.omega();
    sw.check(lhs == rhs, [&] {
      return CheckFailure{"omega of (" + sf_str(f) + ")(" + sf_str(g) + ")",
                          sf_str(rhs), sf_str(lhs)};
    });
  }
  return sw.finish();
}

CheckReport check_omega_mtilde_forgotten(const CheckOptions& o) {
  Sweep sw("omega_mtilde_forgotten");
  for (int deg = 1; deg <= bound(o, 6); ++deg)
    for (const Partition& lam : integer_partitions(deg)) {
      SymFunc lhs = SymFunc::basis_elem(Basis::mtilde, lam).omega();
      SymFunc rhs = SymFunc::basis_elem(Basis::f, lam)
                        .scaled(Rat(sgn_partition(lam)));
      sw.check(lhs == rhs, [&] {
        return CheckFailure{"omega of the augmented monomial at " + lam.str(),
                            sf_str(rhs), sf_str(lhs)};
      });
    }
  return sw.finish();
}

CheckReport check_forgotten_setpartition_sums(const CheckOptions& o) {
  Sweep sw("forgotten_setpartition_sums");
  for (int n = 1; n <= bound(o, 5); ++n) {
    const auto elems = set_partitions(n);
    for (const auto& pi : elems) {
      SymFunc target = SymFunc::basis_elem(Basis::f, pi.type());
      SymFunc via_mtilde, via_p;
      for (const auto& sigma : elems) {
        if (!refines(pi, sigma)) continue;
        via_mtilde = via_mtilde +
                     SymFunc::basis_elem(Basis::mtilde, sigma.type())
                         .scaled(Rat(lambda_factorial(pi, sigma)));
        via_p = via_p + SymFunc::p_term(sigma.type(),
                                        Rat(abs(mobius_interval(pi, sigma))));
      }
      sw.check(via_mtilde == target && via_p == target, [&] {
        return CheckFailure{"forgotten sums above " + pi.str(),
                            sf_str(target),
                            sf_str(via_mtilde) + " / " + sf_str(via_p)};
      });
    }
  }
  return sw.finish();
}

CheckReport check_xitilde_triangularity(const CheckOptions& o) {
  Sweep sw("xitilde_triangularity");
  for (int deg = 1; deg <= bound(o, 6); ++deg)
    for (const Partition& lam : integer_partitions(deg)) {
      auto m_coeffs = xi_tilde(lam).restrict_y0().in_basis(Basis::m);
      Rat diag = m_coeffs.count(lam)
                     ? m_coeffs.at(lam) / Rat(r_factorial(lam))
                     : Rat(0);
      sw.check(diag != 0, [&] {
        return CheckFailure{"diagonal entry at " + lam.str(), "nonzero", "0"};
      });
      for (const auto& [mu, c] : m_coeffs) {
        if (c == 0) continue;
        sw.check(partition_refines(mu, lam), [&] {
          return CheckFailure{"support entry (" + lam.str() + ", " + mu.str() +
                                  ")",
                              "0 outside refinements", rat_str(c)};
        });
      }
    }
  return sw.finish();
}

CheckReport check_qsym_roundtrip(const CheckOptions& o) {
  Sweep sw("qsym_roundtrip");
  auto rng = seeded_rng(o, "qsym_roundtrip");
  int extra = o.samples_for("qsym_roundtrip", 10);
  for (int d = 1; d <= bound(o, 6); ++d) {
    std::vector<SymFunc> cases;
    for (const Partition& lam : integer_partitions(d))
      cases.push_back(SymFunc::basis_elem(Basis::m, lam));
    for (int t = 0; t < extra; ++t)
      cases.push_back(random_homogeneous(rng, d));
    for (const SymFunc& g : cases) {
      QSymFunc q = qsym_from_sym(g, d);
      sw.check(qsym_to_sym(q) == g, [&] {
        return CheckFailure{"monomial-basis roundtrip of " + sf_str(g),
                            sf_str(g), sf_str(qsym_to_sym(q))};
      });
      QSymFunc re(d);
      for (const auto& [mask, c] : sym_to_Q(g, d))
        re = re + q_fundamental(mask, d).scaled(c);
      sw.check(re == q, [&] {
        return CheckFailure{"fundamental reassembly of " + sf_str(g),
                            "matching quasi-symmetric expansions",
                            "mismatch"};
      });
    }
  }
  return sw.finish();
}

CheckReport check_qsym_complement_omega(const CheckOptions& o) {
  Sweep sw("qsym_complement_omega");
  auto rng = seeded_rng(o, "qsym_complement_omega");
  int extra = o.samples_for("qsym_complement_omega", 5);
  for (int d = 1; d <= bound(o, 6); ++d) {
    std::vector<SymFunc> cases;
    for (const Partition& lam : integer_partitions(d)) {
      cases.push_back(SymFunc::basis_elem(Basis::m, lam));
      cases.push_back(SymFunc::basis_elem(Basis::s, lam));
    }
    for (int t = 0; t < extra; ++t)
      cases.push_back(random_homogeneous(rng, d));
    for (const SymFunc& g : cases) {
      SymFunc lhs = q_complement_map(g, d);
      sw.check(lhs == g.omega(), [&] {
        return CheckFailure{"subset complementation on " + sf_str(g),
                            sf_str(g.omega()), sf_str(lhs)};
      });
    }
  }
  return sw.finish();
}

CheckReport check_specialize2_delta(const CheckOptions& o) {
  Sweep sw("specialize2_delta");
  auto rng = seeded_rng(o, "specialize2_delta");
  int extra = o.samples_for("specialize2_delta", 10);
  BivarPoly vi = BivarPoly::variable(kIJ, 0);
  BivarPoly vj = BivarPoly::variable(kIJ, 1);
  std::vector<SymFunc> cases;
  for (int d = 0; d <= bound(o, 6); ++d)
    for (const Partition& lam : integer_partitions(d))
      cases.push_back(SymFunc::basis_elem(Basis::m, lam));
  for (int t = 0; t < extra; ++t)
    cases.push_back(random_symfunc(rng, bound(o, 6)));
  for (const SymFunc& g : cases) {
    BivarPoly lhs = SymFunc2::from_x(g).delta_xy().specialize2();
    BivarPoly rhs = g.specialize_ones().subst(vi + vj, vj);
    sw.check(lhs == rhs, [&] {
      return CheckFailure{"doubled-alphabet specialization of " + sf_str(g),
                          rhs.str(), lhs.str()};
    });
  }
  return sw.finish();
}

CheckReport check_iota_involution(const CheckOptions& o) {
  Sweep sw("iota_involution");
  auto iota = [](const SymFunc2& h) {
    return h.negate_y().omega_x().delta_xy();
  };
  auto hat = [](const SymFunc2& h) { return h.kappa_y().delta_xy(); };
  int lim = bound(o, 6);
  for (int mx = 0; mx <= lim; ++mx)
    for (int ny = 0; ny <= lim; ++ny) {
      Partition lx = mx > 0 ? Partition({mx}) : Partition();
      Partition ly = ny > 0 ? Partition({ny}) : Partition();
      SymFunc2 g = SymFunc2::p2_term(lx, ly);
      SymFunc2 twice = iota(iota(g));
      sw.check(twice == g, [&] {
        return CheckFailure{"iota twice on " + sf2_str(g), sf2_str(g),
                            sf2_str(twice)};
      });
      SymFunc2 lhs = hat(iota(g));
      SymFunc2 rhs = hat(g).negate_y().omega_x();
      sw.check(lhs == rhs, [&] {
        return CheckFailure{"hat-transform conjugation on " + sf2_str(g),
                            sf2_str(rhs), sf2_str(lhs)};
      });
    }
  return sw.finish();
}

CheckReport check_csv_identity(const CheckOptions& o) {
  Sweep sw("csv_identity");
  const int N = 5;  // so products are checked modulo total degree 6
  for (int d = 1; d <= bound(o, 3); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, true)) {
      auto [alpha, alpha_c] = walk_series(D, N);
      TruncatedMultiPoly total(d, N), alternating(d, N);
      for (int k = 0; k <= N; ++k) {
        total = total + alpha[k];
        alternating =
            alternating + alpha_c[k].scaled(Rat(k % 2 == 0 ? 1 : -1));
      }
      TruncatedMultiPoly one = TruncatedMultiPoly::constant(d, N, Rat(1));
      bool product_ok = (alternating * total == one);
      bool inverse_ok = (csv_series(alpha, N) == alternating);
      sw.check(product_ok && inverse_ok, [&] {
        return CheckFailure{serialize_structure(D),
                            "walk series inverted by the complement's "
                            "alternating series",
                            product_ok ? "series inverse mismatch"
                                       : "product differs from 1"};
      });
    }
  return sw.finish();
}

// ---------------------------------------------------------------------------
// Checks: structure layer
// ---------------------------------------------------------------------------

CheckReport check_cover_edge_count(const CheckOptions& o) {
  Sweep sw("cover_edge_count");
  for (int d = 1; d <= bound(o, 3); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, true))
      for_each_cover(D, [&](const PathCycleCover& c) {
        int lhs = static_cast<int>(c.edges.size());
        int rhs = D.d - c.num_paths();
        sw.check(lhs == rhs, [&] {
          return CheckFailure{serialize_structure(D) + "cover with " +
                                  std::to_string(c.edges.size()) + " edges",
                              std::to_string(rhs), std::to_string(lhs)};
        });
      });
  return sw.finish();
}

CheckReport check_path_subsets_are_covers(const CheckOptions& o) {
  Sweep sw("path_subsets_are_covers");
  for (int d = 1; d <= bound(o, 6); ++d)
    for (const Partition& lam : integer_partitions(d)) {
      Digraph D = build_D_lambda_mu(lam, Partition());
      auto covers = path_cycle_covers(D);
      long expect = 1L << (d - lam.length());
      bool all_paths = true;
      for (const auto& c : covers)
        if (c.num_cycles() != 0) all_paths = false;
      sw.check(static_cast<long>(covers.size()) == expect && all_paths, [&] {
        return CheckFailure{"disjoint paths of type " + lam.str(),
                            std::to_string(expect) + " all-path covers",
                            std::to_string(covers.size()) + " covers" +
                                (all_paths ? "" : " (some with cycles)")};
      });
    }
  return sw.finish();
}

CheckReport check_weakly_free_complement(const CheckOptions& o) {
  Sweep sw("weakly_free_complement");
  for (int d = 2; d <= bound(o, 4); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, false)) {
      bool lhs = is_weakly_31_free(D);
      bool rhs = is_weakly_31_free(loopless_complement(D));
      sw.check(lhs == rhs, [&] {
        return CheckFailure{serialize_structure(D), lhs ? "true" : "false",
                            rhs ? "true" : "false"};
      });
    }
  return sw.finish();
}

CheckReport check_poset_chain_partitions(const CheckOptions& o) {
  Sweep sw("poset_chain_partitions");
  for (int n = 1; n <= bound(o, 5); ++n)
    for (const Poset& P : all_labeled_posets(n)) {
      std::set<std::string> stable, chains, covers;
      for (const auto& pi : stable_partitions(incomparability_graph(P)))
        stable.insert(pi.str());
      for (const auto& pi : set_partitions(n)) {
        bool chain = true;
        for (const auto& block : pi.blocks)
          for (std::size_t a = 0; a + 1 < block.size() && chain; ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
              if (!P.comparable(block[a], block[b])) { chain = false; break; }
        if (chain) chains.insert(pi.str());
      }
      for (const auto& c : path_cycle_covers(digraph_of_poset(P))) {
        std::vector<std::vector<int>> blocks;
        for (const auto& path : c.paths) blocks.push_back(path);
        covers.insert(SetPartition(n, blocks).str());
      }
      sw.check(stable == chains && chains == covers, [&] {
        return CheckFailure{serialize_structure(P),
                            "identical stable/chain/path-cover partition "
                            "families",
                            std::to_string(stable.size()) + "/" +
                                std::to_string(chains.size()) + "/" +
                                std::to_string(covers.size()) + " members"};
      });
    }
  return sw.finish();
}

CheckReport check_popping_preserves_tableau(const CheckOptions& o) {
  Sweep sw("popping_preserves_tableau");
  for (int n = 1; n <= bound(o, 6); ++n)
    for (const Poset& P : all_labeled_posets(n)) {
      if (!is_three_free(P)) continue;
      // Valid tableaux per shape, for membership testing of pops.
      std::map<Partition, std::set<std::vector<std::vector<int>>>,
               PartitionOrder>
          valid;
      for (const auto& cls : popping_classes(P))
        for (const Tableau& t : cls) valid[t.shape()].insert(t.rows);
      for (const auto& [shape, members] : valid)
        for (const auto& rows : members) {
          int last2 = -1;
          for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].size() == 2) last2 = static_cast<int>(r);
          if (last2 < 0) continue;  // nothing to pop
          auto popped = rows;
          int moved = popped[last2][1];
          popped[last2].pop_back();
          popped.push_back({moved});
          Tableau result{popped};
          Partition new_shape = result.shape();
          bool ok = valid.count(new_shape) &&
                    valid.at(new_shape).count(popped) > 0;
          sw.check(ok, [&] {
            return CheckFailure{serialize_structure(P) + "pop from shape " +
                                    shape.str(),
                                "a valid tableau of shape " + new_shape.str(),
                                "popped diagram is not a tableau"};
          });
        }
    }
  return sw.finish();
}

// ---------------------------------------------------------------------------
// Checks: invariants layer
// ---------------------------------------------------------------------------

CheckReport check_path_cycle_closed_forms(const CheckOptions& o) {
  Sweep sw("path_cycle_closed_forms");
  for (int d = 1; d <= bound(o, 6); ++d) {
    // Directed path: sum of l(lam)! m_lam, hooks weighted by u_r.
    PartitionMap<Rat> pm;
    for (const Partition& lam : integer_partitions(d))
      pm[lam] = Rat(factorial(lam.length()));
    SymFunc2 path_formula = SymFunc2::from_x(SymFunc::from_basis(Basis::m, pm));
    SymFunc2 path_enum = path_cycle_sym(path_digraph(d));
    sw.check(path_enum == path_formula, [&] {
      return CheckFailure{"directed path on " + std::to_string(d) + " vertices",
                          sf2_str(path_formula), sf2_str(path_enum)};
    });
    PartitionMap<Rat> path_hooks;
    for (int r = 0; r < d; ++r)
      path_hooks[hook_partition(d, r)] = Rat(u_sequence(r));
    auto path_s = drop_zeros(path_enum.restrict_y0().in_basis(Basis::s));
    sw.check(path_s == path_hooks, [&] {
      return CheckFailure{"Schur form of the directed " + std::to_string(d) +
                              "-path",
                          pmap_str(path_hooks), pmap_str(path_s)};
    });

    // Directed cycle: d (l(lam)-1)! m_lam plus the pure cycle term.
    PartitionMap<Rat> cm;
    for (const Partition& lam : integer_partitions(d))
      cm[lam] = Rat(Int(d) * factorial(lam.length() - 1));
    SymFunc2 cycle_formula =
        SymFunc2::from_x(SymFunc::from_basis(Basis::m, cm)) +
        SymFunc2::p2_term(Partition(), Partition({d}));
    SymFunc2 cycle_enum = path_cycle_sym(cycle_digraph(d));
    sw.check(cycle_enum == cycle_formula, [&] {
      return CheckFailure{"directed cycle on " + std::to_string(d) +
                              " vertices",
                          sf2_str(cycle_formula), sf2_str(cycle_enum)};
    });
    PartitionMap<Rat> cycle_hooks;
    for (int r = 0; r < d; ++r) {
      Rat c = Rat(Int(d) * v_sequence(r));
      if (c != 0) cycle_hooks[hook_partition(d, r)] = c;
    }
    auto cycle_s = drop_zeros(cycle_enum.restrict_y0().in_basis(Basis::s));
    bool y_ok = (cycle_enum - SymFunc2::from_x(cycle_enum.restrict_y0())) ==
                SymFunc2::p2_term(Partition(), Partition({d}));
    sw.check(cycle_s == cycle_hooks && y_ok, [&] {
      return CheckFailure{"Schur form of the directed " + std::to_string(d) +
                              "-cycle",
                          pmap_str(cycle_hooks), pmap_str(cycle_s)};
    });
  }
  return sw.finish();
}

CheckReport check_poset_xi_equals_xg(const CheckOptions& o) {
  Sweep sw("poset_xi_equals_xg");
  for (int n = 1; n <= bound(o, 5); ++n)
    for (const Poset& P : all_labeled_posets(n)) {
      SymFunc2 xi = path_cycle_sym(digraph_of_poset(P));
      SymFunc2 xg = SymFunc2::from_x(chromatic_sym(incomparability_graph(P)));
      sw.check(xi == xg, [&] {
        return CheckFailure{serialize_structure(P), sf2_str(xg), sf2_str(xi)};
      });
    }
  return sw.finish();
}

// Shared sweep pattern: exhaustive digraphs d <= 3 (loops allowed) plus
// seeded random 4-vertex digraphs when the bound allows.
template <typename F>
void digraph_reciprocity_sweep(const CheckOptions& o, const std::string& name,
                               int default_samples, F&& run) {
  for (int d = 1; d <= bound(o, 3); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, true)) run(D);
  if (o.max_vertices >= 4) {
    auto rng = seeded_rng(o, name);
    int count = o.samples_for(name, default_samples);
    for (int t = 0; t < count; ++t) run(random_digraph(rng, 4, true));
  }
}

CheckReport check_cover_poly_specialization(const CheckOptions& o) {
  Sweep sw("cover_poly_specialization");
  digraph_reciprocity_sweep(o, "cover_poly_specialization", 50,
                            [&](const Digraph& D) {
    BivarPoly lhs = path_cycle_sym(D).specialize2();
    BivarPoly rhs = cover_poly(D);
    sw.check(lhs == rhs, [&] {
      return CheckFailure{serialize_structure(D), rhs.str(), lhs.str()};
    });
  });
  return sw.finish();
}

CheckReport check_rook_cover_counting(const CheckOptions& o) {
  Sweep sw("rook_cover_counting");
  BivarPoly one = BivarPoly::constant(kIJ, 1);
  BivarPoly vi = BivarPoly::variable(kIJ, 0);
  digraph_reciprocity_sweep(o, "rook_cover_counting", 50,
                            [&](const Digraph& D) {
    BivarPoly lhs = factorial_poly(D);
    BivarPoly rhs = cover_poly(D).subst(vi, one);
    sw.check(lhs == rhs, [&] {
      return CheckFailure{serialize_structure(D), rhs.str(), lhs.str()};
    });
  });
  return sw.finish();
}

CheckReport check_ordinal_join_multiplicativity(const CheckOptions& o) {
  Sweep sw("ordinal_join_multiplicativity");
  for (int total = 2; total <= bound(o, 5); ++total)
    for (int d1 = 1; d1 < total; ++d1) {
      int d2 = total - d1;
      for (const Digraph& D1 : all_labeled_digraphs(d1, true)) {
        SymFunc2 xi1 = path_cycle_sym(D1);
        for (const Digraph& D2 : all_labeled_digraphs(d2, true)) {
          SymFunc2 lhs = path_cycle_sym(ordinal_join(D1, D2));
          SymFunc2 rhs = xi1 * path_cycle_sym(D2);
          sw.check(lhs == rhs, [&] {
            return CheckFailure{serialize_structure(D1) + "joined with\n" +
                                    serialize_structure(D2),
                                sf2_str(rhs), sf2_str(lhs)};
          });
        }
      }
    }
  return sw.finish();
}

CheckReport check_main_reciprocity(const CheckOptions& o) {
  Sweep sw("main_reciprocity");
  digraph_reciprocity_sweep(o, "main_reciprocity", 50, [&](const Digraph& D) {
    SymFunc2 lhs = path_cycle_sym(D);
    SymFunc2 rhs =
        path_cycle_sym(complement(D)).negate_y().omega_x().delta_xy();
    sw.check(lhs == rhs, [&] {
      return CheckFailure{serialize_structure(D), sf2_str(lhs), sf2_str(rhs)};
    });
  });
  return sw.finish();
}

CheckReport check_reciprocity_fp_form(const CheckOptions& o) {
  Sweep sw("reciprocity_fp_form");
  std::map<Partition, SymFunc2, PartitionOrder> doubled_forgotten;
  digraph_reciprocity_sweep(o, "reciprocity_fp_form", 50,
                            [&](const Digraph& D) {
    SymFunc2 total;
    for_each_cover(complement(D), [&](const PathCycleCover& c) {
      Partition pt = c.path_type();
      Partition ct = c.cycle_type();
      auto it = doubled_forgotten.find(pt);
      if (it == doubled_forgotten.end())
        it = doubled_forgotten
                 .emplace(pt, SymFunc2::from_x(
                                  SymFunc::basis_elem(Basis::f, pt))
                                  .delta_xy())
                 .first;
      int sign = sgn_partition(pt) * (ct.weight() % 2 == 0 ? 1 : -1);
      total = total + (it->second *
                       SymFunc2::p2_term(Partition(), ct, Rat(sign)));
    });
    SymFunc2 expect = path_cycle_sym(D);
    sw.check(total == expect, [&] {
      return CheckFailure{serialize_structure(D), sf2_str(expect),
                          sf2_str(total)};
    });
  });
  return sw.finish();
}

CheckReport check_cover_reciprocity(const CheckOptions& o) {
  Sweep sw("cover_reciprocity");
  BivarPoly vi = BivarPoly::variable(kIJ, 0);
  BivarPoly vj = BivarPoly::variable(kIJ, 1);
  digraph_reciprocity_sweep(o, "cover_reciprocity", 50,
                            [&](const Digraph& D) {
    BivarPoly lhs = cover_poly(complement(D));
    BivarPoly rhs = cover_poly(D).subst(-vi - vj, vj).scaled(
        Rat(D.d % 2 == 0 ? 1 : -1));
    sw.check(lhs == rhs, [&] {
      return CheckFailure{serialize_structure(D), lhs.str(), rhs.str()};
    });
  });
  return sw.finish();
}

CheckReport check_rook_reciprocity(const CheckOptions& o) {
  Sweep sw("rook_reciprocity");
  BivarPoly vi = BivarPoly::variable(kIJ, 0);
  BivarPoly vj = BivarPoly::variable(kIJ, 1);
  BivarPoly one = BivarPoly::constant(kIJ, 1);
  digraph_reciprocity_sweep(o, "rook_reciprocity", 50, [&](const Digraph& D) {
    BivarPoly lhs = factorial_poly(complement(D));
    BivarPoly rhs = factorial_poly(D).subst(-vi - one, vj).scaled(
        Rat(D.d % 2 == 0 ? 1 : -1));
    sw.check(lhs == rhs, [&] {
      return CheckFailure{serialize_structure(D), lhs.str(), rhs.str()};
    });
  });
  return sw.finish();
}

CheckReport check_one_var_reciprocity(const CheckOptions& o) {
  Sweep sw("one_var_reciprocity");
  digraph_reciprocity_sweep(o, "one_var_reciprocity", 50,
                            [&](const Digraph& D) {
    SymFunc lhs = path_cycle_sym(D).restrict_y0();
    SymFunc rhs = path_cycle_sym(complement(D)).restrict_y0().omega();
    sw.check(lhs == rhs, [&] {
      return CheckFailure{serialize_structure(D), sf_str(lhs), sf_str(rhs)};
    });
  });
  return sw.finish();
}

CheckReport check_xi_inclusion_exclusion(const CheckOptions& o) {
  Sweep sw("xi_inclusion_exclusion");
  digraph_reciprocity_sweep(o, "xi_inclusion_exclusion", 25,
                            [&](const Digraph& D) {
    bool ok = true;
    std::string message;
    try {
      inclusion_exclusion_expand(D);
    } catch (const std::logic_error& e) {
      ok = false;
      message = e.what();
    }
    sw.check(ok, [&] {
      return CheckFailure{serialize_structure(D),
                          "placement expansion reassembles the cover sum",
                          message};
    });
  });
  return sw.finish();
}

CheckReport check_rook_inclusion_exclusion(const CheckOptions& o) {
  Sweep sw("rook_inclusion_exclusion");
  BivarPoly vi = BivarPoly::variable(kIJ, 0);
  digraph_reciprocity_sweep(o, "rook_inclusion_exclusion", 25,
                            [&](const Digraph& D) {
    auto counts = n_statistics(D).by_edge_count(D.d);
    BivarPoly rhs(kIJ);
    for (int k = 0; k <= D.d; ++k)
      rhs = rhs + binom_poly(vi + BivarPoly::constant(kIJ, k), D.d)
                      .scaled(Rat(counts[k]));
    BivarPoly lhs = factorial_poly(D);
    sw.check(lhs == rhs, [&] {
      return CheckFailure{serialize_structure(D), lhs.str(), rhs.str()};
    });
  });
  return sw.finish();
}

CheckReport check_xitilde_binomial_special(const CheckOptions& o) {
  Sweep sw("xitilde_binomial_special");
  BivarPoly vi = BivarPoly::variable(kIJ, 0);
  BivarPoly one = BivarPoly::constant(kIJ, 1);
  for (int total = 1; total <= bound(o, 6); ++total)
    for (int a = 0; a <= total; ++a)
      for (const Partition& lam : integer_partitions(a))
        for (const Partition& mu : integer_partitions(total - a)) {
          BivarPoly got = xi_tilde(lam, mu).specialize2().subst(vi, one);
          BivarPoly expect = binom_poly(
              vi + BivarPoly::constant(kIJ, total - lam.length()), total);
          sw.check(got == expect, [&] {
            return CheckFailure{"normalized cover sum at (" + lam.str() +
                                    ", " + mu.str() + ")",
                                expect.str(), got.str()};
          });
        }
  return sw.finish();
}

CheckReport check_xitilde_involution(const CheckOptions& o) {
  Sweep sw("xitilde_involution");
  for (int deg = 1; deg <= bound(o, 6); ++deg) {
    const auto lams = integer_partitions(deg);
    int n = static_cast<int>(lams.size());
    // M[r][c]: coefficient of the augmented monomial at lams[c] in the
    // normalized cover sum at lams[r].
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    for (int r = 0; r < n; ++r) {
      auto coeffs = xi_tilde(lams[r]).restrict_y0().in_basis(Basis::m);
      for (int c = 0; c < n; ++c)
        if (coeffs.count(lams[c]))
          M[r][c] = coeffs.at(lams[c]) / Rat(r_factorial(lams[c]));
    }
    auto Minv = invert_matrix(M);
    // The involution sends row r to sgn/l! times the unit vector, so its
    // square is the identity exactly when D Minv D = M with D diagonal.
    std::vector<Rat> diag(n);
    for (int r = 0; r < n; ++r)
      diag[r] = Rat(Int(sgn_partition(lams[r])), factorial(lams[r].length()));
    bool ok = true;
    for (int r = 0; r < n && ok; ++r)
      for (int c = 0; c < n && ok; ++c)
        if (diag[r] * Minv[r][c] * diag[c] != M[r][c]) ok = false;
    sw.check(ok, [&] {
      return CheckFailure{"degree " + std::to_string(deg),
                          "involution matrix squares to the identity",
                          "square differs from the identity"};
    });
  }
  return sw.finish();
}

void q_theorem_instance(Sweep& sw, const SymFunc& g, int d,
                        const std::string& label) {
  auto a = drop_zeros(g.in_basis(Basis::xitilde));
  PartitionMap<Rat> via_q;
  for (const auto& [mask, c] : sym_to_Q(g, d)) via_q[subset_type(mask, d)] += c;
  via_q = drop_zeros(via_q);
  sw.check(a == via_q, [&] {
    return CheckFailure{label, pmap_str(a), pmap_str(via_q)};
  });
}

CheckReport check_xitilde_q_theorem(const CheckOptions& o) {
  Sweep sw("xitilde_q_theorem");
  for (int d = 1; d <= bound(o, 6); ++d)
    for (const Partition& mu : integer_partitions(d))
      q_theorem_instance(sw, SymFunc::basis_elem(Basis::s, mu), d,
                         "Schur function at " + mu.str());
  for (int n = 1; n <= bound(o, 4); ++n)
    for (const Graph& G : all_labeled_graphs(n))
      q_theorem_instance(sw, chromatic_sym(G), n, serialize_structure(G));
  return sw.finish();
}

CheckReport check_schur_xitilde_positive(const CheckOptions& o) {
  Sweep sw("schur_xitilde_positive");
  auto nonneg = [](const PartitionMap<Rat>& coeffs) {
    for (const auto& [lam, c] : coeffs)
      if (c < 0) return false;
    return true;
  };
  for (int d = 1; d <= bound(o, 6); ++d)
    for (const Partition& mu : integer_partitions(d)) {
      auto coeffs = SymFunc::basis_elem(Basis::s, mu).in_basis(Basis::xitilde);
      sw.check(nonneg(coeffs), [&] {
        return CheckFailure{"Schur function at " + mu.str(),
                            "nonnegative expansion", pmap_str(coeffs)};
      });
    }
  for (int n = 1; n <= bound(o, 4); ++n)
    for (const Graph& G : all_labeled_graphs(n)) {
      auto coeffs = chromatic_sym(G).in_basis(Basis::xitilde);
      sw.check(nonneg(coeffs), [&] {
        return CheckFailure{serialize_structure(G), "nonnegative expansion",
                            pmap_str(coeffs)};
      });
    }
  return sw.finish();
}

CheckReport check_xg_ascent_expansion(const CheckOptions& o) {
  Sweep sw("xg_ascent_expansion");
  for (int n = 1; n <= bound(o, 5); ++n) {
    PartitionMap<SymFunc> basis_cache;
    for (const Partition& lam : integer_partitions(n))
      basis_cache[lam] = xi_tilde(lam).restrict_y0();
    for (const Graph& G : all_labeled_graphs(n)) {
      SymFunc expanded;
      for (const auto& [lam, c] : g_ascent_counts(G))
        expanded = expanded + basis_cache.at(lam).scaled(Rat(c));
      SymFunc expect = chromatic_sym(G);
      sw.check(expanded == expect, [&] {
        return CheckFailure{serialize_structure(G), sf_str(expect),
                            sf_str(expanded)};
      });
    }
  }
  return sw.finish();
}

CheckReport check_p_positivity_omega_xi(const CheckOptions& o) {
  Sweep sw("p_positivity_omega_xi");
  for (int d = 1; d <= bound(o, 4); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, false)) {
      if (!is_acyclic(D)) continue;
      SymFunc w = path_cycle_sym(D).restrict_y0().omega();
      bool ok = true;
      for (const auto& [lam, c] : w.p_coeffs())
        if (c < 0) ok = false;
      sw.check(ok, [&] {
        return CheckFailure{serialize_structure(D),
                            "nonnegative power-sum coefficients", sf_str(w)};
      });
    }
  return sw.finish();
}

CheckReport check_t_geq_inversion_positivity(const CheckOptions& o) {
  Sweep sw("t_geq_inversion_positivity");
  for (int d = 1; d <= bound(o, 3); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, false)) {
      if (!is_acyclic(D)) continue;
      SymFunc inverted;
      SetPartition bot = bottom_partition(d);
      for (const SetPartition& pi : set_partitions(d)) {
        SymFunc t = t_geq(D, pi);
        bool positive = true;
        for (const auto& [lam, c] : t.p_coeffs())
          if (c < 0) positive = false;
        sw.check(positive, [&] {
          return CheckFailure{serialize_structure(D) + "filter " + pi.str(),
                              "nonnegative power-sum coefficients", sf_str(t)};
        });
        inverted = inverted + t.scaled(Rat(mobius_interval(bot, pi)));
      }
      SymFunc expect = path_cycle_sym(D).restrict_y0();
      sw.check(inverted == expect, [&] {
        return CheckFailure{serialize_structure(D), sf_str(expect),
                            sf_str(inverted)};
      });
    }
  return sw.finish();
}

CheckReport check_xi_derivative_formula(const CheckOptions& o) {
  Sweep sw("xi_derivative_formula");
  for (int d = 1; d <= bound(o, 3); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, false)) {
      if (!is_acyclic(D)) continue;
      SymFunc xi = path_cycle_sym(D).restrict_y0();
      for (int i = 1; i <= d; ++i) {
        SymFunc lhs = xi_partial_p_formula(D, i);
        SymFunc rhs = xi.p_partial_derivative(i);
        sw.check(lhs == rhs, [&] {
          return CheckFailure{serialize_structure(D) + "derivative index " +
                                  std::to_string(i),
                              sf_str(rhs), sf_str(lhs)};
        });
      }
    }
  return sw.finish();
}

CheckReport check_delta_formula(const CheckOptions& o) {
  Sweep sw("delta_formula");
  BivarPoly vi = BivarPoly::variable(kIJ, 0);
  BivarPoly vj = BivarPoly::variable(kIJ, 1);
  BivarPoly one = BivarPoly::constant(kIJ, 1);
  for (int d = 1; d <= bound(o, 3); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, true)) {
      BivarPoly rhs(kIJ);
      for (const auto& [key, c] : delta_statistics(D)) {
        auto [q, r, s] = key;
        rhs = rhs + (binom_poly(vi + BivarPoly::constant(kIJ, q), d - r) *
                     (vj - one).pow(s))
                        .scaled(Rat(c));
      }
      BivarPoly lhs = cover_poly(D);
      sw.check(lhs == rhs, [&] {
        return CheckFailure{serialize_structure(D), lhs.str(), rhs.str()};
      });
    }
  return sw.finish();
}

CheckReport check_d_tableau_schur(const CheckOptions& o) {
  Sweep sw("d_tableau_schur");
  for (int d = 1; d <= bound(o, 4); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, false)) {
      if (!is_weakly_31_free(D)) continue;
      auto counts = rat_map(schur_coeffs_via_D_tableaux(D));
      auto expect =
          drop_zeros(path_cycle_sym(D).restrict_y0().in_basis(Basis::s));
      sw.check(counts == expect, [&] {
        return CheckFailure{serialize_structure(D), pmap_str(expect),
                            pmap_str(counts)};
      });
    }
  return sw.finish();
}

CheckReport check_p_tableau_schur(const CheckOptions& o) {
  Sweep sw("p_tableau_schur");
  for (int n = 1; n <= bound(o, 5); ++n)
    for (const Poset& P : all_labeled_posets(n)) {
      if (!is_three_one_free(P)) continue;
      auto counts = rat_map(schur_coeffs_via_P_tableaux(P));
      auto expect = drop_zeros(
          chromatic_sym(incomparability_graph(P)).in_basis(Basis::s));
      sw.check(counts == expect, [&] {
        return CheckFailure{serialize_structure(P), pmap_str(expect),
                            pmap_str(counts)};
      });
    }
  return sw.finish();
}

CheckReport check_threefree_e_positivity(const CheckOptions& o) {
  Sweep sw("threefree_e_positivity");
  for (int n = 1; n <= bound(o, 6); ++n)
    for (const Poset& P : all_labeled_posets(n)) {
      if (!is_three_free(P)) continue;
      bool ok = true;
      std::string message;
      try {
        threefree_e_expansion(P);  // tallies are nonnegative by construction
      } catch (const std::logic_error& e) {
        ok = false;
        message = e.what();
      }
      sw.check(ok, [&] {
        return CheckFailure{serialize_structure(P),
                            "popping classes reassemble the chromatic "
                            "function",
                            message};
      });
    }
  return sw.finish();
}

CheckReport check_xg_t_two_routes(const CheckOptions& o) {
  Sweep sw("xg_t_two_routes");
  for (int n = 1; n <= bound(o, 4); ++n)
    for (const Graph& G : all_labeled_graphs(n)) {
      bool ok = true;
      std::string message;
      TPoly tp;
      try {
        tp = xg_t(G);
      } catch (const std::logic_error& e) {
        ok = false;
        message = e.what();
      }
      sw.check(ok, [&] {
        return CheckFailure{serialize_structure(G),
                            "edge-subset and lattice expansions agree",
                            message};
      });
      if (!ok) continue;
      SymFunc at_minus1 = tp.eval(Rat(-1));
      SymFunc expect = chromatic_sym(G);
      sw.check(at_minus1 == expect, [&] {
        return CheckFailure{serialize_structure(G) + "evaluated at t = -1",
                            sf_str(expect), sf_str(at_minus1)};
      });
    }
  for (int n = 1; n <= bound(o, 6); ++n)
    for (const Graph& F : all_labeled_forests(n)) {
      TPoly tp = xg_t(F);
      bool ok = true;
      for (const auto& [power, g] : tp.terms())
        for (const auto& [lam, c] : g.p_coeffs())
          if (power != F.n - lam.length()) ok = false;
      sw.check(ok, [&] {
        return CheckFailure{serialize_structure(F),
                            "each power-sum term concentrated at one power "
                            "of t",
                            "term at an unexpected power"};
      });
    }
  return sw.finish();
}

CheckReport check_supercolor_agreement(const CheckOptions& o) {
  Sweep sw("supercolor_agreement");
  for (int n = 1; n <= bound(o, 4); ++n)
    for (const Graph& G : all_labeled_graphs(n)) {
      BivarPoly chi = chi_tilde(G);
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
          Int direct = supercolor_count(G, i, j);
          Rat via_chi = chi.eval(Rat(i + j), Rat(j - i));
          sw.check(Rat(direct) == via_chi, [&] {
            return CheckFailure{serialize_structure(G) + "(i,j) = (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")",
                                direct.get_str(), rat_str(via_chi)};
          });
        }
    }
  return sw.finish();
}

CheckReport check_chi_tilde_nonneg(const CheckOptions& o) {
  Sweep sw("chi_tilde_nonneg");
  for (int n = 1; n <= bound(o, 5); ++n)
    for (const Graph& G : all_labeled_graphs(n)) {
      bool ok = true;
      std::string message;
      try {
        BivarPoly chi = chi_tilde(G);
        if (!chi.integer_coeffs() || !chi.nonnegative_coeffs()) {
          ok = false;
          message = chi.str();
        }
      } catch (const std::logic_error& e) {
        ok = false;
        message = e.what();
      }
      sw.check(ok, [&] {
        return CheckFailure{serialize_structure(G),
                            "nonnegative integer coefficients", message};
      });
    }
  return sw.finish();
}

CheckReport check_tree_chi_tilde(const CheckOptions& o) {
  Sweep sw("tree_chi_tilde");
  for (int n = 1; n <= bound(o, 6); ++n)
    for (const Graph& T : all_labeled_trees(n)) {
      BivarPoly direct = chi_tilde(T);
      for (int root = 1; root <= n; ++root) {
        RootedTree rt(T, root);
        BivarPoly via_tree = chi_tilde_tree(rt);
        sw.check(via_tree == direct, [&] {
          return CheckFailure{serialize_structure(rt), direct.str(),
                              via_tree.str()};
        });
        AlphaBeta ab = alpha_beta(rt);
        bool pair_ok = ab.alpha.total_degree() == n &&
                       ab.beta.total_degree() == n &&
                       ab.alpha.terms().size() == ab.beta.terms().size();
        for (const auto& [exps, c] : ab.alpha.terms()) {
          Rat expect = c * Rat((n - exps[0]) % 2 == 0 ? 1 : -1);
          if (!(expect > 0) || ab.beta.coeff(exps[0], exps[1]) != expect)
            pair_ok = false;
        }
        sw.check(pair_ok, [&] {
          return CheckFailure{serialize_structure(rt),
                              "sign-alternating pair with matching "
                              "magnitudes",
                              ab.alpha.str() + " vs " + ab.beta.str()};
        });
      }
    }
  return sw.finish();
}

CheckReport check_ppartition_agreement(const CheckOptions& o) {
  Sweep sw("ppartition_agreement");
  for (int n = 1; n <= bound(o, 4); ++n)
    for (const Graph& G : all_labeled_graphs(n))
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
          Int lhs = ppartition_formula(G, i, j);
          Int rhs = supercolor_count(G, i, j);
          sw.check(lhs == rhs, [&] {
            return CheckFailure{serialize_structure(G) + "(i,j) = (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")",
                                rhs.get_str(), lhs.get_str()};
          });
        }
  return sw.finish();
}

template <typename IntTable, typename RatTable>
bool tables_agree(const IntTable& counted, const RatTable& algebraic) {
  if (counted.size() != algebraic.size()) return false;
  auto it = algebraic.begin();
  for (const auto& [key, c] : counted) {
    if (it == algebraic.end() || it->first != key || it->second != Rat(c))
      return false;
    ++it;
  }
  return true;
}

CheckReport check_truncated_xg_oracle(const CheckOptions& o) {
  Sweep sw("truncated_xg_oracle");
  for (int n = 1; n <= bound(o, 4); ++n)
    for (const Graph& G : all_labeled_graphs(n))
      for (int k = 0; k <= 4; ++k) {
        auto counted = brute_force_truncated_Xg(G, k);
        auto algebraic = truncate_to_variables(chromatic_sym(G), k);
        sw.check(tables_agree(counted, algebraic), [&] {
          return CheckFailure{serialize_structure(G) + "truncated to " +
                                  std::to_string(k) + " colors",
                              std::to_string(algebraic.size()) +
                                  " algebraic monomials",
                              std::to_string(counted.size()) +
                                  " tallied monomials"};
        });
      }
  return sw.finish();
}

CheckReport check_truncated_xi_oracle(const CheckOptions& o) {
  Sweep sw("truncated_xi_oracle");
  for (int d = 1; d <= bound(o, 3); ++d)
    for (const Digraph& D : all_labeled_digraphs(d, true))
      for (int k = 0; k <= 3; ++k) {
        auto counted = brute_force_truncated_Xi(D, k);
        auto algebraic = truncate_to_variables2(path_cycle_sym(D), k);
        sw.check(tables_agree(counted, algebraic), [&] {
          return CheckFailure{serialize_structure(D) + "truncated to " +
                                  std::to_string(k) + " colors",
                              std::to_string(algebraic.size()) +
                                  " algebraic monomials",
                              std::to_string(counted.size()) +
                                  " tallied monomials"};
        });
      }
  return sw.finish();
}

CheckReport check_golden_xitilde_tables(const CheckOptions& o) {
  Sweep sw("golden_xitilde_tables");
  for (const auto& [deg, table] : golden_xitilde_tables()) {
    if (deg > o.max_vertices) continue;
    const auto lams = integer_partitions(deg);
    for (std::size_t r = 0; r < lams.size(); ++r) {
      auto coeffs = xi_tilde(lams[r]).restrict_y0().in_basis(Basis::m);
      for (std::size_t c = 0; c < lams.size(); ++c) {
        Rat got = coeffs.count(lams[c]) ? coeffs.at(lams[c]) : Rat(0);
        sw.check(got == table[r][c], [&] {
          return CheckFailure{"table entry (" + lams[r].str() + ", " +
                                  lams[c].str() + ")",
                              rat_str(table[r][c]), rat_str(got)};
        });
      }
    }
  }
  return sw.finish();
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

using CheckFn = CheckReport (*)(const CheckOptions&);

struct RegistryEntry {
  const char* name;
  CheckFn fn;
};

// Kept sorted by name; check_names() and the suite rely on this order.
const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      {"basis_roundtrip", &check_basis_roundtrip},
      {"chi_tilde_nonneg", &check_chi_tilde_nonneg},
      {"cover_edge_count", &check_cover_edge_count},
      {"cover_poly_specialization", &check_cover_poly_specialization},
      {"cover_reciprocity", &check_cover_reciprocity},
      {"csv_identity", &check_csv_identity},
      {"d_tableau_schur", &check_d_tableau_schur},
      {"delta_formula", &check_delta_formula},
      {"forgotten_setpartition_sums", &check_forgotten_setpartition_sums},
      {"golden_xitilde_tables", &check_golden_xitilde_tables},
      {"iota_involution", &check_iota_involution},
      {"lattice_join_laws", &check_lattice_join_laws},
      {"main_reciprocity", &check_main_reciprocity},
      {"mobius_product_formula", &check_mobius_product_formula},
      {"mobius_recursion", &check_mobius_recursion},
      {"omega_involution_ring_map", &check_omega_involution_ring_map},
      {"omega_mtilde_forgotten", &check_omega_mtilde_forgotten},
      {"one_var_reciprocity", &check_one_var_reciprocity},
      {"ordinal_join_multiplicativity", &check_ordinal_join_multiplicativity},
      {"p_positivity_omega_xi", &check_p_positivity_omega_xi},
      {"p_tableau_schur", &check_p_tableau_schur},
      {"path_cycle_closed_forms", &check_path_cycle_closed_forms},
      {"path_subsets_are_covers", &check_path_subsets_are_covers},
      {"popping_preserves_tableau", &check_popping_preserves_tableau},
      {"poset_chain_partitions", &check_poset_chain_partitions},
      {"poset_xi_equals_xg", &check_poset_xi_equals_xg},
      {"ppartition_agreement", &check_ppartition_agreement},
      {"qsym_complement_omega", &check_qsym_complement_omega},
      {"qsym_roundtrip", &check_qsym_roundtrip},
      {"reciprocity_fp_form", &check_reciprocity_fp_form},
      {"rook_cover_counting", &check_rook_cover_counting},
      {"rook_inclusion_exclusion", &check_rook_inclusion_exclusion},
      {"rook_reciprocity", &check_rook_reciprocity},
      {"schur_xitilde_positive", &check_schur_xitilde_positive},
      {"specialize2_delta", &check_specialize2_delta},
      {"subset_type_fibers", &check_subset_type_fibers},
      {"supercolor_agreement", &check_supercolor_agreement},
      {"t_geq_inversion_positivity", &check_t_geq_inversion_positivity},
      {"threefree_e_positivity", &check_threefree_e_positivity},
      {"tree_chi_tilde", &check_tree_chi_tilde},
      {"truncated_xg_oracle", &check_truncated_xg_oracle},
      {"truncated_xi_oracle", &check_truncated_xi_oracle},
      {"u_v_binomial_sums", &check_u_v_binomial_sums},
      {"weakly_free_complement", &check_weakly_free_complement},
      {"xg_ascent_expansion", &check_xg_ascent_expansion},
      {"xg_t_two_routes", &check_xg_t_two_routes},
      {"xi_derivative_formula", &check_xi_derivative_formula},
      {"xi_inclusion_exclusion", &check_xi_inclusion_exclusion},
      {"xitilde_binomial_special", &check_xitilde_binomial_special},
      {"xitilde_involution", &check_xitilde_involution},
      {"xitilde_q_theorem", &check_xitilde_q_theorem},
      {"xitilde_triangularity", &check_xitilde_triangularity},
  };
  return entries;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

int CheckOptions::samples_for(const std::string& check_name,
                              int default_count) const {
  auto it = sample_counts.find(check_name);
  return it == sample_counts.end() ? default_count : it->second;
}

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& entry : registry()) names.push_back(entry.name);
  return names;
}

CheckReport run_check(const std::string& name, const CheckOptions& opts) {
  for (const auto& entry : registry())
    if (name == entry.name) return entry.fn(opts);
  throw std::invalid_argument("unknown check name: " + name);
}

std::vector<CheckReport> run_identity_suite(
    int max_vertices, std::uint64_t random_seed,
    const std::map<std::string, int>& sample_counts) {
  CheckOptions opts;
  opts.max_vertices = std::clamp(max_vertices, 0, 6);
  opts.random_seed = random_seed;
  opts.sample_counts = sample_counts;
  std::vector<CheckReport> reports;
  for (const auto& entry : registry()) reports.push_back(entry.fn(opts));
  return reports;
}

json check_report_json(const CheckReport& report, bool include_elapsed) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    json obj;
    obj["instance"] = f.instance;
    obj["expected"] = f.expected;
    obj["actual"] = f.actual;
    failures.push_back(obj);
  }
  json doc;
  doc["check_name"] = report.check_name;
  doc["instances_run"] = report.instances_run;
  doc["failures"] = failures;
  doc["pass"] = report.passed();
  if (include_elapsed) doc["elapsed_ms"] = report.elapsed_seconds * 1000.0;
  return doc;
}

std::string check_reports_json_lines(const std::vector<CheckReport>& reports,
                                     bool include_elapsed) {
  std::string out;
  for (const auto& report : reports) {
    out += check_report_json(report, include_elapsed).dump();
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

CensusResult census_weakly_free_four() {
  CensusResult res;
  Sweep sw("census_weakly_free_four");

  std::vector<Digraph> kept;
  for (const Digraph& D : all_labeled_digraphs(4, false))
    if (is_acyclic(D) && is_weakly_31_free(D) && !is_transitively_closed(D))
      kept.push_back(D);
  res.labelled_total = static_cast<long>(kept.size());

  // Group by canonical form, classes ordered by first appearance.
  std::map<std::string, int> class_of;
  std::vector<Digraph> reps;
  for (const Digraph& D : kept) {
    Digraph canon = canonical_digraph(D);
    std::string key = serialize_structure(canon);
    auto it = class_of.find(key);
    if (it == class_of.end()) {
      class_of[key] = static_cast<int>(reps.size());
      reps.push_back(canon);
      res.classes.emplace_back();
      res.classes.back().representative = std::move(canon);
    }
    ++res.classes[class_of.at(key)].labelled_count;
  }

  for (CensusClass& cls : res.classes) {
    cls.xi = path_cycle_sym(cls.representative).restrict_y0();
    cls.e_expansion = drop_zeros(cls.xi.in_basis(Basis::e));
    cls.s_expansion = drop_zeros(cls.xi.in_basis(Basis::s));
    cls.e_positive = true;
    for (const auto& [lam, c] : cls.e_expansion)
      if (c < 0) cls.e_positive = false;
    if (cls.e_positive) ++res.e_positive_classes;
  }

  // Orbits under edge reversal.
  std::vector<int> partner(reps.size());
  for (std::size_t idx = 0; idx < reps.size(); ++idx) {
    Digraph rev(reps[idx].d);
    for (auto [u, v] : reps[idx].edge_list()) rev.add_edge(v, u);
    partner[idx] =
        class_of.at(serialize_structure(canonical_digraph(rev)));
  }
  std::vector<bool> seen(reps.size(), false);
  for (std::size_t idx = 0; idx < reps.size(); ++idx) {
    if (seen[idx]) continue;
    std::vector<int> orbit{static_cast<int>(idx)};
    seen[idx] = true;
    int p = partner[idx];
    if (!seen[p]) {
      orbit.push_back(p);
      seen[p] = true;
    }
    bool orbit_positive = true;
    for (int member : orbit)
      if (!res.classes[member].e_positive) orbit_positive = false;
    if (orbit_positive) ++res.e_positive_orbits;
    res.converse_orbits.push_back(orbit);
  }

  // Claims from the recorded count of essentially distinct digraphs.
  sw.check(res.classes.size() == 5, [&] {
    return CheckFailure{"number of isomorphism classes", "5",
                        std::to_string(res.classes.size())};
  });
  sw.check(res.e_positive_classes == 1, [&] {
    return CheckFailure{"number of e-positive classes", "1",
                        std::to_string(res.e_positive_classes)};
  });
  PartitionMap<Rat> want_e;
  want_e[Partition({3, 1})] = 3;
  want_e[Partition({2, 1, 1})] = -1;
  want_e[Partition({1, 1, 1, 1})] = 1;
  PartitionMap<Rat> want_s;
  want_s[Partition({4})] = 1;
  want_s[Partition({3, 1})] = 2;
  want_s[Partition({2, 2})] = 1;
  want_s[Partition({2, 1, 1})] = 4;
  want_s[Partition({1, 1, 1, 1})] = 3;
  bool realized = false;
  for (const CensusClass& cls : res.classes)
    if (cls.e_expansion == want_e && cls.s_expansion == want_s)
      realized = true;
  sw.check(realized, [&] {
    return CheckFailure{"displayed expansion realized by some class",
                        pmap_str(want_e) + " = " + pmap_str(want_s),
                        "no class matches"};
  });

  res.report = sw.finish();
  return res;
}

json census_json(const CensusResult& census) {
  json classes = json::array();
  for (const CensusClass& cls : census.classes) {
    json obj;
    obj["representative"] = serialize_structure(cls.representative);
    obj["labelled_count"] = cls.labelled_count;
    obj["e_expansion"] = symfunc_to_json(cls.xi, Basis::e);
    obj["s_expansion"] = symfunc_to_json(cls.xi, Basis::s);
    obj["e_positive"] = cls.e_positive;
    classes.push_back(obj);
  }
  json doc;
  doc["labelled_total"] = census.labelled_total;
  doc["class_count"] = static_cast<long>(census.classes.size());
  doc["e_positive_classes"] = census.e_positive_classes;
  doc["classes"] = classes;
  doc["converse_orbits"] = census.converse_orbits;
  doc["e_positive_orbits"] = census.e_positive_orbits;
  doc["report"] = check_report_json(census.report);
  return doc;
}

// ---------------------------------------------------------------------------
// Brute-force oracles and truncations
// ---------------------------------------------------------------------------

MonomialTable brute_force_truncated_Xg(const Graph& G, int k) {
  if (k < 0 || k > 6)
    throw std::invalid_argument("color truncation supports at most 6 colors");
  MonomialTable table;
  if (k == 0) {
    if (G.n == 0) table[{}] = 1;
    return table;
  }
  std::vector<int> color(G.n, 0);  // colors 0..k-1 for vertices 1..n
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : G.edges)
      if (color[u - 1] == color[v - 1]) { proper = false; break; }
    if (proper) {
      std::vector<int> exps(k, 0);
      for (int v = 0; v < G.n; ++v) ++exps[color[v]];
      table[exps] += 1;
    }
    int t = 0;
    while (t < G.n && ++color[t] == k) color[t++] = 0;
    if (t == G.n) break;
  }
  return table;
}

MonomialTable2 brute_force_truncated_Xi(const Digraph& D, int k) {
  if (k < 0 || k > 5)
    throw std::invalid_argument("color truncation supports at most 5 colors");
  MonomialTable2 table;
  for_each_cover(D, [&](const PathCycleCover& c) {
    int paths = c.num_paths(), cycles = c.num_cycles();
    if (paths > k) return;  // paths need pairwise distinct colors
    // Injective path coloring: choose distinct colors in order.
    std::vector<int> pcolor(paths, 0);
    std::vector<bool> used(k, false);
    std::function<void(int)> assign_paths = [&](int at) {
      if (at == paths) {
        // Arbitrary cycle coloring.
        std::vector<int> ccolor(cycles, 0);
        while (true) {
          std::vector<int> xexps(k, 0), yexps(k, 0);
          for (int p = 0; p < paths; ++p)
            xexps[pcolor[p]] += static_cast<int>(c.paths[p].size());
          for (int q = 0; q < cycles; ++q)
            yexps[ccolor[q]] += static_cast<int>(c.cycles[q].size());
          table[{xexps, yexps}] += 1;
          if (cycles == 0) break;
          int t = 0;
          while (t < cycles && ++ccolor[t] == k) ccolor[t++] = 0;
          if (t == cycles) break;
        }
        return;
      }
      for (int col = 0; col < k; ++col) {
        if (used[col]) continue;
        used[col] = true;
        pcolor[at] = col;
        assign_paths(at + 1);
        used[col] = false;
      }
    };
    if (cycles > 0 && k == 0) return;
    assign_paths(0);
  });
  return table;
}

namespace {

// Distinct exponent vectors obtained by arranging the parts of lam into
// k slots (padding with zeros).
std::vector<std::vector<int>> arrangements(const Partition& lam, int k) {
  std::vector<std::vector<int>> out;
  if (lam.length() > k) return out;
  std::vector<int> slots(k, 0);
  for (int t = 0; t < lam.length(); ++t) slots[t] = lam.parts[t];
  std::sort(slots.begin(), slots.end());
  do {
    out.push_back(slots);
  } while (std::next_permutation(slots.begin(), slots.end()));
  return out;
}

// Monomial expansion of prod over parts of p_part in k variables,
// multiplied into the given table.
void multiply_power_sums(
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat>& table,
    const Partition& lam, int k, bool into_y) {
  for (int part : lam.parts) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> next;
    for (const auto& [key, c] : table)
      for (int var = 0; var < k; ++var) {
        auto grown = key;
        (into_y ? grown.second : grown.first)[var] += part;
        next[grown] += c;
      }
    table = std::move(next);
  }
}

}  // namespace

std::map<std::vector<int>, Rat> truncate_to_variables(const SymFunc& g,
                                                      int k) {
  std::map<std::vector<int>, Rat> out;
  for (const auto& [lam, c] : g.in_basis(Basis::m))
    for (const auto& exps : arrangements(lam, k)) out[exps] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, Rat>
truncate_to_variables2(const SymFunc2& g, int k) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> out;
  for (const auto& [key, c] : g.terms()) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> term;
    term[{std::vector<int>(k, 0), std::vector<int>(k, 0)}] = c;
    multiply_power_sums(term, key.first, k, false);
    multiply_power_sums(term, key.second, k, true);
    for (const auto& [mono, coeff] : term) out[mono] += coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Instance generators
// ---------------------------------------------------------------------------

std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("graph enumeration supports at most 6 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (long mask = 0; mask < (1L << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t t = 0; t < slots.size(); ++t)
      if (mask >> t & 1) g.add_edge(slots[t].first, slots[t].second);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Digraph> all_labeled_digraphs(int d, bool with_loops) {
  long slots_needed = with_loops ? static_cast<long>(d) * d
                                 : static_cast<long>(d) * (d - 1);
  if (d < 0 || slots_needed > 16)
    throw std::invalid_argument("digraph enumeration family too large");
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= d; ++u)
    for (int v = 1; v <= d; ++v)
      if (with_loops || u != v) slots.push_back({u, v});
  std::vector<Digraph> out;
  for (long mask = 0; mask < (1L << slots.size()); ++mask) {
    Digraph D(d);
    for (std::size_t t = 0; t < slots.size(); ++t)
      if (mask >> t & 1) D.add_edge(slots[t].first, slots[t].second);
    out.push_back(std::move(D));
  }
  return out;
}

std::vector<Poset> all_labeled_posets(int n) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("poset enumeration supports at most 6 elements");
  static std::mutex cache_mutex;
  static std::map<int, std::vector<Poset>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Poset> out;
  if (n == 0) {
    out.push_back(Poset(0, {}));
  } else {
    // Every poset on [n] restricts to one on [n-1]; element n rejoins via
    // a down-closed set A below it and an up-closed set B above it with
    // A x B already related.
    for (const Poset& P : all_labeled_posets(n - 1)) {
      int m = n - 1;
      std::vector<long> down_closed, up_closed;
      for (long mask = 0; mask < (1L << m); ++mask) {
        bool down = true, up = true;
        for (int v = 1; v <= m && (down || up); ++v) {
          if (!(mask >> (v - 1) & 1)) continue;
          for (int u = 1; u <= m; ++u) {
            if (P.less(u, v) && !(mask >> (u - 1) & 1)) down = false;
            if (P.less(v, u) && !(mask >> (u - 1) & 1)) up = false;
          }
        }
        if (down) down_closed.push_back(mask);
        if (up) up_closed.push_back(mask);
      }
      auto base = P.relation_list();
      for (long a : down_closed)
        for (long b : up_closed) {
          if (a & b) continue;
          bool crossed = true;
          for (int u = 1; u <= m && crossed; ++u) {
            if (!(a >> (u - 1) & 1)) continue;
            for (int w = 1; w <= m; ++w)
              if ((b >> (w - 1) & 1) && !P.less(u, w)) { crossed = false; break; }
          }
          if (!crossed) continue;
          auto rels = base;
          for (int u = 1; u <= m; ++u) {
            if (a >> (u - 1) & 1) rels.push_back({u, n});
            if (b >> (u - 1) & 1) rels.push_back({n, u});
          }
          out.push_back(Poset(n, rels));
        }
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache[n] = out;
  return out;
}

std::vector<Graph> all_labeled_trees(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("tree enumeration supports at most 7 vertices");
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1));
    return out;
  }
  std::vector<int> seq(n - 2, 1);
  while (true) {
    // Decode the sequence into its tree.
    std::vector<int> degree(n + 1, 1);
    for (int v : seq) ++degree[v];
    Graph g(n);
    std::vector<bool> done(n + 1, false);
    for (int v : seq) {
      int leaf = 0;
      for (int u = 1; u <= n; ++u)
        if (!done[u] && degree[u] == 1) { leaf = u; break; }
      g.add_edge(leaf, v);
      done[leaf] = true;
      --degree[v];
    }
    int a = 0, b = 0;
    for (int u = 1; u <= n; ++u)
      if (!done[u] && degree[u] == 1) (a == 0 ? a : b) = u;
    g.add_edge(a, b);
    out.push_back(std::move(g));

    int t = 0;
    while (t < n - 2 && ++seq[t] == n + 1) seq[t++] = 1;
    if (t == n - 2) break;
  }
  return out;
}

std::vector<Graph> all_labeled_forests(int n) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("forest enumeration supports at most 6 vertices");
  std::vector<Graph> out;
  for (const Graph& g : all_labeled_graphs(n)) {
    // Acyclic iff every edge joins two distinct components when added.
    std::vector<int> parent(n + 1);
    for (int v = 1; v <= n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    for (const auto& [u, v] : g.edges) {
      int ru = find(u), rv = find(v);
      if (ru == rv) { acyclic = false; break; }
      parent[ru] = rv;
    }
    if (acyclic) out.push_back(g);
  }
  return out;
}

Digraph random_digraph(std::mt19937_64& rng, int d, bool with_loops) {
  Digraph D(d);
  for (int u = 1; u <= d; ++u)
    for (int v = 1; v <= d; ++v) {
      if (!with_loops && u == v) continue;
      if (rng() & 1) D.add_edge(u, v);
    }
  return D;
}

// ---------------------------------------------------------------------------
// Golden data
// ---------------------------------------------------------------------------

const std::map<int, std::vector<std::vector<Rat>>>& golden_xitilde_tables() {
  static const std::map<int, std::vector<std::vector<Rat>>> tables = [] {
    auto R = [](long num, long den) {
      Rat q = Rat(Int(num), Int(den));
      q.canonicalize();
      return q;
    };
    std::map<int, std::vector<std::vector<Rat>>> t;
    // Rows and columns in reverse-lexicographic partition order.
    t[2] = {{R(1, 1), R(1, 1)},
            {R(0, 1), R(1, 1)}};
    t[3] = {{R(1, 1), R(1, 1), R(1, 1)},
            {R(0, 1), R(1, 2), R(1, 1)},
            {R(0, 1), R(0, 1), R(1, 1)}};
    t[4] = {{R(1, 1), R(1, 1), R(1, 1), R(1, 1), R(1, 1)},
            {R(0, 1), R(1, 2), R(0, 1), R(2, 3), R(1, 1)},
            {R(0, 1), R(0, 1), R(1, 1), R(2, 3), R(1, 1)},
            {R(0, 1), R(0, 1), R(0, 1), R(1, 3), R(1, 1)},
            {R(0, 1), R(0, 1), R(0, 1), R(0, 1), R(1, 1)}};
    t[5] = {{R(1, 1), R(1, 1), R(1, 1), R(1, 1), R(1, 1), R(1, 1), R(1, 1)},
            {R(0, 1), R(1, 2), R(0, 1), R(2, 3), R(1, 3), R(3, 4), R(1, 1)},
            {R(0, 1), R(0, 1), R(1, 2), R(1, 3), R(2, 3), R(3, 4), R(1, 1)},
            {R(0, 1), R(0, 1), R(0, 1), R(1, 3), R(0, 1), R(1, 2), R(1, 1)},
            {R(0, 1), R(0, 1), R(0, 1), R(0, 1), R(1, 3), R(1, 2), R(1, 1)},
            {R(0, 1), R(0, 1), R(0, 1), R(0, 1), R(0, 1), R(1, 4), R(1, 1)},
            {R(0, 1), R(0, 1), R(0, 1), R(0, 1), R(0, 1), R(0, 1), R(1, 1)}};
    return t;
  }();
  return tables;
}

}  // namespace pcsym
