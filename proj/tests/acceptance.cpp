// Acceptance sweep: ten end-to-end checks against the published census
// values, the counting corollary, the structural classifiers, the axiom
// implications and equivalences, and the order-theoretic characterizations,
// each reported as a single PASS/FAIL line. Exit status is the number of
// failures.
//
// The default run covers sizes up to 9 and finishes in well under a minute;
// --extended adds the size-10 rows (several minutes on one core). --jobs N
// splits the census generation across N worker threads.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orthospace/canonical.hpp"
#include "orthospace/enumerate.hpp"
#include "orthospace/graph6.hpp"
#include "orthospace/io.hpp"
#include "orthospace/lattice.hpp"
#include "orthospace/properties.hpp"
#include "oracles.hpp"

using namespace orthospace;

namespace {

struct Violations {
  std::uint64_t count = 0;
  std::string first;

  void note(const OrthoSpace& s, const std::string& what) {
    note_plain(what + " [" + to_graph6(s) + "]");
  }
  void note_plain(const std::string& what) {
    if (count == 0) first = what;
    ++count;
  }
  bool clean() const { return count == 0; }
};

// ---- criterion 7 predicate sweeps ------------------------------------------

// Lattice-free one-directional checks, affordable on the full size-9
// catalogue.
void check_implications(const OrthoSpace& s, Violations& v) {
  bool l1 = check_l1(s).holds;
  bool strirr = is_strongly_irredundant(s).holds;
  if (strirr && !is_irredundant(s).holds)
    v.note(s, "strongly irredundant yet redundant");
  if (l1 && !strirr) v.note(s, "first axiom without strong irredundancy");
  if (!l1) return;

  std::vector<VertexSet> cliques = s.maximal_orthogonal_sets();
  for (const VertexSet& c : cliques)
    if (c.size() != s.rank())
      v.note(s, "maximal orthogonal sets of unequal size under the first axiom");
  if (find_singleton_difference(s).has_value())
    v.note(s, "singleton difference between maximal sets under the first axiom");

  if (s.rank() >= 3) {
    if (!s.is_connected()) v.note(s, "disconnected despite first axiom and rank >= 3");
    if (s.diameter() > Distance::of(2)) v.note(s, "diameter above 2");
    int n = s.vertex_count();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!s.orthogonal(a, b) != (s.distance(a, b) == Distance::of(2)))
          v.note(s, "non-orthogonality differs from distance exactly 2");
  }
}

// One claimed equivalence, with violations split by direction. "forward"
// means the left-hand side held but the right-hand side did not.
struct EquivalenceTally {
  std::uint64_t forward = 0;
  std::uint64_t converse = 0;
  std::string first;

  void note(const OrthoSpace& s, bool left_held) {
    if (forward + converse == 0) first = to_graph6(s);
    ++(left_held ? forward : converse);
  }
  std::uint64_t total() const { return forward + converse; }
  std::string direction_summary() const {
    if (converse == 0) return "all forward-direction";
    if (forward == 0) return "all converse-direction";
    return std::to_string(forward) + " forward, " + std::to_string(converse) + " converse";
  }
};

// The two equivalences that need the closure lattice (Dacey verdicts).
void check_equivalences(const OrthoSpace& s, EquivalenceTally& eq1, EquivalenceTally& eq2) {
  bool l1 = check_l1(s).holds;
  bool strirr = is_strongly_irredundant(s).holds;
  if (!l1 && !strirr) return;  // both sides of both equivalences already false
  bool dacey = is_dacey(s).holds;
  if (l1 != (strirr && dacey)) eq1.note(s, l1);
  bool linear = l1 && check_l2(s).holds;
  bool irred = s.is_irreducible();
  if (linear != (irred && strirr && dacey)) eq2.note(s, linear);
}

// ---- criterion plumbing -----------------------------------------------------

int g_failures = 0;

void report(int number, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s - %s\n", number, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failures;
}

void skip(int number, const std::string& detail) {
  std::printf("criterion %d: SKIP - %s\n", number, detail.c_str());
}

template <typename Fn>
void run(int number, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(number, false, std::string("unexpected exception: ") + e.what());
  }
}

std::vector<CensusTotals> truncated(const std::vector<CensusTotals>& totals, std::size_t n) {
  return {totals.begin(), totals.begin() + std::min(n, totals.size())};
}

std::string table_detail(const TableCheck& c, const std::string& scope) {
  if (c.pass) return "table " + std::string(c.id == TableId::I    ? "I"
                                            : c.id == TableId::II ? "II"
                                                                  : "III") +
                     " reproduced " + scope;
  return c.first_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  int jobs = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      jobs = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--extended] [--jobs N]\n", argv[0]);
      return 2;
    }
  }

  const int n_max = extended ? 10 : 9;
  std::printf("census sweep up to %d points%s...\n", n_max,
              extended ? "" : " (--extended adds the size-10 rows)");
  std::vector<CensusTotals> totals = census_range(n_max, jobs);

  // 1-3: the published class counts, sizes 2..9
  run(1, [&] {
    TableCheck c = check_table_against(TableId::I, truncated(totals, 9));
    report(1, c.pass, table_detail(c, "for 2 <= n <= 9"));
  });
  run(2, [&] {
    TableCheck c = check_table_against(TableId::II, truncated(totals, 9));
    report(2, c.pass, table_detail(c, "for 2 <= n <= 9"));
  });
  run(3, [&] {
    TableCheck c = check_table_against(TableId::III, truncated(totals, 9));
    report(3, c.pass, table_detail(c, "for 3 <= n <= 9"));
  });

  // 4: the size-10 rows, opt-in
  if (!extended) {
    skip(4, "size-10 rows not requested (pass --extended)");
  } else {
    run(4, [&] {
      bool pass = true;
      std::string detail = "size-10 rows of tables I, II, III reproduced";
      for (TableId id : {TableId::I, TableId::II, TableId::III}) {
        TableCheck c = check_table_against(id, totals);
        if (!c.pass && pass) {
          pass = false;
          detail = c.first_mismatch;
        }
        if (c.expected.empty() || c.expected.back().n != 10) {
          pass = false;
          detail = "size-10 row missing from the comparison";
        }
      }
      report(4, pass, detail);
    });
  }

  // 5: labeled rank-2 first-axiom spaces are counted by (2n)!/(n! 2^n)
  run(5, [&] {
    bool pass = true;
    std::string detail = "labeled counts equal (2n)!/(n! 2^n) for 2n <= 12; brute force at 6 agrees";
    for (int k = 1; k <= 6; ++k) {
      std::uint64_t fact2n = 1, factn = 1;
      for (int i = 2; i <= 2 * k; ++i) fact2n *= static_cast<std::uint64_t>(i);
      for (int i = 2; i <= k; ++i) factn *= static_cast<std::uint64_t>(i);
      std::uint64_t expected = fact2n / (factn << k);
      std::uint64_t got = count_labeled_rank2_l1(2 * k);
      if (got != expected) {
        pass = false;
        detail = "count at " + std::to_string(2 * k) + " points: got " + std::to_string(got) +
                 ", formula gives " + std::to_string(expected);
        break;
      }
    }
    if (pass && count_labeled_rank2_l1_brute(6) != 15) {
      pass = false;
      detail = "brute-force scan of the 32768 labeled 6-point spaces did not yield 15";
    }
    report(5, pass, detail);
  });

  // 6: structural classifiers match the predicate definitions on every class
  run(6, [&] {
    std::uint64_t disagreements = 0;
    bool windmill_rows_ok = true;
    std::string detail;
    for (const CensusTotals& t : totals) {
      disagreements += t.classifier_disagreements;
      std::uint64_t expect_rank3 = (t.n >= 3 && t.n % 2 == 1) ? 1 : 0;
      if (t.rank3_l1 != expect_rank3 && windmill_rows_ok) {
        windmill_rows_ok = false;
        detail = "rank-3 classes with the first axiom at n=" + std::to_string(t.n) + ": " +
                 std::to_string(t.rank3_l1) + ", expected " + std::to_string(expect_rank3);
      }
    }
    if (disagreements != 0)
      detail = std::to_string(disagreements) + " classifier/predicate disagreements";
    report(6, disagreements == 0 && windmill_rows_ok,
           disagreements == 0 && windmill_rows_ok
               ? "matching/windmill classifiers exact on all " + std::to_string(n_max) +
                     "-point-and-below classes; one windmill class at each odd n >= 3"
               : detail);
  });

  // 7: the structural-property suite over whole catalogues. The criterion
  // demands zero violations of five claims, two of which are equivalences
  // that exhaustive search refutes: K3 (+) K2 ("DQg") is strongly
  // irredundant, Dacey, and irreducible yet satisfies neither L1 nor
  // linearity, and K3 (+) K3 ("EQhO") shows that uniform maximal-clique
  // size closes no gap. The check is kept as stated and reports the
  // refutation rather than weakening it; the counterexamples are pinned as
  // regression facts in the unit suite.
  run(7, [&] {
    Violations impl;       // the one-directional claims; expected to hold
    EquivalenceTally eq1;  // L1  vs  strongly irredundant + Dacey
    EquivalenceTally eq2;  // linear  vs  irreducible + strongly irredundant + Dacey
    for (int n = 1; n <= 8; ++n)
      enumerate_spaces(n, [&](const OrthoSpace& s) {
        check_implications(s, impl);
        check_equivalences(s, eq1, eq2);
        return true;
      });
    enumerate_spaces(9, [&](const OrthoSpace& s) {
      check_implications(s, impl);
      return true;
    });
    bool pass = impl.clean() && eq1.total() == 0 && eq2.total() == 0;
    std::string detail;
    if (pass) {
      detail =
          "axiom/irredundancy/Dacey suite holds on every class (full to n=8, "
          "lattice-free to n=9)";
    } else {
      if (eq1.total() != 0)
        detail += "L1 is strictly stronger than strongly irredundant + Dacey: " +
                  std::to_string(eq1.total()) + " classes n<=8 (" + eq1.direction_summary() +
                  "; first " + eq1.first +
                  (eq1.first == "DQg" ? " = K3 and K2 disjoint)" : ")");
      if (eq2.total() != 0)
        detail += std::string(detail.empty() ? "" : "; ") +
                  "linear is strictly stronger than irreducible + strongly irredundant + "
                  "Dacey: " +
                  std::to_string(eq2.total()) + " classes (" + eq2.direction_summary() +
                  "; first " + eq2.first + ")";
      detail += std::string("; one-directional checks: ") +
                (impl.clean() ? "zero violations to n=9"
                              : std::to_string(impl.count) + " violations, first: " + impl.first);
    }
    report(7, pass, detail);
  });

  // 8: closure lattices of first-axiom spaces, and the brute-force element check
  run(8, [&] {
    Violations v;
    for (int n = 1; n <= 8; ++n)
      enumerate_spaces(n, [&](const OrthoSpace& s) {
        if (!check_l1(s).holds) return true;
        ClosureLattice lat = compute_lattice(s);
        if (!is_ortholattice(lat).holds) v.note(s, "not an ortholattice");
        if (!is_orthomodular(lat).holds) v.note(s, "not orthomodular");
        if (!is_modular(lat).holds) v.note(s, "not modular");
        if (!is_atomistic(lat)) v.note(s, "not atomistic");
        if (lattice_length(lat) != s.rank()) v.note(s, "length differs from rank");
        if (s.rank() == 2 && match_MO(lat) != std::optional<int>(n / 2))
          v.note(s, "rank-2 lattice not recognized as MO(n/2)");
        return true;
      });
    for (int n = 1; n <= 7; ++n)
      enumerate_spaces(n, [&](const OrthoSpace& s) {
        ClosureLattice lat = compute_lattice(s);
        std::set<oracle::mask_t> got;
        for (VertexSet e : lat.elements) got.insert(e.bits());
        if (got != oracle::all_orthoclosed(oracle::adj_of(s), n))
          v.note(s, "lattice elements differ from the subset-scan oracle");
        return true;
      });
    report(8, v.clean(),
           v.clean() ? "closure lattices are atomistic modular ortholattices of length = rank "
                       "(n <= 8); elements match the subset oracle (n <= 7)"
                     : std::to_string(v.count) + " violations, first: " + v.first);
  });

  // 9: encoding and canonical-labeling infrastructure
  run(9, [&] {
    Violations v;
    for (int n = 1; n <= 7; ++n) {
      std::set<std::string> enumerated;
      enumerate_spaces(n, [&](const OrthoSpace& s) {
        std::string line = to_graph6(s);
        OrthoSpace back = from_graph6(line);
        if (to_graph6(back) != line || back.vertex_count() != n)
          v.note(s, "graph6 round-trip not bit-exact");
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (back.orthogonal(a, b) != s.orthogonal(a, b))
              v.note(s, "graph6 round-trip changed the relation");
        enumerated.insert(canonical_form(s));
        return true;
      });

      std::mt19937_64 rng(0xACCE97EDull + static_cast<std::uint64_t>(n));
      for (int rep = 0; rep < 1000; ++rep) {
        OrthoSpace s = oracle::random_space(rng, n);
        OrthoSpace t = oracle::relabel(s, oracle::random_permutation(rng, n));
        if (canonical_form(s) != canonical_form(t))
          v.note(s, "canonical form not invariant under relabeling");
      }

      // labeled brute force + dedup must reproduce the class list exactly
      std::set<std::string> brute;
      std::vector<std::pair<int, int>> all_edges;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all_edges.emplace_back(a, b);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all_edges.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < all_edges.size(); ++i)
          if ((mask >> i) & 1) edges.push_back(all_edges[i]);
        brute.insert(canonical_form(OrthoSpace::from_edges(n, edges)));
      }
      if (brute != enumerated)
        v.note_plain("class list at n=" + std::to_string(n) +
                     " differs from labeled brute force");
    }
    report(9, v.clean(),
           v.clean() ? "graph6 bit-exact and canonical form relabeling-invariant (n <= 7); "
                       "enumeration equals labeled brute force + dedup"
                     : std::to_string(v.count) + " violations, first: " + v.first);
  });

  // 10: desk-scale shadow of the finiteness theorem (its infinite claim is
  // out of reach here): no finite linear space of rank >= 3, and no connected
  // linear space beyond the trivial point, anywhere in the catalogue
  run(10, [&] {
    bool pass = true;
    std::string detail;
    for (const CensusTotals& t : totals) {
      if (t.linear_rank_ge3 != 0) {
        pass = false;
        detail = "linear class of rank >= 3 at n=" + std::to_string(t.n);
        break;
      }
      if (t.n >= 2 && t.linear_connected != 0) {
        pass = false;
        detail = "connected linear class at n=" + std::to_string(t.n);
        break;
      }
    }
    report(10, pass,
           pass ? "no linear class of rank >= 3 and no nontrivial connected linear class up to n=" +
                      std::to_string(n_max)
                : detail);
  });

  std::printf("%d criterion failure(s)\n", g_failures);
  return g_failures;
}
