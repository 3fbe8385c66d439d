#ifndef ORTHOSPACE_ENUMERATE_HPP
#define ORTHOSPACE_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orthospace/space.hpp"

namespace orthospace {

/// Practical generation bound (class counts explode beyond this).
inline constexpr int kMaxEnumVertices = 12;

/// Streams exactly one representative per isomorphism class on n points, in
/// a deterministic order (depth-first canonical augmentation). The visitor
/// returns false to stop early.
void enumerate_spaces(int n, const std::function<bool(const OrthoSpace&)>& visit);

struct CensusFilter {
  enum class Pred { all, l1, l2, linear };
  Pred pred = Pred::all;
  bool connected_only = false;
};

struct CountsRow {
  int n;
  std::uint64_t total;     // classes considered (all, or connected ones)
  std::uint64_t filtered;  // of those, classes passing the predicate
};

/// Everything one sweep over the size-n catalogue can tally. The
/// classifier_disagreements field cross-checks the structural classifiers
/// against the predicate definitions (expected 0): a mismatch between
/// "rank 2 ∧ L1" and a perfect-matching decomposition, or between
/// "rank 3 ∧ L1" and a windmill decomposition.
struct CensusTotals {
  int n = 0;
  std::uint64_t spaces = 0, connected = 0;
  std::uint64_t l1 = 0, l1_connected = 0;
  std::uint64_t l2 = 0, l2_connected = 0;
  std::uint64_t linear = 0, linear_connected = 0;
  std::uint64_t rank2_l1 = 0, rank3_l1 = 0, linear_rank_ge3 = 0;
  std::uint64_t classifier_disagreements = 0;

  CensusTotals& operator+=(const CensusTotals& o);
};

/// Census for every size 1..n_max in a single generation sweep. jobs > 1
/// splits the augmentation tree at depth n_max - 2 across worker threads;
/// totals are merged by summation, so results are scheduling-independent.
std::vector<CensusTotals> census_range(int n_max, int jobs = 1);

CensusTotals census_scan(int n, int jobs = 1);

CountsRow count_census(int n, CensusFilter filter, int jobs = 1);

enum class TableId { I, II, III };

struct TableRow {
  int n;
  // total, filtered, connected_total, connected_filtered
  std::array<std::uint64_t, 4> cells;
};

struct TableCheck {
  TableId id;
  bool pass;
  std::vector<TableRow> computed, expected;
  std::string first_mismatch;  // empty when pass
};

/// The published reference rows (I and II start at n=2, III at n=3; all end
/// at n=10).
const std::vector<TableRow>& golden_table(TableId id);

/// Diffs already-computed totals against the golden rows with n ≤ the range
/// covered.
TableCheck check_table_against(TableId id, const std::vector<CensusTotals>& totals);

/// Recomputes and diffs one table up to n_max.
TableCheck verify_table(TableId id, int n_max, int jobs = 1);

/// Labeled spaces on {0,...,two_n-1} of rank 2 fulfilling (L1), counted by
/// recursive perfect-matching enumeration; equals (two_n - 1)!!. Rejects odd
/// input ("no perfect matching on odd sets") and two_n > 16 (runtime).
std::uint64_t count_labeled_rank2_l1(int two_n);

/// Independent cross-check: brute force over all 2^C(two_n,2) labeled
/// spaces, filtering rank 2 ∧ (L1). Only for two_n ≤ 6.
std::uint64_t count_labeled_rank2_l1_brute(int two_n);

}  // namespace orthospace

#endif  // ORTHOSPACE_ENUMERATE_HPP
