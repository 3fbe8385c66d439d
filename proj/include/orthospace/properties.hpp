#ifndef ORTHOSPACE_PROPERTIES_HPP
#define ORTHOSPACE_PROPERTIES_HPP

#include <optional>
#include <vector>

#include "orthospace/lattice.hpp"
#include "orthospace/space.hpp"

namespace orthospace {

enum class WitnessKind {
  l1_fail,
  l2_fail,
  irredundancy_fail,
  strong_irredundancy_fail,
  dacey_fail,
  difference_singleton,
};

/// Counterexample carrier. Pair kinds use (e, f); set kinds use (set_a,
/// set_b) — for dacey_fail the orthoclosed set and the maximal orthogonal
/// subset, for difference_singleton the two maximal cliques.
struct Witness {
  WitnessKind kind;
  int e = -1, f = -1;
  VertexSet set_a, set_b;
};

struct PropertyCheck {
  bool holds;
  std::optional<Witness> witness;
};

/// (L1): for every ordered pair of distinct e ̸⊥ f there is g ⊥ e with
/// {e,f}⊥ = {e,g}⊥. Witness: first failing (e,f) in index order.
PropertyCheck check_l1(const OrthoSpace& space);

/// (L2): for every ordered pair e ⊥ f there is g ̸⊥ e, g ∉ {e,f}, with
/// {e,f}⊥ = {e,g}⊥. Same witness discipline.
PropertyCheck check_l2(const OrthoSpace& space);

/// Linear = (L1) ∧ (L2).
bool is_linear(const OrthoSpace& space);

/// No two distinct points share the same complement {a}⊥.
PropertyCheck is_irredundant(const OrthoSpace& space);

/// No containment {a}⊥ ⊆ {b}⊥ between distinct points.
PropertyCheck is_strongly_irredundant(const OrthoSpace& space);

/// The perfect-matching spaces: every point orthogonal to exactly one other.
struct MatchingStructure {
  VertexSet a_side, b_side;
  std::vector<std::pair<int, int>> phi;  // (a, φ(a)), ascending in a
};

/// Succeeds iff every vertex has degree exactly 1; equivalently (for the
/// paper's purposes) the space has rank 2 and fulfills (L1). Each edge puts
/// its lower endpoint on the A side.
std::optional<MatchingStructure> classify_rank2(const OrthoSpace& space);

/// Windmill: a hub orthogonal to everything else over a perfect matching.
struct WindmillStructure {
  int hub;
  MatchingStructure matching;  // on the original labels minus the hub
};

/// Succeeds iff some apex h leaves a perfect matching on X ∖ {h} (apexes
/// tried in index order; only K₃ has more than one workable hub). Captures
/// exactly the rank-3 spaces fulfilling (L1). Needs n ≥ 3.
std::optional<WindmillStructure> classify_rank3(const OrthoSpace& space);

/// Adds l new points orthogonal to everything (old and new). Preserves (L1)
/// and raises the rank by exactly l. Throws std::invalid_argument on l < 1
/// or capacity overflow.
OrthoSpace extend_with_apexes(const OrthoSpace& space, int l);

/// Removes the common core ∩M⊥ (= the apex set) and reindexes. Throws
/// std::domain_error when that would leave an empty space.
OrthoSpace strip_common_core(const OrthoSpace& space);

/// Two maximal cliques D₁ ≠ D₂ with |D₁ ∖ D₂| = 1, if any (impossible in
/// (L1) spaces).
std::optional<Witness> find_singleton_difference(const OrthoSpace& space);

enum class Classification { matching_2abphi, windmill_3abphi, other };

struct PropertyReport {
  int n = 0;
  int rank = 0;
  bool connected = false;
  std::optional<Distance> diameter;  // absent for the one-point space
  PropertyCheck l1, l2;
  bool linear = false;
  PropertyCheck irredundant, strongly_irredundant;
  bool irreducible = false;
  std::optional<bool> dacey;      // absent when the lattice cap was hit
  std::optional<Witness> dacey_witness;
  std::optional<int> mo_index;    // meaningless when lattice_overflow
  bool lattice_overflow = false;
  Classification classification = Classification::other;
  std::optional<MatchingStructure> matching;
  std::optional<WindmillStructure> windmill;
  std::vector<Witness> witnesses;  // all failure witnesses, fixed order
};

/// Runs every predicate. A lattice-cap overflow is flagged rather than
/// thrown, leaving dacey/mo_index unknown.
PropertyReport full_report(const OrthoSpace& space, std::size_t lattice_cap = kDefaultLatticeCap);

}  // namespace orthospace

#endif  // ORTHOSPACE_PROPERTIES_HPP
