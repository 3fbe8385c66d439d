#ifndef ORTHOSPACE_LATTICE_HPP
#define ORTHOSPACE_LATTICE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthospace/space.hpp"

namespace orthospace {

/// Thrown when a closure system would exceed the configured element cap.
class lattice_too_large : public std::runtime_error {
 public:
  explicit lattice_too_large(std::size_t reached)
      : std::runtime_error("lattice too large: more than " + std::to_string(reached) +
                           " elements"),
        count(reached) {}
  std::size_t count;
};

inline constexpr std::size_t kDefaultLatticeCap = std::size_t{1} << 20;

/// The lattice C(X,⊥) of orthoclosed subsets, ordered by inclusion. Meet is
/// intersection; join of A,B is the least element containing A ∪ B.
/// Elements are sorted by (cardinality, member-lexicographic), so index 0 is
/// ∅ and the last index is X; this index order is the canonical order used
/// by every witness.
class ClosureLattice {
 public:
  int n = 0;                        // ambient point count
  std::vector<VertexSet> elements;  // sorted, deduplicated
  std::vector<int> ortho;          // ortho[i] = index of elements[i]⊥

  std::size_t size() const { return elements.size(); }
  VertexSet bottom() const { return elements.front(); }
  VertexSet top() const { return elements.back(); }

  /// Index of a set among the elements, or -1 if not orthoclosed.
  int index_of(VertexSet a) const;

  bool leq(int i, int j) const {
    if (!leq_.empty()) return leq_[static_cast<std::size_t>(i) * elements.size() +
                                   static_cast<std::size_t>(j)];
    return elements[static_cast<std::size_t>(i)].subset_of(elements[static_cast<std::size_t>(j)]);
  }

  /// Meet = intersection (closure systems are intersection-closed);
  /// -1 if the intersection is somehow absent (malformed hand-built data).
  int meet(int i, int j) const;

  /// Join = least element containing the union; -1 if none exists.
  int join(int i, int j) const;

  /// Elements covering ∅.
  std::vector<int> atoms() const;

  /// Cover (Hasse) relation as index pairs (lower, upper).
  std::vector<std::pair<int, int>> covers() const;

  /// Call after filling elements/ortho to precompute the inclusion matrix
  /// (only when small; behavior of leq() is identical either way).
  void finalize();

 private:
  std::vector<bool> leq_;        // materialized when size ≤ 4096
  std::vector<int> meet_, join_;  // materialized when size ≤ 512
};

/// All orthoclosed sets of the space: seed with X and the single-point
/// complements, close under pairwise intersection, then adjoin ⊥ images
/// (a provable no-op, kept as a cheap safety net). Throws lattice_too_large
/// beyond `cap` elements.
ClosureLattice compute_lattice(const OrthoSpace& space, std::size_t cap = kDefaultLatticeCap);

struct OrthoLatticeCheck {
  bool holds;
  std::string violation;  // human-readable description of the first failure
};

/// Verifies the ortholattice axioms on the stored data: ∅ and X present,
/// ortho a permutation, involutive and order-reversing, and A ∧ A⊥ = ∅,
/// A ∨ A⊥ = X for every element.
OrthoLatticeCheck is_ortholattice(const ClosureLattice& lat);

struct PairCheck {
  bool holds;
  std::optional<std::pair<int, int>> witness;  // element indices
};

/// Orthomodular law: A ≤ B implies B = A ∨ (A⊥ ∧ B). Witness is the first
/// violating (A,B) in index order. Throws std::domain_error unless
/// is_ortholattice holds.
PairCheck is_orthomodular(const ClosureLattice& lat);

struct ModularityCheck {
  bool holds;
  std::optional<std::array<int, 3>> witness;  // (A, B, C) with A ≤ C
};

/// Modular law: A ≤ C implies A ∨ (B ∧ C) = (A ∨ B) ∧ C, scanned in index
/// order over (A, C, B).
ModularityCheck is_modular(const ClosureLattice& lat);

/// Every element is the join of the atoms below it.
bool is_atomistic(const ClosureLattice& lat);

/// Longest chain from ∅ to X, counted in edges.
int lattice_length(const ClosureLattice& lat);

/// Returns n iff the lattice is an ortholattice of shape MO(n): exactly
/// 2n+2 elements, length 2, the 2n middle elements all atoms, and ortho
/// fixed-point-free on them.
std::optional<int> match_MO(const ClosureLattice& lat);

struct DaceyCheck {
  bool holds;
  // First failing (A, D): A orthoclosed in element order, D a maximal
  // orthogonal subset of A in member-lex order, with D⊥⊥ ≠ A.
  std::optional<std::pair<VertexSet, VertexSet>> witness;
};

/// Dacey property: for every orthoclosed A, every maximal orthogonal subset
/// D of the induced subspace on A satisfies D⊥⊥ = A. Propagates
/// lattice_too_large.
DaceyCheck is_dacey(const OrthoSpace& space, std::size_t cap = kDefaultLatticeCap);

/// Same check against an already-computed lattice of the space.
DaceyCheck is_dacey(const OrthoSpace& space, const ClosureLattice& lat);

/// Hasse diagram in DOT, atoms highlighted, orthocomplement pairs annotated.
std::string lattice_to_dot(const ClosureLattice& lat);

}  // namespace orthospace

#endif  // ORTHOSPACE_LATTICE_HPP
