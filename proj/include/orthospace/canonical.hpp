#ifndef ORTHOSPACE_CANONICAL_HPP
#define ORTHOSPACE_CANONICAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orthospace/space.hpp"

namespace orthospace {

/// Outcome of a canonical labelling search.
struct CanonicalResult {
  /// labeling[v] = position of vertex v in the canonical ordering.
  std::vector<int> labeling;
  /// Canonical adjacency matrix, one word per row in canonical order; bit
  /// 63-c of row r is set iff canonical vertices r and c are orthogonal.
  /// Equal across isomorphic spaces, distinct otherwise.
  std::vector<std::uint64_t> form;
  /// Generators of the automorphism group (each maps vertex to image).
  std::vector<std::vector<int>> generators;
  /// orbit[v] = smallest vertex in the same automorphism orbit as v.
  std::vector<int> orbit;
};

/// Individualisation-refinement search for a canonical labelling, in the
/// style of nauty: refine to an equitable ordered partition, split the first
/// non-singleton cell on each member in turn, prune siblings that known
/// automorphisms map onto an explored one, and keep the lexicographically
/// least relabelled adjacency matrix over all leaves. Stateful so repeated
/// runs reuse scratch buffers.
class CanonicalSearcher {
 public:
  CanonicalSearcher();
  ~CanonicalSearcher();
  CanonicalSearcher(const CanonicalSearcher&) = delete;
  CanonicalSearcher& operator=(const CanonicalSearcher&) = delete;

  CanonicalResult run(const OrthoSpace& space);

  /// Raw variant: rows[v] has bit u set iff u ⊥ v, for v in [0, n).
  CanonicalResult run(const std::uint64_t* rows, int n);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Byte string identifying the isomorphism class: vertex count then the
/// canonical matrix rows, big-endian.
std::string canonical_form(const OrthoSpace& space);

bool are_isomorphic(const OrthoSpace& a, const OrthoSpace& b);

}  // namespace orthospace

#endif  // ORTHOSPACE_CANONICAL_HPP
