#ifndef ORTHOSPACE_SPACE_HPP
#define ORTHOSPACE_SPACE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orthospace/vertex_set.hpp"

namespace orthospace {

/// Graph distance that may be infinite (vertices in different components).
class Distance {
 public:
  static constexpr Distance infinite() { return Distance(-1); }
  static constexpr Distance of(int k) {
    assert(k >= 0);
    return Distance(k);
  }

  constexpr bool is_infinite() const { return d_ < 0; }

  int value() const {
    if (is_infinite()) throw std::domain_error("value() of infinite distance");
    return d_;
  }

  friend constexpr bool operator==(Distance, Distance) = default;

  /// Every finite distance compares below infinite.
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.d_ < 0 && b.d_ < 0) return std::strong_ordering::equal;
    if (a.d_ < 0) return std::strong_ordering::greater;
    if (b.d_ < 0) return std::strong_ordering::less;
    return a.d_ <=> b.d_;
  }

 private:
  explicit constexpr Distance(int d) : d_(d) {}
  int d_;
};

struct MaximalCliqueBuild;

/// A finite orthogonality space: a set {0,...,n-1} with a symmetric,
/// irreflexive relation ⊥. Equivalently a simple undirected graph whose
/// edges are the orthogonal pairs. Capacity is 64 vertices.
class OrthoSpace {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= 64, every endpoint is in
  /// range, and no edge is a loop. Duplicate edges are tolerated.
  static OrthoSpace from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Builds the space whose orthogonal pairs are exactly the pairs of
  /// distinct points lying together in some member of `family`. Members must
  /// be in range; repeated sets and uncovered points (they end up isolated)
  /// are tolerated. `family_is_exact` reports whether the family really is
  /// the maximal clique family of the result.
  static MaximalCliqueBuild from_maximal_cliques(int n, const std::vector<std::vector<int>>& family);

  /// Builds from raw adjacency rows (rows[v] bit u set iff u ⊥ v), checking
  /// symmetry, irreflexivity and range.
  static OrthoSpace from_adjacency_rows(int n, const std::uint64_t* rows);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::first_n(n_); }

  /// {x : x ⊥ v}
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  bool orthogonal(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return adj_[static_cast<std::size_t>(a)].contains(b);
  }

  /// A⊥ = {x : x ⊥ a for all a in A}. By the usual convention ∅⊥ = X.
  VertexSet ortho_complement(VertexSet a) const;

  /// A⊥⊥, the smallest orthoclosed set containing A.
  VertexSet closure(VertexSet a) const { return ortho_complement(ortho_complement(a)); }

  bool is_orthoclosed(VertexSet a) const { return closure(a) == a; }

  /// All maximal sets of mutually orthogonal points (maximal cliques),
  /// sorted in member-lexicographic order. An isolated point v yields {v}.
  std::vector<VertexSet> maximal_orthogonal_sets() const;

  /// Maximal orthogonal subsets of the induced subspace on `a`, same order.
  /// For a = ∅ the single maximal subset is ∅ itself.
  std::vector<VertexSet> maximal_orthogonal_sets_within(VertexSet a) const;

  /// Largest size of a set of mutually orthogonal points.
  int rank() const;

  Distance distance(int a, int b) const;
  bool is_connected() const;

  /// Longest distance between any two points; infinite iff disconnected.
  /// Throws std::domain_error on the one-point space.
  Distance diameter() const;

  /// Points orthogonal to every other point.
  VertexSet apex_vertices() const;

  /// True unless X splits into non-empty A, B with a ⊥ b for all a in A,
  /// b in B; i.e. the complement graph of the orthogonality relation is
  /// connected.
  bool is_irreducible() const;

  friend bool operator==(const OrthoSpace&, const OrthoSpace&) = default;

 private:
  OrthoSpace(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }

  int n_;
  std::vector<VertexSet> adj_;
};

/// Result of building a space from a family of intended maximal orthogonal
/// sets. `family_is_exact` records whether the family (after dedup) is
/// precisely the family of maximal orthogonal sets of the built space.
struct MaximalCliqueBuild {
  OrthoSpace space;
  bool family_is_exact;
};

}  // namespace orthospace

#endif  // ORTHOSPACE_SPACE_HPP
