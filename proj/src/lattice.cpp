#include "orthospace/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace orthospace {

namespace {

// (cardinality, member-lexicographic) — the canonical element order.
struct SizeMemberLexLess {
  bool operator()(VertexSet a, VertexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return VertexSet::member_lex_less(a, b);
  }
};

constexpr std::size_t kLeqMatrixLimit = 4096;
constexpr std::size_t kMeetJoinMatrixLimit = 512;

}  // namespace

int ClosureLattice::index_of(VertexSet a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a, SizeMemberLexLess{});
  if (it == elements.end() || *it != a) return -1;
  return static_cast<int>(it - elements.begin());
}

int ClosureLattice::join(int i, int j) const {
  if (!join_.empty())
    return join_[static_cast<std::size_t>(i) * elements.size() + static_cast<std::size_t>(j)];
  VertexSet u = elements[static_cast<std::size_t>(i)] | elements[static_cast<std::size_t>(j)];
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (u.subset_of(elements[k])) return static_cast<int>(k);
  return -1;
}

int ClosureLattice::meet(int i, int j) const {
  if (!meet_.empty())
    return meet_[static_cast<std::size_t>(i) * elements.size() + static_cast<std::size_t>(j)];
  return index_of(elements[static_cast<std::size_t>(i)] & elements[static_cast<std::size_t>(j)]);
}

std::vector<int> ClosureLattice::atoms() const {
  std::vector<int> out;
  int e = static_cast<int>(elements.size());
  for (int k = 1; k < e; ++k) {
    if (!leq(0, k)) continue;
    bool covers_bottom = true;
    for (int m = 1; m < k && covers_bottom; ++m)
      if (m != k && leq(0, m) && leq(m, k) && elements[static_cast<std::size_t>(m)] !=
                                                  elements[static_cast<std::size_t>(k)])
        covers_bottom = false;
    if (covers_bottom && elements[static_cast<std::size_t>(k)] != elements.front())
      out.push_back(k);
  }
  return out;
}

std::vector<std::pair<int, int>> ClosureLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  int e = static_cast<int>(elements.size());
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j) {
      if (!leq(i, j) || elements[static_cast<std::size_t>(i)] == elements[static_cast<std::size_t>(j)])
        continue;
      bool direct = true;
      // any strictly intermediate element is strictly smaller than j and
      // strictly larger than i, hence sits between them in the size-sorted
      // index order
      for (int k = i + 1; k < j && direct; ++k)
        if (leq(i, k) && leq(k, j) && elements[static_cast<std::size_t>(k)] != elements[static_cast<std::size_t>(i)] &&
            elements[static_cast<std::size_t>(k)] != elements[static_cast<std::size_t>(j)])
          direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

void ClosureLattice::finalize() {
  std::size_t e = elements.size();
  leq_.clear();
  meet_.clear();
  join_.clear();
  if (e <= kLeqMatrixLimit) {
    leq_.resize(e * e);
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < e; ++j) leq_[i * e + j] = elements[i].subset_of(elements[j]);
  }
  if (e <= kMeetJoinMatrixLimit) {
    meet_.resize(e * e);
    join_.resize(e * e);
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < e; ++j) {
        meet_[i * e + j] = index_of(elements[i] & elements[j]);
        VertexSet u = elements[i] | elements[j];
        int jo = -1;
        for (std::size_t k = 0; k < e; ++k)
          if (u.subset_of(elements[k])) {
            jo = static_cast<int>(k);
            break;
          }
        join_[i * e + j] = jo;
      }
  }
}

ClosureLattice compute_lattice(const OrthoSpace& space, std::size_t cap) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> work;
  auto add = [&](VertexSet s) {
    if (seen.insert(s.bits()).second) {
      if (seen.size() > cap) throw lattice_too_large(seen.size());
      work.push_back(s);
    }
  };

  add(space.vertices());
  for (int a = 0; a < space.vertex_count(); ++a) add(space.neighbors(a));

  // Close under pairwise intersection; every A⊥ is an intersection of
  // single-point complements, so this already reaches every orthoclosed set.
  // The ⊥ pass afterwards is a provable no-op kept as a safety net, and the
  // outer loop re-closes should it ever add anything.
  std::size_t inter_done = 0, ortho_done = 0;
  while (inter_done < work.size() || ortho_done < work.size()) {
    while (inter_done < work.size()) {
      std::size_t i = inter_done++;
      for (std::size_t j = 0; j < i; ++j) add(work[i] & work[j]);
    }
    while (ortho_done < work.size()) add(space.ortho_complement(work[ortho_done++]));
  }

  ClosureLattice lat;
  lat.n = space.vertex_count();
  lat.elements = std::move(work);
  std::sort(lat.elements.begin(), lat.elements.end(), SizeMemberLexLess{});
  lat.ortho.resize(lat.elements.size());
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    int oi = lat.index_of(space.ortho_complement(lat.elements[i]));
    lat.ortho[i] = oi;  // always present: the set is closed under ⊥
  }
  lat.finalize();
  return lat;
}

OrthoLatticeCheck is_ortholattice(const ClosureLattice& lat) {
  std::size_t e = lat.elements.size();
  if (e == 0) return {false, "no elements"};
  if (!lat.bottom().empty()) return {false, "bottom element is not the empty set"};
  if (lat.top() != VertexSet::first_n(lat.n)) return {false, "top element is not X"};
  if (lat.ortho.size() != e) return {false, "ortho map size mismatch"};
  for (std::size_t i = 0; i < e; ++i) {
    int o = lat.ortho[i];
    if (o < 0 || static_cast<std::size_t>(o) >= e) return {false, "ortho index out of range"};
    if (lat.ortho[static_cast<std::size_t>(o)] != static_cast<int>(i))
      return {false, "ortho is not an involution at index " + std::to_string(i)};
  }
  int ei = static_cast<int>(e);
  for (int i = 0; i < ei; ++i)
    for (int j = 0; j < ei; ++j)
      if (lat.leq(i, j) && !lat.leq(lat.ortho[static_cast<std::size_t>(j)],
                                    lat.ortho[static_cast<std::size_t>(i)]))
        return {false, "ortho is not order-reversing on pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};
  for (int i = 0; i < ei; ++i) {
    VertexSet a = lat.elements[static_cast<std::size_t>(i)];
    VertexSet ac = lat.elements[static_cast<std::size_t>(lat.ortho[static_cast<std::size_t>(i)])];
    if (!(a & ac).empty())
      return {false, "A ∧ A⊥ ≠ ∅ at index " + std::to_string(i)};
    int top_idx = lat.join(i, lat.ortho[static_cast<std::size_t>(i)]);
    if (top_idx < 0 ||
        lat.elements[static_cast<std::size_t>(top_idx)] != VertexSet::first_n(lat.n))
      return {false, "A ∨ A⊥ ≠ X at index " + std::to_string(i)};
  }
  return {true, ""};
}

PairCheck is_orthomodular(const ClosureLattice& lat) {
  if (!is_ortholattice(lat).holds)
    throw std::domain_error("orthomodularity is only defined on an ortholattice");
  int e = static_cast<int>(lat.elements.size());
  for (int a = 0; a < e; ++a)
    for (int b = 0; b < e; ++b) {
      if (!lat.leq(a, b)) continue;
      int mid = lat.meet(lat.ortho[static_cast<std::size_t>(a)], b);
      int rhs = mid < 0 ? -1 : lat.join(a, mid);
      if (rhs != b) return {false, std::make_pair(a, b)};
    }
  return {true, std::nullopt};
}

ModularityCheck is_modular(const ClosureLattice& lat) {
  int e = static_cast<int>(lat.elements.size());
  for (int a = 0; a < e; ++a)
    for (int c = 0; c < e; ++c) {
      if (!lat.leq(a, c)) continue;
      for (int b = 0; b < e; ++b) {
        int bc = lat.meet(b, c);
        int lhs = bc < 0 ? -1 : lat.join(a, bc);
        int ab = lat.join(a, b);
        int rhs = ab < 0 ? -1 : lat.meet(ab, c);
        if (lhs != rhs || lhs < 0) return {false, std::array<int, 3>{a, b, c}};
      }
    }
  return {true, std::nullopt};
}

bool is_atomistic(const ClosureLattice& lat) {
  std::vector<int> at = lat.atoms();
  int e = static_cast<int>(lat.elements.size());
  for (int k = 0; k < e; ++k) {
    VertexSet u;
    for (int a : at)
      if (lat.leq(a, k)) u |= lat.elements[static_cast<std::size_t>(a)];
    // least element containing the union of the atoms below k
    int best = -1;
    for (int m = 0; m < e; ++m)
      if (u.subset_of(lat.elements[static_cast<std::size_t>(m)])) {
        best = m;
        break;
      }
    if (best != k) return false;
  }
  return true;
}

int lattice_length(const ClosureLattice& lat) {
  int e = static_cast<int>(lat.elements.size());
  std::vector<int> longest(static_cast<std::size_t>(e), 0);
  for (int k = 1; k < e; ++k)
    for (int i = 0; i < k; ++i)
      if (lat.leq(i, k) &&
          lat.elements[static_cast<std::size_t>(i)] != lat.elements[static_cast<std::size_t>(k)])
        longest[static_cast<std::size_t>(k)] =
            std::max(longest[static_cast<std::size_t>(k)], longest[static_cast<std::size_t>(i)] + 1);
  return longest.empty() ? 0 : longest.back();
}

std::optional<int> match_MO(const ClosureLattice& lat) {
  if (!is_ortholattice(lat).holds) return std::nullopt;
  std::size_t e = lat.elements.size();
  if (e < 4 || e % 2 != 0) return std::nullopt;
  if (lattice_length(lat) != 2) return std::nullopt;
  std::vector<int> at = lat.atoms();
  if (at.size() != e - 2) return std::nullopt;  // every middle element an atom
  int last = static_cast<int>(e) - 1;
  for (int a : at) {
    int o = lat.ortho[static_cast<std::size_t>(a)];
    if (o == a || o == 0 || o == last) return std::nullopt;
  }
  return static_cast<int>((e - 2) / 2);
}

DaceyCheck is_dacey(const OrthoSpace& space, std::size_t cap) {
  return is_dacey(space, compute_lattice(space, cap));
}

DaceyCheck is_dacey(const OrthoSpace& space, const ClosureLattice& lat) {
  for (VertexSet a : lat.elements) {
    for (VertexSet d : space.maximal_orthogonal_sets_within(a))
      if (space.closure(d) != a) return {false, std::make_pair(a, d)};
  }
  return {true, std::nullopt};
}

namespace {

std::string set_label(VertexSet s) {
  if (s.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string lattice_to_dot(const ClosureLattice& lat) {
  std::string out = "digraph closure_lattice {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  std::vector<int> at = lat.atoms();
  auto is_atom = [&](int i) { return std::find(at.begin(), at.end(), i) != at.end(); };
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    out += "  e" + std::to_string(i) + " [label=\"" + set_label(lat.elements[i]) + "\"";
    if (is_atom(static_cast<int>(i))) out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  for (auto [i, j] : lat.covers())
    out += "  e" + std::to_string(i) + " -> e" + std::to_string(j) + ";\n";
  // orthocomplement pairing, drawn once per unordered pair
  for (std::size_t i = 0; i < lat.ortho.size(); ++i) {
    int o = lat.ortho[i];
    if (o >= 0 && static_cast<std::size_t>(o) > i)
      out += "  e" + std::to_string(i) + " -> e" + std::to_string(o) +
             " [dir=none, style=dashed, color=gray, constraint=false, label=\"⊥\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace orthospace
