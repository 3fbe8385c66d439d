#include "orthospace/properties.hpp"

#include <cassert>

namespace orthospace {

PropertyCheck check_l1(const OrthoSpace& space) {
  int n = space.vertex_count();
  for (int e = 0; e < n; ++e) {
    VertexSet ne = space.neighbors(e);
    for (int f = 0; f < n; ++f) {
      if (f == e || ne.contains(f)) continue;
      VertexSet target = ne & space.neighbors(f);
      bool found = false;
      for (int g : ne)
        if ((ne & space.neighbors(g)) == target) {
          found = true;
          break;
        }
      if (!found) return {false, Witness{WitnessKind::l1_fail, e, f, {}, {}}};
    }
  }
  return {true, std::nullopt};
}

PropertyCheck check_l2(const OrthoSpace& space) {
  int n = space.vertex_count();
  for (int e = 0; e < n; ++e) {
    VertexSet ne = space.neighbors(e);
    for (int f : ne) {
      VertexSet target = ne & space.neighbors(f);
      // g ̸⊥ e and g distinct from e and f (f is ⊥ e, so only e needs
      // excluding explicitly)
      VertexSet candidates = space.vertices() - ne;
      candidates.erase(e);
      bool found = false;
      for (int g : candidates)
        if ((ne & space.neighbors(g)) == target) {
          found = true;
          break;
        }
      if (!found) return {false, Witness{WitnessKind::l2_fail, e, f, {}, {}}};
    }
  }
  return {true, std::nullopt};
}

bool is_linear(const OrthoSpace& space) {
  bool linear = check_l1(space).holds && check_l2(space).holds;
  // a linear space other than the trivial one-point space has ≥ 3 elements
  assert(!(linear && space.vertex_count() == 2));
  return linear;
}

PropertyCheck is_irredundant(const OrthoSpace& space) {
  int n = space.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (space.neighbors(a) == space.neighbors(b))
        return {false, Witness{WitnessKind::irredundancy_fail, a, b, {}, {}}};
  return {true, std::nullopt};
}

PropertyCheck is_strongly_irredundant(const OrthoSpace& space) {
  int n = space.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (space.neighbors(a).subset_of(space.neighbors(b)))
        return {false, Witness{WitnessKind::strong_irredundancy_fail, a, b, {}, {}}};
    }
  return {true, std::nullopt};
}

std::optional<MatchingStructure> classify_rank2(const OrthoSpace& space) {
  int n = space.vertex_count();
  for (int v = 0; v < n; ++v)
    if (space.neighbors(v).size() != 1) return std::nullopt;
  MatchingStructure m;
  for (int v = 0; v < n; ++v) {
    if (m.a_side.contains(v) || m.b_side.contains(v)) continue;
    int partner = space.neighbors(v).min();
    m.a_side.insert(v);
    m.b_side.insert(partner);
    m.phi.emplace_back(v, partner);
  }
  return m;
}

std::optional<WindmillStructure> classify_rank3(const OrthoSpace& space) {
  int n = space.vertex_count();
  if (n < 3) return std::nullopt;
  for (int h : space.apex_vertices()) {
    bool matching = true;
    for (int v = 0; v < n && matching; ++v) {
      if (v == h) continue;
      VertexSet rest = space.neighbors(v);
      rest.erase(h);
      matching = rest.size() == 1;
    }
    if (!matching) continue;
    WindmillStructure w;
    w.hub = h;
    for (int v = 0; v < n; ++v) {
      if (v == h || w.matching.a_side.contains(v) || w.matching.b_side.contains(v)) continue;
      VertexSet rest = space.neighbors(v);
      rest.erase(h);
      int partner = rest.min();
      w.matching.a_side.insert(v);
      w.matching.b_side.insert(partner);
      w.matching.phi.emplace_back(v, partner);
    }
    return w;
  }
  return std::nullopt;
}

OrthoSpace extend_with_apexes(const OrthoSpace& space, int l) {
  if (l < 1) throw std::invalid_argument("apex count must be positive");
  int n = space.vertex_count();
  if (n + l > VertexSet::kCapacity) throw std::invalid_argument("capacity overflow");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b : space.neighbors(a))
      if (a < b) edges.emplace_back(a, b);
  for (int x = n; x < n + l; ++x)
    for (int y = 0; y < x; ++y) edges.emplace_back(y, x);
  return OrthoSpace::from_edges(n + l, edges);
}

OrthoSpace strip_common_core(const OrthoSpace& space) {
  VertexSet core = space.apex_vertices();
  if (core == space.vertices()) throw std::domain_error("would produce empty space");
  int n = space.vertex_count();
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!core.contains(v)) remap[static_cast<std::size_t>(v)] = next++;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    if (core.contains(a)) continue;
    for (int b : space.neighbors(a))
      if (a < b && !core.contains(b))
        edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  }
  return OrthoSpace::from_edges(next, edges);
}

std::optional<Witness> find_singleton_difference(const OrthoSpace& space) {
  std::vector<VertexSet> cliques = space.maximal_orthogonal_sets();
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = 0; j < cliques.size(); ++j) {
      if (i == j) continue;
      if ((cliques[i] - cliques[j]).size() == 1)
        return Witness{WitnessKind::difference_singleton, -1, -1, cliques[i], cliques[j]};
    }
  return std::nullopt;
}

PropertyReport full_report(const OrthoSpace& space, std::size_t lattice_cap) {
  PropertyReport r;
  r.n = space.vertex_count();
  r.rank = space.rank();
  r.connected = space.is_connected();
  if (r.n > 1) r.diameter = space.diameter();
  r.l1 = check_l1(space);
  r.l2 = check_l2(space);
  r.linear = r.l1.holds && r.l2.holds;
  r.irredundant = is_irredundant(space);
  r.strongly_irredundant = is_strongly_irredundant(space);
  r.irreducible = space.is_irreducible();

  try {
    ClosureLattice lat = compute_lattice(space, lattice_cap);
    DaceyCheck dc = is_dacey(space, lat);
    r.dacey = dc.holds;
    if (dc.witness)
      r.dacey_witness =
          Witness{WitnessKind::dacey_fail, -1, -1, dc.witness->first, dc.witness->second};
    r.mo_index = match_MO(lat);
  } catch (const lattice_too_large&) {
    r.lattice_overflow = true;
    r.dacey = std::nullopt;
    r.mo_index = std::nullopt;
  }

  r.matching = classify_rank2(space);
  if (r.matching) {
    r.classification = Classification::matching_2abphi;
  } else {
    r.windmill = classify_rank3(space);
    r.classification =
        r.windmill ? Classification::windmill_3abphi : Classification::other;
  }

  for (const PropertyCheck* c : {&r.l1, &r.l2, &r.irredundant, &r.strongly_irredundant})
    if (c->witness) r.witnesses.push_back(*c->witness);
  if (r.dacey_witness) r.witnesses.push_back(*r.dacey_witness);
  return r;
}

}  // namespace orthospace
