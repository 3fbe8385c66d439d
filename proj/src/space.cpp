#include "orthospace/space.hpp"

#include <algorithm>

namespace orthospace {

namespace {

std::vector<VertexSet> validated_adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("empty carrier");
  if (n > VertexSet::kCapacity)
    throw std::invalid_argument("vertex count must be between 1 and 64");
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("irreflexivity violated: no loops");
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  return adj;
}

// Bron-Kerbosch with pivoting; r grows toward a maximal clique, p holds
// candidates, x holds excluded vertices already covered elsewhere.
void collect_maximal_cliques(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p,
                             VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int best = -1;
  VertexSet best_nbrs;
  for (int u : p | x) {
    int c = (p & adj[static_cast<std::size_t>(u)]).size();
    if (c > best) {
      best = c;
      best_nbrs = adj[static_cast<std::size_t>(u)];
    }
  }
  for (int v : p - best_nbrs) {
    VertexSet nv = adj[static_cast<std::size_t>(v)];
    VertexSet rv = r;
    rv.insert(v);
    collect_maximal_cliques(adj, rv, p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

OrthoSpace OrthoSpace::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  return OrthoSpace(n, validated_adjacency(n, edges));
}

MaximalCliqueBuild OrthoSpace::from_maximal_cliques(int n,
                                                    const std::vector<std::vector<int>>& family) {
  if (n < 1) throw std::invalid_argument("empty carrier");
  if (n > VertexSet::kCapacity)
    throw std::invalid_argument("vertex count must be between 1 and 64");
  if (family.empty()) throw std::invalid_argument("clique family must be non-empty");
  std::vector<VertexSet> sets;
  sets.reserve(family.size());
  for (const auto& members : family) {
    VertexSet s;
    for (int v : members) {
      if (v < 0 || v >= n) throw std::invalid_argument("clique member out of range");
      s.insert(v);
    }
    sets.push_back(s);
  }

  std::vector<std::pair<int, int>> edges;
  for (VertexSet s : sets)
    for (int a : s)
      for (int b : s)
        if (a < b) edges.emplace_back(a, b);
  OrthoSpace space = from_edges(n, edges);

  std::sort(sets.begin(), sets.end(), VertexSetMemberLexLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  bool exact = sets == space.maximal_orthogonal_sets();
  return MaximalCliqueBuild{std::move(space), exact};
}

OrthoSpace OrthoSpace::from_adjacency_rows(int n, const std::uint64_t* rows) {
  if (n < 1) throw std::invalid_argument("empty carrier");
  if (n > VertexSet::kCapacity)
    throw std::invalid_argument("vertex count must be between 1 and 64");
  VertexSet all = VertexSet::first_n(n);
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    VertexSet row = VertexSet::of_bits(rows[v]);
    if (!row.subset_of(all)) throw std::invalid_argument("adjacency row out of range");
    if (row.contains(v)) throw std::invalid_argument("irreflexivity violated: no loops");
    adj[static_cast<std::size_t>(v)] = row;
  }
  for (int v = 0; v < n; ++v)
    for (int u : adj[static_cast<std::size_t>(v)])
      if (!adj[static_cast<std::size_t>(u)].contains(v))
        throw std::invalid_argument("adjacency rows are not symmetric");
  return OrthoSpace(n, std::move(adj));
}

VertexSet OrthoSpace::ortho_complement(VertexSet a) const {
  if (!a.subset_of(vertices())) throw std::invalid_argument("set has members out of range");
  VertexSet result = vertices();
  for (int v : a) result &= adj_[static_cast<std::size_t>(v)];
  return result;
}

std::vector<VertexSet> OrthoSpace::maximal_orthogonal_sets() const {
  std::vector<VertexSet> out;
  collect_maximal_cliques(adj_, VertexSet{}, vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end(), VertexSetMemberLexLess{});
  return out;
}

std::vector<VertexSet> OrthoSpace::maximal_orthogonal_sets_within(VertexSet a) const {
  if (!a.subset_of(vertices())) throw std::invalid_argument("set has members out of range");
  std::vector<VertexSet> masked(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) masked[v] = adj_[v] & a;
  std::vector<VertexSet> out;
  collect_maximal_cliques(masked, VertexSet{}, a, VertexSet{}, out);
  std::sort(out.begin(), out.end(), VertexSetMemberLexLess{});
  return out;
}

int OrthoSpace::rank() const {
  int r = 0;
  for (VertexSet c : maximal_orthogonal_sets()) r = std::max(r, c.size());
  return r;
}

Distance OrthoSpace::distance(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return Distance::of(0);
  VertexSet reached = VertexSet::single(a);
  VertexSet frontier = reached;
  for (int step = 1; !frontier.empty(); ++step) {
    VertexSet next;
    for (int v : frontier) next |= adj_[static_cast<std::size_t>(v)];
    next = next - reached;
    if (next.contains(b)) return Distance::of(step);
    reached |= next;
    frontier = next;
  }
  return Distance::infinite();
}

bool OrthoSpace::is_connected() const {
  VertexSet reached = VertexSet::single(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= adj_[static_cast<std::size_t>(v)];
    next = next - reached;
    reached |= next;
    frontier = next;
  }
  return reached == vertices();
}

Distance OrthoSpace::diameter() const {
  if (n_ == 1) throw std::domain_error("diameter undefined for trivial space");
  Distance worst = Distance::of(0);
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      Distance d = distance(a, b);
      if (d.is_infinite()) return d;
      worst = std::max(worst, d);
    }
  return worst;
}

VertexSet OrthoSpace::apex_vertices() const {
  VertexSet out;
  for (int v = 0; v < n_; ++v) {
    VertexSet others = vertices();
    others.erase(v);
    if (adj_[static_cast<std::size_t>(v)] == others) out.insert(v);
  }
  return out;
}

bool OrthoSpace::is_irreducible() const {
  // Reducible means X = A ∪ B with A, B non-empty and every pair across
  // orthogonal, i.e. the complement of the orthogonality graph is
  // disconnected.
  VertexSet reached = VertexSet::single(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) {
      VertexSet co_nbrs = vertices() - adj_[static_cast<std::size_t>(v)];
      co_nbrs.erase(v);
      next |= co_nbrs;
    }
    next = next - reached;
    reached |= next;
    frontier = next;
  }
  return reached == vertices();
}

}  // namespace orthospace
