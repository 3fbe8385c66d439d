#include "orthospace/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace orthospace {

namespace {

constexpr int kMax = VertexSet::kCapacity;

// Union-find whose roots are the smallest members, so find() doubles as
// "orbit representative".
struct UnionFind {
  std::vector<int> parent;

  void reset(int n) {
    parent.resize(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (ra < rb)
      parent[static_cast<std::size_t>(rb)] = ra;
    else
      parent[static_cast<std::size_t>(ra)] = rb;
  }
};

// Ordered partition of the vertices; cell order is significant.
struct Partition {
  VertexSet cells[kMax];
  int ncells = 0;
};

}  // namespace

struct CanonicalSearcher::Impl {
  const std::uint64_t* adj = nullptr;
  int n = 0;

  Partition levels[kMax + 1];
  int path[kMax];                // individualised vertex per depth
  VertexSet processed[kMax];     // explored siblings per depth

  bool have_first = false;
  int first_lab[kMax];           // vertex -> position at the first leaf
  int first_inv[kMax];           // position -> vertex
  std::uint64_t first_words[kMax];
  int best_lab[kMax];
  int best_inv[kMax];
  std::uint64_t best_words[kMax];

  std::vector<std::vector<int>> generators;
  UnionFind uf;

  // Splits every cell by neighbour counts into some other cell until the
  // partition stops changing; fragments are ordered by count ascending.
  // All decisions depend only on cell positions and counts, never on
  // vertex labels, so isomorphic configurations refine identically.
  void refine(Partition& p) {
    VertexSet frag[kMax + 1] = {};
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ci = 0; ci < p.ncells && !changed; ++ci) {
        if (p.cells[ci].size() <= 1) continue;
        for (int wi = 0; wi < p.ncells && !changed; ++wi) {
          VertexSet w = p.cells[wi];
          int lo = kMax, hi = 0;
          for (int v : p.cells[ci]) {
            int c = std::popcount(adj[static_cast<std::size_t>(v)] & w.bits());
            frag[c].insert(v);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          int parts = 0;
          for (int c = lo; c <= hi; ++c)
            if (!frag[c].empty()) ++parts;
          if (parts > 1) {
            // replace cell ci by the fragments, shifting the tail right
            for (int k = p.ncells - 1; k > ci; --k) p.cells[k + parts - 1] = p.cells[k];
            p.ncells += parts - 1;
            int at = ci;
            for (int c = lo; c <= hi; ++c)
              if (!frag[c].empty()) p.cells[at++] = frag[c];
            changed = true;
          }
          for (int c = lo; c <= hi; ++c) frag[c] = VertexSet{};
        }
      }
    }
  }

  void record_automorphism(const int* anchor_inv, const int* leaf_lab) {
    std::vector<int> g(static_cast<std::size_t>(n));
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      g[static_cast<std::size_t>(v)] = anchor_inv[leaf_lab[v]];
      identity = identity && g[static_cast<std::size_t>(v)] == v;
    }
    if (!identity) generators.push_back(std::move(g));
  }

  void leaf(const Partition& p) {
    int lab[kMax], inv[kMax];
    for (int pos = 0; pos < p.ncells; ++pos) {
      int v = p.cells[pos].min();
      lab[v] = pos;
      inv[pos] = v;
    }
    std::uint64_t words[kMax];
    for (int pos = 0; pos < n; ++pos) {
      std::uint64_t w = 0;
      for (int u : VertexSet::of_bits(adj[static_cast<std::size_t>(inv[pos])]))
        w |= std::uint64_t{1} << (63 - lab[u]);
      words[pos] = w;
    }

    if (!have_first) {
      have_first = true;
      std::copy(lab, lab + n, first_lab);
      std::copy(inv, inv + n, first_inv);
      std::copy(words, words + n, first_words);
      std::copy(lab, lab + n, best_lab);
      std::copy(inv, inv + n, best_inv);
      std::copy(words, words + n, best_words);
      return;
    }
    if (std::equal(words, words + n, first_words)) {
      record_automorphism(first_inv, lab);
      return;
    }
    auto cmp = std::lexicographical_compare_three_way(words, words + n, best_words, best_words + n);
    if (cmp == std::strong_ordering::less) {
      std::copy(lab, lab + n, best_lab);
      std::copy(inv, inv + n, best_inv);
      std::copy(words, words + n, best_words);
    } else if (cmp == std::strong_ordering::equal) {
      record_automorphism(best_inv, lab);
    }
  }

  // Orbits of the subgroup generated by the recorded automorphisms that fix
  // path[0..depth) pointwise.
  void prefix_orbits(int depth) {
    uf.reset(n);
    for (const auto& g : generators) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d)
        fixes = g[static_cast<std::size_t>(path[d])] == path[d];
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) uf.unite(v, g[static_cast<std::size_t>(v)]);
    }
  }

  void node(int depth) {
    Partition& p = levels[depth];
    if (p.ncells == n) {
      leaf(p);
      return;
    }
    int target = 0;
    while (p.cells[target].size() <= 1) ++target;

    processed[depth] = VertexSet{};
    for (int v : p.cells[target]) {
      if (!processed[depth].empty()) {
        prefix_orbits(depth);
        int rv = uf.find(v);
        bool skip = false;
        for (int u : processed[depth])
          if (uf.find(u) == rv) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      Partition& child = levels[depth + 1];
      child.ncells = p.ncells + 1;
      for (int k = 0, at = 0; k < p.ncells; ++k) {
        if (k == target) {
          child.cells[at++] = VertexSet::single(v);
          VertexSet rest = p.cells[k];
          rest.erase(v);
          child.cells[at++] = rest;
        } else {
          child.cells[at++] = p.cells[k];
        }
      }
      refine(child);
      path[depth] = v;
      node(depth + 1);
      processed[depth].insert(v);
    }
  }

  CanonicalResult run(const std::uint64_t* rows, int nn) {
    adj = rows;
    n = nn;
    have_first = false;
    generators.clear();

    levels[0].ncells = 1;
    levels[0].cells[0] = VertexSet::first_n(n);
    refine(levels[0]);
    node(0);

    CanonicalResult r;
    r.labeling.assign(best_lab, best_lab + n);
    r.form.assign(best_words, best_words + n);
    r.generators = generators;
    uf.reset(n);
    for (const auto& g : generators)
      for (int v = 0; v < n; ++v) uf.unite(v, g[static_cast<std::size_t>(v)]);
    r.orbit.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) r.orbit[static_cast<std::size_t>(v)] = uf.find(v);
    return r;
  }
};

CanonicalSearcher::CanonicalSearcher() : impl_(std::make_unique<Impl>()) {}
CanonicalSearcher::~CanonicalSearcher() = default;

CanonicalResult CanonicalSearcher::run(const std::uint64_t* rows, int n) {
  if (n < 1 || n > kMax) throw std::invalid_argument("vertex count must be between 1 and 64");
  return impl_->run(rows, n);
}

CanonicalResult CanonicalSearcher::run(const OrthoSpace& space) {
  std::uint64_t rows[kMax];
  int n = space.vertex_count();
  for (int v = 0; v < n; ++v) rows[v] = space.neighbors(v).bits();
  return run(rows, n);
}

std::string canonical_form(const OrthoSpace& space) {
  CanonicalSearcher searcher;
  CanonicalResult r = searcher.run(space);
  std::string bytes;
  bytes.reserve(1 + r.form.size() * 8);
  bytes.push_back(static_cast<char>(space.vertex_count()));
  for (std::uint64_t w : r.form)
    for (int b = 56; b >= 0; b -= 8)
      bytes.push_back(static_cast<char>((w >> b) & 0xff));
  return bytes;
}

bool are_isomorphic(const OrthoSpace& a, const OrthoSpace& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace orthospace
