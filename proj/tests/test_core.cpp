#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "orthospace/space.hpp"

using namespace orthospace;

TEST_CASE("vertex set algebra") {
  VertexSet s = VertexSet::of({1, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK(!s.contains(2));
  CHECK(s.min() == 1);
  s.insert(0);
  CHECK(s.min() == 0);
  s.erase(3);
  CHECK(!s.contains(3));
  CHECK(s == VertexSet::of({0, 1, 5}));

  CHECK(VertexSet::first_n(3) == VertexSet::of({0, 1, 2}));
  CHECK(VertexSet::first_n(0).empty());
  CHECK(VertexSet::first_n(64).size() == 64);
  CHECK(VertexSet::single(63).bits() == (std::uint64_t{1} << 63));

  VertexSet a = VertexSet::of({0, 1, 2}), b = VertexSet::of({1, 2, 3});
  CHECK((a | b) == VertexSet::of({0, 1, 2, 3}));
  CHECK((a & b) == VertexSet::of({1, 2}));
  CHECK((a - b) == VertexSet::of({0}));
  CHECK(VertexSet::of({1, 2}).subset_of(a));
  CHECK(!a.subset_of(b));
  CHECK(a.intersects(b));
  CHECK(!VertexSet::of({0}).intersects(VertexSet::of({1})));

  std::vector<int> seen;
  for (int v : VertexSet::of({4, 0, 9})) seen.push_back(v);
  CHECK(seen == std::vector<int>{0, 4, 9});
}

TEST_CASE("member-lexicographic order") {
  auto less = [](std::initializer_list<int> x, std::initializer_list<int> y) {
    return VertexSet::member_lex_less(VertexSet::of(x), VertexSet::of(y));
  };
  CHECK(less({0, 1}, {1}));      // first members decide
  CHECK(less({0, 3}, {1, 2}));   // ... even against smaller bit value
  CHECK(less({0}, {0, 1}));      // proper prefix comes first
  CHECK(less({}, {0}));
  CHECK(!less({1}, {0, 1}));
  CHECK(!less({2, 3}, {2, 3}));
}

TEST_CASE("distance type") {
  CHECK(Distance::of(2).value() == 2);
  CHECK(Distance::infinite().is_infinite());
  CHECK_THROWS_AS(Distance::infinite().value(), std::domain_error);
  CHECK(Distance::of(3) < Distance::infinite());
  CHECK(Distance::of(1) < Distance::of(2));
  CHECK(Distance::infinite() == Distance::infinite());
  CHECK(Distance::of(2) <= Distance::of(2));
}

TEST_CASE("from_edges validation") {
  CHECK_THROWS_WITH_AS(OrthoSpace::from_edges(0, {}), "empty carrier", std::invalid_argument);
  CHECK_THROWS_AS(OrthoSpace::from_edges(65, {}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(OrthoSpace::from_edges(3, {{0, 0}}), "irreflexivity violated: no loops",
                       std::invalid_argument);
  CHECK_THROWS_AS(OrthoSpace::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(OrthoSpace::from_edges(3, {{-1, 0}}), std::invalid_argument);

  // duplicates collapse
  OrthoSpace s = OrthoSpace::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(s.orthogonal(0, 1));
  CHECK(s.orthogonal(1, 0));
  CHECK(!s.orthogonal(0, 0));
  CHECK(s == fixtures::complete(2));
}

TEST_CASE("from_maximal_cliques") {
  auto [six, exact] = OrthoSpace::from_maximal_cliques(6, {{0, 1, 2, 3}, {0, 1, 4, 5}});
  CHECK(exact);
  CHECK(six == fixtures::six());

  // a triangle given as its three edges: same space, family not maximal
  auto tri = OrthoSpace::from_maximal_cliques(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(!tri.family_is_exact);
  CHECK(tri.space == fixtures::complete(3));

  // uncovered point ends up isolated and makes the family inexact
  auto iso = OrthoSpace::from_maximal_cliques(3, {{0, 1}});
  CHECK(!iso.family_is_exact);
  CHECK(iso.space.neighbors(2).empty());
  CHECK(iso.space.maximal_orthogonal_sets() ==
        std::vector<VertexSet>{VertexSet::of({0, 1}), VertexSet::of({2})});

  // repeated sets tolerated
  CHECK(OrthoSpace::from_maximal_cliques(2, {{0, 1}, {0, 1}}).family_is_exact);

  CHECK_THROWS_WITH_AS(OrthoSpace::from_maximal_cliques(3, {}), "clique family must be non-empty",
                       std::invalid_argument);
  CHECK_THROWS_AS(OrthoSpace::from_maximal_cliques(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(OrthoSpace::from_maximal_cliques(0, {{}}), std::invalid_argument);
}

TEST_CASE("from_adjacency_rows") {
  std::uint64_t rows[4] = {0b0100, 0b1000, 0b0001, 0b0010};
  CHECK(OrthoSpace::from_adjacency_rows(4, rows) == fixtures::m4());

  std::uint64_t loop[2] = {0b01, 0b01};
  CHECK_THROWS_WITH_AS(OrthoSpace::from_adjacency_rows(2, loop),
                       "irreflexivity violated: no loops", std::invalid_argument);
  std::uint64_t asym[2] = {0b10, 0b00};
  CHECK_THROWS_AS(OrthoSpace::from_adjacency_rows(2, asym), std::invalid_argument);
  std::uint64_t range[2] = {0b100, 0b000};
  CHECK_THROWS_AS(OrthoSpace::from_adjacency_rows(2, range), std::invalid_argument);
}

TEST_CASE("orthogonal complement against subset-scan oracle") {
  std::mt19937_64 rng(20240817);
  std::vector<OrthoSpace> samples = {fixtures::six(), fixtures::seven(), fixtures::eight(),
                                     fixtures::p4(),  fixtures::m4(),    fixtures::w5()};
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r < 4; ++r) samples.push_back(oracle::random_space(rng, n));

  for (const OrthoSpace& s : samples) {
    int n = s.vertex_count();
    auto adj = oracle::adj_of(s);
    CHECK(s.ortho_complement(VertexSet()) == s.vertices());  // ∅⊥ = X
    for (oracle::mask_t a = 0; a < (oracle::mask_t{1} << n); ++a) {
      VertexSet av = VertexSet::of_bits(a);
      CHECK(s.ortho_complement(av).bits() == oracle::perp(adj, n, a));
      CHECK(s.closure(av).bits() == oracle::closure(adj, n, a));
      CHECK(s.is_orthoclosed(av) == (oracle::closure(adj, n, a) == a));
    }
  }
  CHECK_THROWS_AS(fixtures::m4().ortho_complement(VertexSet::of({5})), std::invalid_argument);
}

TEST_CASE("maximal orthogonal sets against subset-scan oracle") {
  std::mt19937_64 rng(7);
  std::vector<OrthoSpace> samples = {fixtures::six(), fixtures::seven(), fixtures::eight(),
                                     fixtures::w7(),  fixtures::edgeless(5)};
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r < 4; ++r) samples.push_back(oracle::random_space(rng, n));

  for (const OrthoSpace& s : samples) {
    int n = s.vertex_count();
    auto adj = oracle::adj_of(s);
    auto got = s.maximal_orthogonal_sets();
    std::vector<oracle::mask_t> got_masks;
    for (VertexSet v : got) got_masks.push_back(v.bits());
    std::sort(got_masks.begin(), got_masks.end());
    CHECK(got_masks == oracle::max_cliques(adj, n));
    for (std::size_t i = 1; i < got.size(); ++i)
      CHECK(VertexSet::member_lex_less(got[i - 1], got[i]));
    CHECK(s.rank() == oracle::rank(adj, n));

    // induced subspaces: brute maximality within the chosen subset
    for (int r = 0; r < 3; ++r) {
      oracle::mask_t a =
          std::uniform_int_distribution<oracle::mask_t>(0, (oracle::mask_t{1} << n) - 1)(rng);
      auto within = s.maximal_orthogonal_sets_within(VertexSet::of_bits(a));
      std::vector<oracle::mask_t> expect;
      for (oracle::mask_t d = 0; d < (oracle::mask_t{1} << n); ++d) {
        if ((d & ~a) != 0 || !oracle::is_clique(adj, d)) continue;
        bool maximal = true;
        for (int x : oracle::members(a & ~d))
          if (oracle::is_clique(adj, d | (oracle::mask_t{1} << x))) maximal = false;
        if (maximal) expect.push_back(d);
      }
      std::sort(expect.begin(), expect.end());
      std::vector<oracle::mask_t> wm;
      for (VertexSet v : within) wm.push_back(v.bits());
      std::sort(wm.begin(), wm.end());
      CHECK(wm == expect);
    }
  }
}

TEST_CASE("maximal sets of the pinned fixtures") {
  CHECK(fixtures::six().maximal_orthogonal_sets() ==
        std::vector<VertexSet>{VertexSet::of({0, 1, 2, 3}), VertexSet::of({0, 1, 4, 5})});
  auto eight = fixtures::eight().maximal_orthogonal_sets();
  CHECK(eight.size() == 6);
  std::vector<int> sizes;
  for (VertexSet m : eight) sizes.push_back(m.size());
  CHECK(sizes == std::vector<int>{2, 2, 3, 2, 2, 2});
  CHECK(fixtures::six().rank() == 4);
  CHECK(fixtures::seven().rank() == 2);
  CHECK(fixtures::eight().rank() == 3);
  CHECK(fixtures::w9().rank() == 3);
  CHECK(fixtures::complete(5).rank() == 5);
  CHECK(fixtures::edgeless(4).rank() == 1);
}

TEST_CASE("distance, connectivity, diameter") {
  std::mt19937_64 rng(99);
  std::vector<OrthoSpace> samples = {fixtures::six(), fixtures::seven(), fixtures::m4(),
                                     fixtures::path(6), fixtures::cycle(7)};
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r < 4; ++r) samples.push_back(oracle::random_space(rng, n));

  for (const OrthoSpace& s : samples) {
    int n = s.vertex_count();
    auto adj = oracle::adj_of(s);
    auto d = oracle::floyd(adj, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Distance got = s.distance(a, b);
        if (d[a][b] >= oracle::kInf)
          CHECK(got.is_infinite());
        else
          CHECK(got == Distance::of(d[a][b]));
      }
    CHECK(s.is_connected() == oracle::connected(adj, n));
    if (n > 1) {
      int expect = oracle::diameter(adj, n);
      CHECK(s.diameter() == (expect < 0 ? Distance::infinite() : Distance::of(expect)));
    }
  }

  CHECK(fixtures::path(4).distance(0, 3) == Distance::of(3));
  CHECK(fixtures::m4().distance(0, 1).is_infinite());
  CHECK(fixtures::m4().distance(2, 2) == Distance::of(0));
  CHECK(fixtures::complete(4).diameter() == Distance::of(1));
  CHECK(fixtures::edgeless(3).diameter().is_infinite());
  CHECK_THROWS_WITH_AS(fixtures::complete(1).diameter(), "diameter undefined for trivial space",
                       std::domain_error);
  CHECK_THROWS_AS(fixtures::m4().distance(0, 4), std::invalid_argument);
}

TEST_CASE("apex vertices and irreducibility") {
  CHECK(fixtures::six().apex_vertices() == VertexSet::of({0, 1}));
  CHECK(fixtures::w5().apex_vertices() == VertexSet::of({4}));
  CHECK(fixtures::w7().apex_vertices() == VertexSet::of({5}));
  CHECK(fixtures::complete(4).apex_vertices() == VertexSet::first_n(4));
  CHECK(fixtures::edgeless(3).apex_vertices().empty());
  CHECK(fixtures::complete(1).apex_vertices() == VertexSet::of({0}));

  CHECK(!fixtures::six().is_irreducible());  // any apex splits off
  CHECK(fixtures::m4().is_irreducible());
  CHECK(fixtures::seven().is_irreducible());

  std::mt19937_64 rng(4242);
  std::vector<OrthoSpace> samples;
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r < 5; ++r) samples.push_back(oracle::random_space(rng, n));
  for (const OrthoSpace& s : samples) {
    auto adj = oracle::adj_of(s);
    CHECK(s.is_irreducible() == oracle::irreducible(adj, s.vertex_count()));
  }
}
