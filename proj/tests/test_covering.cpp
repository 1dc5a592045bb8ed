#include <catch2/catch_amalgamated.hpp>

#include "covercert/corpus.hpp"
#include "covercert/covering.hpp"
#include "covercert/homology.hpp"
#include "support/random_gen.hpp"

using namespace covercert;

namespace {

SimplicialComplex cycle_complex(int n) {
  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_maximal(edges);
}

}  // namespace

TEST_CASE("group tables are validated") {
  CHECK(FiniteGroupTable::cyclic(4).size() == 4);
  const auto s3 = FiniteGroupTable::symmetric3();
  CHECK(s3.size() == 6);
  // S3 is not abelian.
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (s3.mul(a, b) != s3.mul(b, a)) abelian = false;
  CHECK(!abelian);
  for (int a = 0; a < 6; ++a) {
    CHECK(s3.mul(a, s3.inv(a)) == s3.identity());
    CHECK(s3.mul(s3.inv(a), a) == s3.identity());
  }

  CHECK_THROWS_AS(FiniteGroupTable::from_table({"e", "a"}, {{0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroupTable::from_table({"e", "a"}, {{0, 1}, {1, 2}}), Error);
  // No identity: constant table.
  CHECK_THROWS_AS(FiniteGroupTable::from_table({"e", "a"}, {{0, 0}, {0, 0}}), Error);
  // Not associative: a*a = e but the "identity" row forces (aa)a != a(aa)
  // is impossible with 2 elements, so use a 3-element counterexample.
  CHECK_THROWS_AS(
      FiniteGroupTable::from_table({"e", "a", "b"},
                                   {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}),
      Error);
  CHECK_THROWS_AS(FiniteGroupTable::builtin("Z5"), Error);
}

TEST_CASE("coverings from edge labelings") {
  const auto c3 = cycle_complex(3);
  const auto z3 = FiniteGroupTable::cyclic(3);

  SECTION("trivial labels give disjoint copies") {
    const auto c = build_regular_cover(c3, z3, EdgeLabeling{});
    CHECK(c.total().vertices().size() == 9);
    CHECK(connected_components(c.total()).size() == 3);
    CHECK(c.total().euler_characteristic() == 3 * c3.euler_characteristic());
  }

  SECTION("a generator label gives the connected 9-cycle") {
    EdgeLabeling l;
    l.set(0, 2, 1, z3);  // the non-tree edge of C3 winds one sheet up
    const auto c = build_regular_cover(c3, z3, l);
    CHECK(is_connected(c.total()));
    CHECK(betti_numbers(c.total()) == std::vector<long>{1, 1});
    for (VertexId v : c.total().vertices())
      CHECK(closed_star(c.total(), v).simplices().size() == 5);
  }

  SECTION("labels must kill the triangle relators") {
    const auto disc = SimplicialComplex::from_maximal({{0, 1, 2}});
    EdgeLabeling bad;
    bad.set(1, 2, 1, z3);
    CHECK_THROWS_AS(build_regular_cover(disc, FiniteGroupTable::cyclic(3), bad), Error);
  }

  SECTION("the base must be connected") {
    const auto split = SimplicialComplex::from_maximal({{0, 1}, {2, 3}});
    CHECK_THROWS_AS(build_regular_cover(split, z3, EdgeLabeling{}), Error);
  }
}

TEST_CASE("projection and deck transformations") {
  const auto c4 = cycle_complex(4);
  const auto z2 = FiniteGroupTable::cyclic(2);
  EdgeLabeling l;
  l.set(0, 3, 1, z2);
  const auto c = build_regular_cover(c4, z2, l);
  CHECK(is_connected(c.total()));
  CHECK(c.total().vertices().size() == 8);

  const SimplicialMap p = c.projection();
  for (const Simplex& s : c.total().simplices())
    CHECK(!p.is_degenerate_on(s));  // covering projections never collapse

  // p after deck(h) = p, and deck is a group action.
  const SimplicialMap d = c.deck(1);
  CHECK(SimplicialMap::compose(p, d).assignment() == p.assignment());
  CHECK(SimplicialMap::compose(d, d).assignment() ==
        SimplicialMap::identity(c.total()).assignment());

  // Fibers have |G| elements.
  for (const Simplex& s : c4.simplices()) {
    std::set<Simplex> fiber;
    for (int g = 0; g < 2; ++g) fiber.insert(c.lift_simplex(s, g));
    CHECK(fiber.size() == 2);
    for (const Simplex& t : fiber) CHECK(c.project_simplex(t) == s);
  }
}

TEST_CASE("a torus double cover is again a torus") {
  const auto inst = corpus("torus_annuli");
  const auto z2 = FiniteGroupTable::cyclic(2);
  testsupport::Rng rng(47);
  const EdgeLabeling l = testsupport::random_cyclic_labeling(rng, *inst.space, 2, z2);
  const auto c = build_regular_cover(*inst.space, z2, l);
  CHECK(c.total().euler_characteristic() == 0);
  if (is_connected(c.total()))
    CHECK(betti_numbers(c.total()) == std::vector<long>{1, 2, 1});
}

TEST_CASE("lifting a cover along a cyclic covering of the circle") {
  const auto inst = corpus("circle_stars");
  const auto z3 = FiniteGroupTable::cyclic(3);
  EdgeLabeling l;
  l.set(0, 5, 1, z3);
  const auto c = build_regular_cover(*inst.space, z3, l);
  REQUIRE(is_connected(c.total()));

  const auto lifted = lift_cover(c, inst.cover);
  for (const auto& [name, comps] : lifted.lifted_elements)
    CHECK(comps.size() == 3);  // arcs are simply connected: |G| components
  CHECK(lifted.lifted_cover.size() == 9);
  CHECK(betti_numbers(lifted.nerve_up.complex) == std::vector<long>{1, 1});
  CHECK(lifted.nerve_up.complex.vertices().size() == 9);

  const auto base_nerve = nerve(inst.cover);
  const SimplicialMap p = projection_nerve_map(lifted, base_nerve);
  CHECK(induced_map_homology(p, 0).rank == 1);

  for (int degree = 0; degree <= 1; ++degree)
    CHECK(verify_orbit_bijection(lifted, base_nerve, degree).holds);

  const auto stabs = nerve_stabilizers(c, lifted);
  CHECK(stabs.positive_dim_fix_vertices);
  CHECK(stabs.equals_vertex_intersection);
  CHECK(stabs.vertex_matches_component);
  for (const auto& [s, stab] : stabs.stabilizers)
    CHECK(stab.size() == 1);  // free action on the lifted nerve
}

TEST_CASE("annulus stabilizers see the full deck group") {
  // Torus with the vertical direction unwrapped by Z2: the preimage of an
  // annulus stays connected, so its nerve vertex is fixed by everything.
  const auto inst = corpus("torus_annuli");
  const auto z2 = FiniteGroupTable::cyclic(2);
  constexpr int COLS = 12, ROWS = 8;
  auto grid = [](int r, int c) {
    return (((r % ROWS) + ROWS) % ROWS) * COLS + ((c % COLS) + COLS) % COLS;
  };
  EdgeLabeling l;
  for (int c = 0; c < COLS; ++c) {
    l.set(grid(7, c), grid(0, c), 1, z2);
    l.set(grid(7, c + 1), grid(0, c), 1, z2);
  }
  const auto c = build_regular_cover(*inst.space, z2, l);
  REQUIRE(is_connected(c.total()));
  CHECK(c.total().euler_characteristic() == 0);

  const auto lifted = lift_cover(c, inst.cover);
  for (const auto& [name, comps] : lifted.lifted_elements)
    CHECK(comps.size() == 1);
  const auto stabs = nerve_stabilizers(c, lifted);
  CHECK(stabs.vertex_matches_component);
  for (const auto& [s, stab] : stabs.stabilizers)
    CHECK(stab.size() == 2);  // everything is fixed: the action is vertical
}

TEST_CASE("non convex covers break the orbit bijection") {
  // Circle covered by two overlapping arcs (disconnected intersection) and
  // unwrapped by Z2: the base nerve has a double edge collapsed to one,
  // while upstairs the two edges sit in different orbits.
  const auto x = cycle_complex(6);
  std::map<std::string, Subcomplex> elems;
  elems.emplace("A", Subcomplex::from_maximal(x, {{5, 0}, {0, 1}, {1, 2}, {2, 3}}));
  elems.emplace("B", Subcomplex::from_maximal(x, {{2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  const Cover u = validate_cover(x, std::move(elems));
  REQUIRE(!is_convex(u).convex);

  const auto z2 = FiniteGroupTable::cyclic(2);
  EdgeLabeling l;
  l.set(0, 5, 1, z2);
  const auto c = build_regular_cover(x, z2, l);
  REQUIRE(is_connected(c.total()));
  const auto lifted = lift_cover(c, u);
  const auto base_nerve = nerve(u);
  const auto result = verify_orbit_bijection(lifted, base_nerve, 1);
  CHECK(!result.holds);
  CHECK((result.duplicate_orbits.has_value() || result.unhit_base_simplex.has_value()));
}
