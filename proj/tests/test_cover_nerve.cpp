#include <catch2/catch_amalgamated.hpp>

#include "covercert/corpus.hpp"
#include "covercert/cover.hpp"
#include "support/random_gen.hpp"

using namespace covercert;

namespace {

SimplicialComplex hexagon() {
  return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

std::map<std::string, Subcomplex> hexagon_arcs(const SimplicialComplex& x) {
  std::map<std::string, Subcomplex> elems;
  elems.emplace("S1", Subcomplex::from_maximal(x, {{5, 0}, {0, 1}, {1, 2}}));
  elems.emplace("S2", Subcomplex::from_maximal(x, {{1, 2}, {2, 3}, {3, 4}}));
  elems.emplace("S3", Subcomplex::from_maximal(x, {{3, 4}, {4, 5}, {5, 0}}));
  return elems;
}

bool has_violation(const std::vector<CoverViolation>& vs, ErrorCode code) {
  for (const auto& v : vs)
    if (v.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("cover validation accepts and rejects") {
  const auto x = hexagon();
  CHECK(cover_violations(x, hexagon_arcs(x)).empty());
  CHECK_NOTHROW(validate_cover(x, hexagon_arcs(x)));

  SECTION("uncovered simplex") {
    auto elems = hexagon_arcs(x);
    elems.erase("S3");
    const auto vs = cover_violations(x, elems);
    CHECK(has_violation(vs, ErrorCode::UncoveredSimplex));
    CHECK_THROWS_AS(validate_cover(x, elems), Error);
  }
  SECTION("disconnected element") {
    auto elems = hexagon_arcs(x);
    elems.emplace("B", Subcomplex::from_maximal(x, {{0, 1}, {3, 4}}));
    CHECK(has_violation(cover_violations(x, elems), ErrorCode::DisconnectedElement));
  }
  SECTION("duplicate element") {
    auto elems = hexagon_arcs(x);
    elems.emplace("S1bis", Subcomplex::from_maximal(x, {{5, 0}, {0, 1}, {1, 2}}));
    CHECK(has_violation(cover_violations(x, elems), ErrorCode::DuplicateElement));
  }
  SECTION("empty element") {
    auto elems = hexagon_arcs(x);
    elems.emplace("E", Subcomplex(x, SimplexSet{}));
    CHECK(has_violation(cover_violations(x, elems), ErrorCode::EmptyElement));
  }
  SECTION("foreign parent") {
    auto elems = hexagon_arcs(x);
    const auto other = hexagon();
    elems.emplace("F", Subcomplex::from_maximal(other, {{0, 1}}));
    CHECK(has_violation(cover_violations(x, elems), ErrorCode::ParentMismatch));
  }
}

TEST_CASE("multiplicity") {
  const auto x = hexagon();
  std::map<std::string, Subcomplex> whole;
  whole.emplace("W", Subcomplex(x, x.simplices()));
  CHECK(multiplicity(validate_cover(x, std::move(whole))) == 1);

  const Cover arcs = validate_cover(x, hexagon_arcs(x));
  CHECK(multiplicity(arcs) == 2);

  const auto ex2 = corpus("example2");
  CHECK(multiplicity(ex2.cover) == 4);
}

TEST_CASE("nerve shapes and witnesses") {
  const auto x = hexagon();

  std::map<std::string, Subcomplex> whole;
  whole.emplace("W", Subcomplex(x, x.simplices()));
  const auto point_nerve = nerve(validate_cover(x, std::move(whole)));
  CHECK(point_nerve.complex.size() == 1);
  CHECK(point_nerve.names == std::vector<std::string>{"W"});

  const Cover arcs = validate_cover(x, hexagon_arcs(x));
  const auto n = nerve(arcs);
  // Three arcs meet pairwise but not all together: boundary of a triangle.
  CHECK(n.complex.vertices().size() == 3);
  CHECK(n.complex.simplices_of_dim(1).size() == 3);
  CHECK(n.complex.simplices_of_dim(2).empty());
  CHECK(n.vertex_of("S2") == 1);
  CHECK_THROWS_AS(n.vertex_of("S9"), Error);

  // Every witness lies in the corresponding intersection.
  for (const auto& [ns, w] : n.witness) {
    std::vector<Subcomplex> operands;
    for (VertexId v : ns.vertices())
      operands.push_back(arcs.element(n.names[static_cast<std::size_t>(v)]));
    CHECK(intersect_subcomplexes(operands).contains(w));
  }
}

TEST_CASE("nerve dimension is multiplicity minus one") {
  testsupport::Rng rng(37);
  for (int i = 0; i < 30; ++i) {
    const auto k = testsupport::random_connected_complex(rng, 6);
    const auto verts = k.vertices();
    std::map<std::string, Subcomplex> elems;
    bool degenerate = false;
    const int count = testsupport::pick(rng, 2, 4);
    for (int e = 0; e < count; ++e) {
      Subcomplex sub = closed_star(
          k, verts[static_cast<std::size_t>(testsupport::pick(
                 rng, 0, static_cast<int>(verts.size()) - 1))]);
      for (const auto& [name, other] : elems)
        if (other.simplices() == sub.simplices()) degenerate = true;
      elems.emplace("E" + std::to_string(e), std::move(sub));
    }
    if (degenerate || !cover_violations(k, elems).empty()) continue;
    const Cover u(k, elems);
    CHECK(nerve(u).complex.dim() + 1 == multiplicity(u));
  }
}

TEST_CASE("nerve is invariant under renaming and subdivision") {
  const auto x = hexagon();
  const Cover arcs = validate_cover(x, hexagon_arcs(x));
  const auto n = nerve(arcs);

  // Renaming permutes the vertex labels but not the shape.
  std::map<std::string, Subcomplex> renamed;
  renamed.emplace("Zc", arcs.element("S1"));
  renamed.emplace("Ab", arcs.element("S2"));
  renamed.emplace("Mm", arcs.element("S3"));
  const auto n2 = nerve(validate_cover(x, std::move(renamed)));
  CHECK(n2.complex == n.complex);
  CHECK(n2.names == std::vector<std::string>{"Ab", "Mm", "Zc"});

  // Simultaneous barycentric subdivision of space and elements.
  const auto sd = barycentric_subdivision(x);
  std::map<std::string, Subcomplex> subdivided;
  for (const auto& [name, sub] : arcs.elements())
    subdivided.emplace(name, sd.subdivide(sub));
  const auto n3 = nerve(validate_cover(sd.complex, std::move(subdivided)));
  CHECK(n3.complex == n.complex);
  CHECK(n3.names == n.names);
}

TEST_CASE("convexity verdicts") {
  const auto x = hexagon();
  CHECK(is_convex(validate_cover(x, hexagon_arcs(x))).convex);

  // Two arcs overlapping at both ends: a disconnected intersection.
  std::map<std::string, Subcomplex> two;
  two.emplace("A", Subcomplex::from_maximal(x, {{5, 0}, {0, 1}, {1, 2}, {2, 3}}));
  two.emplace("B", Subcomplex::from_maximal(x, {{2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  const auto verdict = is_convex(validate_cover(x, std::move(two)));
  REQUIRE(!verdict.convex);
  REQUIRE(verdict.witness_failure.has_value());
  CHECK(verdict.witness_failure->first == std::vector<std::string>{"A", "B"});
  CHECK(verdict.witness_failure->second.size() == 2);

  const auto ex2 = corpus("example2");
  const auto v2 = is_convex(ex2.cover);
  REQUIRE(!v2.convex);
  CHECK(v2.witness_failure->second.size() == 2);

  const auto ex1 = corpus("example1");
  CHECK(is_convex(ex1.cover).convex);
}
