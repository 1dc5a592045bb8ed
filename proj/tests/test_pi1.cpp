#include <catch2/catch_amalgamated.hpp>

#include "covercert/corpus.hpp"
#include "covercert/group_presentation.hpp"
#include "covercert/homology.hpp"
#include "covercert/matrix.hpp"
#include "support/random_gen.hpp"

using namespace covercert;

namespace {

Matrix relator_matrix(const GroupPresentation& p) {
  Matrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int letter : p.relators[r])
      m.at(r, static_cast<std::size_t>(std::abs(letter)) - 1) += (letter > 0 ? 1 : -1);
  return m;
}

long abelianized_rank(const GroupPresentation& p) {
  return static_cast<long>(p.generators.size()) -
         static_cast<long>(rank(relator_matrix(p)));
}

}  // namespace

TEST_CASE("edge path presentations of standard complexes") {
  const auto circle = SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}});
  const auto pc = edge_path_presentation(circle, 0);
  CHECK(pc.generators.size() == 1);
  CHECK(pc.relators.empty());

  const auto disc = SimplicialComplex::from_maximal({{0, 1, 2}});
  const auto pd = simplify_presentation(edge_path_presentation(disc, 0));
  CHECK(pd.generators.empty());
  CHECK(pd.relators.empty());

  const auto k4 = SimplicialComplex::from_maximal(
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(edge_path_presentation(k4, 0).generators.size() == 3);

  const auto torus = corpus("torus_annuli");
  const auto pt = simplify_presentation(
      edge_path_presentation(*torus.space, torus.space->vertices().front()));
  CHECK(pt.generators.size() == 2);
  CHECK(pt.relators.size() == 1);

  CHECK_THROWS_AS(edge_path_presentation(circle, 99), Error);
  const auto split = SimplicialComplex::from_maximal({{0, 1}, {2, 3}});
  CHECK_THROWS_AS(edge_path_presentation(split, 0), Error);
}

TEST_CASE("generator count is the first Betti number of the graph") {
  testsupport::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const auto k = testsupport::random_connected_complex(rng);
    const auto p = edge_path_presentation(k, k.vertices().front());
    const long edges = static_cast<long>(k.simplices_of_dim(1).size());
    const long verts = static_cast<long>(k.vertices().size());
    CHECK(static_cast<long>(p.generators.size()) == edges - verts + 1);
    CHECK(static_cast<long>(p.spanning_tree.size()) == verts - 1);
  }
}

TEST_CASE("abelianization matches homology") {
  testsupport::Rng rng(43);
  for (int i = 0; i < 25; ++i) {
    const auto k = testsupport::random_connected_complex(rng);
    const auto p = edge_path_presentation(k, k.vertices().front());
    const auto betti = betti_numbers(k);
    const long b1 = betti.size() > 1 ? betti[1] : 0;
    CHECK(abelianized_rank(p) == b1);
    // Tietze moves are isomorphisms, so the abelianization is unchanged.
    CHECK(abelianized_rank(simplify_presentation(p)) == b1);
  }
}

TEST_CASE("simplification eliminates single-occurrence generators") {
  GroupPresentation p;
  p.generators = {"a", "b"};
  p.relators = {{2}};  // b = 1
  const auto q = simplify_presentation(p);
  CHECK(q.generators == std::vector<std::string>{"a"});
  CHECK(q.relators.empty());

  GroupPresentation r;
  r.generators = {"a"};
  r.relators = {{1, 1, -1}};  // freely reduces to a = 1
  CHECK(simplify_presentation(r).generators.empty());
}

TEST_CASE("image words land in the right homology classes") {
  const auto inst = corpus("torus_annuli");
  const auto px =
      edge_path_presentation(*inst.space, inst.space->vertices().front());
  const Matrix relators = relator_matrix(px);

  Matrix relators_t(relators.cols(), relators.rows());
  for (std::size_t i = 0; i < relators.rows(); ++i)
    for (std::size_t j = 0; j < relators.cols(); ++j)
      relators_t.at(j, i) = relators.at(i, j);

  for (const auto& [name, sub] : inst.cover.elements()) {
    const auto words = pi1_image_words(sub, px);
    // One word per non-tree edge of the element.
    const auto vk = sub.as_complex();
    CHECK(words.size() == vk.simplices_of_dim(1).size() - vk.vertices().size() + 1);
    // Extended annuli wrap the torus, so some image word must be nontrivial
    // already in H_1(X): its abelianization escapes the relator span.
    bool nontrivial = false;
    for (const Word& w : words) {
      std::vector<Rational> abelian(px.generators.size());
      for (int letter : w)
        abelian[static_cast<std::size_t>(std::abs(letter)) - 1] += (letter > 0 ? 1 : -1);
      if (!solve(relators_t, abelian).has_value()) nontrivial = true;
    }
    CHECK(nontrivial);
  }

  // A tree element has no non-tree edges, hence no image words at all.
  const auto disc = SimplicialComplex::from_maximal({{0, 1, 2}});
  const auto pd = edge_path_presentation(disc, 0);
  CHECK(pi1_image_words(Subcomplex::from_maximal(disc, {{0, 1}, {1, 2}}), pd).empty());
}

TEST_CASE("amenability verdicts") {
  const auto stars = corpus("circle_stars");
  for (const auto& cert : amenability_verdict(stars.cover, {})) {
    REQUIRE(cert.certified());
    CHECK(*cert.reason == AmenabilityReason::TrivialGroup);
  }

  const auto torus = corpus("torus_annuli");
  for (const auto& cert : amenability_verdict(torus.cover, {})) {
    REQUIRE(cert.certified());
    CHECK(*cert.reason == AmenabilityReason::CyclicGroup);
  }

  // Wedge of two circles: free of rank 2, so only an attestation helps.
  const auto wedge = SimplicialComplex::from_maximal(
      {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  std::map<std::string, Subcomplex> whole;
  whole.emplace("W", Subcomplex(wedge, wedge.simplices()));
  const Cover u = validate_cover(wedge, std::move(whole));
  const auto unattested = amenability_verdict(u, {});
  REQUIRE(unattested.size() == 1);
  CHECK(!unattested.front().certified());
  CHECK(unattested.front().generator_words.size() == 2);
  const auto attested = amenability_verdict(u, {"W"});
  REQUIRE(attested.front().certified());
  CHECK(*attested.front().reason == AmenabilityReason::Attested);
}

TEST_CASE("a genus two handle presents a rank two free group") {
  using B = corpus_detail::Genus2Builder;
  const auto inst = corpus("example1");
  const SimplicialComplex& x = *inst.space;

  // Strips 2..4 of columns 0..6 plus the whole first tube: a one-handled
  // surface with boundary.
  std::vector<B::Tri> tiles;
  for (int c = 0; c < 7; ++c)
    for (int r = 2; r <= 4; ++r) B::append(tiles, B::square(r, c));
  for (int j = 0; j <= B::TUBE_RINGS; ++j) B::append(tiles, B::band(0, j));
  const auto handle = Subcomplex::from_maximal(x, tiles).as_complex();

  REQUIRE(is_connected(handle));
  const auto betti = betti_numbers(handle);
  CHECK(betti[1] == 2);
  const auto p = simplify_presentation(
      edge_path_presentation(handle, handle.vertices().front()));
  CHECK(p.generators.size() >= 2);
  CHECK(abelianized_rank(p) == 2);
}
