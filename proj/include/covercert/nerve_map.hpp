#ifndef COVERCERT_NERVE_MAP_HPP
#define COVERCERT_NERVE_MAP_HPP

#include <memory>
#include <utility>
#include <vector>

#include "covercert/cover.hpp"
#include "covercert/homology.hpp"
#include "covercert/simplicial_map.hpp"

namespace covercert {

/// Star condition: every vertex has its whole closed star inside one
/// cover element. It makes the vertex-to-element assignment simplicial.
inline bool star_condition_holds(const Cover& u) {
  for (VertexId v : u.space().vertices()) {
    const Subcomplex star = closed_star(u.space(), v);
    bool ok = false;
    for (const auto& [name, sub] : u.elements()) {
      bool inside = true;
      for (const Simplex& s : star.simplices())
        if (!sub.contains(s)) { inside = false; break; }
      if (inside) { ok = true; break; }
    }
    if (!ok) return false;
  }
  return true;
}

/// Refined model of (X, U) on which the star condition holds and whose
/// nerve agrees with the original one via the identity on element names.
/// The refined space is held behind a stable pointer so the cover's
/// subcomplexes stay valid when the struct moves.
struct StarRefinement {
  std::shared_ptr<const SimplicialComplex> refined_space;
  Cover refined_cover;
  NerveComplex refined_nerve;
  int rounds = 0;
};

/// Establish the star condition by repeated barycentric subdivision.
/// Subdivision alone never fixes a failing original vertex (its closed
/// star in the subdivision is carried by exactly the simplices of its old
/// closed star), so after each round every element is enlarged by one ring
/// of simplices. One ring around a subdivided element always captures the
/// stars of its vertices; enough rounds make the rings thin enough not to
/// create new intersections, which is checked by comparing nerves.
inline StarRefinement refine_for_star_condition(const SimplicialComplex& x, const Cover& u,
                                                int max_rounds = 8) {
  const NerveComplex base_nerve = nerve(u);
  {
    auto space = std::make_shared<const SimplicialComplex>(x);
    std::map<std::string, Subcomplex> elems;
    for (const auto& [name, sub] : u.elements())
      elems.emplace(name, Subcomplex(*space, sub.simplices()));
    Cover cover(*space, std::move(elems));
    if (star_condition_holds(cover)) {
      NerveComplex n = nerve(cover);
      return StarRefinement{std::move(space), std::move(cover), std::move(n), 0};
    }
  }

  SimplicialComplex current = x;
  std::map<std::string, SimplexSet> current_elems;
  for (const auto& [name, sub] : u.elements()) current_elems.emplace(name, sub.simplices());

  for (int round = 1; round <= max_rounds; ++round) {
    const BarycentricSubdivision sd = barycentric_subdivision(current);
    std::map<std::string, SimplexSet> next_elems;
    for (const auto& [name, simplices] : current_elems)
      next_elems.emplace(name,
                         sd.subdivide(Subcomplex(current, simplices)).simplices());
    current = sd.complex;
    current_elems = std::move(next_elems);

    auto space = std::make_shared<const SimplicialComplex>(current);
    std::map<std::string, Subcomplex> grown;
    for (const auto& [name, simplices] : current_elems)
      grown.emplace(name, closed_star_extension(Subcomplex(*space, simplices)));
    Cover cover(*space, std::move(grown));
    if (!star_condition_holds(cover)) continue;
    NerveComplex n = nerve(cover);
    if (n.complex == base_nerve.complex && n.names == base_nerve.names)
      return StarRefinement{std::move(space), std::move(cover), std::move(n), round};
  }
  throw Error(ErrorCode::StarConditionNotReached,
              "star condition with stable nerve not reached after " +
                  std::to_string(max_rounds) + " rounds");
}

enum class TieBreak { LeastName, GreatestName };

/// Simplicial representative of the nerve map: each vertex goes to the
/// element (least or greatest name) containing its closed star.
inline SimplicialMap build_nerve_map(const StarRefinement& r,
                                     TieBreak tie = TieBreak::LeastName) {
  const SimplicialComplex& space = *r.refined_space;
  std::map<VertexId, VertexId> assignment;
  for (VertexId v : space.vertices()) {
    const Subcomplex star = closed_star(space, v);
    std::optional<std::string> chosen;
    for (const auto& [name, sub] : r.refined_cover.elements()) {
      bool inside = true;
      for (const Simplex& s : star.simplices())
        if (!sub.contains(s)) { inside = false; break; }
      if (!inside) continue;
      if (!chosen || (tie == TieBreak::LeastName ? name < *chosen : name > *chosen))
        chosen = name;
    }
    if (!chosen)
      throw Error(ErrorCode::StarConditionNotReached,
                  "no element contains the closed star of vertex " + std::to_string(v));
    assignment[v] = r.refined_nerve.vertex_of(*chosen);
  }
  return SimplicialMap(space, r.refined_nerve.complex, std::move(assignment));
}

struct NerveMapReport {
  int rounds = 0;
  bool simplicial = false;
  std::vector<std::size_t> induced_ranks;  // degree 0 .. dim X
};

inline NerveMapReport nerve_map_report(const SimplicialComplex& x, const Cover& u,
                                       int max_rounds = 8,
                                       TieBreak tie = TieBreak::LeastName) {
  const StarRefinement r = refine_for_star_condition(x, u, max_rounds);
  const SimplicialMap nu = build_nerve_map(r, tie);
  NerveMapReport report;
  report.rounds = r.rounds;
  report.simplicial = true;  // SimplicialMap construction already validated it
  HomologyCalculator src(nu.source()), dst(nu.target());
  for (int n = 0; n <= x.dim(); ++n)
    report.induced_ranks.push_back(induced_map_homology(nu, n, src, dst).rank);
  return report;
}

}  // namespace covercert

#endif
