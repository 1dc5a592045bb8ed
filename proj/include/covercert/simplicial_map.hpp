#ifndef COVERCERT_SIMPLICIAL_MAP_HPP
#define COVERCERT_SIMPLICIAL_MAP_HPP

#include <map>
#include <string>
#include <vector>

#include "covercert/simplicial.hpp"

namespace covercert {

/// Vertex assignment between complexes. Validated on construction: the
/// image of every source simplex must again be a simplex of the target
/// (repeated image vertices collapse, which is fine).
class SimplicialMap {
 public:
  SimplicialMap() = default;

  SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                std::map<VertexId, VertexId> assignment)
      : source_(std::move(source)), target_(std::move(target)),
        assignment_(std::move(assignment)) {
    for (VertexId v : source_.vertices())
      if (!assignment_.count(v))
        throw Error(ErrorCode::NotSimplicial,
                    "no image for vertex " + std::to_string(v));
    for (const Simplex& s : source_.simplices())
      if (!target_.contains(image_simplex(s)))
        throw Error(ErrorCode::NotSimplicial, "image of a simplex is not a target simplex");
  }

  static SimplicialMap identity(const SimplicialComplex& k) {
    std::map<VertexId, VertexId> id;
    for (VertexId v : k.vertices()) id[v] = v;
    return SimplicialMap(k, k, std::move(id));
  }

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::map<VertexId, VertexId>& assignment() const { return assignment_; }

  VertexId operator()(VertexId v) const { return assignment_.at(v); }

  /// Image vertex set with duplicates removed (a target simplex).
  Simplex image_simplex(const Simplex& s) const {
    std::vector<VertexId> img;
    for (VertexId v : s.vertices()) img.push_back(assignment_.at(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return Simplex::from_vertices(img);
  }

  /// True when the image vertex list has a repeat (chain image is zero).
  bool is_degenerate_on(const Simplex& s) const {
    return image_simplex(s).dim() < s.dim();
  }

  /// Sign of the permutation sorting the image vertices; only meaningful
  /// for non-degenerate simplices.
  int orientation_sign(const Simplex& s) const {
    std::vector<VertexId> img;
    for (VertexId v : s.vertices()) img.push_back(assignment_.at(v));
    int sign = 1;
    for (std::size_t i = 0; i < img.size(); ++i)       // insertion-sort parity
      for (std::size_t j = i + 1; j < img.size(); ++j)
        if (img[j] < img[i]) sign = -sign;
    return sign;
  }

  static SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    std::map<VertexId, VertexId> comp;
    for (const auto& [v, w] : f.assignment()) comp[v] = g(w);
    return SimplicialMap(f.source(), g.target(), std::move(comp));
  }

 private:
  SimplicialComplex source_, target_;
  std::map<VertexId, VertexId> assignment_;
};

}  // namespace covercert

#endif
