#ifndef COVERCERT_COVER_HPP
#define COVERCERT_COVER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covercert/simplicial.hpp"

namespace covercert {

struct CoverViolation {
  ErrorCode code;
  std::string detail;
};

/// Cover of a complex by named, nonempty, connected subcomplexes whose
/// union contains every simplex. Two names may not denote the same
/// simplex set (covers are sets of subsets, not families).
class Cover {
 public:
  Cover() = default;
  Cover(const SimplicialComplex& space, std::map<std::string, Subcomplex> elements)
      : space_(&space), elements_(std::move(elements)) {}

  const SimplicialComplex& space() const { return *space_; }
  const std::map<std::string, Subcomplex>& elements() const { return elements_; }
  const Subcomplex& element(const std::string& name) const { return elements_.at(name); }
  std::size_t size() const { return elements_.size(); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [name, sub] : elements_) out.push_back(name);
    return out;
  }

 private:
  const SimplicialComplex* space_ = nullptr;
  std::map<std::string, Subcomplex> elements_;
};

inline std::vector<CoverViolation> cover_violations(
    const SimplicialComplex& space, const std::map<std::string, Subcomplex>& elements) {
  std::vector<CoverViolation> out;
  for (const auto& [name, sub] : elements) {
    if (&sub.parent() != &space) {
      out.push_back({ErrorCode::ParentMismatch, "element " + name + " has a different parent"});
      continue;
    }
    if (sub.empty()) {
      out.push_back({ErrorCode::EmptyElement, "element " + name + " is empty"});
      continue;
    }
    if (connected_components(sub).size() != 1)
      out.push_back({ErrorCode::DisconnectedElement, "element " + name + " is disconnected"});
  }
  for (auto it = elements.begin(); it != elements.end(); ++it)
    for (auto jt = std::next(it); jt != elements.end(); ++jt)
      if (it->second.simplices() == jt->second.simplices())
        out.push_back({ErrorCode::DuplicateElement,
                       "elements " + it->first + " and " + jt->first + " coincide"});
  for (const Simplex& s : space.simplices()) {
    bool covered = false;
    for (const auto& [name, sub] : elements)
      if (sub.contains(s)) { covered = true; break; }
    if (!covered) {
      std::string verts;
      for (VertexId v : s.vertices()) verts += (verts.empty() ? "" : ",") + std::to_string(v);
      out.push_back({ErrorCode::UncoveredSimplex, "simplex {" + verts + "} is uncovered"});
    }
  }
  return out;
}

inline Cover validate_cover(const SimplicialComplex& space,
                            std::map<std::string, Subcomplex> elements) {
  const auto violations = cover_violations(space, elements);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations)
      msg += std::string(error_code_name(v.code)) + " (" + v.detail + "); ";
    throw Error(ErrorCode::ValidationError, msg);
  }
  return Cover(space, std::move(elements));
}

/// Maximum number of elements sharing one simplex.
inline int multiplicity(const Cover& u) {
  int best = 0;
  for (const Simplex& s : u.space().simplices()) {
    int count = 0;
    for (const auto& [name, sub] : u.elements())
      if (sub.contains(s)) ++count;
    best = std::max(best, count);
  }
  return best;
}

/// Nerve of a cover. Vertex ids index the sorted element names; every nerve
/// simplex carries a witness simplex of the ambient space lying in the
/// corresponding intersection (the least such simplex in canonical order).
struct NerveComplex {
  SimplicialComplex complex;
  std::vector<std::string> names;           // nerve vertex id -> element name
  std::map<Simplex, Simplex> witness;       // nerve simplex -> witness in X

  VertexId vertex_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<VertexId>(i);
    throw Error(ErrorCode::UnknownVertex, "no nerve vertex named " + name);
  }
};

inline NerveComplex nerve(const Cover& u) {
  NerveComplex out;
  out.names = u.names();
  std::vector<const Subcomplex*> subs;
  for (const auto& [name, sub] : u.elements()) subs.push_back(&sub);

  SimplexSet nerve_simplices;
  // Grow simplices by adding elements with larger index; intersections only
  // shrink, so dead branches are pruned immediately.
  struct Node { std::vector<VertexId> verts; Subcomplex inter; };
  std::vector<Node> stack;
  for (std::size_t i = 0; i < subs.size(); ++i)
    stack.push_back({{static_cast<VertexId>(i)}, *subs[i]});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const Simplex ns = Simplex::from_vertices(node.verts);
    nerve_simplices.insert(ns);
    out.witness.emplace(ns, *node.inter.simplices().begin());
    for (std::size_t j = static_cast<std::size_t>(node.verts.back()) + 1; j < subs.size(); ++j) {
      Subcomplex next = intersect_subcomplexes(node.inter, *subs[j]);
      if (next.empty()) continue;
      auto verts = node.verts;
      verts.push_back(static_cast<VertexId>(j));
      stack.push_back({std::move(verts), std::move(next)});
    }
  }
  out.complex = SimplicialComplex::from_closed_set(std::move(nerve_simplices));
  return out;
}

struct ConvexityVerdict {
  bool convex = true;
  // Element names and the components of their disconnected intersection.
  std::optional<std::pair<std::vector<std::string>, std::vector<Subcomplex>>> witness_failure;
};

/// Convexity check over exactly the nerve simplices: every other finite
/// subfamily has empty intersection, which the definition allows.
inline ConvexityVerdict is_convex(const Cover& u, const NerveComplex& n) {
  for (const Simplex& ns : n.complex.simplices()) {
    std::vector<Subcomplex> operands;
    std::vector<std::string> names;
    for (VertexId v : ns.vertices()) {
      names.push_back(n.names[static_cast<std::size_t>(v)]);
      operands.push_back(u.element(names.back()));
    }
    auto components = connected_components(intersect_subcomplexes(operands));
    if (components.size() >= 2) {
      ConvexityVerdict verdict;
      verdict.convex = false;
      verdict.witness_failure = {std::move(names), std::move(components)};
      return verdict;
    }
  }
  return ConvexityVerdict{};
}

inline ConvexityVerdict is_convex(const Cover& u) { return is_convex(u, nerve(u)); }

}  // namespace covercert

#endif
