#ifndef COVERCERT_SIMPLICIAL_HPP
#define COVERCERT_SIMPLICIAL_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "covercert/errors.hpp"

namespace covercert {

/// Vertex identifier. Identifiers are opaque and totally ordered; textual
/// labels, when present, are resolved to ids at the I/O boundary.
using VertexId = int;

/// A single simplex: strictly ascending vertex list. Ordered first by
/// dimension, then lexicographically, which fixes every enumeration and
/// witness choice in the library.
class Simplex {
 public:
  Simplex() = default;

  static Simplex from_vertices(std::vector<VertexId> verts) {
    if (verts.empty()) throw Error(ErrorCode::EmptySimplex, "simplex needs at least one vertex");
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 1; i < verts.size(); ++i)
      if (verts[i] == verts[i - 1])
        throw Error(ErrorCode::DuplicateVertexInSimplex,
                    "vertex " + std::to_string(verts[i]) + " repeated");
    Simplex s;
    s.verts_ = std::move(verts);
    return s;
  }

  const std::vector<VertexId>& vertices() const { return verts_; }
  int dim() const { return static_cast<int>(verts_.size()) - 1; }

  bool has_vertex(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  /// Codimension-1 faces, in order of the deleted vertex position.
  std::vector<Simplex> facets() const {
    std::vector<Simplex> out;
    if (verts_.size() <= 1) return out;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      Simplex f;
      f.verts_ = verts_;
      f.verts_.erase(f.verts_.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::move(f));
    }
    return out;
  }

  /// All nonempty faces, including the simplex itself.
  std::vector<Simplex> all_faces() const {
    std::vector<Simplex> out;
    const std::size_t n = verts_.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) f.verts_.push_back(verts_[i]);
      out.push_back(std::move(f));
    }
    return out;
  }

  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.verts_.size() <=> b.verts_.size(); c != 0) return c;
    return a.verts_ <=> b.verts_;
  }
  friend bool operator==(const Simplex& a, const Simplex& b) = default;

 private:
  std::vector<VertexId> verts_;
};

using SimplexSet = std::set<Simplex>;

inline SimplexSet face_closure(const SimplexSet& simplices) {
  SimplexSet out;
  for (const Simplex& s : simplices)
    for (Simplex& f : s.all_faces()) out.insert(std::move(f));
  return out;
}

/// Finite abstract simplicial complex; face-closed by construction and
/// immutable afterwards.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_maximal(const std::vector<std::vector<VertexId>>& maximal) {
    SimplexSet seed;
    for (const auto& verts : maximal) seed.insert(Simplex::from_vertices(verts));
    return from_closed_set(face_closure(seed));
  }

  /// Caller guarantees face-closure (e.g. an intersection of complexes).
  static SimplicialComplex from_closed_set(SimplexSet simplices) {
    SimplicialComplex k;
    k.simplices_ = std::move(simplices);
    for (const Simplex& s : k.simplices_)
      if (s.dim() == 0) k.vertices_.push_back(s.vertices()[0]);
    return k;
  }

  const SimplexSet& simplices() const { return simplices_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  int dim() const {
    int d = -1;
    for (const Simplex& s : simplices_) d = std::max(d, s.dim());
    return d;
  }

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }

  /// n-simplices in canonical order; this is the chain basis in degree n.
  std::vector<Simplex> simplices_of_dim(int n) const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_)
      if (s.dim() == n) out.push_back(s);
    return out;
  }

  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_) {
      bool maximal = true;
      for (const Simplex& t : simplices_) {
        if (t.dim() <= s.dim() || &t == &s) continue;
        if (std::includes(t.vertices().begin(), t.vertices().end(),
                          s.vertices().begin(), s.vertices().end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
    return out;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (const Simplex& s : simplices_) chi += (s.dim() % 2 == 0) ? 1 : -1;
    return chi;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

 private:
  SimplexSet simplices_;
  std::vector<VertexId> vertices_;  // ascending
};

/// Face-closed subset of a parent complex. Holds a non-owning reference;
/// the parent must outlive every subcomplex built over it.
class Subcomplex {
 public:
  Subcomplex() = default;
  Subcomplex(const SimplicialComplex& parent, SimplexSet simplices)
      : parent_(&parent), simplices_(std::move(simplices)) {}

  static Subcomplex from_maximal(const SimplicialComplex& parent,
                                 const std::vector<std::vector<VertexId>>& maximal) {
    SimplexSet seed;
    for (const auto& verts : maximal) seed.insert(Simplex::from_vertices(verts));
    SimplexSet closed = face_closure(seed);
    for (const Simplex& s : closed)
      if (!parent.contains(s))
        throw Error(ErrorCode::ParentMismatch, "simplex not present in parent complex");
    return Subcomplex(parent, std::move(closed));
  }

  const SimplicialComplex& parent() const { return *parent_; }
  const SimplexSet& simplices() const { return simplices_; }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  bool empty() const { return simplices_.empty(); }
  std::size_t size() const { return simplices_.size(); }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    for (const Simplex& s : simplices_)
      if (s.dim() == 0) out.push_back(s.vertices()[0]);
    return out;
  }

  /// Standalone copy, losing the parent reference.
  SimplicialComplex as_complex() const { return SimplicialComplex::from_closed_set(simplices_); }

  friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
    return a.parent_ == b.parent_ && a.simplices_ == b.simplices_;
  }

 private:
  const SimplicialComplex* parent_ = nullptr;
  SimplexSet simplices_;
};

inline Subcomplex closed_star(const SimplicialComplex& k, VertexId v) {
  if (!k.has_vertex(v))
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  SimplexSet star;
  for (const Simplex& s : k.simplices())
    if (s.has_vertex(v)) star.insert(s);
  return Subcomplex(k, face_closure(star));
}

/// Union of the closed stars of every vertex of `sub` (one-ring enlargement).
inline Subcomplex closed_star_extension(const Subcomplex& sub) {
  std::set<VertexId> verts;
  for (const Simplex& s : sub.simplices())
    for (VertexId v : s.vertices()) verts.insert(v);
  SimplexSet grown = sub.simplices();
  for (const Simplex& s : sub.parent().simplices())
    for (VertexId v : s.vertices())
      if (verts.count(v)) { grown.insert(s); break; }
  return Subcomplex(sub.parent(), face_closure(grown));
}

namespace detail {

// Union-find over vertex ids.
class DisjointSets {
 public:
  void add(VertexId v) { parent_.emplace(v, v); }
  VertexId find(VertexId v) {
    VertexId r = v;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[v] != r) { VertexId nxt = parent_[v]; parent_[v] = r; v = nxt; }
    return r;
  }
  void unite(VertexId a, VertexId b) { parent_[find(a)] = find(b); }

 private:
  std::map<VertexId, VertexId> parent_;
};

inline std::vector<SimplexSet> component_simplex_sets(const SimplexSet& simplices) {
  DisjointSets ds;
  for (const Simplex& s : simplices)
    if (s.dim() == 0) ds.add(s.vertices()[0]);
  for (const Simplex& s : simplices)
    for (std::size_t i = 1; i < s.vertices().size(); ++i)
      ds.unite(s.vertices()[0], s.vertices()[i]);
  std::map<VertexId, SimplexSet> buckets;
  for (const Simplex& s : simplices) buckets[ds.find(s.vertices()[0])].insert(s);
  std::vector<SimplexSet> out;
  for (auto& [root, set] : buckets) out.push_back(std::move(set));
  return out;  // deterministic: keyed by least representative
}

}  // namespace detail

inline std::vector<Subcomplex> connected_components(const SimplicialComplex& k) {
  std::vector<Subcomplex> out;
  for (auto& set : detail::component_simplex_sets(k.simplices()))
    out.emplace_back(k, std::move(set));
  return out;
}

inline std::vector<Subcomplex> connected_components(const Subcomplex& sub) {
  std::vector<Subcomplex> out;
  for (auto& set : detail::component_simplex_sets(sub.simplices()))
    out.emplace_back(sub.parent(), std::move(set));
  return out;
}

inline bool is_connected(const SimplicialComplex& k) {
  return connected_components(k).size() == 1;
}

inline Subcomplex intersect_subcomplexes(const Subcomplex& a, const Subcomplex& b) {
  if (&a.parent() != &b.parent())
    throw Error(ErrorCode::ParentMismatch, "subcomplexes live in different parents");
  SimplexSet out;
  std::set_intersection(a.simplices().begin(), a.simplices().end(),
                        b.simplices().begin(), b.simplices().end(),
                        std::inserter(out, out.begin()));
  return Subcomplex(a.parent(), std::move(out));
}

inline Subcomplex intersect_subcomplexes(const std::vector<Subcomplex>& operands) {
  if (operands.empty())
    throw Error(ErrorCode::ParentMismatch, "need at least one operand");
  Subcomplex acc = operands.front();
  for (std::size_t i = 1; i < operands.size(); ++i)
    acc = intersect_subcomplexes(acc, operands[i]);
  return acc;
}

/// Barycentric subdivision. Vertices of the result are the simplices of the
/// input (in canonical order); `carrier[i]` is the input simplex behind
/// subdivision vertex i.
struct BarycentricSubdivision {
  SimplicialComplex complex;
  std::vector<Simplex> carrier;          // new vertex id -> original simplex
  std::map<Simplex, VertexId> vertex_of; // original simplex -> new vertex id

  /// Image of a subcomplex of the original under subdivision.
  Subcomplex subdivide(const Subcomplex& sub) const {
    SimplexSet out;
    for (const Simplex& chain : complex.simplices()) {
      bool inside = true;
      for (VertexId v : chain.vertices())
        if (!sub.contains(carrier[static_cast<std::size_t>(v)])) { inside = false; break; }
      if (inside) out.insert(chain);
    }
    return Subcomplex(complex, std::move(out));
  }
};

inline BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k) {
  BarycentricSubdivision out;
  VertexId next = 0;
  for (const Simplex& s : k.simplices()) {
    out.vertex_of.emplace(s, next++);
    out.carrier.push_back(s);
  }
  // Chains in the face poset. Enumerate descending chains from each simplex.
  SimplexSet chains;
  std::vector<std::pair<Simplex, std::vector<VertexId>>> stack;
  for (const Simplex& s : k.simplices())
    stack.push_back({s, {out.vertex_of.at(s)}});
  while (!stack.empty()) {
    auto [top, chain] = std::move(stack.back());
    stack.pop_back();
    chains.insert(Simplex::from_vertices(chain));
    for (const Simplex& f : top.all_faces()) {
      if (f == top) continue;
      auto ext = chain;
      ext.push_back(out.vertex_of.at(f));
      stack.push_back({f, std::move(ext)});
    }
  }
  out.complex = SimplicialComplex::from_closed_set(std::move(chains));
  return out;
}

}  // namespace covercert

#endif
