#ifndef COVERCERT_COVERING_HPP
#define COVERCERT_COVERING_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "covercert/cover.hpp"
#include "covercert/simplicial_map.hpp"

namespace covercert {

/// Finite group given by its multiplication table; all laws are validated
/// on construction so downstream orbit and stabilizer code can trust them.
class FiniteGroupTable {
 public:
  static FiniteGroupTable from_table(std::vector<std::string> names,
                                     std::vector<std::vector<int>> table) {
    FiniteGroupTable g;
    g.names_ = std::move(names);
    g.table_ = std::move(table);
    const int n = static_cast<int>(g.names_.size());
    if (g.table_.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::ValidationError, "group table is not square");
    for (const auto& row : g.table_) {
      if (row.size() != static_cast<std::size_t>(n))
        throw Error(ErrorCode::ValidationError, "group table is not square");
      for (int e : row)
        if (e < 0 || e >= n)
          throw Error(ErrorCode::ValidationError, "group table entry out of range");
    }
    g.identity_ = -1;
    for (int e = 0; e < n; ++e) {
      bool is_id = true;
      for (int a = 0; a < n; ++a)
        if (g.table_[e][a] != a || g.table_[a][e] != a) { is_id = false; break; }
      if (is_id) { g.identity_ = e; break; }
    }
    if (g.identity_ < 0)
      throw Error(ErrorCode::ValidationError, "group table has no identity");
    g.inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) {
          g.inverse_[static_cast<std::size_t>(a)] = b;
          break;
        }
      if (g.inverse_[static_cast<std::size_t>(a)] < 0)
        throw Error(ErrorCode::ValidationError,
                    "group element " + g.names_[static_cast<std::size_t>(a)] + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
            throw Error(ErrorCode::ValidationError, "group table is not associative");
    return g;
  }

  static FiniteGroupTable cyclic(int n) {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
      names.push_back(std::to_string(a));
      for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return from_table(std::move(names), std::move(table));
  }

  static FiniteGroupTable symmetric3() {
    // Permutations of {0,1,2} in a fixed order; composition p*q = p after q.
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    auto index_of = [&](const std::array<int, 3>& p) {
      for (std::size_t i = 0; i < perms.size(); ++i)
        if (perms[i] == p) return static_cast<int>(i);
      throw Error(ErrorCode::InternalCheckFailure, "permutation not found");
    };
    std::vector<std::string> names = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        std::array<int, 3> comp{};
        for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index_of(comp);
      }
    return from_table(std::move(names), std::move(table));
  }

  static FiniteGroupTable builtin(const std::string& name) {
    if (name == "Z2") return cyclic(2);
    if (name == "Z3") return cyclic(3);
    if (name == "Z4") return cyclic(4);
    if (name == "Z6") return cyclic(6);
    if (name == "S3") return symmetric3();
    throw Error(ErrorCode::ValidationError, "unknown builtin group " + name);
  }

  int size() const { return static_cast<int>(names_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Group labels on the edges of a complex; an unlisted edge carries the
/// identity. `directed(u,v)` inverts the stored ascending-orientation label
/// when traversed downwards.
struct EdgeLabeling {
  std::map<Simplex, int> labels;  // ascending edge {u<v} -> label of u->v

  void set(VertexId u, VertexId v, int g, const FiniteGroupTable& group) {
    const Simplex e = Simplex::from_vertices({u, v});
    labels[e] = (u < v) ? g : group.inv(g);
  }

  int directed(VertexId u, VertexId v, const FiniteGroupTable& group) const {
    const auto it = labels.find(Simplex::from_vertices({u, v}));
    if (it == labels.end()) return group.identity();
    return (u < v) ? it->second : group.inv(it->second);
  }
};

/// Finite regular covering of a connected base complex: total space has
/// vertices (v, g), the deck group acts by left multiplication on the
/// sheet coordinate, and projection drops it.
class CoveringComplex {
 public:
  CoveringComplex(const SimplicialComplex& base, FiniteGroupTable group, EdgeLabeling labels)
      : base_(base), group_(std::move(group)), labels_(std::move(labels)) {
    if (!is_connected(base_))
      throw Error(ErrorCode::Disconnected, "base complex must be connected");
    for (const Simplex& t : base_.simplices_of_dim(2)) {
      const auto& v = t.vertices();
      const int w = group_.mul(group_.mul(labels_.directed(v[0], v[1], group_),
                                          labels_.directed(v[1], v[2], group_)),
                               labels_.directed(v[2], v[0], group_));
      if (w != group_.identity())
        throw Error(ErrorCode::RelatorNotKilled,
                    "labels around 2-simplex {" + std::to_string(v[0]) + "," +
                        std::to_string(v[1]) + "," + std::to_string(v[2]) +
                        "} do not multiply to the identity");
    }
    for (std::size_t i = 0; i < base_.vertices().size(); ++i)
      base_index_[base_.vertices()[i]] = static_cast<int>(i);

    SimplexSet lifted;
    for (const Simplex& s : base_.simplices())
      for (int g = 0; g < group_.size(); ++g) lifted.insert(lift_simplex(s, g));
    total_ = std::make_shared<const SimplicialComplex>(
        SimplicialComplex::from_closed_set(std::move(lifted)));
  }

  const SimplicialComplex& base() const { return base_; }
  const SimplicialComplex& total() const { return *total_; }
  std::shared_ptr<const SimplicialComplex> total_ptr() const { return total_; }
  const FiniteGroupTable& group() const { return group_; }

  VertexId total_vertex(VertexId base_vertex, int g) const {
    return base_index_.at(base_vertex) * group_.size() + g;
  }
  VertexId base_of(VertexId total_vertex) const {
    return base_.vertices()[static_cast<std::size_t>(total_vertex / group_.size())];
  }
  int sheet_of(VertexId total_vertex) const { return total_vertex % group_.size(); }

  /// Lift of an ascending simplex starting on sheet g: labels accumulate
  /// along consecutive vertices. The 2-simplex condition makes the result
  /// independent of the traversal order, hence face-closed as a family.
  Simplex lift_simplex(const Simplex& s, int g) const {
    std::vector<VertexId> verts;
    int sheet = g;
    const auto& v = s.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) sheet = group_.mul(sheet, labels_.directed(v[i - 1], v[i], group_));
      verts.push_back(total_vertex(v[i], sheet));
    }
    return Simplex::from_vertices(std::move(verts));
  }

  Simplex project_simplex(const Simplex& s) const {
    std::vector<VertexId> verts;
    for (VertexId v : s.vertices()) verts.push_back(base_of(v));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return Simplex::from_vertices(std::move(verts));
  }

  Simplex act_simplex(int h, const Simplex& s) const {
    std::vector<VertexId> verts;
    for (VertexId v : s.vertices())
      verts.push_back(total_vertex(base_of(v), group_.mul(h, sheet_of(v))));
    return Simplex::from_vertices(std::move(verts));
  }

  SimplicialMap projection() const {
    std::map<VertexId, VertexId> a;
    for (VertexId v : total_->vertices()) a[v] = base_of(v);
    return SimplicialMap(*total_, base_, std::move(a));
  }

  SimplicialMap deck(int h) const {
    std::map<VertexId, VertexId> a;
    for (VertexId v : total_->vertices())
      a[v] = total_vertex(base_of(v), group_.mul(h, sheet_of(v)));
    return SimplicialMap(*total_, *total_, std::move(a));
  }

 private:
  SimplicialComplex base_;
  FiniteGroupTable group_;
  EdgeLabeling labels_;
  std::map<VertexId, int> base_index_;
  std::shared_ptr<const SimplicialComplex> total_;
};

inline CoveringComplex build_regular_cover(const SimplicialComplex& x,
                                           FiniteGroupTable group, EdgeLabeling labels) {
  return CoveringComplex(x, std::move(group), std::move(labels));
}

/// Lifted cover: connected components of the preimage of each base
/// element, their nerve, and the deck action on its vertices.
struct LiftedCoverData {
  std::shared_ptr<const SimplicialComplex> total;
  std::map<std::string, std::vector<Subcomplex>> lifted_elements;
  Cover lifted_cover;                         // element names "W#i"
  NerveComplex nerve_up;
  std::map<int, std::map<VertexId, VertexId>> nerve_action;  // g -> vertex map
  std::map<VertexId, std::string> base_name_of_vertex;       // nerve_up vertex -> base name

  Simplex act_nerve_simplex(int g, const Simplex& s) const {
    std::vector<VertexId> verts;
    for (VertexId v : s.vertices()) verts.push_back(nerve_action.at(g).at(v));
    return Simplex::from_vertices(std::move(verts));
  }
};

inline LiftedCoverData lift_cover(const CoveringComplex& c, const Cover& u) {
  LiftedCoverData out;
  out.total = c.total_ptr();

  std::map<std::string, Subcomplex> named;
  for (const auto& [name, sub] : u.elements()) {
    SimplexSet preimage;
    for (const Simplex& s : sub.simplices())
      for (int g = 0; g < c.group().size(); ++g) preimage.insert(c.lift_simplex(s, g));
    auto components = connected_components(Subcomplex(*out.total, std::move(preimage)));
    for (std::size_t i = 0; i < components.size(); ++i) {
      // Every component must project onto the whole base element.
      SimplexSet projected;
      for (const Simplex& s : components[i].simplices()) projected.insert(c.project_simplex(s));
      if (projected != sub.simplices())
        throw Error(ErrorCode::InternalCheckFailure,
                    "a lifted component of " + name + " does not project onto it");
      named.emplace(name + "#" + std::to_string(i), components[i]);
    }
    out.lifted_elements.emplace(name, std::move(components));
  }
  out.lifted_cover = validate_cover(*out.total, std::move(named));
  out.nerve_up = nerve(out.lifted_cover);

  for (VertexId v = 0; v < static_cast<VertexId>(out.nerve_up.names.size()); ++v) {
    const std::string& n = out.nerve_up.names[static_cast<std::size_t>(v)];
    out.base_name_of_vertex[v] = n.substr(0, n.rfind('#'));
  }

  for (int g = 0; g < c.group().size(); ++g) {
    std::map<VertexId, VertexId> perm;
    for (VertexId v = 0; v < static_cast<VertexId>(out.nerve_up.names.size()); ++v) {
      const std::string& n = out.nerve_up.names[static_cast<std::size_t>(v)];
      const Subcomplex& comp = out.lifted_cover.element(n);
      SimplexSet moved;
      for (const Simplex& s : comp.simplices()) moved.insert(c.act_simplex(g, s));
      std::optional<VertexId> image;
      for (VertexId w = 0; w < static_cast<VertexId>(out.nerve_up.names.size()); ++w)
        if (out.lifted_cover.element(out.nerve_up.names[static_cast<std::size_t>(w)]).simplices() ==
            moved) {
          image = w;
          break;
        }
      if (!image)
        throw Error(ErrorCode::InternalCheckFailure,
                    "deck action does not permute lifted components");
      perm[v] = *image;
    }
    out.nerve_action[g] = std::move(perm);
  }
  return out;
}

/// Simplicial map from the lifted nerve to the base nerve, sending each
/// component to the name of the element it covers. Also checks deck
/// invariance p(g v) = p(v).
inline SimplicialMap projection_nerve_map(const LiftedCoverData& l, const NerveComplex& n) {
  std::map<VertexId, VertexId> a;
  for (const auto& [v, base_name] : l.base_name_of_vertex) a[v] = n.vertex_of(base_name);
  SimplicialMap p(l.nerve_up.complex, n.complex, std::move(a));
  for (const auto& [g, perm] : l.nerve_action)
    for (const auto& [v, gv] : perm)
      if (p(gv) != p(v))
        throw Error(ErrorCode::InternalCheckFailure,
                    "projection nerve map is not deck invariant");
  return p;
}

struct OrbitBijectionResult {
  bool holds = true;
  // Two orbit representatives with the same image, or an unhit base simplex.
  std::optional<std::pair<Simplex, Simplex>> duplicate_orbits;
  std::optional<Simplex> unhit_base_simplex;
};

/// Checks that deck orbits of n-simplices of the lifted nerve biject with
/// n-simplices of the base nerve under the projection.
inline OrbitBijectionResult verify_orbit_bijection(const LiftedCoverData& l,
                                                   const NerveComplex& n, int degree) {
  const auto up = l.nerve_up.complex.simplices_of_dim(degree);
  // Orbit representative: least simplex in the orbit.
  std::map<Simplex, Simplex> rep_of;
  for (const Simplex& s : up) {
    Simplex least = s;
    for (const auto& [g, perm] : l.nerve_action) {
      const Simplex moved = l.act_nerve_simplex(g, s);
      if (moved < least) least = moved;
    }
    rep_of.emplace(s, least);
  }
  auto project = [&](const Simplex& s) {
    std::vector<VertexId> verts;
    for (VertexId v : s.vertices()) verts.push_back(n.vertex_of(l.base_name_of_vertex.at(v)));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return Simplex::from_vertices(std::move(verts));
  };
  std::map<Simplex, Simplex> image_of_orbit;  // base simplex -> orbit representative
  OrbitBijectionResult out;
  for (const auto& [s, rep] : rep_of) {
    if (rep != s) continue;  // one representative per orbit
    const Simplex base = project(rep);
    if (base.dim() != degree) {
      // Projection collapsed the simplex: cannot be a bijection witness.
      out.holds = false;
      out.duplicate_orbits = {rep, rep};
      return out;
    }
    const auto [it, inserted] = image_of_orbit.emplace(base, rep);
    if (!inserted) {
      out.holds = false;
      out.duplicate_orbits = {it->second, rep};
      return out;
    }
  }
  for (const Simplex& b : n.complex.simplices_of_dim(degree))
    if (!image_of_orbit.count(b)) {
      out.holds = false;
      out.unhit_base_simplex = b;
      return out;
    }
  return out;
}

struct NerveStabilizerReport {
  std::map<Simplex, std::vector<int>> stabilizers;  // setwise, per nerve_up simplex
  bool positive_dim_fix_vertices = true;   // setwise stabilizers act trivially
  bool equals_vertex_intersection = true;  // simplex stabilizer = meet of vertex ones
  bool vertex_matches_component = true;    // vertex stabilizer = component stabilizer
};

inline NerveStabilizerReport nerve_stabilizers(const CoveringComplex& c,
                                               const LiftedCoverData& l) {
  NerveStabilizerReport out;
  const int gs = c.group().size();
  std::map<VertexId, std::set<int>> vertex_stab;
  for (const auto& [v, name] : l.base_name_of_vertex) {
    (void)name;
    std::set<int> stab;
    for (int g = 0; g < gs; ++g)
      if (l.nerve_action.at(g).at(v) == v) stab.insert(g);
    // Cross-check against the setwise stabilizer of the lifted component.
    const Subcomplex& comp =
        l.lifted_cover.element(l.nerve_up.names[static_cast<std::size_t>(v)]);
    std::set<int> comp_stab;
    for (int g = 0; g < gs; ++g) {
      SimplexSet moved;
      for (const Simplex& s : comp.simplices()) moved.insert(c.act_simplex(g, s));
      if (moved == comp.simplices()) comp_stab.insert(g);
    }
    if (comp_stab != stab) out.vertex_matches_component = false;
    vertex_stab[v] = std::move(stab);
  }
  for (const Simplex& s : l.nerve_up.complex.simplices()) {
    std::vector<int> stab;
    for (int g = 0; g < gs; ++g)
      if (l.act_nerve_simplex(g, s) == s) stab.push_back(g);
    if (s.dim() > 0) {
      std::set<int> meet;
      for (int g = 0; g < gs; ++g) {
        bool in_all = true;
        for (VertexId v : s.vertices())
          if (!vertex_stab[v].count(g)) { in_all = false; break; }
        if (in_all) meet.insert(g);
      }
      for (int g : stab)
        for (VertexId v : s.vertices())
          if (l.nerve_action.at(g).at(v) != v) out.positive_dim_fix_vertices = false;
      if (std::set<int>(stab.begin(), stab.end()) != meet)
        out.equals_vertex_intersection = false;
    }
    out.stabilizers.emplace(s, std::move(stab));
  }
  return out;
}

}  // namespace covercert

#endif
