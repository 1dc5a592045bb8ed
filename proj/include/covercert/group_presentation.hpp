#ifndef COVERCERT_GROUP_PRESENTATION_HPP
#define COVERCERT_GROUP_PRESENTATION_HPP

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "covercert/cover.hpp"
#include "covercert/simplicial.hpp"

namespace covercert {

/// Word over presentation generators: letter +-(index+1), negative = inverse.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

inline Word invert_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

/// Edge-path presentation data. Generators correspond to non-tree edges;
/// relators come from 2-simplices. The BFS parent map is kept so loops can
/// be conjugated to the basepoint deterministically.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  VertexId basepoint = 0;
  SimplexSet spanning_tree;                  // edges, identity in pi_1
  std::map<Simplex, int> generator_of_edge;  // non-tree edge -> generator index
  std::map<VertexId, VertexId> bfs_parent;   // basepoint maps to itself

  std::string word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (int letter : w) {
      if (!out.empty()) out += ' ';
      out += generators[static_cast<std::size_t>(std::abs(letter)) - 1];
      if (letter < 0) out += "^-1";
    }
    return out;
  }
};

namespace detail {

// Letter of a directed edge u -> v; 0 when it is a tree edge.
inline int directed_edge_letter(const GroupPresentation& p, VertexId u, VertexId v) {
  const Simplex e = Simplex::from_vertices({u, v});
  if (p.spanning_tree.count(e)) return 0;
  const int idx = p.generator_of_edge.at(e) + 1;
  return u < v ? idx : -idx;
}

inline std::vector<VertexId> path_to_basepoint(const GroupPresentation& p, VertexId v) {
  std::vector<VertexId> path{v};
  while (path.back() != p.basepoint) path.push_back(p.bfs_parent.at(path.back()));
  return path;
}

}  // namespace detail

/// Word of a vertex path (consecutive vertices joined by edges of K).
inline Word word_of_path(const GroupPresentation& p, const std::vector<VertexId>& path) {
  Word w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int letter = detail::directed_edge_letter(p, path[i], path[i + 1]);
    if (letter != 0) w.push_back(letter);
  }
  return free_reduce(w);
}

/// Standard edge-path group presentation: spanning tree by breadth-first
/// search (neighbors in ascending order), one generator per non-tree edge,
/// one relator per 2-simplex.
inline GroupPresentation edge_path_presentation(const SimplicialComplex& k, VertexId basepoint) {
  if (!k.has_vertex(basepoint))
    throw Error(ErrorCode::UnknownVertex, "basepoint " + std::to_string(basepoint));
  if (connected_components(k).size() != 1)
    throw Error(ErrorCode::Disconnected, "presentation needs a connected complex");

  GroupPresentation p;
  p.basepoint = basepoint;

  std::map<VertexId, std::vector<VertexId>> adjacency;
  for (const Simplex& e : k.simplices_of_dim(1)) {
    adjacency[e.vertices()[0]].push_back(e.vertices()[1]);
    adjacency[e.vertices()[1]].push_back(e.vertices()[0]);
  }
  for (auto& [v, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());

  std::deque<VertexId> queue{basepoint};
  p.bfs_parent[basepoint] = basepoint;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adjacency[v]) {
      if (p.bfs_parent.count(w)) continue;
      p.bfs_parent[w] = v;
      p.spanning_tree.insert(Simplex::from_vertices({v, w}));
      queue.push_back(w);
    }
  }

  for (const Simplex& e : k.simplices_of_dim(1)) {
    if (p.spanning_tree.count(e)) continue;
    p.generator_of_edge[e] = static_cast<int>(p.generators.size());
    p.generators.push_back("x" + std::to_string(e.vertices()[0]) + "_" +
                           std::to_string(e.vertices()[1]));
  }

  for (const Simplex& t : k.simplices_of_dim(2)) {
    const auto& v = t.vertices();
    Word r;
    for (auto [a, b] : {std::pair{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}}) {
      const int letter = detail::directed_edge_letter(p, a, b);
      if (letter != 0) r.push_back(letter);
    }
    r = free_reduce(r);
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

/// Tietze simplification: free and cyclic reduction, dropping empty and
/// duplicate relators, and eliminating a generator that occurs exactly once
/// in some relator (substituting it away everywhere). Sound moves only;
/// the generator count never increases.
inline GroupPresentation simplify_presentation(GroupPresentation p, int effort = 4096) {
  auto cyclic_reduce = [](Word w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
      w.erase(w.begin());
      w.pop_back();
    }
    return w;
  };

  for (int round = 0; round < effort; ++round) {
    for (Word& r : p.relators) r = cyclic_reduce(r);
    std::erase_if(p.relators, [](const Word& r) { return r.empty(); });
    std::sort(p.relators.begin(), p.relators.end());
    p.relators.erase(std::unique(p.relators.begin(), p.relators.end()), p.relators.end());

    // Find a relator in which some generator appears exactly once.
    std::optional<std::pair<std::size_t, std::size_t>> found;  // relator, position
    for (std::size_t i = 0; i < p.relators.size() && !found; ++i) {
      const Word& r = p.relators[i];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const int g = std::abs(r[pos]);
        std::size_t count = 0;
        for (int letter : r)
          if (std::abs(letter) == g) ++count;
        if (count == 1) { found = {i, pos}; break; }
      }
    }
    if (!found) break;

    const auto [ri, pos] = *found;
    const Word r = p.relators[ri];
    const int letter = r[pos];
    const int g = std::abs(letter);
    // r = A g^e B = 1, so g^e = A^{-1} B^{-1}.
    Word prefix(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    Word suffix(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    Word value = invert_word(prefix);
    const Word inv_suffix = invert_word(suffix);
    value.insert(value.end(), inv_suffix.begin(), inv_suffix.end());
    if (letter < 0) value = invert_word(value);  // now value = g as a word

    std::vector<Word> next;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i == ri) continue;
      Word out;
      for (int l : p.relators[i]) {
        if (std::abs(l) != g) { out.push_back(l); continue; }
        const Word& sub = l > 0 ? value : invert_word(value);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      next.push_back(free_reduce(out));
    }
    p.relators = std::move(next);

    // Drop generator g and shift the letters above it.
    p.generators.erase(p.generators.begin() + g - 1);
    auto shift = [g](int l) {
      const int a = std::abs(l);
      return a > g ? (l > 0 ? l - 1 : l + 1) : l;
    };
    for (Word& w : p.relators)
      for (int& l : w) l = shift(l);
    p.generator_of_edge.clear();  // edge correspondence no longer meaningful
    p.spanning_tree.clear();
    p.bfs_parent.clear();
  }
  return p;
}

/// Images of the generators of pi_1(V) in pi_1(X): each non-tree edge of V
/// closes to a loop via V's tree, then the loop is conjugated to X's
/// basepoint along X's tree and rewritten over X's generators.
inline std::vector<Word> pi1_image_words(const Subcomplex& v, const GroupPresentation& px) {
  const SimplicialComplex vk = v.as_complex();
  if (vk.empty()) return {};
  const GroupPresentation pv = edge_path_presentation(vk, vk.vertices().front());

  // Path in X from X's basepoint to V's basepoint.
  std::vector<VertexId> approach = detail::path_to_basepoint(px, pv.basepoint);
  std::reverse(approach.begin(), approach.end());

  std::vector<Word> out;
  for (const auto& [edge, idx] : pv.generator_of_edge) {
    const VertexId a = edge.vertices()[0], b = edge.vertices()[1];
    std::vector<VertexId> loop = approach;
    auto to_a = detail::path_to_basepoint(pv, a);
    std::reverse(to_a.begin(), to_a.end());
    loop.insert(loop.end(), to_a.begin(), to_a.end());
    loop.push_back(b);
    const auto back = detail::path_to_basepoint(pv, b);
    loop.insert(loop.end(), back.begin(), back.end());
    std::vector<VertexId> retreat = approach;
    std::reverse(retreat.begin(), retreat.end());
    loop.insert(loop.end(), retreat.begin(), retreat.end());
    // Consecutive duplicates appear where segments are glued; drop them.
    loop.erase(std::unique(loop.begin(), loop.end()), loop.end());
    out.push_back(word_of_path(px, loop));
  }
  return out;
}

enum class AmenabilityReason { TrivialGroup, CyclicGroup, Attested };

inline const char* amenability_reason_name(AmenabilityReason r) {
  switch (r) {
    case AmenabilityReason::TrivialGroup: return "TrivialGroup";
    case AmenabilityReason::CyclicGroup: return "CyclicGroup";
    case AmenabilityReason::Attested: return "Attested";
  }
  return "?";
}

/// Verdict for the image of pi_1(element) -> pi_1(X). `reason` empty means
/// Unknown: amenability is undecidable in general, so only sound positive
/// certificates are issued.
struct SubgroupImageCertificate {
  std::string element_name;
  std::vector<std::string> generator_words;   // images in pi_1(X), audit only
  std::optional<AmenabilityReason> reason;    // nullopt = Unknown

  bool certified() const { return reason.has_value(); }
};

inline std::vector<SubgroupImageCertificate> amenability_verdict(
    const Cover& u, const std::set<std::string>& attestations) {
  GroupPresentation px =
      edge_path_presentation(u.space(), u.space().vertices().front());
  std::vector<SubgroupImageCertificate> out;
  for (const auto& [name, sub] : u.elements()) {
    SubgroupImageCertificate cert;
    cert.element_name = name;
    for (const Word& w : pi1_image_words(sub, px))
      cert.generator_words.push_back(px.word_to_string(w));
    const SimplicialComplex vk = sub.as_complex();
    const GroupPresentation simplified = simplify_presentation(
        edge_path_presentation(vk, vk.vertices().front()));
    if (simplified.generators.empty())
      cert.reason = AmenabilityReason::TrivialGroup;
    else if (simplified.generators.size() == 1)
      cert.reason = AmenabilityReason::CyclicGroup;
    else if (attestations.count(name))
      cert.reason = AmenabilityReason::Attested;
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace covercert

#endif
