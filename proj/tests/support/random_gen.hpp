#ifndef COVERCERT_TESTS_RANDOM_GEN_HPP
#define COVERCERT_TESTS_RANDOM_GEN_HPP

// Deterministic random instance generators for the property suites.

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "covercert/cover.hpp"
#include "covercert/covering.hpp"
#include "covercert/group_presentation.hpp"

namespace covercert::testsupport {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random complex on at most `max_vertices` vertices (possibly empty
/// dimensions, possibly disconnected).
inline SimplicialComplex random_complex(Rng& rng, int max_vertices = 7) {
  const int n = pick(rng, 2, max_vertices);
  const int pieces = pick(rng, 2, 7);
  std::vector<std::vector<VertexId>> maximal;
  for (int i = 0; i < pieces; ++i) {
    const int dim = pick(rng, 0, std::min(3, n - 1));
    std::vector<VertexId> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    std::shuffle(all.begin(), all.end(), rng);
    maximal.push_back(std::vector<VertexId>(all.begin(), all.begin() + dim + 1));
  }
  return SimplicialComplex::from_maximal(maximal);
}

/// Random connected complex (re-rolls until connected).
inline SimplicialComplex random_connected_complex(Rng& rng, int max_vertices = 7) {
  for (;;) {
    SimplicialComplex k = random_complex(rng, max_vertices);
    if (!k.empty() && is_connected(k)) return k;
  }
}

/// Try a handful of random star-extension covers of `x` and return the
/// first one that is valid and convex; falls back to the one-element cover
/// {X}, which is always both.
inline std::map<std::string, Subcomplex> random_convex_cover(Rng& rng,
                                                             const SimplicialComplex& x,
                                                             int attempts = 25) {
  for (int t = 0; t < attempts; ++t) {
    const int k = pick(rng, 2, 4);
    std::map<std::string, Subcomplex> elems;
    const auto verts = x.vertices();
    bool degenerate = false;
    for (int i = 0; i < k; ++i) {
      const VertexId seed = verts[static_cast<std::size_t>(
          pick(rng, 0, static_cast<int>(verts.size()) - 1))];
      Subcomplex e = closed_star(x, seed);
      if (pick(rng, 0, 1) == 1) e = closed_star_extension(e);
      const std::string name = "E" + std::to_string(i);
      for (const auto& [other, sub] : elems)
        if (sub.simplices() == e.simplices()) degenerate = true;
      elems.emplace(name, std::move(e));
    }
    if (degenerate) continue;
    if (!cover_violations(x, elems).empty()) continue;
    const Cover cover(x, elems);
    if (!is_convex(cover).convex) continue;
    return elems;
  }
  std::map<std::string, Subcomplex> whole;
  whole.emplace("E0", Subcomplex(x, x.simplices()));
  return whole;
}

/// Random valid edge labeling into Z/n: solves the abelianized relator
/// system over the prime fields (n = 2, 3) and combines solutions through
/// 2y and 3a+2b for n = 4 and 6. Tree edges stay at the identity.
inline EdgeLabeling random_cyclic_labeling(Rng& rng, const SimplicialComplex& x, int n,
                                           const FiniteGroupTable& group) {
  const GroupPresentation p = edge_path_presentation(x, x.vertices().front());
  const int gens = static_cast<int>(p.generators.size());

  auto kernel_sample = [&](int prime) {
    // Relator matrix over GF(prime), one row per relator.
    std::vector<std::vector<int>> m(p.relators.size(),
                                    std::vector<int>(static_cast<std::size_t>(gens), 0));
    for (std::size_t r = 0; r < p.relators.size(); ++r)
      for (int letter : p.relators[r]) {
        auto& cell = m[r][static_cast<std::size_t>(std::abs(letter) - 1)];
        cell = ((cell + (letter > 0 ? 1 : -1)) % prime + prime) % prime;
      }
    // Row reduce mod prime.
    std::vector<int> pivot_col;
    std::size_t pr = 0;
    for (int c = 0; c < gens && pr < m.size(); ++c) {
      std::size_t sel = m.size();
      for (std::size_t r = pr; r < m.size(); ++r)
        if (m[r][static_cast<std::size_t>(c)] != 0) { sel = r; break; }
      if (sel == m.size()) continue;
      std::swap(m[pr], m[sel]);
      // Scale to 1 (prime field inverse by search).
      int inv = 1;
      for (int t = 1; t < prime; ++t)
        if (m[pr][static_cast<std::size_t>(c)] * t % prime == 1) { inv = t; break; }
      for (auto& e : m[pr]) e = e * inv % prime;
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == pr) continue;
        const int f = m[r][static_cast<std::size_t>(c)];
        if (f == 0) continue;
        for (int cc = 0; cc < gens; ++cc)
          m[r][static_cast<std::size_t>(cc)] =
              ((m[r][static_cast<std::size_t>(cc)] - f * m[pr][static_cast<std::size_t>(cc)]) %
                   prime + prime) % prime;
      }
      pivot_col.push_back(c);
      ++pr;
    }
    // Random kernel vector: free columns random, pivots determined.
    std::vector<int> v(static_cast<std::size_t>(gens), 0);
    std::vector<bool> is_pivot(static_cast<std::size_t>(gens), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < gens; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) v[static_cast<std::size_t>(c)] = pick(rng, 0, prime - 1);
    for (std::size_t i = pivot_col.size(); i-- > 0;) {
      int sum = 0;
      for (int c = pivot_col[i] + 1; c < gens; ++c)
        sum += m[i][static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
      v[static_cast<std::size_t>(pivot_col[i])] = ((-sum) % prime + prime) % prime;
    }
    return v;
  };

  std::vector<int> values(static_cast<std::size_t>(gens), 0);
  if (n == 2 || n == 3) {
    values = kernel_sample(n);
  } else if (n == 4) {
    const auto y = kernel_sample(2);
    for (int i = 0; i < gens; ++i) values[static_cast<std::size_t>(i)] = 2 * y[static_cast<std::size_t>(i)];
  } else if (n == 6) {
    const auto a = kernel_sample(2), b = kernel_sample(3);
    for (int i = 0; i < gens; ++i)
      values[static_cast<std::size_t>(i)] =
          (3 * a[static_cast<std::size_t>(i)] + 2 * b[static_cast<std::size_t>(i)]) % 6;
  }

  EdgeLabeling out;
  for (const auto& [edge, idx] : p.generator_of_edge)
    out.set(edge.vertices()[0], edge.vertices()[1], values[static_cast<std::size_t>(idx)], group);
  return out;
}

}  // namespace covercert::testsupport

#endif
