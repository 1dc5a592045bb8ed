#ifndef COVERCERT_HOMOLOGY_HPP
#define COVERCERT_HOMOLOGY_HPP

#include <map>
#include <vector>

#include "covercert/matrix.hpp"
#include "covercert/simplicial.hpp"
#include "covercert/simplicial_map.hpp"

namespace covercert {

/// Boundary operator C_n -> C_{n-1} over the canonical simplex bases:
/// entry (-1)^i for deleting the i-th vertex of the ascending vertex list.
inline Matrix boundary_matrix(const SimplicialComplex& k, int n) {
  const auto rows = k.simplices_of_dim(n - 1);
  const auto cols = k.simplices_of_dim(n);
  std::map<Simplex, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  Matrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto facets = cols[j].facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const Rational sign = (i % 2 == 0) ? 1 : -1;
      m.at(row_index.at(facets[i]), j) = sign;
    }
  }
  return m;
}

/// Per-degree chain bases and boundary matrices for a fixed complex, with
/// homology bases computed on demand. Deterministic given the canonical
/// simplex order.
class HomologyCalculator {
 public:
  explicit HomologyCalculator(const SimplicialComplex& k) : k_(k), dim_(k.dim()) {}

  const SimplicialComplex& complex() const { return k_; }
  int dim() const { return dim_; }

  const std::vector<Simplex>& chain_basis(int n) {
    auto it = bases_.find(n);
    if (it == bases_.end()) it = bases_.emplace(n, k_.simplices_of_dim(n)).first;
    return it->second;
  }

  const Matrix& boundary(int n) {
    auto it = boundaries_.find(n);
    if (it == boundaries_.end())
      it = boundaries_.emplace(n, boundary_matrix(k_, n)).first;
    return it->second;
  }

  long betti(int n) {
    if (n < 0 || n > dim_) return 0;
    const long cycles = static_cast<long>(chain_basis(n).size()) -
                        static_cast<long>(n == 0 ? 0 : rank(boundary(n)));
    return cycles - static_cast<long>(rank(boundary(n + 1)));
  }

  std::vector<long> betti_numbers() {
    std::vector<long> out;
    for (int n = 0; n <= dim_; ++n) out.push_back(betti(n));
    return out;
  }

  /// Cycle representatives of a homology basis in degree n: kernel vectors
  /// of the boundary, independent modulo the image of the next boundary.
  const std::vector<std::vector<Rational>>& homology_basis(int n) {
    auto it = homology_bases_.find(n);
    if (it != homology_bases_.end()) return it->second;

    std::vector<std::vector<Rational>> reps;
    if (n >= 0 && n <= dim_) {
      const std::size_t cn = chain_basis(n).size();
      std::vector<std::vector<Rational>> cycles;
      if (n == 0) {
        for (std::size_t i = 0; i < cn; ++i) {
          std::vector<Rational> e(cn);
          e[i] = 1;
          cycles.push_back(std::move(e));
        }
      } else {
        cycles = kernel_basis(boundary(n));
      }
      const Matrix& bdry_cols = boundary_image(n);
      // Greedy extension: boundary columns first, then cycle vectors; the
      // cycle vectors that become pivots represent a homology basis.
      Matrix combined(cn, bdry_cols.cols() + cycles.size());
      for (std::size_t r = 0; r < cn; ++r)
        for (std::size_t c = 0; c < bdry_cols.cols(); ++c)
          combined.at(r, c) = bdry_cols.at(r, c);
      for (std::size_t j = 0; j < cycles.size(); ++j)
        for (std::size_t r = 0; r < cn; ++r)
          combined.at(r, bdry_cols.cols() + j) = cycles[j][r];
      for (std::size_t p : independent_columns(combined))
        if (p >= bdry_cols.cols()) reps.push_back(cycles[p - bdry_cols.cols()]);
    }
    return homology_bases_.emplace(n, std::move(reps)).first->second;
  }

  /// Coordinates of a cycle in the degree-n homology basis (mod boundaries).
  std::vector<Rational> homology_coordinates(int n, const std::vector<Rational>& cycle) {
    const auto& reps = homology_basis(n);
    const Matrix& bdry = boundary_image(n);
    const std::size_t cn = chain_basis(n).size();
    Matrix system(cn, reps.size() + bdry.cols());
    for (std::size_t j = 0; j < reps.size(); ++j)
      for (std::size_t r = 0; r < cn; ++r) system.at(r, j) = reps[j][r];
    for (std::size_t j = 0; j < bdry.cols(); ++j)
      for (std::size_t r = 0; r < cn; ++r) system.at(r, reps.size() + j) = bdry.at(r, j);
    auto sol = solve(system, cycle);
    if (!sol)
      throw Error(ErrorCode::InternalCheckFailure, "chain is not a cycle mod boundaries");
    return std::vector<Rational>(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(reps.size()));
  }

 private:
  // Independent columns of the (n+1)-boundary, as a matrix over C_n.
  const Matrix& boundary_image(int n) {
    auto it = images_.find(n);
    if (it != images_.end()) return it->second;
    const Matrix& b = boundary(n + 1);
    const auto idx = independent_columns(b);
    Matrix img(chain_basis(n).size(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t r = 0; r < img.rows(); ++r) img.at(r, j) = b.at(r, idx[j]);
    return images_.emplace(n, std::move(img)).first->second;
  }

  SimplicialComplex k_;
  int dim_;
  std::map<int, std::vector<Simplex>> bases_;
  std::map<int, Matrix> boundaries_;
  std::map<int, Matrix> images_;
  std::map<int, std::vector<std::vector<Rational>>> homology_bases_;
};

inline std::vector<long> betti_numbers(const SimplicialComplex& k) {
  return HomologyCalculator(k).betti_numbers();
}

inline std::vector<std::vector<Rational>> homology_basis(const SimplicialComplex& k, int n) {
  return HomologyCalculator(k).homology_basis(n);
}

/// Degree-n matrix of the chain map induced by a simplicial map; degenerate
/// simplex images contribute zero.
inline Matrix chain_map_matrix(const SimplicialMap& f, int n) {
  const auto src = f.source().simplices_of_dim(n);
  const auto dst = f.target().simplices_of_dim(n);
  std::map<Simplex, std::size_t> dst_index;
  for (std::size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);
  Matrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (f.is_degenerate_on(src[j])) continue;
    m.at(dst_index.at(f.image_simplex(src[j])), j) = f.orientation_sign(src[j]);
  }
  return m;
}

struct InducedMapMatrix {
  int degree = 0;
  Matrix matrix;        // target homology coords of the source basis images
  std::size_t rank = 0;
};

inline InducedMapMatrix induced_map_homology(const SimplicialMap& f, int n,
                                             HomologyCalculator& source_h,
                                             HomologyCalculator& target_h) {
  const auto& src_basis = source_h.homology_basis(n);
  const auto& dst_basis = target_h.homology_basis(n);
  const Matrix chain = chain_map_matrix(f, n);
  Matrix out(dst_basis.size(), src_basis.size());
  for (std::size_t j = 0; j < src_basis.size(); ++j) {
    std::vector<Rational> image(chain.rows());
    for (std::size_t r = 0; r < chain.rows(); ++r)
      for (std::size_t c = 0; c < chain.cols(); ++c)
        if (chain.at(r, c) != 0) image[r] += chain.at(r, c) * src_basis[j][c];
    const auto coords = target_h.homology_coordinates(n, image);
    for (std::size_t r = 0; r < coords.size(); ++r) out.at(r, j) = coords[r];
  }
  InducedMapMatrix result;
  result.degree = n;
  result.rank = rank(out);
  result.matrix = std::move(out);
  return result;
}

inline InducedMapMatrix induced_map_homology(const SimplicialMap& f, int n) {
  HomologyCalculator src(f.source()), dst(f.target());
  return induced_map_homology(f, n, src, dst);
}

}  // namespace covercert

#endif
