#ifndef COVERCERT_CORPUS_HPP
#define COVERCERT_CORPUS_HPP

#include <array>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "covercert/cover.hpp"

namespace covercert {

/// A built-in instance: space, cover, and the amenability attestations the
/// instance ships with. The space sits behind a stable pointer so the
/// cover's subcomplexes survive moves of the struct.
struct CorpusInstance {
  std::string name;
  std::shared_ptr<const SimplicialComplex> space;
  Cover cover;
  std::set<std::string> attest;
};

namespace corpus_detail {

/// Genus-2 surface: a triangulated sphere ("globe" with 12 longitude
/// columns, vertex rings 1..6 between the poles) with two handles. Each
/// handle replaces two square holes in the equatorial strip by a square
/// tube of 8 intermediate rings (9 bands of 8 triangles).
class Genus2Builder {
 public:
  static constexpr int M = 12;        // longitude columns
  static constexpr int RINGS = 6;     // vertex rings between the poles
  static constexpr int TUBE_RINGS = 8;
  static constexpr VertexId NORTH = 0, SOUTH = 1;

  static int hole_column(int tube, int end) {  // tube 0/1, end 0/1
    static constexpr int cols[2][2] = {{1, 4}, {7, 10}};
    return cols[tube][end];
  }

  static VertexId grid(int ring, int col) {
    return 2 + (ring - 1) * M + ((col % M) + M) % M;
  }

  static VertexId tube_vertex(int tube, int ring, int k) {  // ring 1..8
    return 2 + RINGS * M + tube * (TUBE_RINGS * 4) + (ring - 1) * 4 + ((k % 4) + 4) % 4;
  }

  /// Cyclic vertex list of tube ring j (0 and 9 are the hole boundaries).
  /// The far boundary is traversed in the opposite sense, which makes the
  /// glued handle orientable.
  static std::array<VertexId, 4> ring(int tube, int j) {
    if (j == 0) {
      const int c = hole_column(tube, 0);
      return {grid(3, c), grid(3, c + 1), grid(4, c + 1), grid(4, c)};
    }
    if (j == TUBE_RINGS + 1) {
      const int c = hole_column(tube, 1);
      return {grid(3, c), grid(4, c), grid(4, c + 1), grid(3, c + 1)};
    }
    return {tube_vertex(tube, j, 0), tube_vertex(tube, j, 1), tube_vertex(tube, j, 2),
            tube_vertex(tube, j, 3)};
  }

  using Tri = std::vector<VertexId>;

  static std::vector<Tri> north_fan(int col) {
    return {{NORTH, grid(1, col), grid(1, col + 1)}};
  }
  static std::vector<Tri> south_fan(int col) {
    return {{SOUTH, grid(RINGS, col), grid(RINGS, col + 1)}};
  }

  static bool is_hole(int strip, int col) {
    if (strip != 3) return false;
    const int c = ((col % M) + M) % M;
    return c == 1 || c == 4 || c == 7 || c == 10;
  }

  /// The two triangles of the grid square between rings `strip`,`strip`+1
  /// at column `col` (empty for a hole square).
  static std::vector<Tri> square(int strip, int col) {
    if (is_hole(strip, col)) return {};
    const VertexId a = grid(strip, col), b = grid(strip, col + 1);
    const VertexId d = grid(strip + 1, col), e = grid(strip + 1, col + 1);
    return {{a, b, d}, {b, d, e}};
  }

  /// Band j (0..8) of a tube: 8 triangles between rings j and j+1.
  static std::vector<Tri> band(int tube, int j) {
    const auto p = ring(tube, j), q = ring(tube, j + 1);
    std::vector<Tri> out;
    for (int k = 0; k < 4; ++k) {
      out.push_back({p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>((k + 1) % 4)],
                     q[static_cast<std::size_t>(k)]});
      out.push_back({p[static_cast<std::size_t>((k + 1) % 4)], q[static_cast<std::size_t>(k)],
                     q[static_cast<std::size_t>((k + 1) % 4)]});
    }
    return out;
  }

  static void append(std::vector<Tri>& acc, const std::vector<Tri>& more) {
    acc.insert(acc.end(), more.begin(), more.end());
  }

  static SimplicialComplex build() {
    std::vector<Tri> tris;
    for (int c = 0; c < M; ++c) {
      append(tris, north_fan(c));
      append(tris, south_fan(c));
      for (int r = 1; r < RINGS; ++r) append(tris, square(r, c));
    }
    for (int t = 0; t < 2; ++t)
      for (int j = 0; j <= TUBE_RINGS; ++j) append(tris, band(t, j));
    return SimplicialComplex::from_maximal(tris);
  }
};

inline CorpusInstance make_example1() {
  using B = Genus2Builder;
  CorpusInstance inst;
  inst.name = "example1";
  inst.space = std::make_shared<const SimplicialComplex>(B::build());
  const SimplicialComplex& x = *inst.space;

  auto element = [&](std::vector<B::Tri> tiles) {
    return closed_star_extension(Subcomplex::from_maximal(x, tiles));
  };

  std::vector<B::Tri> d1, d2;
  for (int c = 0; c < B::M; ++c) {
    B::append(d1, B::north_fan(c));
    B::append(d1, B::square(1, c));
    B::append(d2, B::square(B::RINGS - 1, c));
    B::append(d2, B::south_fan(c));
  }

  std::map<std::string, Subcomplex> elems;
  elems.emplace("D1", element(d1));
  elems.emplace("D2", element(d2));
  for (int i = 0; i < 4; ++i) {
    std::vector<B::Tri> lune;
    for (int c = 3 * i; c < 3 * (i + 1); ++c)
      for (int r = 2; r <= 4; ++r) B::append(lune, B::square(r, c));
    const int tube = i / 2;                  // tubes join U1-U2 and U3-U4
    const int near_end = (i % 2 == 0) ? 0 : 6;  // bands 0-2 or 6-8
    for (int j = near_end; j < near_end + 3; ++j) B::append(lune, B::band(tube, j));
    elems.emplace("U" + std::to_string(i + 1), element(lune));
  }
  for (int t = 0; t < 2; ++t) {
    std::vector<B::Tri> middle;
    for (int j = 3; j <= 5; ++j) B::append(middle, B::band(t, j));
    elems.emplace("H" + std::to_string(t + 1), element(middle));
  }
  inst.cover = validate_cover(x, std::move(elems));
  for (const auto& n : inst.cover.names()) inst.attest.insert(n);
  return inst;
}

inline CorpusInstance make_example2() {
  using B = Genus2Builder;
  CorpusInstance inst;
  inst.name = "example2";
  inst.space = std::make_shared<const SimplicialComplex>(B::build());
  const SimplicialComplex& x = *inst.space;

  std::map<std::string, Subcomplex> elems;
  for (int i = 0; i < 4; ++i) {
    std::vector<B::Tri> lune;
    for (int c = 3 * i; c < 3 * (i + 1); ++c) {
      B::append(lune, B::north_fan(c));
      B::append(lune, B::south_fan(c));
      for (int r = 1; r < B::RINGS; ++r) B::append(lune, B::square(r, c));
    }
    const int tube = i / 2;
    const int lo = (i % 2 == 0) ? 0 : 5, hi = (i % 2 == 0) ? 4 : 8;
    for (int j = lo; j <= hi; ++j) B::append(lune, B::band(tube, j));
    elems.emplace("L" + std::to_string(i + 1), closed_star_extension(
                                                   Subcomplex::from_maximal(x, lune)));
  }
  inst.cover = validate_cover(x, std::move(elems));
  for (const auto& n : inst.cover.names()) inst.attest.insert(n);
  return inst;
}

inline CorpusInstance make_torus_annuli() {
  constexpr int COLS = 12, ROWS = 8;
  auto grid = [](int r, int c) {
    return (((r % ROWS) + ROWS) % ROWS) * COLS + ((c % COLS) + COLS) % COLS;
  };
  std::vector<std::vector<VertexId>> tris;
  for (int r = 0; r < ROWS; ++r)
    for (int c = 0; c < COLS; ++c) {
      tris.push_back({grid(r, c), grid(r, c + 1), grid(r + 1, c)});
      tris.push_back({grid(r, c + 1), grid(r + 1, c), grid(r + 1, c + 1)});
    }
  CorpusInstance inst;
  inst.name = "torus_annuli";
  inst.space = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_maximal(tris));
  std::map<std::string, Subcomplex> elems;
  for (int i = 0; i < 4; ++i) {
    std::vector<std::vector<VertexId>> tile;
    for (int c = 3 * i; c < 3 * (i + 1); ++c)
      for (int r = 0; r < ROWS; ++r) {
        tile.push_back({grid(r, c), grid(r, c + 1), grid(r + 1, c)});
        tile.push_back({grid(r, c + 1), grid(r + 1, c), grid(r + 1, c + 1)});
      }
    elems.emplace("A" + std::to_string(i + 1),
                  closed_star_extension(Subcomplex::from_maximal(*inst.space, tile)));
  }
  inst.cover = validate_cover(*inst.space, std::move(elems));
  return inst;
}

inline CorpusInstance make_circle_stars() {
  CorpusInstance inst;
  inst.name = "circle_stars";
  inst.space = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
  std::map<std::string, Subcomplex> elems;
  elems.emplace("S1", Subcomplex::from_maximal(*inst.space, {{5, 0}, {0, 1}, {1, 2}}));
  elems.emplace("S2", Subcomplex::from_maximal(*inst.space, {{1, 2}, {2, 3}, {3, 4}}));
  elems.emplace("S3", Subcomplex::from_maximal(*inst.space, {{3, 4}, {4, 5}, {5, 0}}));
  inst.cover = validate_cover(*inst.space, std::move(elems));
  return inst;
}

inline CorpusInstance make_sphere_two_discs() {
  constexpr int M = 8, RINGS = 5;
  constexpr VertexId NORTH = 0, SOUTH = 1;
  auto grid = [](int r, int c) { return 2 + (r - 1) * M + ((c % M) + M) % M; };
  std::vector<std::vector<VertexId>> tris;
  std::vector<std::vector<VertexId>> north, south;
  for (int c = 0; c < M; ++c) {
    north.push_back({NORTH, grid(1, c), grid(1, c + 1)});
    south.push_back({SOUTH, grid(RINGS, c), grid(RINGS, c + 1)});
  }
  auto square = [&](int r, int c) {
    return std::vector<std::vector<VertexId>>{
        {grid(r, c), grid(r, c + 1), grid(r + 1, c)},
        {grid(r, c + 1), grid(r + 1, c), grid(r + 1, c + 1)}};
  };
  std::vector<std::vector<VertexId>> dn = north, ds = south;
  for (int c = 0; c < M; ++c)
    for (int r = 1; r < RINGS; ++r)
      for (auto& t : square(r, c)) {
        tris.push_back(t);
        if (r <= 2) dn.push_back(t);  // northern disc: fans + strips 1,2
        if (r >= 2) ds.push_back(t);  // southern disc: strips 2..4 + fans
      }
  tris.insert(tris.end(), north.begin(), north.end());
  tris.insert(tris.end(), south.begin(), south.end());
  CorpusInstance inst;
  inst.name = "sphere_two_discs";
  inst.space = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_maximal(tris));
  std::map<std::string, Subcomplex> elems;
  elems.emplace("DN", Subcomplex::from_maximal(*inst.space, dn));
  elems.emplace("DS", Subcomplex::from_maximal(*inst.space, ds));
  inst.cover = validate_cover(*inst.space, std::move(elems));
  return inst;
}

}  // namespace corpus_detail

inline std::vector<std::string> corpus_names() {
  return {"example1", "example2", "torus_annuli", "circle_stars", "sphere_two_discs"};
}

inline CorpusInstance corpus(const std::string& name) {
  if (name == "example1") return corpus_detail::make_example1();
  if (name == "example2") return corpus_detail::make_example2();
  if (name == "torus_annuli") return corpus_detail::make_torus_annuli();
  if (name == "circle_stars") return corpus_detail::make_circle_stars();
  if (name == "sphere_two_discs") return corpus_detail::make_sphere_two_discs();
  throw Error(ErrorCode::UnknownCorpusName, "no corpus instance named " + name);
}

}  // namespace covercert

#endif
