#pragma once

// Independent models used to cross-check the library in tests.

#include <random>

#include "gogkit/gog.hpp"

namespace oracle {

  using gogkit::GraphOfGroups;
  using gogkit::Syllable;
  using gogkit::Word;

  struct Mat2 {
    long long a, b, c, d;
    bool      operator==(Mat2 const&) const = default;
  };

  inline Mat2 operator*(Mat2 const& x, Mat2 const& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }

  inline Mat2 identity() {
    return {1, 0, 0, 1};
  }

  inline Mat2 power(Mat2 m, long long k) {
    Mat2 r = identity();
    for (long long i = 0; i < k; ++i) {
      r = r * m;
    }
    return r;
  }

  // Cyclic vertex groups only: element k is the k-th power of the generator.
  // `gen[v]` is the image of vertex v's generator, `letter[e]` and its
  // inverse the images of stable letters.
  struct MatrixRep {
    std::vector<Mat2> gen;
    std::vector<Mat2> letter;
    std::vector<Mat2> letter_inv;

    Mat2 operator()(Word const& w) const {
      Mat2 r = identity();
      for (auto const& s : w) {
        if (s.kind == Syllable::Kind::vertex) {
          r = r * power(gen[s.index], s.value);
        } else {
          r = r * (s.value > 0 ? letter[s.index] : letter_inv[s.index]);
        }
      }
      return r;
    }
  };

  // C4 *_C2 C6 is SL(2,Z): a -> [[0,-1],[1,0]], b -> [[0,-1],[1,1]],
  // a^2 = b^3 = -I. Faithful.
  inline MatrixRep fix_a_rep() {
    return {{{0, -1, 1, 0}, {0, -1, 1, 1}}, {identity()}, {identity()}};
  }

  // C2 * C2 acting on Z by n -> -n and n -> 1 - n. Faithful.
  inline MatrixRep fix_d_rep() {
    return {{{-1, 0, 0, 1}, {-1, 1, 0, 1}}, {identity()}, {identity()}};
  }

  inline Word random_word(GraphOfGroups const& g, std::mt19937_64& rng, std::size_t max_len) {
    auto const& graph = g.graph();
    Word        w;
    std::size_t len   = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t pick = std::uniform_int_distribution<std::size_t>(
          0, graph.num_vertices() + graph.num_edges() - 1)(rng);
      if (pick < graph.num_vertices()) {
        auto order = g.vertex_group(pick).order();
        w.push_back(Syllable::vertex(
            pick, static_cast<gogkit::elem_t>(
                      std::uniform_int_distribution<std::size_t>(0, order - 1)(rng))));
      } else {
        w.push_back(Syllable::letter(pick - graph.num_vertices(), rng() % 2 ? 1 : -1));
      }
    }
    return w;
  }

}  // namespace oracle
