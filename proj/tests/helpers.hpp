#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pentaglue/certify.hpp"
#include "pentaglue/gluing.hpp"
#include "pentaglue/models.hpp"

namespace testing {

using namespace pentaglue;

inline const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

inline Gluing gluing_with_census(int n, int x, int y, int z) {
  for (auto& g : enumerate_gluings(n)) {
    const auto c = census_of(g);
    if (c.x == x && c.y == y && c.z == z) return g;
  }
  throw std::runtime_error("no gluing with that census");
}

inline Gluing doubly_covered() { return gluing_with_census(2, 0, 5, 0); }

// Same gluing under a random pentagon permutation, rotation of each
// pentagon's side labels, and optional reflection of each pentagon.
inline Gluing random_relabel(const Gluing& g, std::mt19937& rng) {
  const int n = g.pentagons();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> rot(0, kSides - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> shift(n);
  std::vector<bool> mirror(n);
  for (int p = 0; p < n; ++p) {
    shift[p] = rot(rng);
    mirror[p] = coin(rng);
  }
  auto side = [&](EdgeSlot s) {
    const int t = mirror[s.pentagon] ? (2 * kSides - s.side - 1) % kSides : s.side;
    return EdgeSlot{perm[s.pentagon], (t + shift[s.pentagon]) % kSides};
  };
  Gluing out(n);
  for (const auto& pair : g.pairs()) {
    auto o = pair.orientation;
    if (mirror[pair.a.pentagon] != mirror[pair.b.pentagon]) {
      o = o == Orientation::flip ? Orientation::keep : Orientation::flip;
    }
    out.glue(side(pair.a), side(pair.b), o);
  }
  return out;
}

inline Embedding tetrahedron() {
  const double h = std::sqrt(2.0 / 3.0);
  std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0},
                      {0.5, std::sqrt(3.0) / 6, h}};
  std::vector<std::vector<int>> f{{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};
  std::vector<EdgePair> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return Embedding(v, e, f);
}

inline Embedding cube(double jitter = 0.0) {
  std::vector<Vec3> v;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(-jitter, jitter);
  for (int i = 0; i < 8; ++i) {
    v.emplace_back((i & 1) + d(rng), ((i >> 1) & 1) + d(rng), ((i >> 2) & 1) + d(rng));
  }
  std::vector<std::vector<int>> f{{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4},
                                  {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  std::vector<EdgePair> e{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {1, 3},
                          {4, 6}, {5, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  return Embedding(v, e, f);
}

}  // namespace testing
