#pragma once

#include <random>
#include <vector>

#include "hsect/bundle_rep.hpp"
#include "hsect/quiver.hpp"

namespace testing_support {

using namespace hsect;

inline std::shared_ptr<const ParabolicGeometry> borel(const char* type) {
  return build_geometry(CartanType::parse(type), {});
}

inline Rational random_rational(std::mt19937& rng, int span = 3) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rational(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                            int span = 3) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, span);
  }
  return m;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (m.rank() == n) return m;
  }
}

/// Random generating data on a window of a Borel quiver, completed by the
/// solver; retries until the data satisfies the relations.
inline QuiverRep random_consistent_rep(std::mt19937& rng,
                                       std::shared_ptr<const ParabolicGeometry> geom,
                                       int radius = 2, std::size_t max_dim = 2) {
  const std::size_t n = geom->rank();
  std::uniform_int_distribution<int> coord(-1, 2);
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::bernoulli_distribution keep(0.6);
  std::bernoulli_distribution zero_arrow(0.4);
  for (;;) {
    std::vector<int> c(n);
    for (auto& x : c) x = coord(rng);
    const auto window = quiver_window(*geom, Weight(c), radius);
    QuiverRep rep(geom);
    for (const auto& v : window.vertices) {
      if (keep(rng)) rep.set_dim(v, dim(rng));
    }
    for (const auto& a : window.arrows) {
      if (a.kind != ArrowKind::generating) continue;
      const std::size_t ds = rep.dim(a.source);
      const std::size_t dt = rep.dim(a.target);
      if (ds == 0 || dt == 0 || zero_arrow(rng)) continue;
      rep.set_arrow(a.source, a.root, random_matrix(rng, dt, ds));
    }
    auto solved = solve_derived_arrows(rep);
    if (solved.consistent) return std::move(solved.rep);
  }
}

/// Change of basis at one vertex: incoming arrows times g, outgoing times g^-1.
inline QuiverRep rescale_vertex(const QuiverRep& rep, const Weight& v, const Matrix& g) {
  const Matrix inv = g.solve(Matrix::identity(g.rows()));
  QuiverRep out(rep.geometry_ptr());
  for (const auto& [w, d] : rep.support()) out.set_dim(w, d);
  for (const auto& [key, m] : rep.arrows()) {
    Matrix x = m;
    if (rep.target(key) == v) x = g * x;
    if (key.source == v) x = x * inv;
    out.set_arrow(key.source, key.root, std::move(x));
  }
  return out;
}

}  // namespace testing_support
