#include "hsect/weyl_bott.hpp"

#include <stdexcept>

namespace hsect {

std::optional<Dominantized> dominantize(const RootSystem& roots, const Weight& v) {
  const std::size_t n = roots.rank();
  if (v.rank() != n) throw std::invalid_argument("dominantize: rank mismatch");

  int negative = 0;
  for (const auto& a : roots.positive_roots()) {
    const int p = roots.inner(v, a);
    if (p == 0) return std::nullopt;
    if (p < 0) ++negative;
  }

  Weight w = v;
  int steps = 0;
  for (;;) {
    std::size_t i = 0;
    while (i < n && w[i] > 0) ++i;
    if (i == n) break;
    // No zero coordinates can appear: regularity is Weyl invariant.
    w = w - roots.simple_root(i).fund * w[i];
    ++steps;
  }
  if (steps != negative) {
    throw std::logic_error("dominantize: reflection count " + std::to_string(steps) +
                           " disagrees with inversion count " + std::to_string(negative));
  }
  return Dominantized{steps, w};
}

Integer weyl_dim(const RootSystem& roots, const Weight& nu) {
  if (!nu.is_dominant()) {
    throw std::invalid_argument("weyl_dim: weight " + nu.str() + " is not dominant");
  }
  const Weight shifted = nu + roots.rho();
  Integer num = 1;
  Integer den = 1;
  for (const auto& a : roots.positive_roots()) {
    num *= roots.inner(shifted, a);
    den *= a.height();
  }
  if (num % den != 0) throw std::logic_error("weyl_dim: inexact division");
  return num / den;
}

BottResult bott(const ParabolicGeometry& geom, const Weight& lambda) {
  if (!geom.is_vertex(lambda)) {
    throw std::invalid_argument("bott: weight " + lambda.str() +
                                " is not dominant for the Levi factor");
  }
  const RootSystem& roots = geom.roots();
  const auto d = dominantize(roots, lambda + roots.rho());
  BottResult r;
  if (!d) return r;
  r.singular = false;
  r.degree = d->length;
  r.weight = d->dominant - roots.rho();
  r.dimension = weyl_dim(roots, r.weight);
  return r;
}

}  // namespace hsect
