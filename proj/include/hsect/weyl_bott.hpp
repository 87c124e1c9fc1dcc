#pragma once

#include <optional>

#include "hsect/geometry.hpp"
#include "hsect/rational.hpp"
#include "hsect/root_system.hpp"

namespace hsect {

/// Unique dominant Weyl translate of a regular weight and the length of the
/// Weyl element reaching it.
struct Dominantized {
  int length = 0;
  Weight dominant;
};

/// Bring `v` (typically lambda + rho) into the closed dominant chamber.
/// Returns nullopt when v lies on a root hyperplane. The length is computed
/// both by counting simple reflections and by counting positive roots pairing
/// negatively with v; a disagreement throws std::logic_error.
std::optional<Dominantized> dominantize(const RootSystem& roots, const Weight& v);

/// Cohomology of the irreducible bundle E_lambda: either zero in every degree
/// (singular) or Sigma^weight in exactly one degree.
struct BottResult {
  bool singular = true;
  int degree = 0;
  Weight weight;
  Integer dimension = 0;

  bool operator==(const BottResult&) const = default;
};

/// Throws std::invalid_argument if lambda is not a vertex of `geom`.
BottResult bott(const ParabolicGeometry& geom, const Weight& lambda);

/// Weyl dimension formula. Throws std::invalid_argument for non-dominant nu.
Integer weyl_dim(const RootSystem& roots, const Weight& nu);

}  // namespace hsect
