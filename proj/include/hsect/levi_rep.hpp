#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hsect/geometry.hpp"
#include "hsect/rational.hpp"

namespace hsect {

/// Weight -> multiplicity of a finite-dimensional Levi module.
using WeightSystem = std::map<Weight, std::int64_t>;

/// Multiset of Levi-irreducible labels (highest weights) with multiplicities.
using LeviDecomposition = std::vector<std::pair<Weight, std::int64_t>>;

/// Full weight system of the Levi-irreducible with highest weight lambda,
/// by the Freudenthal recursion descending from lambda. Coordinates outside
/// the Levi subset are carried along and never reflected.
/// Throws std::invalid_argument if lambda is not Levi-dominant.
WeightSystem freudenthal(const ParabolicGeometry& geom, const Weight& lambda);

/// Weyl dimension formula for the Levi factor.
Integer levi_dim(const ParabolicGeometry& geom, const Weight& lambda);

struct LeviDotResult {
  int sign = 1;
  Weight weight;
};

/// Levi dot action w.(x) = w(x + rho_L) - rho_L brought to the Levi-dominant
/// chamber; nullopt when x + rho_L is singular for the Levi root system.
std::optional<LeviDotResult> levi_dot_dominantize(const ParabolicGeometry& geom, Weight x);

/// Brauer-Klimyk: decomposition of V(lambda) (x) (module with weight system
/// `factor`) into Levi-irreducibles. Labels are sorted; every multiplicity is
/// strictly positive.
LeviDecomposition klimyk_tensor(const ParabolicGeometry& geom, const Weight& lambda,
                                const WeightSystem& factor);

/// V(lambda) (x) V(mu) with the weight system of V(mu) from Freudenthal.
LeviDecomposition klimyk_tensor(const ParabolicGeometry& geom, const Weight& lambda,
                                const Weight& mu);

/// One Levi-irreducible summand of the nilradical under the adjoint action.
struct NilradicalComponent {
  Weight highest;                  ///< fund coordinates of the highest root
  std::vector<std::size_t> roots;  ///< positive-root indices, ascending
};

std::vector<NilradicalComponent> nilradical_components(const ParabolicGeometry& geom);

/// Component containing the nilradical root with index `root`.
NilradicalComponent component_of(const ParabolicGeometry& geom, std::size_t root);

/// dim Hom(n (x) E^lambda, E^mu)^P for mu = lambda - beta, beta a nilradical
/// root; 0 for any other pair. A value above 1 throws std::logic_error.
int arrow_multiplicity(const ParabolicGeometry& geom, const Weight& lambda, const Weight& mu);

}  // namespace hsect
