#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsect/geometry.hpp"
#include "hsect/matrix.hpp"
#include "hsect/quiver.hpp"

namespace hsect {

struct ArrowKey {
  Weight source;
  std::size_t root = 0;  ///< index into positive_roots()

  auto operator<=>(const ArrowKey&) const = default;
};

/// A homogeneous bundle as a representation of the quiver: multiplicity
/// spaces V_lambda (by dimension) and one matrix per arrow, rows indexed by
/// the target space and columns by the source space. An absent arrow is the
/// zero map.
class QuiverRep {
 public:
  explicit QuiverRep(std::shared_ptr<const ParabolicGeometry> geom);

  const ParabolicGeometry& geometry() const { return *geom_; }
  std::shared_ptr<const ParabolicGeometry> geometry_ptr() const { return geom_; }

  const std::map<Weight, std::size_t>& support() const { return support_; }
  const std::map<ArrowKey, Matrix>& arrows() const { return arrows_; }

  /// 0 outside the support.
  std::size_t dim(const Weight& lambda) const;
  std::size_t total_dim() const;
  /// Setting a dimension of 0 removes the vertex.
  void set_dim(const Weight& lambda, std::size_t dim);

  Weight target(const ArrowKey& key) const;
  /// Stored matrix, or the zero map of the right shape.
  Matrix arrow(const Weight& source, std::size_t root) const;
  /// Stores `m`; a zero matrix erases the arrow.
  void set_arrow(const Weight& source, std::size_t root, Matrix m);

  /// g(lambda - first -> lambda - first - second) * g(lambda -> lambda - first)
  Matrix compose(const Weight& lambda, std::size_t first, std::size_t second) const;

 private:
  std::shared_ptr<const ParabolicGeometry> geom_;
  std::map<Weight, std::size_t> support_;
  std::map<ArrowKey, Matrix> arrows_;
};

/// Structural problems as human-readable messages; empty means valid.
std::vector<std::string> validate(const QuiverRep& rep);

/// Thrown by operations whose input fails validation or the relations.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> details)
      : std::runtime_error(what), details_(std::move(details)) {}
  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

/// Relation instances that fail on `rep`. Borel geometries only.
std::vector<RelationInstance> check_relations(const QuiverRep& rep);

struct SolveOutcome {
  bool consistent = false;
  QuiverRep rep;  ///< completed representation (meaningful when consistent)
  std::vector<RelationInstance> witnesses;
};

/// Fills in every derived arrow from the generating arrows through the
/// relations, by increasing root height. Derived arrows already present in
/// the input are cross-checked rather than overwritten.
SolveOutcome solve_derived_arrows(const QuiverRep& rep);

QuiverRep irreducible(std::shared_ptr<const ParabolicGeometry> geom, const Weight& lambda,
                      std::size_t multiplicity = 1);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);
/// Tangent and cotangent bundles of G/B. Throw std::invalid_argument for
/// non-Borel geometries.
QuiverRep tangent(std::shared_ptr<const ParabolicGeometry> geom);
QuiverRep cotangent(std::shared_ptr<const ParabolicGeometry> geom);

/// Smallest subrepresentation containing V_s for every seed s.
QuiverRep subrep_generated(const QuiverRep& rep, const std::vector<Weight>& seeds);
/// V / (V' : CQ) where V' is the sum of V_s over the seeds.
QuiverRep colon_quotient(const QuiverRep& rep, const std::vector<Weight>& seeds);

/// Support along lambda_0, lambda_0 - beta, ..., lambda_0 - m beta, listed from
/// the top. Intermediate points may carry dimension 0.
struct AmPath {
  std::size_t direction = 0;
  std::vector<Weight> path;
};

std::optional<AmPath> is_am_type(const QuiverRep& rep);

struct Interval {
  std::size_t first = 0;  ///< 0-based positions on the path
  std::size_t last = 0;
  std::size_t multiplicity = 0;

  bool operator==(const Interval&) const = default;
};

struct GabrielDecomposition {
  AmPath path;
  std::vector<Interval> intervals;
};

/// Throws std::invalid_argument for representations that are not of A_m type.
GabrielDecomposition gabriel_decompose(const QuiverRep& rep);

}  // namespace hsect
