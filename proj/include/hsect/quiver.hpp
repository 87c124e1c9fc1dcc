#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "hsect/geometry.hpp"

namespace hsect {

enum class ArrowKind { generating, derived };

const char* to_string(ArrowKind kind);

struct QuiverArrow {
  Weight source;
  std::size_t root = 0;  ///< index into positive_roots()
  Weight target;
  ArrowKind kind = ArrowKind::generating;

  bool operator==(const QuiverArrow&) const = default;
};

/// All arrows leaving the vertex lambda. Throws std::invalid_argument if
/// lambda is not a vertex.
std::vector<QuiverArrow> arrows_from(const ParabolicGeometry& geom, const Weight& lambda);

struct QuiverWindow {
  std::vector<Weight> vertices;  ///< sorted
  std::vector<QuiverArrow> arrows;
};

/// Vertices reachable from `center` in at most `radius` forward steps, and the
/// arrows leaving the vertices at distance < radius.
QuiverWindow quiver_window(const ParabolicGeometry& geom, const Weight& center, int radius);

/// One commutation relation at a vertex: the path along `first` then `second`,
/// minus the path along `second` then `first`, equals `coefficient` times the
/// direct arrow along first + second.
struct RelationInstance {
  Weight source;
  std::size_t first = 0;
  std::size_t second = 0;
  int coefficient = 0;

  bool operator==(const RelationInstance&) const = default;
};

/// Relations touching `support`, for Borel geometries only (throws
/// std::invalid_argument otherwise). Pairs are unordered; `first` precedes
/// `second` in root order.
std::vector<RelationInstance> borel_relation_instances(const ParabolicGeometry& geom,
                                                       const std::set<Weight>& support);

}  // namespace hsect
