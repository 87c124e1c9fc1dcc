#include "hsect/quiver.hpp"

#include <map>
#include <stdexcept>

#include "hsect/levi_rep.hpp"

namespace hsect {

const char* to_string(ArrowKind kind) {
  return kind == ArrowKind::generating ? "generating" : "derived";
}

std::vector<QuiverArrow> arrows_from(const ParabolicGeometry& geom, const Weight& lambda) {
  if (!geom.is_vertex(lambda)) {
    throw std::invalid_argument("arrows_from: " + lambda.str() + " is not a vertex");
  }
  const auto& pos = geom.roots().positive_roots();
  std::vector<QuiverArrow> out;
  for (auto k : geom.nilradical()) {
    Weight mu = lambda - pos[k].fund;
    if (!geom.is_vertex(mu)) continue;
    if (arrow_multiplicity(geom, lambda, mu) != 1) continue;
    out.push_back({lambda, k, std::move(mu),
                   geom.is_generating(k) ? ArrowKind::generating : ArrowKind::derived});
  }
  return out;
}

QuiverWindow quiver_window(const ParabolicGeometry& geom, const Weight& center, int radius) {
  if (!geom.is_vertex(center)) {
    throw std::invalid_argument("quiver_window: center " + center.str() + " is not a vertex");
  }
  if (radius < 0) throw std::invalid_argument("quiver_window: negative radius");

  std::map<Weight, int> distance{{center, 0}};
  std::vector<Weight> frontier{center};
  QuiverWindow window;
  for (int step = 0; step < radius; ++step) {
    std::vector<Weight> next;
    for (const auto& v : frontier) {
      for (auto& a : arrows_from(geom, v)) {
        if (distance.emplace(a.target, step + 1).second) next.push_back(a.target);
        window.arrows.push_back(std::move(a));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [v, d] : distance) window.vertices.push_back(v);
  return window;
}

std::vector<RelationInstance> borel_relation_instances(const ParabolicGeometry& geom,
                                                       const std::set<Weight>& support) {
  if (!geom.is_borel()) {
    throw std::invalid_argument("relation instances are only known for Borel geometries");
  }
  const RootSystem& roots = geom.roots();
  const auto& pos = roots.positive_roots();
  std::vector<RelationInstance> out;
  for (const auto& lambda : support) {
    for (std::size_t b = 0; b < pos.size(); ++b) {
      for (std::size_t c = b + 1; c < pos.size(); ++c) {
        const Weight via_b = lambda - pos[b].fund;
        const Weight via_c = lambda - pos[c].fund;
        const Weight end = via_b - pos[c].fund;
        if (!support.count(via_b) && !support.count(via_c) && !support.count(end)) continue;
        out.push_back({lambda, b, c, roots.chevalley(-pos[b], -pos[c])});
      }
    }
  }
  return out;
}

}  // namespace hsect
