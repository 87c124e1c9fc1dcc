#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hsect/levi_rep.hpp"
#include "hsect/quiver.hpp"

using namespace hsect;

namespace {

std::set<Weight> targets(const std::vector<QuiverArrow>& arrows) {
  std::set<Weight> out;
  for (const auto& a : arrows) out.insert(a.target);
  return out;
}

}  // namespace

TEST_CASE("geometry of A2") {
  const auto borel = build_geometry(CartanType::parse("A2"), {});
  CHECK(borel->is_borel());
  CHECK(borel->nilradical().size() == 3);
  CHECK(borel->generating() == std::vector<std::size_t>{0, 1});

  const auto p2 = build_geometry(CartanType::parse("A2"), {1});
  CHECK(p2->nilradical() == std::vector<std::size_t>{0, 2});
  CHECK(p2->generating() == std::vector<std::size_t>{0, 2});
  CHECK(p2->levi_roots() == std::vector<std::size_t>{1});

  const auto a3 = build_geometry(CartanType::parse("A3"), {});
  CHECK(a3->nilradical().size() == 6);
  CHECK(a3->generating().size() == 3);

  CHECK_THROWS_AS(build_geometry(CartanType::parse("A2"), {2}), std::out_of_range);
}

TEST_CASE("is_vertex") {
  const auto borel = build_geometry(CartanType::parse("A2"), {});
  CHECK(borel->is_vertex(Weight{-7, 3}));
  const auto p2 = build_geometry(CartanType::parse("A2"), {1});
  CHECK(p2->is_vertex(Weight{-3, 0}));
  CHECK_FALSE(p2->is_vertex(Weight{0, -1}));
  CHECK(p2->is_vertex(Weight{0, 0}));
}

TEST_CASE("generating roots are not sums of two nilradical roots") {
  for (const char* name : {"A3", "D4", "E6"}) {
    const auto type = CartanType::parse(name);
    RootSystem rs(type);
    for (unsigned mask = 0; mask < (1u << type.rank); ++mask) {
      std::vector<std::size_t> levi;
      for (int i = 0; i < type.rank; ++i) {
        if (mask & (1u << i)) levi.push_back(static_cast<std::size_t>(i));
      }
      const auto geom = build_geometry(type, levi);
      const auto& pos = rs.positive_roots();
      for (std::size_t b : geom->nilradical()) {
        bool sum = false;
        for (std::size_t x : geom->nilradical()) {
          for (std::size_t y : geom->nilradical()) {
            if (pos[x].fund + pos[y].fund == pos[b].fund) sum = true;
          }
        }
        CHECK(geom->is_generating(b) == !sum);
      }
      if (levi.empty()) CHECK(geom->generating().size() == static_cast<std::size_t>(type.rank));
    }
  }
}

TEST_CASE("arrows_from") {
  const auto borel = build_geometry(CartanType::parse("A2"), {});
  const auto out = arrows_from(*borel, Weight{0, 0});
  CHECK(targets(out) == std::set<Weight>{{-2, 1}, {1, -2}, {-1, -1}});
  for (const auto& a : out) {
    CHECK(a.kind == (a.root == 2 ? ArrowKind::derived : ArrowKind::generating));
  }
  const auto next = targets(arrows_from(*borel, Weight{-2, 1}));
  CHECK(next.count(Weight{-4, 2}));
  CHECK(next.count(Weight{-1, -1}));

  const auto p2 = build_geometry(CartanType::parse("A2"), {1});
  const auto single = arrows_from(*p2, Weight{0, 0});
  REQUIRE(single.size() == 1);
  CHECK(single[0].target == Weight{-2, 1});
  CHECK(single[0].kind == ArrowKind::generating);
  CHECK_THROWS_AS(arrows_from(*p2, Weight{0, -1}), std::invalid_argument);

  for (const char* name : {"A3", "D4", "E6"}) {
    const auto g = build_geometry(CartanType::parse(name), {});
    CHECK(arrows_from(*g, Weight::zero(g->rank())).size() == g->roots().positive_roots().size());
  }
}

TEST_CASE("quiver windows") {
  const auto borel = build_geometry(CartanType::parse("A2"), {});
  auto w = quiver_window(*borel, Weight{0, 0}, 1);
  CHECK(w.vertices.size() == 4);
  CHECK(w.arrows.size() == 3);
  CHECK(std::is_sorted(w.vertices.begin(), w.vertices.end()));

  w = quiver_window(*borel, Weight{0, 0}, 0);
  CHECK(w.vertices == std::vector<Weight>{{0, 0}});
  CHECK(w.arrows.empty());

  w = quiver_window(*borel, Weight{0, 0}, 2);
  for (const Weight& v : {Weight{0, 0}, Weight{-2, 1}, Weight{-1, -1}, Weight{-4, 2}, Weight{-3, 0}}) {
    CHECK(std::binary_search(w.vertices.begin(), w.vertices.end(), v));
  }
  const auto& roots = borel->roots();
  for (const auto& a : w.arrows) {
    CHECK(a.target == a.source - roots.positive_roots()[a.root].fund);
    CHECK(arrow_multiplicity(*borel, a.source, a.target) == 1);
    CHECK((a.kind == ArrowKind::generating) == borel->is_generating(a.root));
  }
  const auto p2 = build_geometry(CartanType::parse("A2"), {1});
  CHECK_THROWS_AS(quiver_window(*p2, Weight{0, -1}, 1), std::invalid_argument);
}

TEST_CASE("derived directions are realised by generating paths") {
  const auto geom = build_geometry(CartanType::parse("A3"), {});
  const auto& pos = geom->roots().positive_roots();
  const auto w = quiver_window(*geom, Weight{0, 0, 0}, 3);
  const std::set<Weight> verts(w.vertices.begin(), w.vertices.end());
  for (const auto& a : w.arrows) {
    if (a.kind != ArrowKind::derived) continue;
    // Walk the simple roots of the direction one at a time.
    Weight at = a.source;
    for (std::size_t i = 0; i < geom->rank(); ++i) {
      for (int k = 0; k < pos[a.root].simple[i]; ++k) at = at - geom->roots().simple_root(i).fund;
    }
    CHECK(at == a.target);
  }
}

TEST_CASE("Borel relation instances") {
  const auto borel = build_geometry(CartanType::parse("A2"), {});
  const std::set<Weight> support{{0, 0}, {-2, 1}, {-1, -1}, {-4, 2}, {-3, 0}};
  const auto rel = borel_relation_instances(*borel, support);
  bool found12 = false;
  bool found1_12 = false;
  for (const auto& r : rel) {
    CHECK(r.first < r.second);
    if (r.source == Weight{0, 0} && r.first == 0 && r.second == 1) {
      found12 = true;
      CHECK(std::abs(r.coefficient) == 1);
    }
    if (r.first == 0 && r.second == 2) {
      found1_12 = true;
      CHECK(r.coefficient == 0);
    }
  }
  CHECK(found12);
  CHECK(found1_12);
  CHECK(borel_relation_instances(*borel, {}).empty());
  const auto p2 = build_geometry(CartanType::parse("A2"), {1});
  CHECK_THROWS_AS(borel_relation_instances(*p2, support), std::invalid_argument);
}

TEST_CASE("to_string of arrow kinds") {
  CHECK(std::string(to_string(ArrowKind::generating)) == "generating");
  CHECK(std::string(to_string(ArrowKind::derived)) == "derived");
}
