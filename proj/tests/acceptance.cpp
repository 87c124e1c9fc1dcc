// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "hsect/bundle_io.hpp"
#include "hsect/cli.hpp"
#include "hsect/cohomology.hpp"
#include "hsect/levi_rep.hpp"
#include "hsect/weyl_bott.hpp"
#include "oracles.hpp"
#include "structure_checks.hpp"

using namespace hsect;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string fx(const std::string& name) {
  return std::string(HSECT_FIXTURE_DIR) + "/" + name + ".json";
}

std::pair<int, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

std::string str(const Weight& w) { return w.str(); }

std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Weight> levi_dominant_box(const ParabolicGeometry& geom, int hi) {
  std::vector<Weight> out{Weight::zero(geom.rank())};
  for (std::size_t i = 0; i < geom.rank(); ++i) {
    std::vector<Weight> next;
    for (const auto& w : out) {
      for (int x = geom.in_levi(i) ? 0 : -hi; x <= hi; ++x) {
        Weight v = w;
        v[i] = x;
        next.push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

// --------------------------------------------------------------- criteria

Outcome bott_grid() {
  Outcome o;
  int n = 0;
  for (int a = -6; a <= 6; ++a) {
    for (int b = -6; b <= 6; ++b) {
      const auto ref = oracle::a2_bott(a, b);
      std::string expected = "singular\n";
      if (!ref.singular) {
        expected = "degree=" + std::to_string(ref.degree) + " weight=" + std::to_string(ref.a) +
                   "," + std::to_string(ref.b) + " dim=" + std::to_string(ref.dim) + "\n";
      }
      const auto [code, out] = cli({"bott", "A2", "--", std::to_string(a), std::to_string(b)});
      o.expect(code == 0 && out == expected,
               "O(" + std::to_string(a) + "," + std::to_string(b) + "): " + out);
      ++n;
    }
  }
  o.expect(n == 169, "grid size");
  return o;
}

Outcome worked_examples() {
  Outcome o;
  o.expect(cli({"solve", fx("L_ell1")}).first == 2, "L with ell = 1 solved");
  o.expect(cli({"solve", fx("L_ell0")}).first == 0, "L with ell = 0 rejected");
  for (int s = 0; s <= 3; ++s) {
    const int code = cli({"solve", fx("B_s" + std::to_string(s))}).first;
    o.expect(code == (s == 2 ? 0 : 2), "B_{s,1} at s = " + std::to_string(s));
  }
  for (const char* name : {"F", "A", "B_s2"}) {
    const auto [code, out] = cli({"h0", fx(name)});
    o.expect(code == 0 && out == "total=0\n", std::string("h0 of ") + name + ": " + out);
  }
  const std::vector<std::pair<std::vector<std::string>, std::string>> bott{
      {{"-2", "1"}, "degree=1 weight=0,0 dim=1\n"},
      {{"-3", "0"}, "degree=2 weight=0,0 dim=1\n"},
      {{"-4", "2"}, "singular\n"},
      {{"-1", "-1"}, "singular\n"}};
  for (const auto& [w, expected] : bott) {
    const auto out = cli({"bott", "A2", "--", w[0], w[1]}).second;
    o.expect(out == expected, "bott " + w[0] + "," + w[1] + ": " + out);
  }
  return o;
}

Outcome two_term_vanishing() {
  Outcome o;
  for (const char* name : {"A2", "A3"}) {
    const auto geom = borel(name);
    const Weight zero = Weight::zero(geom->rank());
    for (std::size_t j = 0; j < geom->rank(); ++j) {
      const Weight mu = zero - geom->roots().simple_root(j).fund;
      o.expect(bott(*geom, mu).degree == 1, "s_j . 0 is not in degree 1");
      for (int value : {1, 0}) {
        QuiverRep rep(geom);
        rep.set_dim(zero, 1);
        rep.set_dim(mu, 1);
        rep.set_arrow(zero, geom->roots().simple_position(j), Matrix{{value}});
        const auto h = h0_am(rep);
        GModuleDecomposition expected;
        if (value == 0) expected.add(zero, 1, 1);
        o.expect(h == expected && h0(rep) == expected,
                 std::string(name) + " j=" + std::to_string(j + 1) +
                     (value ? " nonsplit" : " split"));
      }
    }
  }
  return o;
}

Outcome p1_differential() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::bernoulli_distribution zero_arrow(0.2);
  const auto geom = borel("A1");
  for (int trial = 0; trial < 200; ++trial) {
    const int length = 1 + static_cast<int>(rng() % 8);
    const int top = static_cast<int>(rng() % 13) - 4;
    QuiverRep rep(geom);
    std::vector<std::size_t> dims(length);
    for (int i = 0; i < length; ++i) {
      dims[i] = 1 + rng() % 3;
      rep.set_dim(Weight{top - 2 * i}, dims[i]);
    }
    for (int i = 0; i + 1 < length; ++i) {
      if (zero_arrow(rng)) continue;
      rep.set_arrow(Weight{top - 2 * i}, 0, random_matrix(rng, dims[i + 1], dims[i]));
    }
    // Gabriel splitting scored summand by summand with Clebsch-Gordan.
    std::map<int, std::int64_t> expected;
    for (const auto& iv : gabriel_decompose(rep).intervals) {
      const int n = top - 2 * static_cast<int>(iv.first);
      for (const auto& [nu, m] : oracle::p1_interval_h0(n, static_cast<int>(iv.last - iv.first))) {
        expected[nu] += m * static_cast<std::int64_t>(iv.multiplicity);
      }
    }
    std::map<int, std::int64_t> got;
    for (const auto& e : h0(rep).entries) got[e.weight[0]] += e.multiplicity;
    o.expect(got == expected, "trial " + std::to_string(trial));
  }
  return o;
}

Outcome structure_constants() {
  Outcome o;
  const std::map<std::string, std::size_t> counts{
      {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"A5", 15}, {"A6", 21},
      {"D4", 12}, {"D5", 20}, {"D6", 30}, {"E6", 36}};
  for (const auto& [name, n] : counts) {
    RootSystem rs(CartanType::parse(name));
    o.expect(rs.positive_roots().size() == n, name + " root count");
    o.expect(structure::antisymmetry_holds(rs), name + " antisymmetry");
    o.expect(structure::triple_identity_holds(rs), name + " triple identity");
    o.expect(structure::jacobi_holds(rs), name + " Jacobi");
  }
  return o;
}

Outcome levi_machinery() {
  Outcome o;
  for (const char* name : {"A2", "A3"}) {
    const auto type = CartanType::parse(name);
    const auto c = oracle::cartan_of(type.series, type.rank);
    for (const auto& levi : subsets(type.rank)) {
      const auto geom = build_geometry(type, levi);
      const std::vector<int> ilevi(levi.begin(), levi.end());
      for (const auto& lambda : levi_dominant_box(*geom, 3)) {
        std::int64_t total = 0;
        for (const auto& [w, m] : freudenthal(*geom, lambda)) total += m;
        o.expect(total == oracle::levi_weyl_dim(c, ilevi, lambda.coords()),
                 std::string(name) + " Freudenthal at " + str(lambda));
      }
    }
  }

  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto type = CartanType::parse(trial % 2 ? "A3" : "A2");
    const auto all = subsets(type.rank);
    const auto geom = build_geometry(type, all[rng() % all.size()]);
    const auto box = levi_dominant_box(*geom, 2);
    const Weight& lambda = box[rng() % box.size()];
    const Weight& mu = box[rng() % box.size()];
    Integer dims = 0;
    for (const auto& [w, m] : klimyk_tensor(*geom, lambda, mu)) dims += levi_dim(*geom, w) * m;
    o.expect(dims == levi_dim(*geom, lambda) * levi_dim(*geom, mu),
             "Klimyk " + str(lambda) + " x " + str(mu));
  }

  for (const char* name : {"A2", "A3", "D4"}) {
    const auto type = CartanType::parse(name);
    const RootSystem rs(type);
    for (const auto& levi : subsets(type.rank)) {
      const auto geom = build_geometry(type, levi);
      try {
        const auto window = quiver_window(*geom, Weight::zero(type.rank), 3);
        for (const auto& v : window.vertices) {
          for (std::size_t b : geom->nilradical()) {
            const int m = arrow_multiplicity(*geom, v, v - rs.positive_roots()[b].fund);
            o.expect(m == 0 || m == 1, std::string(name) + " multiplicity above one");
          }
        }
      } catch (const std::logic_error& e) {
        o.expect(false, std::string(name) + ": " + e.what());
      }
    }
  }
  return o;
}

Outcome theorem_c_properties() {
  Outcome o;
  std::mt19937 rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const auto geom = borel(trial % 2 ? "A3" : "A2");
    const QuiverRep a = random_consistent_rep(rng, geom, 2, 2);
    const QuiverRep b = random_consistent_rep(rng, geom, 2, 2);
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    const auto ha = h0(a);

    auto sum = ha;
    sum += h0(b);
    o.expect(h0(direct_sum(a, b)) == sum, "additivity" + tag);

    // Rescaling a single c_0 block leaves every m_lambda unchanged.
    const auto blocks = c0_blocks(a);
    for (std::size_t pick = 0; pick < blocks.size(); ++pick) {
      const Weight& lambda = blocks[pick].pairing.lambda;
      std::vector<Matrix> plain;
      std::vector<Matrix> scaled;
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].pairing.lambda != lambda) continue;
        plain.push_back(blocks[k].map);
        scaled.push_back(k == pick ? blocks[k].map.scaled(Rational(-3, 7)) : blocks[k].map);
      }
      o.expect(common_kernel_dimension(a.dim(lambda), plain) ==
                   common_kernel_dimension(a.dim(lambda), scaled),
               "scale invariance" + tag);
    }

    QuiverRep bare(geom);
    for (const auto& [w, d] : a.support()) bare.set_dim(w, d);
    o.expect(h0(bare) == h_graded(bare, 0), "complete reducibility" + tag);
    o.expect(ha.total_dimension() <= h_graded(a, 0).total_dimension(), "monotonicity" + tag);
  }
  return o;
}

Outcome builders() {
  Outcome o;
  for (const char* name : {"A2", "A3"}) {
    const auto type = CartanType::parse(name);
    const auto geom = borel(name);
    // The adjoint module: highest root and dim g from the orbit root list.
    const auto orbit = oracle::positive_roots_by_orbit(oracle::cartan_of(type.series, type.rank));
    std::vector<int> top;
    int height = -1;
    for (const auto& r : orbit) {
      int h = 0;
      for (int x : r) h += x;
      if (h > height) {
        height = h;
        top = r;
      }
    }
    const auto c = oracle::cartan_of(type.series, type.rank);
    std::vector<int> fund(type.rank, 0);
    for (int i = 0; i < type.rank; ++i) {
      for (int j = 0; j < type.rank; ++j) fund[i] += c[i][j] * top[j];
    }
    const auto adjoint_dim = static_cast<std::int64_t>(2 * orbit.size() + type.rank);
    GModuleDecomposition expected;
    expected.add(Weight(fund), 1, adjoint_dim);
    const auto h = h0(tangent(geom));
    o.expect(h == expected, std::string(name) + " tangent");
    o.expect(h0(cotangent(geom)).empty(), std::string(name) + " cotangent");
  }
  o.expect(h0(tangent(borel("A2"))).total_dimension() == 8, "A2 tangent total");
  o.expect(h0(tangent(borel("A3"))).total_dimension() == 15, "A3 tangent total");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Bott grid on A2", 1, bott_grid},
      {2, "worked examples", 1, worked_examples},
      {3, "two-term vanishing", 1, two_term_vanishing},
      {4, "P^1 differential oracle", 5, p1_differential},
      {5, "structure constants", 10, structure_constants},
      {6, "Levi machinery", 30, levi_machinery},
      {7, "kernel properties", 30, theorem_c_properties},
      {8, "tangent and cotangent", 2, builders},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    std::printf("%s %d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
