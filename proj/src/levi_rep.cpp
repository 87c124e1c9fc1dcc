#include "hsect/levi_rep.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hsect {

namespace {

// Levi Weyl group, linear action: the Levi-dominant conjugate of mu.
Weight levi_dominant_conjugate(const ParabolicGeometry& geom, Weight mu) {
  const RootSystem& roots = geom.roots();
  for (;;) {
    bool moved = false;
    for (auto i : geom.levi()) {
      if (mu[i] < 0) {
        mu = mu - roots.simple_root(i).fund * mu[i];
        moved = true;
        break;
      }
    }
    if (!moved) return mu;
  }
}

}  // namespace

WeightSystem freudenthal(const ParabolicGeometry& geom, const Weight& lambda) {
  if (!geom.is_vertex(lambda)) {
    throw std::invalid_argument("freudenthal: " + lambda.str() + " is not Levi-dominant");
  }
  const RootSystem& roots = geom.roots();
  const auto& pos = roots.positive_roots();

  WeightSystem mult{{lambda, 1}};
  // Coefficients c with lambda - mu = sum c_i alpha_i over the Levi subset.
  std::map<Weight, std::vector<int>> depth{{lambda, std::vector<int>(geom.rank(), 0)}};
  std::vector<Weight> layer{lambda};
  int level = 0;

  while (!layer.empty()) {
    ++level;
    std::map<Weight, std::vector<int>> candidates;
    for (const auto& nu : layer) {
      for (auto i : geom.levi()) {
        Weight mu = nu - roots.simple_root(i).fund;
        auto c = depth.at(nu);
        ++c[i];
        candidates.emplace(std::move(mu), std::move(c));
      }
    }

    std::vector<Weight> next;
    for (const auto& [mu, c] : candidates) {
      const Weight top = levi_dominant_conjugate(geom, mu);
      std::int64_t m = 0;
      if (top != mu) {
        const auto it = mult.find(top);
        m = it == mult.end() ? 0 : it->second;
      } else {
        // ((lambda+rho_L)^2 - (mu+rho_L)^2) m(mu)
        //   = 2 sum_{alpha in Phi_L^+} sum_{k>=1} (mu + k alpha, alpha) m(mu + k alpha)
        std::int64_t den = 0;
        for (auto i : geom.levi()) den += static_cast<std::int64_t>(c[i]) * (lambda[i] + mu[i] + 2);
        std::int64_t num = 0;
        for (auto a : geom.levi_roots()) {
          const Root& alpha = pos[a];
          const int h = alpha.height();
          for (int k = 1; k * h <= level; ++k) {
            const Weight up = mu + alpha.fund * k;
            const auto it = mult.find(up);
            if (it == mult.end()) continue;
            num += static_cast<std::int64_t>(roots.inner(up, alpha)) * it->second;
          }
        }
        num *= 2;
        if (den <= 0 || num % den != 0) {
          throw std::logic_error("freudenthal: inexact recursion at " + mu.str());
        }
        m = num / den;
      }
      if (m > 0) {
        mult[mu] = m;
        depth[mu] = c;
        next.push_back(mu);
      }
    }
    layer = std::move(next);
  }
  return mult;
}

Integer levi_dim(const ParabolicGeometry& geom, const Weight& lambda) {
  const RootSystem& roots = geom.roots();
  Integer num = 1;
  Integer den = 1;
  for (auto a : geom.levi_roots()) {
    const Root& alpha = roots.positive_roots()[a];
    num *= roots.inner(lambda, alpha) + alpha.height();
    den *= alpha.height();
  }
  if (num % den != 0) throw std::logic_error("levi_dim: inexact division");
  return num / den;
}

std::optional<LeviDotResult> levi_dot_dominantize(const ParabolicGeometry& geom, Weight x) {
  const RootSystem& roots = geom.roots();
  int sign = 1;
  for (;;) {
    bool moved = false;
    for (auto i : geom.levi()) {
      if (x[i] + 1 < 0) {
        x = x - roots.simple_root(i).fund * (x[i] + 1);
        sign = -sign;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  for (auto i : geom.levi()) {
    if (x[i] + 1 == 0) return std::nullopt;
  }
  return LeviDotResult{sign, std::move(x)};
}

LeviDecomposition klimyk_tensor(const ParabolicGeometry& geom, const Weight& lambda,
                                const WeightSystem& factor) {
  if (!geom.is_vertex(lambda)) {
    throw std::invalid_argument("klimyk_tensor: " + lambda.str() + " is not Levi-dominant");
  }
  std::map<Weight, std::int64_t> coeff;
  for (const auto& [nu, m] : factor) {
    const auto d = levi_dot_dominantize(geom, lambda + nu);
    if (!d) continue;
    coeff[d->weight] += d->sign * m;
  }
  LeviDecomposition out;
  for (const auto& [w, m] : coeff) {
    if (m < 0) {
      throw std::logic_error("klimyk_tensor: negative multiplicity at " + w.str());
    }
    if (m > 0) out.emplace_back(w, m);
  }
  return out;
}

LeviDecomposition klimyk_tensor(const ParabolicGeometry& geom, const Weight& lambda,
                                const Weight& mu) {
  return klimyk_tensor(geom, lambda, freudenthal(geom, mu));
}

NilradicalComponent component_of(const ParabolicGeometry& geom, std::size_t root) {
  if (!geom.is_nilradical(root)) {
    throw std::invalid_argument("component_of: root is not in the nilradical");
  }
  const RootSystem& roots = geom.roots();
  const auto& pos = roots.positive_roots();
  std::set<std::size_t> seen{root};
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (auto i : geom.levi()) {
      for (int step : {1, -1}) {
        std::vector<int> s = pos[k].simple;
        s[i] += step;
        const auto idx = roots.positive_index(s);
        if (idx && seen.insert(*idx).second) queue.push_back(*idx);
      }
    }
  }

  NilradicalComponent comp;
  comp.roots.assign(seen.begin(), seen.end());
  std::vector<std::size_t> tops;
  for (auto k : comp.roots) {
    bool maximal = true;
    for (auto i : geom.levi()) {
      std::vector<int> s = pos[k].simple;
      ++s[i];
      if (roots.positive_index(s)) maximal = false;
    }
    if (maximal) tops.push_back(k);
  }
  if (tops.size() != 1) {
    throw std::logic_error("component_of: nilradical component without a unique highest root");
  }
  comp.highest = pos[tops.front()].fund;
  return comp;
}

std::vector<NilradicalComponent> nilradical_components(const ParabolicGeometry& geom) {
  std::vector<NilradicalComponent> out;
  std::set<std::size_t> done;
  for (auto k : geom.nilradical()) {
    if (done.count(k)) continue;
    auto comp = component_of(geom, k);
    done.insert(comp.roots.begin(), comp.roots.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int arrow_multiplicity(const ParabolicGeometry& geom, const Weight& lambda, const Weight& mu) {
  if (!geom.is_vertex(lambda) || !geom.is_vertex(mu)) return 0;
  const RootSystem& roots = geom.roots();
  const Weight diff = lambda - mu;
  std::optional<std::size_t> beta;
  for (auto k : geom.nilradical()) {
    if (roots.positive_roots()[k].fund == diff) {
      beta = k;
      break;
    }
  }
  if (!beta) return 0;
  if (geom.is_borel()) return 1;

  // The arrow lambda -> lambda - beta lives in V(lambda) (x) (negated component of beta).
  WeightSystem negated;
  for (auto k : component_of(geom, *beta).roots) negated[-roots.positive_roots()[k].fund] = 1;
  std::int64_t m = 0;
  for (const auto& [w, c] : klimyk_tensor(geom, lambda, negated)) {
    if (w == mu) m = c;
  }
  if (m > 1) {
    throw std::logic_error("arrow_multiplicity: " + std::to_string(m) + " for " + lambda.str() +
                           " -> " + mu.str() + " exceeds one");
  }
  return static_cast<int>(m);
}

}  // namespace hsect
