#include "hsect/cohomology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hsect/weyl_bott.hpp"

namespace hsect {

Integer GModuleDecomposition::total_dimension() const {
  Integer t = 0;
  for (const auto& e : entries) t += e.dimension * e.multiplicity;
  return t;
}

void GModuleDecomposition::add(const Weight& nu, std::int64_t m, const Integer& dim) {
  if (m == 0) return;
  auto it = std::lower_bound(entries.begin(), entries.end(), nu,
                             [](const GModuleEntry& e, const Weight& w) { return e.weight < w; });
  if (it != entries.end() && it->weight == nu) {
    it->multiplicity += m;
  } else {
    entries.insert(it, GModuleEntry{nu, m, dim});
  }
}

GModuleDecomposition& GModuleDecomposition::operator+=(const GModuleDecomposition& other) {
  for (const auto& e : other.entries) add(e.weight, e.multiplicity, e.dimension);
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  return *this;
}

GModuleDecomposition h_graded(const QuiverRep& rep, int degree) {
  GModuleDecomposition out;
  for (const auto& [lambda, d] : rep.support()) {
    const auto b = bott(rep.geometry(), lambda);
    if (b.singular || b.degree != degree) continue;
    out.add(b.weight, static_cast<std::int64_t>(d), b.dimension);
  }
  return out;
}

std::vector<Pairing> find_pairings(const QuiverRep& rep) {
  const ParabolicGeometry& geom = rep.geometry();
  const RootSystem& roots = geom.roots();
  std::vector<Pairing> out;
  for (const auto& [lambda, d] : rep.support()) {
    if (!lambda.is_dominant()) continue;
    for (std::size_t j = 0; j < geom.rank(); ++j) {
      if (geom.in_levi(j)) continue;
      const int k = lambda[j] + 1;
      Weight mu = lambda - roots.simple_root(j).fund * k;
      if (rep.dim(mu) == 0) continue;
      out.push_back({lambda, j, k, std::move(mu)});
    }
  }
  return out;
}

Matrix compose_path(const QuiverRep& rep, const Pairing& p) {
  const std::size_t dl = rep.dim(p.lambda);
  const std::size_t dm = rep.dim(p.mu);
  if (dl == 0 || dm == 0) throw std::invalid_argument("compose_path: endpoint not in support");
  const RootSystem& roots = rep.geometry().roots();
  const std::size_t alpha = roots.simple_position(p.j);
  Weight v = p.lambda;
  Matrix c = Matrix::identity(dl);
  for (int step = 0; step < p.k; ++step) {
    if (step > 0 && rep.dim(v) == 0) return Matrix(dm, dl);
    c = rep.arrow(v, alpha) * c;
    v = v - roots.simple_root(p.j).fund;
  }
  return c;
}

std::vector<C0Block> c0_blocks(const QuiverRep& rep) {
  std::vector<C0Block> out;
  for (auto& p : find_pairings(rep)) {
    Matrix m = compose_path(rep, p);
    out.push_back({std::move(p), std::move(m)});
  }
  return out;
}

std::size_t common_kernel_dimension(std::size_t source_dim, const std::vector<Matrix>& blocks) {
  Matrix stacked(0, source_dim);
  for (const auto& b : blocks) stacked = stacked.vstack(b);
  return source_dim - stacked.rank();
}

namespace {

std::string describe(const RelationInstance& r, const RootSystem& roots) {
  const auto& pos = roots.positive_roots();
  std::ostringstream os;
  os << "relation at " << r.source << " along " << Weight(pos[r.first].simple) << " and "
     << Weight(pos[r.second].simple) << " with N=" << r.coefficient;
  return os.str();
}

GModuleDecomposition kernel_of_c0(const QuiverRep& rep) {
  std::map<Weight, std::vector<Matrix>> blocks;
  for (auto& b : c0_blocks(rep)) blocks[b.pairing.lambda].push_back(std::move(b.map));
  GModuleDecomposition out;
  for (const auto& [lambda, d] : rep.support()) {
    if (!lambda.is_dominant()) continue;
    const auto it = blocks.find(lambda);
    const std::size_t m = it == blocks.end() ? d : common_kernel_dimension(d, it->second);
    out.add(lambda, static_cast<std::int64_t>(m), weyl_dim(rep.geometry().roots(), lambda));
  }
  return out;
}

}  // namespace

GModuleDecomposition h0(const QuiverRep& rep) {
  auto errors = validate(rep);
  if (!errors.empty()) throw ValidationError("invalid representation", std::move(errors));
  GModuleDecomposition out;
  if (rep.geometry().is_borel()) {
    const auto failed = check_relations(rep);
    if (!failed.empty()) {
      std::vector<std::string> details;
      for (const auto& r : failed) details.push_back(describe(r, rep.geometry().roots()));
      throw ValidationError("representation violates the quiver relations", std::move(details));
    }
    out = kernel_of_c0(rep);
  } else {
    out = kernel_of_c0(rep);
    out.warnings.push_back(
        "relations are not known for non-Borel parabolics; the input is assumed to satisfy them");
  }
  return out;
}

GModuleDecomposition h0_am(const QuiverRep& rep) {
  const auto path = is_am_type(rep);
  if (!path) throw std::invalid_argument("h0_am: support is not of A_m type");
  GModuleDecomposition direct = h0(rep);

  const ParabolicGeometry& geom = rep.geometry();
  const RootSystem& roots = geom.roots();
  const auto gabriel = gabriel_decompose(rep);
  const auto& p = path->path;
  GModuleDecomposition split;
  for (const auto& iv : gabriel.intervals) {
    for (std::size_t i = iv.first; i <= iv.last; ++i) {
      const Weight& lambda = p[i];
      if (!lambda.is_dominant()) continue;
      bool paired = false;
      for (std::size_t j = 0; j < geom.rank(); ++j) {
        if (geom.in_levi(j)) continue;
        const Weight mu = lambda - roots.simple_root(j).fund * (lambda[j] + 1);
        for (std::size_t t = i; t <= iv.last; ++t) {
          if (p[t] == mu) paired = true;
        }
      }
      if (!paired) {
        split.add(lambda, static_cast<std::int64_t>(iv.multiplicity), weyl_dim(roots, lambda));
      }
    }
  }
  if (!(split == direct)) {
    throw std::logic_error("h0_am: kernel computation disagrees with the interval splitting");
  }
  return direct;
}

Integer euler(const QuiverRep& rep) {
  Integer chi = 0;
  for (const auto& [lambda, d] : rep.support()) {
    const auto b = bott(rep.geometry(), lambda);
    if (b.singular) continue;
    const Integer term = b.dimension * static_cast<long long>(d);
    chi += (b.degree % 2 == 0) ? term : Integer(-term);
  }
  return chi;
}

}  // namespace hsect
