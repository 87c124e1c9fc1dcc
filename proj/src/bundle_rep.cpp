#include "hsect/bundle_rep.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hsect/levi_rep.hpp"

namespace hsect {

QuiverRep::QuiverRep(std::shared_ptr<const ParabolicGeometry> geom) : geom_(std::move(geom)) {
  if (!geom_) throw std::invalid_argument("QuiverRep: null geometry");
}

std::size_t QuiverRep::dim(const Weight& lambda) const {
  const auto it = support_.find(lambda);
  return it == support_.end() ? 0 : it->second;
}

std::size_t QuiverRep::total_dim() const {
  std::size_t n = 0;
  for (const auto& [w, d] : support_) n += d;
  return n;
}

void QuiverRep::set_dim(const Weight& lambda, std::size_t dim) {
  if (dim == 0) {
    support_.erase(lambda);
  } else {
    support_[lambda] = dim;
  }
}

Weight QuiverRep::target(const ArrowKey& key) const {
  return key.source - geom_->roots().positive_roots().at(key.root).fund;
}

Matrix QuiverRep::arrow(const Weight& source, std::size_t root) const {
  const auto it = arrows_.find({source, root});
  if (it != arrows_.end()) return it->second;
  return Matrix(dim(target({source, root})), dim(source));
}

void QuiverRep::set_arrow(const Weight& source, std::size_t root, Matrix m) {
  if (m.is_zero()) {
    arrows_.erase({source, root});
  } else {
    arrows_[{source, root}] = std::move(m);
  }
}

Matrix QuiverRep::compose(const Weight& lambda, std::size_t first, std::size_t second) const {
  const Weight mid = target({lambda, first});
  return arrow(mid, second) * arrow(lambda, first);
}

std::vector<std::string> validate(const QuiverRep& rep) {
  const ParabolicGeometry& geom = rep.geometry();
  const auto& pos = geom.roots().positive_roots();
  std::vector<std::string> errors;
  for (const auto& [w, d] : rep.support()) {
    if (w.rank() != geom.rank()) {
      errors.push_back("vertex " + w.str() + ": expected " + std::to_string(geom.rank()) +
                       " coordinates");
    } else if (!geom.is_vertex(w)) {
      errors.push_back("vertex " + w.str() + ": not dominant for the Levi factor");
    }
  }
  for (const auto& [key, m] : rep.arrows()) {
    std::ostringstream where;
    where << "arrow from " << key.source;
    if (key.root >= pos.size()) {
      errors.push_back(where.str() + ": root index out of range");
      continue;
    }
    const Weight tgt = rep.target(key);
    where << " to " << tgt;
    if (!geom.is_nilradical(key.root)) {
      errors.push_back(where.str() + ": root is not in the nilradical");
      continue;
    }
    const std::size_t ds = rep.dim(key.source);
    const std::size_t dt = rep.dim(tgt);
    if (ds == 0) errors.push_back(where.str() + ": source not in support");
    if (dt == 0) errors.push_back(where.str() + ": target not in support");
    if (ds == 0 || dt == 0) continue;
    if (geom.is_vertex(key.source) && geom.is_vertex(tgt) &&
        arrow_multiplicity(geom, key.source, tgt) != 1) {
      errors.push_back(where.str() + ": no such arrow in the quiver");
    }
    if (m.rows() != dt || m.cols() != ds) {
      errors.push_back(where.str() + ": matrix is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(dt) + "x" +
                       std::to_string(ds));
    }
  }
  return errors;
}

namespace {

void require_valid(const QuiverRep& rep) {
  auto errors = validate(rep);
  if (!errors.empty()) throw ValidationError("invalid representation", std::move(errors));
}

std::set<Weight> support_set(const QuiverRep& rep) {
  std::set<Weight> s;
  for (const auto& [w, d] : rep.support()) s.insert(w);
  return s;
}

Matrix residual(const QuiverRep& rep, const RelationInstance& r) {
  const RootSystem& roots = rep.geometry().roots();
  const auto& pos = roots.positive_roots();
  Matrix res = rep.compose(r.source, r.first, r.second) - rep.compose(r.source, r.second, r.first);
  if (r.coefficient != 0) {
    std::vector<int> sum = pos[r.first].simple;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += pos[r.second].simple[i];
    const auto direct = roots.positive_index(sum);
    if (!direct) throw std::logic_error("relation coefficient without a root sum");
    res = res - rep.arrow(r.source, *direct).scaled(r.coefficient);
  }
  return res;
}

}  // namespace

std::vector<RelationInstance> check_relations(const QuiverRep& rep) {
  std::vector<RelationInstance> failed;
  for (const auto& r : borel_relation_instances(rep.geometry(), support_set(rep))) {
    if (!residual(rep, r).is_zero()) failed.push_back(r);
  }
  return failed;
}

SolveOutcome solve_derived_arrows(const QuiverRep& rep) {
  const ParabolicGeometry& geom = rep.geometry();
  if (!geom.is_borel()) {
    throw std::invalid_argument("derived arrows can only be solved for Borel geometries");
  }
  require_valid(rep);
  const RootSystem& roots = geom.roots();
  const auto& pos = roots.positive_roots();

  QuiverRep out(rep.geometry_ptr());
  for (const auto& [w, d] : rep.support()) out.set_dim(w, d);
  for (const auto& [key, m] : rep.arrows()) {
    if (geom.is_generating(key.root)) out.set_arrow(key.source, key.root, m);
  }

  std::vector<RelationInstance> witnesses;
  for (std::size_t d = 0; d < pos.size(); ++d) {
    if (geom.is_generating(d)) continue;
    for (const auto& [lambda, dim] : rep.support()) {
      if (out.dim(lambda - pos[d].fund) == 0) continue;
      std::optional<Matrix> value;
      std::optional<RelationInstance> first;
      for (std::size_t b = 0; b < pos.size(); ++b) {
        std::vector<int> rest = pos[d].simple;
        for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= pos[b].simple[i];
        const auto c = roots.positive_index(rest);
        if (!c || *c <= b) continue;
        const int n = roots.chevalley(-pos[b], -pos[*c]);
        const RelationInstance inst{lambda, b, *c, n};
        // n is a sign, so dividing by it is multiplying by it.
        Matrix cand = (out.compose(lambda, b, *c) - out.compose(lambda, *c, b)).scaled(n);
        if (!value) {
          value = std::move(cand);
          first = inst;
        } else if (cand != *value) {
          witnesses.push_back(inst);
        }
      }
      if (!value) throw std::logic_error("non-simple root without a decomposition");
      const auto given = rep.arrows().find({lambda, d});
      if (given != rep.arrows().end() && given->second != *value) witnesses.push_back(*first);
      out.set_arrow(lambda, d, std::move(*value));
    }
  }

  for (auto& r : check_relations(out)) {
    if (std::find(witnesses.begin(), witnesses.end(), r) == witnesses.end()) {
      witnesses.push_back(std::move(r));
    }
  }
  const bool ok = witnesses.empty();
  return SolveOutcome{ok, std::move(out), std::move(witnesses)};
}

QuiverRep irreducible(std::shared_ptr<const ParabolicGeometry> geom, const Weight& lambda,
                      std::size_t multiplicity) {
  QuiverRep rep(std::move(geom));
  rep.set_dim(lambda, multiplicity);
  return rep;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  const ParabolicGeometry& ga = a.geometry();
  const ParabolicGeometry& gb = b.geometry();
  if (ga.roots().type() != gb.roots().type() || ga.levi() != gb.levi()) {
    throw std::invalid_argument("direct_sum: representations live on different geometries");
  }
  QuiverRep out(a.geometry_ptr());
  for (const auto& [w, d] : a.support()) out.set_dim(w, d);
  for (const auto& [w, d] : b.support()) out.set_dim(w, out.dim(w) + d);
  std::set<ArrowKey> keys;
  for (const auto& [k, m] : a.arrows()) keys.insert(k);
  for (const auto& [k, m] : b.arrows()) keys.insert(k);
  for (const auto& k : keys) {
    out.set_arrow(k.source, k.root, hsect::direct_sum(a.arrow(k.source, k.root),
                                                      b.arrow(k.source, k.root)));
  }
  return out;
}

namespace {

QuiverRep complete(const QuiverRep& generating, const char* what) {
  auto solved = solve_derived_arrows(generating);
  if (!solved.consistent) {
    throw std::logic_error(std::string(what) + ": generating data violates the relations");
  }
  return std::move(solved.rep);
}

}  // namespace

QuiverRep tangent(std::shared_ptr<const ParabolicGeometry> geom) {
  if (!geom->is_borel()) throw std::invalid_argument("tangent: Borel geometry required");
  const RootSystem& roots = geom->roots();
  const auto& pos = roots.positive_roots();
  QuiverRep rep(geom);
  for (const auto& beta : pos) rep.set_dim(beta.fund, 1);
  for (std::size_t i = 0; i < geom->rank(); ++i) {
    const Root& gamma = roots.simple_root(i);
    for (const auto& beta : pos) {
      std::vector<int> rest = beta.simple;
      --rest[i];
      if (!roots.positive_index(rest)) continue;
      rep.set_arrow(beta.fund, roots.simple_position(i),
                    Matrix{{Rational(roots.chevalley(-gamma, beta))}});
    }
  }
  return complete(rep, "tangent");
}

QuiverRep cotangent(std::shared_ptr<const ParabolicGeometry> geom) {
  if (!geom->is_borel()) throw std::invalid_argument("cotangent: Borel geometry required");
  const RootSystem& roots = geom->roots();
  const auto& pos = roots.positive_roots();
  QuiverRep rep(geom);
  for (const auto& beta : pos) rep.set_dim(-beta.fund, 1);
  for (std::size_t i = 0; i < geom->rank(); ++i) {
    const Root& gamma = roots.simple_root(i);
    for (const auto& beta : pos) {
      std::vector<int> sum = beta.simple;
      ++sum[i];
      if (!roots.positive_index(sum)) continue;
      rep.set_arrow(-beta.fund, roots.simple_position(i),
                    Matrix{{Rational(roots.chevalley(-gamma, -beta))}});
    }
  }
  return complete(rep, "cotangent");
}

namespace {

void require_seeds(const QuiverRep& rep, const std::vector<Weight>& seeds) {
  for (const auto& s : seeds) {
    if (rep.dim(s) == 0) {
      throw std::invalid_argument("seed vertex " + s.str() + " is not in the support");
    }
  }
}

// Rows spanning the annihilator of the column space of `basis`.
Matrix annihilator(const Matrix& basis) { return basis.transposed().kernel().transposed(); }

}  // namespace

QuiverRep subrep_generated(const QuiverRep& rep, const std::vector<Weight>& seeds) {
  require_seeds(rep, seeds);
  std::map<Weight, Matrix> span;
  for (const auto& [w, d] : rep.support()) span.emplace(w, Matrix(d, 0));
  for (const auto& s : seeds) span[s] = Matrix::identity(rep.dim(s));

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [key, m] : rep.arrows()) {
      const Matrix& src = span.at(key.source);
      if (src.cols() == 0) continue;
      Matrix& dst = span.at(rep.target(key));
      Matrix grown = dst.hstack(m * src).column_basis();
      if (grown.cols() > dst.cols()) {
        dst = std::move(grown);
        changed = true;
      }
    }
  }

  QuiverRep out(rep.geometry_ptr());
  for (const auto& [w, b] : span) out.set_dim(w, b.cols());
  for (const auto& [key, m] : rep.arrows()) {
    const Matrix& src = span.at(key.source);
    const Matrix& dst = span.at(rep.target(key));
    if (src.cols() == 0 || dst.cols() == 0) continue;
    out.set_arrow(key.source, key.root, dst.solve(m * src));
  }
  return out;
}

QuiverRep colon_quotient(const QuiverRep& rep, const std::vector<Weight>& seeds) {
  require_seeds(rep, seeds);
  std::map<Weight, Matrix> colon;
  for (const auto& [w, d] : rep.support()) colon.emplace(w, Matrix(d, 0));
  for (const auto& s : seeds) colon[s] = Matrix::identity(rep.dim(s));

  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [v, basis] : colon) {
      if (basis.cols() == 0) continue;
      Matrix constraints(0, basis.cols());
      for (const auto& [key, m] : rep.arrows()) {
        if (key.source != v) continue;
        const Matrix& dst = colon.at(rep.target(key));
        constraints = constraints.vstack(annihilator(dst) * m * basis);
      }
      const Matrix keep = constraints.kernel();
      if (keep.cols() < basis.cols()) {
        basis = basis * keep;
        changed = true;
      }
    }
  }

  QuiverRep out(rep.geometry_ptr());
  std::map<Weight, Matrix> project;
  std::map<Weight, Matrix> lift;
  for (const auto& [w, basis] : colon) {
    Matrix q = annihilator(basis);
    out.set_dim(w, q.rows());
    lift.emplace(w, q.solve(Matrix::identity(q.rows())));
    project.emplace(w, std::move(q));
  }
  for (const auto& [key, m] : rep.arrows()) {
    const Matrix& q = project.at(rep.target(key));
    const Matrix& r = lift.at(key.source);
    if (q.rows() == 0 || r.cols() == 0) continue;
    out.set_arrow(key.source, key.root, q * m * r);
  }
  return out;
}

namespace {

// t with d = t * v, if any.
std::optional<int> integer_ratio(const Weight& d, const Weight& v) {
  std::optional<int> t;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (v[i] == 0) {
      if (d[i] != 0) return std::nullopt;
      continue;
    }
    if (d[i] % v[i] != 0) return std::nullopt;
    const int q = d[i] / v[i];
    if (t && *t != q) return std::nullopt;
    t = q;
  }
  return t;
}

}  // namespace

std::optional<AmPath> is_am_type(const QuiverRep& rep) {
  const ParabolicGeometry& geom = rep.geometry();
  const auto& pos = geom.roots().positive_roots();
  const auto& support = rep.support();

  std::set<std::size_t> directions;
  for (const auto& [key, m] : rep.arrows()) directions.insert(key.root);
  if (directions.size() > 1) return std::nullopt;

  std::size_t beta = 0;
  if (!directions.empty()) {
    beta = *directions.begin();
  } else if (support.size() >= 2) {
    const Weight d = support.begin()->first - std::next(support.begin())->first;
    bool found = false;
    for (auto k : geom.nilradical()) {
      if (integer_ratio(d, pos[k].fund)) {
        beta = k;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  } else if (!geom.generating().empty()) {
    beta = geom.generating().front();
  }

  AmPath out;
  out.direction = beta;
  if (support.empty()) return out;

  const Weight& base = support.begin()->first;
  int lo = 0;
  int hi = 0;
  for (const auto& [w, d] : support) {
    const auto t = integer_ratio(base - w, pos[beta].fund);
    if (!t) return std::nullopt;
    lo = std::min(lo, *t);
    hi = std::max(hi, *t);
  }
  for (int t = lo; t <= hi; ++t) {
    Weight w = base - pos[beta].fund * t;
    if (!geom.is_vertex(w)) return std::nullopt;
    if (!out.path.empty() && arrow_multiplicity(geom, out.path.back(), w) != 1) {
      return std::nullopt;
    }
    out.path.push_back(std::move(w));
  }
  return out;
}

GabrielDecomposition gabriel_decompose(const QuiverRep& rep) {
  auto path = is_am_type(rep);
  if (!path) throw std::invalid_argument("gabriel_decompose: support is not of A_m type");
  const auto& p = path->path;
  const std::size_t m = p.size();

  // rank[i][j]: rank of the composite map from position i to position j >= i.
  std::vector<std::vector<std::size_t>> rank(m, std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    Matrix c = Matrix::identity(rep.dim(p[i]));
    rank[i][i] = rep.dim(p[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      c = rep.arrow(p[j - 1], path->direction) * c;
      rank[i][j] = c.rank();
    }
  }
  auto r = [&](long i, long j) -> long {
    if (i < 0 || j >= static_cast<long>(m)) return 0;
    return static_cast<long>(rank[i][j]);
  };

  GabrielDecomposition out{*path, {}};
  std::vector<std::size_t> covered(m, 0);
  for (long i = 0; i < static_cast<long>(m); ++i) {
    for (long j = i; j < static_cast<long>(m); ++j) {
      const long k = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
      if (k < 0) throw std::logic_error("gabriel_decompose: negative interval multiplicity");
      if (k == 0) continue;
      out.intervals.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                               static_cast<std::size_t>(k)});
      for (long t = i; t <= j; ++t) covered[t] += k;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (covered[i] != rep.dim(p[i])) {
      throw std::logic_error("gabriel_decompose: intervals do not cover the dimension vector");
    }
  }
  return out;
}

}  // namespace hsect
