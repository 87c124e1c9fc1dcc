#include "hsect/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hsect {

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) {
    throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
  }
  CartanType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 1000) {
      throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
    }
    rank = rank * 10 + (text[i] - '0');
  }
  t.rank = rank;
  const bool ok = (t.series == 'A' && rank >= 1) || (t.series == 'D' && rank >= 4) ||
                  (t.series == 'E' && rank >= 6 && rank <= 8);
  if (!ok) {
    throw std::invalid_argument("unsupported Cartan type '" + std::string(text) + "'");
  }
  return t;
}

std::string CartanType::str() const { return std::string(1, series) + std::to_string(rank); }

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

Weight Weight::operator+(const Weight& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < rank(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

Weight Weight::operator-(const Weight& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < rank(); ++i) out.coords_[i] -= other.coords_[i];
  return out;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Weight Weight::operator*(int k) const {
  Weight out = *this;
  for (auto& c : out.coords_) c *= k;
  return out;
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << w.str() << ')'; }

int Root::height() const { return std::accumulate(simple.begin(), simple.end(), 0); }

Root Root::operator-() const {
  Root r;
  r.simple = simple;
  for (auto& c : r.simple) c = -c;
  r.fund = -fund;
  return r;
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& type) {
  const int n = type.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j) {  // 1-based Bourbaki labels
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type.series) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    default:
      throw std::invalid_argument("unsupported series");
  }
  return c;
}

RootSystem::RootSystem(CartanType type) : type_(type), cartan_(hsect::cartan_matrix(type)) {
  const std::size_t n = rank();

  // Height closure: for simply-laced systems beta + alpha_i is a root
  // exactly when (beta, alpha_i) = -1.
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> s(n, 0);
    s[i] = 1;
    layer.push_back(s);
  }
  std::vector<Root> all;
  while (!layer.empty()) {
    // Within a height, larger coefficient vectors first, so simple roots come
    // out as alpha_1, ..., alpha_n.
    std::sort(layer.begin(), layer.end(), std::greater<>());
    std::set<std::vector<int>> next;
    for (const auto& s : layer) {
      Root r = make_root(s);
      for (std::size_t i = 0; i < n; ++i) {
        if (r.fund[i] == -1) {
          auto t = s;
          ++t[i];
          next.insert(t);
        }
      }
      all.push_back(std::move(r));
    }
    layer.assign(next.begin(), next.end());
  }
  positive_ = std::move(all);
  simple_index_.resize(n);
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    lookup_[positive_[k].simple] = k;
    if (positive_[k].height() == 1) {
      const auto it = std::find(positive_[k].simple.begin(), positive_[k].simple.end(), 1);
      simple_index_[static_cast<std::size_t>(it - positive_[k].simple.begin())] = k;
    }
  }
}

Root RootSystem::make_root(const std::vector<int>& simple) const {
  if (simple.size() != rank()) throw std::invalid_argument("root rank mismatch");
  Root r;
  r.simple = simple;
  std::vector<int> fund(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) fund[i] += cartan_[i][j] * simple[j];
  r.fund = Weight(std::move(fund));
  return r;
}

std::optional<std::size_t> RootSystem::positive_index(const std::vector<int>& simple) const {
  const auto it = lookup_.find(simple);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const std::vector<int>& simple) const {
  if (positive_index(simple)) return true;
  std::vector<int> neg = simple;
  for (auto& c : neg) c = -c;
  return positive_index(neg).has_value();
}

int RootSystem::inner(const Weight& x, const Root& y) const {
  if (x.rank() != rank() || y.simple.size() != rank()) {
    throw std::invalid_argument("inner product rank mismatch");
  }
  int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += x[i] * y.simple[i];
  return s;
}

Weight RootSystem::reflect(const Weight& lambda, const Root& alpha) const {
  return lambda - alpha.fund * inner(lambda, alpha);
}

int RootSystem::asymmetry(const Root& a, const Root& b) const {
  // epsilon(alpha_i, alpha_j) = (-1)^{e_ij} with e_ii = 1, e_ij = (alpha_i, alpha_j) mod 2
  // for i < j and e_ij = 0 for i > j; extended bimultiplicatively.
  long exponent = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.simple[i] == 0) continue;
    for (std::size_t j = i; j < rank(); ++j) {
      const int e = (i == j) ? 1 : (cartan_[i][j] & 1);
      exponent += static_cast<long>(a.simple[i]) * b.simple[j] * e;
    }
  }
  return (exponent % 2 == 0) ? 1 : -1;
}

int RootSystem::chevalley(const Root& a, const Root& b) const {
  bool opposite = true;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.simple[i] != -b.simple[i]) opposite = false;
  }
  if (a == b || opposite) {
    throw std::invalid_argument("chevalley: roots must not be proportional");
  }
  std::vector<int> sum(rank());
  for (std::size_t i = 0; i < rank(); ++i) sum[i] = a.simple[i] + b.simple[i];
  return is_root(sum) ? asymmetry(a, b) : 0;
}

}  // namespace hsect
