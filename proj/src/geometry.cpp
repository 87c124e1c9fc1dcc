#include "hsect/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsect {

ParabolicGeometry::ParabolicGeometry(std::shared_ptr<const RootSystem> roots,
                                     std::vector<std::size_t> levi)
    : roots_(std::move(roots)), levi_(std::move(levi)) {
  const std::size_t n = roots_->rank();
  std::sort(levi_.begin(), levi_.end());
  levi_.erase(std::unique(levi_.begin(), levi_.end()), levi_.end());
  levi_mask_.assign(n, false);
  for (auto i : levi_) {
    if (i >= n) {
      throw std::out_of_range("Levi index " + std::to_string(i + 1) + " exceeds rank " +
                              std::to_string(n));
    }
    levi_mask_[i] = true;
  }

  const auto& pos = roots_->positive_roots();
  nil_mask_.assign(pos.size(), false);
  gen_mask_.assign(pos.size(), false);
  for (std::size_t k = 0; k < pos.size(); ++k) {
    bool outside = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (pos[k].simple[i] != 0 && !levi_mask_[i]) outside = true;
    }
    if (outside) {
      nil_mask_[k] = true;
      nilradical_.push_back(k);
    } else {
      levi_roots_.push_back(k);
    }
  }

  for (auto k : nilradical_) {
    bool decomposable = false;
    for (auto a : nilradical_) {
      std::vector<int> rest = pos[k].simple;
      for (std::size_t i = 0; i < n; ++i) rest[i] -= pos[a].simple[i];
      const auto b = roots_->positive_index(rest);
      if (b && nil_mask_[*b]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      gen_mask_[k] = true;
      generating_.push_back(k);
    }
  }
}

bool ParabolicGeometry::is_vertex(const Weight& lambda) const {
  if (lambda.rank() != rank()) return false;
  return std::all_of(levi_.begin(), levi_.end(), [&](std::size_t i) { return lambda[i] >= 0; });
}

std::shared_ptr<const ParabolicGeometry> build_geometry(const CartanType& type,
                                                        std::vector<std::size_t> levi) {
  return std::make_shared<const ParabolicGeometry>(std::make_shared<const RootSystem>(type),
                                                   std::move(levi));
}

}  // namespace hsect
