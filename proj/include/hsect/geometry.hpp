#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hsect/root_system.hpp"

namespace hsect {

/// G/P data: the Levi subset of simple roots and the nilradical it cuts out.
///
/// Roots are referred to by their index in `roots().positive_roots()`. The
/// Levi subset uses 0-based simple-root indices; file and CLI formats are
/// 1-based and convert at the boundary.
class ParabolicGeometry {
 public:
  ParabolicGeometry(std::shared_ptr<const RootSystem> roots, std::vector<std::size_t> levi);

  const RootSystem& roots() const { return *roots_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return roots_; }
  std::size_t rank() const { return roots_->rank(); }

  const std::vector<std::size_t>& levi() const { return levi_; }
  bool in_levi(std::size_t i) const { return levi_mask_[i]; }
  bool is_borel() const { return levi_.empty(); }

  /// Positive roots with a nonzero coefficient outside the Levi subset.
  const std::vector<std::size_t>& nilradical() const { return nilradical_; }
  /// Nilradical roots that are not a sum of two nilradical roots.
  const std::vector<std::size_t>& generating() const { return generating_; }
  /// Positive roots of the Levi factor.
  const std::vector<std::size_t>& levi_roots() const { return levi_roots_; }

  bool is_nilradical(std::size_t root) const { return nil_mask_[root]; }
  bool is_generating(std::size_t root) const { return gen_mask_[root]; }

  /// Vertices of the quiver: weights dominant for the Levi factor.
  bool is_vertex(const Weight& lambda) const;

 private:
  std::shared_ptr<const RootSystem> roots_;
  std::vector<std::size_t> levi_;
  std::vector<bool> levi_mask_;
  std::vector<std::size_t> nilradical_;
  std::vector<std::size_t> generating_;
  std::vector<std::size_t> levi_roots_;
  std::vector<bool> nil_mask_;
  std::vector<bool> gen_mask_;
};

/// Throws std::out_of_range for Levi indices >= rank.
std::shared_ptr<const ParabolicGeometry> build_geometry(const CartanType& type,
                                                        std::vector<std::size_t> levi);

}  // namespace hsect
