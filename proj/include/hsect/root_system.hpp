#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hsect {

/// Simply-laced Cartan type: A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8.
struct CartanType {
  char series = 'A';
  int rank = 1;

  /// Parses "A2", "D4", "E6" ... Throws std::invalid_argument.
  static CartanType parse(std::string_view text);
  std::string str() const;

  auto operator<=>(const CartanType&) const = default;
};

/// Integral weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  /// All coordinates non-negative.
  bool is_dominant() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  Weight operator*(int k) const;

  auto operator<=>(const Weight&) const = default;

  /// "a,b,c"
  std::string str() const;

 private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// A root carried in both coordinate systems. `simple` holds the coefficients
/// over the simple roots, `fund` the fundamental-weight coordinates (C * simple).
struct Root {
  std::vector<int> simple;
  Weight fund;

  int height() const;
  bool is_positive() const { return height() > 0; }
  Root operator-() const;
  auto operator<=>(const Root& other) const { return simple <=> other.simple; }
  bool operator==(const Root& other) const { return simple == other.simple; }
};

/// Root system of a simply-laced type with Bourbaki numbering. Immutable after
/// construction.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// Ordered by height, then lexicographically on simple coordinates.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(std::size_t i) const { return positive_[simple_index_[i]]; }
  Weight rho() const { return Weight(std::vector<int>(rank(), 1)); }

  /// Root with the given simple coordinates; fund coordinates filled in.
  Root make_root(const std::vector<int>& simple) const;
  bool is_root(const std::vector<int>& simple) const;
  /// Index into positive_roots(), if `simple` is a positive root.
  std::optional<std::size_t> positive_index(const std::vector<int>& simple) const;
  /// Index of the simple root alpha_i inside positive_roots().
  std::size_t simple_position(std::size_t i) const { return simple_index_[i]; }

  /// (x, y) with all roots of squared length 2.
  int inner(const Weight& x, const Root& y) const;
  int inner(const Root& x, const Root& y) const { return inner(x.fund, y); }

  /// lambda - (lambda, alpha) alpha
  Weight reflect(const Weight& lambda, const Root& alpha) const;

  /// Bimultiplicative sign function on the root lattice fixing Chevalley signs.
  int asymmetry(const Root& a, const Root& b) const;

  /// N_{ab} with [e_a, e_b] = N_{ab} e_{a+b}; zero when a+b is not a root.
  /// Throws std::invalid_argument for a = +-b.
  int chevalley(const Root& a, const Root& b) const;

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::vector<std::size_t> simple_index_;
  std::map<std::vector<int>, std::size_t> lookup_;
};

/// Bourbaki-numbered Cartan matrix of a simply-laced type.
std::vector<std::vector<int>> cartan_matrix(const CartanType& type);

}  // namespace hsect
