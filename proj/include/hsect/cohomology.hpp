#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hsect/bundle_rep.hpp"
#include "hsect/rational.hpp"

namespace hsect {

struct GModuleEntry {
  Weight weight;                ///< dominant highest weight nu
  std::int64_t multiplicity = 0;
  Integer dimension = 0;        ///< dim Sigma^nu, per copy

  bool operator==(const GModuleEntry&) const = default;
};

/// Direct sum of irreducible G-modules, sorted by weight with distinct
/// weights. `warnings` carries caveats about the input and is not part of
/// equality.
struct GModuleDecomposition {
  std::vector<GModuleEntry> entries;
  std::vector<std::string> warnings;

  Integer total_dimension() const;
  bool empty() const { return entries.empty(); }
  bool operator==(const GModuleDecomposition& other) const { return entries == other.entries; }

  /// Adds m copies of Sigma^nu, merging with an existing entry.
  void add(const Weight& nu, std::int64_t m, const Integer& dim);
  GModuleDecomposition& operator+=(const GModuleDecomposition& other);
};

/// A dominant vertex lambda whose H^0 is the H^1 of mu = s_j . lambda,
/// mu = lambda - k alpha_j with k = lambda_j + 1.
struct Pairing {
  Weight lambda;
  std::size_t j = 0;
  int k = 0;
  Weight mu;

  bool operator==(const Pairing&) const = default;
};

/// H^i of the graded bundle, summand by summand.
GModuleDecomposition h_graded(const QuiverRep& rep, int degree);

std::vector<Pairing> find_pairings(const QuiverRep& rep);

/// Product of the k arrow matrices along lambda, lambda - alpha_j, ..., mu.
/// Missing vertices or arrows make it the zero map.
Matrix compose_path(const QuiverRep& rep, const Pairing& p);

/// One block of c_0: the path map for a pairing, V_lambda -> V_mu.
struct C0Block {
  Pairing pairing;
  Matrix map;
};

std::vector<C0Block> c0_blocks(const QuiverRep& rep);

/// dim of the common kernel of `blocks`, all maps out of a space of dimension
/// `source_dim`.
std::size_t common_kernel_dimension(std::size_t source_dim, const std::vector<Matrix>& blocks);

/// H^0 as the kernel of c_0. Validates the input and, for Borel geometries,
/// the relations (throws ValidationError). For other geometries the relations
/// are unchecked and a warning is attached.
GModuleDecomposition h0(const QuiverRep& rep);

/// H^0 of an A_m-type bundle, cross-checked against the interval splitting.
/// Throws std::invalid_argument for other supports and std::logic_error if
/// the two computations disagree.
GModuleDecomposition h0_am(const QuiverRep& rep);

/// Sum over the support of dim V_lambda times the Euler characteristic of E_lambda.
Integer euler(const QuiverRep& rep);

}  // namespace hsect
