#pragma once

#include <string>
#include <vector>

#include "klie/rational.hpp"

namespace klie {

enum class AlgebraKind { A, B, C, D, E6, E7 };

std::string kind_name(AlgebraKind kind);
AlgebraKind kind_from_name(const std::string& name);

/// A root as an exact vector in the ambient coordinate space
/// (dimension rank+1 for A, rank for B/C/D, 8 for E6/E7).
struct Root {
  RatVec coords;

  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
};

/// An element of the Cartan subalgebra t in the same ambient coordinates.
/// Must satisfy the owning RootSystem's cartan_constraints.
struct CartanVector {
  RatVec coords;

  friend bool operator==(const CartanVector& a, const CartanVector& b) {
    return a.coords == b.coords;
  }
};

/// Root data of one compact simple Lie algebra: the positive roots, the
/// simple roots pi_1..pi_rank in their conventional numbering, and the
/// linear equations cutting t out of the ambient space (A: coordinates sum
/// to zero; E6: x6 = x7 = -x8; E7: x orthogonal to e7 + e8).
struct RootSystem {
  AlgebraKind kind;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Root> positive_roots;        // lexicographic order
  std::vector<Root> simple_roots;          // conventional numbering, not sorted
  std::vector<RatVec> cartan_constraints;  // rows c with c . x = 0

  std::string name() const { return kind_name(kind) + std::to_string(rank); }
};

/// Construct the root system of the given kind and rank.
/// Supported ranks: A l>=1, B l>=2, C l>=2, D l>=3, E6/E7 fixed.
/// Throws std::invalid_argument outside those ranges.
RootSystem build(AlgebraKind kind, int rank);

/// Parse names like "A2", "D5", "E7" (also "a2", "e6").
RootSystem build_from_name(const std::string& name);

bool satisfies_constraints(const RootSystem& rs, const RatVec& coords);
bool is_positive_root(const RootSystem& rs, const RatVec& coords);
bool is_root(const RootSystem& rs, const RatVec& coords);

/// The maximal root: the unique positive root dominating every other one.
const Root& highest_root(const RootSystem& rs);

/// Coefficients a_i of alpha = sum a_i pi_i, nonnegative integers for a
/// positive root. Throws std::domain_error if alpha is not a positive root.
std::vector<std::int64_t> simple_root_coefficients(const RootSystem& rs, const Root& alpha);

/// 1-based indices j of the non-compact simple roots: exactly those with
/// coefficient 1 in the maximal root. Each returned pi_j is cross-checked
/// against the defining property that every root has pi_j-coefficient in
/// {-1, 0, +1}.
std::vector<int> noncompact_simple_roots(const RootSystem& rs);

}  // namespace klie
