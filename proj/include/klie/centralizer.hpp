#pragma once

#include <cstddef>
#include <vector>

#include "klie/root_systems.hpp"

namespace klie {

/// Partition of the positive roots by the pairing with Z:
/// i1 holds <Z,alpha> != 0, i2 holds <Z,alpha> = 0. Both keep the
/// lexicographic order of the parent root system.
struct RootSplit {
  std::vector<Root> i1;
  std::vector<Root> i2;
};

/// One simple factor of the semisimple part of the centralizer.
struct SimpleFactor {
  AlgebraKind kind;
  int rank;

  friend bool operator==(const SimpleFactor& a, const SimpleFactor& b) {
    return a.kind == b.kind && a.rank == b.rank;
  }
};

/// Type of the centralizer k of Z: its simple factors, the dimension of its
/// center, and whether Z spans that center.
struct CentralizerDescriptor {
  std::vector<SimpleFactor> factors;  // sorted by (kind, rank)
  int center_dim = 0;
  bool z_spans_center = false;
};

struct SpectrumEntry {
  Rational lambda;   // positive
  int multiplicity;  // even: 2 * (number of roots at this pairing value)
};

/// Eigenvalue data of -L_Z^2 on m, predicted from the root pairings, plus
/// the partition of I_1 into irreducible summands.
struct SpectrumReport {
  std::vector<SpectrumEntry> entries;           // ascending lambda
  int dim_m0 = 0;                               // rank + 2 |I_2|
  std::vector<std::vector<std::size_t>> summands;  // indices into RootSplit::i1
};

RootSplit split_roots(const RootSystem& rs, const CartanVector& z);

/// True iff I_2(Z) is empty, i.e. the centralizer of Z is exactly t.
bool is_regular(const RootSystem& rs, const CartanVector& z);

/// Identify the simple factors of the root subsystem I_2(Z) by extracting
/// its indecomposable positive roots and matching the resulting Cartan
/// matrix against the known types up to simultaneous permutation.
CentralizerDescriptor centralizer_type(const RootSystem& rs, const CartanVector& z);

SpectrumReport eigen_spectrum(const RootSystem& rs, const CartanVector& z);

/// Connected components of the graph on I_1 linking alpha and beta when
/// alpha - beta or alpha + beta lies in +-I_2: the root-level picture of the
/// decomposition of m into ad(m_0)-irreducible summands.
std::vector<std::vector<std::size_t>> irreducible_summands(const RootSystem& rs,
                                                           const CartanVector& z);

/// The generator Z of the Hermitian configuration attached to the
/// non-compact simple root pi_j: <Z, pi_i> = 0 for i != j and <Z, alpha> = 1
/// on all of I_1(Z). Throws std::domain_error when j is not non-compact.
CartanVector hermitian_generator(const RootSystem& rs, int j);

enum class HermitianOutcome {
  NotHermitian,
  Case1,  // (su(p+q), su(p) + su(q) + R)
  Case2,  // (so(2n), su(n) + R)
  Case3,  // (so(p+2), so(p) + R)
  Case4,  // (sp(n), su(n) + R)
  ExcludedE6,
  ExcludedE7,
};

struct HermitianClassification {
  HermitianOutcome outcome = HermitianOutcome::NotHermitian;
  int p = 0;                 // case 1 and case 3
  int q = 0;                 // case 1
  int n = 0;                 // cases 2 and 4
  int noncompact_index = 0;  // the j singled out in the dominant chamber
  bool below_threshold = false;  // case 2 with n < 5 or case 3 with p < 5
};

/// Classify (g_1, centralizer of Z) against the Hermitian list. The input is
/// first moved to the dominant chamber; the decision is the equivalence
/// single pairing value on I_1  <=>  exactly one simple root pairs
/// nonzero, non-compact with coefficient 1 in the maximal root. Both sides
/// are computed and must agree.
HermitianClassification classify_hermitian_pair(const RootSystem& rs, const CartanVector& z);

struct CommutingUnitDecomposition {
  std::vector<CartanVector> units;  // pairwise orthonormal, commuting
  Rational coefficient;             // Z = coefficient * sum(units)
};

/// For kind D or C with Z of the Hermitian form c(+-1,...,+-1): the
/// orthonormal Cartan vectors U_i = +-e_i with Z = c sum U_i.
CommutingUnitDecomposition commuting_unit_decomposition(const RootSystem& rs,
                                                        const CartanVector& z);

std::string factor_name(const SimpleFactor& f);

}  // namespace klie
