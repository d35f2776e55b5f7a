#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klie/centralizer.hpp"
#include "klie/geometry_verifier.hpp"
#include "klie/matrix_lie.hpp"
#include "klie/root_systems.hpp"

namespace klie {

/// A Hermitian configuration realized on the round sphere: the algebra in
/// its defining representation, the generator Z with <Z, alpha> = 1 on
/// I_1(Z), and the real forms of Z and of the I_1 root spaces.
/// Supported: su(n) on S^{2n-1}, so(2l) on S^{2l-1}, sp(n) on S^{4n-1}.
struct SphereFixture {
  MatrixKind kind;
  int n = 0;
  RootSystem rs;
  RootBasis basis;
  CartanVector z;          // hermitian generator, ambient coordinates
  SphereField z_field;     // real form of the Cartan element of z
  SphereField z_doubled;   // 2 Z: the diag(i,...,i,-i,...,-i) style examples
  std::vector<SphereField> m_fields;  // U, V for every alpha in I_1(Z)
};

SphereFixture make_hermitian_sphere_fixture(MatrixKind kind, int n);

struct RootPairFields {
  SphereField u, v, alpha;
  RatVec alpha_coords;
};

/// Real forms of (U_alpha, V_alpha, alpha) for one positive root.
RootPairFields root_pair_fields(const RootBasis& basis, const RatVec& alpha);

/// One pass/fail line of the built-in fixture suite.
struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

/// The fixture battery behind `klie selftest`: Hermitian-case round trips, the
/// e6/e7 exclusions, -Id membership, exact bracket relations, and the
/// sphere verifications.
std::vector<CheckLine> run_selftest(std::uint64_t seed);

/// Seed from KILLING_LIE_SEED when set, otherwise the given default.
std::uint64_t sampling_seed(std::uint64_t fallback);

}  // namespace klie
