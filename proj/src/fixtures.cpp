#include "klie/fixtures.hpp"

#include <cstdlib>
#include <stdexcept>

#include "klie/weyl.hpp"

namespace klie {

namespace {

RootSystem root_system_for(MatrixKind kind, int n) {
  switch (kind) {
    case MatrixKind::Su: return build(AlgebraKind::A, n - 1);
    case MatrixKind::So:
      return (n % 2 == 0) ? build(AlgebraKind::D, n / 2) : build(AlgebraKind::B, n / 2);
    case MatrixKind::Sp: return build(AlgebraKind::C, n);
  }
  throw std::logic_error("root_system_for: bad enum value");
}

int hermitian_index(MatrixKind kind, int n, const RootSystem& rs) {
  switch (kind) {
    case MatrixKind::Su: return (n + 1) / 2;  // p = ceil(n/2), q = n - p
    case MatrixKind::So: return rs.rank;      // pi_n of D_n: Z = (1/2) sum e_i
    case MatrixKind::Sp: return rs.rank;      // pi_n of C_n: Z = (1/2) sum e_i
  }
  throw std::logic_error("hermitian_index: bad enum value");
}

}  // namespace

SphereFixture make_hermitian_sphere_fixture(MatrixKind kind, int n) {
  if (kind == MatrixKind::So && n % 2 != 0)
    throw std::invalid_argument(
        "sphere fixtures for so(n) require even n; the odd case acts on the sphere "
        "through the spin representation and is out of scope");
  if ((kind == MatrixKind::Su && n < 2) || (kind == MatrixKind::So && n < 6) ||
      (kind == MatrixKind::Sp && n < 2))
    throw std::invalid_argument("sphere fixture size out of range");

  SphereFixture fx;
  fx.kind = kind;
  fx.n = n;
  fx.rs = root_system_for(kind, n);
  fx.basis = build_algebra_basis(kind, n);
  fx.z = hermitian_generator(fx.rs, hermitian_index(kind, n, fx.rs));
  fx.z_field = real_form(cartan_element(fx.basis, fx.z.coords));
  fx.z_doubled = real_form(cartan_element(fx.basis, Rational(2) * fx.z.coords));
  for (const auto& pair : fx.basis.pairs) {
    if (dot(fx.z.coords, pair.alpha.coords).is_zero()) continue;
    fx.m_fields.push_back(real_form(pair.u));
    fx.m_fields.push_back(real_form(pair.v));
  }
  return fx;
}

RootPairFields root_pair_fields(const RootBasis& basis, const RatVec& alpha) {
  for (const auto& pair : basis.pairs) {
    if (pair.alpha.coords == alpha)
      return {real_form(pair.u), real_form(pair.v),
              real_form(cartan_element(basis, alpha)), alpha};
  }
  throw std::domain_error("root_pair_fields: not a positive root of " + basis.name());
}

std::uint64_t sampling_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("KILLING_LIE_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("KILLING_LIE_SEED is not an unsigned integer");
    }
  }
  return fallback;
}

std::vector<CheckLine> run_selftest(std::uint64_t seed) {
  std::vector<CheckLine> lines;
  auto check = [&lines](const std::string& label, bool ok, const std::string& detail = "") {
    lines.push_back({label, ok, detail});
  };

  // Hermitian classification round trips at the six pinned parameter sets.
  struct Case {
    AlgebraKind kind;
    int rank, j;
    HermitianOutcome outcome;
    std::vector<SimpleFactor> factors;
  };
  const std::vector<Case> cases = {
      {AlgebraKind::A, 2, 2, HermitianOutcome::Case1, {{AlgebraKind::A, 1}}},
      {AlgebraKind::A, 3, 2, HermitianOutcome::Case1,
       {{AlgebraKind::A, 1}, {AlgebraKind::A, 1}}},
      {AlgebraKind::D, 5, 5, HermitianOutcome::Case2, {{AlgebraKind::A, 4}}},
      {AlgebraKind::B, 3, 1, HermitianOutcome::Case3, {{AlgebraKind::B, 2}}},
      {AlgebraKind::C, 2, 2, HermitianOutcome::Case4, {{AlgebraKind::A, 1}}},
      {AlgebraKind::C, 3, 3, HermitianOutcome::Case4, {{AlgebraKind::A, 2}}},
  };
  for (const auto& c : cases) {
    const RootSystem rs = build(c.kind, c.rank);
    const CartanVector z = hermitian_generator(rs, c.j);
    const auto cls = classify_hermitian_pair(rs, z);
    const auto desc = centralizer_type(rs, z);
    const auto spec = eigen_spectrum(rs, z);
    const bool ok = cls.outcome == c.outcome && desc.factors == c.factors &&
                    desc.center_dim == 1 && desc.z_spans_center &&
                    spec.entries.size() == 1 && !cls.below_threshold;
    check("Hermitian round trip " + rs.name(), ok);
  }

  // e6 / e7 exclusions.
  {
    const RootSystem e6 = build(AlgebraKind::E6, 6);
    const CartanVector z = hermitian_generator(e6, 1);
    const auto desc = centralizer_type(e6, z);
    check("e6 exclusion (k = so(10) + R)",
          classify_hermitian_pair(e6, z).outcome == HermitianOutcome::ExcludedE6 &&
              desc.factors == std::vector<SimpleFactor>{{AlgebraKind::D, 5}});
  }
  {
    const RootSystem e7 = build(AlgebraKind::E7, 7);
    const CartanVector z = hermitian_generator(e7, 7);
    const auto desc = centralizer_type(e7, z);
    check("e7 exclusion (k = e6 + R)",
          classify_hermitian_pair(e7, z).outcome == HermitianOutcome::ExcludedE7 &&
              desc.factors == std::vector<SimpleFactor>{{AlgebraKind::E6, 6}});
  }

  // -Id membership against the classification list.
  {
    bool ok = true;
    ok = ok && contains_minus_identity(build(AlgebraKind::A, 1));
    ok = ok && !contains_minus_identity(build(AlgebraKind::A, 3));
    ok = ok && contains_minus_identity(build(AlgebraKind::B, 2));
    ok = ok && contains_minus_identity(build(AlgebraKind::C, 3));
    ok = ok && contains_minus_identity(build(AlgebraKind::D, 4));
    ok = ok && !contains_minus_identity(build(AlgebraKind::D, 5));
    ok = ok && !contains_minus_identity(build(AlgebraKind::E6, 6));
    ok = ok && contains_minus_identity(build(AlgebraKind::E7, 7));
    check("-Id in W membership list", ok);
  }

  // Basis construction verifies the bracket relations and normalizations
  // exactly; any violation surfaces as an exception here.
  for (const auto& [kind, n] : std::vector<std::pair<MatrixKind, int>>{
           {MatrixKind::Su, 4}, {MatrixKind::So, 7}, {MatrixKind::So, 8},
           {MatrixKind::Sp, 3}}) {
    bool ok = true;
    std::string detail;
    try {
      (void)build_algebra_basis(kind, n);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    check("exact bracket relations " + matrix_kind_name(kind) + "(" + std::to_string(n) + ")",
          ok, detail);
  }

  // Sphere verifications.
  {
    const auto fx = make_hermitian_sphere_fixture(MatrixKind::Su, 4);
    check("su(4) example field constant length on S^7",
          is_constant_length(fx.z_doubled).constant);
    check("su(4) orthogonality g(Z, m) = 0",
          verify_orthogonality(fx.z_field, fx.m_fields, 400, seed).pass);
    RatVec alpha(4);
    alpha[0] = Rational(1);
    alpha[2] = Rational(-1);
    const auto pr = root_pair_fields(fx.basis, alpha);
    check("su(4) root-pair identities",
          verify_root_pair_identities(fx.z_field, pr.u, pr.v, pr.alpha, 400, seed).pass);
  }
  {
    const auto fx = make_hermitian_sphere_fixture(MatrixKind::So, 8);
    check("so(8) example field constant length on S^7",
          is_constant_length(fx.z_doubled).constant);
    check("so(8) orthogonality g(Z, m) = 0",
          verify_orthogonality(fx.z_field, fx.m_fields, 400, seed).pass);
    RatVec alpha(4);
    alpha[0] = Rational(1);
    alpha[1] = Rational(1);
    const auto pr = root_pair_fields(fx.basis, alpha);
    check("so(8) root-pair identities",
          verify_root_pair_identities(fx.z_field, pr.u, pr.v, pr.alpha, 400, seed).pass);
  }
  {
    const auto fx = make_hermitian_sphere_fixture(MatrixKind::So, 10);
    RatVec alpha(5), beta(5);
    alpha[0] = Rational(1);
    alpha[1] = Rational(1);
    beta[2] = Rational(1);
    beta[3] = Rational(1);
    const auto pa = root_pair_fields(fx.basis, alpha);
    const auto pb = root_pair_fields(fx.basis, beta);
    check("so(10) pairing transfer on a strongly orthogonal pair",
          verify_pairing_transfer(fx.z_field, pa.u, pa.v, pa.alpha, pb.alpha,
                           dot(alpha, beta), 400, seed)
              .pass);
  }
  {
    const auto cert = is_constant_length(real_form(so3_triple(3).f12));
    check("F_12 on S^2 rejected with witness",
          !cert.constant && cert.value_x != cert.value_y);
  }
  for (const auto& [kind, n] : std::vector<std::pair<MatrixKind, int>>{
           {MatrixKind::Su, 2}, {MatrixKind::So, 3}, {MatrixKind::Sp, 1}}) {
    const auto rep = biinvariant_all_constant(kind, n, 60, seed);
    check("bi-invariant constant length " + matrix_kind_name(kind) + "(" +
              std::to_string(n) + ")",
          rep.pass);
  }

  // Commuting unit decompositions.
  {
    const RootSystem d5 = build(AlgebraKind::D, 5);
    const auto dec = commuting_unit_decomposition(d5, hermitian_generator(d5, 5));
    check("so(10) commuting unit decomposition",
          dec.units.size() == 5 && dec.coefficient == Rational(1, 2));
    const RootSystem c3 = build(AlgebraKind::C, 3);
    const auto dec2 = commuting_unit_decomposition(c3, hermitian_generator(c3, 3));
    check("sp(3) commuting unit decomposition",
          dec2.units.size() == 3 && dec2.coefficient == Rational(1, 2));
  }

  return lines;
}

}  // namespace klie
