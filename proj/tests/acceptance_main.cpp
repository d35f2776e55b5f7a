// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything exact is checked with rational arithmetic; the sphere
// checks run 1000 seeded samples at the stated tolerances.

#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "klie/centralizer.hpp"
#include "klie/fixtures.hpp"
#include "klie/geometry_verifier.hpp"
#include "klie/matrix_lie.hpp"
#include "klie/root_systems.hpp"
#include "klie/weyl.hpp"

using namespace klie;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << label << note
            << "\n";
  if (!ok) ++g_failures;
}

RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

// deterministic rational Cartan vectors for the oracle cross-check
RatVec seeded_cartan(int ambient, bool traceless, std::uint64_t& state) {
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  RatVec x(ambient);
  for (int i = 0; i < ambient; ++i)
    x[i] = Rational(static_cast<std::int64_t>(next() % 9) - 4,
                    1 + static_cast<std::int64_t>(next() % 2));
  if (traceless) {
    Rational mean;
    for (const auto& c : x) mean += c;
    mean = mean / Rational(ambient);
    for (auto& c : x) c -= mean;
  }
  return x;
}

double sampled_length_spread(const SphereField& f, int samples, std::uint64_t seed) {
  UnitSampler rng(seed);
  const auto g = f.generator_d();
  const std::size_t n = f.space_dim();
  double lo = 1e300, hi = -1e300;
  for (int s = 0; s < samples; ++s) {
    const auto x = rng.unit_vector(n);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double yi = 0.0;
      for (std::size_t j = 0; j < n; ++j) yi += g[i * n + j] * x[j];
      norm2 += yi * yi;
    }
    lo = std::min(lo, norm2);
    hi = std::max(hi, norm2);
  }
  return hi - lo;
}

}  // namespace

int main() {
  const std::uint64_t seed = sampling_seed(2024);

  criterion(1, "positive-root counts match the closed forms up to rank 8", [] {
    bool ok = true;
    for (int l = 1; l <= 8; ++l)
      ok &= build(AlgebraKind::A, l).positive_roots.size() ==
            static_cast<std::size_t>(l * (l + 1) / 2);
    for (int l = 2; l <= 8; ++l) {
      ok &= build(AlgebraKind::B, l).positive_roots.size() == static_cast<std::size_t>(l * l);
      ok &= build(AlgebraKind::C, l).positive_roots.size() == static_cast<std::size_t>(l * l);
    }
    for (int l = 3; l <= 8; ++l)
      ok &= build(AlgebraKind::D, l).positive_roots.size() ==
            static_cast<std::size_t>(l * (l - 1));
    ok &= build(AlgebraKind::E6, 6).positive_roots.size() == 36;
    ok &= build(AlgebraKind::E7, 7).positive_roots.size() == 63;
    return ok;
  });

  criterion(2, "maximal-root coefficient vectors reproduce the tabulated formulas", [] {
    bool ok = true;
    auto coeffs = [](const RootSystem& rs) {
      return simple_root_coefficients(rs, highest_root(rs));
    };
    for (int l = 1; l <= 8; ++l)
      ok &= coeffs(build(AlgebraKind::A, l)) == std::vector<std::int64_t>(l, 1);
    for (int l = 2; l <= 8; ++l) {
      std::vector<std::int64_t> b(l, 2);
      b[0] = 1;
      ok &= coeffs(build(AlgebraKind::B, l)) == b;
      std::vector<std::int64_t> c(l, 2);
      c[l - 1] = 1;
      ok &= coeffs(build(AlgebraKind::C, l)) == c;
    }
    for (int l = 3; l <= 8; ++l) {
      std::vector<std::int64_t> d(l, 2);
      d[0] = d[l - 2] = d[l - 1] = 1;
      ok &= coeffs(build(AlgebraKind::D, l)) == d;
    }
    ok &= coeffs(build(AlgebraKind::E6, 6)) == std::vector<std::int64_t>{1, 2, 2, 3, 2, 1};
    ok &= coeffs(build(AlgebraKind::E7, 7)) ==
          std::vector<std::int64_t>{2, 2, 3, 4, 3, 2, 1};
    return ok;
  });

  criterion(3, "Hermitian classification round trips (su3, su4, so10, so7, sp2, sp3)", [] {
    struct Fixture {
      AlgebraKind kind;
      int rank, j;
      HermitianOutcome outcome;
      std::vector<SimpleFactor> factors;
      int p, q, n;
    };
    const std::vector<Fixture> fixtures = {
        {AlgebraKind::A, 2, 2, HermitianOutcome::Case1, {{AlgebraKind::A, 1}}, 2, 1, 0},
        {AlgebraKind::A, 3, 2, HermitianOutcome::Case1,
         {{AlgebraKind::A, 1}, {AlgebraKind::A, 1}}, 2, 2, 0},
        {AlgebraKind::D, 5, 5, HermitianOutcome::Case2, {{AlgebraKind::A, 4}}, 0, 0, 5},
        {AlgebraKind::B, 3, 1, HermitianOutcome::Case3, {{AlgebraKind::B, 2}}, 5, 0, 0},
        {AlgebraKind::C, 2, 2, HermitianOutcome::Case4, {{AlgebraKind::A, 1}}, 0, 0, 2},
        {AlgebraKind::C, 3, 3, HermitianOutcome::Case4, {{AlgebraKind::A, 2}}, 0, 0, 3},
    };
    bool ok = true;
    for (const auto& f : fixtures) {
      const RootSystem rs = build(f.kind, f.rank);
      const CartanVector z = hermitian_generator(rs, f.j);
      const auto cls = classify_hermitian_pair(rs, z);
      const auto desc = centralizer_type(rs, z);
      const auto spec = eigen_spectrum(rs, z);
      ok &= cls.outcome == f.outcome;
      ok &= desc.factors == f.factors;
      ok &= desc.center_dim == 1;
      ok &= desc.z_spans_center;
      ok &= spec.entries.size() == 1;
      ok &= !cls.below_threshold;
      if (f.outcome == HermitianOutcome::Case1) ok &= cls.p == f.p && cls.q == f.q;
      if (f.outcome == HermitianOutcome::Case2 || f.outcome == HermitianOutcome::Case4)
        ok &= cls.n == f.n;
      if (f.outcome == HermitianOutcome::Case3) ok &= cls.p == f.p;
    }
    return ok;
  });

  criterion(4, "e6/e7 pairs are recognized and excluded", [] {
    const RootSystem e6 = build(AlgebraKind::E6, 6);
    const Rational t(2, 3), h(1, 2);
    const CartanVector z6{rv({0, 0, 0, 0, 0, -t, -t, t})};
    const CartanVector z7{rv({0, 0, 0, 0, 0, 1, -h, h})};
    bool ok = hermitian_generator(e6, 1).coords == z6.coords;
    ok &= centralizer_type(e6, z6).factors == std::vector<SimpleFactor>{{AlgebraKind::D, 5}};
    ok &= classify_hermitian_pair(e6, z6).outcome == HermitianOutcome::ExcludedE6;
    const RootSystem e7 = build(AlgebraKind::E7, 7);
    ok &= hermitian_generator(e7, 7).coords == z7.coords;
    ok &= centralizer_type(e7, z7).factors == std::vector<SimpleFactor>{{AlgebraKind::E6, 6}};
    ok &= classify_hermitian_pair(e7, z7).outcome == HermitianOutcome::ExcludedE7;
    return ok;
  });

  criterion(5, "-Id membership matches the classification list", [] {
    bool ok = true;
    for (int l = 1; l <= 5; ++l)
      ok &= contains_minus_identity(build(AlgebraKind::A, l)) == (l == 1);
    for (int l = 2; l <= 4; ++l) {
      ok &= contains_minus_identity(build(AlgebraKind::B, l));
      ok &= contains_minus_identity(build(AlgebraKind::C, l));
    }
    for (int l = 3; l <= 6; ++l)
      ok &= contains_minus_identity(build(AlgebraKind::D, l)) == (l % 2 == 0);
    ok &= !contains_minus_identity(build(AlgebraKind::E6, 6));
    ok &= contains_minus_identity(build(AlgebraKind::E7, 7));
    return ok;
  });

  criterion(6, "exact bracket calculus on su(4), so(7), so(8), sp(3)", [] {
    bool ok = true;
    for (const auto& [kind, n, j] : std::vector<std::tuple<MatrixKind, int, int>>{
             {MatrixKind::Su, 4, 2},
             {MatrixKind::So, 7, 1},
             {MatrixKind::So, 8, 4},
             {MatrixKind::Sp, 3, 3}}) {
      // construction verifies the bracket relations, [U,V] = alpha, and the
      // form normalization exactly; failures surface as exceptions
      const RootBasis basis = build_algebra_basis(kind, n);
      const RootSystem rs = (kind == MatrixKind::Su) ? build(AlgebraKind::A, n - 1)
                            : (kind == MatrixKind::So && n % 2 == 0)
                                ? build(AlgebraKind::D, n / 2)
                            : (kind == MatrixKind::So) ? build(AlgebraKind::B, n / 2)
                                                       : build(AlgebraKind::C, n);
      const CartanVector zc = hermitian_generator(rs, j);
      const AlgebraElement z = cartan_element(basis, zc.coords);

      std::vector<AlgebraElement> k_list, m_list;
      for (const auto& c : basis.cartan) k_list.push_back(c);
      for (const auto& p : basis.pairs) {
        const bool in_m = !bracket(z, p.u).mat.is_zero();
        (in_m ? m_list : k_list).push_back(p.u);
        (in_m ? m_list : k_list).push_back(p.v);
      }

      // sigma^2 = -Id and h(X) in m_0 on every I_1 pair
      for (const auto& p : basis.pairs) {
        if (bracket(z, p.u).mat.is_zero()) continue;
        ok &= sigma(basis, z, sigma(basis, z, p.u)).mat == scale(Rational(-1), p.u).mat;
        ok &= sigma(basis, z, sigma(basis, z, p.v)).mat == scale(Rational(-1), p.v).mat;
        ok &= bracket(z, h_vector(basis, z, p.u)).mat.is_zero();
      }
      // grading memberships, asserted inside graded_brackets
      for (const auto& p : basis.pairs) {
        if (bracket(z, p.u).mat.is_zero()) continue;
        for (const auto& q : basis.pairs) {
          if (bracket(z, q.u).mat.is_zero()) continue;
          (void)graded_brackets(basis, z, p.u, q.u);
          (void)graded_brackets(basis, z, p.u, q.v);
        }
      }
      // ideal lemma: u = 0 for the simple algebra, and h = g gives u = g
      ok &= u_ideal(basis, k_list, m_list).empty();
      std::vector<AlgebraElement> all = k_list;
      for (const auto& m : m_list) all.push_back(m);
      ok &= u_ideal(basis, all, {}).size() == all.size();
    }
    return ok;
  });

  criterion(7, "matrix-level spectra match the root-level predictions (5 seeded Z each)",
            [] {
    bool ok = true;
    std::uint64_t state = 0xfeedULL;
    for (const auto& [kind, n, akind, arank] :
         std::vector<std::tuple<MatrixKind, int, AlgebraKind, int>>{
             {MatrixKind::Su, 4, AlgebraKind::A, 3},
             {MatrixKind::So, 7, AlgebraKind::B, 3},
             {MatrixKind::So, 8, AlgebraKind::D, 4},
             {MatrixKind::Sp, 3, AlgebraKind::C, 3}}) {
      const RootBasis basis = build_algebra_basis(kind, n);
      const RootSystem rs = build(akind, arank);
      for (int rep = 0; rep < 5; ++rep) {
        const RatVec x = seeded_cartan(basis.ambient_dim, kind == MatrixKind::Su, state);
        const MatrixSpectrum ms = ad_squared_eigenspaces(basis, cartan_element(basis, x));
        const SpectrumReport sr = eigen_spectrum(rs, {x});
        ok &= ms.dim_m0 == sr.dim_m0;
        ok &= ms.levels.size() == sr.entries.size();
        for (std::size_t k = 0; k < ms.levels.size() && k < sr.entries.size(); ++k) {
          ok &= ms.levels[k].first == sr.entries[k].lambda;
          ok &= ms.levels[k].second == sr.entries[k].multiplicity;
        }
        // the summand partition agrees with the matrix-level oracle
        std::set<std::set<std::string>> matrix_parts, root_parts;
        for (const auto& comp :
             matrix_summand_partition(basis, cartan_element(basis, x))) {
          std::set<std::string> part;
          for (auto idx : comp) part.insert(vec_str(basis.pairs[idx].alpha.coords));
          matrix_parts.insert(part);
        }
        const RootSplit split = split_roots(rs, {x});
        for (const auto& comp : irreducible_summands(rs, {x})) {
          std::set<std::string> part;
          for (auto idx : comp) part.insert(vec_str(split.i1[idx].coords));
          root_parts.insert(part);
        }
        ok &= matrix_parts == root_parts;
      }
    }
    return ok;
  });

  criterion(8, "sphere constant-length: examples pass exactly, F_12 on S^2 rejected",
            [seed] {
    bool ok = true;
    // su(4): Z = diag(i, i, -i, -i) on S^7
    const RootBasis su4 = build_algebra_basis(MatrixKind::Su, 4);
    const SphereField ex4 = real_form(cartan_element(su4, rv({1, 1, -1, -1})));
    auto cert = is_constant_length(ex4);
    ok &= cert.constant && cert.c == Rational(1);
    ok &= sampled_length_spread(ex4, 1000, seed) < 1e-9;
    // so(8): J = sum F_{2i-1,2i} on S^7
    const RootBasis so8 = build_algebra_basis(MatrixKind::So, 8);
    const SphereField ex2 = real_form(cartan_element(so8, rv({1, 1, 1, 1})));
    cert = is_constant_length(ex2);
    ok &= cert.constant && cert.c == Rational(1);
    ok &= sampled_length_spread(ex2, 1000, seed) < 1e-9;
    // sp(2): Z = diag(i, i) on S^7
    const RootBasis sp2 = build_algebra_basis(MatrixKind::Sp, 2);
    const SphereField ex8 = real_form(cartan_element(sp2, rv({1, 1})));
    cert = is_constant_length(ex8);
    ok &= cert.constant && cert.c == Rational(1);
    ok &= sampled_length_spread(ex8, 1000, seed) < 1e-9;
    // F_12 on S^2: rejected with an explicit witness pair
    const auto bad = is_constant_length(real_form(so3_triple(3).f12));
    ok &= !bad.constant;
    ok &= bad.value_x != bad.value_y;
    ok &= sampled_length_spread(real_form(so3_triple(3).f12), 1000, seed) > 1e-3;
    return ok;
  });

  criterion(9, "orthogonality, root-pair and pairing-transfer identities at 1e-10",
            [seed] {
    bool ok = true;
    const auto su = make_hermitian_sphere_fixture(MatrixKind::Su, 4);
    ok &= verify_orthogonality(su.z_field, su.m_fields, 1000, seed).pass;
    const auto pr_su = root_pair_fields(su.basis, rv({1, 0, -1, 0}));
    ok &= verify_root_pair_identities(su.z_field, pr_su.u, pr_su.v, pr_su.alpha, 1000, seed).pass;

    const auto so = make_hermitian_sphere_fixture(MatrixKind::So, 8);
    ok &= verify_orthogonality(so.z_field, so.m_fields, 1000, seed).pass;
    const auto pr_so = root_pair_fields(so.basis, rv({1, 1, 0, 0}));
    ok &= verify_root_pair_identities(so.z_field, pr_so.u, pr_so.v, pr_so.alpha, 1000, seed).pass;

    const auto so10 = make_hermitian_sphere_fixture(MatrixKind::So, 10);
    const RatVec alpha = rv({1, 1, 0, 0, 0}), beta = rv({0, 0, 1, 1, 0});
    const auto pa = root_pair_fields(so10.basis, alpha);
    const auto pb = root_pair_fields(so10.basis, beta);
    const auto rep = verify_pairing_transfer(so10.z_field, pa.u, pa.v, pa.alpha, pb.alpha,
                                      dot(alpha, beta), 1000, seed);
    ok &= rep.pass && rep.status == "ok";
    return ok;
  });

  criterion(10, "commuting unit decompositions for so(10), sp(2), sp(3)", [] {
    bool ok = true;
    for (const auto& [akind, rank, mkind, n] :
         std::vector<std::tuple<AlgebraKind, int, MatrixKind, int>>{
             {AlgebraKind::D, 5, MatrixKind::So, 10},
             {AlgebraKind::C, 2, MatrixKind::Sp, 2},
             {AlgebraKind::C, 3, MatrixKind::Sp, 3}}) {
      const RootSystem rs = build(akind, rank);
      const CartanVector z = hermitian_generator(rs, rank);
      const auto dec = commuting_unit_decomposition(rs, z);
      ok &= static_cast<int>(dec.units.size()) == rank;
      ok &= dec.coefficient == Rational(1, 2);
      RatVec sum(rs.ambient_dim);
      for (const auto& u : dec.units) sum = sum + u.coords;
      ok &= dec.coefficient * sum == z.coords;
      for (std::size_t i = 0; i < dec.units.size(); ++i)
        for (std::size_t k = 0; k < dec.units.size(); ++k)
          ok &= dot(dec.units[i].coords, dec.units[k].coords) ==
                (i == k ? Rational(1) : Rational(0));
      // the U_i commute as matrices
      const RootBasis basis = build_algebra_basis(mkind, n);
      for (std::size_t i = 0; i < dec.units.size(); ++i)
        for (std::size_t k = 0; k < dec.units.size(); ++k)
          ok &= bracket(cartan_element(basis, dec.units[i].coords),
                        cartan_element(basis, dec.units[k].coords))
                    .mat.is_zero();
    }
    return ok;
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
