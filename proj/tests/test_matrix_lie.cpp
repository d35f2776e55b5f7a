#include <doctest.h>

#include <set>
#include <tuple>

#include "klie/centralizer.hpp"
#include "klie/matrix_lie.hpp"

using namespace klie;

namespace {

AlgebraElement pair_u(const RootBasis& b, const RatVec& alpha) {
  for (const auto& p : b.pairs)
    if (p.alpha.coords == alpha) return p.u;
  throw std::runtime_error("root not found");
}

AlgebraElement pair_v(const RootBasis& b, const RatVec& alpha) {
  for (const auto& p : b.pairs)
    if (p.alpha.coords == alpha) return p.v;
  throw std::runtime_error("root not found");
}

RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

// deterministic small rationals for pseudo-random algebra elements
Rational wobble(unsigned& state) {
  state = state * 1103515245u + 12345u;
  return Rational(static_cast<int>(state % 7u) - 3,
                  1 + static_cast<int>((state / 7u) % 3u));
}

AlgebraElement random_element(const RootBasis& b, unsigned& state) {
  AlgebraElement x = scale(wobble(state), b.cartan.front());
  for (std::size_t k = 1; k < b.cartan.size(); ++k)
    x = add(x, scale(wobble(state), b.cartan[k]));
  for (const auto& p : b.pairs) {
    x = add(x, scale(wobble(state), p.u));
    x = add(x, scale(wobble(state), p.v));
  }
  return x;
}

}  // namespace

TEST_CASE("small bases build and self-verify") {
  // su(2): one Cartan direction, one pair
  const RootBasis su2 = build_algebra_basis(MatrixKind::Su, 2);
  CHECK(su2.cartan.size() == 1);
  CHECK(su2.pairs.size() == 1);
  CHECK(su2.dimension() == 3);

  // so(4): F_12, F_34 plus pairs for e1 -+ e2
  const RootBasis so4 = build_algebra_basis(MatrixKind::So, 4);
  CHECK(so4.cartan.size() == 2);
  CHECK(so4.pairs.size() == 2);
  CHECK(so4.dimension() == 6);

  // sp(1): one pair for 2 e1
  const RootBasis sp1 = build_algebra_basis(MatrixKind::Sp, 1);
  CHECK(sp1.pairs.size() == 1);
  CHECK(sp1.pairs[0].alpha.coords == rv({2}));
  CHECK(sp1.dimension() == 3);

  CHECK_THROWS_AS(build_algebra_basis(MatrixKind::Su, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra_basis(MatrixKind::So, 2), std::invalid_argument);
}

TEST_CASE("larger bases satisfy the root-pair bracket relations (verified in build)") {
  for (const auto& [kind, n] : std::vector<std::pair<MatrixKind, int>>{
           {MatrixKind::Su, 4}, {MatrixKind::So, 7}, {MatrixKind::So, 8},
           {MatrixKind::Sp, 3}}) {
    const RootBasis b = build_algebra_basis(kind, n);
    CHECK(b.dimension() > 0);
    // anti-Hermitian (trace-zero for su)
    for (const auto& p : b.pairs) {
      CHECK((p.u.mat.conj_transpose() + p.u.mat).is_zero());
      CHECK((p.v.mat.conj_transpose() + p.v.mat).is_zero());
      if (kind == MatrixKind::Su) CHECK(p.u.mat.trace() == GaussianRational{});
    }
  }
}

TEST_CASE("bracket basics") {
  const RootBasis so3 = build_algebra_basis(MatrixKind::So, 3);
  const auto t = so3_triple(3);
  CHECK(bracket(t.f12, t.f12).mat.is_zero());
  // Jacobi on pseudo-random triples in su(3)
  const RootBasis su3 = build_algebra_basis(MatrixKind::Su, 3);
  unsigned state = 7;
  for (int rep = 0; rep < 4; ++rep) {
    const AlgebraElement x = random_element(su3, state);
    const AlgebraElement y = random_element(su3, state);
    const AlgebraElement z = random_element(su3, state);
    const AlgebraElement jac = add(add(bracket(x, bracket(y, z)), bracket(y, bracket(z, x))),
                                   bracket(z, bracket(x, y)));
    CHECK(jac.mat.is_zero());
  }
  const RootBasis su2 = build_algebra_basis(MatrixKind::Su, 2);
  CHECK_THROWS_AS(bracket(su2.cartan[0], su3.cartan[0]), std::invalid_argument);
}

TEST_CASE("invariant form") {
  const RootBasis so5 = build_algebra_basis(MatrixKind::So, 5);
  // <F_12, F_12> = 2 and Cartan directions are 2-orthonormal
  CHECK(invariant_form(so5.cartan[0], so5.cartan[0]) == Rational(2));
  CHECK(invariant_form(so5.cartan[0], so5.cartan[1]) == Rational(0));
  CHECK(so5.form_scale == Rational(2));

  // positive on nonzero elements, Ad-invariance residual exactly zero
  unsigned state = 3;
  const RootBasis sp2 = build_algebra_basis(MatrixKind::Sp, 2);
  for (int rep = 0; rep < 3; ++rep) {
    const AlgebraElement x = random_element(sp2, state);
    const AlgebraElement y = random_element(sp2, state);
    const AlgebraElement z = random_element(sp2, state);
    if (!x.mat.is_zero()) CHECK(invariant_form(x, x).sign() > 0);
    const Rational resid =
        invariant_form(bracket(z, x), y) + invariant_form(x, bracket(z, y));
    CHECK(resid == Rational(0));
  }

  // su scale: ambient dotestimate on t carries factor 1
  const RootBasis su4 = build_algebra_basis(MatrixKind::Su, 4);
  const AlgebraElement h = cartan_element(su4, rv({1, 0, 0, -1}));
  CHECK(invariant_form(h, h) == Rational(2));  // |(1,0,0,-1)|^2 * form_scale(=1)
}

TEST_CASE("so Cartan coordinates are the block rotations F_{2i-1,2i}") {
  const RootBasis so7 = build_algebra_basis(MatrixKind::So, 7);
  for (int i = 0; i < 3; ++i) {
    RatVec e(3);
    e[i] = Rational(1);
    const GMatrix h = cartan_element(so7, e).mat;
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c) {
        Rational expected;
        if (r == 2 * static_cast<std::size_t>(i) + 1 && c == 2 * static_cast<std::size_t>(i))
          expected = Rational(1);
        if (c == 2 * static_cast<std::size_t>(i) + 1 && r == 2 * static_cast<std::size_t>(i))
          expected = Rational(-1);
        CHECK(h(r, c) == GaussianRational(expected));
      }
  }
}

TEST_CASE("killing form is the recorded multiple of the trace form") {
  unsigned state = 17;
  for (const auto& [kind, n] : std::vector<std::pair<MatrixKind, int>>{
           {MatrixKind::Su, 2}, {MatrixKind::Su, 3}, {MatrixKind::So, 5},
           {MatrixKind::Sp, 2}}) {
    const RootBasis b = build_algebra_basis(kind, n);
    for (int rep = 0; rep < 2; ++rep) {
      const AlgebraElement x = random_element(b, state);
      const AlgebraElement y = random_element(b, state);
      CHECK(killing_form(b, x, y) == -(b.killing_form_ratio * invariant_form(x, y)));
    }
  }
  CHECK(build_algebra_basis(MatrixKind::Su, 4).killing_form_ratio == Rational(8));
  CHECK(build_algebra_basis(MatrixKind::So, 7).killing_form_ratio == Rational(5));
  CHECK(build_algebra_basis(MatrixKind::Sp, 3).killing_form_ratio == Rational(8));
}

TEST_CASE("cartan_element validates input") {
  const RootBasis su3 = build_algebra_basis(MatrixKind::Su, 3);
  CHECK_THROWS_AS(cartan_element(su3, rv({1, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(cartan_element(su3, rv({1, -1})), std::invalid_argument);
  const RootBasis so6 = build_algebra_basis(MatrixKind::So, 6);
  CHECK(cartan_element(so6, rv({1, 2, 3})).mat.size() == 6);
}

TEST_CASE("ad squared eigenspaces") {
  // su(3) with Z = (1/3,1/3,-2/3): m_0 of dim 4, one level lambda = 1 of dim 4
  const RootBasis su3 = build_algebra_basis(MatrixKind::Su, 3);
  const AlgebraElement z =
      cartan_element(su3, rv({Rational(1, 3), Rational(1, 3), Rational(-2, 3)}));
  const MatrixSpectrum spec = ad_squared_eigenspaces(su3, z);
  CHECK(spec.dim_m0 == 4);
  REQUIRE(spec.levels.size() == 1);
  CHECK(spec.levels[0].first == Rational(1));
  CHECK(spec.levels[0].second == 4);

  // so(7) with Z = e1: single level of dim 10, kernel of dim 11
  const RootBasis so7 = build_algebra_basis(MatrixKind::So, 7);
  const MatrixSpectrum s7 = ad_squared_eigenspaces(so7, cartan_element(so7, rv({1, 0, 0})));
  CHECK(s7.dim_m0 == 11);
  REQUIRE(s7.levels.size() == 1);
  CHECK(s7.levels[0].first == Rational(1));
  CHECK(s7.levels[0].second == 10);

  // Z = 0: everything is the kernel
  const MatrixSpectrum s0 = ad_squared_eigenspaces(su3, cartan_element(su3, rv({0, 0, 0})));
  CHECK(s0.dim_m0 == 8);
  CHECK(s0.levels.empty());

  // non-Cartan input is rejected
  CHECK_THROWS_AS(ad_squared_eigenspaces(su3, su3.pairs[0].u), std::invalid_argument);
}

TEST_CASE("sigma") {
  const RootBasis su4 = build_algebra_basis(MatrixKind::Su, 4);
  const AlgebraElement z = cartan_element(
      su4, rv({Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)}));
  const RatVec alpha = rv({1, 0, -1, 0});
  const AlgebraElement u = pair_u(su4, alpha), v = pair_v(su4, alpha);
  // <Z, alpha> = 1, so sigma(U) = V and sigma(V) = -U
  CHECK(sigma(su4, z, u).mat == v.mat);
  CHECK(sigma(su4, z, sigma(su4, z, u)).mat == scale(Rational(-1), u).mat);
  // sigma is undefined on the centralizer
  CHECK_THROWS_AS(sigma(su4, z, pair_u(su4, rv({1, -1, 0, 0}))), std::domain_error);
  // mixing eigenspaces is a domain error
  const AlgebraElement mixed = add(u, pair_u(su4, rv({1, -1, 0, 0})));
  CHECK_THROWS_AS(sigma(su4, z, mixed), std::domain_error);
}

TEST_CASE("sigma squares to minus the identity on every positive eigenspace") {
  const RootBasis so8 = build_algebra_basis(MatrixKind::So, 8);
  const AlgebraElement z = cartan_element(so8, rv({2, 1, 1, 0}));
  for (const auto& p : so8.pairs) {
    if (bracket(z, p.u).mat.is_zero()) continue;
    for (const AlgebraElement* x : {&p.u, &p.v})
      CHECK(sigma(so8, z, sigma(so8, z, *x)).mat == scale(Rational(-1), *x).mat);
  }
}

TEST_CASE("graded brackets") {
  const RootBasis so8 = build_algebra_basis(MatrixKind::So, 8);
  const Rational h(1, 2);
  const AlgebraElement z = cartan_element(so8, rv({h, h, h, h}));

  // [X, sigma(X)]^+ = 0
  const AlgebraElement u = pair_u(so8, rv({1, 1, 0, 0}));
  const auto gb = graded_brackets(so8, z, u, sigma(so8, z, u));
  CHECK(gb.plus.mat.is_zero());
  CHECK(add(gb.plus, gb.minus).mat == bracket(u, sigma(so8, z, u)).mat);

  // equal eigenvalues push [U,V]^- into m_0
  const AlgebraElement w = pair_u(so8, rv({0, 0, 1, 1}));
  const auto gb2 = graded_brackets(so8, z, u, w);
  CHECK((gb2.minus.mat.is_zero() || bracket(z, gb2.minus).mat.is_zero()));

  // all pair combinations keep the grading (checked inside graded_brackets)
  const AlgebraElement z2 = cartan_element(so8, rv({2, 1, 0, 0}));
  for (const auto& p : so8.pairs) {
    if (bracket(z2, p.u).mat.is_zero()) continue;
    for (const auto& q : so8.pairs) {
      if (bracket(z2, q.u).mat.is_zero()) continue;
      CHECK_NOTHROW(graded_brackets(so8, z2, p.u, q.v));
    }
  }
}

TEST_CASE("h vector") {
  const RootBasis su4 = build_algebra_basis(MatrixKind::Su, 4);
  const Rational h(1, 2);
  const AlgebraElement z = cartan_element(su4, rv({h, h, -h, -h}));
  const RatVec alpha = rv({1, 0, -1, 0});
  // h(U_alpha) = [U, V] = alpha as a matrix
  CHECK(h_vector(su4, z, pair_u(su4, alpha)).mat == cartan_element(su4, alpha).mat);
  // h(0) = 0
  CHECK(h_vector(su4, z, scale(Rational(0), z)).mat.is_zero());
  // random element of m_1: h(X) lands in m_0 (asserted inside h_vector)
  unsigned state = 11;
  AlgebraElement x = scale(Rational(0), z);
  for (const auto& p : su4.pairs) {
    if (bracket(z, p.u).mat.is_zero()) continue;
    x = add(x, add(scale(wobble(state), p.u), scale(wobble(state), p.v)));
  }
  CHECK_NOTHROW(h_vector(su4, z, x));
}

TEST_CASE("u_ideal") {
  // h = su(2) + su(2) block diagonal in su(4), p = its orthocomplement:
  // u = 0 because su(4) is simple.
  const RootBasis su4 = build_algebra_basis(MatrixKind::Su, 4);
  std::vector<AlgebraElement> h_list, p_list;
  const RatVec top = rv({1, -1, 0, 0}), bottom = rv({0, 0, 1, -1});
  h_list.push_back(cartan_element(su4, top));
  h_list.push_back(pair_u(su4, top));
  h_list.push_back(pair_v(su4, top));
  h_list.push_back(cartan_element(su4, bottom));
  h_list.push_back(pair_u(su4, bottom));
  h_list.push_back(pair_v(su4, bottom));
  p_list.push_back(cartan_element(su4, rv({Rational(1, 2), Rational(1, 2), Rational(-1, 2),
                                           Rational(-1, 2)})));
  for (const auto& pr : su4.pairs) {
    if (pr.alpha.coords == top || pr.alpha.coords == bottom) continue;
    p_list.push_back(pr.u);
    p_list.push_back(pr.v);
  }
  CHECK(u_ideal(su4, h_list, p_list).empty());

  // h = g, p = 0: u = g
  std::vector<AlgebraElement> all;
  for (const auto& c : su4.cartan) all.push_back(c);
  for (const auto& pr : su4.pairs) {
    all.push_back(pr.u);
    all.push_back(pr.v);
  }
  CHECK(u_ideal(su4, all, {}).size() == all.size());

  // non-orthogonal inputs are rejected
  std::vector<AlgebraElement> bad = p_list;
  bad.push_back(pair_u(su4, top));
  CHECK_THROWS_AS(u_ideal(su4, h_list, bad), std::invalid_argument);
}

TEST_CASE("sigma preserves each irreducible summand") {
  const RootBasis sp2 = build_algebra_basis(MatrixKind::Sp, 2);
  const AlgebraElement z = cartan_element(sp2, rv({1, 0}));
  for (const auto& comp : matrix_summand_partition(sp2, z)) {
    // form-orthogonality of the blocks makes membership a projection check
    for (auto idx : comp)
      for (const AlgebraElement* x : {&sp2.pairs[idx].u, &sp2.pairs[idx].v}) {
        const AlgebraElement sx = sigma(sp2, z, *x);
        for (std::size_t other = 0; other < sp2.pairs.size(); ++other) {
          if (std::find(comp.begin(), comp.end(), other) != comp.end()) continue;
          CHECK(invariant_form(sx, sp2.pairs[other].u) == Rational(0));
          CHECK(invariant_form(sx, sp2.pairs[other].v) == Rational(0));
        }
      }
  }
}

TEST_CASE("u_ideal on the Hermitian so(10) configuration") {
  const RootBasis so10 = build_algebra_basis(MatrixKind::So, 10);
  const Rational h(1, 2);
  const AlgebraElement z = cartan_element(so10, rv({h, h, h, h, h}));
  std::vector<AlgebraElement> k_list, m_list;
  for (const auto& c : so10.cartan) k_list.push_back(c);
  for (const auto& pr : so10.pairs) {
    const bool in_m = !bracket(z, pr.u).mat.is_zero();
    (in_m ? m_list : k_list).push_back(pr.u);
    (in_m ? m_list : k_list).push_back(pr.v);
  }
  CHECK(u_ideal(so10, k_list, m_list).empty());
}

TEST_CASE("u_ideal on the Hermitian so(8) configuration") {
  const RootBasis so8 = build_algebra_basis(MatrixKind::So, 8);
  const Rational h(1, 2);
  const AlgebraElement z = cartan_element(so8, rv({h, h, h, h}));
  std::vector<AlgebraElement> k_list, m_list;
  for (const auto& c : so8.cartan) k_list.push_back(c);
  for (const auto& pr : so8.pairs) {
    const bool in_m = !bracket(z, pr.u).mat.is_zero();
    (in_m ? m_list : k_list).push_back(pr.u);
    (in_m ? m_list : k_list).push_back(pr.v);
  }
  CHECK(u_ideal(so8, k_list, m_list).empty());
}

TEST_CASE("so3 triple") {
  const auto t = so3_triple(5);
  CHECK(bracket(t.f23, bracket(t.f23, t.f12)).mat == scale(Rational(-1), t.f12).mat);
  CHECK(invariant_form(t.f12, t.f23) == Rational(0));
  CHECK(invariant_form(t.f12, t.f12) == Rational(2));
  CHECK_THROWS_AS(so3_triple(2), std::invalid_argument);
}

TEST_CASE("matrix summand partition matches the root-level rule") {
  for (const auto& [kind, n, akind, arank] :
       std::vector<std::tuple<MatrixKind, int, AlgebraKind, int>>{
           {MatrixKind::Su, 4, AlgebraKind::A, 3},
           {MatrixKind::So, 7, AlgebraKind::B, 3},
           {MatrixKind::Sp, 2, AlgebraKind::C, 2}}) {
    const RootBasis basis = build_algebra_basis(kind, n);
    const RootSystem rs = build(akind, arank);
    RatVec x(basis.ambient_dim);
    for (int i = 0; i < basis.ambient_dim; ++i) x[i] = Rational(i % 2, 2);
    if (kind == MatrixKind::Su) {
      Rational mean;
      for (const auto& c : x) mean += c;
      mean = mean / Rational(basis.ambient_dim);
      for (auto& c : x) c -= mean;
    }
    const CartanVector z{x};

    // matrix-level partition, mapped to root coordinate sets
    std::set<std::set<std::string>> matrix_parts;
    for (const auto& comp : matrix_summand_partition(basis, cartan_element(basis, x))) {
      std::set<std::string> part;
      for (auto idx : comp) part.insert(vec_str(basis.pairs[idx].alpha.coords));
      matrix_parts.insert(part);
    }
    std::set<std::set<std::string>> root_parts;
    const RootSplit split = split_roots(rs, z);
    for (const auto& comp : irreducible_summands(rs, z)) {
      std::set<std::string> part;
      for (auto idx : comp) part.insert(vec_str(split.i1[idx].coords));
      root_parts.insert(part);
    }
    CHECK(matrix_parts == root_parts);
  }
}
