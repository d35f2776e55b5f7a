#include "klie/weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "klie/linalg.hpp"

namespace klie {

namespace {

RatVec reflect_coords(const Root& alpha, const RatVec& x) {
  const Rational factor = Rational(2) * dot(x, alpha.coords) / dot(alpha.coords, alpha.coords);
  return x - factor * alpha.coords;
}

std::size_t negative_pairing_count(const RootSystem& rs, const RatVec& x) {
  std::size_t n = 0;
  for (const auto& alpha : rs.positive_roots)
    if (dot(x, alpha.coords).sign() < 0) ++n;
  return n;
}

}  // namespace

CartanVector reflect(const RootSystem& rs, const Root& alpha, const CartanVector& h) {
  if (!is_root(rs, alpha.coords))
    throw std::domain_error("reflect: alpha is not a root of " + rs.name());
  if (static_cast<int>(h.coords.size()) != rs.ambient_dim)
    throw std::invalid_argument("reflect: ambient dimension mismatch");
  return {reflect_coords(alpha, h.coords)};
}

std::vector<CartanVector> weyl_orbit(const RootSystem& rs, const CartanVector& h,
                                     std::size_t cap) {
  if (!satisfies_constraints(rs, h.coords))
    throw std::invalid_argument("weyl_orbit: vector violates the Cartan constraints of " +
                                rs.name());
  std::unordered_set<RatVec, RatVecHash> seen;
  std::deque<RatVec> queue;
  seen.insert(h.coords);
  queue.push_back(h.coords);
  while (!queue.empty()) {
    RatVec cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& pi : rs.simple_roots) {
      RatVec img = reflect_coords(pi, cur);
      if (seen.insert(img).second) {
        if (seen.size() > cap)
          throw std::length_error("weyl_orbit: orbit exceeds cap of " + std::to_string(cap));
        queue.push_back(std::move(img));
      }
    }
  }
  std::vector<CartanVector> orbit;
  orbit.reserve(seen.size());
  for (auto& v : seen) orbit.push_back({v});
  std::sort(orbit.begin(), orbit.end(), [](const CartanVector& a, const CartanVector& b) {
    return lex_less(a.coords, b.coords);
  });
  return orbit;
}

CartanVector dominant_representative(const RootSystem& rs, const CartanVector& h) {
  std::vector<int> unused;
  return dominant_representative_tracked(rs, h, unused);
}

CartanVector dominant_representative_tracked(const RootSystem& rs, const CartanVector& h,
                                             std::vector<int>& simple_reflections) {
  if (!satisfies_constraints(rs, h.coords))
    throw std::invalid_argument(
        "dominant_representative: vector violates the Cartan constraints of " + rs.name());
  simple_reflections.clear();
  RatVec cur = h.coords;
  std::size_t negatives = negative_pairing_count(rs, cur);
  while (true) {
    int idx = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (dot(cur, rs.simple_roots[i].coords).sign() < 0) {
        idx = i;
        break;
      }
    }
    if (idx < 0) break;
    cur = reflect_coords(rs.simple_roots[idx], cur);
    simple_reflections.push_back(idx);
    const std::size_t now = negative_pairing_count(rs, cur);
    if (now >= negatives)
      throw std::logic_error("dominant_representative: negative-pairing count did not drop");
    negatives = now;
  }
  return {cur};
}

CartanVector weyl_vector(const RootSystem& rs) {
  RatVec rho(rs.ambient_dim);
  for (const auto& alpha : rs.positive_roots) rho = rho + alpha.coords;
  return {Rational(1, 2) * rho};
}

CartanVector asymmetric_dominant_vector(const RootSystem& rs) {
  // Solve <v, pi_i> = i together with the Cartan constraints.
  const std::size_t eqs = rs.rank + rs.cartan_constraints.size();
  RatMat m(eqs, rs.ambient_dim);
  RatVec b(eqs);
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.ambient_dim; ++j) m(i, j) = rs.simple_roots[i].coords[j];
    b[i] = Rational(i + 1);
  }
  for (std::size_t k = 0; k < rs.cartan_constraints.size(); ++k)
    for (int j = 0; j < rs.ambient_dim; ++j)
      m(rs.rank + k, j) = rs.cartan_constraints[k][j];
  RatVec v;
  if (!solve(m, b, v))
    throw std::logic_error("asymmetric_dominant_vector: inconsistent system for " + rs.name());
  return {v};
}

bool contains_minus_identity(const RootSystem& rs) {
  // -Id in W  <=>  w0 = -Id  <=>  w0(v) = -v for a dominant regular v whose
  // simple pairings are pairwise distinct (so no diagram symmetry fixes it).
  // The half-sum rho is unsuitable: every diagram symmetry fixes rho, hence
  // the dominant representative of -rho is rho for every root system.
  const CartanVector v = asymmetric_dominant_vector(rs);
  const CartanVector neg{-v.coords};
  return dominant_representative(rs, neg).coords == v.coords;
}

}  // namespace klie
