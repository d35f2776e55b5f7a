#include "klie/root_systems.hpp"

#include <algorithm>
#include <stdexcept>

#include "klie/linalg.hpp"

namespace klie {

namespace {

RatVec basis_vec(int dim, int i) {
  RatVec v(dim);
  v[i] = Rational(1);
  return v;
}

// Full root sets of cases 1-6, before the positive/negative split.
std::vector<RatVec> enumerate_all_roots(AlgebraKind kind, int l) {
  std::vector<RatVec> roots;
  switch (kind) {
    case AlgebraKind::A: {
      const int n = l + 1;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          RatVec v(n);
          v[i] = Rational(1);
          v[j] = Rational(-1);
          roots.push_back(std::move(v));
        }
      break;
    }
    case AlgebraKind::B:
    case AlgebraKind::C:
    case AlgebraKind::D: {
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              RatVec v(l);
              v[i] = Rational(si);
              v[j] = Rational(sj);
              roots.push_back(std::move(v));
            }
      if (kind == AlgebraKind::B) {
        for (int i = 0; i < l; ++i)
          for (int s : {1, -1}) {
            RatVec v(l);
            v[i] = Rational(s);
            roots.push_back(std::move(v));
          }
      } else if (kind == AlgebraKind::C) {
        for (int i = 0; i < l; ++i)
          for (int s : {1, -1}) {
            RatVec v(l);
            v[i] = Rational(2 * s);
            roots.push_back(std::move(v));
          }
      }
      break;
    }
    case AlgebraKind::E6: {
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              RatVec v(8);
              v[i] = Rational(si);
              v[j] = Rational(sj);
              roots.push_back(std::move(v));
            }
      // +-1/2 (e8 - e7 - e6 + sum (-1)^{v_i} e_i), even number of minus signs
      for (int mask = 0; mask < 32; ++mask) {
        int minus = 0;
        for (int i = 0; i < 5; ++i)
          if (mask & (1 << i)) ++minus;
        if (minus % 2 != 0) continue;
        for (int s : {1, -1}) {
          RatVec v(8);
          for (int i = 0; i < 5; ++i)
            v[i] = Rational((mask & (1 << i)) ? -s : s, 2);
          v[5] = Rational(-s, 2);
          v[6] = Rational(-s, 2);
          v[7] = Rational(s, 2);
          roots.push_back(std::move(v));
        }
      }
      break;
    }
    case AlgebraKind::E7: {
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              RatVec v(8);
              v[i] = Rational(si);
              v[j] = Rational(sj);
              roots.push_back(std::move(v));
            }
      for (int s : {1, -1}) {
        RatVec v(8);
        v[6] = Rational(s);
        v[7] = Rational(-s);
        roots.push_back(std::move(v));
      }
      // +-1/2 (e7 - e8 + sum (-1)^{v_i} e_i), odd number of minus signs
      for (int mask = 0; mask < 64; ++mask) {
        int minus = 0;
        for (int i = 0; i < 6; ++i)
          if (mask & (1 << i)) ++minus;
        if (minus % 2 != 1) continue;
        for (int s : {1, -1}) {
          RatVec v(8);
          for (int i = 0; i < 6; ++i)
            v[i] = Rational((mask & (1 << i)) ? -s : s, 2);
          v[6] = Rational(s, 2);
          v[7] = Rational(-s, 2);
          roots.push_back(std::move(v));
        }
      }
      break;
    }
  }
  return roots;
}

std::vector<RatVec> simple_root_coords(AlgebraKind kind, int l) {
  std::vector<RatVec> pi;
  switch (kind) {
    case AlgebraKind::A: {
      const int n = l + 1;
      for (int i = 0; i < l; ++i) pi.push_back(basis_vec(n, i) - basis_vec(n, i + 1));
      break;
    }
    case AlgebraKind::B: {
      for (int i = 0; i + 1 < l; ++i) pi.push_back(basis_vec(l, i) - basis_vec(l, i + 1));
      pi.push_back(basis_vec(l, l - 1));
      break;
    }
    case AlgebraKind::C: {
      for (int i = 0; i + 1 < l; ++i) pi.push_back(basis_vec(l, i) - basis_vec(l, i + 1));
      pi.push_back(Rational(2) * basis_vec(l, l - 1));
      break;
    }
    case AlgebraKind::D: {
      for (int i = 0; i + 1 < l; ++i) pi.push_back(basis_vec(l, i) - basis_vec(l, i + 1));
      pi.push_back(basis_vec(l, l - 2) + basis_vec(l, l - 1));
      break;
    }
    case AlgebraKind::E6:
    case AlgebraKind::E7: {
      RatVec pi1(8);
      pi1[0] = Rational(1, 2);
      pi1[7] = Rational(1, 2);
      for (int i = 1; i < 7; ++i) pi1[i] = Rational(-1, 2);
      pi.push_back(pi1);
      pi.push_back(basis_vec(8, 0) + basis_vec(8, 1));
      const int top = (kind == AlgebraKind::E6) ? 6 : 7;
      for (int i = 3; i <= top; ++i)
        pi.push_back(basis_vec(8, i - 2) - basis_vec(8, i - 3));
      break;
    }
  }
  return pi;
}

std::vector<RatVec> constraint_rows(AlgebraKind kind, int l) {
  std::vector<RatVec> rows;
  switch (kind) {
    case AlgebraKind::A: {
      RatVec ones(l + 1, Rational(1));
      rows.push_back(ones);
      break;
    }
    case AlgebraKind::E6: {
      RatVec r1(8), r2(8);
      r1[5] = Rational(1);
      r1[6] = Rational(-1);  // x6 = x7
      r2[5] = Rational(1);
      r2[7] = Rational(1);  // x6 = -x8
      rows.push_back(r1);
      rows.push_back(r2);
      break;
    }
    case AlgebraKind::E7: {
      RatVec r(8);
      r[6] = Rational(1);
      r[7] = Rational(1);  // x orthogonal to e7 + e8
      rows.push_back(r);
      break;
    }
    default:
      break;  // B, C, D: t is the whole ambient space
  }
  return rows;
}

// Exact decomposition over the simple roots; empty result when the
// coordinates are not in the simple-root span or are non-integral.
bool decompose(const RootSystem& rs, const RatVec& coords, std::vector<Rational>& out) {
  RatMat m(rs.ambient_dim, rs.rank);
  for (int j = 0; j < rs.rank; ++j)
    for (int i = 0; i < rs.ambient_dim; ++i)
      m(i, j) = rs.simple_roots[j].coords[i];
  RatVec x;
  if (!solve(m, coords, x)) return false;
  // The simple roots are linearly independent, so the solution is exact:
  // verify the residual anyway.
  RatVec back(rs.ambient_dim);
  for (int j = 0; j < rs.rank; ++j)
    back = back + x[j] * rs.simple_roots[j].coords;
  if (!(back == coords)) return false;
  out = x;
  return true;
}

}  // namespace

std::string kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::A: return "A";
    case AlgebraKind::B: return "B";
    case AlgebraKind::C: return "C";
    case AlgebraKind::D: return "D";
    case AlgebraKind::E6: return "E6";
    case AlgebraKind::E7: return "E7";
  }
  throw std::logic_error("kind_name: bad enum value");
}

AlgebraKind kind_from_name(const std::string& name) {
  if (name == "A" || name == "a") return AlgebraKind::A;
  if (name == "B" || name == "b") return AlgebraKind::B;
  if (name == "C" || name == "c") return AlgebraKind::C;
  if (name == "D" || name == "d") return AlgebraKind::D;
  if (name == "E6" || name == "e6") return AlgebraKind::E6;
  if (name == "E7" || name == "e7") return AlgebraKind::E7;
  throw std::invalid_argument("unknown algebra kind '" + name + "'");
}

RootSystem build(AlgebraKind kind, int rank) {
  switch (kind) {
    case AlgebraKind::A:
      if (rank < 1) throw std::invalid_argument("A_l requires l >= 1");
      break;
    case AlgebraKind::B:
      if (rank < 2) throw std::invalid_argument("B_l requires l >= 2");
      break;
    case AlgebraKind::C:
      if (rank < 2) throw std::invalid_argument("C_l requires l >= 2");
      break;
    case AlgebraKind::D:
      if (rank < 3) throw std::invalid_argument("D_l requires l >= 3");
      break;
    case AlgebraKind::E6:
      if (rank != 6) throw std::invalid_argument("E6 has rank 6");
      break;
    case AlgebraKind::E7:
      if (rank != 7) throw std::invalid_argument("E7 has rank 7");
      break;
  }

  RootSystem rs;
  rs.kind = kind;
  rs.rank = rank;
  rs.ambient_dim = (kind == AlgebraKind::A)    ? rank + 1
                   : (kind == AlgebraKind::E6 || kind == AlgebraKind::E7) ? 8
                                                                          : rank;
  for (auto& pi : simple_root_coords(kind, rank)) rs.simple_roots.push_back({std::move(pi)});
  rs.cartan_constraints = constraint_rows(kind, rank);

  // Split the full root set by the sign of the simple-root decomposition.
  const auto all = enumerate_all_roots(kind, rank);
  for (const auto& coords : all) {
    std::vector<Rational> a;
    if (!decompose(rs, coords, a))
      throw std::logic_error(rs.name() + ": root outside the simple-root lattice");
    bool nonneg = true, nonpos = true;
    for (const auto& c : a) {
      if (!c.is_integer())
        throw std::logic_error(rs.name() + ": non-integral root decomposition");
      if (c.sign() > 0) nonpos = false;
      if (c.sign() < 0) nonneg = false;
    }
    if (nonneg == nonpos)
      throw std::logic_error(rs.name() + ": mixed-sign root decomposition");
    if (nonneg) rs.positive_roots.push_back({coords});
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Root& a, const Root& b) { return lex_less(a.coords, b.coords); });
  if (rs.positive_roots.size() * 2 != all.size())
    throw std::logic_error(rs.name() + ": positive roots are not half of the root set");
  return rs;
}

RootSystem build_from_name(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad algebra name '" + name + "'");
  const std::string head = name.substr(0, 1);
  if (head == "E" || head == "e") {
    if (name == "E6" || name == "e6") return build(AlgebraKind::E6, 6);
    if (name == "E7" || name == "e7") return build(AlgebraKind::E7, 7);
    throw std::invalid_argument("unsupported exceptional algebra '" + name + "'");
  }
  int rank = 0;
  try {
    std::size_t pos = 0;
    rank = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad algebra name '" + name + "' (expected e.g. A2, D5, E7)");
  }
  return build(kind_from_name(head), rank);
}

bool satisfies_constraints(const RootSystem& rs, const RatVec& coords) {
  if (static_cast<int>(coords.size()) != rs.ambient_dim) return false;
  for (const auto& c : rs.cartan_constraints)
    if (!dot(c, coords).is_zero()) return false;
  return true;
}

bool is_positive_root(const RootSystem& rs, const RatVec& coords) {
  for (const auto& r : rs.positive_roots)
    if (r.coords == coords) return true;
  return false;
}

bool is_root(const RootSystem& rs, const RatVec& coords) {
  return is_positive_root(rs, coords) || is_positive_root(rs, -coords);
}

const Root& highest_root(const RootSystem& rs) {
  // Pick the positive root of maximal height, then verify dominance:
  // alpha_max - alpha must decompose with nonnegative coefficients.
  const Root* best = nullptr;
  Rational best_height;
  for (const auto& alpha : rs.positive_roots) {
    Rational h;
    for (auto c : simple_root_coefficients(rs, alpha)) h += Rational(c);
    if (!best || best_height < h) {
      best = &alpha;
      best_height = h;
    }
  }
  for (const auto& alpha : rs.positive_roots) {
    const auto diff = simple_root_coefficients(rs, *best);
    const auto a = simple_root_coefficients(rs, alpha);
    for (int i = 0; i < rs.rank; ++i)
      if (diff[i] < a[i])
        throw std::logic_error(rs.name() + ": maximal root fails dominance");
  }
  return *best;
}

std::vector<std::int64_t> simple_root_coefficients(const RootSystem& rs, const Root& alpha) {
  if (!is_positive_root(rs, alpha.coords))
    throw std::domain_error("simple_root_coefficients: not a positive root of " + rs.name());
  std::vector<Rational> a;
  if (!decompose(rs, alpha.coords, a))
    throw std::logic_error("simple_root_coefficients: decomposition failed");
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (const auto& c : a) {
    if (!c.is_integer() || c.sign() < 0)
      throw std::logic_error("simple_root_coefficients: non-integral result");
    out.push_back(c.num());
  }
  return out;
}

std::vector<int> noncompact_simple_roots(const RootSystem& rs) {
  const auto top = simple_root_coefficients(rs, highest_root(rs));
  std::vector<int> out;
  for (int j = 0; j < rs.rank; ++j) {
    if (top[j] != 1) continue;
    // Defining property: every root has pi_j-coefficient in {-1, 0, +1}.
    for (const auto& alpha : rs.positive_roots) {
      const auto a = simple_root_coefficients(rs, alpha);
      if (a[j] < 0 || a[j] > 1)
        throw std::logic_error(rs.name() + ": coefficient-1 root fails the non-compact check");
    }
    out.push_back(j + 1);
  }
  return out;
}

}  // namespace klie
