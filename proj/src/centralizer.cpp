#include "klie/centralizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "klie/linalg.hpp"
#include "klie/weyl.hpp"

namespace klie {

namespace {

void check_input(const RootSystem& rs, const CartanVector& z, const char* who) {
  if (!satisfies_constraints(rs, z.coords))
    throw std::invalid_argument(std::string(who) + ": vector violates the Cartan constraints of " +
                                rs.name());
}

std::vector<std::vector<int>> integer_cartan_matrix(const std::vector<RatVec>& simples) {
  const std::size_t r = simples.size();
  std::vector<std::vector<int>> c(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational v = Rational(2) * dot(simples[i], simples[j]) / dot(simples[j], simples[j]);
      if (!v.is_integer())
        throw std::logic_error("Cartan matrix entry is not an integer");
      c[i][j] = static_cast<int>(v.num());
    }
  return c;
}

// Simultaneous row/column permutation matching of two integer Cartan
// matrices. Ranks here are at most 7, plain backtracking is enough.
bool cartan_match(const std::vector<std::vector<int>>& a,
                  const std::vector<std::vector<int>>& b) {
  const std::size_t r = a.size();
  if (b.size() != r) return false;
  std::vector<int> perm(r, -1);
  std::vector<bool> used(r, false);
  // perm[i] = position of component row i inside the candidate matrix b.
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == r) return true;
    for (std::size_t t = 0; t < r; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        if (perm[j] < 0) continue;
        if (a[i][j] != b[t][perm[j]] || a[j][i] != b[perm[j]][t]) ok = false;
      }
      if (a[i][i] != b[t][t]) ok = false;
      if (!ok) continue;
      perm[i] = static_cast<int>(t);
      used[t] = true;
      if (place(i + 1)) return true;
      perm[i] = -1;
      used[t] = false;
    }
    return false;
  };
  return place(0);
}

std::vector<std::vector<int>> candidate_cartan(AlgebraKind kind, int rank) {
  const RootSystem rs = build(kind, rank);
  std::vector<RatVec> simples;
  for (const auto& s : rs.simple_roots) simples.push_back(s.coords);
  return integer_cartan_matrix(simples);
}

// Candidate factor types per ambient kind, in the order that resolves the
// low-rank coincidences (B2 = C2, D3 = A3) toward the ambient family's
// natural labels.
std::vector<SimpleFactor> factor_candidates(AlgebraKind ambient, int rank) {
  std::vector<SimpleFactor> cands;
  auto add = [&](AlgebraKind k, int minimum) {
    if (rank >= minimum) cands.push_back({k, rank});
  };
  switch (ambient) {
    case AlgebraKind::A:
      add(AlgebraKind::A, 1);
      break;
    case AlgebraKind::B:
      add(AlgebraKind::B, 2);
      add(AlgebraKind::A, 1);
      break;
    case AlgebraKind::C:
      add(AlgebraKind::C, 2);
      add(AlgebraKind::A, 1);
      break;
    case AlgebraKind::D:
      add(AlgebraKind::D, 3);
      add(AlgebraKind::A, 1);
      break;
    case AlgebraKind::E6:
      if (rank == 6) cands.push_back({AlgebraKind::E6, 6});
      add(AlgebraKind::D, 3);
      add(AlgebraKind::A, 1);
      break;
    case AlgebraKind::E7:
      if (rank == 7) cands.push_back({AlgebraKind::E7, 7});
      if (rank == 6) cands.push_back({AlgebraKind::E6, 6});
      add(AlgebraKind::D, 3);
      add(AlgebraKind::A, 1);
      break;
  }
  return cands;
}

bool factor_less(const SimpleFactor& a, const SimpleFactor& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.rank < b.rank;
}

}  // namespace

std::string factor_name(const SimpleFactor& f) {
  if (f.kind == AlgebraKind::E6 || f.kind == AlgebraKind::E7) return kind_name(f.kind);
  return kind_name(f.kind) + std::to_string(f.rank);
}

RootSplit split_roots(const RootSystem& rs, const CartanVector& z) {
  check_input(rs, z, "split_roots");
  RootSplit split;
  for (const auto& alpha : rs.positive_roots) {
    if (dot(z.coords, alpha.coords).is_zero())
      split.i2.push_back(alpha);
    else
      split.i1.push_back(alpha);
  }
  return split;
}

bool is_regular(const RootSystem& rs, const CartanVector& z) {
  return split_roots(rs, z).i2.empty();
}

CentralizerDescriptor centralizer_type(const RootSystem& rs, const CartanVector& z) {
  const RootSplit split = split_roots(rs, z);

  // Indecomposable positive roots of the closed subsystem I_2: those not
  // expressible as a sum of two I_2 roots.
  std::unordered_set<RatVec, RatVecHash> i2set;
  for (const auto& g : split.i2) i2set.insert(g.coords);
  std::vector<RatVec> simples;
  for (const auto& g : split.i2) {
    bool decomposable = false;
    for (const auto& b1 : split.i2) {
      const RatVec rest = g.coords - b1.coords;
      if (!is_zero(rest) && i2set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(g.coords);
  }

  CentralizerDescriptor out;
  std::vector<RatVec> i2rows;
  for (const auto& g : split.i2) i2rows.push_back(g.coords);
  const std::size_t span_rank = i2rows.empty() ? 0 : RatMat::from_rows(i2rows).rank();
  if (simples.size() != span_rank)
    throw std::logic_error(rs.name() + ": subsystem simple basis has wrong size");
  out.center_dim = rs.rank - static_cast<int>(span_rank);
  out.z_spans_center = (out.center_dim == 1) && !is_zero(z.coords);

  if (!simples.empty()) {
    const auto cartan = integer_cartan_matrix(simples);
    // Connected components of the Dynkin graph.
    const std::size_t r = simples.size();
    std::vector<int> comp(r, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < r; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (std::size_t t = 0; t < r; ++t)
          if (comp[t] < 0 && cartan[cur][t] != 0) {
            comp[t] = ncomp;
            stack.push_back(t);
          }
      }
      ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
      std::vector<std::size_t> members;
      for (std::size_t t = 0; t < r; ++t)
        if (comp[t] == c) members.push_back(t);
      std::vector<std::vector<int>> sub(members.size(), std::vector<int>(members.size()));
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
          sub[i][j] = cartan[members[i]][members[j]];
      bool matched = false;
      for (const auto& cand : factor_candidates(rs.kind, static_cast<int>(members.size()))) {
        if (cartan_match(sub, candidate_cartan(cand.kind, cand.rank))) {
          out.factors.push_back(cand);
          matched = true;
          break;
        }
      }
      if (!matched)
        throw std::logic_error(rs.name() + ": centralizer component matches no known type");
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
  }
  return out;
}

std::vector<std::vector<std::size_t>> irreducible_summands(const RootSystem& rs,
                                                           const CartanVector& z) {
  const RootSplit split = split_roots(rs, z);
  std::unordered_set<RatVec, RatVecHash> i2set;
  for (const auto& g : split.i2) {
    i2set.insert(g.coords);
    i2set.insert(-g.coords);
  }
  const std::size_t n = split.i1.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RatVec diff = split.i1[i].coords - split.i1[j].coords;
      const RatVec sum = split.i1[i].coords + split.i1[j].coords;
      if (i2set.count(diff) || i2set.count(sum)) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

SpectrumReport eigen_spectrum(const RootSystem& rs, const CartanVector& z) {
  const RootSplit split = split_roots(rs, z);
  std::map<Rational, int> counts;
  for (const auto& alpha : split.i1) counts[dot(z.coords, alpha.coords).abs()] += 1;
  SpectrumReport report;
  for (const auto& [lambda, count] : counts)
    report.entries.push_back({lambda, 2 * count});
  report.dim_m0 = rs.rank + 2 * static_cast<int>(split.i2.size());
  report.summands = irreducible_summands(rs, z);

  // Each summand must sit inside one lambda level.
  for (const auto& comp : report.summands) {
    const Rational level = dot(z.coords, split.i1[comp.front()].coords).abs();
    for (auto idx : comp)
      if (dot(z.coords, split.i1[idx].coords).abs() != level)
        throw std::logic_error("irreducible summand crosses lambda levels");
  }
  return report;
}

CartanVector hermitian_generator(const RootSystem& rs, int j) {
  const auto noncompact = noncompact_simple_roots(rs);
  if (std::find(noncompact.begin(), noncompact.end(), j) == noncompact.end())
    throw std::domain_error("hermitian_generator: pi_" + std::to_string(j) +
                            " is not a non-compact simple root of " + rs.name());
  const std::size_t eqs = rs.rank + rs.cartan_constraints.size();
  RatMat m(eqs, rs.ambient_dim);
  RatVec b(eqs);
  for (int i = 0; i < rs.rank; ++i) {
    for (int c = 0; c < rs.ambient_dim; ++c) m(i, c) = rs.simple_roots[i].coords[c];
    b[i] = Rational(i + 1 == j ? 1 : 0);
  }
  for (std::size_t k = 0; k < rs.cartan_constraints.size(); ++k)
    for (int c = 0; c < rs.ambient_dim; ++c)
      m(rs.rank + k, c) = rs.cartan_constraints[k][c];
  RatVec zc;
  if (!solve(m, b, zc))
    throw std::logic_error("hermitian_generator: singular system for " + rs.name());

  // <Z, alpha> = 1 on all of I_1(Z) by construction; verify.
  const CartanVector z{zc};
  for (const auto& alpha : split_roots(rs, z).i1)
    if (dot(zc, alpha.coords) != Rational(1))
      throw std::logic_error("hermitian_generator: pairing is not 1 on I_1");
  return z;
}

HermitianClassification classify_hermitian_pair(const RootSystem& rs, const CartanVector& z) {
  check_input(rs, z, "classify_hermitian_pair");
  HermitianClassification result;
  if (is_zero(z.coords)) return result;

  const CartanVector zd = dominant_representative(rs, z);
  const RootSplit split = split_roots(rs, zd);
  if (split.i1.empty()) return result;

  // Criterion A: a single pairing value on I_1.
  bool single_value = true;
  const Rational value = dot(zd.coords, split.i1.front().coords);
  for (const auto& alpha : split.i1)
    if (dot(zd.coords, alpha.coords) != value) single_value = false;

  // Criterion B: exactly one simple root pairs nonzero and it is
  // non-compact (coefficient 1 in the maximal root).
  const auto noncompact = noncompact_simple_roots(rs);
  int j = 0;
  int nonzero_simple = 0;
  for (int i = 1; i <= rs.rank; ++i) {
    if (!dot(zd.coords, rs.simple_roots[i - 1].coords).is_zero()) {
      ++nonzero_simple;
      j = i;
    }
  }
  const bool criterion_b =
      nonzero_simple == 1 &&
      std::find(noncompact.begin(), noncompact.end(), j) != noncompact.end();

  if (single_value != criterion_b)
    throw std::logic_error(rs.name() +
                           ": Hermitian criteria disagree (single pairing value vs "
                           "unique non-compact simple pairing)");
  if (!single_value) return result;

  const CentralizerDescriptor desc = centralizer_type(rs, zd);
  if (!(desc.center_dim == 1 && desc.z_spans_center)) return result;

  result.noncompact_index = j;
  switch (rs.kind) {
    case AlgebraKind::A: {
      const int total = rs.rank + 1;  // su(p+q), p = j, q = total - j
      result.outcome = HermitianOutcome::Case1;
      result.p = std::max(j, total - j);
      result.q = std::min(j, total - j);
      break;
    }
    case AlgebraKind::B: {
      result.outcome = HermitianOutcome::Case3;
      result.p = 2 * rs.rank - 1;  // so(p+2) = so(2l+1)
      result.below_threshold = result.p < 5;
      break;
    }
    case AlgebraKind::C: {
      result.outcome = HermitianOutcome::Case4;
      result.n = rs.rank;
      break;
    }
    case AlgebraKind::D: {
      if (j == 1) {
        result.outcome = HermitianOutcome::Case3;
        result.p = 2 * rs.rank - 2;  // so(p+2) = so(2l)
        result.below_threshold = result.p < 5;
      } else {
        result.outcome = HermitianOutcome::Case2;
        result.n = rs.rank;
        result.below_threshold = result.n < 5;
      }
      break;
    }
    case AlgebraKind::E6:
      result.outcome = HermitianOutcome::ExcludedE6;
      break;
    case AlgebraKind::E7:
      result.outcome = HermitianOutcome::ExcludedE7;
      break;
  }
  return result;
}

CommutingUnitDecomposition commuting_unit_decomposition(const RootSystem& rs,
                                                        const CartanVector& z) {
  if (rs.kind != AlgebraKind::C && rs.kind != AlgebraKind::D)
    throw std::domain_error("commuting_unit_decomposition: kind must be C or D, got " +
                            rs.name());
  check_input(rs, z, "commuting_unit_decomposition");
  if (z.coords.empty() || z.coords.front().is_zero())
    throw std::domain_error("commuting_unit_decomposition: Z is not of the Hermitian form");
  const Rational c = z.coords.front().abs();
  CommutingUnitDecomposition out;
  out.coefficient = c;
  for (int i = 0; i < rs.ambient_dim; ++i) {
    if (z.coords[i].abs() != c)
      throw std::domain_error("commuting_unit_decomposition: Z is not of the Hermitian form");
    RatVec u(rs.ambient_dim);
    u[i] = Rational(z.coords[i].sign());
    out.units.push_back({std::move(u)});
  }
  return out;
}

}  // namespace klie
