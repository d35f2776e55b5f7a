#include "klie/geometry_verifier.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace klie {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool rat_proportional(const RatMat& a, const RatMat& b, Rational& factor) {
  // a = factor * b with b != 0, checked exactly
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b(i, j).is_zero()) {
        factor = a(i, j) / b(i, j);
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c)
            if (a(r, c) != factor * b(r, c)) return false;
        return true;
      }
  return false;
}

RatMat rat_commutator(const RatMat& a, const RatMat& b) {
  RatMat m = matmul(a, b);
  const RatMat s = matmul(b, a);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= s(i, j);
  return m;
}

std::vector<double> apply(const std::vector<double>& gen, std::size_t n,
                          const std::vector<double>& x) {
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += gen[i * n + j] * x[j];
    y[i] = s;
  }
  return y;
}

double dot_d(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Dense complex double matrices for the group-level sampling.
struct CMat {
  std::size_t n = 0;
  std::vector<std::complex<double>> a;

  explicit CMat(std::size_t size) : n(size), a(size * size) {}
  std::complex<double>& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static CMat identity(std::size_t size) {
    CMat m(size);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

CMat mul(const CMat& x, const CMat& y) {
  CMat z(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      const std::complex<double> v = x.at(i, k);
      if (v == std::complex<double>(0.0)) continue;
      for (std::size_t j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

CMat dagger(const CMat& x) {
  CMat z(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) z.at(j, i) = std::conj(x.at(i, j));
  return z;
}

double frob_norm(const CMat& x) {
  double s = 0.0;
  for (const auto& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

// Scaling-and-squaring matrix exponential with a Taylor tail cut at
// machine precision; plenty for the bounded-norm inputs used here.
CMat expm(const CMat& x) {
  int squarings = 0;
  double norm = frob_norm(x);
  CMat scaled = x;
  while (norm > 0.5) {
    for (auto& v : scaled.a) v *= 0.5;
    norm *= 0.5;
    ++squarings;
  }
  CMat result = CMat::identity(x.n);
  CMat term = CMat::identity(x.n);
  for (int k = 1; k <= 24; ++k) {
    term = mul(term, scaled);
    for (auto& v : term.a) v /= static_cast<double>(k);
    for (std::size_t i = 0; i < term.a.size(); ++i) result.a[i] += term.a[i];
    if (frob_norm(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = mul(result, result);
  return result;
}

CMat to_cmat(const GMatrix& g) {
  CMat m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      m.at(i, j) = {g(i, j).re.to_double(), g(i, j).im.to_double()};
  return m;
}

double minus_re_trace_sq(const CMat& x) {
  std::complex<double> t = 0.0;
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) t += x.at(i, k) * x.at(k, i);
  return -t.real();
}

}  // namespace

std::uint64_t UnitSampler::next_u64() {
  // splitmix64: short, portable, and fully pinned by this file.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double UnitSampler::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double UnitSampler::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = r * std::sin(2.0 * kPi * u2);
  return r * std::cos(2.0 * kPi * u2);
}

std::vector<double> UnitSampler::unit_vector(std::size_t n) {
  std::vector<double> v(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& x : v) {
      x = gaussian();
      norm2 += x * x;
    }
  } while (norm2 < 1e-8);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return v;
}

std::vector<double> SphereField::generator_d() const {
  const std::size_t n = generator.rows();
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i * n + j] = generator(i, j).to_double();
  return g;
}

SphereField real_form(const AlgebraElement& x) {
  const std::size_t m = x.mat.size();
  RatMat gen;
  if (x.kind == MatrixKind::So) {
    gen = RatMat(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (!x.mat(i, j).im.is_zero())
          throw std::invalid_argument("real_form: so element with nonzero imaginary part");
        gen(i, j) = x.mat(i, j).re;
      }
  } else {
    // z = a + bi acting on (x_{2k-1}, x_{2k}) as [[a, -b], [b, a]]
    gen = RatMat(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const GaussianRational& z = x.mat(i, j);
        gen(2 * i, 2 * j) = z.re;
        gen(2 * i, 2 * j + 1) = -z.im;
        gen(2 * i + 1, 2 * j) = z.im;
        gen(2 * i + 1, 2 * j + 1) = z.re;
      }
  }
  for (std::size_t i = 0; i < gen.rows(); ++i)
    for (std::size_t j = 0; j < gen.cols(); ++j)
      if (gen(i, j) != -gen(j, i))
        throw std::invalid_argument("real_form: generator is not skew-symmetric");
  return {gen};
}

LengthCertificate is_constant_length(const SphereField& field) {
  const RatMat& a = field.generator;
  const std::size_t n = a.rows();
  RatMat gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s;
      for (std::size_t k = 0; k < n; ++k) s += a(k, i) * a(k, j);
      gram(i, j) = s;
    }
  LengthCertificate cert;
  bool scalar = true;
  for (std::size_t i = 0; i < n && scalar; ++i)
    for (std::size_t j = 0; j < n && scalar; ++j)
      if (i == j ? gram(i, i) != gram(0, 0) : !gram(i, j).is_zero()) scalar = false;
  if (scalar) {
    cert.constant = true;
    cert.c = gram(0, 0);
    return cert;
  }
  auto unit_vec = [n](std::size_t k) {
    RatVec v(n);
    v[k] = Rational(1);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram(i, i) != gram(j, j)) {
        cert.witness_x = unit_vec(i);
        cert.witness_y = unit_vec(j);
        cert.value_x = gram(i, i);
        cert.value_y = gram(j, j);
        return cert;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!gram(i, j).is_zero()) {
        RatVec x = unit_vec(i), y = unit_vec(i);
        x[j] = Rational(1);
        y[j] = Rational(-1);
        cert.witness_x = x;
        cert.witness_y = y;
        cert.value_x = (gram(i, i) + gram(j, j) + Rational(2) * gram(i, j)) / Rational(2);
        cert.value_y = (gram(i, i) + gram(j, j) - Rational(2) * gram(i, j)) / Rational(2);
        return cert;
      }
  throw std::logic_error("is_constant_length: non-scalar Gram without witness");
}

double pointwise_metric(const SphereField& f1, const SphereField& f2,
                        const std::vector<double>& x) {
  const std::size_t n = f1.space_dim();
  if (f2.space_dim() != n || x.size() != n)
    throw std::invalid_argument("pointwise_metric: dimension mismatch");
  if (std::abs(dot_d(x, x) - 1.0) > 1e-12)
    throw std::invalid_argument("pointwise_metric: x is not a unit vector");
  return dot_d(apply(f1.generator_d(), n, x), apply(f2.generator_d(), n, x));
}

SampleReport verify_orthogonality(const SphereField& z,
                                  const std::vector<SphereField>& subspace, int samples,
                                  std::uint64_t seed, double tolerance) {
  const std::size_t n = z.space_dim();
  const auto zg = z.generator_d();
  std::vector<std::vector<double>> gens;
  for (const auto& f : subspace) {
    if (f.space_dim() != n)
      throw std::invalid_argument("verify_orthogonality: dimension mismatch");
    gens.push_back(f.generator_d());
  }
  UnitSampler rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto x = rng.unit_vector(n);
    const auto zx = apply(zg, n, x);
    for (const auto& g : gens)
      worst = std::max(worst, std::abs(dot_d(zx, apply(g, n, x))));
  }
  SampleReport report{"orthogonality g(Z, m) = 0", samples, seed, worst, tolerance,
                      worst <= tolerance};
  return report;
}

SampleReport verify_root_pair_identities(const SphereField& z, const SphereField& u,
                                         const SphereField& v, const SphereField& alpha,
                                         int samples, std::uint64_t seed,
                                         double tolerance) {
  const std::size_t n = z.space_dim();
  if (u.space_dim() != n || v.space_dim() != n || alpha.space_dim() != n)
    throw std::invalid_argument("verify_root_pair_identities: dimension mismatch");
  // alpha must lie in I_1(Z): at the matrix level, [Z, U] != 0.
  if (rat_commutator(z.generator, u.generator).rank() == 0)
    throw std::domain_error("verify_root_pair_identities: [Z, U] = 0, the root is not in I_1(Z)");
  // The squared root length <alpha,alpha> from [alpha, U] = <alpha,alpha> V.
  Rational alpha_norm2;
  if (!rat_proportional(rat_commutator(alpha.generator, u.generator), v.generator,
                        alpha_norm2))
    throw std::domain_error("verify_root_pair_identities: (U, V, alpha) is not a root triple");
  const double an2 = alpha_norm2.to_double();

  const auto zg = z.generator_d(), ug = u.generator_d(), vg = v.generator_d(),
             ag = alpha.generator_d();
  UnitSampler rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto x = rng.unit_vector(n);
    const auto zx = apply(zg, n, x), ux = apply(ug, n, x), vx = apply(vg, n, x),
               ax = apply(ag, n, x);
    const double g_alpha_z = dot_d(ax, zx);
    const double devs[] = {
        dot_d(zx, ux),
        dot_d(zx, vx),
        dot_d(ux, ux) - g_alpha_z,
        dot_d(vx, vx) - g_alpha_z,
        dot_d(ux, vx),
        dot_d(ax, ux),
        dot_d(ax, vx),
        dot_d(ax, ax) - an2 * g_alpha_z,
    };
    for (double d : devs) worst = std::max(worst, std::abs(d));
  }
  return {"root-pair metric identities", samples, seed, worst, tolerance,
          worst <= tolerance};
}

SampleReport verify_pairing_transfer(const SphereField& z, const SphereField& u,
                                     const SphereField& v, const SphereField& alpha,
                                     const SphereField& beta, const Rational& alpha_beta,
                                     int samples, std::uint64_t seed, double tolerance) {
  const std::size_t n = z.space_dim();
  if (u.space_dim() != n || v.space_dim() != n || alpha.space_dim() != n ||
      beta.space_dim() != n)
    throw std::invalid_argument("verify_pairing_transfer: dimension mismatch");
  if (rat_commutator(z.generator, u.generator).rank() == 0)
    throw std::domain_error("verify_pairing_transfer: [Z, U] = 0, the root is not in I_1(Z)");

  const auto ug = u.generator_d(), vg = v.generator_d(), ag = alpha.generator_d(),
             bg = beta.generator_d();
  const double ab = alpha_beta.to_double();

  // Hypothesis first: g(v_alpha, beta) = 0.
  UnitSampler rng(seed);
  double hyp = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto x = rng.unit_vector(n);
    const auto bx = apply(bg, n, x);
    hyp = std::max(hyp, std::abs(dot_d(apply(ug, n, x), bx)));
    hyp = std::max(hyp, std::abs(dot_d(apply(vg, n, x), bx)));
  }
  if (hyp > tolerance) {
    SampleReport report{"pairing-transfer hypothesis g(v_alpha, beta) = 0", samples, seed, hyp,
                        tolerance, false};
    report.status = "hypothesis-not-met";
    return report;
  }

  UnitSampler rng2(seed + 1);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto x = rng2.unit_vector(n);
    const auto ux = apply(ug, n, x), vx = apply(vg, n, x), axv = apply(ag, n, x),
               bx = apply(bg, n, x);
    const double gab = dot_d(axv, bx);
    worst = std::max(worst, std::abs(ab * dot_d(ux, ux) - gab));
    worst = std::max(worst, std::abs(ab * dot_d(vx, vx) - gab));
  }
  return {"pairing transfer <a,b> g(U,U) = g(a,b)", samples, seed, worst, tolerance,
          worst <= tolerance};
}

SampleReport biinvariant_all_constant(MatrixKind kind, int n, int samples,
                                      std::uint64_t seed, double tolerance) {
  if (n > 4)
    throw std::invalid_argument("biinvariant_all_constant: n <= 4 (fixture-size check)");
  const RootBasis basis = build_algebra_basis(kind, n);
  std::vector<CMat> gens;
  for (const auto& h : basis.cartan) gens.push_back(to_cmat(h.mat));
  for (const auto& p : basis.pairs) {
    gens.push_back(to_cmat(p.u.mat));
    gens.push_back(to_cmat(p.v.mat));
  }
  const std::size_t m = gens.front().n;

  UnitSampler rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    // Group point: product of three bounded-norm exponentials.
    CMat a = CMat::identity(m);
    for (int rep = 0; rep < 3; ++rep) {
      CMat x(m);
      for (const auto& g : gens) {
        const double c = 0.4 * rng.gaussian();
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += c * g.a[i];
      }
      a = mul(a, expm(x));
    }
    const CMat adag = dagger(a);
    for (const auto& g : gens) {
      const CMat conj = mul(adag, mul(g, a));  // Ad(a^{-1}) X for unitary a
      worst = std::max(worst, std::abs(minus_re_trace_sq(conj) - minus_re_trace_sq(g)));
    }
  }
  return {"bi-invariant constant length on " + matrix_kind_name(kind) + "(" +
              std::to_string(n) + ")",
          samples, seed, worst, tolerance, worst <= tolerance};
}

}  // namespace klie
