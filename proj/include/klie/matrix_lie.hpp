#pragma once

#include <string>
#include <vector>

#include "klie/linalg.hpp"
#include "klie/rational.hpp"
#include "klie/root_systems.hpp"

namespace klie {

/// Element of Q(i), the Gaussian rationals.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

/// Square matrix over the Gaussian rationals.
class GMatrix {
public:
  GMatrix() : n_(0) {}
  explicit GMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  GaussianRational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend GMatrix operator+(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator-(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator*(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator*(const GaussianRational& c, const GMatrix& m);
  friend bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  GMatrix conj_transpose() const;
  GaussianRational trace() const;

  /// Row-major flattening to (re, im) pairs, for exact span computations.
  RatVec flatten() const;

private:
  std::size_t n_;
  std::vector<GaussianRational> a_;
};

enum class MatrixKind { Su, So, Sp };

std::string matrix_kind_name(MatrixKind kind);

/// An element of su(n), so(n) or sp(n) as an exact matrix: n x n complex
/// for su, n x n real (skew-symmetric) for so, and the 2n x 2n complex
/// realization [[A, B], [-conj(B), conj(A)]] for sp(n).
struct AlgebraElement {
  MatrixKind kind;
  int n = 0;  // defining parameter (so the matrix is n x n or 2n x 2n)
  GMatrix mat;
};

struct RootPair {
  Root alpha;        // ambient coordinates
  AlgebraElement u;  // [H, U] =  <alpha,H> V
  AlgebraElement v;  // [H, V] = -<alpha,H> U, and [U, V] = alpha as a matrix
};

/// Root-adapted basis of a classical compact algebra: a Cartan basis with
/// known ambient coordinates and one (U_alpha, V_alpha) pair per positive
/// root, satisfying the bracket relations above exactly.
struct RootBasis {
  MatrixKind kind;
  int n = 0;
  int ambient_dim = 0;
  Rational form_scale;         // -Re tr(XY) = form_scale * (ambient dot) on t
  Rational killing_form_ratio; // tr(ad X ad Y) = -killing_form_ratio * (-Re tr(XY))
  std::vector<RatVec> cartan_coords;
  std::vector<AlgebraElement> cartan;
  std::vector<RootPair> pairs;

  int dimension() const {
    return static_cast<int>(cartan.size() + 2 * pairs.size());
  }
  std::string name() const { return matrix_kind_name(kind) + "(" + std::to_string(n) + ")"; }
};

/// Build the root basis of su(n) (n >= 2), so(n) (n >= 3) or sp(n) (n >= 1).
/// All bracket relations above are verified exactly during construction.
RootBasis build_algebra_basis(MatrixKind kind, int n);

/// The Cartan element realizing the given ambient coordinate vector
/// (for su the coordinates must sum to zero).
AlgebraElement cartan_element(const RootBasis& basis, const RatVec& ambient);

/// Matrix commutator XY - YX; kind and size must agree.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// The invariant inner product -Re tr(XY). Positive definite on each
/// algebra; equals form_scale times the ambient dot product on t.
Rational invariant_form(const AlgebraElement& x, const AlgebraElement& y);

/// Killing form tr(ad X ad Y), computed exactly from the adjoint matrices.
/// Proportional to the trace form with the recorded per-algebra ratio:
/// killing_form = -killing_form_ratio * invariant_form.
Rational killing_form(const RootBasis& basis, const AlgebraElement& x,
                      const AlgebraElement& y);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const Rational& c, const AlgebraElement& x);
AlgebraElement gscale(const GaussianRational& c, const AlgebraElement& x);

/// Exact spectrum of L_Z^2 on the whole algebra, computed from the adjoint
/// operator by rational nullspaces. Candidate eigenvalues are the squared
/// root pairings; completeness is certified by the dimension count.
struct MatrixSpectrum {
  int dim_m0 = 0;
  std::vector<std::pair<Rational, int>> levels;  // (lambda, dimension), ascending
};
MatrixSpectrum ad_squared_eigenspaces(const RootBasis& basis, const AlgebraElement& z);

/// The eigenvalue lambda >= 0 with [Z,[Z,Y]] = -lambda^2 Y, when Y lies in a
/// single eigenspace of L_Z^2; std::domain_error otherwise.
Rational eigen_lambda(const RootBasis& basis, const AlgebraElement& z, const AlgebraElement& y);

/// sigma(Y) = (1/lambda) [Z, Y] on m_lambda, lambda > 0.
AlgebraElement sigma(const RootBasis& basis, const AlgebraElement& z, const AlgebraElement& y);

/// Graded components [U,V]^+ = (1/2)([U,V] - [sU,sV]) in m_{a+b} and
/// [U,V]^- = (1/2)([U,V] + [sU,sV]) in m_{|a-b|}; memberships are verified.
struct GradedBrackets {
  AlgebraElement plus;
  AlgebraElement minus;
};
GradedBrackets graded_brackets(const RootBasis& basis, const AlgebraElement& z,
                               const AlgebraElement& u, const AlgebraElement& v);

/// h(X) = [X, sigma(X)]; lands in m_0 (verified).
AlgebraElement h_vector(const RootBasis& basis, const AlgebraElement& z,
                        const AlgebraElement& x);

/// u = {W in span(h) | [W, p] = 0} for a subalgebra h with form-orthogonal
/// complement p, by exact nullspace. Checks that u and span(p) + [p,p] are
/// complementary ideals (the two ideal assertions of the compact-algebra
/// splitting lemma). Returns a basis of u.
std::vector<AlgebraElement> u_ideal(const RootBasis& basis,
                                    const std::vector<AlgebraElement>& h_subalg,
                                    const std::vector<AlgebraElement>& p_subspace);

/// The so(3) triple (F_12, F_23, F_13) inside so(n), n >= 3, with the double
/// bracket identity [Y,[Y,X]] = -X verified on exact orthonormal pairs.
struct So3Triple {
  AlgebraElement f12, f23, f13;
};
So3Triple so3_triple(int n);

/// Matrix-level partition of the root pairs into minimal ad(m_0)-invariant
/// blocks, computed from exact brackets and the invariant form only; the
/// independent oracle for centralizer::irreducible_summands.
std::vector<std::vector<std::size_t>> matrix_summand_partition(const RootBasis& basis,
                                                               const AlgebraElement& z);

}  // namespace klie
