#pragma once

#include "kingman/ewens_pitman.hpp"
#include "kingman/linalg.hpp"
#include "kingman/polynomial.hpp"
#include "kingman/symfunc.hpp"
#include "kingman/updown.hpp"

#include <vector>

namespace kingman {

/// Matrix of the pre-generator on the degree-m filtration. Column j holds the
/// coordinates of A m_{basis[j]} in the basis.
struct GeneratorMatrix {
  int degree = 0;
  Params params{0, 1};
  std::vector<Partition> basis;
  RationalMatrix entries;

  QElement apply(const QElement& f) const;
  QElement column(std::size_t j) const;
};

/// A on an element of the quotient algebra, term by term:
///   A m_mu = -|mu|(|mu|-1+theta) m_mu + sum_{rows c, mu_c >= 2} mu_c (mu_c-1-alpha) m_{mu - box(mu_c)},
/// with the result reduced to the no-part-1 basis.
QElement apply_generator(const QElement& f, const Params& p);

/// Exact matrix on F^m. For the degenerate series the basis is the same and
/// the matrix describes the limit operator on the N-point simplex; it needs m <= N,
/// the range in which the basis stays independent there.
GeneratorMatrix generator_matrix(int m, const Params& p);

/// {0 : 1} and {-k(k-1+theta) : p(k) - p(k-1)} for 2 <= k <= m, read off the
/// triangular diagonal. Principal series.
std::vector<Eigenvalue> generator_spectrum(int m, const Params& p);

struct QAction {
  enum class Kind { One, Single, Pair };
  Kind kind = Kind::One;
  int i = 0;
  int j = 0;

  static QAction one() { return {Kind::One, 0, 0}; }
  static QAction single(int i) { return {Kind::Single, i, 0}; }
  static QAction pair(int i, int j) { return {Kind::Pair, i, j}; }
};

/// A1 = 0, A q_i = -(i+1)(i+theta) q_i + (i+1)(i-alpha) q_{i-1},
/// A(q_i q_j) = q_i A q_j + q_j A q_i + 2(i+1)(j+1)(q_{i+j} - q_i q_j), with q_0 = 1.
QElement q_action(const QAction& action, const Params& p);

/// Integral of the bold monomial m_lambda against PD(alpha, theta).
Rational pd_moment(const Partition& lambda, const Params& p);
/// Linear extension of pd_moment.
Rational pd_expectation(const QElement& f, const Params& p);

/// M_n(lambda) = g(lambda) / prod_k kappa_k(lambda)! * pd_moment(lambda).
LevelDistribution kingman_reconstruct(int n, const Params& p);

/// G(mu, nu) = E_PD[m_mu m_nu] over filtration_basis(m).
RationalMatrix gram_matrix(int m, const Params& p);

/// e^{tA} f, computed on the smallest filtration piece containing f.
QElementF semigroup_apply(double t, const QElement& f, const Params& p);

struct FiniteGenerator {
  int n = 0;
  int degree = 0;
  std::vector<Partition> basis;
  /// Diagrams whose evaluation rows were solved for, then the extra check points.
  std::vector<Partition> solve_points;
  std::vector<Partition> check_points;
  /// Matrix of n^2 (T_n - 1) on span{m_mu evaluated at iota_n}, same layout as GeneratorMatrix.
  RationalMatrix matrix;
  /// max |E B - n^2 (T_n - 1) F| over the check points; zero when the span is invariant.
  Rational residual;
  /// max |B - A| entrywise.
  Rational deviation;
};

/// Evaluates n^2 (T_n - 1) pointwise on the evaluation vectors of the basis of
/// F^m (restricted to at most N rows in the degenerate series) and solves for
/// its matrix exactly. Points are taken in canonical order until the evaluation
/// rows reach full rank, plus `extra_checks` further points. Throws
/// std::domain_error if K_n does not separate the basis.
FiniteGenerator finite_generator(int n, int m, const Params& p, int extra_checks = 8);

/// D f = sum x_i f_ii - sum x_i x_j f_ij - sum (theta x_i + alpha) f_i.
Polynomial natural_generator(const Polynomial& f, const Params& p);

}  // namespace kingman
