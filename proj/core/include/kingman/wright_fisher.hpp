#pragma once

#include "kingman/generator.hpp"
#include "kingman/polynomial.hpp"
#include "kingman/rational.hpp"
#include "kingman/sampling.hpp"
#include "kingman/symfunc.hpp"

#include <functional>
#include <vector>

namespace kingman {

/// Point of the ordered N-simplex: x_1 >= ... >= x_N >= 0, sum 1 (to 1e-12).
class FiniteSimplexPoint {
 public:
  explicit FiniteSimplexPoint(std::vector<double> coords);

  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const noexcept { return coords_; }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  /// sum x_i^{k+1}.
  double q(int k) const;

  static FiniteSimplexPoint vertex(int N);
  static FiniteSimplexPoint barycenter(int N);

 private:
  std::vector<double> coords_;
};

/// A_{N,eta} q_k = (k+1)(k + eta/(N-1)) q_{k-1} - (k+1)(k + N eta/(N-1)) q_k, q_0 = 1.
/// Requires 1 <= k <= N - 1 and eta > 0.
QElement wf_q_action(int k, int N, const Rational& eta);

/// A_{N,eta} f = sum x_i f_ii - sum x_i x_j f_ij + eta/(N-1) sum (1 - N x_i) f_i,
/// on polynomials in the N coordinates.
Polynomial wf_operator(const Polynomial& f, const Rational& eta);

/// finite_generator on K_n(N) with alpha = -beta, theta = N beta, compared with
/// the limit matrix; filtration degree m <= N.
FiniteGenerator degenerate_finite_generator(int n, int m, int N, const Rational& beta, int extra_checks = 8);

struct WfSample {
  long step = 0;
  double t = 0;
  const FiniteSimplexPoint* x = nullptr;
};

/// Euler-Maruyama for A_{N,eta}. The noise uses the exact factor
/// diag(sqrt x)(I - sqrt x sqrt x^T) of diag(x) - x x^T; each step is followed by
/// clamping at 0, renormalizing and re-sorting.
void simulate_wf(int N, double eta, double dt, long steps, const RngSeed& seed, const FiniteSimplexPoint& x0,
                 const std::function<void(const WfSample&)>& visit, long record_every = 1);

/// Time-average of sum x_i^2 over steps (burn_in, steps].
double wf_time_average_q1(int N, double eta, double dt, long steps, long burn_in, const RngSeed& seed,
                          const FiniteSimplexPoint& x0);

/// N! Gamma(N beta) / Gamma(beta)^N prod x_i^{beta-1}: density of the
/// descending order statistics of a symmetric Dirichlet vector. Throws
/// std::domain_error unless x is interior and strictly decreasing.
double dirichlet_ordered_density(const FiniteSimplexPoint& x, int N, const Rational& beta);

/// Symmetric Dirichlet(beta, ..., beta) sample sorted descending. Small beta is
/// handled in log space, so coordinates never all underflow.
FiniteSimplexPoint sample_dirichlet_ordered(int N, const Rational& beta, Rng& rng);
FiniteSimplexPoint sample_dirichlet_ordered(int N, const Rational& beta, const RngSeed& seed);

}  // namespace kingman
