#include "kingman/updown.hpp"

#include "kingman/symfunc.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace kingman {

bool OperatorMatrix::is_stochastic() const {
  for (std::size_t r = 0; r < entries.rows(); ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < entries.cols(); ++c) {
      const Rational& x = entries(r, c);
      if (x < 0 || x > 1) return false;
      sum += x;
    }
    if (sum != 1) return false;
  }
  return true;
}

bool FunVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

FunVector constant_function(int level, const Rational& c) {
  return {level, std::vector<Rational>(enumerate_level(level).size(), c)};
}

FunVector factorial_monomial_function(const Partition& mu, int n) {
  FunVector f{n, {}};
  for (const auto& lambda : enumerate_level(n)) f.values.emplace_back(eval_factorial_monomial(mu, lambda));
  return f;
}

OperatorMatrix transition_matrix(int n, const Params& p) {
  if (n < 1) throw std::invalid_argument("transition_matrix: n must be >= 1");
  StateSpace space = StateSpace::for_params(n, p);
  OperatorMatrix t;
  t.level = n;
  t.basis_tag = "K_" + std::to_string(n);
  if (auto N = p.max_length()) t.basis_tag += "(N=" + std::to_string(*N) + ")";
  t.basis = space.states();
  t.params = p;
  t.entries = RationalMatrix(space.size(), space.size());
  for (std::size_t r = 0; r < space.size(); ++r) {
    for (const auto& up : up_transitions(space[r], p)) {
      for (const auto& down : down_transitions(up.target)) {
        t.entries(r, space.index_of(down.target)) += up.probability * down.probability;
      }
    }
  }
  return t;
}

namespace {

void require_level(const FunVector& f, int level, const char* what) {
  if (f.level != level || f.values.size() != enumerate_level(level).size()) {
    throw std::invalid_argument(std::string(what) + ": function is not on level " + std::to_string(level));
  }
}

void require_principal(const Params& p, const char* what) {
  if (!p.is_principal()) throw std::invalid_argument(std::string(what) + ": principal-series parameters required");
}

}  // namespace

FunVector down_operator(int n, const FunVector& f) {
  require_level(f, n, "down_operator");
  StateSpace lower(n);
  FunVector out{n + 1, {}};
  for (const auto& lambda : enumerate_level(n + 1)) {
    Rational value = 0;
    for (const auto& t : down_transitions(lambda)) value += t.probability * f.values[lower.index_of(t.target)];
    out.values.push_back(std::move(value));
  }
  return out;
}

FunVector up_operator(int n, const FunVector& g, const Params& p) {
  require_level(g, n + 1, "up_operator");
  require_principal(p, "up_operator");
  StateSpace upper(n + 1);
  FunVector out{n, {}};
  for (const auto& mu : enumerate_level(n)) {
    Rational value = 0;
    for (const auto& t : up_transitions(mu, p)) value += t.probability * g.values[upper.index_of(t.target)];
    out.values.push_back(std::move(value));
  }
  return out;
}

namespace {

FunVector apply(const OperatorMatrix& t, const FunVector& f) { return {f.level, t.entries * f.values}; }

FunVector& axpy(FunVector& y, const Rational& a, const FunVector& x) {
  for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] += a * x.values[i];
  return y;
}

// Terms shared by the closed forms: sum over rows with mu_c >= 2 of
// mu_c (mu_c - 1 - alpha) m*_{mu - box(mu_c)} plus the one-row term
// kappa_1(mu) (theta + alpha (l(mu) - 1)) m*_{mu - box(1)}, evaluated on level n.
FunVector lowering_terms(const Partition& mu, int n, const Params& p) {
  FunVector out = constant_function(n, 0);
  for (int part : mu.parts()) {
    if (part < 2) continue;
    axpy(out, Rational(part) * (Rational(part - 1) - p.alpha()), factorial_monomial_function(remove_box(mu, part), n));
  }
  if (int k1 = mu.multiplicity(1); k1 > 0) {
    axpy(out, k1 * (p.theta() + p.alpha() * (mu.length() - 1)), factorial_monomial_function(remove_box(mu, 1), n));
  }
  return out;
}

}  // namespace

FunVector verify_triangular_action(int n, const Partition& mu, const Params& p) {
  require_principal(p, "verify_triangular_action");
  const int k = mu.size();
  if (k > n) throw std::invalid_argument("verify_triangular_action: need |mu| <= n");
  OperatorMatrix t = transition_matrix(n, p);
  FunVector f = factorial_monomial_function(mu, n);
  FunVector residual = apply(t, f);
  axpy(residual, -1, f);

  const Rational denom = Rational(n + 1) * (n + p.theta());
  axpy(residual, k * (k - 1 + p.theta()) / denom, f);
  axpy(residual, -Rational(n + 1 - k) / denom, lowering_terms(mu, n, p));
  return residual;
}

TildeResiduals verify_tilde_lemma(const Partition& mu, int n, const Params& p) {
  require_principal(p, "verify_tilde_lemma");
  if (mu.size() > n) throw std::invalid_argument("verify_tilde_lemma: need |mu| <= n");
  const int k = mu.size();
  TildeResiduals res;

  // D~ m*_mu = (p_1 - |mu|) m*_mu, and p_1 = n + 1 on level n + 1.
  res.down = down_operator(n, factorial_monomial_function(mu, n));
  axpy(res.down, -make_rational(n + 1 - k, n + 1), factorial_monomial_function(mu, n + 1));

  // U~ m*_mu = (p_1 + theta + |mu|) m*_mu + lowering terms, with p_1 = n on level n.
  res.up = up_operator(n, factorial_monomial_function(mu, n + 1), p);
  const Rational scale = 1 / (n + p.theta());
  axpy(res.up, -scale * (n + p.theta() + k), factorial_monomial_function(mu, n));
  axpy(res.up, -scale, lowering_terms(mu, n, p));
  return res;
}

std::vector<Eigenvalue> predicted_chain_spectrum(int n, const Params& p) {
  require_principal(p, "predicted_chain_spectrum");
  if (n < 1) throw std::invalid_argument("predicted_chain_spectrum: n must be >= 1");
  std::vector<Eigenvalue> out;
  const Rational denom = Rational(n + 1) * (n + p.theta());
  out.push_back({Rational(1), 1});
  for (int m = 2; m <= n; ++m) {
    BigInt mult = partition_count(m) - partition_count(m - 1);
    out.push_back({1 - m * (m - 1 + p.theta()) / denom, static_cast<int>(mult.get_si())});
  }
  return out;
}

std::vector<Rational> stationary_weights(const OperatorMatrix& t, const Params& p) {
  std::vector<Rational> w;
  w.reserve(t.basis.size());
  for (const auto& lambda : t.basis) w.push_back(measure_weight(lambda, p));
  return w;
}

std::vector<double> chain_spectrum(int n, const Params& p) {
  require_principal(p, "chain_spectrum");
  OperatorMatrix t = transition_matrix(n, p);
  std::vector<Rational> w = stationary_weights(t, p);
  const auto dim = static_cast<Eigen::Index>(t.basis.size());
  Eigen::MatrixXd s(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      s(i, j) = t.entries(i, j).get_d() * std::sqrt(w[i].get_d() / w[j].get_d());
    }
  }
  // Exactly symmetric in exact arithmetic; average away rounding.
  Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

bool verify_chain_spectrum_exact(int n, const Params& p) {
  OperatorMatrix t = transition_matrix(n, p);
  const auto predicted = predicted_chain_spectrum(n, p);
  const std::size_t dim = t.basis.size();

  RationalMatrix product = RationalMatrix::identity(dim);
  for (const auto& e : predicted) product = product * t.entries.shifted(e.value);
  if (!product.is_zero()) return false;

  RationalMatrix power = RationalMatrix::identity(dim);
  for (std::size_t k = 0; k <= predicted.size(); ++k) {
    Rational expected = 0;
    for (const auto& e : predicted) {
      Rational ck = 1;
      for (std::size_t i = 0; i < k; ++i) ck *= e.value;
      expected += e.multiplicity * ck;
    }
    if (power.trace() != expected) return false;
    power = power * t.entries;
  }
  return true;
}

bool is_reversible(const OperatorMatrix& t, const std::vector<Rational>& weights) {
  const std::size_t dim = t.basis.size();
  if (weights.size() != dim) throw std::invalid_argument("is_reversible: weight vector has wrong size");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (weights[i] * t.entries(i, j) != weights[j] * t.entries(j, i)) return false;
  return true;
}

bool is_stationary(const OperatorMatrix& t, const std::vector<Rational>& weights) {
  return t.entries.left_multiply(weights) == weights;
}

}  // namespace kingman
