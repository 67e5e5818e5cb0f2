#pragma once

#include "kingman/ewens_pitman.hpp"
#include "kingman/linalg.hpp"
#include "kingman/partitions.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kingman {

/// Exact matrix of an operator on functions of a level, in the canonical
/// state order. Row index = source state.
struct OperatorMatrix {
  int level = 0;
  std::string basis_tag;  // e.g. "K_3" or "K_5(N=3)"
  std::vector<Partition> basis;
  std::optional<Params> params;
  RationalMatrix entries;

  bool is_stochastic() const;
};

/// Function on enumerate_level(level), exact values.
struct FunVector {
  int level = 0;
  std::vector<Rational> values;

  bool is_zero() const;
  friend bool operator==(const FunVector&, const FunVector&) = default;
};

FunVector constant_function(int level, const Rational& c);
/// lambda -> m*_mu(lambda) on K_n.
FunVector factorial_monomial_function(const Partition& mu, int n);

/// T_n(lambda, lambda~) = sum_nu p_up(lambda, nu) p_down(nu, lambda~), on K_n or
/// K_n(N) for the degenerate series. Throws std::invalid_argument for n < 1.
OperatorMatrix transition_matrix(int n, const Params& p);

/// (D f)(lambda) = sum_mu p_down(lambda, mu) f(mu); maps level n to n+1.
FunVector down_operator(int n, const FunVector& f);
/// (U g)(mu) = sum_lambda p_up(mu, lambda) g(lambda); maps level n+1 to n.
/// Principal series only (the full level must be in the support).
FunVector up_operator(int n, const FunVector& g, const Params& p);

/// (T_n - 1) m*_mu minus the closed-form three-term right-hand side; exactly
/// zero when the identity holds. Requires |mu| <= n and principal parameters.
FunVector verify_triangular_action(int n, const Partition& mu, const Params& p);

struct TildeResiduals {
  FunVector down;  // D_{n+1,n} f_n - (1/(n+1)) ((p_1 - |mu|) m*_mu)_{n+1}
  FunVector up;    // U_{n,n+1} g_{n+1} - (1/(n+theta)) (U~ m*_mu)_n
};
TildeResiduals verify_tilde_lemma(const Partition& mu, int n, const Params& p);

struct Eigenvalue {
  Rational value;
  int multiplicity;
};
/// 1 - m(m-1+theta)/((n+1)(n+theta)) for m = 0, 2, ..., n, with multiplicity
/// p(m) - p(m-1) (m = 0 is simple).
std::vector<Eigenvalue> predicted_chain_spectrum(int n, const Params& p);

/// Eigenvalues of T_n in floating point (symmetrized by sqrt(M_n)), descending.
std::vector<double> chain_spectrum(int n, const Params& p);

/// Exact check that prod_c (T - c) = 0 over the predicted eigenvalues and that
/// trace(T^k) = sum mult * c^k for k = 0..#distinct; together these pin the
/// eigenvalues and their multiplicities.
bool verify_chain_spectrum_exact(int n, const Params& p);

/// M(lambda) T(lambda, lambda~) symmetric, exactly.
bool is_reversible(const OperatorMatrix& t, const std::vector<Rational>& weights);
/// weights * T == weights, exactly.
bool is_stationary(const OperatorMatrix& t, const std::vector<Rational>& weights);
/// M_n restricted to the chain's state space.
std::vector<Rational> stationary_weights(const OperatorMatrix& t, const Params& p);

}  // namespace kingman
