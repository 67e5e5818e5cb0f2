#pragma once

#include "kingman/partitions.hpp"
#include "kingman/rational.hpp"
#include "kingman/symfunc.hpp"

#include <map>
#include <span>
#include <vector>

namespace kingman {

/// Polynomial in a fixed number of commuting variables x_1..x_N with exact
/// rational coefficients. Used to apply differential operators written in
/// natural coordinates.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  /// sum over pairwise distinct indices of prod x_{i_c}^{mu_c} in nvars variables.
  static Polynomial bold_monomial(const Partition& mu, int nvars);
  /// Formal evaluation of a quotient-algebra element at N coordinates; agrees
  /// with its value on points where sum x_i = 1.
  static Polynomial from_qelement(const QElement& f, int nvars);

  int nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial derivative(int i) const;
  Polynomial times_variable(int i) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational eval(std::span<const Rational> x) const;

  /// Canonical representative of the restriction to the hyperplane
  /// sum x_i = 1: x_N is replaced by 1 - x_1 - ... - x_{N-1}. Two polynomials
  /// agree on the hyperplane iff their restrictions are equal.
  Polynomial restrict_to_simplex() const;

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

/// sum_i x_i d^2/dx_i^2 - sum_{i,j} x_i x_j d^2/dx_i dx_j, the diffusion part
/// shared by the Kingman-simplex and Wright-Fisher operators.
Polynomial simplex_diffusion_part(const Polynomial& f);

}  // namespace kingman
