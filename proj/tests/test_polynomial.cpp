#include "kingman/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace kingman;

TEST_CASE("polynomial arithmetic and derivatives") {
  Polynomial x = Polynomial::variable(2, 0);
  Polynomial y = Polynomial::variable(2, 1);
  Polynomial f = x * x * y + y * Rational(3);
  CHECK(f.total_degree() == 3);
  CHECK(f.derivative(0) == x * y * Rational(2));
  CHECK(f.derivative(1) == x * x + Polynomial::constant(2, 3));
  CHECK(f.times_variable(1) == x * x * y * y + y * y * Rational(3));
  std::vector<Rational> pt{2, 5};
  CHECK(f.eval(pt) == 35);
  CHECK((f - f).is_zero());
  CHECK(Polynomial::constant(2, 0).is_zero());
}

TEST_CASE("bold monomials as polynomials") {
  Polynomial m22 = Polynomial::bold_monomial({2, 2}, 3);
  std::vector<Rational> pt{make_rational(1, 2), make_rational(1, 3), make_rational(1, 6)};
  CHECK(m22.eval(pt) == eval_bold_monomial<Rational>({2, 2}, pt));
  Polynomial m2 = Polynomial::bold_monomial({2}, 3);
  CHECK(m2.eval(pt) == make_rational(1, 4) + make_rational(1, 9) + make_rational(1, 36));
  CHECK(Polynomial::bold_monomial({}, 3) == Polynomial::constant(3, 1));
  CHECK(Polynomial::bold_monomial({1, 1, 1, 1}, 3).is_zero());
}

TEST_CASE("restriction to the simplex hyperplane") {
  const int N = 3;
  Polynomial p1 = Polynomial::bold_monomial({1}, N);
  CHECK(p1.restrict_to_simplex() == Polynomial::constant(N, 1).restrict_to_simplex());
  // m_{(2,1)} and m_{(2)} - m_{(3)} agree on the hyperplane but not as polynomials.
  Polynomial a = Polynomial::bold_monomial({2, 1}, N);
  Polynomial b = Polynomial::bold_monomial({2}, N) - Polynomial::bold_monomial({3}, N);
  CHECK_FALSE(a == b);
  CHECK(a.restrict_to_simplex() == b.restrict_to_simplex());
  CHECK(Polynomial::from_qelement(QElement::monomial({2}) - QElement::monomial({3}), N).restrict_to_simplex() ==
        a.restrict_to_simplex());
}

TEST_CASE("simplex diffusion part on a quadratic") {
  // f = x1^2: sum x_i f_ii = 2 x1, sum x_i x_j f_ij = 2 x1^2.
  Polynomial x1 = Polynomial::variable(2, 0);
  Polynomial expected = x1 * Rational(2) - x1 * x1 * Rational(2);
  CHECK(simplex_diffusion_part(x1 * x1) == expected);
  CHECK(simplex_diffusion_part(Polynomial::constant(2, 5)).is_zero());
}
