#include "kingman/polynomial.hpp"

#include <functional>
#include <stdexcept>

namespace kingman {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::bold_monomial(const Partition& mu, int nvars) {
  Polynomial p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int)> place = [&](int c) {
    if (c == mu.length()) {
      p.add_term(e, 1);
      return;
    }
    for (int i = 0; i < nvars; ++i) {
      if (e[i] != 0) continue;
      e[i] = mu[c];
      place(c + 1);
      e[i] = 0;
    }
  };
  place(0);
  return p;
}

Polynomial Polynomial::from_qelement(const QElement& f, int nvars) {
  Polynomial p(nvars);
  for (const auto& [mu, c] : f.terms()) p += bold_monomial(mu, nvars) * c;
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector has wrong arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

Polynomial Polynomial::times_variable(int i) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    ++d[i];
    out.add_term(d, c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Rational Polynomial::eval(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    total += term;
  }
  return total;
}

Polynomial Polynomial::restrict_to_simplex() const {
  if (nvars_ == 0) return *this;
  const int last = nvars_ - 1;
  Polynomial complement = constant(nvars_, 1);
  for (int i = 0; i < last; ++i) complement -= variable(nvars_, i);

  // Powers of the complement, built on demand.
  std::vector<Polynomial> powers{constant(nvars_, 1)};
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[last]) powers.push_back(powers.back() * complement);
    Polynomial head(nvars_);
    Exponents rest = e;
    rest[last] = 0;
    head.add_term(rest, c);
    out += head * powers[e[last]];
  }
  return out;
}

Polynomial simplex_diffusion_part(const Polynomial& f) {
  const int n = f.nvars();
  Polynomial out(n);
  std::vector<Polynomial> first;
  first.reserve(n);
  for (int i = 0; i < n; ++i) first.push_back(f.derivative(i));
  for (int i = 0; i < n; ++i) {
    out += first[i].derivative(i).times_variable(i);
    for (int j = 0; j < n; ++j) out -= first[i].derivative(j).times_variable(i).times_variable(j);
  }
  return out;
}

}  // namespace kingman
