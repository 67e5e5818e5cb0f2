#pragma once

#include "kingman/partitions.hpp"
#include "kingman/rational.hpp"

#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace kingman {

// ---------------------------------------------------------------------------
// Symmetric functions evaluated on the rows of a diagram.

/// Factorial monomial m*_mu(lambda) = sum over pairwise distinct row indices
/// j_1..j_l of prod lambda_{j_c}^{down mu_c}. Zero when mu has more rows than lambda.
BigInt eval_factorial_monomial(const Partition& mu, const Partition& lambda);
/// Same sum with ordinary powers: m_mu(lambda) in the bold normalization.
BigInt eval_monomial(const Partition& mu, const Partition& lambda);
/// p_k(lambda) = sum lambda_i^k.
BigInt power_sum(int k, const Partition& lambda);

// ---------------------------------------------------------------------------
// Elements of the quotient algebra (p_1 = 1) in the basis of bold monomials
// indexed by partitions without parts equal to 1.

/// True when mu has no part equal to 1, i.e. indexes a basis element.
inline bool is_basis_index(const Partition& mu) { return mu.multiplicity(1) == 0; }

template <class Coef>
class BasicQElement;

using QElement = BasicQElement<Rational>;
/// Floating-coefficient element, produced by the semigroup.
using QElementF = BasicQElement<double>;

/// Class of the bold monomial m_mu in the no-part-1 basis. Uses
/// m_{rho u (1)} = m_rho - sum_c m_{rho + box in row c}, which follows from
/// m_rho * p_1 with p_1 = 1.
const QElement& reduce_to_basis(const Partition& mu);

template <class Coef>
class BasicQElement {
 public:
  using Terms = std::map<Partition, Coef>;

  BasicQElement() = default;

  static BasicQElement constant(Coef c) {
    BasicQElement e;
    e.add(Partition{}, std::move(c));
    return e;
  }
  /// Bold monomial of mu, reduced to the basis.
  static BasicQElement monomial(const Partition& mu, Coef c = Coef(1)) {
    BasicQElement e;
    e.add(mu, std::move(c));
    return e;
  }
  /// Moment coordinate q_k = m_{(k+1)}; q_0 = 1.
  static BasicQElement q(int k) {
    if (k < 0) throw std::invalid_argument("q_k needs k >= 0");
    return k == 0 ? constant(Coef(1)) : monomial(Partition{k + 1});
  }

  /// Adds c * m_mu, reducing mu if it has parts equal to 1.
  void add(const Partition& mu, const Coef& c) {
    if (c == Coef(0)) return;
    if (is_basis_index(mu)) {
      accumulate(mu, c);
      return;
    }
    for (const auto& [nu, r] : reduce_to_basis(mu).terms()) {
      if constexpr (std::is_same_v<Coef, Rational>) {
        accumulate(nu, c * r);
      } else {
        accumulate(nu, c * r.get_d());
      }
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coef coefficient(const Partition& mu) const {
    if (auto it = terms_.find(mu); it != terms_.end()) return it->second;
    return Coef(0);
  }
  /// Max |mu| over the support; -1 for the zero element.
  int degree() const noexcept {
    int d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
    return d;
  }

  BasicQElement& operator+=(const BasicQElement& o) {
    for (const auto& [mu, c] : o.terms_) accumulate(mu, c);
    return *this;
  }
  BasicQElement& operator-=(const BasicQElement& o) {
    for (const auto& [mu, c] : o.terms_) accumulate(mu, Coef(-c));
    return *this;
  }
  BasicQElement& operator*=(const Coef& s) {
    if (s == Coef(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [mu, c] : terms_) c *= s;
    return *this;
  }
  friend BasicQElement operator+(BasicQElement a, const BasicQElement& b) { return a += b; }
  friend BasicQElement operator-(BasicQElement a, const BasicQElement& b) { return a -= b; }
  friend BasicQElement operator*(BasicQElement a, const Coef& s) { return a *= s; }
  friend BasicQElement operator*(const Coef& s, BasicQElement a) { return a *= s; }
  friend bool operator==(const BasicQElement&, const BasicQElement&) = default;

  /// "c * m[parts] + ..." by decreasing degree then reverse-lexicographic; "0" when empty.
  std::string to_string() const;

 private:
  void accumulate(const Partition& mu, const Coef& c) {
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coef(0)) terms_.erase(it);
    } else if (it->second == Coef(0)) {
      terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Exact product in the quotient algebra, reduced to the basis.
QElement product_expand(const QElement& a, const QElement& b);

/// Parses the text form produced by to_string().
QElement parse_qelement(std::string_view text);

/// Partitions without parts equal to 1 and size <= m, ordered by size and then
/// reverse-lexicographically; the canonical basis of the degree-m filtration.
std::vector<Partition> filtration_basis(int m);
/// Same, restricted to at most `max_length` rows.
std::vector<Partition> filtration_basis(int m, int max_length);

// ---------------------------------------------------------------------------
// Points of the Kingman simplex.

/// Finitely supported point of the closed Kingman simplex: coordinates weakly
/// decreasing, nonnegative, with sum <= 1. gamma() = 1 - sum is the mass
/// missing from the coordinates.
template <class Scalar>
class BasicSimplexPoint {
 public:
  BasicSimplexPoint() = default;
  explicit BasicSimplexPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    Scalar sum(0);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] < Scalar(0)) throw std::invalid_argument("simplex point: negative coordinate");
      if (i > 0 && coords_[i] > coords_[i - 1]) throw std::invalid_argument("simplex point: coordinates must be decreasing");
      sum += coords_[i];
    }
    if constexpr (std::is_floating_point_v<Scalar>) {
      if (sum > 1 + 1e-12) throw std::invalid_argument("simplex point: coordinates sum above 1");
      gamma_ = std::max(Scalar(0), Scalar(1) - sum);
    } else {
      if (sum > 1) throw std::invalid_argument("simplex point: coordinates sum above 1");
      gamma_ = Scalar(1) - sum;
    }
  }

  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  const Scalar& gamma() const noexcept { return gamma_; }
  bool on_open_face() const { return gamma_ == Scalar(0); }

 private:
  std::vector<Scalar> coords_;
  Scalar gamma_ = Scalar(1);
};

using SimplexPoint = BasicSimplexPoint<double>;
using RationalSimplexPoint = BasicSimplexPoint<Rational>;

/// The embedding lambda -> (lambda_1/n, ..., lambda_l/n) with n = |lambda|.
RationalSimplexPoint embed(const Partition& lambda);
/// Same with an explicit scale n (lambda may have fewer than n boxes).
RationalSimplexPoint embed(const Partition& lambda, int n);

namespace detail {

template <class Scalar>
Scalar power(const Scalar& x, int k) {
  Scalar r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Visits the set partitions of {0..len-1} as restricted growth strings.
template <class F>
void for_each_set_partition(int len, F&& visit) {
  std::vector<int> block(static_cast<std::size_t>(len), 0);
  std::vector<int> max_before(static_cast<std::size_t>(len), 0);
  if (len == 0) {
    visit(block, 0);
    return;
  }
  while (true) {
    int blocks = 0;
    for (int b : block) blocks = std::max(blocks, b + 1);
    visit(block, blocks);
    int i = len - 1;
    while (i > 0 && block[i] == max_before[i] + 1) --i;
    if (i == 0) return;
    ++block[i];
    for (int j = i + 1; j < len; ++j) {
      block[j] = 0;
      max_before[j] = std::max(max_before[j - 1], block[j - 1]);
    }
  }
}

}  // namespace detail

/// Formal evaluation of the bold monomial m_mu at finitely many coordinates:
/// sum over pairwise distinct indices of prod x_{i_c}^{mu_c}. Computed from
/// power sums by Moebius inversion over set partitions of mu's rows.
template <class Scalar>
Scalar eval_bold_monomial(const Partition& mu, std::span<const Scalar> x) {
  const int len = mu.length();
  if (len == 0) return Scalar(1);
  std::vector<Scalar> p(static_cast<std::size_t>(mu.size()) + 1, Scalar(0));
  for (const auto& xi : x) {
    if (xi == Scalar(0)) continue;
    Scalar pw = xi;
    for (int k = 1; k <= mu.size(); ++k) {
      p[k] += pw;
      pw *= xi;
    }
  }
  Scalar total(0);
  std::vector<int> block_weight;
  std::vector<int> block_size;
  detail::for_each_set_partition(len, [&](const std::vector<int>& block, int blocks) {
    block_weight.assign(blocks, 0);
    block_size.assign(blocks, 0);
    for (int i = 0; i < len; ++i) {
      block_weight[block[i]] += mu[i];
      ++block_size[block[i]];
    }
    Scalar term(1);
    long coefficient = 1;
    for (int b = 0; b < blocks; ++b) {
      term *= p[block_weight[b]];
      for (int j = 2; j < block_size[b]; ++j) coefficient *= j;
      if (block_size[b] % 2 == 0) coefficient = -coefficient;
    }
    total += Scalar(coefficient) * term;
  });
  return total;
}

/// Value of m_mu (bold, quotient algebra) at x, for any mu: with r = #1-parts,
/// sum_k C(r,k) gamma(x)^k m_{mu minus k one-box rows}(x).
template <class Scalar>
Scalar eval_monomial_at_point(const Partition& mu, const BasicSimplexPoint<Scalar>& x) {
  const int r = mu.multiplicity(1);
  if (r == 0) return eval_bold_monomial<Scalar>(mu, x.coords());
  std::vector<int> rest;
  for (int part : mu.parts())
    if (part > 1) rest.push_back(part);
  Scalar total(0);
  long binom = 1;
  for (int k = 0; k <= r; ++k) {
    std::vector<int> parts = rest;
    parts.insert(parts.end(), static_cast<std::size_t>(r - k), 1);
    total += Scalar(binom) * detail::power(x.gamma(), k) * eval_bold_monomial<Scalar>(Partition(parts), x.coords());
    binom = binom * (r - k) / (k + 1);
  }
  return total;
}

template <class Scalar, class Coef>
Scalar eval_at_point(const BasicQElement<Coef>& f, const BasicSimplexPoint<Scalar>& x) {
  Scalar total(0);
  for (const auto& [mu, c] : f.terms()) {
    if constexpr (std::is_same_v<Coef, Rational> && std::is_floating_point_v<Scalar>) {
      total += c.get_d() * eval_bold_monomial<Scalar>(mu, x.coords());
    } else {
      total += Scalar(c) * eval_bold_monomial<Scalar>(mu, x.coords());
    }
  }
  return total;
}

}  // namespace kingman
