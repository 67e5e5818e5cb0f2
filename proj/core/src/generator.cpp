#include "kingman/generator.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <stdexcept>

namespace kingman {

namespace {

QElement column_element(const std::vector<Partition>& basis, const RationalMatrix& m, std::size_t j) {
  QElement out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], m(i, j));
  return out;
}

std::size_t basis_index(const std::vector<Partition>& basis, const Partition& mu) {
  auto it = std::find(basis.begin(), basis.end(), mu);
  if (it == basis.end()) throw std::invalid_argument("element outside the filtration: m" + mu.to_string());
  return static_cast<std::size_t>(it - basis.begin());
}

std::vector<Rational> coordinates(const std::vector<Partition>& basis, const QElement& f) {
  std::vector<Rational> v(basis.size());
  for (const auto& [mu, c] : f.terms()) v[basis_index(basis, mu)] = c;
  return v;
}

RationalMatrix matrix_of(const std::vector<Partition>& basis, const Params& p) {
  RationalMatrix a(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const QElement image = apply_generator(QElement::monomial(basis[j]), p);
    for (const auto& [mu, c] : image.terms()) a(basis_index(basis, mu), j) = c;
  }
  return a;
}

}  // namespace

QElement GeneratorMatrix::column(std::size_t j) const { return column_element(basis, entries, j); }

QElement GeneratorMatrix::apply(const QElement& f) const {
  std::vector<Rational> v = entries * coordinates(basis, f);
  QElement out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], v[i]);
  return out;
}

QElement apply_generator(const QElement& f, const Params& p) {
  QElement out;
  for (const auto& [mu, c] : f.terms()) {
    const int k = mu.size();
    out.add(mu, -c * k * (k - 1 + p.theta()));
    for (int part : mu.parts()) {
      if (part >= 2) out.add(remove_box(mu, part), c * part * (part - 1 - p.alpha()));
    }
  }
  return out;
}

GeneratorMatrix generator_matrix(int m, const Params& p) {
  if (m < 0) throw std::invalid_argument("generator_matrix: m must be >= 0");
  if (auto N = p.max_length(); N && m > *N) {
    throw std::invalid_argument("generator_matrix: degenerate series needs m <= N");
  }
  GeneratorMatrix g;
  g.degree = m;
  g.params = p;
  g.basis = filtration_basis(m);
  g.entries = matrix_of(g.basis, p);
  return g;
}

std::vector<Eigenvalue> generator_spectrum(int m, const Params& p) {
  if (!p.is_principal()) throw std::invalid_argument("generator_spectrum: principal-series parameters required");
  GeneratorMatrix g = generator_matrix(m, p);
  std::vector<Eigenvalue> out;
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    const Rational& d = g.entries(i, i);
    auto it = std::find_if(out.begin(), out.end(), [&](const Eigenvalue& e) { return e.value == d; });
    if (it == out.end()) {
      out.push_back({d, 1});
    } else {
      ++it->multiplicity;
    }
  }
  return out;
}

QElement q_action(const QAction& action, const Params& p) {
  auto single = [&](int i) {
    if (i < 1) throw std::invalid_argument("q_action: indices must be >= 1");
    QElement out = QElement::q(i) * Rational(-(i + 1) * (i + p.theta()));
    out += QElement::q(i - 1) * Rational((i + 1) * (i - p.alpha()));
    return out;
  };
  switch (action.kind) {
    case QAction::Kind::One:
      return {};
    case QAction::Kind::Single:
      return single(action.i);
    case QAction::Kind::Pair: {
      const int i = action.i;
      const int j = action.j;
      QElement qi = QElement::q(i);
      QElement qj = QElement::q(j);
      QElement out = product_expand(qi, single(j)) + product_expand(qj, single(i));
      out += (QElement::q(i + j) - product_expand(qi, qj)) * Rational(2 * (i + 1) * (j + 1));
      return out;
    }
  }
  throw std::logic_error("q_action: unknown kind");
}

Rational pd_moment(const Partition& lambda, const Params& p) {
  const int n = lambda.size();
  const int len = lambda.length();
  if (len == 0) return 1;
  const Rational& alpha = p.alpha();
  const Rational& theta = p.theta();
  // The common factor theta of (-theta/alpha)^{down l} and (theta)_n is cancelled
  // so that theta = 0 (allowed when alpha > 0) stays regular.
  Rational denom = 1;
  for (int j = 1; j < n; ++j) denom *= theta + j;
  Rational value;
  if (alpha == 0) {
    value = 1;
    for (int j = 1; j < len; ++j) value *= theta;
    for (int part : lambda.parts()) value *= Rational(factorial(part - 1));
  } else {
    const Rational ratio = -theta / alpha;
    value = -1 / alpha;
    for (int j = 1; j < len; ++j) value *= ratio - j;
    for (int part : lambda.parts()) value *= pochhammer(-alpha, part);
  }
  return value / denom;
}

Rational pd_expectation(const QElement& f, const Params& p) {
  Rational total = 0;
  for (const auto& [mu, c] : f.terms()) total += c * pd_moment(mu, p);
  return total;
}

LevelDistribution kingman_reconstruct(int n, const Params& p) {
  LevelDistribution d;
  d.level = n;
  d.states = enumerate_level(n);
  for (const auto& lambda : d.states) {
    d.weights.push_back(Rational(dimension(lambda)) / Rational(lambda.multiplicity_factorial()) * pd_moment(lambda, p));
  }
  return d;
}

RationalMatrix gram_matrix(int m, const Params& p) {
  auto basis = filtration_basis(m);
  RationalMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      g(i, j) = pd_expectation(product_expand(QElement::monomial(basis[i]), QElement::monomial(basis[j])), p);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

QElementF semigroup_apply(double t, const QElement& f, const Params& p) {
  if (!(t >= 0)) throw std::invalid_argument("semigroup_apply: t must be >= 0");
  if (!p.is_principal()) throw std::invalid_argument("semigroup_apply: principal-series parameters required");
  QElementF out;
  if (f.is_zero()) return out;
  if (t == 0) {
    for (const auto& [mu, c] : f.terms()) out.add(mu, c.get_d());
    return out;
  }
  GeneratorMatrix g = generator_matrix(f.degree(), p);
  const auto dim = static_cast<Eigen::Index>(g.basis.size());
  Eigen::MatrixXd a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = g.entries(i, j).get_d();
  Eigen::VectorXd v(dim);
  auto coords = coordinates(g.basis, f);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = coords[i].get_d();
  Eigen::MatrixXd e = (a * t).exp();
  Eigen::VectorXd w = e * v;
  for (Eigen::Index i = 0; i < dim; ++i) out.add(g.basis[i], w(i));
  return out;
}

namespace {

// Incremental exact row echelon form used to pick independent evaluation rows.
class RowBasis {
 public:
  explicit RowBasis(std::size_t dim) : dim_(dim) {}

  bool full() const { return rows_.size() == dim_; }

  bool try_add(std::vector<Rational> row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& c = row[pivots_[k]];
      if (c == 0) continue;
      const Rational factor = c;
      for (std::size_t j = 0; j < dim_; ++j) row[j] -= factor * rows_[k][j];
    }
    auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    if (it == row.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - row.begin());
    const Rational lead = *it;
    for (auto& x : row) x /= lead;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational c = rows_[k][pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) rows_[k][j] -= c * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Rational> evaluation_row(const std::vector<Partition>& basis, const Partition& lambda, int n) {
  const RationalSimplexPoint x = embed(lambda, n);
  std::vector<Rational> row;
  row.reserve(basis.size());
  for (const auto& mu : basis) row.push_back(eval_bold_monomial<Rational>(mu, x.coords()));
  return row;
}

// n^2 ((T_n - 1) f)(lambda) for every basis function f, by summing over the
// up moves from lambda and then the down moves back to level n.
std::vector<Rational> scaled_chain_row(const std::vector<Partition>& basis, const Partition& lambda, int n,
                                       const Params& p) {
  std::vector<Rational> out(basis.size());
  for (const auto& up : up_transitions(lambda, p)) {
    for (const auto& down : down_transitions(up.target)) {
      const Rational w = up.probability * down.probability;
      auto values = evaluation_row(basis, down.target, n);
      for (std::size_t j = 0; j < basis.size(); ++j) out[j] += w * values[j];
    }
  }
  auto here = evaluation_row(basis, lambda, n);
  const Rational n2 = Rational(n) * n;
  for (std::size_t j = 0; j < basis.size(); ++j) out[j] = n2 * (out[j] - here[j]);
  return out;
}

}  // namespace

FiniteGenerator finite_generator(int n, int m, const Params& p, int extra_checks) {
  if (n < 1) throw std::invalid_argument("finite_generator: n must be >= 1");
  GeneratorMatrix target = generator_matrix(m, p);
  FiniteGenerator fg;
  fg.n = n;
  fg.degree = m;
  fg.basis = target.basis;
  const std::size_t dim = fg.basis.size();
  const auto max_len = p.max_length();

  RowBasis echelon(dim);
  std::vector<std::vector<Rational>> solve_rows;
  std::vector<std::vector<Rational>> check_rows;
  for_each_partition(n, [&](const Partition& lambda) {
    if (max_len && lambda.length() > *max_len) return true;
    auto row = evaluation_row(fg.basis, lambda, n);
    if (!echelon.full() && echelon.try_add(row)) {
      fg.solve_points.push_back(lambda);
      solve_rows.push_back(std::move(row));
    } else if (echelon.full()) {
      fg.check_points.push_back(lambda);
      check_rows.push_back(std::move(row));
    }
    return !(echelon.full() && static_cast<int>(fg.check_points.size()) >= extra_checks);
  });
  if (!echelon.full()) {
    throw std::domain_error("finite_generator: level " + std::to_string(n) + " does not separate the degree-" +
                            std::to_string(m) + " basis");
  }

  RationalMatrix e(dim, dim);
  RationalMatrix rhs(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    auto image = scaled_chain_row(fg.basis, fg.solve_points[r], n, p);
    for (std::size_t j = 0; j < dim; ++j) {
      e(r, j) = solve_rows[r][j];
      rhs(r, j) = image[j];
    }
  }
  auto b = solve(e, rhs);
  if (!b) throw std::domain_error("finite_generator: singular evaluation system");
  fg.matrix = std::move(*b);

  fg.residual = 0;
  for (std::size_t r = 0; r < fg.check_points.size(); ++r) {
    auto image = scaled_chain_row(fg.basis, fg.check_points[r], n, p);
    for (std::size_t j = 0; j < dim; ++j) {
      Rational predicted = 0;
      for (std::size_t k = 0; k < dim; ++k) predicted += check_rows[r][k] * fg.matrix(k, j);
      Rational diff = abs(predicted - image[j]);
      if (diff > fg.residual) fg.residual = diff;
    }
  }

  fg.deviation = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Rational diff = abs(fg.matrix(i, j) - target.entries(i, j));
      if (diff > fg.deviation) fg.deviation = diff;
    }
  }
  return fg;
}

Polynomial natural_generator(const Polynomial& f, const Params& p) {
  Polynomial out = simplex_diffusion_part(f);
  for (int i = 0; i < f.nvars(); ++i) {
    Polynomial di = f.derivative(i);
    out -= di.times_variable(i) * p.theta();
    out -= di * p.alpha();
  }
  return out;
}

}  // namespace kingman
