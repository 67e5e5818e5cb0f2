#include "kingman/ewens_pitman.hpp"

#include <sstream>
#include <stdexcept>

namespace kingman {

Params::Params(Rational alpha, Rational theta) : alpha_(std::move(alpha)), theta_(std::move(theta)) {
  alpha_.canonicalize();
  theta_.canonicalize();
  if (alpha_ >= 0) {
    if (alpha_ >= 1) {
      throw std::invalid_argument("principal series requires alpha < 1 (got alpha = " +
                                  kingman::to_string(alpha_) + ")");
    }
    if (theta_ <= -alpha_) {
      throw std::invalid_argument("principal series requires theta > -alpha (got theta = " +
                                  kingman::to_string(theta_) + ", alpha = " + kingman::to_string(alpha_) +
                                  ")");
    }
    series_ = Series::Principal;
    return;
  }
  // alpha = -beta < 0: theta must be N * beta for an integer N >= 2.
  Rational ratio = theta_ / (-alpha_);
  if (ratio.get_den() != 1 || ratio < 2) {
    throw std::invalid_argument("degenerate series requires theta = N * beta with beta = -alpha and integer N >= 2 "
                                "(got theta / beta = " +
                                kingman::to_string(ratio) + ")");
  }
  series_ = Series::Degenerate;
  degenerate_n_ = static_cast<int>(ratio.get_num().get_si());
}

Params Params::degenerate(int N, const Rational& beta) {
  if (N < 2) throw std::invalid_argument("degenerate series requires N >= 2");
  if (beta <= 0) throw std::invalid_argument("degenerate series requires beta > 0");
  return Params(-beta, beta * N);
}

int Params::degenerate_n() const {
  if (series_ != Series::Degenerate) throw std::logic_error("principal parameters have no N");
  return degenerate_n_;
}

Rational Params::beta() const {
  if (series_ != Series::Degenerate) throw std::logic_error("principal parameters have no beta");
  return -alpha_;
}

std::optional<int> Params::max_length() const {
  if (series_ == Series::Degenerate) return degenerate_n_;
  return std::nullopt;
}

std::string Params::to_string() const {
  std::ostringstream out;
  out << "alpha=" << kingman::to_string(alpha_) << ", theta=" << kingman::to_string(theta_);
  if (series_ == Series::Degenerate) out << " (degenerate, N=" << degenerate_n_ << ")";
  return out.str();
}

StateSpace::StateSpace(int n, std::optional<int> max_length)
    : n_(n), max_length_(max_length), states_(enumerate_level(n, max_length.value_or(n))) {
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::optional<std::size_t> StateSpace::find(const Partition& lambda) const {
  if (auto it = index_.find(lambda); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t StateSpace::index_of(const Partition& lambda) const {
  if (auto i = find(lambda)) return *i;
  throw std::out_of_range("partition " + lambda.to_string() + " is not a state of level " + std::to_string(n_));
}

const Rational& LevelDistribution::operator()(const Partition& lambda) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == lambda) return weights[i];
  }
  throw std::out_of_range("partition " + lambda.to_string() + " is not in level " + std::to_string(level));
}

Rational LevelDistribution::total() const {
  Rational sum = 0;
  for (const auto& w : weights) sum += w;
  return sum;
}

Rational measure_weight(const Partition& lambda, const Params& p) {
  const int n = lambda.size();
  if (n == 0) return 1;
  const Rational& alpha = p.alpha();
  const Rational& theta = p.theta();
  // n!/(theta)_n * theta(theta+alpha)...(theta+(l-1)alpha): the leading theta
  // is common to both products and cancelled, so theta = 0 is regular.
  Rational value = Rational(factorial(n));
  for (int j = 1; j < lambda.length(); ++j) value *= theta + j * alpha;
  for (int j = 1; j < n; ++j) value /= theta + j;
  // Boxes in columns >= 2 contribute (r - 1 - alpha) each.
  for (int part : lambda.parts()) {
    for (int r = 2; r <= part; ++r) value *= Rational(r - 1) - alpha;
    value /= Rational(factorial(part));
  }
  value /= Rational(lambda.multiplicity_factorial());
  return value;
}

LevelDistribution measure(int n, const Params& p) {
  LevelDistribution dist;
  dist.level = n;
  dist.states = enumerate_level(n);
  dist.weights.reserve(dist.states.size());
  for (const auto& lambda : dist.states) dist.weights.push_back(measure_weight(lambda, p));
  return dist;
}

Rational down_prob(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() + 1) {
    throw std::invalid_argument("down_prob: need |lambda| = |mu| + 1 (got " + lambda.to_string() + ", " +
                                mu.to_string() + ")");
  }
  auto v = removed_row_value(lambda, mu);
  if (!v) return 0;
  // g(mu)/g(lambda) = v / |lambda| for the row of length v that lost a box.
  Rational value(lambda.multiplicity(*v) * *v, lambda.size());
  value.canonicalize();
  return value;
}

namespace {

void require_support(const Partition& lambda, const Params& p) {
  if (auto N = p.max_length(); N && lambda.length() > *N) {
    throw std::invalid_argument("up_prob: " + lambda.to_string() + " has more than N = " + std::to_string(*N) +
                                " rows (outside the degenerate support)");
  }
}

}  // namespace

std::vector<Transition> up_transitions(const Partition& lambda, const Params& p) {
  require_support(lambda, p);
  std::vector<Transition> out;
  if (lambda.empty()) {
    out.push_back({Partition{1}, Rational(1)});
    return out;
  }
  const Rational denom = p.theta() + lambda.size();
  for (int v : lambda.distinct_parts()) {
    Rational prob = (Rational(v) - p.alpha()) * lambda.multiplicity(v) / denom;
    if (prob != 0) out.push_back({add_box(lambda, v), std::move(prob)});
  }
  Rational prob = (p.theta() + lambda.length() * p.alpha()) / denom;
  if (prob != 0) out.push_back({add_box(lambda, kNewRow), std::move(prob)});
  return out;
}

std::vector<Transition> down_transitions(const Partition& lambda) {
  std::vector<Transition> out;
  for (const auto& nb : lower_neighbours(lambda)) {
    Rational prob(nb.multiplicity * nb.row_value, lambda.size());
    prob.canonicalize();
    out.push_back({nb.diagram, std::move(prob)});
  }
  return out;
}

Rational up_prob(const Partition& lambda, const Partition& nu, const Params& p) {
  if (nu.size() != lambda.size() + 1) {
    throw std::invalid_argument("up_prob: need |nu| = |lambda| + 1 (got " + lambda.to_string() + ", " +
                                nu.to_string() + ")");
  }
  for (auto& t : up_transitions(lambda, p)) {
    if (t.target == nu) return t.probability;
  }
  return 0;
}

bool check_coherency(int n, const Params& p) {
  if (n < 0) throw std::invalid_argument("check_coherency: n must be nonnegative");
  for (const auto& mu : enumerate_level(n)) {
    Rational rhs = 0;
    for (const auto& nb : upper_neighbours(mu)) {
      rhs += measure_weight(nb.diagram, p) * down_prob(nb.diagram, mu);
    }
    if (rhs != measure_weight(mu, p)) return false;
  }
  return true;
}

}  // namespace kingman
