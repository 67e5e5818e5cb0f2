#include "kingman/wright_fisher.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kingman {

FiniteSimplexPoint::FiniteSimplexPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("finite simplex point: need N >= 2 coordinates");
  double sum = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!(coords_[i] >= 0)) throw std::invalid_argument("finite simplex point: negative coordinate");
    if (i > 0 && coords_[i] > coords_[i - 1]) {
      throw std::invalid_argument("finite simplex point: coordinates must be decreasing");
    }
    sum += coords_[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("finite simplex point: coordinates must sum to 1");
}

double FiniteSimplexPoint::q(int k) const {
  double total = 0;
  for (double x : coords_) total += std::pow(x, k + 1);
  return total;
}

FiniteSimplexPoint FiniteSimplexPoint::vertex(int N) {
  std::vector<double> x(static_cast<std::size_t>(N), 0.0);
  if (N >= 1) x[0] = 1.0;
  return FiniteSimplexPoint(std::move(x));
}

FiniteSimplexPoint FiniteSimplexPoint::barycenter(int N) {
  return FiniteSimplexPoint(std::vector<double>(static_cast<std::size_t>(std::max(N, 0)), 1.0 / N));
}

QElement wf_q_action(int k, int N, const Rational& eta) {
  if (N < 2) throw std::invalid_argument("wf_q_action: N must be >= 2");
  if (k < 1 || k > N - 1) throw std::invalid_argument("wf_q_action: need 1 <= k <= N - 1");
  if (eta <= 0) throw std::invalid_argument("wf_q_action: eta must be > 0");
  const Rational drift = eta / (N - 1);
  QElement out = QElement::q(k - 1) * Rational((k + 1) * (k + drift));
  out -= QElement::q(k) * Rational((k + 1) * (k + N * drift));
  return out;
}

Polynomial wf_operator(const Polynomial& f, const Rational& eta) {
  const int N = f.nvars();
  if (N < 2) throw std::invalid_argument("wf_operator: need at least 2 variables");
  const Rational drift = eta / (N - 1);
  Polynomial out = simplex_diffusion_part(f);
  for (int i = 0; i < N; ++i) {
    Polynomial di = f.derivative(i);
    out += di * drift;
    out -= di.times_variable(i) * Rational(N * drift);
  }
  return out;
}

FiniteGenerator degenerate_finite_generator(int n, int m, int N, const Rational& beta, int extra_checks) {
  return finite_generator(n, m, Params::degenerate(N, beta), extra_checks);
}

namespace {

void normalize_sorted(std::vector<double>& x) {
  for (double& v : x) v = std::max(v, 0.0);
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (!(sum > 0)) {
    std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(x.size()));
    return;
  }
  for (double& v : x) v /= sum;
  std::sort(x.begin(), x.end(), std::greater<>());
  // Snap the last coordinate so the sum is 1 to rounding.
  double head = std::accumulate(x.begin(), x.end() - 1, 0.0);
  x.back() = std::max(0.0, 1.0 - head);
  std::sort(x.begin(), x.end(), std::greater<>());
}

}  // namespace

void simulate_wf(int N, double eta, double dt, long steps, const RngSeed& seed, const FiniteSimplexPoint& x0,
                 const std::function<void(const WfSample&)>& visit, long record_every) {
  if (x0.dim() != N) throw std::invalid_argument("simulate_wf: x0 must have N coordinates");
  if (!(dt > 0)) throw std::invalid_argument("simulate_wf: dt must be > 0");
  if (!(eta > 0)) throw std::invalid_argument("simulate_wf: eta must be > 0");
  if (record_every < 1) throw std::invalid_argument("simulate_wf: record_every must be >= 1");
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double drift = eta / (N - 1);
  const double scale = std::sqrt(2.0 * dt);
  std::vector<double> x = x0.coords();
  std::vector<double> s(static_cast<std::size_t>(N));
  std::vector<double> z(static_cast<std::size_t>(N));

  FiniteSimplexPoint current = x0;
  visit({0, 0.0, &current});
  for (long step = 1; step <= steps; ++step) {
    double sz = 0;
    for (int i = 0; i < N; ++i) {
      s[i] = std::sqrt(x[i]);
      z[i] = normal(rng);
      sz += s[i] * z[i];
    }
    for (int i = 0; i < N; ++i) {
      x[i] += drift * (1.0 - N * x[i]) * dt + scale * s[i] * (z[i] - s[i] * sz);
    }
    normalize_sorted(x);
    if (step % record_every == 0) {
      current = FiniteSimplexPoint(x);
      visit({step, static_cast<double>(step) * dt, &current});
    }
  }
}

double wf_time_average_q1(int N, double eta, double dt, long steps, long burn_in, const RngSeed& seed,
                          const FiniteSimplexPoint& x0) {
  if (burn_in >= steps) throw std::invalid_argument("wf_time_average_q1: burn_in must be below steps");
  double total = 0;
  long count = 0;
  simulate_wf(N, eta, dt, steps, seed, x0, [&](const WfSample& s) {
    if (s.step <= burn_in) return;
    total += s.x->q(1);
    ++count;
  });
  return total / static_cast<double>(count);
}

double dirichlet_ordered_density(const FiniteSimplexPoint& x, int N, const Rational& beta) {
  if (x.dim() != N) throw std::invalid_argument("dirichlet_ordered_density: x must have N coordinates");
  if (beta <= 0) throw std::invalid_argument("dirichlet_ordered_density: beta must be > 0");
  const auto& c = x.coords();
  for (int i = 0; i < N; ++i) {
    if (c[i] <= 0) throw std::domain_error("dirichlet_ordered_density: x on the boundary");
    if (i > 0 && c[i] >= c[i - 1]) throw std::domain_error("dirichlet_ordered_density: tied coordinates");
  }
  const double b = beta.get_d();
  double log_density = std::lgamma(N + 1.0) + std::lgamma(N * b) - N * std::lgamma(b);
  for (double xi : c) log_density += (b - 1.0) * std::log(xi);
  return std::exp(log_density);
}

FiniteSimplexPoint sample_dirichlet_ordered(int N, const Rational& beta, Rng& rng) {
  if (N < 2) throw std::invalid_argument("sample_dirichlet_ordered: N must be >= 2");
  if (beta <= 0) throw std::invalid_argument("sample_dirichlet_ordered: beta must be > 0");
  const double b = beta.get_d();
  std::vector<double> logs(static_cast<std::size_t>(N));
  if (b >= 1) {
    std::gamma_distribution<double> gamma(b, 1.0);
    for (double& l : logs) l = std::log(gamma(rng));
  } else {
    // G_b = G_{b+1} U^{1/b} in distribution.
    std::gamma_distribution<double> gamma(b + 1.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (double& l : logs) {
      double u = uniform(rng);
      while (u == 0.0) u = uniform(rng);
      l = std::log(gamma(rng)) + std::log(u) / b;
    }
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  std::vector<double> x(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) x[i] = std::exp(logs[i] - top);
  normalize_sorted(x);
  return FiniteSimplexPoint(std::move(x));
}

FiniteSimplexPoint sample_dirichlet_ordered(int N, const Rational& beta, const RngSeed& seed) {
  Rng rng = make_rng(seed);
  return sample_dirichlet_ordered(N, beta, rng);
}

}  // namespace kingman
