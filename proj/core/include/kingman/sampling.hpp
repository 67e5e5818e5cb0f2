#pragma once

#include "kingman/ewens_pitman.hpp"
#include "kingman/partitions.hpp"
#include "kingman/symfunc.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace kingman {

/// (seed, stream) pair. The generator is std::mt19937_64 seeded through
/// splitmix64 of both words, so equal pairs give equal sequences on a given
/// standard library.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngSeed substream(std::uint64_t k) const;
  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

using Rng = std::mt19937_64;
Rng make_rng(const RngSeed& s);

struct MomentEstimate {
  double mean = 0;
  double std_error = 0;
  long n_samples = 0;
};

/// Exact draw from M_n by n up-steps from the empty diagram.
Partition sample_partition(int n, const Params& p, Rng& rng);
Partition sample_partition(int n, const Params& p, const RngSeed& seed);

/// Stick-breaking stops once the remaining stick is below this.
inline constexpr double kDefaultTailEpsilon = 1e-6;
/// Tail used by estimate_moment. The unbroken remainder R after k sticks is
/// R times a PD(alpha, theta + k alpha) point, so dropping it moves an
/// observable without 1-parts by about R^2 (1-alpha)/(1+theta+k alpha) in
/// expectation: ~1e-7 here, far below Monte Carlo error.
inline constexpr double kMomentTailEpsilon = 1e-2;
inline constexpr long kMaxSticks = 50'000'000;

/// Poisson-Dirichlet(alpha, theta) point from Beta(1-alpha, theta+k alpha)
/// sticks, sorted descending; gamma() of the result is the unbroken remainder
/// (< tail_epsilon). For alpha > 0 the remainder after k sticks decays like
/// k^{-(1-alpha)/alpha}, so small tails at large alpha are expensive; more than
/// kMaxSticks sticks throws std::runtime_error. Principal series.
SimplexPoint sample_pd(const Params& p, Rng& rng, double tail_epsilon = kDefaultTailEpsilon);
SimplexPoint sample_pd(const Params& p, const RngSeed& seed, double tail_epsilon = kDefaultTailEpsilon);

struct UpdownSample {
  long step = 0;
  double t = 0;  // step / n^2
  std::span<const int> parts;
  double q1 = 0;  // sum (lambda_i/n)^2
  double q2 = 0;  // sum (lambda_i/n)^3
};

/// Runs the n-th up/down chain from `start` for `steps` ticks (one up move
/// then one down move each) and calls `visit` at step 0 and every
/// `record_every` steps after it.
void simulate_updown(int n, long steps, const Params& p, const RngSeed& seed, const Partition& start,
                     const std::function<void(const UpdownSample&)>& visit, long record_every = 1);

struct UpdownRecord {
  long step;
  double t;
  Partition state;
  double q1;
  double q2;
};
std::vector<UpdownRecord> simulate_updown(int n, long steps, const Params& p, const RngSeed& seed,
                                          const Partition& start, long record_every = 1);

/// Mean and standard error of m_lambda over sample_pd draws. Samples are drawn
/// in fixed chunks on substreams of `seed`, so the result does not depend on
/// `jobs`. lambda must have no part equal to 1.
MomentEstimate estimate_moment(const Partition& lambda, const Params& p, long n_samples, const RngSeed& seed,
                               int jobs = 1, double tail_epsilon = kMomentTailEpsilon);

/// Same, for several observables evaluated on shared draws.
std::vector<MomentEstimate> estimate_moments(const std::vector<Partition>& lambdas, const Params& p, long n_samples,
                                             const RngSeed& seed, int jobs = 1,
                                             double tail_epsilon = kMomentTailEpsilon);

/// Combines per-sample statistics accumulated in a fixed order.
class RunningStats {
 public:
  void push(double x);
  void merge(const RunningStats& o);
  long count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  MomentEstimate estimate() const;

 private:
  long n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

}  // namespace kingman
