#include "kingman/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace kingman {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// Row-level moves on a descending part vector. Weights are per row, so rows of
// equal value share the multiplicity factor of the transition functions.
void up_move(std::vector<int>& parts, double alpha, double theta, Rng& rng) {
  if (parts.empty()) {
    parts.push_back(1);
    return;
  }
  const int len = static_cast<int>(parts.size());
  int n = 0;
  for (int x : parts) n += x;
  const double new_row = std::max(0.0, theta + len * alpha);
  double u = uniform01(rng) * (n - len * alpha + new_row);
  for (int i = 0; i < len; ++i) {
    u -= parts[i] - alpha;
    if (u < 0) {
      ++parts[i];
      for (int j = i; j > 0 && parts[j - 1] < parts[j]; --j) std::swap(parts[j - 1], parts[j]);
      return;
    }
  }
  if (new_row > 0) {
    parts.push_back(1);
    return;
  }
  // Rounding left u at the very top of the range.
  ++parts[len - 1];
  for (int j = len - 1; j > 0 && parts[j - 1] < parts[j]; --j) std::swap(parts[j - 1], parts[j]);
}

void down_move(std::vector<int>& parts, Rng& rng) {
  int n = 0;
  for (int x : parts) n += x;
  long u = std::uniform_int_distribution<long>(0, n - 1)(rng);
  const int len = static_cast<int>(parts.size());
  for (int i = 0; i < len; ++i) {
    u -= parts[i];
    if (u < 0) {
      --parts[i];
      int j = i;
      for (; j + 1 < len && parts[j + 1] > parts[j]; ++j) std::swap(parts[j], parts[j + 1]);
      if (parts[j] == 0) parts.pop_back();
      return;
    }
  }
}

double beta_draw(double a, double b, Rng& rng) {
  const double x = std::gamma_distribution<double>(a, 1.0)(rng);
  const double y = std::gamma_distribution<double>(b, 1.0)(rng);
  return x / (x + y);
}

void require_principal(const Params& p, const char* what) {
  if (!p.is_principal()) throw std::invalid_argument(std::string(what) + ": principal-series parameters required");
}

}  // namespace

RngSeed RngSeed::substream(std::uint64_t k) const {
  std::uint64_t state = stream ^ (k * 0xd1342543de82ef95ULL);
  return {seed, splitmix64(state) + k};
}

Rng make_rng(const RngSeed& s) {
  std::uint64_t state = s.seed;
  std::uint64_t words[4];
  words[0] = splitmix64(state);
  words[1] = splitmix64(state);
  state ^= s.stream * 0x9e3779b97f4a7c15ULL;
  words[2] = splitmix64(state);
  words[3] = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(words[0]), static_cast<std::uint32_t>(words[0] >> 32),
                    static_cast<std::uint32_t>(words[1]), static_cast<std::uint32_t>(words[1] >> 32),
                    static_cast<std::uint32_t>(words[2]), static_cast<std::uint32_t>(words[2] >> 32),
                    static_cast<std::uint32_t>(words[3]), static_cast<std::uint32_t>(words[3] >> 32)};
  return Rng(seq);
}

Partition sample_partition(int n, const Params& p, Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample_partition: n must be >= 0");
  const double alpha = p.alpha().get_d();
  const double theta = p.theta().get_d();
  std::vector<int> parts;
  for (int k = 0; k < n; ++k) up_move(parts, alpha, theta, rng);
  return Partition(parts);
}

Partition sample_partition(int n, const Params& p, const RngSeed& seed) {
  Rng rng = make_rng(seed);
  return sample_partition(n, p, rng);
}

SimplexPoint sample_pd(const Params& p, Rng& rng, double tail_epsilon) {
  require_principal(p, "sample_pd");
  if (!(tail_epsilon > 0)) throw std::invalid_argument("sample_pd: tail_epsilon must be > 0");
  const double alpha = p.alpha().get_d();
  const double theta = p.theta().get_d();
  std::vector<double> coords;
  double rest = 1.0;
  for (long k = 1; rest >= tail_epsilon; ++k) {
    if (k > kMaxSticks) throw std::runtime_error("sample_pd: tail_epsilon not reached within kMaxSticks sticks");
    const double v = beta_draw(1.0 - alpha, theta + static_cast<double>(k) * alpha, rng);
    coords.push_back(rest * v);
    rest *= 1.0 - v;
  }
  std::sort(coords.begin(), coords.end(), std::greater<>());
  while (!coords.empty() && coords.back() == 0.0) coords.pop_back();
  return SimplexPoint(std::move(coords));
}

SimplexPoint sample_pd(const Params& p, const RngSeed& seed, double tail_epsilon) {
  Rng rng = make_rng(seed);
  return sample_pd(p, rng, tail_epsilon);
}

void simulate_updown(int n, long steps, const Params& p, const RngSeed& seed, const Partition& start,
                     const std::function<void(const UpdownSample&)>& visit, long record_every) {
  if (start.size() != n) throw std::invalid_argument("simulate_updown: start must have n boxes");
  if (auto N = p.max_length(); N && start.length() > *N) {
    throw std::invalid_argument("simulate_updown: start outside the degenerate support");
  }
  if (record_every < 1) throw std::invalid_argument("simulate_updown: record_every must be >= 1");
  const double alpha = p.alpha().get_d();
  const double theta = p.theta().get_d();
  const double n2 = static_cast<double>(n) * n;
  Rng rng = make_rng(seed);
  std::vector<int> parts = start.parts();

  auto emit = [&](long step) {
    UpdownSample s;
    s.step = step;
    s.t = static_cast<double>(step) / n2;
    s.parts = parts;
    for (int x : parts) {
      const double y = static_cast<double>(x) / n;
      s.q1 += y * y;
      s.q2 += y * y * y;
    }
    visit(s);
  };

  emit(0);
  for (long step = 1; step <= steps; ++step) {
    up_move(parts, alpha, theta, rng);
    down_move(parts, rng);
    if (step % record_every == 0) emit(step);
  }
}

std::vector<UpdownRecord> simulate_updown(int n, long steps, const Params& p, const RngSeed& seed,
                                          const Partition& start, long record_every) {
  std::vector<UpdownRecord> out;
  simulate_updown(
      n, steps, p, seed, start,
      [&](const UpdownSample& s) {
        out.push_back({s.step, s.t, Partition(std::vector<int>(s.parts.begin(), s.parts.end())), s.q1, s.q2});
      },
      record_every);
  return out;
}

void RunningStats::push(double x) {
  ++n_;
  const double d = x - mean_;
  mean_ += d / static_cast<double>(n_);
  m2_ += d * (x - mean_);
}

void RunningStats::merge(const RunningStats& o) {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double total = static_cast<double>(n_ + o.n_);
  const double d = o.mean_ - mean_;
  mean_ += d * static_cast<double>(o.n_) / total;
  m2_ += o.m2_ + d * d * static_cast<double>(n_) * static_cast<double>(o.n_) / total;
  n_ += o.n_;
}

MomentEstimate RunningStats::estimate() const {
  return {mean_, n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0, n_};
}

std::vector<MomentEstimate> estimate_moments(const std::vector<Partition>& lambdas, const Params& p, long n_samples,
                                             const RngSeed& seed, int jobs, double tail_epsilon) {
  require_principal(p, "estimate_moment");
  if (n_samples < 2) throw std::invalid_argument("estimate_moment: need at least 2 samples");
  for (const auto& lambda : lambdas) {
    if (!is_basis_index(lambda)) {
      throw std::invalid_argument("estimate_moment: observables with a part equal to 1 are not supported");
    }
  }
  constexpr long kChunk = 4096;
  const long chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<std::vector<RunningStats>> per_chunk(static_cast<std::size_t>(chunks),
                                                   std::vector<RunningStats>(lambdas.size()));

  auto run_chunk = [&](long c) {
    Rng rng = make_rng(seed.substream(static_cast<std::uint64_t>(c)));
    const long count = std::min(kChunk, n_samples - c * kChunk);
    auto& stats = per_chunk[static_cast<std::size_t>(c)];
    for (long s = 0; s < count; ++s) {
      SimplexPoint x = sample_pd(p, rng, tail_epsilon);
      for (std::size_t i = 0; i < lambdas.size(); ++i) stats[i].push(eval_bold_monomial<double>(lambdas[i], x.coords()));
    }
  };

  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(chunks)));
  if (jobs == 1) {
    for (long c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (long c = w; c < chunks; c += jobs) run_chunk(c);
      });
    }
    for (auto& t : workers) t.join();
  }

  std::vector<MomentEstimate> out;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    RunningStats total;
    for (const auto& chunk : per_chunk) total.merge(chunk[i]);
    out.push_back(total.estimate());
  }
  return out;
}

MomentEstimate estimate_moment(const Partition& lambda, const Params& p, long n_samples, const RngSeed& seed, int jobs,
                               double tail_epsilon) {
  return estimate_moments({lambda}, p, n_samples, seed, jobs, tail_epsilon).front();
}

}  // namespace kingman
