// Acceptance run: one PASS/FAIL line per criterion. With arguments, only the
// listed criterion numbers run.
#include "kingman/ewens_pitman.hpp"
#include "kingman/generator.hpp"
#include "kingman/partitions.hpp"
#include "kingman/sampling.hpp"
#include "kingman/symfunc.hpp"
#include "kingman/updown.hpp"
#include "kingman/wright_fisher.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace kingman;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Report {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) msgs_ << (msgs_.tellp() > 0 ? "; " : "") << what;
  }
  void note(const std::string& what) { notes_ << (notes_.tellp() > 0 ? "; " : "") << what; }
  Outcome outcome() const {
    if (failures_ == 0) return {true, notes_.str()};
    return {false, std::to_string(failures_) + " failure(s): " + msgs_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream msgs_;
  std::ostringstream notes_;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const Params kHalfOne(make_rational(1, 2), 1);

std::vector<Params> principal_grid() {
  return {Params(0, 1), kHalfOne, Params(make_rational(1, 2), make_rational(1, 2)), Params(0, 2),
          Params(make_rational(9, 10), make_rational(1, 10))};
}

std::vector<Params> full_grid() {
  auto g = principal_grid();
  g.push_back(Params::degenerate(3, 1));
  return g;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& mu : enumerate_level(k)) out.push_back(std::move(mu));
  return out;
}

Outcome coherency() {
  Report r;
  for (const auto& p : full_grid()) {
    for (int n = 0; n <= 15; ++n) {
      if (measure(n, p).total() != 1) r.fail("sum M_" + std::to_string(n) + " != 1 at " + p.to_string());
      if (n < 15 && !check_coherency(n, p)) r.fail("coherency n=" + std::to_string(n) + " at " + p.to_string());
    }
  }
  r.note("6 parameter points, n <= 15");
  return r.outcome();
}

Outcome reversibility() {
  Report r;
  for (const auto& p : full_grid()) {
    for (int n = 1; n <= 12; ++n) {
      auto t = transition_matrix(n, p);
      auto w = stationary_weights(t, p);
      if (!t.is_stochastic()) r.fail("T_" + std::to_string(n) + " not stochastic at " + p.to_string());
      if (!is_reversible(t, w)) r.fail("not reversible n=" + std::to_string(n) + " at " + p.to_string());
    }
  }
  r.note("n <= 12");
  return r.outcome();
}

Outcome triangular_action() {
  Report r;
  long checked = 0;
  for (const auto& p : principal_grid()) {
    for (int n = 1; n <= 10; ++n) {
      for (const auto& mu : partitions_up_to(n)) {
        if (!verify_triangular_action(n, mu, p).is_zero())
          r.fail("mu=" + mu.to_string() + " n=" + std::to_string(n) + " at " + p.to_string());
        ++checked;
      }
    }
  }
  r.note(std::to_string(checked) + " exact residuals");
  return r.outcome();
}

Outcome tilde_lemma() {
  Report r;
  long checked = 0;
  for (const auto& p : principal_grid()) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& mu : partitions_up_to(std::min(n, 6))) {
        auto res = verify_tilde_lemma(mu, n, p);
        if (!res.down.is_zero() || !res.up.is_zero())
          r.fail("mu=" + mu.to_string() + " n=" + std::to_string(n) + " at " + p.to_string());
        ++checked;
      }
    }
  }
  r.note(std::to_string(checked) + " (mu, n) pairs");
  return r.outcome();
}

Outcome chain_spectrum_check() {
  Report r;
  double worst = 0;
  for (const auto& p : principal_grid()) {
    for (int n = 1; n <= 10; ++n) {
      std::vector<double> predicted;
      for (const auto& e : predicted_chain_spectrum(n, p))
        for (int k = 0; k < e.multiplicity; ++k) predicted.push_back(e.value.get_d());
      std::sort(predicted.rbegin(), predicted.rend());
      auto got = chain_spectrum(n, p);
      if (got.size() != predicted.size()) {
        r.fail("size mismatch n=" + std::to_string(n));
        continue;
      }
      for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - predicted[i]));
      if (n <= 5 && !verify_chain_spectrum_exact(n, p))
        r.fail("exact check n=" + std::to_string(n) + " at " + p.to_string());
    }
  }
  if (worst > 1e-9) r.fail("max eigenvalue error " + fmt("%.3g", worst));
  r.note("max eigenvalue error " + fmt("%.3g", worst));
  return r.outcome();
}

Outcome generator_convergence() {
  Report r;
  std::ostringstream ratios;
  for (const auto& p : principal_grid()) {
    std::vector<double> dev;
    for (int n : {32, 64, 128}) {
      auto fg = finite_generator(n, 3, p);
      if (fg.residual != 0) r.fail("nonzero residual n=" + std::to_string(n));
      dev.push_back(fg.deviation.get_d());
    }
    ratios << " " << p.to_string() << ":";
    for (std::size_t i = 0; i + 1 < dev.size(); ++i) {
      const double q = dev[i] / dev[i + 1];
      ratios << fmt(" %.3f", q);
      if (!(q >= 1.6 && q <= 2.5)) r.fail("ratio " + fmt("%.3f", q) + " at " + p.to_string());
    }
  }
  r.note("ratios" + ratios.str());
  return r.outcome();
}

Outcome generator_spectrum_check() {
  Report r;
  for (const auto& p : principal_grid()) {
    for (int m = 0; m <= 6; ++m) {
      auto a = generator_matrix(m, p);
      std::vector<Rational> diag;
      for (std::size_t i = 0; i < a.entries.rows(); ++i) {
        diag.push_back(a.entries(i, i));
        for (std::size_t j = 0; j < i; ++j)
          if (a.entries(i, j) != 0) r.fail("not triangular m=" + std::to_string(m));
      }
      std::vector<Rational> expected{0};
      for (int k = 2; k <= m; ++k) {
        const BigInt mult = partition_count(k) - partition_count(k - 1);
        for (long i = 0; i < mult.get_si(); ++i) expected.push_back(-k * (k - 1 + p.theta()));
      }
      std::sort(diag.begin(), diag.end());
      std::sort(expected.begin(), expected.end());
      if (diag != expected) r.fail("diagonal multiset m=" + std::to_string(m) + " at " + p.to_string());
    }
  }
  std::ostringstream s;
  for (const auto& e : generator_spectrum(4, Params(0, 1)))
    s << (s.tellp() > 0 ? ", " : "") << to_string(e.value) << "x" << e.multiplicity;
  r.note("theta=1, m=4: {" + s.str() + "}");
  return r.outcome();
}

Outcome reconstruction() {
  Report r;
  for (const auto& p : full_grid())
    for (int n = 0; n <= 8; ++n)
      if (kingman_reconstruct(n, p).weights != measure(n, p).weights)
        r.fail("n=" + std::to_string(n) + " at " + p.to_string());
  r.note("n <= 8");
  return r.outcome();
}

Outcome q_coordinates() {
  Report r;
  for (const auto& p : principal_grid()) {
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; i + j <= 5; ++j) {
        auto a = generator_matrix(i + j + 2, p);
        auto expect = a.apply(product_expand(QElement::q(i), QElement::q(j)));
        if (q_action(QAction::pair(i, j), p) != expect)
          r.fail("pair(" + std::to_string(i) + "," + std::to_string(j) + ") at " + p.to_string());
      }
    }
    for (int m = 0; m <= 5; ++m) {
      auto g = gram_matrix(m, p);
      auto a = generator_matrix(m, p);
      if (!g.is_symmetric() || !(g * a.entries).is_symmetric())
        r.fail("Gram symmetry m=" + std::to_string(m) + " at " + p.to_string());
    }
  }
  r.note("pairs with i+j <= 5, Gram m <= 5");
  return r.outcome();
}

Outcome monte_carlo() {
  Report r;
  std::ostringstream s;
  std::uint64_t seed = 1001;
  for (const auto& p : {kHalfOne, Params(0, 1)}) {
    const long total = 100000;
    Rng rng = make_rng({seed++, 0});
    std::map<Partition, long> counts;
    for (long i = 0; i < total; ++i) ++counts[sample_partition(6, p, rng)];
    const auto d = measure(6, p);
    double stat = 0;
    for (std::size_t i = 0; i < d.states.size(); ++i) {
      const double e = d.weights[i].get_d() * total;
      const double o = static_cast<double>(counts[d.states[i]]);
      stat += (o - e) * (o - e) / e;
    }
    const double bound = boost::math::quantile(boost::math::chi_squared(d.states.size() - 1.0), 0.999);
    if (stat >= bound) r.fail("chi2 " + fmt("%.1f", stat) + " at " + p.to_string());
    s << p.to_string() << " chi2 " << fmt("%.1f", stat) << "/" << fmt("%.1f", bound);

    const std::vector<Partition> obs{{2}, {2, 2}, {3}};
    auto est = estimate_moments(obs, p, total, {seed++, 0});
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const double z = (est[i].mean - pd_moment(obs[i], p).get_d()) / est[i].std_error;
      s << " z" << obs[i].to_string() << fmt("=%.2f", z);
      if (!(std::abs(z) <= 4)) r.fail("moment " + obs[i].to_string() + " z=" + fmt("%.2f", z));
    }
    r.note(s.str());
    s.str("");
  }
  return r.outcome();
}

Outcome updown_ergodic() {
  Report r;
  {
    const int n = 200;
    const long per_unit = long(n) * n;
    double sum = 0;
    long count = 0;
    simulate_updown(n, 50 * per_unit, kHalfOne, {20261015, 0}, Partition{n}, [&](const UpdownSample& s) {
      if (s.step >= 5 * per_unit) {
        sum += s.q1;
        ++count;
      }
    });
    const double avg = sum / count;
    if (!(std::abs(avg - 0.25) <= 0.02)) r.fail("time-average q1 " + fmt("%.4f", avg));
    r.note("time-average q1 " + fmt("%.4f", avg));
  }
  {
    // Autocorrelation of q1 at n = 100, sampled every 0.01 scaled time units;
    // least squares slope of log rho(tau) over tau in (0, 0.5].
    const int n = 100;
    const long per_unit = long(n) * n;
    const long every = per_unit / 100;
    std::vector<double> series;
    simulate_updown(
        n, 2000 * per_unit, kHalfOne, {20261015, 1}, Partition{n},
        [&](const UpdownSample& s) {
          if (s.step >= 5 * per_unit) series.push_back(s.q1);
        },
        every);
    const double mean = std::accumulate(series.begin(), series.end(), 0.0) / series.size();
    for (auto& x : series) x -= mean;
    double c0 = 0;
    for (double x : series) c0 += x * x;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (int lag = 5; lag <= 50; lag += 5, ++k) {
      double c = 0;
      for (std::size_t i = 0; i + lag < series.size(); ++i) c += series[i] * series[i + lag];
      const double tau = lag / 100.0;
      const double y = std::log(c / c0);
      sx += tau;
      sy += y;
      sxx += tau * tau;
      sxy += tau * y;
    }
    const double rate = -(k * sxy - sx * sy) / (k * sxx - sx * sx);
    if (!(rate >= 3 && rate <= 5)) r.fail("decay rate " + fmt("%.3f", rate));
    r.note("decay rate " + fmt("%.3f", rate) + " (gap 4)");
  }
  return r.outcome();
}

Outcome degenerate_consistency() {
  Report r;
  for (int N = 2; N <= 7; ++N) {
    for (const Rational& beta : {Rational(1), make_rational(1, 2), Rational(3)}) {
      const Rational eta = beta * (N - 1);
      const Params p = Params::degenerate(N, beta);
      for (int k = 1; k <= N - 1; ++k)
        if (wf_q_action(k, N, eta) != q_action(QAction::single(k), p))
          r.fail("k=" + std::to_string(k) + " N=" + std::to_string(N) + " beta=" + to_string(beta));
    }
  }
  std::vector<double> dev;
  for (int n : {16, 32, 64}) {
    auto fg = degenerate_finite_generator(n, 3, 3, 1);
    if (fg.residual != 0) r.fail("nonzero residual n=" + std::to_string(n));
    dev.push_back(fg.deviation.get_d());
  }
  std::ostringstream s;
  for (std::size_t i = 0; i + 1 < dev.size(); ++i) {
    const double q = dev[i] / dev[i + 1];
    s << fmt(" %.3f", q);
    if (!(q >= 1.6 && q <= 2.5)) r.fail("deviation ratio " + fmt("%.3f", q));
  }
  r.note("q-actions N <= 7; deviation ratios" + s.str());
  return r.outcome();
}

Outcome wright_fisher_invariant() {
  Report r;
  const double horizon = 1000;
  const auto x0 = FiniteSimplexPoint::barycenter(3);
  auto run = [&](double dt) {
    const long steps = std::lround(horizon / dt);
    return wf_time_average_q1(3, 2.0, dt, steps, std::lround(1.0 / dt), {4242, 0}, x0);
  };
  const double a = run(1e-4);
  const double b = run(5e-5);
  if (!(std::abs(a - 0.5) <= 0.02)) r.fail("time-average " + fmt("%.4f", a));
  if (!(std::abs(a - b) < 0.02)) r.fail("dt-halving shift " + fmt("%.4f", std::abs(a - b)));
  r.note("time-average " + fmt("%.4f", a) + ", halved dt " + fmt("%.4f", b));
  return r.outcome();
}

Outcome dirichlet_trend() {
  Report r;
  std::ostringstream s;
  std::vector<double> means;
  std::uint64_t stream = 0;
  for (int N : {10, 50, 200}) {
    const Rational beta = make_rational(1, N);
    Rng rng = make_rng({777, stream++});
    RunningStats st;
    for (long i = 0; i < 200000; ++i) st.push(sample_dirichlet_ordered(N, beta, rng).q(1));
    const auto e = st.estimate();
    const double oracle = Rational((beta + 1) / (N * beta + 1)).get_d();
    const double z = (e.mean - oracle) / e.std_error;
    if (!(std::abs(z) <= 4)) r.fail("N=" + std::to_string(N) + " z=" + fmt("%.2f", z));
    means.push_back(e.mean);
    s << "N=" << N << fmt(" %.4f", e.mean) << fmt(" (z=%.2f) ", z);
  }
  for (std::size_t i = 0; i + 1 < means.size(); ++i)
    if (!(std::abs(means[i + 1] - 0.5) < std::abs(means[i] - 0.5))) r.fail("not monotone towards 1/2");
  r.note(s.str());
  return r.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact coherency and normalization", coherency},
      {"exact reversibility", reversibility},
      {"triangular action of T_n on factorial monomials", triangular_action},
      {"down/up commutation identities", tilde_lemma},
      {"up/down chain spectrum", chain_spectrum_check},
      {"finite generator converges like 1/n", generator_convergence},
      {"generator spectrum", generator_spectrum_check},
      {"Kingman reconstruction", reconstruction},
      {"q-coordinate action and Gram symmetry", q_coordinates},
      {"Monte Carlo against exact moments", monte_carlo},
      {"up/down ergodic average and relaxation", updown_ergodic},
      {"degenerate series and Wright-Fisher", degenerate_consistency},
      {"Wright-Fisher invariant measure", wright_fisher_invariant},
      {"Dirichlet weak-limit trend", dirichlet_trend},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.contains(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %s [%.1fs] %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
