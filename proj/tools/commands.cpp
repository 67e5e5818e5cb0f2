#include "run_config.hpp"

#include "kingman/generator.hpp"
#include "kingman/partitions.hpp"
#include "kingman/sampling.hpp"
#include "kingman/updown.hpp"
#include "kingman/wright_fisher.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace kingman::cli {

namespace {

constexpr double kZBand = 4.0;
constexpr double kWfAllowance = 0.02;

// Artifact text plus the list of failed checks.
struct Result {
  std::string text;
  Json failures = Json::array();
};

Json envelope(const RunConfig& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = c.command;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json double_json(double x) {
  Json j;
  j["precision"] = "double";
  j["value"] = x;
  return j;
}

Rational max_abs(const std::vector<Rational>& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, Rational(abs(x)));
  return m;
}

Result cmd_enumerate(const RunConfig& c) {
  const auto level = c.max_length ? enumerate_level(*c.n, *c.max_length) : enumerate_level(*c.n);
  Json j = Json::array();
  for (const auto& lambda : level) j.push_back(lambda.to_string());
  return {j.dump() + "\n"};
}

Result cmd_measure(const RunConfig& c) { return {distribution_map(measure(*c.n, params_of(c))).dump() + "\n"}; }

Result cmd_chain(const RunConfig& c) {
  const Params p = params_of(c);
  const int n = *c.n;
  Result r;
  Json j = envelope(c);
  j["params"] = to_json(p);
  auto t = transition_matrix(n, p);
  auto w = stationary_weights(t, p);
  j["transition"] = to_json(t);
  j["stationary_weights"] = to_json(w);
  const bool reversible = is_reversible(t, w);
  const bool stationary = is_stationary(t, w);
  j["reversible"] = reversible;
  j["stationary"] = stationary;
  if (!reversible) r.failures.push_back({{"check", "reversibility"}, {"n", n}});
  if (!stationary) r.failures.push_back({{"check", "stationarity"}, {"n", n}});
  if (p.is_principal()) {
    const auto predicted = predicted_chain_spectrum(n, p);
    std::vector<double> expected;
    for (const auto& e : predicted)
      for (int k = 0; k < e.multiplicity; ++k) expected.push_back(e.value.get_d());
    std::sort(expected.rbegin(), expected.rend());
    const auto numeric = chain_spectrum(n, p);
    double err = 0;
    for (std::size_t i = 0; i < numeric.size() && i < expected.size(); ++i)
      err = std::max(err, std::abs(numeric[i] - expected[i]));
    Json s;
    s["predicted"] = to_json(predicted);
    s["numeric"] = {{"precision", "double"}, {"values", numeric}};
    s["max_error"] = err;
    const bool ok = numeric.size() == expected.size() && err <= 1e-9;
    if (!ok) r.failures.push_back({{"check", "spectrum"}, {"n", n}, {"max_error", err}});
    if (n <= 5) {
      const bool exact = verify_chain_spectrum_exact(n, p);
      s["exact_check"] = exact;
      if (!exact) r.failures.push_back({{"check", "spectrum_exact"}, {"n", n}});
    }
    j["spectrum"] = std::move(s);
  }
  j["pass"] = r.failures.empty();
  r.text = dump(j);
  return r;
}

// max_mu |M_n(mu) - sum_lambda M_{n+1}(lambda) p_down(lambda, mu)|
Rational coherency_residual(int n, const Params& p) {
  const auto lower = measure(n, p);
  const auto upper = measure(n + 1, p);
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < lower.states.size(); ++i) index.emplace(lower.states[i], i);
  std::vector<Rational> diff = lower.weights;
  for (std::size_t k = 0; k < upper.states.size(); ++k)
    for (const auto& nb : lower_neighbours(upper.states[k]))
      if (auto it = index.find(nb.diagram); it != index.end())
        diff[it->second] -= upper.weights[k] * down_prob(upper.states[k], nb.diagram);
  Rational total_err = lower.total() - 1;
  return std::max(max_abs(diff), Rational(abs(total_err)));
}

Result cmd_verify(const RunConfig& c) {
  const Params p = params_of(c);
  std::vector<std::string> checks = c.checks;
  if (checks.empty()) {
    checks = {"coherency", "reversibility"};
    if (p.is_principal()) checks.insert(checks.end(), {"triangular", "tilde", "spectrum"});
  }
  Result r;
  Json report = Json::array();
  auto record = [&](Json entry, bool ok) {
    entry["pass"] = ok;
    if (!ok) r.failures.push_back(entry);
    report.push_back(std::move(entry));
  };
  const int max_n = *c.max_n;
  for (const auto& name : checks) {
    const bool principal_only = name == "triangular" || name == "tilde" || name == "spectrum";
    if (principal_only && !p.is_principal()) throw ConfigError("verify: check '" + name + "' needs the principal series");
    for (int n = (name == "coherency" ? 0 : 1); n <= max_n; ++n) {
      if (name == "coherency") {
        const Rational res = coherency_residual(n, p);
        record({{"check", name}, {"n", n}, {"residual", to_string(res)}}, res == 0);
      } else if (name == "reversibility") {
        auto t = transition_matrix(n, p);
        record({{"check", name}, {"n", n}}, is_reversible(t, stationary_weights(t, p)));
      } else if (name == "spectrum") {
        record({{"check", name}, {"n", n}}, verify_chain_spectrum_exact(n, p));
      } else {
        for (int k = 0; k <= (name == "tilde" ? std::min(n, 6) : n); ++k) {
          for (const auto& mu : enumerate_level(k)) {
            Rational res;
            if (name == "triangular") {
              res = max_abs(verify_triangular_action(n, mu, p).values);
            } else {
              auto t = verify_tilde_lemma(mu, n, p);
              res = std::max(max_abs(t.down.values), max_abs(t.up.values));
            }
            record({{"check", name}, {"n", n}, {"mu", mu.to_string()}, {"residual", to_string(res)}}, res == 0);
          }
        }
      }
    }
  }
  Json j = envelope(c);
  j["params"] = to_json(p);
  j["max_n"] = max_n;
  j["checks"] = checks;
  j["report"] = std::move(report);
  j["pass"] = r.failures.empty();
  r.text = dump(j);
  return r;
}

Result cmd_generator(const RunConfig& c) {
  const Params p = params_of(c);
  const int m = *c.m;
  Json j = envelope(c);
  j["params"] = to_json(p);
  j["generator"] = to_json(generator_matrix(m, p));
  if (p.is_principal()) j["spectrum"] = to_json(generator_spectrum(m, p));
  Json actions = Json::array();
  for (int k = 1; k + 1 <= m; ++k)
    actions.push_back({{"action", "q" + std::to_string(k)}, {"image", q_action(QAction::single(k), p).to_string()}});
  for (int i = 1; i + 1 <= m; ++i)
    for (int k = i; i + k + 2 <= m; ++k)
      actions.push_back({{"action", "q" + std::to_string(i) + "*q" + std::to_string(k)},
                         {"image", q_action(QAction::pair(i, k), p).to_string()}});
  j["q_actions"] = std::move(actions);
  return {dump(j)};
}

Result cmd_converge(const RunConfig& c) {
  const Params p = params_of(c);
  const int m = c.m.value_or(3);
  const std::vector<int> ns = c.n_list.empty() ? std::vector<int>{16, 32, 64} : c.n_list;
  Result r;
  Json rows = Json::array();
  double previous = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto fg = p.is_principal() ? finite_generator(ns[i], m, p)
                                     : degenerate_finite_generator(ns[i], m, p.degenerate_n(), p.beta());
    Json row;
    row["n"] = ns[i];
    row["deviation"] = to_string(fg.deviation);
    row["deviation_double"] = fg.deviation.get_d();
    row["residual"] = to_string(fg.residual);
    if (fg.residual != 0) r.failures.push_back({{"check", "residual"}, {"n", ns[i]}});
    const double dev = fg.deviation.get_d();
    if (i > 0) {
      // Doubling n should halve the deviation.
      const double ratio = dev > 0 ? previous / dev : 0;
      row["ratio"] = ratio;
      if (ns[i] == 2 * ns[i - 1] && !(ratio >= 1.6 && ratio <= 2.5))
        r.failures.push_back({{"check", "ratio"}, {"n", ns[i]}, {"ratio", ratio}});
    }
    previous = dev;
    rows.push_back(std::move(row));
  }
  Json j = envelope(c);
  j["params"] = to_json(p);
  j["m"] = m;
  j["precision"] = "double";
  j["table"] = std::move(rows);
  j["pass"] = r.failures.empty();
  r.text = dump(j);
  return r;
}

Result cmd_moments(const RunConfig& c) {
  const Params p = params_of(c);
  std::vector<Partition> obs;
  for (const auto& s : c.lambdas) obs.push_back(parse_partition_flag(s));
  if (obs.empty()) obs = {{2}, {2, 2}, {3}};
  const long samples = c.samples.value_or(100000);
  const auto est = estimate_moments(obs, p, samples, {c.seed, 0}, c.jobs, c.tail.value_or(kMomentTailEpsilon));
  Result r;
  Json rows = Json::array();
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const Rational exact = pd_moment(obs[i], p);
    const double z = est[i].std_error > 0 ? (est[i].mean - exact.get_d()) / est[i].std_error : 0.0;
    Json row;
    row["lambda"] = obs[i].to_string();
    row["exact"] = to_string(exact);
    row["estimate"] = to_json(est[i]);
    row["z"] = z;
    row["pass"] = std::abs(z) <= kZBand;
    if (std::abs(z) > kZBand) r.failures.push_back({{"check", "moment"}, {"lambda", obs[i].to_string()}, {"z", z}});
    rows.push_back(std::move(row));
  }
  Json j = envelope(c);
  j["params"] = to_json(p);
  j["seed"] = c.seed;
  j["precision"] = "double";
  j["band_stderr"] = kZBand;
  j["moments"] = std::move(rows);
  j["pass"] = r.failures.empty();
  r.text = dump(j);
  return r;
}

Result cmd_sample(const RunConfig& c) {
  const std::string kind = *c.kind;
  const Params p = params_of(c);
  if (kind == "updown") {
    const int n = *c.n;
    const Partition start = c.start ? parse_partition_flag(*c.start) : Partition{n};
    std::ostringstream os;
    os << std::setprecision(17);
    Json records = Json::array();
    const bool csv = effective_format(c) == "csv";
    if (csv) write_updown_csv_header(os);
    simulate_updown(
        n, *c.steps, p, {c.seed, 0}, start,
        [&](const UpdownSample& s) {
          if (csv) {
            write_updown_csv_row(os, s);
          } else {
            Partition lambda(std::vector<int>(s.parts.begin(), s.parts.end()));
            records.push_back({{"step", s.step}, {"t", s.t}, {"partition", lambda.to_string()}, {"q1", s.q1},
                               {"q2", s.q2}});
          }
        },
        c.record_every.value_or(1));
    if (csv) return {os.str()};
    Json j = envelope(c);
    j["params"] = to_json(p);
    j["seed"] = c.seed;
    j["precision"] = "double";
    j["trajectory"] = std::move(records);
    return {dump(j)};
  }
  const long samples = c.samples.value_or(1);
  Rng rng = make_rng({c.seed, 0});
  Json j = envelope(c);
  j["params"] = to_json(p);
  j["seed"] = c.seed;
  if (kind == "crp") {
    Json draws = Json::array();
    for (long i = 0; i < samples; ++i) draws.push_back(sample_partition(*c.n, p, rng).to_string());
    j["n"] = *c.n;
    j["samples"] = std::move(draws);
  } else {
    const double tail = c.tail.value_or(kDefaultTailEpsilon);
    Json draws = Json::array();
    for (long i = 0; i < samples; ++i) {
      auto x = sample_pd(p, rng, tail);
      draws.push_back({{"coords", x.coords()}, {"remainder", x.gamma()}});
    }
    j["precision"] = "double";
    j["tail_epsilon"] = tail;
    j["samples"] = std::move(draws);
  }
  return {dump(j)};
}

FiniteSimplexPoint parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("bad coordinate '" + item + "' in point");
    }
  }
  try {
    return FiniteSimplexPoint(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("point: ") + e.what());
  }
}

Result cmd_wf(const RunConfig& c) {
  const int N = *c.N;
  const Rational eta = c.eta ? parse_rational(*c.eta) : parse_rational(*c.beta) * (N - 1);
  const Rational beta = eta / (N - 1);
  const std::string kind = c.kind.value_or("simulate");
  const double dt = c.dt.value_or(1e-4);
  const FiniteSimplexPoint x0 = c.point ? parse_point(*c.point) : FiniteSimplexPoint::barycenter(N);
  if (x0.dim() != N) throw ConfigError("wf: --point needs N coordinates");

  Json j = envelope(c);
  j["N"] = N;
  j["eta"] = to_string(eta);
  j["beta"] = to_string(beta);
  if (kind == "simulate") {
    std::ostringstream os;
    os << std::setprecision(17);
    Json records = Json::array();
    const bool csv = effective_format(c) == "csv";
    if (csv) write_wf_csv_header(os, N);
    simulate_wf(
        N, eta.get_d(), dt, *c.steps, {c.seed, 0}, x0,
        [&](const WfSample& s) {
          if (csv)
            write_wf_csv_row(os, s);
          else
            records.push_back({{"step", s.step}, {"t", s.t}, {"x", s.x->coords()}});
        },
        c.record_every.value_or(1));
    if (csv) return {os.str()};
    j["seed"] = c.seed;
    j["dt"] = dt;
    j["precision"] = "double";
    j["trajectory"] = std::move(records);
    return {dump(j)};
  }
  if (kind == "density") {
    try {
      j["point"] = x0.coords();
      j["density"] = double_json(dirichlet_ordered_density(x0, N, beta));
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string("wf: ") + e.what());
    }
    return {dump(j)};
  }

  // dirichlet: EM time average of q1 and a direct Dirichlet Monte Carlo,
  // both against the exact invariant moment (beta+1)/(N beta+1).
  Result r;
  const Rational oracle = (beta + 1) / (N * beta + 1);
  const long steps = *c.steps;
  const long burn_in = std::min(steps - 1, std::lround(1.0 / dt));
  const double ta = wf_time_average_q1(N, eta.get_d(), dt, steps, burn_in, {c.seed, 0}, x0);
  RunningStats st;
  Rng rng = make_rng({c.seed, 1});
  for (long i = 0, n = c.samples.value_or(100000); i < n; ++i) st.push(sample_dirichlet_ordered(N, beta, rng).q(1));
  const auto mc = st.estimate();
  const double z = mc.std_error > 0 ? (mc.mean - oracle.get_d()) / mc.std_error : 0.0;
  j["seed"] = c.seed;
  j["dt"] = dt;
  j["precision"] = "double";
  j["oracle_q1"] = to_string(oracle);
  j["time_average_q1"] = {{"value", ta}, {"steps", steps}, {"burn_in", burn_in}, {"allowance", kWfAllowance}};
  j["dirichlet_q1"] = to_json(mc);
  j["dirichlet_z"] = z;
  if (std::abs(ta - oracle.get_d()) > kWfAllowance) r.failures.push_back({{"check", "time_average"}, {"value", ta}});
  if (std::abs(z) > kZBand) r.failures.push_back({{"check", "dirichlet_moment"}, {"z", z}});
  j["pass"] = r.failures.empty();
  r.text = dump(j);
  return r;
}

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative())
    if (const char* dir = std::getenv("KINGMAN_OUTPUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  return path;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  validate(c);
  static const std::map<std::string, std::function<Result(const RunConfig&)>> table{
      {"enumerate", cmd_enumerate}, {"measure", cmd_measure},   {"chain", cmd_chain},
      {"verify", cmd_verify},       {"generator", cmd_generator}, {"converge", cmd_converge},
      {"moments", cmd_moments},     {"sample", cmd_sample},     {"wf", cmd_wf}};
  Result r;
  try {
    r = table.at(c.command)(c);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }

  if (c.output) {
    const auto path = output_path(*c.output);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file " + path.string());
    f << r.text;
  } else {
    out << r.text;
  }
  if (r.failures.empty()) return 0;
  Json report;
  report["status"] = "fail";
  report["command"] = c.command;
  report["failures"] = r.failures;
  err << report.dump() << "\n";
  return 1;
}

}  // namespace kingman::cli
