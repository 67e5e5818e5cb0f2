#include "run_config.hpp"

#include "kingman/rational.hpp"

#include <algorithm>
#include <set>

namespace kingman::cli {

namespace {

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void put(Json& j, const char* key, const std::vector<T>& v) {
  if (!v.empty()) j[key] = v;
}

template <class T>
void get(const Json& j, const char* key, std::optional<T>& v) {
  if (auto it = j.find(key); it != j.end()) v = it->template get<T>();
}

template <class T>
void get(const Json& j, const char* key, std::vector<T>& v) {
  if (auto it = j.find(key); it != j.end()) v = it->template get<std::vector<T>>();
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw ConfigError("--" + name + ": " + e.what());
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

template <class T>
void require_set(const std::optional<T>& v, const std::string& flag, const std::string& cmd) {
  require(v.has_value(), cmd + ": --" + flag + " is required");
}

void require_principal(const RunConfig& c) {
  require(params_of(c).is_principal(), c.command + " needs principal-series parameters");
}

const std::set<std::string> kCheckNames{"coherency", "reversibility", "triangular", "tilde", "spectrum"};

}  // namespace

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  put(j, "alpha", c.alpha);
  put(j, "theta", c.theta);
  put(j, "N", c.N);
  put(j, "beta", c.beta);
  put(j, "eta", c.eta);
  put(j, "n", c.n);
  put(j, "max_n", c.max_n);
  put(j, "m", c.m);
  put(j, "max_length", c.max_length);
  put(j, "n_list", c.n_list);
  put(j, "steps", c.steps);
  put(j, "samples", c.samples);
  put(j, "record_every", c.record_every);
  put(j, "dt", c.dt);
  put(j, "tail", c.tail);
  put(j, "lambdas", c.lambdas);
  put(j, "checks", c.checks);
  put(j, "kind", c.kind);
  put(j, "start", c.start);
  put(j, "point", c.point);
  j["seed"] = c.seed;
  j["jobs"] = c.jobs;
  put(j, "output", c.output);
  put(j, "format", c.format);
  return j;
}

RunConfig config_from_json(const Json& j) {
  try {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    get(j, "alpha", c.alpha);
    get(j, "theta", c.theta);
    get(j, "N", c.N);
    get(j, "beta", c.beta);
    get(j, "eta", c.eta);
    get(j, "n", c.n);
    get(j, "max_n", c.max_n);
    get(j, "m", c.m);
    get(j, "max_length", c.max_length);
    get(j, "n_list", c.n_list);
    get(j, "steps", c.steps);
    get(j, "samples", c.samples);
    get(j, "record_every", c.record_every);
    get(j, "dt", c.dt);
    get(j, "tail", c.tail);
    get(j, "lambdas", c.lambdas);
    get(j, "checks", c.checks);
    get(j, "kind", c.kind);
    get(j, "start", c.start);
    get(j, "point", c.point);
    c.seed = j.value("seed", std::uint64_t{0});
    c.jobs = j.value("jobs", 1);
    get(j, "output", c.output);
    get(j, "format", c.format);
    return c;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

Partition parse_partition_flag(const std::string& text) {
  return Partition::parse(text.find('[') == std::string::npos ? "[" + text + "]" : text);
}

Params params_of(const RunConfig& c) {
  try {
    if (c.beta && c.command != "wf") {
      require(!c.alpha && !c.theta, "give either --alpha/--theta or --N/--beta, not both");
      require(c.N.has_value(), "--beta needs --N");
      return Params::degenerate(*c.N, rational_flag("beta", *c.beta));
    }
    return Params(rational_flag("alpha", c.alpha.value_or("0")), rational_flag("theta", c.theta.value_or("1")));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string effective_format(const RunConfig& c) {
  if (c.format) return *c.format;
  const std::string kind = c.kind.value_or("");
  if ((c.command == "sample" && kind == "updown") || (c.command == "wf" && kind.empty()) ||
      (c.command == "wf" && kind == "simulate"))
    return "csv";
  return "json";
}

void validate(const RunConfig& c) {
  const std::string& cmd = c.command;
  require(std::find(kCommands.begin(), kCommands.end(), cmd) != kCommands.end(), "unknown command '" + cmd + "'");
  require(c.jobs >= 1, "--jobs must be >= 1");
  const std::string fmt = effective_format(c);
  require(fmt == "json" || fmt == "csv", "--format must be json or csv");
  const std::string kind = c.kind.value_or("");
  const bool csv_ok = (cmd == "sample" && kind == "updown") || (cmd == "wf" && (kind.empty() || kind == "simulate"));
  require(fmt == "json" || csv_ok, cmd + ": csv output is only available for trajectories");

  if (cmd != "wf") params_of(c);
  auto positive = [&](const auto& v, const std::string& flag) {
    if (v) require(*v > 0, cmd + ": --" + flag + " must be positive");
  };
  positive(c.steps, "steps");
  positive(c.samples, "samples");
  positive(c.record_every, "record-every");
  positive(c.dt, "dt");
  positive(c.tail, "tail");
  if (c.n) require(*c.n >= 0, cmd + ": --n must be >= 0");

  if (cmd == "enumerate" || cmd == "measure") {
    require_set(c.n, "n", cmd);
  } else if (cmd == "chain") {
    require_set(c.n, "n", cmd);
    require(*c.n >= 1, "chain: --n must be >= 1");
  } else if (cmd == "verify") {
    require_set(c.max_n, "max-n", cmd);
    require(*c.max_n >= 1, "verify: --max-n must be >= 1");
    for (const auto& name : c.checks) require(kCheckNames.count(name) > 0, "verify: unknown check '" + name + "'");
  } else if (cmd == "generator") {
    require_set(c.m, "m", cmd);
    require(*c.m >= 0, "generator: --m must be >= 0");
    const Params p = params_of(c);
    if (!p.is_principal()) require(*c.m <= p.degenerate_n(), "generator: degenerate series needs m <= N");
  } else if (cmd == "converge") {
    const Params p = params_of(c);
    require(c.m.value_or(3) >= 2, "converge: --m must be >= 2");
    if (!p.is_principal()) require(c.m.value_or(3) <= p.degenerate_n(), "converge: degenerate series needs m <= N");
    for (int n : c.n_list) require(n >= 1, "converge: --n-list entries must be positive");
  } else if (cmd == "moments") {
    require_principal(c);
    for (const auto& text : c.lambdas) {
      Partition mu;
      try {
        mu = parse_partition_flag(text);
      } catch (const std::exception& e) {
        throw ConfigError("moments: bad --lambda '" + text + "': " + e.what());
      }
      require(mu.multiplicity(1) == 0 && !mu.empty(), "moments: --lambda needs parts >= 2");
    }
  } else if (cmd == "sample") {
    require(kind == "crp" || kind == "pd" || kind == "updown", "sample: --kind must be crp, pd or updown");
    if (kind == "crp" || kind == "updown") require_set(c.n, "n", cmd);
    if (kind == "pd") require_principal(c);
    if (kind == "updown") {
      require_set(c.steps, "steps", cmd);
      require(*c.n >= 1, "sample: --n must be >= 1");
      if (c.start) {
        try {
          require(parse_partition_flag(*c.start).size() == *c.n, "sample: --start must be a partition of n");
        } catch (const std::invalid_argument& e) {
          throw ConfigError(std::string("sample: --start: ") + e.what());
        }
      }
    }
  } else if (cmd == "wf") {
    require(kind.empty() || kind == "simulate" || kind == "density" || kind == "dirichlet",
            "wf: --kind must be simulate, density or dirichlet");
    require_set(c.N, "N", cmd);
    require(*c.N >= 2, "wf: --N must be >= 2");
    require(c.eta.has_value() != c.beta.has_value(), "wf: give exactly one of --eta and --beta");
    const Rational rate = c.eta ? rational_flag("eta", *c.eta) : rational_flag("beta", *c.beta);
    require(rate > 0, "wf: eta and beta must be positive");
    require(!c.alpha && !c.theta, "wf: --alpha/--theta do not apply");
    if (kind == "density") require_set(c.point, "point", cmd);
    if (kind != "density") require_set(c.steps, "steps", cmd);
  }
}

}  // namespace kingman::cli
