#include "kingman/io.hpp"

#include <iomanip>
#include <sstream>

namespace kingman {

Json to_json(const Params& p) {
  Json j;
  j["alpha"] = to_string(p.alpha());
  j["theta"] = to_string(p.theta());
  if (p.is_principal()) {
    j["series"] = "principal";
  } else {
    j["series"] = "degenerate";
    j["N"] = p.degenerate_n();
    j["beta"] = to_string(p.beta());
  }
  return j;
}

Json to_json(const Partition& lambda) { return lambda.to_string(); }

Json to_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Json basis_json(const std::vector<Partition>& basis) {
  Json j = Json::array();
  for (const auto& mu : basis) j.push_back(mu.to_string());
  return j;
}

}  // namespace

Json to_json(const OperatorMatrix& t) {
  Json j;
  j["level"] = t.level;
  if (t.params) j["params"] = to_json(*t.params);
  j["basis_tag"] = t.basis_tag;
  j["basis"] = basis_json(t.basis);
  j["rows"] = to_json(t.entries);
  return j;
}

Json distribution_map(const LevelDistribution& d) {
  Json j = Json::object();
  for (std::size_t i = 0; i < d.states.size(); ++i) j[d.states[i].to_string()] = to_string(d.weights[i]);
  return j;
}

Json to_json(const std::vector<Eigenvalue>& spectrum) {
  Json j = Json::array();
  for (const auto& e : spectrum) j.push_back({{"value", to_string(e.value)}, {"multiplicity", e.multiplicity}});
  return j;
}

Json to_json(const GeneratorMatrix& g) {
  Json j;
  j["degree"] = g.degree;
  j["params"] = to_json(g.params);
  j["basis"] = basis_json(g.basis);
  j["rows"] = to_json(g.entries);
  return j;
}

Json to_json(const FiniteGenerator& fg) {
  Json j;
  j["n"] = fg.n;
  j["degree"] = fg.degree;
  j["basis"] = basis_json(fg.basis);
  j["solve_points"] = basis_json(fg.solve_points);
  j["check_points"] = basis_json(fg.check_points);
  j["rows"] = to_json(fg.matrix);
  j["residual"] = to_string(fg.residual);
  j["deviation"] = to_string(fg.deviation);
  j["deviation_float"] = fg.deviation.get_d();
  return j;
}

Json to_json(const MomentEstimate& e) {
  return {{"mean", e.mean}, {"stderr", e.std_error}, {"n", e.n_samples}};
}

Json to_json(const FunVector& f) {
  Json j;
  j["level"] = f.level;
  j["values"] = to_json(f.values);
  return j;
}

std::vector<Rational> rational_vector_from_json(const Json& j) {
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.front().size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw std::invalid_argument("rational matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_rational(j[r][c].get<std::string>());
  }
  return m;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_updown_csv_header(std::ostream& os) { os << "step,t,partition,q1,q2\n"; }

void write_updown_csv_row(std::ostream& os, const UpdownSample& s) {
  Partition lambda(std::vector<int>(s.parts.begin(), s.parts.end()));
  os << s.step << ',' << std::setprecision(17) << s.t << ',' << csv_field(lambda.to_string()) << ',' << s.q1 << ','
     << s.q2 << '\n';
}

void write_wf_csv_header(std::ostream& os, int N) {
  os << "step,t";
  for (int i = 1; i <= N; ++i) os << ",x" << i;
  os << '\n';
}

void write_wf_csv_row(std::ostream& os, const WfSample& s) {
  os << s.step << ',' << std::setprecision(17) << s.t;
  for (double x : s.x->coords()) os << ',' << x;
  os << '\n';
}

void write_semigroup_csv(std::ostream& os, const QElement& f, const Params& p, const std::vector<double>& times) {
  auto basis = filtration_basis(std::max(f.degree(), 0));
  os << 't';
  for (const auto& mu : basis) os << ',' << csv_field("m" + mu.to_string());
  os << '\n';
  for (double t : times) {
    QElementF g = semigroup_apply(t, f, p);
    os << std::setprecision(17) << t;
    for (const auto& mu : basis) os << ',' << g.coefficient(mu);
    os << '\n';
  }
}

}  // namespace kingman
