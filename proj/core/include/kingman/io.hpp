#pragma once

#include "kingman/ewens_pitman.hpp"
#include "kingman/generator.hpp"
#include "kingman/sampling.hpp"
#include "kingman/symfunc.hpp"
#include "kingman/updown.hpp"
#include "kingman/wright_fisher.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace kingman {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Params& p);
Json to_json(const Partition& lambda);
Json to_json(const RationalMatrix& m);
Json to_json(const std::vector<Rational>& v);
/// {level, params, basis, rows} with "p/q" entries.
Json to_json(const OperatorMatrix& t);
/// {"[2]": "1/4", "[1,1]": "3/4"} in canonical order.
Json distribution_map(const LevelDistribution& d);
Json to_json(const std::vector<Eigenvalue>& spectrum);
/// {degree, params, basis, rows}; column j is A applied to basis[j].
Json to_json(const GeneratorMatrix& g);
Json to_json(const FiniteGenerator& fg);
Json to_json(const MomentEstimate& e);
Json to_json(const FunVector& f);

std::vector<Rational> rational_vector_from_json(const Json& j);
RationalMatrix rational_matrix_from_json(const Json& j);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

/// Header "step,t,partition,q1,q2".
void write_updown_csv_header(std::ostream& os);
void write_updown_csv_row(std::ostream& os, const UpdownSample& s);

/// Header "step,t,x1,...,xN".
void write_wf_csv_header(std::ostream& os, int N);
void write_wf_csv_row(std::ostream& os, const WfSample& s);

/// Header "t,<coefficient names>" followed by one row per time, for plotting e^{tA} f.
void write_semigroup_csv(std::ostream& os, const QElement& f, const Params& p, const std::vector<double>& times);

}  // namespace kingman
