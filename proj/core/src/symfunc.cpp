#include "kingman/symfunc.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace kingman {

namespace {

struct ValueCount {
  long value;
  int count;
};

std::vector<ValueCount> row_groups(const Partition& lambda) {
  std::vector<ValueCount> groups;
  for (int v : lambda.distinct_parts()) groups.push_back({v, lambda.multiplicity(v)});
  return groups;
}

// Sum over injective assignments of mu's rows to lambda's rows, rows of equal
// length being interchangeable (hence the count factor).
template <class RowValue>
BigInt assign_rows(const Partition& mu, std::size_t c, std::vector<ValueCount>& groups, RowValue&& row_value) {
  if (c == static_cast<std::size_t>(mu.length())) return 1;
  BigInt total = 0;
  for (auto& g : groups) {
    if (g.count == 0) continue;
    BigInt factor = row_value(g.value, mu[c]);
    if (factor == 0) continue;
    factor *= g.count;
    --g.count;
    total += factor * assign_rows(mu, c + 1, groups, row_value);
    ++g.count;
  }
  return total;
}

}  // namespace

BigInt eval_factorial_monomial(const Partition& mu, const Partition& lambda) {
  if (mu.size() > lambda.size() || mu.length() > lambda.length()) return 0;
  auto groups = row_groups(lambda);
  return assign_rows(mu, 0, groups, [](long v, int k) { return falling(v, k); });
}

BigInt eval_monomial(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return 0;
  auto groups = row_groups(lambda);
  return assign_rows(mu, 0, groups, [](long v, int k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(k));
    return r;
  });
}

BigInt power_sum(int k, const Partition& lambda) {
  BigInt total = 0;
  for (int part : lambda.parts()) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(k));
    total += r;
  }
  return total;
}

const QElement& reduce_to_basis(const Partition& mu) {
  thread_local std::map<Partition, QElement> memo;
  if (auto it = memo.find(mu); it != memo.end()) return it->second;

  QElement result;
  if (is_basis_index(mu)) {
    result = QElement::monomial(mu);
  } else {
    // Drop one 1-part: m_{rho u (1)} = m_rho - sum_c m_{rho with row c grown}.
    std::vector<int> rho = mu.parts();
    rho.pop_back();
    result += reduce_to_basis(Partition(rho));
    for (std::size_t c = 0; c < rho.size(); ++c) {
      std::vector<int> grown = rho;
      ++grown[c];
      std::sort(grown.begin(), grown.end(), std::greater<>());
      result -= reduce_to_basis(Partition(grown));
    }
  }
  return memo.emplace(mu, std::move(result)).first->second;
}

namespace {

void merge_rows(const Partition& mu, const Partition& nu, std::size_t s, std::vector<int>& exps,
                std::vector<bool>& used, std::vector<int>& extra, QElement& out, const Rational& coef) {
  if (s == static_cast<std::size_t>(nu.length())) {
    std::vector<int> parts = exps;
    parts.insert(parts.end(), extra.begin(), extra.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.add(Partition(parts), coef);
    return;
  }
  extra.push_back(nu[s]);
  merge_rows(mu, nu, s + 1, exps, used, extra, out, coef);
  extra.pop_back();
  for (std::size_t c = 0; c < exps.size(); ++c) {
    if (used[c]) continue;
    used[c] = true;
    exps[c] += nu[s];
    merge_rows(mu, nu, s + 1, exps, used, extra, out, coef);
    exps[c] -= nu[s];
    used[c] = false;
  }
}

}  // namespace

QElement product_expand(const QElement& a, const QElement& b) {
  QElement out;
  for (const auto& [mu, ca] : a.terms()) {
    for (const auto& [nu, cb] : b.terms()) {
      // m_mu * m_nu = sum over partial matchings of nu's rows into mu's rows.
      std::vector<int> exps = mu.parts();
      std::vector<bool> used(exps.size(), false);
      std::vector<int> extra;
      merge_rows(mu, nu, 0, exps, used, extra, out, ca * cb);
    }
  }
  return out;
}

namespace {

std::string format_coef(const Rational& c) { return c.get_str(); }

std::string format_coef(double c) {
  std::ostringstream out;
  out << std::setprecision(17) << c;
  return out.str();
}

}  // namespace

template <class Coef>
std::string BasicQElement<Coef>::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const typename Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() > b->first.size();
    return a->first > b->first;
  });
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += " + ";
    out += format_coef(order[i]->second) + " * m" + order[i]->first.to_string();
  }
  return out;
}

template class BasicQElement<Rational>;
template class BasicQElement<double>;

QElement parse_qelement(std::string_view text) {
  QElement out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return out;
  while (!text.empty()) {
    auto plus = text.find(" + ");
    std::string_view term = trim(text.substr(0, plus));
    auto star = term.find('*');
    if (star == std::string_view::npos) throw std::invalid_argument("term without '*': '" + std::string(term) + "'");
    Rational c = parse_rational(trim(term.substr(0, star)));
    std::string_view mono = trim(term.substr(star + 1));
    if (mono.empty() || mono.front() != 'm') {
      throw std::invalid_argument("term must be 'c * m[parts]': '" + std::string(term) + "'");
    }
    out.add(Partition::parse(mono.substr(1)), c);
    if (plus == std::string_view::npos) break;
    text = text.substr(plus + 3);
  }
  return out;
}

std::vector<Partition> filtration_basis(int m) { return filtration_basis(m, m); }

std::vector<Partition> filtration_basis(int m, int max_length) {
  std::vector<Partition> basis;
  for (int k = 0; k <= m; ++k) {
    for (const auto& mu : enumerate_level(k, max_length)) {
      if (is_basis_index(mu)) basis.push_back(mu);
    }
  }
  return basis;
}

RationalSimplexPoint embed(const Partition& lambda) { return embed(lambda, lambda.size()); }

RationalSimplexPoint embed(const Partition& lambda, int n) {
  if (n <= 0 || lambda.size() > n) throw std::invalid_argument("embed: need 0 < |lambda| <= n");
  std::vector<Rational> coords;
  for (int part : lambda.parts()) {
    Rational c(part, n);
    c.canonicalize();
    coords.push_back(c);
  }
  return RationalSimplexPoint(std::move(coords));
}

}  // namespace kingman
