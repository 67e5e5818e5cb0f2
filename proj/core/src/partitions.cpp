#include "kingman/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kingman {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("partition must be written as [a,b,...]: '" + std::string(text) + "'");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string item(trim(text.substr(0, comma)));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed partition part '" + item + "'");
    }
    parts.push_back(std::stoi(item));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out;
  for (int p : parts_) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

BigInt Partition::multiplicity_factorial() const {
  BigInt result = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    result *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return result;
}

bool Partition::contained_in(const Partition& other) const noexcept {
  if (length() > other.length()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] > other.parts_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

Partition add_box(const Partition& lambda, int row_value) {
  std::vector<int> parts = lambda.parts();
  if (row_value == kNewRow) {
    parts.push_back(1);
    return Partition(std::move(parts));
  }
  auto it = std::find(parts.begin(), parts.end(), row_value);
  if (it == parts.end()) {
    throw std::invalid_argument("add_box: no row of length " + std::to_string(row_value) + " in " +
                                lambda.to_string());
  }
  ++*it;
  return Partition(std::move(parts));
}

Partition remove_box(const Partition& lambda, int row_value) {
  std::vector<int> parts = lambda.parts();
  auto it = std::find(parts.rbegin(), parts.rend(), row_value);
  if (row_value <= 0 || it == parts.rend()) {
    throw std::invalid_argument("remove_box: no row of length " + std::to_string(row_value) + " in " +
                                lambda.to_string());
  }
  if (--*it == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::optional<int> removed_row_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() + 1) return std::nullopt;
  if (mu.length() > lambda.length() || mu.length() + 1 < lambda.length()) return std::nullopt;
  std::optional<int> value;
  for (int i = 0; i < lambda.length(); ++i) {
    int m = i < mu.length() ? mu[i] : 0;
    int d = lambda[i] - m;
    if (d == 0) continue;
    if (d != 1 || value) return std::nullopt;
    value = lambda[i];
  }
  return value;
}

int edge_multiplicity(const Partition& lambda, const Partition& mu) {
  auto v = removed_row_value(lambda, mu);
  return v ? lambda.multiplicity(*v) : 0;
}

std::vector<Neighbour> lower_neighbours(const Partition& lambda) {
  std::vector<Neighbour> out;
  for (int v : lambda.distinct_parts()) {
    out.push_back({remove_box(lambda, v), v, lambda.multiplicity(v)});
  }
  return out;
}

std::vector<Neighbour> upper_neighbours(const Partition& lambda) {
  std::vector<Neighbour> out;
  for (int v : lambda.distinct_parts()) {
    Partition nu = add_box(lambda, v);
    // kappa(nu, lambda) counts rows of nu of the new box's column v + 1.
    int kappa = nu.multiplicity(v + 1);
    out.push_back({std::move(nu), v, kappa});
  }
  Partition nu = add_box(lambda, kNewRow);
  int kappa = nu.multiplicity(1);
  out.push_back({std::move(nu), kNewRow, kappa});
  return out;
}

namespace {

bool generate(int remaining, int max_part, int max_length, std::vector<int>& prefix,
              const std::function<bool(const Partition&)>& visit) {
  if (remaining == 0) return visit(Partition(prefix));
  if (static_cast<int>(prefix.size()) == max_length) return true;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    bool keep_going = generate(remaining - part, part, max_length, prefix, visit);
    prefix.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_partition(int n, const std::function<bool(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<int> prefix;
  generate(n, n, n, prefix, visit);
}

std::vector<Partition> enumerate_level(int n) { return enumerate_level(n, n); }

std::vector<Partition> enumerate_level(int n, int max_length) {
  if (n < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, max_length, prefix, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt total = 0;
    for (int j = 1;; ++j) {
      int g1 = j * (3 * j - 1) / 2;
      if (g1 > k) break;
      int g2 = j * (3 * j + 1) / 2;
      BigInt term = p[k - g1];
      if (g2 <= k) term += p[k - g2];
      if (j % 2 == 1) total += term; else total -= term;
    }
    p[k] = total;
  }
  return p[n];
}

BigInt path_count(const Partition& mu, const Partition& lambda) {
  if (lambda.size() < mu.size() || !mu.contained_in(lambda)) return 0;
  if (lambda.size() == mu.size()) return lambda == mu ? 1 : 0;

  thread_local std::map<std::pair<Partition, Partition>, BigInt> memo;
  auto key = std::make_pair(mu, lambda);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  BigInt total = 0;
  for (const auto& nb : lower_neighbours(lambda)) {
    total += nb.multiplicity * path_count(mu, nb.diagram);
  }
  memo.emplace(std::move(key), total);
  return total;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt dimension(const Partition& lambda) {
  BigInt result = factorial(lambda.size());
  for (int p : lambda.parts()) result /= factorial(p);
  return result;
}

Rational pochhammer(const Rational& a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative order");
  Rational result = 1;
  for (int i = 0; i < k; ++i) result *= a + i;
  return result;
}

Rational falling(const Rational& a, int k) {
  if (k < 0) throw std::invalid_argument("falling: negative order");
  Rational result = 1;
  for (int i = 0; i < k; ++i) result *= a - i;
  return result;
}

BigInt falling(long a, int k) {
  if (k < 0) throw std::invalid_argument("falling: negative order");
  BigInt result = 1;
  for (int i = 0; i < k; ++i) result *= a - i;
  return result;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace kingman
