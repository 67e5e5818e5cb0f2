#pragma once

#include "kingman/partitions.hpp"
#include "kingman/rational.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kingman {

enum class Series { Principal, Degenerate };

/// Two-parameter (alpha, theta), classified on construction.
///
/// Principal:   0 <= alpha < 1 and theta > -alpha.
/// Degenerate:  alpha = -beta < 0 and theta = N * beta for an integer N >= 2.
/// Anything else is rejected with std::invalid_argument naming the violated
/// condition.
class Params {
 public:
  Params(Rational alpha, Rational theta);

  static Params degenerate(int N, const Rational& beta);

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& theta() const noexcept { return theta_; }
  Series series() const noexcept { return series_; }
  bool is_principal() const noexcept { return series_ == Series::Principal; }
  /// N of the degenerate series; throws for principal parameters.
  int degenerate_n() const;
  /// beta = -alpha of the degenerate series; throws for principal parameters.
  Rational beta() const;
  /// Rows allowed in the support: N for the degenerate series, none otherwise.
  std::optional<int> max_length() const;

  std::string to_string() const;

  friend bool operator==(const Params& a, const Params& b) {
    return a.alpha_ == b.alpha_ && a.theta_ == b.theta_;
  }

 private:
  Rational alpha_;
  Rational theta_;
  Series series_ = Series::Principal;
  int degenerate_n_ = 0;
};

/// The states of the n-th chain: all of K_n for the principal series, the
/// diagrams with at most N rows for Degenerate(N). Canonical order.
class StateSpace {
 public:
  StateSpace(int n, std::optional<int> max_length = std::nullopt);
  static StateSpace for_params(int n, const Params& p) { return StateSpace(n, p.max_length()); }

  int level() const noexcept { return n_; }
  std::optional<int> max_length() const noexcept { return max_length_; }
  const std::vector<Partition>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  const Partition& operator[](std::size_t i) const { return states_[i]; }
  std::optional<std::size_t> find(const Partition& lambda) const;
  std::size_t index_of(const Partition& lambda) const;

 private:
  int n_;
  std::optional<int> max_length_;
  std::vector<Partition> states_;
  std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

/// M_n as an exact probability vector over enumerate_level(n).
struct LevelDistribution {
  int level = 0;
  std::vector<Partition> states;
  std::vector<Rational> weights;

  const Rational& operator()(const Partition& lambda) const;
  Rational total() const;
};

/// Ewens-Pitman measure M_n(lambda), exact.
Rational measure_weight(const Partition& lambda, const Params& p);
LevelDistribution measure(int n, const Params& p);

/// p_down(lambda, mu) = kappa(lambda, mu) g(mu) / g(lambda). Parameter free.
/// Throws std::invalid_argument unless |lambda| = |mu| + 1.
Rational down_prob(const Partition& lambda, const Partition& mu);

/// p_up(lambda, nu) for the Ewens-Pitman structure; up_prob(empty, (1)) = 1.
/// Throws std::invalid_argument on a size mismatch, or for the degenerate
/// series when lambda has more than N rows.
Rational up_prob(const Partition& lambda, const Partition& nu, const Params& p);

struct Transition {
  Partition target;
  Rational probability;
};
/// Nonzero down moves from lambda (|lambda| >= 1).
std::vector<Transition> down_transitions(const Partition& lambda);
/// Nonzero up moves from lambda.
std::vector<Transition> up_transitions(const Partition& lambda, const Params& p);

/// M_n(mu) == sum_{lambda \searrow mu} M_{n+1}(lambda) p_down(lambda, mu) for every mu in K_n.
bool check_coherency(int n, const Params& p);

}  // namespace kingman
