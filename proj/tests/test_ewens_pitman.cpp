#include "oracles.hpp"

#include "kingman/ewens_pitman.hpp"

#include <doctest.h>

using namespace kingman;

namespace {

std::vector<Params> grid() {
  return {Params(0, 1), Params(make_rational(1, 2), 1), Params(make_rational(1, 2), make_rational(1, 2)),
          Params(0, 2), Params(make_rational(9, 10), make_rational(1, 10)), Params::degenerate(3, 1)};
}

}  // namespace

TEST_CASE("parameter classification") {
  Params p(make_rational(1, 2), 1);
  CHECK(p.is_principal());
  CHECK_FALSE(p.max_length().has_value());

  Params d(-1, 3);
  CHECK(d.series() == Series::Degenerate);
  CHECK(d.degenerate_n() == 3);
  CHECK(d.beta() == 1);
  CHECK(d.max_length() == 3);
  CHECK(Params::degenerate(4, make_rational(1, 2)) == Params(make_rational(-1, 2), 2));

  CHECK_NOTHROW(Params(make_rational(1, 2), 0));
  CHECK_NOTHROW(Params(make_rational(1, 2), make_rational(-1, 4)));
  auto message = [](auto make) {
    try {
      make();
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message([] { Params(1, 1); }).find("alpha < 1") != std::string::npos);
  CHECK(message([] { Params(0, 0); }).find("theta > -alpha") != std::string::npos);
  CHECK(message([] { Params(-1, make_rational(5, 2)); }).find("N * beta") != std::string::npos);
  CHECK_THROWS_AS(Params(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params::degenerate(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params::degenerate(3, -1), std::invalid_argument);
}

TEST_CASE("measure examples") {
  Params p(make_rational(1, 2), 1);
  auto m2 = measure(2, p);
  CHECK(m2({2}) == make_rational(1, 4));
  CHECK(m2({1, 1}) == make_rational(3, 4));
  CHECK(measure_weight({2, 2}, p) == make_rational(3, 64));
  CHECK(measure(1, Params(0, 7))({1}) == 1);
  CHECK(measure(0, p)({}) == 1);
}

TEST_CASE("measure matches the literal product formula") {
  for (const auto& p : grid()) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& lambda : enumerate_level(n)) {
        CHECK(measure_weight(lambda, p) == oracle::ewens_pitman(lambda, p.alpha(), p.theta()));
      }
    }
  }
}

TEST_CASE("normalization, nonnegativity and degenerate support") {
  auto params = grid();
  params.emplace_back(make_rational(1, 2), 0);
  params.push_back(Params::degenerate(2, make_rational(3, 2)));
  for (const auto& p : params) {
    for (int n = 0; n <= 20; ++n) {
      auto d = measure(n, p);
      CHECK(d.total() == 1);
      for (std::size_t i = 0; i < d.states.size(); ++i) {
        CHECK(d.weights[i] >= 0);
        if (auto N = p.max_length(); N && d.states[i].length() > *N) CHECK(d.weights[i] == 0);
      }
    }
  }
}

TEST_CASE("down_prob") {
  CHECK(down_prob({2, 1}, {2}) == make_rational(1, 3));
  CHECK(down_prob({2, 1}, {1, 1}) == make_rational(2, 3));
  CHECK(down_prob({3}, {2}) == 1);
  CHECK(down_prob({1, 1, 1}, {1, 1}) == 1);
  CHECK(down_prob({3, 1}, {1, 1, 1}) == 0);
  CHECK_THROWS_AS(down_prob({3}, {1}), std::invalid_argument);
  for (int n = 1; n <= 9; ++n) {
    for (const auto& lambda : enumerate_level(n)) {
      Rational total = 0;
      for (const auto& t : down_transitions(lambda)) total += t.probability;
      CHECK(total == 1);
      for (const auto& [mu, w] : oracle::down_moves(lambda)) {
        Rational summed = 0;
        for (const auto& [nu, v] : oracle::down_moves(lambda))
          if (nu == mu) summed += v;
        CHECK(down_prob(lambda, mu) == summed);
      }
    }
  }
}

TEST_CASE("up_prob") {
  Params p(make_rational(1, 2), 1);
  CHECK(up_prob({1}, {2}, p) == make_rational(1, 4));
  CHECK(up_prob({1}, {1, 1}, p) == make_rational(3, 4));
  CHECK(up_prob({1, 1}, {2, 1}, p) == make_rational(1, 3));
  CHECK(up_prob({}, {1}, Params(make_rational(1, 2), 0)) == 1);
  CHECK(up_prob({2}, {1, 1, 1}, p) == 0);
  CHECK_THROWS_AS(up_prob({2}, {2}, p), std::invalid_argument);
  CHECK_THROWS_AS(up_prob({1, 1, 1, 1}, {2, 1, 1, 1}, Params::degenerate(3, 1)), std::invalid_argument);

  for (const auto& q : grid()) {
    for (int n = 0; n <= 8; ++n) {
      auto here = measure(n, q);
      auto next = measure(n + 1, q);
      for (const auto& lambda : enumerate_level(n)) {
        if (auto N = q.max_length(); N && lambda.length() > *N) continue;
        Rational total = 0;
        for (const auto& t : up_transitions(lambda, q)) total += t.probability;
        CHECK(total == 1);
        for (const auto& nu : enumerate_level(n + 1)) {
          const Rational up = up_prob(lambda, nu, q);
          Rational summed = 0;
          if (n > 0) {
            for (const auto& [target, w] : oracle::up_moves(lambda, q.alpha(), q.theta()))
              if (target == nu) summed += w;
            CHECK(up == summed);
          }
          if (here(lambda) != 0) CHECK(up == next(nu) / here(lambda) * down_prob(nu, lambda));
        }
      }
    }
  }
}

TEST_CASE("coherency") {
  CHECK(check_coherency(3, Params(make_rational(1, 2), 1)));
  CHECK(check_coherency(0, Params(0, 5)));
  CHECK(check_coherency(5, Params(-1, 3)));
  for (const auto& p : grid())
    for (int n = 0; n <= 10; ++n) CHECK(check_coherency(n, p));
}

TEST_CASE("state spaces") {
  StateSpace full(4);
  CHECK(full.size() == 5);
  CHECK(full.index_of({2, 2}) == 2);
  CHECK_FALSE(full.find({5}).has_value());
  CHECK_THROWS_AS(full.index_of({5}), std::out_of_range);
  StateSpace restricted = StateSpace::for_params(4, Params::degenerate(2, 1));
  CHECK(restricted.states() == std::vector<Partition>{{4}, {3, 1}, {2, 2}});
}
