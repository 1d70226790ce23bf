#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "dislab/errors.hpp"
#include "dislab/rng.hpp"

using namespace dislab;
using namespace dislab::rng;

TEST_CASE("Philox2x64-10 matches the Random123 known-answer vectors") {
  // kat_vectors from Random123: philox2x64 10 rounds.
  CHECK(philox2x64({0, 0}, 0) == Block{0xca00a0459843d731ULL, 0x66c24222c9a845b5ULL});
  CHECK(philox2x64({~0ULL, ~0ULL}, ~0ULL) == Block{0x65b021d60cd8310fULL, 0x4d02f3222f86df20ULL});
  CHECK(philox2x64({0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL}, 0xa4093822299f31d0ULL) ==
        Block{0x0a5e742c2997341cULL, 0xb0f883d38000de5dULL});
}

TEST_CASE("zero standard deviation returns the mean exactly and still advances") {
  RngState s = make_state({1, 2});
  const auto [x, next] = gaussian_draw(s, 5.0, 0.0);
  CHECK(x == 5.0);
  CHECK(next.counter == s.counter + 1);
  CHECK_THROWS_AS(gaussian_draw(s, 0.0, -1.0), DomainError);
}

TEST_CASE("same state reproduces the identical draw sequence") {
  RngState a = make_state({42, 7});
  RngState b = make_state({42, 7});
  for (int k = 0; k < 1000; ++k) {
    double x = 0, y = 0;
    std::tie(x, a) = gaussian_draw(a, 0.0, 1.0);
    std::tie(y, b) = gaussian_draw(b, 0.0, 1.0);
    REQUIRE(x == y);
  }
}

TEST_CASE("distinct (master_seed, stream_id) pairs give distinct keys") {
  std::set<Key> keys;
  for (std::uint64_t seed = 0; seed < 64; ++seed)
    for (std::uint64_t stream = 0; stream < 64; ++stream) keys.insert(derive_key({seed, stream}));
  CHECK(keys.size() == 64 * 64);
}

TEST_CASE("10^6 draws at (0, 1) have the right mean and variance") {
  RngState s = make_state({2024, 0});
  const int n = 1'000'000;
  double sum = 0.0, sum_sq = 0.0;
  int beyond_three = 0;
  for (int k = 0; k < n; ++k) {
    double z = 0;
    std::tie(z, s) = gaussian_draw(s, 0.0, 1.0);
    sum += z;
    sum_sq += z * z;
    beyond_three += std::abs(z) > 3.0;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.005);
  CHECK(std::abs(var - 1.0) < 0.01);
  // P(|Z| > 3) = 0.0026998; binomial sd at n = 1e6 is ~52.
  CHECK(std::abs(beyond_three - 2699.8) < 300);
}

TEST_CASE("addressed normals pass a Kolmogorov-Smirnov check") {
  const std::size_t n = 100'000;
  std::vector<double> lane0(n), lane1(n);
  standard_normals(derive_key({9, 9}), Domain::agent, 0, 17, lane0, lane1);
  for (auto* lane : {&lane0, &lane1}) {
    std::vector<double> z = *lane;
    std::sort(z.begin(), z.end());
    double d = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double cdf = 0.5 * std::erfc(-z[k] / std::sqrt(2.0));
      d = std::max({d, std::abs(cdf - static_cast<double>(k) / n),
                    std::abs(cdf - static_cast<double>(k + 1) / n)});
    }
    // 0.1% critical value 1.95 / sqrt(n).
    CHECK(d < 1.95 / std::sqrt(static_cast<double>(n)));
  }

  double cross = 0.0;
  for (std::size_t k = 0; k < n; ++k) cross += lane0[k] * lane1[k];
  CHECK(std::abs(cross / n) < 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("batch generation equals per-address generation for any partition") {
  const Key key = derive_key({5, 3});
  const std::size_t n = 1000;
  std::vector<double> a0(n), a1(n);
  standard_normals(key, Domain::agent, 100, 9, a0, a1);

  for (std::size_t k = 0; k < n; ++k) {
    const auto [x, y] = standard_normal_pair(key, Domain::agent, 100 + k, 9);
    REQUIRE(a0[k] == x);
    REQUIRE(a1[k] == y);
  }

  std::vector<double> b0(n), b1(n);
  standard_normals(key, Domain::agent, 100, 9, std::span(b0).first(337), std::span(b1).first(337));
  standard_normals(key, Domain::agent, 437, 9, std::span(b0).subspan(337),
                   std::span(b1).subspan(337));
  CHECK(a0 == b0);
  CHECK(a1 == b1);

  std::vector<double> only_lane1(n);
  standard_normals(key, Domain::agent, 100, 9, {}, only_lane1);
  CHECK(only_lane1 == a1);
}

TEST_CASE("domains and periods address different draws") {
  const Key key = derive_key({1, 1});
  CHECK(standard_normal(key, Domain::agent, 0, 0) != standard_normal(key, Domain::fundamental, 0, 0));
  CHECK(standard_normal(key, Domain::agent, 0, 0) != standard_normal(key, Domain::agent, 0, 1));
  CHECK(standard_normal(key, Domain::agent, 0, 0) != standard_normal(key, Domain::agent, 1, 0));
}

TEST_CASE("independent streams are uncorrelated") {
  const std::size_t n = 200'000;
  std::vector<double> a(n), b(n);
  standard_normals(derive_key({11, 0}), Domain::agent, 0, 0, a, {});
  standard_normals(derive_key({11, 1}), Domain::agent, 0, 0, b, {});
  double cross = 0.0;
  for (std::size_t k = 0; k < n; ++k) cross += a[k] * b[k];
  CHECK(std::abs(cross / n) < 5.0 / std::sqrt(static_cast<double>(n)));
}
