// Deterministic RNG: bit-exact reproducibility, stream derivation, and
// distributional correctness of the transform methods.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "netgof/rng.hpp"
#include "netgof/stats.hpp"

using namespace netgof;

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

TEST_CASE("same seed reproduces the stream bit for bit", "[rng]") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds give different streams", "[rng]") {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next_u64() == b.next_u64()) ++equal;
  REQUIRE(equal == 0);
}

TEST_CASE("derive_seed is a pure function with well-separated streams", "[rng]") {
  REQUIRE(derive_seed(7, 3) == derive_seed(7, 3));
  REQUIRE(derive_seed(7, 3) != derive_seed(7, 4));
  REQUIRE(derive_seed(7, 3) != derive_seed(8, 3));
  // No collisions over a block of streams and seeds of realistic size.
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 64; ++s)
    for (std::uint64_t k = 0; k < 256; ++k) seen.insert(derive_seed(s, k));
  REQUIRE(seen.size() == 64 * 256);
}

TEST_CASE("uniform lies in [0,1) with the right moments", "[rng]") {
  Rng rng(2024);
  const int n = 200000;
  double acc = 0.0, lo = 1.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    acc += u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  const double m = acc / n;
  // 4 standard errors of the mean of U(0,1): 4 * (1/sqrt(12)) / sqrt(n).
  REQUIRE(std::abs(m - 0.5) < 4.0 * 0.288675 / std::sqrt(double(n)));
  REQUIRE(lo < 0.001);
  REQUIRE(hi > 0.999);
}

TEST_CASE("uniform(lo, hi) stays inside its interval", "[rng]") {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform(-2.0, -1.0);
    REQUIRE(u >= -2.0);
    REQUIRE(u < -1.0);
  }
}

TEST_CASE("uniform_int covers its range uniformly", "[rng]") {
  Rng rng(99);
  REQUIRE_THROWS_AS(rng.uniform_int(0), std::invalid_argument);
  for (int i = 0; i < 100; ++i) REQUIRE(rng.uniform_int(1) == 0);

  const int n = 100000;
  std::vector<int> counts(10, 0);
  for (int i = 0; i < n; ++i) counts[static_cast<std::size_t>(rng.uniform_int(10))]++;
  // Each cell is Binomial(n, 0.1): 5 SE band around the expectation.
  const double se = std::sqrt(n * 0.1 * 0.9);
  for (int c : counts) REQUIRE(std::abs(c - n * 0.1) < 5.0 * se);
}

TEST_CASE("bernoulli matches its probability", "[rng]") {
  Rng rng(7);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i)
    if (rng.bernoulli(0.3)) ++hits;
  const double se = std::sqrt(0.3 * 0.7 / n);
  REQUIRE(std::abs(hits / double(n) - 0.3) < 4.0 * se);
}

TEST_CASE("normal deviates have standard moments and distribution", "[rng]") {
  Rng rng(314);
  const int n = 200000;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rng.normal();
  REQUIRE(std::abs(mean(x)) < 4.0 / std::sqrt(double(n)));
  REQUIRE(std::abs(stddev(x) - 1.0) < 0.01);
  REQUIRE(ks_distance(x, normal_cdf) < 0.01);
}

TEST_CASE("gamma deviates match mean and variance of Gamma(shape, 1)", "[rng]") {
  for (double shape : {0.5, 1.0, 3.0}) {
    Rng rng(1000 + static_cast<std::uint64_t>(10 * shape));
    const int n = 200000;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = rng.gamma(shape);
      REQUIRE(x[static_cast<std::size_t>(i)] >= 0.0);
    }
    // Gamma(k,1) has mean k and variance k.
    REQUIRE(std::abs(mean(x) - shape) < 5.0 * std::sqrt(shape / n));
    const double s = stddev(x);
    REQUIRE(std::abs(s * s - shape) < 0.1 * shape + 0.02);
  }
  Rng rng(1);
  REQUIRE_THROWS_AS(rng.gamma(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(rng.gamma(-1.0), std::invalid_argument);
}

TEST_CASE("chi deviates square to chi-square with the right mean", "[rng]") {
  for (double dof : {1.0, 5.0, 117.0}) {
    Rng rng(2000 + static_cast<std::uint64_t>(dof));
    const int n = 100000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double c = rng.chi(dof);
      acc += c * c;
    }
    // chi^2 with k dof has mean k and variance 2k.
    const double se = std::sqrt(2.0 * dof / n);
    REQUIRE(std::abs(acc / n - dof) < 5.0 * se);
  }
}
