#include <doctest.h>

#include "feuerbach/fuzz.hpp"
#include "feuerbach/report_json.hpp"

using namespace feuerbach;

TEST_CASE("same seed, same corpus") {
  const auto a = fuzz_corpus(42, 200, 50);
  const auto b = fuzz_corpus(42, 200, 50);
  CHECK(a == b);
  CHECK(fuzz_corpus(43, 200, 50) != a);
}

TEST_CASE("corpus sides respect the sampling bounds") {
  for (const auto& t : fuzz_corpus(3, 500, 7)) {
    for (const auto& side : t.sides()) {
      CHECK(side.sign() > 0);
      CHECK(side.denominator() <= 7);
      CHECK(side <= Rational(10));
    }
  }
}

TEST_CASE("uniform_below stays in range and hits every value") {
  TriangleSampler s(1, 10);
  std::array<int, 7> seen{};
  for (int i = 0; i < 2000; ++i) {
    const auto v = s.uniform_below(7);
    REQUIRE(v < 7);
    ++seen[v];
  }
  for (int n : seen) CHECK(n > 200);
}

TEST_CASE("first draws are pinned") {
  // Freezes the generator contract: mt19937_64 plus rejection sampling.
  const auto corpus = fuzz_corpus(42, 2, 50);
  // Recomputing from the raw engine must reproduce the first side.
  std::mt19937_64 replay(42);
  auto below = [&](std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do x = replay(); while (x < threshold);
    return x % bound;
  };
  const auto q = static_cast<long>(1 + below(50));
  const auto p = static_cast<long>(1 + below(10 * static_cast<std::uint64_t>(q)));
  CHECK(corpus[0].a() == Rational(p, q));
}

TEST_CASE("run_fuzz is order-stable across thread counts") {
  FuzzConfig one;
  one.count = 60;
  one.threads = 1;
  FuzzConfig many = one;
  many.threads = 4;
  const FuzzResult a = run_fuzz(one);
  const FuzzResult b = run_fuzz(many);
  CHECK(a.all_pass());
  CHECK(fuzz_json(a) == fuzz_json(b));
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i].index == i);
}

TEST_CASE("zero max denominator is rejected") {
  CHECK_THROWS_AS(TriangleSampler(1, 0), Error);
}
