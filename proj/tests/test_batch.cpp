#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "rns/batch.hpp"
#include "rns/rng.hpp"

using namespace rns;

namespace {

std::vector<Rational> sample_inputs(std::size_t count, std::uint64_t seed) {
  std::vector<Rational> xs;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SplitMix64 rng = SplitMix64::keyed(seed, i);
    const std::uint64_t q = rng.range(1, 80);
    const std::uint64_t top = q * 3 / 2;  // admissible numerators for (3,3)
    xs.emplace_back(BigInt(rng.below(top + 1)), BigInt(q));
  }
  return xs;
}

}  // namespace

TEST_CASE("loop helpers cover every index exactly once") {
  std::vector<int> serial_hits(257, 0);
  batch::serial_for(257, [&](std::size_t i) { serial_hits[i] += 1; });
  for (int h : serial_hits) CHECK(h == 1);

  std::vector<std::atomic<int>> parallel_hits(257);
  batch::parallel_for(257, [&](std::size_t i) { parallel_hits[i] += 1; });
  for (const auto& h : parallel_hits) CHECK(h.load() == 1);
}

TEST_CASE("parallel loop propagates the first exception") {
  try {
    batch::parallel_for(64, [&](std::size_t i) {
      if (i % 7 == 3) throw std::runtime_error("boom");
    });
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "boom");
  }
}

TEST_CASE("parallel and serial classification agree element by element") {
  const std::vector<Rational> xs = sample_inputs(300, 2026);
  const Params p{3, 3};
  const auto par = batch::classify_many(xs, p, kDefaultMaxStates, true);
  const auto ser = batch::classify_many(xs, p, kDefaultMaxStates, false);
  REQUIRE(par.size() == xs.size());
  REQUIRE(ser.size() == xs.size());
  CHECK(par == ser);
  for (const auto& o : par) CHECK_FALSE(o.limit_exceeded);
}

TEST_CASE("batched outcomes equal one-at-a-time classification") {
  const std::vector<Rational> xs = sample_inputs(120, 31337);
  const Params p{4, 5};
  const auto out = batch::classify_many(xs, p);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK_FALSE(out[i].limit_exceeded);
    CHECK(out[i].cls == classify(xs[i], p));
  }
}

TEST_CASE("state-cap overruns are flagged per element") {
  const Params p{2, 2};
  const std::vector<Rational> xs = {Rational(0), Rational(1, 999983), Rational(1, 3)};
  const auto out = batch::classify_many(xs, p, 50, true);
  REQUIRE(out.size() == 3);
  CHECK_FALSE(out[0].limit_exceeded);  // one-state automaton fits any cap
  CHECK(out[0].cls == RepClass::unique());
  CHECK(out[1].limit_exceeded);  // huge prime denominator blows the cap
  CHECK_FALSE(out[2].limit_exceeded);
  CHECK(out[2].cls == RepClass::continuum());
}

TEST_CASE("empty batch yields an empty result") {
  CHECK(batch::classify_many({}, {3, 3}).empty());
}

TEST_CASE("repeat runs are bitwise identical") {
  const std::vector<Rational> xs = sample_inputs(150, 555);
  const Params p{3, 4};
  const auto a = batch::classify_many(xs, p);
  const auto b = batch::classify_many(xs, p);
  CHECK(a == b);
}
