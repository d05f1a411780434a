#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "feuerbach/embedding.hpp"
#include "feuerbach/triangle.hpp"

namespace feuerbach {

/// Draws random rational triangles.
///
/// The engine is std::mt19937_64, whose output sequence the standard fixes
/// exactly. Bounded integers use rejection sampling on the raw 64-bit outputs
/// instead of std::uniform_int_distribution, whose algorithm is left to the
/// implementation. Each side is p/q with q uniform in [1, max_denominator] and
/// p uniform in [1, 10q]; triples failing the strict triangle inequality are
/// discarded and redrawn.
class TriangleSampler {
 public:
  TriangleSampler(std::uint64_t seed, std::uint32_t max_denominator);

  Triangle next();
  Rational next_side();
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  std::uint32_t max_denominator_;
};

std::vector<Triangle> fuzz_corpus(std::uint64_t seed, std::size_t count,
                                  std::uint32_t max_denominator);

struct FuzzConfig {
  std::uint64_t seed = 42;
  std::size_t count = 1000;
  std::uint32_t max_denominator = 50;
  Tolerance tolerance;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct FuzzSample {
  std::size_t index = 0;
  Triangle triangle;
  bool identities_pass = false;  // verify_all
  bool bisectors_pass = false;   // I and all three excenters
  bool oracle_agree = false;
  bool flagged = false;          // oracle comparison skipped as ill-conditioned
  std::string detail;            // first failure, empty when passing

  bool pass() const { return identities_pass && bisectors_pass && (oracle_agree || flagged); }
};

struct FuzzResult {
  FuzzConfig config;
  std::vector<FuzzSample> samples;  // in corpus order
  std::size_t passed = 0;
  std::size_t flagged = 0;

  bool all_pass() const { return passed == samples.size(); }
};

FuzzSample check_sample(std::size_t index, const Triangle& t, const Tolerance& tol);

/// Runs every check over the corpus. Samples are independent and may be
/// processed in parallel; results are stored by corpus index.
FuzzResult run_fuzz(const FuzzConfig& config);

}  // namespace feuerbach
