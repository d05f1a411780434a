#include "feuerbach/fuzz.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "feuerbach/centers.hpp"
#include "feuerbach/identities.hpp"
#include "feuerbach/oracle_compare.hpp"

namespace feuerbach {

TriangleSampler::TriangleSampler(std::uint64_t seed, std::uint32_t max_denominator)
    : engine_(seed), max_denominator_(max_denominator) {
  if (max_denominator == 0) {
    throw Error(ErrorCode::InvalidArgument, "max denominator must be positive");
  }
}

std::uint64_t TriangleSampler::uniform_below(std::uint64_t bound) {
  // 2^64 mod bound; values below it would bias the low residues.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % bound;
}

Rational TriangleSampler::next_side() {
  const auto q = static_cast<long>(1 + uniform_below(max_denominator_));
  const auto p = static_cast<long>(1 + uniform_below(10 * static_cast<std::uint64_t>(q)));
  return Rational(p, q);
}

Triangle TriangleSampler::next() {
  for (;;) {
    Rational a = next_side();
    Rational b = next_side();
    Rational c = next_side();
    if (a < b + c && b < a + c && c < a + b) {
      return Triangle::make(std::move(a), std::move(b), std::move(c));
    }
  }
}

std::vector<Triangle> fuzz_corpus(std::uint64_t seed, std::size_t count,
                                  std::uint32_t max_denominator) {
  TriangleSampler sampler(seed, max_denominator);
  std::vector<Triangle> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

FuzzSample check_sample(std::size_t index, const Triangle& t, const Tolerance& tol) {
  FuzzSample s{.index = index, .triangle = t, .detail = {}};

  const Verification v = verify_all(t);
  s.identities_pass = v.all_pass;
  if (!s.identities_pass) {
    for (const auto& r : v.reports) {
      if (!r.ok()) {
        s.detail = std::string(name(r.theorem)) + ": " + r.lhs.str() + " != " + r.rhs.str();
        break;
      }
    }
    if (s.detail.empty()) s.detail = "tangency classification";
  }

  s.bisectors_pass = true;
  for (CenterId id : {CenterId::Incenter, CenterId::ExcenterA, CenterId::ExcenterB,
                      CenterId::ExcenterC}) {
    if (!bisector_membership(id, t).pass) {
      s.bisectors_pass = false;
      if (s.detail.empty()) s.detail = "bisector membership: " + std::string(symbol(id));
    }
  }

  const Comparison cmp = compare(t, tol);
  s.oracle_agree = cmp.agree;
  s.flagged = cmp.flagged;
  if (!cmp.agree && s.detail.empty()) {
    s.detail = cmp.flagged ? "flagged: " + cmp.flag_reason : "oracle disagreement";
  }
  return s;
}

FuzzResult run_fuzz(const FuzzConfig& config) {
  FuzzResult result;
  result.config = config;
  const std::vector<Triangle> corpus =
      fuzz_corpus(config.seed, config.count, config.max_denominator);

  std::vector<std::optional<FuzzSample>> slots(corpus.size());
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 64);

  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < corpus.size(); i += threads) {
          try {
            slots[i] = check_sample(i, corpus[i], config.tolerance);
          } catch (const std::exception& err) {
            slots[i] = FuzzSample{.index = i, .triangle = corpus[i], .detail = err.what()};
          }
        }
      });
    }
  }

  result.samples.reserve(slots.size());
  for (auto& slot : slots) result.samples.push_back(std::move(*slot));
  for (const auto& s : result.samples) {
    if (s.pass()) ++result.passed;
    if (s.flagged) ++result.flagged;
  }
  return result;
}

}  // namespace feuerbach
