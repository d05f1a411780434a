// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "feuerbach/fuzz.hpp"
#include "feuerbach/identities.hpp"
#include "feuerbach/oracle_compare.hpp"
#include "feuerbach/render_svg.hpp"
#include "support/generators.hpp"
#include "support/plane_oracle.hpp"

using namespace feuerbach;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kCorpusSize = 1000;
constexpr std::uint32_t kMaxDenominator = 50;

const std::vector<Triangle>& corpus() {
  static const std::vector<Triangle> c = fuzz_corpus(kSeed, kCorpusSize, kMaxDenominator);
  return c;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string text(const Triangle& t) {
  return "(" + t.a().str() + ", " + t.b().str() + ", " + t.c().str() + ")";
}

Outcome exact_theorem_suite() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t reports = 0;
  for (const Triangle& t : corpus()) {
    const Verification v = verify_all(t);
    for (const auto& r : v.reports) {
      ++reports;
      o.require(r.ok(), std::string(name(r.theorem)) + " fails on " + text(t));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(reports == 6 * kCorpusSize, "wrong report count");
  o.require(seconds < 10.0, "took " + std::to_string(seconds) + " s");
  if (o.pass) o.detail = std::to_string(reports) + " reports exact in " + std::to_string(seconds) + " s";
  return o;
}

Outcome worked_345() {
  Outcome o;
  // Oracle first: the expected literals must match an independent construction.
  namespace po = plane_oracle;
  const po::Figure f = po::build(3, 4, 5);
  const auto near = [](po::real x, po::real y) { return std::abs(x - y) < 1e-12L; };
  o.require(near(f.r, 1) && near(f.R, 2.5L), "oracle radii disagree with r = 1, R = 5/2");
  o.require(near(po::sq(po::dist(f.O, f.I)), 1.25L), "oracle |OI|^2 != 5/4");
  o.require(near(po::dist(f.I, f.N), 0.25L), "oracle |IN| != 1/4");
  o.require(near(po::dist(f.ex[2], f.N), 7.25L), "oracle |I_cN| != 29/4");
  o.require(near(po::dist(f.O, f.H), 2.5L), "oracle |OH| != 5/2");
  o.require(near(f.rx[0], 2) && near(f.rx[1], 3) && near(f.rx[2], 6), "oracle exradii != 2, 3, 6");
  if (!o.pass) return o;

  const Triangle t = Triangle::make(3, 4, 5);
  const DerivedScalars d = derive(t);
  const auto root = [](const Rational& q) { return q.exact_sqrt(); };
  o.require(root(d.inradius_sq) == Rational(1), "r != 1");
  o.require(root(d.circumradius_sq) == Rational(5, 2), "R != 5/2");
  o.require(squared_distance(CenterId::Circumcenter, CenterId::Incenter, t) == Rational(5, 4),
            "|OI|^2 != 5/4");
  o.require(root(squared_distance(CenterId::Incenter, CenterId::NinePointCenter, t)) ==
                Rational(1, 4),
            "|IN| != 1/4");
  o.require(root(squared_distance(CenterId::ExcenterC, CenterId::NinePointCenter, t)) ==
                Rational(29, 4),
            "|I_cN| != 29/4");
  o.require(root(squared_distance(CenterId::Circumcenter, CenterId::Orthocenter, t)) ==
                Rational(5, 2),
            "|OH| != 5/2");
  o.require(root(d.exradius_sq_for(Side::A)) == Rational(2) &&
                root(d.exradius_sq_for(Side::B)) == Rational(3) &&
                root(d.exradius_sq_for(Side::C)) == Rational(6),
            "exradii != 2, 3, 6");
  return o;
}

Outcome equilateral() {
  Outcome o;
  const Triangle t = Triangle::make(1, 1, 1);
  o.require(squared_distance(CenterId::Incenter, CenterId::NinePointCenter, t).is_zero(),
            "|IN|^2 != 0");
  const Verification v = verify_all(t);
  o.require(v.tangency[0].kind == TangencyKind::Coincident, "incircle kind is not coincident");
  for (const auto& r : v.reports) o.require(r.ok(), std::string(name(r.theorem)) + " fails");
  o.require(v.all_pass, "verification not passing");
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  const Tolerance tol{};  // relative 1e-9
  std::size_t flagged = 0;
  for (const Triangle& t : corpus()) {
    const Comparison c = compare(t, tol);
    if (c.flagged) {
      ++flagged;
      continue;
    }
    o.require(c.agree, "disagreement on " + text(t));
  }
  o.require(flagged * 100 <= kCorpusSize, std::to_string(flagged) + " flagged, over 1%");
  if (o.pass) o.detail = std::to_string(flagged) + " flagged";
  return o;
}

Outcome lemma_gram() {
  Outcome o;
  std::mt19937_64 rng(2024);
  const std::vector<Triangle> triangles = fuzz_corpus(99, 100, kMaxDenominator);
  std::size_t checked = 0;
  for (const Triangle& t : triangles) {
    const DerivedScalars d = derive(t);
    for (int i = 0; i < 100; ++i, ++checked) {
      const CoeffTriple x = testing_support::random_coeffs(rng);
      o.require(squared_norm(x, d, t) == gram_quadratic_form(x, d, t), "mismatch on " + text(t));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " triples";
  return o;
}

Outcome bisectors() {
  Outcome o;
  constexpr std::array<CenterId, 4> kCenters = {CenterId::Incenter, CenterId::ExcenterA,
                                                CenterId::ExcenterB, CenterId::ExcenterC};
  for (const Triangle& t : corpus()) {
    for (CenterId c : kCenters) {
      o.require(bisector_membership(c, t).pass, std::string(symbol(c)) + " off its bisectors on " + text(t));
    }
  }
  return o;
}

Outcome covariance() {
  Outcome o;
  const std::array<Rational, 3> factors = {Rational(2), Rational(3, 7), Rational(11, 5)};
  const std::array<std::array<Side, 3>, 5> orders = {{{Side::A, Side::C, Side::B},
                                                      {Side::B, Side::A, Side::C},
                                                      {Side::B, Side::C, Side::A},
                                                      {Side::C, Side::A, Side::B},
                                                      {Side::C, Side::B, Side::A}}};
  const std::vector<Triangle> sample = fuzz_corpus(kSeed, 100, kMaxDenominator);
  for (const Triangle& t : sample) {
    for (const Rational& k : factors) {
      const Triangle tk = scaled(t, k);
      for (CenterId p : kAllCenters) {
        for (CenterId q : kAllCenters) {
          o.require(squared_distance(p, q, tk) == square(k) * squared_distance(p, q, t),
                    "scaling breaks on " + text(t));
        }
      }
    }
    const Verification base = verify_all(t);
    for (const auto& order : orders) {
      const Verification v = verify_all(permuted(t, order));
      for (std::size_t i : {0u, 1u, 5u}) {
        o.require(v.reports[i].lhs == base.reports[i].lhs && v.reports[i].rhs == base.reports[i].rhs,
                  std::string(name(base.reports[i].theorem)) + " not invariant on " + text(t));
      }
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& moved = v.reports[2 + i];
        const auto& source = base.reports[2 + index(order[i])];
        o.require(moved.lhs == source.lhs && moved.rhs == source.rhs,
                  "excircle reports not permuted on " + text(t));
      }
    }
  }
  return o;
}

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(FEUERBACH_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinism() {
  Outcome o;
  const Run r1 = run_cli("render 3 4 5");
  const Run r2 = run_cli("render 3 4 5");
  o.require(r1.exit_code == 0 && !r1.out.empty(), "render failed");
  o.require(r1.out == r2.out, "render output differs between runs");

  const Run f1 = run_cli("fuzz --seed 42");
  const Run f2 = run_cli("fuzz --seed 42");
  o.require(f1.exit_code == 0 && !f1.out.empty(), "fuzz failed");
  o.require(f1.out == f2.out, "fuzz output differs between runs");

  std::ifstream golden(std::string(FEUERBACH_GOLDEN_DIR) + "/render_345.svg", std::ios::binary);
  std::ostringstream os;
  os << golden.rdbuf();
  o.require(golden.is_open(), "golden file missing");
  o.require(os.str() == r1.out, "render differs from the golden file");
  return o;
}

Outcome tangency_consequences() {
  Outcome o;
  const Triangle t = Triangle::make(3, 4, 5);
  const DerivedScalars d = derive(t);
  const TangencyPoint f = tangency_point(t, Circle::Incircle);
  o.require(f.scale == Rational(5), "incircle scale is not 5");
  o.require(f.to_nine_point_center_sq == d.circumradius_sq / Rational(4), "|F - N|^2 != R^2/4");
  o.require(f.to_circle_center_sq == d.inradius_sq, "|F - I|^2 != r^2");
  for (Side x : kSides) {
    const TangencyPoint e = tangency_point(t, excircle(x));
    o.require(e.consequences_hold, std::string("excircle ") + label(x) + " consequences fail");
  }

  // The floating path: constructed tangency points across the corpus.
  std::size_t points = 0;
  for (const Triangle& s : corpus()) {
    for (Circle c : kCircles) {
      const TangencyPoint tp = tangency_point(s, c);
      o.require(tp.consequences_hold, std::string(name(c)) + " consequences fail on " + text(s));
    }
    const Comparison cmp = compare(s, Tolerance{});
    if (cmp.flagged) continue;
    for (const auto& ta : cmp.tangency) {
      ++points;
      o.require(ta.agree && ta.on_nine_point_circle && ta.on_circle,
                std::string(name(ta.circle)) + " float point off on " + text(s));
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " float points within 1e-9";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"exact theorem suite", exact_theorem_suite},
      {"3-4-5 worked instance", worked_345},
      {"equilateral branch", equilateral},
      {"oracle agreement", oracle_agreement},
      {"lemma-gram equivalence", lemma_gram},
      {"bisector membership", bisectors},
      {"scaling/permutation covariance", covariance},
      {"determinism", determinism},
      {"tangency-point consequences", tangency_consequences},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].label;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n";
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
