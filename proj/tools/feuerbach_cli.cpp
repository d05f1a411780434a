// Command-line front end over the C API in libfeuerbach.
//
// Exit codes: 0 success, 1 input error, 2 verification or oracle failure.

#include <feuerbach/feuerbach.h>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailed = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owning wrappers over the C handles.
struct TriangleDeleter {
  void operator()(fb_triangle* t) const { fb_triangle_destroy(t); }
};
struct VerificationDeleter {
  void operator()(fb_verification* v) const { fb_verification_destroy(v); }
};
struct FuzzDeleter {
  void operator()(fb_fuzz_result* r) const { fb_fuzz_result_destroy(r); }
};
using TrianglePtr = std::unique_ptr<fb_triangle, TriangleDeleter>;
using VerificationPtr = std::unique_ptr<fb_verification, VerificationDeleter>;
using FuzzPtr = std::unique_ptr<fb_fuzz_result, FuzzDeleter>;

void check(fb_status status) {
  if (status != FB_OK) throw InputError(fb_last_error());
}

std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  fb_string_free(s);
  return out;
}

TrianglePtr make_triangle(const std::vector<std::string>& sides) {
  if (sides.size() != 3) throw InputError("expected three side lengths a b c");
  fb_triangle* t = nullptr;
  check(fb_triangle_create(sides[0].c_str(), sides[1].c_str(), sides[2].c_str(), &t));
  return TrianglePtr(t);
}

std::string side_text(const fb_triangle* t, fb_side s) {
  char* out = nullptr;
  check(fb_triangle_side(t, s, &out));
  return take(out);
}

std::string triangle_text(const fb_triangle* t) {
  return side_text(t, FB_SIDE_A) + " " + side_text(t, FB_SIDE_B) + " " + side_text(t, FB_SIDE_C);
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

// Left-aligned columns padded to the widest cell.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

struct Output {
  std::optional<std::string> path;
  std::string text;

  void flush() const {
    if (!path) {
      std::cout << text;
      return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw InputError("cannot write output file '" + *path + "'");
    f << text;
    if (!f.flush()) throw InputError("cannot write output file '" + *path + "'");
  }
};

std::string centers_table(const fb_triangle* t) {
  std::vector<std::vector<std::string>> rows = {{"center", "alpha", "beta", "gamma", "x", "y"}};
  for (int c = 0; c < FB_CENTER_COUNT; ++c) {
    const auto id = static_cast<fb_center>(c);
    char *a = nullptr, *b = nullptr, *g = nullptr;
    check(fb_center_coeffs(t, id, &a, &b, &g));
    double x = 0, y = 0;
    check(fb_center_position(t, id, 0, &x, &y));
    rows.push_back({fb_center_symbol(id), take(a), take(b), take(g), fixed(x), fixed(y)});
  }
  return "triangle " + triangle_text(t) + " (positions relative to the circumcenter)\n" +
         format_table(rows);
}

std::string distances_table(const fb_triangle* t) {
  std::vector<std::vector<std::string>> rows = {{"p", "q", "squared", "length"}};
  for (int i = 0; i < FB_CENTER_COUNT; ++i) {
    for (int j = i + 1; j < FB_CENTER_COUNT; ++j) {
      const auto p = static_cast<fb_center>(i), q = static_cast<fb_center>(j);
      char* sq = nullptr;
      check(fb_squared_distance(t, p, q, &sq));
      std::string exact = take(sq);
      double v = 0;
      check(fb_rational_to_double(exact.c_str(), &v));
      rows.push_back({fb_center_symbol(p), fb_center_symbol(q), exact, fixed(std::sqrt(v))});
    }
  }
  return "triangle " + triangle_text(t) + "\n" + format_table(rows);
}

// Which tangency entry accompanies a theorem row, if any.
std::optional<std::size_t> tangency_index(fb_theorem th) {
  switch (th) {
    case FB_THEOREM_FEUERBACH_INCIRCLE: return 0;
    case FB_THEOREM_FEUERBACH_EXCIRCLE_A: return 1;
    case FB_THEOREM_FEUERBACH_EXCIRCLE_B: return 2;
    case FB_THEOREM_FEUERBACH_EXCIRCLE_C: return 3;
    default: return std::nullopt;
  }
}

std::string verify_table(const fb_triangle* t, const fb_verification* v) {
  std::vector<std::vector<std::string>> rows = {{"theorem", "lhs", "rhs", "result", "tangency"}};
  for (std::size_t i = 0; i < fb_verification_report_count(v); ++i) {
    fb_theorem th{};
    char *lhs = nullptr, *rhs = nullptr;
    int pass = 0;
    check(fb_verification_report(v, i, &th, &lhs, &rhs, &pass));
    std::string tangency = "-";
    if (auto k = tangency_index(th)) {
      fb_tangency_kind kind{};
      char* scale = nullptr;
      check(fb_verification_tangency(v, *k, nullptr, &kind, &scale));
      tangency = fb_tangency_kind_name(kind);
      if (scale) tangency += " (k = " + take(scale) + ")";
    }
    rows.push_back({fb_theorem_name(th), take(lhs), take(rhs), pass ? "PASS" : "FAIL", tangency});
  }
  return "triangle " + triangle_text(t) + "\n" + format_table(rows) +
         (fb_verification_all_pass(v) ? "all identities hold\n" : "VERIFICATION FAILED\n");
}

// Triangles from the positional arguments, or one "a b c" per stdin line.
std::vector<TrianglePtr> gather(const std::vector<std::string>& sides) {
  std::vector<TrianglePtr> out;
  if (!sides.empty()) {
    out.push_back(make_triangle(sides));
    return out;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    std::istringstream is(line);
    std::vector<std::string> fields;
    for (std::string f; is >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    out.push_back(make_triangle(fields));
  }
  if (out.empty()) throw InputError("no triangle given");
  return out;
}

using Renderer = std::string (*)(const fb_triangle*);

std::string centers_json(const fb_triangle* t) {
  char* out = nullptr;
  check(fb_centers_json(t, &out));
  return take(out);
}

std::string distances_json(const fb_triangle* t) {
  char* out = nullptr;
  check(fb_distances_json(t, &out));
  return take(out);
}

std::string join_json(const std::vector<std::string>& docs) {
  if (docs.size() == 1) return docs.front() + "\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < docs.size(); ++i) {
    out += docs[i];
    out += i + 1 < docs.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::string per_triangle(const std::vector<TrianglePtr>& ts, bool json, Renderer as_table,
                         Renderer as_json) {
  std::vector<std::string> docs;
  for (const auto& t : ts) docs.push_back(json ? as_json(t.get()) : as_table(t.get()));
  if (json) return join_json(docs);
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) out += (i ? "\n" : "") + docs[i];
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triangle centers, Euler and Feuerbach identities, and figures"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(fb_version()));

  std::string format = "table";
  std::optional<std::string> output_path;
  std::vector<std::string> sides;

  auto add_common = [&](CLI::App* sub, bool with_sides) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--output", output_path, "Write output to PATH instead of stdout");
    if (with_sides) {
      sub->add_option("sides", sides, "Side lengths a b c as p/q or decimals (stdin if omitted)")
          ->expected(0, 3);
    }
  };

  auto* centers = app.add_subcommand("centers", "Coefficient triples and positions of each center");
  add_common(centers, true);
  auto* verify = app.add_subcommand("verify", "Check the six identities and four tangencies");
  add_common(verify, true);
  auto* distances = app.add_subcommand("distances", "Pairwise squared distances between centers");
  add_common(distances, true);

  auto* render = app.add_subcommand("render", "SVG figure of the nine-point configuration");
  add_common(render, true);
  std::string layers = "all";
  int width_px = 800;
  double margin = 0.05;
  render->add_option("--layers", layers, "Comma-separated layers");
  render->add_option("--width", width_px, "Width in pixels")->check(CLI::PositiveNumber);
  render->add_option("--margin", margin, "Margin as a fraction of the figure extent")
      ->check(CLI::NonNegativeNumber);

  fb_fuzz_options fuzz_opts;
  fb_fuzz_options_default(&fuzz_opts);
  auto* fuzz = app.add_subcommand("fuzz", "Verify and cross-check random rational triangles");
  add_common(fuzz, false);
  fuzz->add_option("--seed", fuzz_opts.seed, "PRNG seed (mt19937_64)");
  fuzz->add_option("--count", fuzz_opts.count, "Number of triangles")->check(CLI::PositiveNumber);
  fuzz->add_option("--max-denominator", fuzz_opts.max_denominator, "Largest side denominator")
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--tolerance-rel", fuzz_opts.tolerance_rel, "Oracle relative tolerance")
      ->check(CLI::NonNegativeNumber);
  fuzz->add_option("--tolerance-abs", fuzz_opts.tolerance_abs, "Oracle absolute tolerance")
      ->check(CLI::NonNegativeNumber);
  fuzz->add_option("--threads", fuzz_opts.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const bool json = format == "json";
  Output out{output_path, {}};
  int status = kExitOk;
  try {
    if (centers->parsed()) {
      out.text = per_triangle(gather(sides), json, centers_table, centers_json);
    } else if (distances->parsed()) {
      out.text = per_triangle(gather(sides), json, distances_table, distances_json);
    } else if (verify->parsed()) {
      std::vector<std::string> docs;
      for (const auto& t : gather(sides)) {
        fb_verification* raw = nullptr;
        check(fb_verify_all(t.get(), &raw));
        VerificationPtr v(raw);
        if (!fb_verification_all_pass(v.get())) status = kExitFailed;
        if (json) {
          char* doc = nullptr;
          check(fb_verification_json(v.get(), &doc));
          docs.push_back(take(doc));
        } else {
          docs.push_back(verify_table(t.get(), v.get()));
        }
      }
      if (json) {
        out.text = join_json(docs);
      } else {
        for (std::size_t i = 0; i < docs.size(); ++i) out.text += (i ? "\n" : "") + docs[i];
      }
    } else if (render->parsed()) {
      const TrianglePtr t = make_triangle(sides);
      char* svg = nullptr;
      check(fb_render_svg(t.get(), layers.c_str(), width_px, margin, &svg));
      out.text = take(svg);
    } else if (fuzz->parsed()) {
      fb_fuzz_result* raw = nullptr;
      check(fb_fuzz_run(&fuzz_opts, &raw));
      FuzzPtr r(raw);
      const std::size_t count = fb_fuzz_count(r.get());
      const std::size_t passed = fb_fuzz_passed(r.get());
      if (passed != count) status = kExitFailed;
      if (json) {
        char* doc = nullptr;
        check(fb_fuzz_json(r.get(), &doc));
        out.text = take(doc) + "\n";
      } else {
        std::ostringstream os;
        os << "seed " << fuzz_opts.seed << ", max denominator " << fuzz_opts.max_denominator
           << "\n";
        for (std::size_t i = 0; i < count; ++i) {
          fb_triangle* tri = nullptr;
          int pass = 0, flagged = 0;
          char* detail = nullptr;
          check(fb_fuzz_sample(r.get(), i, &tri, &pass, &flagged, &detail));
          const TrianglePtr t(tri);
          const std::string why = take(detail);
          if (!pass) os << "FAIL #" << i << " (" << triangle_text(t.get()) << "): " << why << "\n";
          else if (flagged) os << "flagged #" << i << " (" << triangle_text(t.get()) << "): " << why << "\n";
        }
        os << passed << "/" << count << " pass";
        if (const auto f = fb_fuzz_flagged(r.get())) os << " (" << f << " flagged ill-conditioned)";
        os << "\n";
        out.text = os.str();
      }
    }
    out.flush();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return status;
}
