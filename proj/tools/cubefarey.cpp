// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubefarey/analysis.hpp"
#include "cubefarey/contfrac.hpp"
#include "cubefarey/error.hpp"
#include "cubefarey/families.hpp"
#include "cubefarey/serialize.hpp"
#include "cubefarey/stepped.hpp"
#include "cubefarey/survey.hpp"

using namespace cubefarey;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;

struct CapExceeded {
  std::size_t cap;
};

struct GlobalOptions {
  std::string r = "5/2";
  std::size_t cap = kDefaultCap;
  std::string out;
  std::string format;
  unsigned workers = 1;
};

struct PointOptions {
  std::string family;
  std::string minpoly;
  std::string root;
  int root_index = -1;
  std::string alpha;
  std::string beta;
  std::string steps = "auto";
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

FieldElement parse_element(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw Error(Errc::InvalidInput, "expected three comma-separated rationals, got '" + text + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

PointPair make_point(const PointOptions& p) {
  if (!p.family.empty()) return family_point(p.family);
  if (p.minpoly.empty() || p.alpha.empty() || p.beta.empty())
    throw Error(Errc::InvalidInput, "give --family, or --minpoly with --root/--root-index, --alpha and --beta");
  const CubicPolynomial poly = parse_cubic(p.minpoly);
  FieldPtr field;
  if (!p.root.empty()) {
    const auto ends = split(p.root, ':');
    if (ends.size() != 2) throw Error(Errc::InvalidInput, "--root expects lo:hi");
    field = CubicField::make(poly, {parse_rational(ends[0]), parse_rational(ends[1])});
  } else if (p.root_index >= 0) {
    field = std::make_shared<const CubicField>(CubicField::with_root_index(poly, p.root_index));
  } else {
    throw Error(Errc::InvalidInput, "--minpoly needs --root lo:hi or --root-index k");
  }
  return PointPair(field, parse_element(p.alpha), parse_element(p.beta));
}

std::optional<std::size_t> parse_steps(const std::string& s) {
  if (s == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const long n = std::stol(s, &used);
    if (used == s.size() && n >= 0) return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
  }
  throw Error(Errc::InvalidInput, "--steps expects a count or 'auto', got '" + s + "'");
}

/// Digits with the first and last digit of the period marked by '*'.
std::string format_digits(const std::vector<IndexPair>& digits, std::optional<std::size_t> pre = std::nullopt) {
  std::string s;
  for (std::size_t n = 0; n < digits.size(); ++n) {
    if (n) s += ' ';
    s += digits[n].to_string();
    if (pre && (n == *pre || n + 1 == digits.size())) s += '*';
  }
  return s;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open " + path);
  out << content;
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
}

PeriodResult periodic_or_throw(const PointPair& p, const ValueExponent& r, std::size_t cap) {
  auto res = detect_period(p, r, cap);
  if (!res.found()) throw CapExceeded{cap};
  return res;
}

int cmd_expand(const GlobalOptions& g, const PointOptions& po) {
  const PointPair p = make_point(po);
  const ValueExponent r = ValueExponent::parse(g.r);
  const auto steps = parse_steps(po.steps);
  OrbitDocument doc{p.field_ptr(), r, p.alpha(), p.beta(), {}, std::nullopt};
  if (steps) {
    const auto orbit = expand(p, r, *steps, {false, true});
    doc.digits = orbit.digits;
    doc.convergents.emplace();
    for (const auto& c : orbit.convergents) doc.convergents->push_back(c.matrix());
    std::cout << format_digits(orbit.digits) << '\n';
  } else {
    const auto res = periodic_or_throw(p, r, g.cap);
    doc.digits = res.digits;
    std::cout << format_digits(res.digits, res.preperiod) << '\n'
              << "periodic: preperiod " << res.preperiod << ", period " << res.period << '\n';
  }
  if (!g.out.empty()) write_output(g.out, orbit_to_json(doc).dump(2) + "\n");
  return kExitOk;
}

int cmd_period(const GlobalOptions& g, const PointOptions& po) {
  const PointPair p = make_point(po);
  const auto res = periodic_or_throw(p, ValueExponent::parse(g.r), g.cap);
  const auto pm = period_matrix(res);
  const auto cert = is_pisot(pm.charpoly);
  std::cout << "preperiod: " << res.preperiod << "\nperiod: " << res.period << "\ndigits: "
            << format_digits(res.digits, res.preperiod) << "\nperiod matrix: " << pm.matrix.to_string()
            << "\nchar poly: " << pm.charpoly.to_string() << "\nPisot: " << (cert.pisot ? "yes" : "no")
            << "\nprimitive: " << (pm.matrix.all_nonnegative() && is_primitive(pm.matrix) ? "yes" : "no") << '\n';
  if (!g.out.empty()) write_output(g.out, period_to_json(res, pm, cert).dump(2) + "\n");
  return kExitOk;
}

int cmd_pisot(const GlobalOptions& g, const std::string& poly) {
  const CubicPolynomial c = parse_cubic(poly);
  const auto cert = is_pisot(c.as_polynomial());
  std::cout << "Pisot: " << (cert.pisot ? "yes" : "no") << "\n" << c.to_string() << ": " << cert.reason << '\n';
  if (!g.out.empty()) write_output(g.out, pisot_to_json(cert).dump(2) + "\n");
  return kExitOk;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  try {
    if (parts.size() == 2) return {std::stol(parts[0]), std::stol(parts[1])};
  } catch (const std::exception&) {
  }
  throw Error(Errc::InvalidInput, "expected lo:hi, got '" + text + "'");
}

int cmd_survey(const GlobalOptions& g, const std::string& purecubic, long family_t) {
  SurveyOptions opts;
  opts.r = ValueExponent::parse(g.r);
  opts.cap = g.cap;
  opts.workers = std::max(1u, g.workers);
  std::vector<SurveyItem> items;
  std::string name;
  if (!purecubic.empty()) {
    const auto [lo, hi] = parse_range(purecubic);
    if (lo < 2 || hi < lo) throw Error(Errc::InvalidInput, "--purecubic needs 2 <= lo <= hi");
    items = pure_cubic_items(lo, hi);
    name = "purecubic_" + std::to_string(lo) + "_" + std::to_string(hi);
  } else if (family_t > 0) {
    items = polynomial_family_items(family_t);
    name = "family_t" + std::to_string(family_t);
  } else {
    throw Error(Errc::InvalidInput, "give --purecubic lo:hi or --family-t t");
  }
  name += "_r" + std::to_string(opts.r.p()) + "-" + std::to_string(opts.r.q()) + ".csv";

  const bool json = g.format == "json";
  if (!json && !g.out.empty()) {
    opts.csv = g.out;
  } else if (const char* cache = std::getenv("CUBEFAREY_CACHE_DIR"); cache && *cache) {
    fs::create_directories(cache);
    opts.csv = fs::path(cache) / name;
  }
  const auto rows = run_survey(items, opts);
  if (json && !g.out.empty()) {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(survey_row_to_json(row));
    write_output(g.out, arr.dump(2) + "\n");
  }
  std::size_t capped = 0;
  for (const auto& row : rows) capped += row.status == "cap" ? 1 : 0;
  if (!purecubic.empty()) {
    const auto s = summarize_pure_cubics(rows);
    std::cout << "rows: " << s.count << ", periodic: " << s.periodic << '\n' << s.to_string() << '\n';
  } else {
    std::cout << summarize_family(rows).to_string() << '\n';
  }
  if (opts.csv) std::cout << "csv: " << opts.csv->string() << '\n';
  return capped ? kExitCap : kExitOk;
}

int cmd_stepped(const GlobalOptions& g, const PointOptions& po, const std::string& seed, const std::string& colors,
                bool origin_marker) {
  const PointPair p = make_point(po);
  const ValueExponent r = ValueExponent::parse(g.r);
  std::vector<IndexPair> digits;
  if (const auto steps = parse_steps(po.steps)) {
    digits = expand(p, r, *steps, {false, false}).digits;
  } else {
    const auto res = periodic_or_throw(p, r, g.cap);
    if (res.preperiod != 0) throw Error(Errc::InvalidInput, "--steps auto needs a purely periodic point");
    digits = res.digits;
  }
  Seed s;
  if (seed == "U") {
    s = Seed::U;
  } else if (seed == "U'") {
    s = Seed::UPrime;
  } else {
    throw Error(Errc::InvalidInput, "--seed expects U or U'");
  }
  ExportOptions opts;
  opts.origin_marker = origin_marker;
  if (!colors.empty()) {
    const auto parts = split(colors, ',');
    if (parts.size() != 3) throw Error(Errc::InvalidInput, "--colors expects three comma-separated colors");
    opts.colors = {parts[0], parts[1], parts[2]};
  }
  const Direction dir = Direction::of(p);
  const Patch patch = grow_patch(digits, s, s == Seed::U ? &dir : nullptr);
  const std::string format = g.format.empty() ? "json" : g.format;
  const std::string doc = export_patch(patch, &dir, format, opts);
  if (g.out.empty()) {
    std::cout << doc;
  } else {
    write_output(g.out, doc);
    std::cout << "faces: " << patch.size() << " (oracle " << face_count_oracle(digits).get_str() << ")\n";
  }
  return kExitOk;
}

int cmd_cf(const GlobalOptions& g, const PointOptions& po, bool reduce) {
  const PointPair p = make_point(po);
  const ValueExponent r = ValueExponent::parse(g.r);
  CFWord word;
  if (const auto steps = parse_steps(po.steps)) {
    word = digits_to_cfword(expand(p, r, *steps, {false, false}).digits);
  } else {
    const auto res = periodic_or_throw(p, r, g.cap);
    word = digits_to_cfword(res.digits, res.preperiod);
  }
  if (reduce) word = reduce_cfword(word);
  std::cout << word.to_string() << '\n';
  return kExitOk;
}

int cmd_selftest() {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    failures += ok ? 0 : 1;
  };
  bool identities = true;
  for (const auto& c : verify_decompositions()) identities = identities && c.pass;
  report("matrix identities", identities);
  const ValueExponent r;
  bool p2 = true;
  for (long m = 1; m <= 4; ++m) {
    const auto res = detect_period(p2_point(m), r, 1000);
    p2 = p2 && res.found() && res.preperiod == 0 && res.period == static_cast<std::size_t>(3 * m);
    p2 = p2 && reduce_cfword(digits_to_cfword(res.digits, 0)).to_string() == "0/0 | 0/0 " + std::to_string(m) + "/0";
  }
  report("P2 family periods and reduced words", p2);
  const PointPair ex1(CubicField::make({Rational(-2), 0, 0}, {1, 2}),
                      FieldElement(Rational(2, 3), Rational(-2, 3), Rational(1, 6)),
                      FieldElement(Rational(2, 3), Rational(1, 3), Rational(-1, 3)));
  const auto res = detect_period(ex1, r, 1000);
  bool ex = res.found() && res.period == 12;
  if (ex) {
    const auto pm = period_matrix(res);
    ex = pm.charpoly == Polynomial({Rational(-1), 3, -57, 1}) && is_pisot(pm.charpoly).pisot;
    const Direction dir = Direction::of(ex1);
    report("stepped surface face count", Integer(grow_patch(res.digits, Seed::U, &dir).size()) ==
                                             face_count_oracle(res.digits));
  }
  report("cube root of 2 example period and Pisot", ex);
  report("non-Pisot control", !is_pisot(Polynomial({Rational(-1), 7, -6, 1})).pisot);
  return failures ? kExitFailure : kExitOk;
}

void add_point_options(CLI::App* cmd, PointOptions& po, bool with_steps) {
  cmd->add_option("--family", po.family, "purecubic:m, p2:m or nt-basis:c0,c1,c2");
  cmd->add_option("--minpoly", po.minpoly, "c0,c1,c2 for x^3 + c2 x^2 + c1 x + c0");
  cmd->add_option("--root", po.root, "isolating interval lo:hi of the embedding");
  cmd->add_option("--root-index", po.root_index, "k-th real root, ascending from 0");
  cmd->add_option("--alpha", po.alpha, "a0,a1,a2 in the power basis");
  cmd->add_option("--beta", po.beta, "b0,b1,b2 in the power basis");
  if (with_steps) cmd->add_option("--steps", po.steps, "number of steps or 'auto' (until periodic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-dimensional Farey expansions over real cubic fields"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--r", g.r, "value exponent p/q")->capture_default_str();
  app.add_option("--cap", g.cap, "iteration cap for period detection")->capture_default_str();
  app.add_option("--out", g.out, "output path");
  app.add_option("--format", g.format, "json, csv, svg or obj")
      ->check(CLI::IsMember({"json", "csv", "svg", "obj"}));
  app.add_option("--workers", g.workers, "survey worker threads")->capture_default_str();

  PointOptions po;
  auto* expand_cmd = app.add_subcommand("expand", "expand a point, printing its digits");
  add_point_options(expand_cmd, po, true);
  auto* period_cmd = app.add_subcommand("period", "period, period matrix and Pisot verdict");
  add_point_options(period_cmd, po, false);
  std::string poly;
  auto* pisot_cmd = app.add_subcommand("pisot", "decide whether a monic cubic's dominant root is Pisot");
  pisot_cmd->add_option("--poly", poly, "c0,c1,c2 for x^3 + c2 x^2 + c1 x + c0")->required();
  std::string purecubic;
  long family_t = 0;
  auto* survey_cmd = app.add_subcommand("survey", "periodicity survey over a family");
  survey_cmd->add_option("--purecubic", purecubic, "range lo:hi of m for Q(cbrt m)");
  survey_cmd->add_option("--family-t", family_t, "coefficient bound t for x^3 + a2 x^2 + a1 x + a0");
  std::string seed = "U", colors;
  bool origin_marker = false;
  auto* stepped_cmd = app.add_subcommand("stepped", "grow a stepped-surface patch and export it");
  add_point_options(stepped_cmd, po, true);
  stepped_cmd->add_option("--seed", seed, "U or U'")->capture_default_str();
  stepped_cmd->add_option("--colors", colors, "three comma-separated SVG colors for kinds 0, 1, 2");
  stepped_cmd->add_flag("--origin-marker", origin_marker, "mark the origin in SVG output");
  bool reduce = false;
  auto* cf_cmd = app.add_subcommand("cf", "continued-fraction word of the expansion");
  add_point_options(cf_cmd, po, true);
  cf_cmd->add_flag("--reduce", reduce, "apply the zero-pair reduction");
  auto* selftest_cmd = app.add_subcommand("selftest", "quick internal consistency checks");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*expand_cmd) return cmd_expand(g, po);
    if (*period_cmd) return cmd_period(g, po);
    if (*pisot_cmd) return cmd_pisot(g, poly);
    if (*survey_cmd) return cmd_survey(g, purecubic, family_t);
    if (*stepped_cmd) return cmd_stepped(g, po, seed, colors, origin_marker);
    if (*cf_cmd) return cmd_cf(g, po, reduce);
    if (*selftest_cmd) return cmd_selftest();
  } catch (const CapExceeded& e) {
    std::cerr << "no period within " << e.cap << " steps\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::InvalidInput:
      case Errc::Reducible:
      case Errc::NotIsolating:
      case Errc::NotInDomain:
        return kExitInvalid;
      default:
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInvalid;
}
