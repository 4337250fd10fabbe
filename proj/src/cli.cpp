#include "monodisk/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monodisk/combinatorics.hpp"
#include "monodisk/error.hpp"
#include "monodisk/render_io.hpp"

namespace monodisk::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void report(std::ostream& err, std::string_view code, const std::string& message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  err << j.dump() << '\n';
}

// Bad parameter values count as usage errors; broken inputs and failed
// checks do not.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io:
    case ErrorCode::SchemaViolation:
    case ErrorCode::VersionUnsupported:
    case ErrorCode::FitInconsistent:
    case ErrorCode::NonInteger:
    case ErrorCode::NotClosed:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

std::string rational_text(const Rational& r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

std::string read_input(const std::string& file) {
  if (file != "-") return read_text_file(file);
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

Chirality parse_chirality(const std::string& s) { return s == "B" ? Chirality::B : Chirality::A; }

std::string term_name(const TermDifference& d) {
  std::string power = d.power == 0 ? "k^0" : d.power == 1 ? "k" : "k^" + std::to_string(d.power);
  return d.divisor == 1 ? power : "[..]_{" + std::to_string(d.divisor) + "|k} " + power;
}

Json report_json(const Tiling& t, const TilingReport& r) {
  Json j;
  j["family"] = t.tag.family;
  j["valid"] = r.valid;
  j["monohedral"] = r.monohedral;
  j["tile_count"] = r.tile_count;
  j["center_touch_count"] = r.center_touch_count;
  j["boundary_touch_count"] = r.boundary_touch_count;
  j["cyclic_symmetry_order"] = r.cyclic_symmetry_order;
  j["has_mirror_symmetry"] = r.has_mirror_symmetry;
  j["samples"] = r.samples;
  j["uncovered"] = r.uncovered;
  j["multiply_covered"] = r.multiply_covered;
  j["area_error"] = r.area_error;
  j["max_congruence_residual"] = r.max_congruence_residual;
  j["failures"] = r.failures;
  return j;
}

struct Options {
  // count / members / quasipoly / build / locus
  std::string family;
  int n = 3;
  int k = 1;
  // necklace
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool brute = false;
  // members
  std::size_t limit = 0;
  // quasipoly
  std::uint64_t at_k = 0;
  bool derive = false;
  // build
  double t = 0.0;
  std::string word;
  std::string chirality = "A";
  std::string variant = "P";
  std::string out_file;
  // render / verify
  std::string file;
  std::string svg_file;
  std::string style = "stroke";
  int size = 600;
  int samples = 10000;
  std::uint64_t seed = 42;
};

int do_count(const Options& o, std::ostream& out) {
  BigCount c;
  if (o.family == "C") c = count_C(o.n, o.k);
  else if (o.family == "Ctilde") c = count_Ctilde(o.n, o.k);
  else if (o.family == "D") c = count_D(o.n, GrooveClass::Interior);
  else c = count_D(o.n, GrooveClass::Critical);
  out << c << '\n';
  return kExitOk;
}

int do_necklace(const Options& o, std::ostream& out) {
  const BigCount formula = necklace(o.a, o.b);
  if (!o.brute) {
    out << formula << '\n';
    return kExitOk;
  }
  if (o.a + o.b > 24) throw Error(ErrorCode::TooLarge, "brute force is limited to 24 beads");
  const BigCount oracle = necklace_bruteforce(static_cast<int>(o.a), static_cast<int>(o.b));
  if (formula == oracle) {
    out << formula << " (formula=oracle ✓)\n";
    return kExitOk;
  }
  out << formula << " (formula=" << formula << ", oracle=" << oracle << " ✗)\n";
  return kExitFailure;
}

int do_members(const Options& o, std::ostream& out) {
  const auto members = enumerate_members(o.n, o.k);
  std::size_t shown = 0;
  for (const auto& m : members) {
    if (o.limit && shown == o.limit) break;
    out << m.word.letters << ' ' << (m.chirality == Chirality::A ? 'A' : 'B') << '\n';
    ++shown;
  }
  return kExitOk;
}

int do_quasipoly(const Options& o, std::ostream& out) {
  if (!o.derive) {
    const auto printed = quasipoly_published(o.n);
    out << "printed: " << to_string(printed) << '\n';
    if (o.at_k) {
      out << "printed at k=" << o.at_k << ": " << rational_text(evaluate(printed, o.at_k)) << '\n';
      out << "count at k=" << o.at_k << ": " << count_C(o.n, o.at_k) << '\n';
    }
    return kExitOk;
  }
  const auto fit = derive_quasipoly(o.n);
  out << "fitted: " << to_string(fit.fitted) << '\n';
  out << "period: " << fit.period << " (one polynomial per gcd(k, " << fit.period << "), "
      << fit.points_per_class << " points each)\n";
  out << "held-out checks: " << fit.held_out_checked << " exact\n";
  if (o.at_k) {
    out << "fitted at k=" << o.at_k << ": " << rational_text(evaluate(fit.fitted, o.at_k)) << '\n';
    out << "count at k=" << o.at_k << ": " << count_C(o.n, o.at_k) << '\n';
  }
  if (!fit.has_printed) {
    out << "printed: none for n=" << o.n << '\n';
    return kExitOk;
  }
  const auto printed = quasipoly_published(o.n);
  out << "printed: " << to_string(printed) << '\n';
  if (fit.differences.empty()) {
    out << "printed vs fitted: identical\n";
  } else {
    out << "printed vs fitted: " << fit.differences.size() << " coefficient differences\n";
    for (const auto& d : fit.differences)
      out << "  " << term_name(d) << ": printed " << rational_text(d.printed) << ", fitted " << rational_text(d.fitted)
          << '\n';
  }
  if (fit.printed_mismatches.empty()) {
    out << "printed vs count: agree for k = 2.." << fit.printed_check_limit << '\n';
  } else {
    const auto k = fit.printed_mismatches.front();
    out << "printed vs count: disagree at " << fit.printed_mismatches.size() << " of k = 2.." << fit.printed_check_limit
        << " (first k=" << k << ": printed " << rational_text(evaluate(printed, k)) << ", count " << count_C(o.n, k)
        << ")\n";
  }
  return kExitOk;
}

int do_build(const Options& o, const CLI::App& cmd, std::ostream& out) {
  // Which flags each family takes; anything else is rejected up front.
  static const std::map<std::string, std::vector<std::string>> accepted = {
      {"symradial", {"--n"}},
      {"radgen", {}},
      {"D", {"--n", "--t", "--chirality"}},
      {"D31", {"--chirality"}},
      {"C", {"--n", "--k", "--t", "--word", "--chirality"}},
      {"Ctilde", {"--n", "--k", "--t", "--variant", "--chirality"}},
  };
  const auto& allowed = accepted.at(o.family);
  for (const char* flag : {"--n", "--k", "--t", "--word", "--chirality", "--variant"})
    if (cmd.count(flag) && std::find(allowed.begin(), allowed.end(), flag) == allowed.end())
      throw UsageError(std::string(flag) + " does not apply to family " + o.family);

  const Chirality chirality = parse_chirality(o.chirality);
  Tiling t;
  if (o.family == "symradial") t = build_symradial(o.n);
  else if (o.family == "radgen") t = build_radgen();
  else if (o.family == "D") t = build_D(o.n, o.t, chirality);
  else if (o.family == "D31") t = build_D31(chirality);
  else if (o.family == "C") {
    const std::string word = cmd.count("--word") ? o.word : std::string(2 * std::max(o.n, 0) * std::max(o.k, 0), 'S');
    t = build_C(o.n, o.k, o.t, {word, o.n, o.k}, chirality);
  } else {
    if (o.k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
    if (!(o.t >= 0.0 && o.t < 1.0))
      throw Error(ErrorCode::GrooveOutOfRange, "normalized groove length must lie in [0, 1)");
    t = build_Ctilde(o.n, o.k, default_ctilde_groove(o.n, o.t), o.variant == "Q" ? Pivot::AboutQ : Pivot::AboutP,
                     chirality);
  }
  if (o.out_file.empty()) out << save_tiling(t);
  else save_tiling_file(t, o.out_file);
  return kExitOk;
}

int do_render(const Options& o) {
  const Tiling t = load_tiling(read_input(o.file));
  write_text_file(o.svg_file,
                  to_svg(t, o.style == "colored" ? SvgStyle::OrientationColored : SvgStyle::StrokeOnly, o.size));
  return kExitOk;
}

int do_verify(const Options& o, bool seed_given, std::ostream& out) {
  std::uint64_t seed = o.seed;
  if (!seed_given) {
    if (const char* env = std::getenv("MONODISK_SEED")) {
      try {
        std::size_t used = 0;
        seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw UsageError(std::string("MONODISK_SEED is not an unsigned integer: ") + env);
      }
    }
  }
  const Tiling t = load_tiling(read_input(o.file));
  const auto r = validate_tiling(t, {o.samples, seed});
  out << report_json(t, r).dump(2) << '\n';
  return r.valid && r.monohedral ? kExitOk : kExitFailure;
}

int do_locus(const Options& o, std::ostream& out) {
  if (o.n < 3 || o.n % 2 == 0) throw Error(ErrorCode::InvalidN, "n must be an odd integer >= 3");
  const auto loc = critical_locus(o.n);
  Json j;
  j["n"] = o.n;
  j["ray_angle"] = loc.ray_angle;
  j["R"] = loc.R;
  j["t_max"] = loc.t_max_symmetric;
  out << j.dump() << '\n';
  if (!o.svg_file.empty()) write_text_file(o.svg_file, locus_svg(o.n));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Monohedral disk tilings: construction, counting and verification", "monodisk"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Number of members of a family");
  count->add_option("--family", o.family, "C, Ctilde, D or D31")
      ->required()
      ->check(CLI::IsMember({"C", "Ctilde", "D", "D31"}));
  count->add_option("--n", o.n, "odd n >= 3")->required();
  count->add_option("--k", o.k, "subdivision count (C, Ctilde)");

  auto* neck = app.add_subcommand("necklace", "Necklaces with a beads of one colour and b of another");
  neck->add_option("--a", o.a)->required();
  neck->add_option("--b", o.b)->required();
  neck->add_flag("--brute", o.brute, "also count by listing and compare");

  auto* members = app.add_subcommand("members", "Canonical edge words of C(n, k) with chirality");
  members->add_option("--n", o.n)->required();
  members->add_option("--k", o.k)->required();
  members->add_option("--limit", o.limit, "print at most this many lines");

  auto* quasi = app.add_subcommand("quasipoly", "Closed form of the C(n, k) count in k");
  quasi->add_option("--n", o.n)->required();
  quasi->add_option("--k", o.at_k, "evaluate at this k")->check(CLI::PositiveNumber);
  quasi->add_flag("--derive", o.derive, "fit the closed form from exact counts and compare");

  auto* build = app.add_subcommand("build", "Construct a tiling and write its document");
  build->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"symradial", "radgen", "D", "D31", "C", "Ctilde"}));
  build->add_option("--n", o.n);
  build->add_option("--k", o.k);
  build->add_option("--t", o.t, "normalized groove length in [0, 1)");
  build->add_option("--word", o.word, "edge word over L and S (C only)");
  build->add_option("--chirality", o.chirality)->check(CLI::IsMember({"A", "B"}));
  build->add_option("--variant", o.variant, "pivot vertex for Ctilde")->check(CLI::IsMember({"P", "Q"}));
  build->add_option("--out", o.out_file, "output file (default: standard output)");

  auto* render = app.add_subcommand("render", "Draw a tiling document as SVG");
  render->add_option("file", o.file, "document, or - for standard input")->required();
  render->add_option("--svg", o.svg_file)->required();
  render->add_option("--style", o.style)->check(CLI::IsMember({"stroke", "colored"}));
  render->add_option("--size", o.size, "width and height in pixels")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Validate a tiling document; exit 0 iff valid and monohedral");
  verify->add_option("file", o.file, "document, or - for standard input")->required();
  verify->add_option("--samples", o.samples)->check(CLI::NonNegativeNumber);
  auto* seed_opt = verify->add_option("--seed", o.seed, "sampling seed (default 42 or MONODISK_SEED)");

  auto* locus = app.add_subcommand("locus", "Admissible groove region for odd n");
  locus->add_option("--n", o.n)->required();
  locus->add_option("--svg", o.svg_file, "also draw it");

  std::vector<const char*> argv{"monodisk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help is raised from inside the subcommand.
    if (e.get_exit_code() == 0) {
      for (const auto* sub : app.get_subcommands())
        if (sub->parsed()) {
          out << sub->help();
          return kExitOk;
        }
      out << app.help();
      return kExitOk;
    }
    report(err, "Usage", e.what());
    return kExitUsage;
  }

  try {
    if (count->parsed()) return do_count(o, out);
    if (neck->parsed()) return do_necklace(o, out);
    if (members->parsed()) return do_members(o, out);
    if (quasi->parsed()) return do_quasipoly(o, out);
    if (build->parsed()) return do_build(o, *build, out);
    if (render->parsed()) return do_render(o);
    if (verify->parsed()) return do_verify(o, seed_opt->count() > 0, out);
    return do_locus(o, out);
  } catch (const UsageError& e) {
    report(err, "Usage", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    report(err, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report(err, "Internal", e.what());
    return kExitFailure;
  }
}

}  // namespace monodisk::cli
