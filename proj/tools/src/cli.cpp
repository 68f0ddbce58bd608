#include "eah_cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "eah/error.hpp"
#include "eah/search.hpp"
#include "report.hpp"

namespace eah::cli {

namespace {

const char* kFooter =
    "Normalization: heights here are one-half of the value returned by ellheight in PARI/GP;\n"
    "halve PARI values before comparing.\n"
    "Exit codes: 0 ok, 1 other error, 2 usage/parse error or depth cap, 3 not minimal (--strict-minimal),\n"
    "4 point not on curve, 5 bound failed, 6 inconclusive, 7 row validation failed, 8 no rational half,\n"
    "9 oracle disagreement.";

struct Config {
  unsigned terms = 40;
  Precision precision = Precision::Standard;
  unsigned oracle_depth = kDefaultOracleDepth;
  unsigned oracle_max_depth = kMaxOracleDepth;
  unsigned workers = 0;
  unsigned search_bound = 60;

  ArchOptions arch() const { return {terms, precision}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Config load_config(const std::string& path) {
  Config cfg;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config " + path + " must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    auto uint = [&](unsigned& slot) {
      if (!value.is_number_unsigned()) throw UsageError("config key '" + key + "' must be a nonnegative integer");
      slot = value.get<unsigned>();
    };
    if (key == "terms") {
      uint(cfg.terms);
    } else if (key == "oracle_depth") {
      uint(cfg.oracle_depth);
    } else if (key == "oracle_max_depth") {
      uint(cfg.oracle_max_depth);
    } else if (key == "workers") {
      uint(cfg.workers);
    } else if (key == "search_bound") {
      uint(cfg.search_bound);
    } else if (key == "precision") {
      const std::string p = value.is_string() ? value.get<std::string>() : "";
      if (p == "standard") {
        cfg.precision = Precision::Standard;
      } else if (p == "extended") {
        cfg.precision = Precision::Extended;
      } else {
        throw UsageError("config key 'precision' must be \"standard\" or \"extended\"");
      }
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  if (cfg.terms == 0) throw UsageError("config key 'terms' must be positive");
  if (cfg.oracle_max_depth > kMaxOracleDepth) {
    throw UsageError("oracle_max_depth cannot exceed " + std::to_string(kMaxOracleDepth));
  }
  return cfg;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::DepthExceeded:
    case Errc::ZeroInput:
    case Errc::NotPrime:
    case Errc::NotOddPrime:
    case Errc::TorsionPoint:
    case Errc::InfinityPoint:
    case Errc::ZeroX:
      return kUsage;
    case Errc::NotMinimal: return kNotMinimal;
    case Errc::NotOnCurve: return kNotOnCurve;
    case Errc::RowValidationFailed: return kRowValidation;
    case Errc::NoRationalHalf: return kNoRationalHalf;
    default: return kError;
  }
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kOk;
    case Verdict::Fail: return kBoundFailed;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kError;
}

struct Common {
  bool json = false;
  bool strict_minimal = false;
};

struct PointArgs {
  std::string a, x, y;
};

Integer nonzero_a(const std::string& text) {
  Integer a = parse_integer(text);
  if (a == 0) throw Error(Errc::ZeroInput, "a must be nonzero");
  return a;
}

/// Parses the curve; with strict checking a non-minimal a is an error.
Curve curve_from(const std::string& text, bool strict) {
  Curve curve(nonzero_a(text));
  if (strict && !curve.is_minimal()) {
    throw Error(Errc::NotMinimal, "a = " + curve.a().get_str() + " is not fourth-power-free");
  }
  return curve;
}

Point point_from(const Curve& curve, const PointArgs& args) {
  Point p = Point::affine(parse_rational(args.x), parse_rational(args.y));
  if (!on_curve(curve, p)) {
    throw Error(Errc::NotOnCurve, "(" + args.x + ", " + args.y + ") is not on y^2 = x^3 + " + curve.a().get_str() + " x");
  }
  return p;
}

Json header(const std::string& command, Json args) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"args", std::move(args)}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_height_text(std::ostream& out, const HeightBreakdown& h) {
  out << "naive height      " << fmt(h.naive) << "\n";
  out << "canonical height  " << fmt(h.canonical) << (h.torsion ? "  (torsion)" : "") << "\n";
  out << "difference        " << fmt(h.difference) << "   (h/2 - canonical)\n";
  out << "error bound       " << fmt(h.error_bound) << "\n";
  if (h.scale != 1) out << "minimal model     a = " << to_string(h.minimal_a) << ", scale " << to_string(h.scale) << "\n";
  if (h.torsion) return;
  out << "lambda_inf        " << fmt(h.archimedean.value) << "   (" << h.archimedean.terms_used
      << " terms, tail <= " << fmt(h.archimedean.tail_bound) << ")\n";
  for (const auto& t : h.nonarch_terms) {
    out << "lambda_" << to_string(t.prime) << std::string(t.prime.get_str().size() < 10 ? 10 - t.prime.get_str().size() : 1, ' ')
        << to_string(t.coefficient) << " log " << to_string(t.prime) << " = " << fmt(t.value());
    if (t.correction_tag != SingularCase::Otherwise) out << "   [" << to_string(t.correction_tag) << "]";
    out << "\n";
  }
}

void print_checks_text(std::ostream& out, const Certificate& c) {
  for (const auto& check : c.checks) {
    out << to_string(check.verdict) << "  " << to_string(check.theorem) << ": bound " << fmt(check.bound)
        << ", actual " << fmt(check.actual) << ", margin " << fmt(check.margin) << " (+- "
        << fmt(check.error_bound) << ")\n";
  }
  if (c.extended_rerun) out << "note: re-run at extended precision\n";
  for (const auto& n : c.notes) out << "note: " << n << "\n";
}

void add_point_options(CLI::App* sub, PointArgs& p) {
  sub->add_option("--a", p.a, "curve parameter (nonzero integer)")->required();
  sub->add_option("--x", p.x, "x(P) as p/q or integer")->required();
  sub->add_option("--y", p.y, "y(P) as p/q or integer")->required();
}

using Clock = std::chrono::steady_clock;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical heights on y^2 = x^3 + a x: local decomposition, bound certificates, extremal families",
               "eah"};
  app.footer(kFooter);
  app.require_subcommand(1);
  std::string config_path;
  bool timing = false;
  app.add_option("--config", config_path, "JSON file with defaults: terms, precision, oracle_depth, "
                                          "oracle_max_depth, workers, search_bound");
  app.add_flag("--timing", timing, "report elapsed time (omitted by default to keep output byte-stable)");

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "machine-readable output");
    sub->add_flag("--strict-minimal", common.strict_minimal, "reject a that is not fourth-power-free (exit 3)");
  };

  std::string classify_a, classify_prime;
  auto* classify = app.add_subcommand("classify", "reduction type at each prime dividing 2a");
  classify->add_option("--a", classify_a, "curve parameter")->required();
  classify->add_option("--prime", classify_prime, "restrict to one prime");
  add_common(classify);

  PointArgs height_args;
  std::optional<unsigned> terms;
  bool extended = false;
  auto* height = app.add_subcommand("height", "naive and canonical height with the per-place breakdown");
  add_point_options(height, height_args);
  height->add_option("--terms", terms, "Tate series terms (default 40)");
  height->add_flag("--extended", extended, "evaluate at extended precision");
  add_common(height);

  PointArgs verify_args;
  auto* verify = app.add_subcommand("verify", "certify a point against the height bounds (exit 0 iff all pass)");
  add_point_options(verify, verify_args);
  add_common(verify);

  std::string amin, amax, out_path, format;
  std::optional<unsigned> search_bound, workers;
  auto* sweep_cmd = app.add_subcommand("sweep", "search and certify points on every minimal a in a range");
  sweep_cmd->add_option("--amin", amin, "lower end of the a range")->required();
  sweep_cmd->add_option("--amax", amax, "upper end of the a range")->required();
  sweep_cmd->add_option("--search-bound", search_bound, "bound on M and e in x = b1 M^2 / e^2 (default 60)");
  sweep_cmd->add_option("--out", out_path, "write rows to this file (CSV, or JSON for *.json)");
  sweep_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--workers", workers, "worker threads (default: hardware concurrency)");

  std::string family, param;
  bool certify = false;
  auto* extremal = app.add_subcommand(
      "extremal", "generate a member of a family approaching a bound\nfamilies: lang-pos-<1..15>, lang-pos-1r, "
                  "lang-pos-11r, lang-neg-<1..15>, lang-neg-4r,\n          diff-lower-pos, diff-lower-neg, diff-upper");
  extremal->add_option("--family", family, "family name")->required();
  extremal->add_option("--param", param, "a1 (positive) or recurrence index n (nonnegative)")->required();
  extremal->add_flag("--certify", certify, "certify the point and report the margin to the bound");
  add_common(extremal);

  PointArgs oracle_args;
  std::optional<unsigned> depth;
  std::optional<double> tol;
  auto* oracle = app.add_subcommand("oracle", "compare the decomposition with the limit definition");
  add_point_options(oracle, oracle_args);
  oracle->add_option("--depth", depth, "number of doublings (default 6, cap 10)");
  oracle->add_option("--tol", tol, "tolerance (default: certified radius at this depth plus error bound)");
  add_common(oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = Clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };
  auto finish = [&](Json j) {
    if (timing) j["timing_ms"] = real(elapsed_ms());
    emit(out, j);
  };
  auto finish_text = [&] {
    if (timing) out << "time " << fmt(elapsed_ms()) << " ms\n";
  };

  try {
    const Config cfg = config_path.empty() ? Config{} : load_config(config_path);

    if (*classify) {
      Curve curve = curve_from(classify_a, common.strict_minimal);
      if (!curve.is_minimal()) {
        const MinimalModel m = minimal_model(curve);
        err << "warning: a = " << to_string(curve.a()) << " is not fourth-power-free; classifying a = "
            << to_string(m.curve.a()) << "\n";
        curve = m.curve;
      }
      std::vector<ReductionData> rows;
      if (classify_prime.empty()) {
        rows = classify_bad_primes(curve);
      } else {
        rows.push_back(classify_reduction(curve, parse_integer(classify_prime)));
      }
      if (common.json) {
        Json list = Json::array();
        for (const auto& r : rows) list.push_back(to_json(r));
        Json j = header("classify", Json{{"a", classify_a}, {"prime", classify_prime}});
        j["a"] = to_string(curve.a());
        j["rows"] = std::move(list);
        finish(std::move(j));
      } else {
        out << "a = " << to_string(curve.a()) << "\n";
        for (const auto& r : rows) {
          out << "p=" << to_string(r.prime) << "  " << r.kodaira.symbol() << "  c=" << r.tamagawa
              << "  ord(Delta)=" << r.ord_delta << "  " << r.tate_trace << "\n";
        }
        finish_text();
      }
      return kOk;
    }

    if (*height) {
      const Curve curve = curve_from(height_args.a, common.strict_minimal);
      const Point p = point_from(curve, height_args);
      ArchOptions opts = cfg.arch();
      if (terms) opts.terms = *terms;
      if (extended) opts.precision = Precision::Extended;
      const HeightBreakdown h = canonical_height(curve, p, opts);
      if (common.json) {
        Json j = header("height", Json{{"a", height_args.a}, {"x", height_args.x}, {"y", height_args.y}});
        j["a"] = to_string(curve.a());
        j["point"] = to_json(p);
        j["height"] = to_json(h);
        finish(std::move(j));
      } else {
        print_height_text(out, h);
        finish_text();
      }
      return kOk;
    }

    if (*verify) {
      const Curve curve = curve_from(verify_args.a, common.strict_minimal);
      const Point p = point_from(curve, verify_args);
      const Certificate c = certify_point(curve, p, cfg.arch());
      if (common.json) {
        Json j = header("verify", Json{{"a", verify_args.a}, {"x", verify_args.x}, {"y", verify_args.y}});
        j["a"] = to_string(curve.a());
        j["point"] = to_json(p);
        j["height"] = to_json(c.height);
        j["certificate"] = to_json(c);
        finish(std::move(j));
      } else {
        print_checks_text(out, c);
        out << "verdict: " << to_string(c.overall()) << "\n";
        finish_text();
      }
      return verdict_code(c.overall());
    }

    if (*sweep_cmd) {
      SweepOptions opts;
      opts.amin = parse_integer(amin);
      opts.amax = parse_integer(amax);
      if (opts.amin > opts.amax) throw UsageError("--amin must not exceed --amax");
      opts.search_bound = search_bound.value_or(cfg.search_bound);
      opts.workers = workers.value_or(cfg.workers);
      opts.arch = cfg.arch();
      const SweepReport report = sweep(opts);
      std::string fmt_name = format;
      if (fmt_name.empty()) {
        fmt_name = out_path.size() >= 5 && out_path.ends_with(".json") ? "json" : "csv";
      }
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw UsageError("cannot write " + out_path);
      }
      std::ostream& sink = out_path.empty() ? out : file;
      if (fmt_name == "json") {
        Json j = header("sweep", Json{{"amin", amin}, {"amax", amax}, {"search_bound", opts.search_bound}});
        j.update(sweep_json(report));
        if (timing) j["timing_ms"] = real(elapsed_ms());
        emit(sink, j);
        if (!out_path.empty()) write_summary_text(out, report);
      } else {
        write_csv(sink, report);
        write_summary_text(out_path.empty() ? err : out, report);
        if (timing) (out_path.empty() ? err : out) << "time " << fmt(elapsed_ms()) << " ms\n";
      }
      const bool failed = report.failures != 0 || report.sum_formula_mismatches != 0 ||
                          report.b2_violations != 0 || report.square_violations != 0 ||
                          report.hypothesis_mismatches != 0;
      if (failed) return kBoundFailed;
      return report.inconclusive != 0 ? kInconclusive : kOk;
    }

    if (*extremal) {
      const ExtremalCandidate c = make_family(family, parse_integer(param));
      std::optional<ExtremalCertification> cert;
      if (certify) cert = certify_candidate(c, cfg.arch());
      if (common.json) {
        Json j = header("extremal", Json{{"family", family}, {"param", param}, {"certify", certify}});
        j["candidate"] = to_json(c);
        if (cert) {
          j["focus"] = to_json(cert->focus);
          if (cert->constant) j["constant"] = real(*cert->constant);
          if (cert->family_margin) j["family_margin"] = real(*cert->family_margin);
          j["height"] = to_json(cert->certificate.height);
          j["certificate"] = to_json(cert->certificate);
        }
        finish(std::move(j));
      } else {
        out << "family " << c.family << ", parameter " << to_string(c.parameter);
        if (c.index) out << " (index " << *c.index << ")";
        out << "\na = " << to_string(c.curve.a()) << "\nP = (" << to_string(c.point.x()) << ", "
            << to_string(c.point.y()) << ")\n";
        if (c.target_x2p) out << "x(2P) = " << to_string(*c.target_x2p) << "\n";
        out << "validated: " << (c.validated ? "yes" : "no") << "\n";
        if (!c.note.empty()) out << "note: " << c.note << "\n";
        if (cert) {
          out << "canonical height " << fmt(cert->certificate.height.canonical) << "\n";
          out << to_string(cert->focus.theorem) << " margin " << fmt(cert->focus.margin) << " ("
              << to_string(cert->focus.verdict) << ")\n";
          if (cert->constant) out << "constant " << fmt(*cert->constant) << "\n";
          if (cert->family_margin) out << "family margin " << fmt(*cert->family_margin) << "\n";
        }
        finish_text();
      }
      return cert ? verdict_code(cert->certificate.overall()) : kOk;
    }

    if (*oracle) {
      const unsigned d = depth.value_or(cfg.oracle_depth);
      if (d > cfg.oracle_max_depth) {
        throw Error(Errc::DepthExceeded, "depth " + std::to_string(d) + " exceeds the cap of " +
                                             std::to_string(cfg.oracle_max_depth));
      }
      const Curve curve = curve_from(oracle_args.a, common.strict_minimal);
      const Point p = point_from(curve, oracle_args);
      const HeightBreakdown h = canonical_height(curve, p, cfg.arch());
      const double limit = limit_oracle(curve, p, d, cfg.oracle_max_depth);
      const double diff = std::abs(h.canonical - limit);
      const double tolerance = tol.value_or(oracle_radius(curve.a(), d) + h.error_bound + 1e-12);
      const bool agree = diff <= tolerance;
      if (common.json) {
        Json j = header("oracle", Json{{"a", oracle_args.a}, {"x", oracle_args.x}, {"y", oracle_args.y}, {"depth", d}});
        j["canonical"] = real(h.canonical);
        j["limit"] = real(limit);
        j["difference"] = real(diff);
        j["tolerance"] = real(tolerance);
        j["agree"] = agree;
        finish(std::move(j));
      } else {
        out << "decomposition  " << fmt(h.canonical) << "\nlimit (depth " << d << ")  " << fmt(limit)
            << "\ndifference     " << fmt(diff) << "\ntolerance      " << fmt(tolerance) << "\n"
            << (agree ? "agree" : "DISAGREE") << "\n";
        finish_text();
      }
      return agree ? kOk : kOracleMismatch;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}

}  // namespace eah::cli
