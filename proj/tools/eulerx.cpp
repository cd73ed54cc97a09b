// eulerx: command-line front end for the identity suite, binomial transforms,
// harmonic power-sum closed forms, series dumps and the ln 2 acceleration demo.
//
// Exit codes: 0 success, 1 mathematical failure (identity violated or pole),
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eulerx/eulerx.hpp"

namespace {

using eulerx::Json;
using eulerx::Rat;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, plain };

struct Output {
  Format format = Format::json;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open output file " + path);
    f << text;
  }
};

Rat parse_rat_flag(const std::string& flag, const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const eulerx::ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

long parse_int_flag(const std::string& flag, const std::string& text, long min_value) {
  Rat r = parse_rat_flag(flag, text);
  if (!r.is_integer() || !r.num().fits_slong_p())
    throw UsageError(flag + ": expected an integer, got " + text);
  long v = r.num().get_si();
  if (v < min_value) throw UsageError(flag + ": must be >= " + std::to_string(min_value));
  return v;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_text(const eulerx::ParamList& params) {
  std::string s;
  for (const auto& [k, v] : params) s += (s.empty() ? "" : ";") + k + "=" + eulerx::param_text(v);
  return s;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string id;
  bool all = false;
  std::string n_max = "16";
  std::string order = "16";
  std::vector<std::string> alpha;
  std::vector<std::string> p;
  std::string fuzz = "0";
  std::string seed = "20091215";
  bool serial = false;
};

std::string render_reports(const std::vector<eulerx::IdentityReport>& reports, bool single, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json j = single ? eulerx::to_json(reports.front()) : eulerx::to_json(reports);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "identity,anchor,params,status,witness_kind,witness_index,witness_lhs,witness_rhs\n";
      for (const auto& r : reports)
        for (const auto& c : r.cases) {
          os << csv_escape(r.identity) << "," << csv_escape(r.anchor) << "," << csv_escape(params_text(c.params))
             << "," << eulerx::to_string(c.status) << ",";
          if (c.witness)
            os << c.witness->kind << "," << c.witness->index << "," << c.witness->lhs << "," << c.witness->rhs;
          else
            os << ",,,";
          os << "\n";
        }
      break;
    case Format::plain:
      for (const auto& r : reports) {
        auto s = r.summary();
        os << r.identity << " [" << r.anchor << "]: " << (r.ok() ? "verified" : "FAILED") << " (" << s.verified
           << " verified, " << s.failed << " failed, " << s.skipped << " skipped)\n";
        for (const auto& c : r.cases) {
          if (c.status == eulerx::CaseStatus::failed)
            os << "  failed {" << params_text(c.params) << "}: " << c.witness->kind << " " << c.witness->index
               << ": lhs " << c.witness->lhs << " != rhs " << c.witness->rhs << "\n";
          else if (c.status == eulerx::CaseStatus::skipped_pole)
            os << "  skipped {" << params_text(c.params) << "}: " << c.note << "\n";
        }
      }
      os << (eulerx::all_verified(reports) ? "ALL VERIFIED\n" : "FAILURES PRESENT\n");
      break;
  }
  return os.str();
}

int cmd_verify(const VerifyArgs& args, const Output& out) {
  if (args.all == !args.id.empty()) throw UsageError("verify: give exactly one of --id or --all");
  eulerx::Bounds bounds;
  bounds.n_max = parse_int_flag("--n-max", args.n_max, 0);
  bounds.order = parse_int_flag("--order", args.order, 0);
  bounds.fuzz = static_cast<std::size_t>(parse_int_flag("--fuzz", args.fuzz, 0));
  bounds.seed = static_cast<std::uint64_t>(parse_int_flag("--seed", args.seed, 0));
  bounds.parallel = !args.serial;
  if (!args.alpha.empty()) {
    bounds.alpha_grid.clear();
    for (const auto& a : args.alpha) bounds.alpha_grid.push_back(parse_rat_flag("--alpha", a));
  }
  if (!args.p.empty()) {
    bounds.p_grid.clear();
    for (const auto& a : args.p) bounds.p_grid.push_back(parse_rat_flag("--p", a));
  }

  std::vector<eulerx::IdentityReport> reports;
  if (args.all) {
    reports = eulerx::verify_all(bounds);
  } else {
    try {
      reports.push_back(eulerx::verify(args.id, bounds));
    } catch (const eulerx::UnknownIdentityError& e) {
      throw UsageError(e.what());
    }
  }
  out.write(render_reports(reports, !args.all, out.format));
  if (!eulerx::all_verified(reports)) {
    for (const auto& r : reports)
      for (const auto& c : r.cases)
        if (c.witness)
          std::cerr << "identity " << r.identity << " violated at {" << params_text(c.params) << "}: " << c.witness->kind
                    << " " << c.witness->index << ": lhs " << c.witness->lhs << " != rhs " << c.witness->rhs << "\n";
    return kMathFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// transform

std::string render_sequence(const std::vector<Rat>& values, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: os << eulerx::to_json(values).dump() << "\n"; break;
    case Format::csv:
      os << "n,value\n";
      for (std::size_t n = 0; n < values.size(); ++n) os << n << "," << values[n] << "\n";
      break;
    case Format::plain:
      for (const auto& v : values) os << v << "\n";
      break;
  }
  return os.str();
}

int cmd_transform(const std::string& input, bool inverse, const Output& out) {
  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot open input file " + input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  std::vector<Rat> a;
  try {
    a = eulerx::rats_from_json(Json::parse(text));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("transform: input is not valid JSON: ") + e.what());
  } catch (const eulerx::ParseError& e) {
    throw UsageError(std::string("transform: malformed rational at ") + e.what());
  }
  out.write(render_sequence(inverse ? eulerx::inverse_binomial_transform(a) : eulerx::binomial_transform(a),
                            out.format));
  return kOk;
}

// ---------------------------------------------------------------------------
// hsum

int cmd_hsum(const std::string& m_text, const std::string& p_text, const std::string& order_text,
             const Output& out) {
  long m = parse_int_flag("--m", m_text, 0);
  Rat p = parse_rat_flag("--p", p_text);
  long order = parse_int_flag("--order", order_text, 0);
  eulerx::SeriesSides sides;
  try {
    sides = eulerx::hsum_closed_form_sides(m, p, static_cast<std::size_t>(order));
  } catch (const eulerx::PoleError& e) {
    std::cerr << "hsum: " << e.what() << "\n";
    return kMathFailure;
  }
  bool all_equal = sides.equal();
  std::ostringstream os;
  switch (out.format) {
    case Format::json: {
      Json rows = Json::array();
      for (long n = 0; n <= order; ++n) {
        auto k = static_cast<std::size_t>(n);
        rows.push_back(Json{{"n", n},
                            {"lhs", sides.lhs[k].to_string()},
                            {"rhs", sides.rhs[k].to_string()},
                            {"equal", sides.lhs[k] == sides.rhs[k]}});
      }
      Json j{{"m", m}, {"p", p.to_string()}, {"order", order}, {"rows", rows}, {"equal", all_equal}};
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "n,lhs,rhs,equal\n";
      for (long n = 0; n <= order; ++n) {
        auto k = static_cast<std::size_t>(n);
        os << n << "," << sides.lhs[k] << "," << sides.rhs[k] << "," << (sides.lhs[k] == sides.rhs[k]) << "\n";
      }
      break;
    case Format::plain:
      for (long n = 0; n <= order; ++n) {
        auto k = static_cast<std::size_t>(n);
        os << n << "\t" << sides.lhs[k] << "\t" << sides.rhs[k] << "\t"
           << (sides.lhs[k] == sides.rhs[k] ? "=" : "MISMATCH") << "\n";
      }
      break;
  }
  out.write(os.str());
  return all_equal ? kOk : kMathFailure;
}

// ---------------------------------------------------------------------------
// accelerate

int cmd_accelerate(const std::string& terms_text, const Output& out) {
  long terms = parse_int_flag("--terms", terms_text, 1);
  const Rat ln2 = eulerx::ln2_reference();
  auto rows = eulerx::accelerate_alternating(terms);
  std::ostringstream os;
  auto err = [&](const Rat& partial) { return eulerx::to_decimal((partial - ln2).abs(), 30); };
  switch (out.format) {
    case Format::json: {
      Json jr = Json::array();
      for (const auto& r : rows)
        jr.push_back(Json{{"n", r.n},
                          {"raw", r.raw.to_string()},
                          {"transformed", r.transformed.to_string()},
                          {"raw_abs_error", err(r.raw)},
                          {"transformed_abs_error", err(r.transformed)}});
      os << Json{{"ln2_reference", eulerx::kLn2Digits}, {"rows", jr}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "n,raw,transformed,raw_abs_error,transformed_abs_error\n";
      for (const auto& r : rows)
        os << r.n << "," << r.raw << "," << r.transformed << "," << err(r.raw) << "," << err(r.transformed) << "\n";
      break;
    case Format::plain:
      os << "n\traw |error|\ttransformed |error|\ttransformed partial\n";
      for (const auto& r : rows)
        os << r.n << "\t" << err(r.raw) << "\t" << err(r.transformed) << "\t" << r.transformed << "\n";
      break;
  }
  out.write(os.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// series

const char* kSeriesNames =
    "log1p (log(1+z)), neglog1m (-log(1-z)), exp (e^z), geometric (1/(1-z)), binom ((1+z)^alpha, --alpha), "
    "hgen (-log(1-t)/(1-t)), loggen (-log(1-t)/(1-t)^(p+1), --p)";

int cmd_series(const std::string& name, const std::string& order_text, const std::string& p_text,
               const std::string& alpha_text, const Output& out) {
  auto order = static_cast<std::size_t>(parse_int_flag("--order", order_text, 0));
  auto neg_log1m = [&] {
    return eulerx::series_scale(Rat(-1), eulerx::series_scale_argument(eulerx::series_log1p(order), Rat(-1)));
  };
  auto one_minus_pow = [&](const Rat& e) {  // (1-z)^e
    return eulerx::series_scale_argument(eulerx::series_binom_pow(e, order), Rat(-1));
  };
  eulerx::Series s;
  try {
    if (name == "log1p") {
      s = eulerx::series_log1p(order);
    } else if (name == "neglog1m") {
      s = neg_log1m();
    } else if (name == "exp") {
      s = eulerx::series_exp(order);
    } else if (name == "geometric") {
      s = eulerx::series_geometric(order);
    } else if (name == "binom") {
      s = eulerx::series_binom_pow(parse_rat_flag("--alpha", alpha_text), order);
    } else if (name == "hgen") {
      s = neg_log1m() * eulerx::series_geometric(order);
    } else if (name == "loggen") {
      Rat p = parse_rat_flag("--p", p_text);
      s = neg_log1m() * one_minus_pow(-(p + Rat(1)));
    } else {
      throw UsageError("series: unknown series \"" + name + "\"; known: " + kSeriesNames);
    }
  } catch (const eulerx::PoleError& e) {
    std::cerr << "series: " << e.what() << "\n";
    return kMathFailure;
  }
  std::vector<Rat> coeffs(s.coeffs().begin(), s.coeffs().end());
  out.write(render_sequence(coeffs, out.format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler-type series transformations and harmonic number identities"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  std::string format_text = "json";
  app.add_option("--format", format_text, "Output format: json | csv | plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--out", out.path, "Write output to PATH instead of standard output");

  VerifyArgs va;
  auto* verify = app.add_subcommand(
      "verify",
      "Verify identities exactly over a parameter grid.\n"
      "CSV columns: identity,anchor,params,status,witness_kind,witness_index,witness_lhs,witness_rhs\n"
      "(params as key=value pairs joined by ';'; witness columns empty unless failed)");
  verify->add_option("--id", va.id, "Identity id");
  verify->add_flag("--all", va.all, "Verify every registered identity");
  verify->add_option("--n-max", va.n_max, "Largest n for finite identities (default 16)");
  verify->add_option("--order", va.order, "Truncation order for series identities (default 16)");
  verify->add_option("--alpha", va.alpha, "Replace the alpha grid (repeatable, p/q syntax)");
  verify->add_option("--p", va.p, "Replace the p grid (repeatable, p/q syntax)");
  verify->add_option("--fuzz", va.fuzz, "Add N seeded random rationals to both grids");
  verify->add_option("--seed", va.seed, "Seed for --fuzz and random polynomial cases");
  verify->add_flag("--serial", va.serial, "Evaluate cases on one thread");
  bool list_ids = false;
  verify->add_flag("--list", list_ids, "List registered identity ids and exit");

  std::string input;
  bool inverse = false;
  auto* transform = app.add_subcommand("transform", "Binomial transform of a JSON array of rationals");
  transform->add_option("--in", input, "Input file (default: standard input)");
  transform->add_flag("--inverse", inverse, "Apply the inverse binomial transform");

  std::string hm = "0", hp = "0", horder = "8";
  auto* hsum = app.add_subcommand("hsum", "Coefficients of sum (H_{p+n}-H_p) C(p+n,n) n^m z^n, both sides");
  hsum->add_option("--m", hm, "Power m >= 0");
  hsum->add_option("--p", hp, "Shift p (rational)");
  hsum->add_option("--order", horder, "Truncation order");

  std::string terms = "20";
  auto* accelerate = app.add_subcommand("accelerate", "Euler-accelerated partial sums of the series for ln 2");
  accelerate->add_option("--terms", terms, "Number of terms (>= 1)");

  std::string sname, sorder = "8", sp = "0", salpha = "1";
  auto* series = app.add_subcommand("series", std::string("Dump named series coefficients: ") + kSeriesNames);
  series->add_option("--name", sname, "Series name")->required();
  series->add_option("--order", sorder, "Truncation order");
  series->add_option("--p", sp, "Parameter p for loggen");
  series->add_option("--alpha", salpha, "Exponent alpha for binom");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  out.format = format_text == "csv" ? Format::csv : format_text == "plain" ? Format::plain : Format::json;

  try {
    if (*verify) {
      if (list_ids) {
        std::ostringstream os;
        for (const auto& info : eulerx::registered_identities())
          os << info.id << "\t" << info.anchor << "\t" << info.statement << "\n";
        out.write(os.str());
        return kOk;
      }
      return cmd_verify(va, out);
    }
    if (*transform) return cmd_transform(input, inverse, out);
    if (*hsum) return cmd_hsum(hm, hp, horder, out);
    if (*accelerate) return cmd_accelerate(terms, out);
    if (*series) return cmd_series(sname, sorder, sp, salpha, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (*verify && std::string(e.what()).find("unknown identity") != std::string::npos) {
      std::cerr << "registered identities:";
      for (const auto& info : eulerx::registered_identities()) std::cerr << " " << info.id;
      std::cerr << "\n";
    }
    return kUsage;
  }
  return kUsage;
}
