#include "huslab/bound_check.hpp"
#include "huslab/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using huslab::Json;

struct Options {
  std::string operator_name;
  int n = 1;
  int p = 0;
  std::string a = "0/1";
  std::string b = "0/1";
  std::string norm = "interval";
  double radius = 1.0;
  std::uint64_t seed = 0;
  int trials = 1000;
  std::string format = "json";
  std::string output;
  std::string ks_denominator = "printed";
  int truncation = 0; // 0 = rule default

  std::string n_range;
  std::string p_range = "0:0";
  int degree = 0;
  std::string input_path;
  std::string function_spec;
  std::string at_point;
  bool certificate = false;
};

huslab::NormKind parse_norm(const std::string& name) {
  if (name == "interval")
    return huslab::NormKind::interval;
  if (name == "disk")
    return huslab::NormKind::disk;
  throw huslab::ParseError("unknown norm '" + name + "'");
}

huslab::KsDenominator parse_ks_denominator(const std::string& name) {
  if (name == "printed" || name == "n+1")
    return huslab::KsDenominator::printed;
  if (name == "classical" || name == "n+p+1")
    return huslab::KsDenominator::classical;
  throw huslab::ParseError("unknown ks-denominator '" + name + "'");
}

huslab::OperatorSpec build_spec(const Options& opt) {
  huslab::OperatorSpec spec;
  spec.kind = huslab::parse_kind(opt.operator_name);
  spec.n = opt.n;
  spec.p = opt.p;
  spec.a = huslab::parse_rational(opt.a);
  spec.b = huslab::parse_rational(opt.b);
  if (opt.truncation > 0)
    spec.truncation = opt.truncation;
  huslab::validate(spec);
  return spec;
}

huslab::StabilityOptions build_stability_options(const Options& opt) {
  huslab::StabilityOptions so;
  so.norm = parse_norm(opt.norm);
  so.radius = opt.radius;
  so.ks_denominator = parse_ks_denominator(opt.ks_denominator);
  return so;
}

/// Every report carries the resolved defaults, so a run can be reproduced
/// from its own output.
Json config_json(const Options& opt) {
  Json j;
  j["seed"] = opt.seed;
  j["trials"] = opt.trials;
  j["norm"] = opt.norm;
  j["radius"] = opt.radius;
  j["ks_denominator"] = opt.ks_denominator;
  j["szasz_truncation_rule"] =
      opt.truncation > 0 ? std::to_string(opt.truncation)
                         : std::string("max(64, ceil(8*n*x))");
  return j;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)),
            std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw huslab::ParseError("cannot parse range '" + text + "'");
  }
}

class Output {
public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_, std::ios::binary | std::ios::trunc);
      if (!file_)
        throw huslab::ParseError("cannot open output file '" + path_ + "'");
    }
  }

  void write(const std::string& text) {
    if (path_.empty())
      std::cout << text;
    else
      file_ << text;
  }

private:
  std::string path_;
  std::ofstream file_;
};

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw huslab::ParseError("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw huslab::ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

huslab::FunctionInput parse_function_spec(const std::string& spec) {
  if (spec.empty())
    throw huslab::ParseError("empty --function specification");
  if (spec.front() == '@')
    return huslab::function_input_from_json(load_json_file(spec.substr(1)));
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw huslab::ParseError(
        "--function expects variant:payload or @file.json");
  const std::string variant = spec.substr(0, colon);
  Json payload;
  try {
    payload = Json::parse(spec.substr(colon + 1));
  } catch (const Json::exception& e) {
    throw huslab::ParseError(std::string("malformed --function payload: ") +
                             e.what());
  }
  Json j;
  j["variant"] = variant;
  if (variant == "taylor" || variant == "poly") {
    j["coefficients"] = payload;
  } else if (payload.is_object()) {
    for (auto& [key, value] : payload.items())
      j[key] = value;
  } else {
    throw huslab::ParseError("--function " + variant +
                             " expects a JSON object payload");
  }
  return huslab::function_input_from_json(j);
}

int run_constant(const Options& opt) {
  Output out(opt.output);
  const huslab::OperatorSpec spec = build_spec(opt);
  const huslab::StabilityReport report =
      huslab::closed_K(spec, build_stability_options(opt));
  Json j;
  j["config"] = config_json(opt);
  const Json report_json = huslab::report_to_json(report);
  for (const auto& [key, value] : report_json.items())
    j[key] = value;
  out.write(huslab::dump_json(j));
  return 0;
}

int run_sweep(const Options& opt) {
  Output out(opt.output);
  const auto [n_lo, n_hi] = parse_range(opt.n_range);
  const auto [p_lo, p_hi] = parse_range(opt.p_range);
  if (n_lo > n_hi || p_lo > p_hi)
    throw std::invalid_argument("sweep: empty range");
  if (n_lo < 1)
    throw std::invalid_argument("sweep: n must be >= 1");

  std::vector<std::string> names;
  {
    std::string rest = opt.operator_name;
    size_t pos;
    while ((pos = rest.find(',')) != std::string::npos) {
      names.push_back(rest.substr(0, pos));
      rest.erase(0, pos + 1);
    }
    names.push_back(rest);
  }
  std::vector<huslab::OperatorKind> kinds;
  for (const auto& name : names)
    kinds.push_back(huslab::parse_kind(name));
  std::sort(kinds.begin(), kinds.end(),
            [](huslab::OperatorKind x, huslab::OperatorKind y) {
              return huslab::kind_name(x) < huslab::kind_name(y);
            });
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

  const huslab::StabilityOptions so = build_stability_options(opt);
  struct Row {
    huslab::StabilityReport report;
    int n, p;
  };
  std::vector<Row> rows;
  for (const auto kind : kinds) {
    const bool schurer = kind == huslab::OperatorKind::bernstein_schurer ||
                         kind == huslab::OperatorKind::kantorovich_schurer;
    for (int n = n_lo; n <= n_hi; ++n) {
      for (int p = p_lo; p <= p_hi; ++p) {
        if (!schurer && p != p_lo)
          break; // p sweeps apply to the Schurer kinds only
        huslab::OperatorSpec spec;
        spec.kind = kind;
        spec.n = n;
        spec.p = schurer ? p : 0;
        if (kind == huslab::OperatorKind::stancu) {
          spec.a = huslab::parse_rational(opt.a);
          spec.b = huslab::parse_rational(opt.b);
        }
        huslab::validate(spec);
        rows.push_back({huslab::closed_K(spec, so), spec.n, spec.p});
      }
    }
  }

  if (opt.format == "csv") {
    std::string csv = "operator,n,p,K_num,K_den,K_float,status\n";
    for (const Row& row : rows) {
      csv += huslab::kind_name(row.report.op.kind) + "," +
             std::to_string(row.n) + "," + std::to_string(row.p) + ",";
      if (row.report.K_exact) {
        csv += numerator(*row.report.K_exact).str() + "," +
               denominator(*row.report.K_exact).str() + "," +
               huslab::float_string(*row.report.K_float);
      } else {
        csv += ",,";
      }
      csv += "," + huslab::status_name(row.report.status) + "\n";
    }
    out.write(csv);
  } else {
    Json arr = Json::array();
    for (const Row& row : rows) {
      Json r;
      r["operator"] = huslab::kind_name(row.report.op.kind);
      r["n"] = row.n;
      r["p"] = row.p;
      if (row.report.K_exact) {
        r["K_exact"] = huslab::rational_string(*row.report.K_exact);
        r["K_float"] = *row.report.K_float;
      }
      r["status"] = huslab::status_name(row.report.status);
      arr.push_back(std::move(r));
    }
    Json j;
    j["config"] = config_json(opt);
    j["rows"] = std::move(arr);
    out.write(huslab::dump_json(j));
  }
  return 0;
}

int run_lorentz_rep(const Options& opt) {
  Output out(opt.output);
  const Json in = load_json_file(opt.input_path);
  const huslab::AnyPolynomial poly = huslab::polynomial_from_json(in);
  const auto* mono = std::get_if<huslab::MonomialPoly>(&poly);
  if (mono == nullptr)
    throw huslab::ParseError(
        "lorentz-rep expects a monomial-basis polynomial file");
  const int m = opt.degree > 0 ? opt.degree : mono->degree();
  const huslab::BernsteinPoly b = huslab::to_bernstein(*mono, m);
  Json j;
  j["config"] = config_json(opt);
  j["input_degree"] = mono->degree();
  j["representation"] = huslab::polynomial_to_json(b);
  out.write(huslab::dump_json(j));
  return 0;
}

int run_bound_check(const Options& opt) {
  Output out(opt.output);
  if (opt.degree < 1)
    throw std::invalid_argument("bound-check: --degree must be >= 1");
  const huslab::BoundCheckResult r =
      huslab::run_bound_check(opt.degree, opt.trials, opt.seed);
  Json j;
  j["config"] = config_json(opt);
  j["degree"] = r.degree;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["max_ratio"] = r.max_ratio;
  j["bound_holds"] = r.bound_holds;
  j["chebyshev_ratio"] = r.chebyshev_ratio;
  j["chebyshev_equality"] = r.chebyshev_equality;
  j["passed"] = r.passed();
  out.write(huslab::dump_json(j));
  return r.passed() ? 0 : 3;
}

int run_apply(const Options& opt) {
  Output out(opt.output);
  const huslab::OperatorSpec spec = build_spec(opt);
  const huslab::FunctionInput f = parse_function_spec(opt.function_spec);
  const huslab::KsDenominator ks = parse_ks_denominator(opt.ks_denominator);

  Json j;
  j["config"] = config_json(opt);
  j["operator"] = huslab::operator_spec_to_json(spec);

  std::optional<huslab::Scalar> at;
  if (!opt.at_point.empty())
    at = huslab::parse_complex(opt.at_point);

  const auto emit_value = [&](const huslab::Scalar& v) {
    j["value"] = huslab::scalar_to_json(v);
    Json vf;
    vf["re"] = v.real();
    vf["im"] = v.imag();
    j["value_float"] = std::move(vf);
  };

  switch (spec.kind) {
  case huslab::OperatorKind::szasz_mirakjan: {
    if (!at || !at->is_real())
      throw std::invalid_argument("apply: szasz_mirakjan needs a real --at");
    const huslab::SzaszResult r =
        huslab::apply_szasz(spec.n, f, at->real(), spec.truncation);
    emit_value(huslab::Scalar(r.value));
    j["tail_bound"] = r.tail_bound;
    j["truncation"] = r.truncation;
    break;
  }
  case huslab::OperatorKind::beta: {
    if (!at)
      throw std::invalid_argument("apply: beta needs --at in [0,1]");
    emit_value(huslab::apply_beta(spec.n, f, *at));
    break;
  }
  case huslab::OperatorKind::lorentz: {
    const huslab::MonomialPoly image = huslab::apply_lorentz(spec.n, f);
    j["image"] = huslab::polynomial_to_json(image);
    if (at)
      emit_value(huslab::eval(image, *at));
    break;
  }
  default: {
    huslab::BernsteinPoly image;
    switch (spec.kind) {
    case huslab::OperatorKind::bernstein:
      image = huslab::apply_bernstein(spec.n, f);
      break;
    case huslab::OperatorKind::stancu:
      image = huslab::apply_stancu(spec.n, spec.a, spec.b, f);
      break;
    case huslab::OperatorKind::kantorovich:
      image = huslab::apply_kantorovich(spec.n, f);
      break;
    case huslab::OperatorKind::bernstein_schurer:
      image = huslab::apply_bernstein_schurer(spec.n, spec.p, f);
      break;
    default:
      image = huslab::apply_kantorovich_schurer(spec.n, spec.p, f, ks);
      break;
    }
    j["image"] = huslab::polynomial_to_json(image);
    if (at)
      emit_value(huslab::eval(image, *at));
    break;
  }
  }
  out.write(huslab::dump_json(j));
  return 0;
}

int run_empirical(const Options& opt) {
  Output out(opt.output);
  const huslab::OperatorSpec spec = build_spec(opt);
  const huslab::StabilityOptions so = build_stability_options(opt);
  const huslab::EmpiricalResult r = huslab::empirical_inverse_norm(
      spec, opt.trials, opt.seed, opt.certificate, so);
  const huslab::StabilityReport closed = huslab::closed_K(spec, so);

  Json j;
  j["config"] = config_json(opt);
  j["operator"] = huslab::operator_spec_to_json(spec);
  if (closed.K_exact) {
    j["K_exact"] = huslab::rational_string(*closed.K_exact);
    j["K_float"] = *closed.K_float;
  }
  const Json empirical_json = huslab::empirical_to_json(r);
  for (const auto& [key, value] : empirical_json.items())
    j[key] = value;
  if (so.norm == huslab::NormKind::disk)
    j["notes"] = Json::array({"disk-norm run (exploratory): the closed-form "
                              "constants correspond to the interval norm"});
  out.write(huslab::dump_json(j));
  return 0;
}

int run_instability(const Options& opt) {
  Output out(opt.output);
  const huslab::OperatorSpec spec = build_spec(opt);
  Json j;
  j["config"] = config_json(opt);
  j["operator"] = huslab::operator_spec_to_json(spec);
  if (spec.kind == huslab::OperatorKind::lorentz) {
    const huslab::LorentzInstabilityReport r =
        huslab::lorentz_instability_report(spec.n);
    const Json report_json = huslab::instability_to_json(r);
    for (const auto& [key, value] : report_json.items())
      j[key] = value;
  } else if (spec.kind == huslab::OperatorKind::szasz_mirakjan ||
             spec.kind == huslab::OperatorKind::beta) {
    const huslab::StabilityReport r = huslab::closed_K(spec);
    j["status"] = huslab::status_name(r.status);
    j["notes"] = r.notes;
  } else {
    throw std::invalid_argument("instability: operator '" +
                                huslab::kind_name(spec.kind) +
                                "' is stable; no instability report");
  }
  out.write(huslab::dump_json(j));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyers-Ulam stability lab for classical positive linear "
               "operators: closed-form constants, extremal certificates, "
               "preimage constructions and instability evidence"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* sub, bool operator_required) {
    CLI::Option* op =
        sub->add_option("--operator", opt.operator_name, "operator kind");
    if (operator_required)
      op->required();
    sub->add_option("-n,--n", opt.n, "operator parameter n");
    sub->add_option("-p,--p", opt.p, "Schurer shift parameter p");
    sub->add_option("-a,--a", opt.a, "Stancu parameter a (rational)");
    sub->add_option("-b,--b", opt.b, "Stancu parameter b (rational)");
    sub->add_option("--norm", opt.norm, "norm: interval (default) or disk");
    sub->add_option("--radius", opt.radius, "disk radius (disk norm only)");
    sub->add_option("--seed", opt.seed, "RNG seed (default 0)");
    sub->add_option("--trials", opt.trials, "sample count (default 1000)");
    sub->add_option("--format", opt.format, "output format: json or csv");
    sub->add_option("--output", opt.output, "output file (default stdout)");
    sub->add_option("--ks-denominator", opt.ks_denominator,
                    "subinterval width rule: printed (1/(n+1)) or classical "
                    "(1/(n+p+1))");
    sub->add_option("--truncation", opt.truncation,
                    "series truncation (szasz_mirakjan only)");
  };

  CLI::App* constant = app.add_subcommand(
      "constant", "closed-form stability constant for one operator");
  add_common(constant, true);

  CLI::App* sweep =
      app.add_subcommand("sweep", "constant table over (n,p) ranges");
  add_common(sweep, true);
  sweep->add_option("--n-range", opt.n_range, "n range, e.g. 1:10")
      ->required();
  sweep->add_option("--p-range", opt.p_range, "p range, e.g. 0:5");

  CLI::App* lorentz_rep = app.add_subcommand(
      "lorentz-rep", "Bernstein-basis representation of a polynomial file");
  add_common(lorentz_rep, false);
  lorentz_rep->add_option("--input", opt.input_path, "polynomial JSON file")
      ->required();
  lorentz_rep->add_option("--degree", opt.degree,
                          "representation degree (default: input degree)");

  CLI::App* bound_check = app.add_subcommand(
      "bound-check", "coefficient bound property suite for one degree");
  add_common(bound_check, false);
  bound_check->add_option("--degree", opt.degree, "polynomial degree")
      ->required();

  CLI::App* apply =
      app.add_subcommand("apply", "apply an operator to a function input");
  add_common(apply, true);
  apply->add_option("--function", opt.function_spec,
                    "taylor:[...], poly:[...], grid:{...}, step:{...} or "
                    "@file.json")
      ->required();
  apply->add_option("--at", opt.at_point, "evaluation point, e.g. 1/2 or "
                                          "0.3+0.4i");

  CLI::App* empirical = app.add_subcommand(
      "empirical", "sampled lower bound for the inverse operator norm");
  add_common(empirical, true);
  empirical->add_flag("--certificate", opt.certificate,
                      "include the extremal Chebyshev witness in the sample "
                      "set");

  CLI::App* instability =
      app.add_subcommand("instability", "instability evidence report");
  add_common(instability, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (const char* env_seed = std::getenv("HUS_LAB_SEED")) {
    try {
      opt.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "error: cannot parse HUS_LAB_SEED='" << env_seed << "'\n";
      return 1;
    }
  }

  try {
    if (constant->parsed())
      return run_constant(opt);
    if (sweep->parsed())
      return run_sweep(opt);
    if (lorentz_rep->parsed())
      return run_lorentz_rep(opt);
    if (bound_check->parsed())
      return run_bound_check(opt);
    if (apply->parsed())
      return run_apply(opt);
    if (empirical->parsed())
      return run_empirical(opt);
    if (instability->parsed())
      return run_instability(opt);
  } catch (const huslab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
