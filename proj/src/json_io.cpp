#include "huslab/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace huslab {

std::string float_string(double v) {
  if (!std::isfinite(v))
    return v > 0 ? "1e9999" : (v < 0 ? "-1e9999" : "null");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
  const std::string closing_pad(static_cast<size_t>(indent) * depth, ' ');
  switch (j.type()) {
  case Json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first)
        out += ",\n";
      first = false;
      out += pad;
      out += Json(key).dump();
      out += ": ";
      dump_rec(value, out, indent, depth + 1);
    }
    out += "\n" + closing_pad + "}";
    return;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& value : j) {
      if (!first)
        out += ",\n";
      first = false;
      out += pad;
      dump_rec(value, out, indent, depth + 1);
    }
    out += "\n" + closing_pad + "]";
    return;
  }
  case Json::value_t::number_float:
    out += float_string(j.get<double>());
    return;
  default:
    out += j.dump();
    return;
  }
}

} // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

Json scalar_to_json(const Scalar& s) {
  Json j;
  if (s.exact()) {
    j["re"] = rational_string(s.exact_value().re);
    j["im"] = rational_string(s.exact_value().im);
  } else {
    j["re"] = s.real();
    j["im"] = s.imag();
  }
  return j;
}

namespace {

enum class ScalarMode { exact, floating, auto_detect };

BigRational rational_from_json(const Json& j, const char* what) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return BigRational(j.get<long long>());
  if (j.is_number())
    return BigRational(j.get<double>()); // exact dyadic conversion
  throw ParseError(std::string(what) +
                   ": expected a rational string or number");
}

bool json_part_is_exact(const Json& j) {
  return j.is_string() || j.is_number_integer();
}

Scalar scalar_from_json(const Json& j, ScalarMode mode) {
  if (j.is_object()) {
    const Json& re = j.at("re");
    const Json im = j.contains("im") ? j.at("im") : Json(0);
    const bool exact =
        mode == ScalarMode::exact ||
        (mode == ScalarMode::auto_detect && json_part_is_exact(re) &&
         json_part_is_exact(im));
    if (exact)
      return Scalar(RationalComplex{rational_from_json(re, "re"),
                                    rational_from_json(im, "im")});
    if (!re.is_number() || !im.is_number())
      throw ParseError("coefficient: float parts must be numbers");
    return Scalar(re.get<double>(), im.get<double>());
  }
  const bool exact = mode == ScalarMode::exact ||
                     (mode == ScalarMode::auto_detect && json_part_is_exact(j));
  if (exact)
    return Scalar(rational_from_json(j, "coefficient"));
  if (!j.is_number())
    throw ParseError("coefficient: expected a number");
  return Scalar(j.get<double>());
}

Json coefficients_to_json(const std::vector<Scalar>& coeffs) {
  Json arr = Json::array();
  for (const Scalar& c : coeffs)
    arr.push_back(scalar_to_json(c));
  return arr;
}

Json polynomial_fields(const char* basis, const std::vector<Scalar>& coeffs) {
  bool exact = true;
  for (const Scalar& c : coeffs)
    exact = exact && c.exact();
  Json j;
  j["basis"] = basis;
  j["degree"] = static_cast<int>(coeffs.size()) - 1;
  j["scalar_format"] = exact ? "rational" : "float";
  j["coefficients"] = coefficients_to_json(coeffs);
  return j;
}

std::vector<Scalar> coefficients_from_json(const Json& j) {
  if (!j.contains("coefficients") || !j["coefficients"].is_array())
    throw ParseError("polynomial: missing coefficients array");
  const std::string format =
      j.value("scalar_format", std::string("rational"));
  if (format != "rational" && format != "float")
    throw ParseError("polynomial: unknown scalar_format '" + format + "'");
  const ScalarMode mode =
      format == "rational" ? ScalarMode::exact : ScalarMode::floating;
  std::vector<Scalar> coeffs;
  for (const Json& c : j["coefficients"])
    coeffs.push_back(scalar_from_json(c, mode));
  if (coeffs.empty())
    throw ParseError("polynomial: empty coefficient list");
  if (j.contains("degree") &&
      j["degree"].get<int>() != static_cast<int>(coeffs.size()) - 1)
    throw ParseError("polynomial: degree does not match the coefficient count");
  return coeffs;
}

} // namespace

Json polynomial_to_json(const MonomialPoly& p) {
  return polynomial_fields("monomial", p.coeffs);
}

Json polynomial_to_json(const BernsteinPoly& p) {
  return polynomial_fields("bernstein", p.coeffs);
}

AnyPolynomial polynomial_from_json(const Json& j) {
  const std::string basis = j.value("basis", std::string("monomial"));
  std::vector<Scalar> coeffs = coefficients_from_json(j);
  if (basis == "monomial")
    return MonomialPoly(std::move(coeffs));
  if (basis == "bernstein")
    return BernsteinPoly(std::move(coeffs));
  throw ParseError("polynomial: unknown basis '" + basis + "'");
}

Json function_input_to_json(const FunctionInput& f) {
  Json j;
  if (const auto* g = std::get_if<GridFunction>(&f)) {
    j["variant"] = "grid";
    Json nodes = Json::array();
    for (const auto& x : g->nodes)
      nodes.push_back(rational_string(x));
    j["nodes"] = std::move(nodes);
    j["values"] = coefficients_to_json(g->values);
  } else if (const auto* s = std::get_if<StepFunction>(&f)) {
    j["variant"] = "step";
    Json bps = Json::array();
    for (const auto& x : s->breakpoints)
      bps.push_back(rational_string(x));
    j["breakpoints"] = std::move(bps);
    j["values"] = coefficients_to_json(s->values);
  } else if (const auto* t = std::get_if<TaylorFunction>(&f)) {
    j["variant"] = "taylor";
    j["coefficients"] = coefficients_to_json(t->coeffs);
  } else {
    const auto& p = std::get<MonomialPoly>(f);
    Json fields = polynomial_to_json(p);
    j["variant"] = "poly";
    j["degree"] = fields["degree"];
    j["scalar_format"] = fields["scalar_format"];
    j["coefficients"] = fields["coefficients"];
  }
  return j;
}

FunctionInput function_input_from_json(const Json& j) {
  const auto parse_values = [&](const Json& arr) {
    std::vector<Scalar> values;
    for (const Json& v : arr)
      values.push_back(scalar_from_json(v, ScalarMode::auto_detect));
    return values;
  };
  const auto parse_nodes = [&](const Json& arr) {
    std::vector<BigRational> nodes;
    for (const Json& x : arr)
      nodes.push_back(rational_from_json(x, "node"));
    return nodes;
  };

  std::string variant;
  FunctionInput f;
  try {
    variant = j.at("variant").get<std::string>();
    if (variant == "grid") {
      GridFunction g;
      g.nodes = parse_nodes(j.at("nodes"));
      g.values = parse_values(j.at("values"));
      f = std::move(g);
    } else if (variant == "step") {
      StepFunction s;
      s.breakpoints = parse_nodes(j.at("breakpoints"));
      s.values = parse_values(j.at("values"));
      f = std::move(s);
    } else if (variant == "taylor") {
      TaylorFunction t;
      t.coeffs = parse_values(j.at("coefficients"));
      f = std::move(t);
    } else if (variant == "poly") {
      f = MonomialPoly(coefficients_from_json(j));
    } else {
      throw ParseError("function input: unknown variant '" + variant + "'");
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("function input: ") + e.what());
  }
  try {
    validate(f);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("function input: ") + e.what());
  }
  return f;
}

Json operator_spec_to_json(const OperatorSpec& spec) {
  Json j;
  j["kind"] = kind_name(spec.kind);
  j["n"] = spec.n;
  if (spec.kind == OperatorKind::bernstein_schurer ||
      spec.kind == OperatorKind::kantorovich_schurer)
    j["p"] = spec.p;
  if (spec.kind == OperatorKind::stancu) {
    j["a"] = rational_string(spec.a);
    j["b"] = rational_string(spec.b);
  }
  if (spec.truncation)
    j["truncation"] = *spec.truncation;
  return j;
}

Json report_to_json(const StabilityReport& report) {
  Json j;
  j["operator"] = operator_spec_to_json(report.op);
  j["status"] = status_name(report.status);
  if (report.K_exact)
    j["K_exact"] = rational_string(*report.K_exact);
  if (report.K_float)
    j["K_float"] = *report.K_float;
  if (report.empirical_lower_bound)
    j["empirical_lower_bound"] = *report.empirical_lower_bound;
  if (report.certificate) {
    Json c;
    c["extremal"] = polynomial_to_json(report.certificate->extremal);
    c["attained"] = rational_string(report.certificate->attained);
    c["norm_check"] = report.certificate->norm_check;
    j["certificate"] = std::move(c);
  }
  j["notes"] = report.notes;
  return j;
}

Json empirical_to_json(const EmpiricalResult& result) {
  Json j;
  j["lower_bound"] = result.lower_bound;
  j["trials"] = result.trials;
  j["seed"] = result.seed;
  j["certificate_included"] = result.certificate_included;
  j["best_witness"] = polynomial_to_json(result.best_witness);
  j["best_preimage_sup"] = result.best_preimage_sup;
  j["best_norm"] = result.best_norm;
  return j;
}

Json instability_to_json(const LorentzInstabilityReport& report) {
  Json j;
  j["n"] = report.n;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["j"] = row.j;
    r["eigenvalue"] = rational_string(row.eigenvalue);
    if (row.reciprocal_finite)
      r["reciprocal"] = rational_string(row.reciprocal);
    else
      r["reciprocal"] = "divergent";
    rows.push_back(std::move(r));
  }
  j["spectrum"] = std::move(rows);
  j["max_finite_reciprocal"] = rational_string(report.max_finite_reciprocal);
  j["argmax_j"] = report.argmax_j;
  j["kernel_witness"] = report.kernel_witness;
  j["notes"] = report.notes;
  return j;
}

Scalar parse_complex(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty())
    throw ParseError("parse_complex: empty input");

  const auto parse_part = [](std::string part) -> BigRational {
    if (part.empty() || part == "+")
      return 1;
    if (part == "-")
      return -1;
    return parse_rational(part);
  };

  // Split at a '+'/'-' that starts the imaginary part: not the leading sign
  // and not inside an exponent or after a '/'.
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] != '+' && s[i] != '-')
      continue;
    const char prev = s[i - 1];
    if (prev == 'e' || prev == 'E' || prev == '/' || prev == '+' ||
        prev == '-')
      continue;
    split = i; // the last such sign starts the imaginary part
  }

  if (s.back() == 'i') {
    s.pop_back();
    if (split == std::string::npos)
      return Scalar(RationalComplex{0, parse_part(s)});
    return Scalar(RationalComplex{parse_rational(s.substr(0, split)),
                                  parse_part(s.substr(split))});
  }
  if (split != std::string::npos)
    throw ParseError("parse_complex: expected trailing 'i' in '" + text + "'");
  return Scalar(RationalComplex{parse_rational(s), 0});
}

} // namespace huslab
