#include "hf/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hf/classifier.hpp"
#include "hf/field_io.hpp"
#include "hf/json_io.hpp"
#include "hf/legendre.hpp"
#include "hf/monodromy.hpp"
#include "hf/weierstrass.hpp"

namespace hf::cli {
namespace {

using nlohmann::json;

struct Options {
  int degree = 0;
  int branch_points = 0;
  bool raw_only = false;
  bool normalized_only = false;
  bool oracle_check = false;

  std::string field_spec;
  std::string lambda_text;
  std::string j_text;
  std::string coeffs_text;
  bool analyze = false;
  bool report = false;

  std::string input_path;
  std::string dot_path;
  std::string format = "json";
  std::string output_path;
};

json field_echo(const Field& field) { return json::parse(field_to_json(field)); }

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(errc::usage_error, "cannot open output file: " + path);
  out << text;
  if (!out.flush()) raise(errc::usage_error, "failed writing output file: " + path);
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::usage_error, "cannot open input file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::string run_hurwitz(const Options& o) {
  const std::int64_t raw = count_simple_monodromy(o.degree, o.branch_points);
  json doc{{"d", o.degree}, {"n", o.branch_points}, {"schema", "hf-1"}};
  if (!o.normalized_only) doc["raw"] = raw;
  if (!o.raw_only) {
    Rational factorial{1};
    for (int i = 2; i <= o.degree; ++i) factorial *= i;
    std::ostringstream normalized;
    normalized << Rational(raw) / factorial;
    doc["normalized"] = normalized.str();
  }
  if (o.oracle_check) {
    const std::int64_t oracle = convolution_transitive_count(o.degree, o.branch_points);
    doc["oracle_raw"] = oracle;
    doc["oracle_match"] = oracle == raw;
  }
  return finish(doc);
}

std::string run_classify(const Options& o, std::string* dot_text) {
  const FieldPtr field = parse_field_spec(o.field_spec);
  const P1Point lambda = parse_p1(o.lambda_text, field);
  const P1Point j = parse_p1(o.j_text, field);
  const ClassificationResult result = classify(H24Point(lambda, j));
  if (!o.dot_path.empty() || o.format == "dot") *dot_text = render_dot(result);
  return o.format == "dot" ? *dot_text : classification_to_json(result);
}

json fixed_point_set(InvolutionKind kind, const FieldElem& lambda) {
  const std::vector<P1Point> points = fixed_points(kind, lambda);
  json rendered = json::array();
  for (const P1Point& p : points) rendered.push_back(format_p1(p));
  json out{{"points", rendered}};
  if (!points.empty()) out["field"] = field_echo(*points.front().field());
  return out;
}

std::string run_legendre(const Options& o) {
  const FieldPtr field = parse_field_spec(o.field_spec);
  const FieldElem lambda = parse_elem(o.lambda_text, field);
  const LegendreCurve curve(lambda);
  json orbit = json::array();
  for (const FieldElem& v : lambda_orbit(lambda)) orbit.push_back(format_elem(v));
  json doc{{"field", field_echo(*field)},
           {"lambda", format_elem(lambda)},
           {"orbit", orbit},
           {"schema", "hf-1"}};
  if (field->characteristic() != 2) doc["j"] = format_elem(j_from_lambda(lambda));
  if (o.analyze) {
    if (field->characteristic() == 2) {
      const auto [x, y] = char2_singular_point(curve);
      doc["singular_point"] = json{{"x", format_elem(x)}, {"y", format_elem(y)}};
      doc["singularity_type"] =
          singularity_type(curve) == SingularityType::Node ? "Node" : "NonNode";
    }
    doc["fixed_points"] = json{{"cross", fixed_point_set(InvolutionKind::Cross, lambda)},
                               {"inv", fixed_point_set(InvolutionKind::Inv, lambda)}};
  }
  return finish(doc);
}

std::string run_curve(const Options& o) {
  const FieldPtr field = parse_field_spec(o.field_spec);
  std::vector<FieldElem> a;
  std::stringstream parts(o.coeffs_text);
  std::string piece;
  while (std::getline(parts, piece, ',')) a.push_back(parse_elem(piece, field));
  if (a.size() != 5) {
    raise(errc::usage_error, "--coeffs wants five comma-separated values a1,a2,a3,a4,a6");
  }
  const WeierstrassCurve curve(a[0], a[1], a[2], a[3], a[4]);
  json coeffs = json::array();
  for (const FieldElem& v : a) coeffs.push_back(format_elem(v));
  json doc{{"coeffs", coeffs},
           {"field", field_echo(*field)},
           {"j", format_elem(weierstrass_j(curve))},
           {"schema", "hf-1"}};
  if (o.report) {
    doc["N"] = point_count(curve);
    doc["trace"] = trace_of_frobenius(curve);
    doc["supersingular"] = is_supersingular(curve);
    if (field->characteristic() == 2) doc["two_torsion"] = two_torsion_count(curve);
  }
  return finish(doc);
}

std::string run_graph_check(const Options& o) {
  return document_report_to_json(check_json_document(read_input(o.input_path)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary toolkit: Hurwitz counts, dual graphs, stable map types,"
               " Legendre and Weierstrass curves over exact fields",
               "hf"};
  app.require_subcommand(1);
  Options o;

  CLI::App* hurwitz = app.add_subcommand(
      "hurwitz", "Count tuples of transpositions with identity product and transitive image");
  hurwitz->add_option("--degree", o.degree, "Cover degree d")->required();
  hurwitz->add_option("--branch-points", o.branch_points, "Number of simple branch points")
      ->required();
  CLI::Option* raw_flag = hurwitz->add_flag("--raw", o.raw_only, "Emit only the raw tuple count");
  hurwitz->add_flag("--normalized", o.normalized_only, "Emit only the count divided by d!")
      ->excludes(raw_flag);
  hurwitz->add_flag("--oracle-check", o.oracle_check,
                    "Recount through the convolution route and compare");
  hurwitz->add_option("--output", o.output_path, "Write the JSON to this file instead of stdout");

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Classify a boundary point (lambda_s, j_s) into its limit stable map type");
  classify_cmd->add_option("--field", o.field_spec, "Field spec: q for the rationals, p, or p^k")
      ->required();
  classify_cmd->add_option("--lambda", o.lambda_text, "lambda_s as a polynomial in t, or inf")
      ->required();
  classify_cmd->add_option("--j", o.j_text, "j_s as a polynomial in t, or inf")->required();
  classify_cmd->add_option("--dot", o.dot_path, "Also write a DOT rendering to this file");
  classify_cmd->add_option("--format", o.format, "Main output format")
      ->check(CLI::IsMember({"json", "dot"}));
  classify_cmd->add_option("--output", o.output_path,
                           "Write the main output to this file instead of stdout");

  CLI::App* legendre_cmd = app.add_subcommand(
      "legendre", "Analyze the curve y^2 = x(x-1)(x-lambda) at a given lambda");
  legendre_cmd->add_option("--field", o.field_spec, "Field spec: q for the rationals, p, or p^k")
      ->required();
  legendre_cmd->add_option("--lambda", o.lambda_text, "lambda as a polynomial in t")->required();
  legendre_cmd->add_flag("--analyze", o.analyze,
                         "Add the singular point (characteristic 2) and involution fixed points");
  legendre_cmd->add_option("--output", o.output_path,
                           "Write the JSON to this file instead of stdout");

  CLI::App* curve_cmd = app.add_subcommand(
      "curve", "Invariants of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6");
  curve_cmd->add_option("--field", o.field_spec, "Field spec: q for the rationals, p, or p^k")
      ->required();
  curve_cmd->add_option("--coeffs", o.coeffs_text, "a1,a2,a3,a4,a6 as polynomials in t")
      ->required();
  curve_cmd->add_flag("--report", o.report,
                      "Add point count, trace, supersingularity (finite fields)");
  curve_cmd->add_option("--output", o.output_path,
                        "Write the JSON to this file instead of stdout");

  CLI::App* check_cmd = app.add_subcommand(
      "graph-check", "Validate a JSON dual graph or stable map type and list violations");
  check_cmd->add_option("--input", o.input_path, "Input file, or - for stdin")->required();
  check_cmd->add_option("--output", o.output_path,
                        "Write the JSON report to this file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    std::string text;
    std::string dot_text;
    if (app.got_subcommand(hurwitz)) {
      text = run_hurwitz(o);
    } else if (app.got_subcommand(classify_cmd)) {
      text = run_classify(o, &dot_text);
      if (!o.dot_path.empty()) write_file(o.dot_path, dot_text);
    } else if (app.got_subcommand(legendre_cmd)) {
      text = run_legendre(o);
    } else if (app.got_subcommand(curve_cmd)) {
      text = run_curve(o);
    } else if (app.got_subcommand(check_cmd)) {
      text = run_graph_check(o);
    }
    if (o.output_path.empty()) {
      out << text;
    } else {
      write_file(o.output_path, text);
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == errc::parse_error || e.code() == errc::usage_error ? 1 : 2;
  }
}

}  // namespace hf::cli
