#include "perfcol/feasibility.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "perfcol/errors.hpp"
#include "perfcol/linalg.hpp"

namespace perfcol {

namespace {

nlohmann::json int_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

nlohmann::json verdict_json(const std::string& name, const Verdict& v) {
  nlohmann::json j{{"name", name}, {"verdict", outcome_name(v.outcome)}};
  j["witness"] = v.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.witness);
  return j;
}

std::string shell_key(int color, int dist) {
  return "W^" + std::to_string(color) + "_" + std::to_string(dist);
}

BigRational power_of(const BigInt& base, int t) { return BigRational(pow(base, static_cast<std::uint64_t>(t))); }

}  // namespace

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::NotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

bool has_extended_shape(const QuotientMatrix& s) {
  return s.rows() == 3 && s.cols() == 3 && s(0, 0) == 0 && s(0, 2) == 0 && s(2, 0) == 0 && s(1, 0) == 1;
}

ParityResult parity_check(const QuotientMatrix& s) {
  ParityResult result;
  if (!has_extended_shape(s)) {
    result.verdict = Verdict::not_applicable("matrix is not of extended-perfect shape");
    return result;
  }
  // Around a color-2 vertex a: each of the s_21 color-1 neighbours has
  // exactly one color-0 neighbour, which lies at distance 2 from a, and each
  // such color-0 vertex is seen from exactly c_2 = 2 of them.
  const BigInt w1_1 = s(2, 1);
  result.table.counts[{0, 1}] = 0;
  result.table.counts[{1, 1}] = w1_1;
  if (w1_1 % 2 != 0) {
    result.verdict = Verdict::fail("W^1_1 = s_21 = " + w1_1.str() + " is odd, but W^1_1 = 2 W^0_2");
    return result;
  }
  result.table.counts[{0, 2}] = w1_1 / 2;
  result.verdict = Verdict::pass("W^0_2 = " + BigInt(w1_1 / 2).str());
  return result;
}

ShellResult shell_count_check(const GraphParams& g, const QuotientMatrix& s, ShellCoefficient coefficient) {
  ShellResult result;
  if (!has_extended_shape(s)) {
    result.verdict = Verdict::not_applicable("matrix is not of extended-perfect shape");
    return result;
  }
  validate_row_sums(s, g.degree());
  const ParityResult parity = parity_check(s);
  if (parity.verdict.outcome != Outcome::Pass) {
    result.verdict = Verdict::not_applicable("parity check did not pass");
    return result;
  }
  if (g.diameter() < 3) {
    result.verdict = Verdict::not_applicable("graph diameter " + g.diameter().str() + " < 3");
    return result;
  }
  const BigInt c2 = g.c(2);
  const BigInt c3 = g.c(3);
  const BigInt a1 = g.a(1);
  result.coefficient = coefficient == ShellCoefficient::Literal6 ? BigInt(6) : g.a(2);

  auto& t = result.table.counts;
  const BigInt w1_1 = s(2, 1);
  const BigInt w2_1 = s(2, 2);
  t[{0, 1}] = 0;
  t[{1, 1}] = w1_1;
  t[{2, 1}] = w2_1;
  if (w1_1 % c2 != 0) {
    result.verdict = Verdict::fail("W^0_2 = " + to_fraction_string(BigRational(w1_1, c2)) + " is not an integer");
    return result;
  }
  const BigInt w0_2 = w1_1 / c2;
  t[{0, 2}] = w0_2;

  // Edges from W_1 to color-1 vertices at distance 2; the induced subgraph
  // on W_1 is a_1-regular and a itself has color 2.
  const BigInt w = w1_1 * s(1, 1) + w2_1 * s(2, 1) - a1 * w1_1;
  result.table.edges_w1_to_w12 = w;
  if (w < 0) {
    result.verdict = Verdict::fail("w = " + w.str() + " is negative");
    return result;
  }
  const BigRational w1_2(w, c2);
  if (!is_integer(w1_2)) {
    result.verdict = Verdict::fail("W^1_2 = w / c_2 = " + to_fraction_string(w1_2) + " is not an integer");
    return result;
  }
  t[{1, 2}] = numerator_of(w1_2);

  // Each vertex of W^1_2 has s_10 color-0 neighbours; they sit in W^0_2
  // (A of them per vertex there) or W^0_3 (c_3 per vertex).
  const BigRational w0_3 = (w1_2 * BigRational(s(1, 0)) - BigRational(result.coefficient * w0_2)) / BigRational(c3);
  result.w0_3 = w0_3;
  const std::string detail = " (W^1_2 = " + to_fraction_string(w1_2) + ", W^0_2 = " + w0_2.str() +
                             ", A = " + result.coefficient.str() + ", c_3 = " + c3.str() + ")";
  if (!is_integer(w0_3)) {
    result.verdict = Verdict::fail("W^0_3 = " + to_fraction_string(w0_3) + " is not an integer" + detail);
    return result;
  }
  if (w0_3 < 0) {
    result.verdict = Verdict::fail("W^0_3 = " + to_fraction_string(w0_3) + " is negative" + detail);
    return result;
  }
  t[{0, 3}] = numerator_of(w0_3);
  result.verdict = Verdict::pass("W^0_3 = " + to_fraction_string(w0_3) + detail);
  return result;
}

ColorAnalysis solve_color_system(const GraphParams& g, const QuotientMatrix& s, const SpectrumInfo& spectrum,
                                 const ClassSizes& sizes, int color) {
  if (color < 0 || color >= s.rows()) throw InputError("color " + std::to_string(color) + " out of range");
  ColorAnalysis out;
  out.color = color;
  const int l = spectrum.l();
  const BigInt q(g.alphabet());
  const BigRational& p = sizes.fractions[color];
  out.principal_mass = ScaledValue(p * p, q, g.length());
  if (l <= 0) {
    out.nonnegative = Verdict::pass("single eigenvalue, empty system");
    out.integrality = Verdict::pass("single eigenvalue, empty system");
    return out;
  }
  for (int j = 1; j <= l; ++j) out.lambdas.push_back(spectrum.lambda(j));
  out.diagonal = power_diagonal(s, color, l - 1);

  // Unknowns a_j / |V|; the right-hand side is divided by |V| as well.
  DenseMatrix<BigRational> vandermonde(l, l);
  DenseVector<BigRational> rhs(l);
  for (int t = 0; t < l; ++t) {
    for (int j = 0; j < l; ++j) vandermonde(t, j) = power_of(out.lambdas[j], t);
    rhs(t) = p * BigRational(out.diagonal[t]) - p * p * power_of(spectrum.lambda(0), t);
  }
  const auto solved = solve_exact(vandermonde, rhs);
  if (solved.status != SolveStatus::Unique) throw InternalError("Vandermonde system with distinct nodes is singular");
  if ((vandermonde * solved.solution - rhs).squaredNorm() != 0) {
    throw InternalError("mass system solution failed re-substitution");
  }

  out.nonnegative = Verdict::pass();
  out.integrality = g.integrality_applies()
                        ? Verdict::pass()
                        : Verdict::not_applicable("integrality of a_j |V| needs q in {2,3,4} or a Doob graph");
  for (int j = 0; j < l; ++j) {
    const BigRational& scaled = solved.solution(j);
    out.a_values.emplace_back(scaled, q, g.length());
    out.a_times_v.emplace_back(scaled, q, 2 * g.length());
    const std::string tag = "color " + std::to_string(color) + ": a_" + std::to_string(j + 1);
    const std::string lambda_note = " (lambda_" + std::to_string(j + 1) + " = " + out.lambdas[j].str() + ")";
    if (scaled < 0 && out.nonnegative.outcome == Outcome::Pass) {
      out.nonnegative = Verdict::fail(tag + " = " + out.a_values.back().to_string() + " < 0" + lambda_note);
    }
    if (g.integrality_applies() && out.integrality.outcome == Outcome::Pass && !out.a_times_v.back().is_integer()) {
      out.integrality =
          Verdict::fail(tag + "*|V| = " + out.a_times_v.back().to_string() + " is not an integer" + lambda_note);
    }
  }
  return out;
}

namespace {

void run_spectral_checks(FeasibilityReport& report, const std::vector<int>& colors) {
  const GraphParams& g = report.graph;
  const QuotientMatrix& s = report.matrix;

  report.spectrum = quotient_eigenvalues(s, g);
  if (report.spectrum->lemma2_holds) {
    std::string list = "eigenvalues";
    for (const auto& e : report.spectrum->spectrum.eigenvalues) {
      list += " " + e.value.str() + (e.multiplicity > 1 ? "^" + std::to_string(e.multiplicity) : "");
    }
    report.checks.push_back({check_names::kLemma2, Verdict::pass(list)});
  } else {
    report.checks.push_back({check_names::kLemma2, Verdict::fail(report.spectrum->witness())});
  }

  try {
    report.sizes = class_sizes(s, g);
    report.checks.push_back({check_names::kClassSizes, report.sizes->feasible ? Verdict::pass()
                                                                              : Verdict::fail(report.sizes->witness)});
  } catch (const UnderdeterminedError& e) {
    report.checks.push_back({check_names::kClassSizes, Verdict::fail(e.what())});
  }

  std::string blocked;
  if (!report.spectrum->lemma2_holds) blocked = "lemma2 failed";
  if (!report.sizes || !report.sizes->feasible) blocked = blocked.empty() ? "class sizes infeasible" : blocked;
  if (!blocked.empty()) {
    report.checks.push_back({check_names::kNonneg, Verdict::not_applicable(blocked)});
    report.checks.push_back({check_names::kIntegrality, Verdict::not_applicable(blocked)});
    return;
  }

  Verdict nonneg = Verdict::pass();
  Verdict integral = g.integrality_applies()
                         ? Verdict::pass()
                         : Verdict::not_applicable("integrality of a_j |V| needs q in {2,3,4} or a Doob graph");
  for (int color : colors) {
    report.colors.push_back(solve_color_system(g, s, report.spectrum->spectrum, *report.sizes, color));
    const auto& c = report.colors.back();
    if (c.nonnegative.failed() && !nonneg.failed()) nonneg = c.nonnegative;
    if (c.integrality.failed() && !integral.failed()) integral = c.integrality;
  }
  report.checks.push_back({check_names::kNonneg, nonneg});
  report.checks.push_back({check_names::kIntegrality, integral});
}

FeasibilityReport start_report(const GraphParams& g, const QuotientMatrix& s) {
  validate_quotient(s);
  validate_row_sums(s, g.degree());
  FeasibilityReport report;
  report.graph = g;
  report.matrix = s;
  return report;
}

}  // namespace

bool FeasibilityReport::passes() const { return first_failure() == nullptr; }

const Check* FeasibilityReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.verdict.failed()) return &c;
  }
  return nullptr;
}

const Check& FeasibilityReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InputError("report has no check named " + name);
}

FeasibilityReport theorem1_check(const GraphParams& g, const QuotientMatrix& s, int color) {
  FeasibilityReport report = start_report(g, s);
  if (color < 0 || color >= s.rows()) throw InputError("color " + std::to_string(color) + " out of range");
  run_spectral_checks(report, {color});
  return report;
}

FeasibilityReport analyze(const GraphParams& g, const QuotientMatrix& s, const AnalyzeOptions& options) {
  FeasibilityReport report = start_report(g, s);
  std::vector<int> colors;
  if (options.color) {
    if (*options.color < 0 || *options.color >= s.rows()) {
      throw InputError("color " + std::to_string(*options.color) + " out of range");
    }
    colors.push_back(*options.color);
  } else {
    for (int i = 0; i < s.rows(); ++i) colors.push_back(i);
  }
  run_spectral_checks(report, colors);

  report.parity = parity_check(s);
  report.checks.push_back({check_names::kParity, report.parity->verdict});
  report.shell = shell_count_check(g, s, options.shell_coefficient);
  report.checks.push_back({check_names::kShellCount, report.shell->verdict});
  return report;
}

ScaledValue prop1_closed_form(Family family, int q, const BigInt& l) {
  if (l < 1) throw InputError("l must be a positive integer");
  const auto e = l.convert_to<std::uint64_t>();
  if (family == Family::Hamming && q == 3) {
    const BigInt n = (pow(BigInt(3), e) + 1) / 2;
    return {BigRational(BigInt(8), pow(BigInt(3), e - 1) + 1), BigInt(3), 2 * n - l - 3};
  }
  if (family == Family::Doob || (family == Family::Hamming && q == 4)) {
    const BigInt length = (pow(BigInt(4), e) + 2) / 3;
    return {BigRational(BigInt(27), pow(BigInt(4), e - 1) + 2), BigInt(4), 2 * length - l - 3};
  }
  throw InputError("closed form exists only for H(n,3) and Doob/quaternary graphs");
}

std::vector<ScanRow> scan_extended(Family family, int q, int l_min, int l_max, const AnalyzeOptions& options) {
  if (l_min < 1 || l_max < l_min) throw InputError("scan needs 1 <= l_min <= l_max");
  if (family == Family::Doob) q = 4;
  if (q < 2) throw InputError("q must be at least 2");
  std::vector<ScanRow> rows;
  for (int l = l_min; l <= l_max; ++l) {
    auto params = admissible_extended_params(family, q, BigInt(l));
    if (!params) continue;
    const GraphParams g =
        family == Family::Doob ? GraphParams::doob(params->length) : GraphParams::hamming(params->length, q);
    rows.push_back({*params, analyze(g, extended_perfect_matrix(g), options)});
  }
  return rows;
}

nlohmann::json report_to_json(const FeasibilityReport& report) {
  nlohmann::json j;
  j["graph"] = report.graph.label();
  j["matrix"] = quotient_to_json(report.matrix);
  nlohmann::json eig = nlohmann::json::array();
  if (report.spectrum) {
    for (const auto& e : report.spectrum->spectrum.eigenvalues) {
      eig.push_back({{"value", int_json(e.value)}, {"multiplicity", e.multiplicity}});
    }
  }
  j["eigenvalues"] = eig;
  nlohmann::json sizes = nlohmann::json::array();
  if (report.sizes) {
    for (const auto& s : report.sizes->sizes) sizes.push_back(s.to_string());
  }
  j["class_sizes"] = sizes;
  nlohmann::json colors = nlohmann::json::array();
  for (const auto& c : report.colors) {
    nlohmann::json cj;
    cj["color"] = c.color;
    cj["lambdas"] = nlohmann::json::array();
    for (const auto& v : c.lambdas) cj["lambdas"].push_back(int_json(v));
    cj["a_values"] = nlohmann::json::array();
    for (const auto& v : c.a_values) cj["a_values"].push_back(v.to_string());
    cj["a_times_V"] = nlohmann::json::array();
    for (const auto& v : c.a_times_v) cj["a_times_V"].push_back(v.to_string());
    cj["principal_mass"] = c.principal_mass.to_string();
    cj["checks"] = {verdict_json(check_names::kNonneg, c.nonnegative),
                    verdict_json(check_names::kIntegrality, c.integrality)};
    colors.push_back(std::move(cj));
  }
  j["colors"] = colors;
  nlohmann::json shells = nlohmann::json::object();
  if (report.shell) {
    for (const auto& [key, value] : report.shell->table.counts) shells[shell_key(key.first, key.second)] = value.str();
    if (report.shell->table.edges_w1_to_w12) shells["w"] = report.shell->table.edges_w1_to_w12->str();
    if (report.shell->w0_3) shells["W^0_3 (solved)"] = to_fraction_string(*report.shell->w0_3);
  } else if (report.parity) {
    for (const auto& [key, value] : report.parity->table.counts) shells[shell_key(key.first, key.second)] = value.str();
  }
  j["shell_table"] = shells;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back(verdict_json(c.name, c.verdict));
  j["checks"] = checks;
  j["feasible"] = report.passes();
  return j;
}

std::string report_to_text(const FeasibilityReport& report) {
  std::ostringstream out;
  out << "graph:        " << report.graph.label() << "\n";
  out << "matrix:       " << format_quotient(report.matrix) << "\n";
  if (report.spectrum) {
    out << "eigenvalues: ";
    for (const auto& e : report.spectrum->spectrum.eigenvalues) {
      out << " " << e.value << (e.multiplicity > 1 ? "^" + std::to_string(e.multiplicity) : "");
    }
    out << "\n";
  }
  if (report.sizes) {
    out << "class sizes: ";
    for (const auto& s : report.sizes->sizes) out << " " << s.to_string();
    out << "\n";
  }
  for (const auto& c : report.colors) {
    out << "color " << c.color << ":";
    for (std::size_t j = 0; j < c.a_values.size(); ++j) {
      out << "  a_" << j + 1 << " = " << c.a_values[j].to_string() << " (a*|V| = " << c.a_times_v[j].to_string()
          << ")";
    }
    out << "\n";
  }
  for (const auto& c : report.checks) {
    out << "  " << std::left << std::setw(22) << c.name << std::setw(16) << outcome_name(c.verdict.outcome)
        << c.verdict.witness << "\n";
  }
  out << (report.passes() ? "result: all necessary conditions pass\n" : "result: infeasible\n");
  return out.str();
}

std::string scan_summary(const ScanRow& row) {
  const Check* failure = row.report.first_failure();
  if (!failure) return "passes all necessary conditions";
  return std::string(failure->name) + ": " + failure->verdict.witness;
}

nlohmann::json scan_to_json(const std::vector<ScanRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    const Check* failure = row.report.first_failure();
    out.push_back({{"l", int_json(row.params.l)},
                   {"length", int_json(row.params.length)},
                   {"cardinality", row.params.cardinality.to_string()},
                   {"first_failure", failure ? nlohmann::json(failure->name) : nlohmann::json(nullptr)},
                   {"summary", scan_summary(row)},
                   {"report", report_to_json(row.report)}});
  }
  return out;
}

std::string scan_to_text(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "l" << std::setw(24) << "length" << std::setw(28) << "cardinality"
      << "result\n";
  for (const auto& row : rows) {
    std::string card = row.params.cardinality.to_string();
    if (card.size() > 26) {
      card = to_fraction_string(row.params.cardinality.coefficient()) == "1"
                 ? row.params.cardinality.base().str() + "^" + row.params.cardinality.exponent().str()
                 : card.substr(0, 23) + "...";
    }
    out << std::setw(4) << row.params.l.str() << std::setw(24) << row.params.length.str() << std::setw(28) << card
        << scan_summary(row) << "\n";
  }
  return out.str();
}

}  // namespace perfcol
