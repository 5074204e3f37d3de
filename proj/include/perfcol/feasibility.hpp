#pragma once

// Necessary conditions for a perfect coloring with quotient matrix S of a
// Hamming or Doob graph, run as a fixed pipeline:
//
//   lemma2                quotient eigenvalues are graph eigenvalues
//   class_sizes           s_ij |f^-1(i)| = s_ji |f^-1(j)| has a positive integral solution
//   theorem1_nonneg       the eigenspace masses a_1..a_l of each color class are >= 0
//   theorem1_integrality  a_j |V| is an integer (q in {2,3,4} or Doob only)
//   parity                extended-perfect shape: W^1_1 = 2 W^0_2 must be even
//   shell_count           extended-perfect shape: shell counts around a color-2 vertex
//
// Every verdict is retained; a failing check does not stop later ones unless
// their input is missing.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "perfcol/codes.hpp"
#include "perfcol/graphs.hpp"
#include "perfcol/quotient_matrix.hpp"
#include "perfcol/spectra.hpp"

namespace perfcol {

enum class Outcome { Pass, Fail, NotApplicable };

std::string outcome_name(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::NotApplicable;
  std::string witness;  // offending exact value, or the reason for n/a

  static Verdict pass(std::string note = {}) { return {Outcome::Pass, std::move(note)}; }
  static Verdict fail(std::string witness) { return {Outcome::Fail, std::move(witness)}; }
  static Verdict not_applicable(std::string reason) { return {Outcome::NotApplicable, std::move(reason)}; }

  bool failed() const { return outcome == Outcome::Fail; }
};

struct Check {
  std::string name;
  Verdict verdict;
};

namespace check_names {
inline constexpr const char* kLemma2 = "lemma2";
inline constexpr const char* kClassSizes = "class_sizes";
inline constexpr const char* kNonneg = "theorem1_nonneg";
inline constexpr const char* kIntegrality = "theorem1_integrality";
inline constexpr const char* kParity = "parity";
inline constexpr const char* kShellCount = "shell_count";
}  // namespace check_names

/// The Vandermonde system for one color i:
///   sum_j lambda_j^t a_j = |f^-1(i)| (S^t)_ii - |f^-1(i)|^2/|V| lambda_0^t,  t = 0..l-1.
struct ColorAnalysis {
  int color = 0;
  std::vector<BigInt> lambdas;           // lambda_1..lambda_l
  std::vector<BigInt> diagonal;          // (S^t)_ii, t = 0..l-1
  std::vector<ScaledValue> a_values;     // a_1..a_l
  std::vector<ScaledValue> a_times_v;    // a_j |V|
  ScaledValue principal_mass;            // |f^-1(i)|^2 / |V|, the lambda_0 share
  Verdict nonnegative;
  Verdict integrality;
};

/// W^i_j: vertices of color i at distance j from a fixed color-2 vertex.
struct ShellTable {
  std::map<std::pair<int, int>, BigInt> counts;
  std::optional<BigInt> edges_w1_to_w12;  // w in the shell argument

  std::optional<BigInt> at(int color, int dist) const {
    auto it = counts.find({color, dist});
    if (it == counts.end()) return std::nullopt;
    return it->second;
  }
};

/// Coefficient A in |W^1_2| s_10 = A |W^0_2| + c_3 |W^0_3|: the number of
/// neighbours at distance 2 of a distance-2 vertex.  The graph's a_2 by
/// default; Literal6 reproduces the value printed for the 2m+n = 22 case.
enum class ShellCoefficient { IntersectionNumber, Literal6 };

struct ParityResult {
  Verdict verdict;
  ShellTable table;
};

struct ShellResult {
  Verdict verdict;
  ShellTable table;
  std::optional<BigRational> w0_3;  // solved |W^0_3|, integral or not
  BigInt coefficient;               // A actually used
};

/// s_00 = s_02 = s_20 = 0, s_10 = 1 on a 3x3 matrix.
bool has_extended_shape(const QuotientMatrix& s);

ParityResult parity_check(const QuotientMatrix& s);

ShellResult shell_count_check(const GraphParams& g, const QuotientMatrix& s,
                              ShellCoefficient coefficient = ShellCoefficient::IntersectionNumber);

struct FeasibilityReport {
  GraphParams graph;
  QuotientMatrix matrix;
  std::optional<SpectrumResult> spectrum;
  std::optional<ClassSizes> sizes;
  std::vector<ColorAnalysis> colors;
  std::optional<ShellResult> shell;
  std::optional<ParityResult> parity;
  std::vector<Check> checks;

  bool passes() const;
  /// First failing check in pipeline order, or nullptr.
  const Check* first_failure() const;
  const Check& check(const std::string& name) const;
};

struct AnalyzeOptions {
  std::optional<int> color;  // all colors when empty
  ShellCoefficient shell_coefficient = ShellCoefficient::IntersectionNumber;
};

/// One color; runs lemma2, class_sizes, theorem1_nonneg and theorem1_integrality.
/// InputError when S is malformed or its rows do not sum to the degree.
FeasibilityReport theorem1_check(const GraphParams& g, const QuotientMatrix& s, int color);

/// The full pipeline.
FeasibilityReport analyze(const GraphParams& g, const QuotientMatrix& s, const AnalyzeOptions& options = {});

/// System for one color given spectrum and sizes; InternalError if the
/// solution fails re-substitution.
ColorAnalysis solve_color_system(const GraphParams& g, const QuotientMatrix& s, const SpectrumInfo& spectrum,
                                 const ClassSizes& sizes, int color);

/// a_2 |V| for the extended-perfect matrix in closed form.
///   H(n,3):  3^(2n-l-3) * 8 / (3^(l-1) + 1),      n = (3^l+1)/2
///   Doob:    4^(2N-l-3) * 27 / (4^(l-1) + 2),     N = 2m+n = (4^l+2)/3
/// InputError for other families or l < 1.
ScaledValue prop1_closed_form(Family family, int q, const BigInt& l);

struct ScanRow {
  ExtendedParams params;
  FeasibilityReport report;
};

/// Runs the pipeline on the extended-perfect matrix for each l in range.
/// Doob rows use D(floor(N/2), N mod 2).
std::vector<ScanRow> scan_extended(Family family, int q, int l_min, int l_max, const AnalyzeOptions& options = {});

nlohmann::json report_to_json(const FeasibilityReport& report);
std::string report_to_text(const FeasibilityReport& report);

nlohmann::json scan_to_json(const std::vector<ScanRow>& rows);
std::string scan_to_text(const std::vector<ScanRow>& rows);

/// "passes all necessary conditions" or "<check>: <witness>".
std::string scan_summary(const ScanRow& row);

}  // namespace perfcol
