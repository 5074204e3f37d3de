#include "perfcol/fourier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "perfcol/feasibility.hpp"

namespace perfcol {

namespace {

void check_oracle_graph(const GraphSpec& g, std::uint64_t max_vertices) {
  if (g.alphabet() > 4) throw UnsupportedOperation("the Fourier oracle needs q in {2,3,4}");
  g.checked_vertex_count(EnumerationBudget{max_vertices});
}

std::int64_t re_times_two(int k) {
  // 2 Re(i^k)
  static constexpr std::int64_t table[4] = {2, 0, -2, 0};
  return table[k & 3];
}

}  // namespace

int inner_product(const GraphSpec& g, const Vertex& z, const Vertex& t) {
  g.validate(z);
  g.validate(t);
  int sum = 0;
  for (std::size_t i = 0; i < z.size(); ++i) sum += z[i] * t[i];
  return sum % g.alphabet();
}

Cyclo character_value(const GraphSpec& g, const Vertex& z, const Vertex& t) {
  if (g.alphabet() > 4) throw UnsupportedOperation("characters are implemented for q in {2,3,4}");
  return Cyclo::root_power(g.alphabet(), inner_product(g, z, t));
}

std::int64_t character_eigenvalue(const GraphSpec& g, const Vertex& z) {
  g.validate(z);
  std::int64_t lambda = 0;
  const int m = g.shrikhande_count();
  for (int i = 0; i < m; ++i) {
    const int a = z[2 * i];
    const int b = z[2 * i + 1];
    lambda += re_times_two(a) + re_times_two(b) + re_times_two(a + b);
  }
  for (int p = 2 * m; p < g.digit_count(); ++p) lambda += z[p] == 0 ? g.alphabet() - 1 : -1;
  return lambda;
}

Cyclo fourier_coefficient(const Coloring& f, int color, const Vertex& z) {
  const GraphSpec& g = f.graph();
  if (g.alphabet() > 4) throw UnsupportedOperation("characters are implemented for q in {2,3,4}");
  g.validate(z);
  const IndexedGraph graph(g, EnumerationBudget{f.colors().size()});
  const int q = g.alphabet();
  std::vector<std::int64_t> residues(q, 0);
  std::vector<int> digits(g.digit_count());
  for (VertexIndex x = 0; x < graph.vertex_count(); ++x) {
    if (f.color_of(x) != color) continue;
    graph.digits_of(x, digits);
    int sum = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) sum += z[i] * digits[i];
    ++residues[sum % q];
  }
  Cyclo out(q);
  for (int r = 0; r < q; ++r) out += residues[r] * Cyclo::root_power(q, -r);
  return out;
}

ColorSpectrum color_spectrum(const Coloring& f, int color, std::uint64_t max_vertices) {
  const GraphSpec& g = f.graph();
  check_oracle_graph(g, max_vertices);
  if (color < 0 || color >= f.k()) throw InputError("color " + std::to_string(color) + " out of range");
  const IndexedGraph graph(g, EnumerationBudget{max_vertices});
  const int q = g.alphabet();
  const int width = g.digit_count();

  std::vector<int> members;  // digits of the class, row by row
  std::vector<int> digits(width);
  ColorSpectrum out{g, color, 0, {}, {}};
  for (VertexIndex x = 0; x < graph.vertex_count(); ++x) {
    if (f.color_of(x) != color) continue;
    graph.digits_of(x, digits);
    members.insert(members.end(), digits.begin(), digits.end());
    ++out.class_size;
  }

  std::vector<Cyclo> conj_roots;
  for (int r = 0; r < q; ++r) conj_roots.push_back(Cyclo::root_power(q, -r));
  out.coefficients.reserve(graph.vertex_count());
  out.lambdas.reserve(graph.vertex_count());
  std::vector<std::int64_t> residues(q);
  for (VertexIndex zi = 0; zi < graph.vertex_count(); ++zi) {
    graph.digits_of(zi, digits);
    std::fill(residues.begin(), residues.end(), 0);
    for (std::size_t row = 0; row < members.size(); row += width) {
      int sum = 0;
      for (int i = 0; i < width; ++i) sum += digits[i] * members[row + i];
      ++residues[sum % q];
    }
    Cyclo c(q);
    for (int r = 0; r < q; ++r) c += residues[r] * conj_roots[r];
    out.coefficients.push_back(c);
    out.lambdas.push_back(character_eigenvalue(g, Vertex(digits)));
  }
  return out;
}

BigRational eigenspace_mass(const ColorSpectrum& s, std::int64_t lambda) {
  BigInt total = 0;
  for (std::size_t z = 0; z < s.coefficients.size(); ++z) {
    if (s.lambdas[z] == lambda) total += numerator_of(s.coefficients[z].norm() * 4);
  }
  // norms are multiples of 1/4 (q=3); the factor is removed here
  return BigRational(total, BigInt(4) * BigInt(s.coefficients.size()));
}

BigRational eigenspace_mass(const Coloring& f, int color, std::int64_t lambda) {
  return eigenspace_mass(color_spectrum(f, color), lambda);
}

BigInt integrality_witness(const ColorSpectrum& s, std::int64_t lambda) {
  const BigRational scaled = eigenspace_mass(s, lambda) * BigRational(BigInt(s.coefficients.size()));
  if (!is_integer(scaled)) {
    throw InternalError("eigenspace mass times |V| is " + to_fraction_string(scaled) + ", not an integer");
  }
  return numerator_of(scaled);
}

std::optional<Vertex> eigenfunction_violation(const GraphSpec& g, std::uint64_t max_vertices) {
  check_oracle_graph(g, max_vertices);
  const IndexedGraph graph(g, EnumerationBudget{max_vertices});
  const int q = g.alphabet();
  const int width = g.digit_count();
  const std::uint64_t count = graph.vertex_count();

  std::vector<int> all_digits(count * width);
  for (VertexIndex v = 0; v < count; ++v) graph.digits_of(v, std::span<int>(all_digits.data() + v * width, width));

  std::vector<Cyclo> roots;
  for (int r = 0; r < q; ++r) roots.push_back(Cyclo::root_power(q, r));
  std::vector<int> exponent(count);
  for (VertexIndex zi = 0; zi < count; ++zi) {
    const int* z = all_digits.data() + zi * width;
    for (VertexIndex t = 0; t < count; ++t) {
      int sum = 0;
      for (int i = 0; i < width; ++i) sum += z[i] * all_digits[t * width + i];
      exponent[t] = sum % q;
    }
    const Vertex zv(std::vector<int>(z, z + width));
    const std::int64_t lambda = character_eigenvalue(g, zv);
    for (VertexIndex v = 0; v < count; ++v) {
      Cyclo acc(q);
      graph.for_each_neighbor(v, [&](VertexIndex w) { acc += roots[exponent[w]]; });
      if (!(acc == lambda * roots[exponent[v]])) return zv;
    }
  }
  return std::nullopt;
}

bool OracleReport::agrees() const {
  if (!matrix || !parseval || !support || !well_formed || rows.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const OracleRow& r) { return r.matches; });
}

OracleReport run_oracle(const Coloring& f, int color, std::uint64_t max_vertices) {
  const GraphSpec& g = f.graph();
  check_oracle_graph(g, max_vertices);
  if (color < 0 || color >= f.k()) throw InputError("color " + std::to_string(color) + " out of range");
  OracleReport out{g, color, std::nullopt, {}, false, false, false, {}};

  const PerfectnessResult perfect = verify_perfect_coloring(f);
  if (!perfect.perfect()) {
    out.note = "coloring is not perfect";
    return out;
  }
  out.matrix = perfect.matrix;
  const FeasibilityReport t1 = theorem1_check(GraphParams::of(g), *out.matrix, color);
  if (t1.colors.empty()) {
    out.note = "theorem1_check did not produce a-values: " + (t1.first_failure() ? t1.first_failure()->verdict.witness : "");
    return out;
  }
  const ColorAnalysis& analysis = t1.colors.front();
  std::map<std::int64_t, BigRational> expected;
  expected[t1.spectrum->spectrum.lambda(0).convert_to<std::int64_t>()] = analysis.principal_mass.materialize();
  for (std::size_t j = 0; j < analysis.lambdas.size(); ++j) {
    expected[analysis.lambdas[j].convert_to<std::int64_t>()] = analysis.a_values[j].materialize();
  }

  const ColorSpectrum spectrum = color_spectrum(f, color, max_vertices);
  BigRational total = 0;
  for (std::int64_t lambda : graph_eigenvalues(g)) {
    OracleRow row;
    row.lambda = lambda;
    row.mass = eigenspace_mass(spectrum, lambda);
    row.mass_times_v = integrality_witness(spectrum, lambda);
    auto it = expected.find(lambda);
    row.theorem1 = it == expected.end() ? BigRational(0) : it->second;
    row.matches = row.mass == row.theorem1;
    total += row.mass;
    out.rows.push_back(std::move(row));
  }
  out.parseval = total == BigRational(BigInt(spectrum.class_size));
  out.support = true;
  out.well_formed = true;
  for (std::size_t z = 0; z < spectrum.coefficients.size(); ++z) {
    if (!expected.contains(spectrum.lambdas[z]) && !spectrum.coefficients[z].is_zero()) out.support = false;
    if (!spectrum.coefficients[z].well_formed()) out.well_formed = false;
  }
  return out;
}

nlohmann::json oracle_to_json(const OracleReport& report) {
  nlohmann::json j;
  j["graph"] = report.graph.to_string();
  j["color"] = report.color;
  j["matrix"] = report.matrix ? quotient_to_json(*report.matrix) : nlohmann::json(nullptr);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"lambda", r.lambda},
                    {"mass", to_fraction_string(r.mass)},
                    {"mass_times_V", r.mass_times_v.str()},
                    {"theorem1", to_fraction_string(r.theorem1)},
                    {"matches_theorem1", r.matches}});
  }
  j["eigenspaces"] = rows;
  j["parseval"] = report.parseval;
  j["support"] = report.support;
  j["well_formed"] = report.well_formed;
  j["agrees"] = report.agrees();
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

std::string oracle_to_text(const OracleReport& report) {
  std::ostringstream out;
  out << "graph: " << report.graph.to_string() << "  color: " << report.color << "\n";
  if (report.matrix) out << "matrix: " << format_quotient(*report.matrix) << "\n";
  for (const auto& r : report.rows) {
    out << "  lambda " << r.lambda << ": mass " << to_fraction_string(r.mass) << ", mass*|V| " << r.mass_times_v
        << ", theorem1 " << to_fraction_string(r.theorem1) << (r.matches ? "  ok" : "  MISMATCH") << "\n";
  }
  out << "parseval " << (report.parseval ? "ok" : "FAIL") << ", support " << (report.support ? "ok" : "FAIL")
      << ", form " << (report.well_formed ? "ok" : "FAIL") << "\n";
  if (!report.note.empty()) out << report.note << "\n";
  out << (report.agrees() ? "oracle agrees\n" : "oracle disagrees\n");
  return out.str();
}

}  // namespace perfcol
