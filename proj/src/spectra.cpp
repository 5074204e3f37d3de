#include "perfcol/spectra.hpp"

#include <algorithm>
#include <sstream>

#include "perfcol/errors.hpp"
#include "perfcol/linalg.hpp"

namespace perfcol {

namespace {

std::string format_polynomial(const Polynomial<BigInt>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || i == 0) out << magnitude;
    if (i > 0) out << "x";
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

BigInt spectral_bound(const QuotientMatrix& s) {
  BigInt bound = 0;
  for (Eigen::Index i = 0; i < s.rows(); ++i) bound = std::max(bound, BigInt(s.row(i).sum()));
  return bound;
}

}  // namespace

std::string SpectrumResult::witness() const {
  if (lemma2_holds) return {};
  std::string out = "det(xI - S) = " + format_polynomial(characteristic) + " does not split over the graph spectrum";
  if (!foreign_roots.empty()) {
    out += "; integer roots outside the spectrum:";
    for (const auto& r : foreign_roots) out += " " + r.str();
  }
  if (residual.degree() > 0) out += "; factor without integer roots: " + format_polynomial(residual);
  return out;
}

std::vector<BigInt> integer_eigenvalues_by_trial(const Polynomial<BigInt>& p, const GraphParams& g) {
  std::vector<BigInt> roots;
  if (g.length() + 1 > kTrialDivisionLimit) {
    throw ResourceError("trial division over " + BigInt(g.length() + 1).str() + " candidate eigenvalues");
  }
  const long count = g.length().convert_to<long>();
  for (long i = count; i >= 0; --i) {
    const BigInt lambda = g.degree() - BigInt(g.alphabet()) * i;
    if (p(lambda) == 0) roots.push_back(lambda);
  }
  return roots;
}

std::vector<BigInt> integer_eigenvalues_by_sturm(const Polynomial<BigInt>& p, const GraphParams& g) {
  std::vector<BigInt> roots;
  for (auto& r : integer_roots_in(p, -g.degree(), g.degree())) {
    if (g.has_eigenvalue(r)) roots.push_back(std::move(r));
  }
  return roots;
}

SpectrumResult quotient_eigenvalues(const QuotientMatrix& s, const GraphParams& g) {
  validate_quotient(s);
  SpectrumResult result;
  result.characteristic = characteristic_polynomial(s);

  const bool use_trial = g.length() + 1 <= kTrialDivisionLimit;
  std::vector<BigInt> members =
      use_trial ? integer_eigenvalues_by_trial(result.characteristic, g) : integer_eigenvalues_by_sturm(result.characteristic, g);

  Polynomial<BigInt> rest = result.characteristic;
  for (const auto& lambda : members) {
    Eigenvalue e{lambda, 0};
    for (;;) {
      auto [quotient, remainder] = divide_linear(rest, lambda);
      if (remainder != 0) break;
      rest = std::move(quotient);
      ++e.multiplicity;
    }
    result.spectrum.eigenvalues.push_back(std::move(e));
  }
  std::sort(result.spectrum.eigenvalues.begin(), result.spectrum.eigenvalues.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.value > b.value; });

  if (rest.degree() > 0) {
    const BigInt bound = spectral_bound(s);
    result.foreign_roots = integer_roots_in(rest, -bound, bound);
    for (const auto& r : result.foreign_roots) {
      for (;;) {
        auto [quotient, remainder] = divide_linear(rest, r);
        if (remainder != 0) break;
        rest = std::move(quotient);
      }
    }
  }
  result.residual = rest;
  result.lemma2_holds = result.foreign_roots.empty() && rest.degree() <= 0;
  return result;
}

bool strongly_connected_support(const QuotientMatrix& s) {
  const Eigen::Index k = s.rows();
  auto reaches_all = [&](bool transpose) {
    std::vector<bool> seen(k, false);
    std::vector<Eigen::Index> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const Eigen::Index i = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < k; ++j) {
        const BigInt& entry = transpose ? s(j, i) : s(i, j);
        if (entry > 0 && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(false) && reaches_all(true);
}

ClassSizes class_sizes(const QuotientMatrix& s, const GraphParams& g) {
  validate_quotient(s);
  const BigInt degree = g.degree();
  validate_row_sums(s, degree);
  if (!strongly_connected_support(s)) {
    throw UnderdeterminedError("quotient support is not strongly connected; class sizes are not determined");
  }
  const Eigen::Index k = s.rows();

  // Left eigenvector for the degree, normalized to sum 1.
  DenseMatrix<BigRational> system(k + 1, k);
  system.topRows(k) = s.transpose().cast<BigRational>();
  for (Eigen::Index i = 0; i < k; ++i) system(i, i) -= BigRational(degree);
  system.row(k).setConstant(BigRational(1));
  DenseVector<BigRational> rhs = DenseVector<BigRational>::Zero(k + 1);
  rhs(k) = 1;
  auto solved = solve_exact(system, rhs);
  if (solved.status != SolveStatus::Unique) {
    throw UnderdeterminedError("class size relations do not have a unique solution");
  }

  ClassSizes out;
  out.total = g.vertex_count();
  out.feasible = true;
  for (Eigen::Index i = 0; i < k; ++i) {
    out.fractions.push_back(solved.solution(i));
    out.sizes.push_back(ScaledValue(solved.solution(i), BigInt(g.alphabet()), g.length()));
  }
  auto fail = [&](std::string why) {
    if (out.feasible) out.witness = std::move(why);
    out.feasible = false;
  };
  for (Eigen::Index i = 0; i < k && out.feasible; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      if (BigRational(s(i, j)) * out.fractions[i] != BigRational(s(j, i)) * out.fractions[j]) {
        fail("s_" + std::to_string(i) + std::to_string(j) + " |f^-1(" + std::to_string(i) + ")| != s_" +
             std::to_string(j) + std::to_string(i) + " |f^-1(" + std::to_string(j) + ")|");
        break;
      }
    }
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    if (out.fractions[i] <= 0) {
      fail("|f^-1(" + std::to_string(i) + ")| = " + out.sizes[i].to_string() + " is not positive");
    } else if (!out.sizes[i].is_integer()) {
      fail("|f^-1(" + std::to_string(i) + ")| = " + out.sizes[i].to_string() + " is not an integer");
    }
  }
  return out;
}

std::vector<BigInt> power_diagonal(const QuotientMatrix& s, int color, int t_max) {
  if (t_max < 0) throw InputError("t_max must be non-negative");
  if (color < 0 || color >= s.rows()) throw InputError("color out of range");
  std::vector<BigInt> out;
  QuotientMatrix power = QuotientMatrix::Identity(s.rows(), s.cols());
  for (int t = 0; t <= t_max; ++t) {
    out.push_back(power(color, color));
    if (t < t_max) power = (power * s).eval();
  }
  return out;
}

std::vector<BigRational> apply_adjacency(const GraphSpec& g, std::span<const BigRational> f,
                                         const EnumerationBudget& budget) {
  const IndexedGraph graph(g, budget);
  return apply_adjacency<BigRational>(graph, f);
}

}  // namespace perfcol
