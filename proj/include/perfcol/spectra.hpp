#pragma once

#include <span>
#include <string>
#include <vector>

#include "perfcol/graphs.hpp"
#include "perfcol/polynomial.hpp"
#include "perfcol/quotient_matrix.hpp"

namespace perfcol {

struct Eigenvalue {
  BigInt value;
  int multiplicity = 1;
};

/// Distinct eigenvalues lambda_0 > lambda_1 > ... > lambda_l of S.
struct SpectrumInfo {
  std::vector<Eigenvalue> eigenvalues;

  int l() const { return static_cast<int>(eigenvalues.size()) - 1; }
  const BigInt& lambda(int j) const { return eigenvalues[j].value; }
};

struct SpectrumResult {
  /// Every root of det(xI - S) is an eigenvalue of the graph.
  bool lemma2_holds = false;
  SpectrumInfo spectrum;
  Polynomial<BigInt> characteristic;
  /// Integer roots that are not graph eigenvalues.
  std::vector<BigInt> foreign_roots;
  /// What is left of the characteristic polynomial after removing every
  /// integer root: roots here are irrational or complex.
  Polynomial<BigInt> residual;

  std::string witness() const;
};

/// Characteristic polynomial of S, factored over the graph's eigenvalues.
/// Candidates are tried one by one when the graph has at most
/// kTrialDivisionLimit eigenvalues; larger spectra isolate the integer roots
/// first (Sturm) and then test membership.
SpectrumResult quotient_eigenvalues(const QuotientMatrix& s, const GraphParams& g);
inline SpectrumResult quotient_eigenvalues(const QuotientMatrix& s, const GraphSpec& g) {
  return quotient_eigenvalues(s, GraphParams::of(g));
}

inline constexpr long kTrialDivisionLimit = 4096;

/// Root isolation strategies, exposed so tests can compare them.
std::vector<BigInt> integer_eigenvalues_by_trial(const Polynomial<BigInt>& p, const GraphParams& g);
std::vector<BigInt> integer_eigenvalues_by_sturm(const Polynomial<BigInt>& p, const GraphParams& g);

/// Color class sizes |f^-1(i)| forced by s_ij |f^-1(i)| = s_ji |f^-1(j)|.
struct ClassSizes {
  std::vector<BigRational> fractions;  // |f^-1(i)| / |V|
  std::vector<ScaledValue> sizes;      // fractions[i] * |V|
  ScaledValue total;                   // |V|
  bool feasible = false;
  std::string witness;  // why infeasible
};

/// UnderdeterminedError when the directed support of S is not strongly
/// connected; InputError when row sums differ from the graph degree.
ClassSizes class_sizes(const QuotientMatrix& s, const GraphParams& g);
inline ClassSizes class_sizes(const QuotientMatrix& s, const GraphSpec& g) {
  return class_sizes(s, GraphParams::of(g));
}

bool strongly_connected_support(const QuotientMatrix& s);

/// (S^t)_{ii} for t = 0..t_max.
std::vector<BigInt> power_diagonal(const QuotientMatrix& s, int color, int t_max);

/// (M f)(x) = sum of f over the neighbours of x.
template <typename T>
std::vector<T> apply_adjacency(const IndexedGraph& graph, std::span<const T> f) {
  if (f.size() != graph.vertex_count()) throw InputError("function size does not match the vertex count");
  std::vector<T> out(f.size(), T(0));
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    T acc(0);
    graph.for_each_neighbor(v, [&](VertexIndex w) { acc += f[w]; });
    out[v] = acc;
  }
  return out;
}

std::vector<BigRational> apply_adjacency(const GraphSpec& g, std::span<const BigRational> f,
                                         const EnumerationBudget& budget = EnumerationBudget::from_environment());

}  // namespace perfcol
