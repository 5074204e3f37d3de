#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "perfcol/graphs.hpp"
#include "perfcol/quotient_matrix.hpp"

namespace perfcol {

/// code_distance of a singleton.  Singletons count as (trivial) extended
/// perfect codes, so this is a value rather than an error.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

class Code {
 public:
  /// InputError when empty, when a word is invalid or repeated.
  Code(GraphSpec graph, std::vector<Vertex> words);

  const GraphSpec& graph() const { return graph_; }
  const std::vector<Vertex>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

 private:
  GraphSpec graph_;
  std::vector<Vertex> words_;
};

/// Total map from vertex index to color in {0..k-1}.
class Coloring {
 public:
  /// InputError unless colors has one entry per vertex and is onto {0..k-1}.
  Coloring(GraphSpec graph, std::vector<int> colors,
           const EnumerationBudget& budget = EnumerationBudget::from_environment());

  const GraphSpec& graph() const { return graph_; }
  int k() const { return k_; }
  std::span<const int> colors() const { return colors_; }
  int color_of(VertexIndex v) const { return colors_[v]; }
  std::vector<std::uint64_t> class_sizes() const;

 private:
  GraphSpec graph_;
  std::vector<int> colors_;
  int k_ = 0;
};

/// Two same-colored vertices whose neighborhood color profiles differ.
struct Counterexample {
  int color = 0;
  Vertex first;
  Vertex second;
  std::vector<std::int64_t> first_profile;
  std::vector<std::int64_t> second_profile;
};

struct PerfectnessResult {
  std::optional<QuotientMatrix> matrix;
  std::optional<Counterexample> counterexample;

  bool perfect() const { return matrix.has_value(); }
};

struct Coordinate {
  enum class Kind { Shrikhande, Complete };
  Kind kind = Kind::Complete;
  int index = 1;  // 1-based within its kind

  static Coordinate shrikhande(int i) { return {Kind::Shrikhande, i}; }
  static Coordinate complete(int i) { return {Kind::Complete, i}; }
};

int code_distance(const Code& c);

/// A pair of words at minimum distance, first in enumeration order; nullopt
/// for a singleton.
std::optional<std::pair<Vertex, Vertex>> closest_pair(const Code& c);

int covering_radius(const Code& c, const EnumerationBudget& budget = EnumerationBudget::from_environment());

/// Deletes a K_q coordinate.  UnsupportedOperation for Shrikhande coordinates.
Code projection(const Code& c, Coordinate position);
inline Code projection(const Code& c, int complete_index) { return projection(c, Coordinate::complete(complete_index)); }

bool is_1perfect(const Code& c, const EnumerationBudget& budget = EnumerationBudget::from_environment());

/// Distance 4 (or a singleton) and a 1-perfect projection at the first K_q
/// coordinate.  For D(m,0) there is no such coordinate and the parameter
/// test is used: 2m = (4^l+2)/3, distance 4, |C| = 4^(2m-l-1).
bool is_extended_1perfect(const Code& c, const EnumerationBudget& budget = EnumerationBudget::from_environment());

/// Color = distance to the code; k = covering radius + 1.
Coloring distance_coloring(const Code& c, const EnumerationBudget& budget = EnumerationBudget::from_environment());

/// Quotient matrix, or the first counterexample in enumeration order.
PerfectnessResult verify_perfect_coloring(const Coloring& f);

PerfectnessResult is_completely_regular(const Code& c,
                                        const EnumerationBudget& budget = EnumerationBudget::from_environment());

struct ExtendedParams {
  BigInt l;
  BigInt length;            // n for H(n,q), 2m+n for D(m,n)
  ScaledValue cardinality;  // q^(length-l-1)
};

/// Length and forced cardinality of an extended 1-perfect code for a given l,
/// or nullopt when (q^l+q-2) is not divisible by (q-1).
std::optional<ExtendedParams> admissible_extended_params(Family family, int q, const BigInt& l);

/// The tridiagonal matrix of an extended 1-perfect code:
///   [[0, N(q-1), 0], [1, a_1, (N-1)(q-1)], [0, N, N(q-1)-N]]
/// with a_1 = q-2 for H(N,q) and 2 for Doob graphs (which is q-2 at q=4).
QuotientMatrix extended_perfect_matrix(const GraphParams& g);

/// The [6,3,4] hexacode over GF(4): the first 3x3 parity block, in
/// lexicographic order, whose code has minimum distance 4.
Code search_hexacode();

int gf4_add(int a, int b);
int gf4_mul(int a, int b);

/// Code file: graph spec line, then one vertex per line.  Blank lines and
/// lines starting with '#' are ignored.
Code read_code(std::istream& in);
void write_code(std::ostream& out, const Code& c);

/// Coloring file: graph spec line, then `vertex : color` per vertex.
Coloring read_coloring(std::istream& in, const EnumerationBudget& budget = EnumerationBudget::from_environment());
void write_coloring(std::ostream& out, const Coloring& f);

}  // namespace perfcol
