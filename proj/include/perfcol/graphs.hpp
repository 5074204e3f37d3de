#pragma once

// Implicit Hamming graphs H(n,q), the Shrikhande graph and Doob graphs
// D(m,n) = Sh^m x K_4^n.  Adjacency is computed from coordinates; no
// adjacency structure is ever stored.
//
// A vertex is a flat digit string.  Hamming: n digits in Z_q.  Doob: the m
// Shrikhande pairs come first as 2m digits (x_1,y_1,...,x_m,y_m), then the
// n K_4 digits, all in Z_4.  Vertex indices read the digit string as a
// base-q number with the first digit most significant, which is also the
// enumeration order.

#include <array>
#include <compare>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perfcol/numeric.hpp"

namespace perfcol {

enum class Family { Hamming, Doob };

using VertexIndex = std::uint64_t;

/// Connecting set of the Shrikhande graph on Z_4^2.
inline constexpr std::array<std::array<int, 2>, 6> kShrikhandeConnectingSet{
    {{0, 1}, {1, 0}, {0, 3}, {3, 0}, {1, 1}, {3, 3}}};

/// 0 for a zero difference, 1 inside the connecting set, 2 otherwise.
int shrikhande_distance(int dx, int dy);

class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> digits) : digits_(std::move(digits)) {}

  std::span<const int> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_[i]; }

  auto operator<=>(const Vertex&) const = default;

 private:
  std::vector<int> digits_;
};

struct IntersectionArray {
  std::vector<std::int64_t> b;  // b_0 .. b_{d-1}
  std::vector<std::int64_t> c;  // c_1 .. c_d

  int diameter() const { return static_cast<int>(c.size()); }
  std::int64_t b_at(int i) const { return i < diameter() ? b[i] : 0; }
  std::int64_t c_at(int i) const { return i == 0 ? 0 : c[i - 1]; }
  std::int64_t a_at(int i) const { return b[0] - b_at(i) - c_at(i); }

  bool operator==(const IntersectionArray&) const = default;
};

/// Enumeration limit for every exhaustive operation.
struct EnumerationBudget {
  std::uint64_t max_vertices = std::uint64_t{1} << 24;

  /// Default budget, overridden by PERFCOL_MAX_VERTICES when set.
  static EnumerationBudget from_environment();
};

class GraphSpec {
 public:
  GraphSpec() = default;  // H(1,2)

  static GraphSpec hamming(int n, int q);
  /// D(0,n) is returned as H(n,4).
  static GraphSpec doob(int m, int n);

  /// `hamming:n=<int>,q=<int>` or `doob:m=<int>,n=<int>`.
  static GraphSpec parse(std::string_view text);
  std::string to_string() const;

  Family family() const { return family_; }
  int shrikhande_count() const { return m_; }
  int complete_count() const { return n_; }
  int alphabet() const { return q_; }
  int digit_count() const { return 2 * m_ + n_; }
  int diameter() const { return 2 * m_ + n_; }
  std::int64_t degree() const { return 6 * static_cast<std::int64_t>(m_) + static_cast<std::int64_t>(n_) * (q_ - 1); }
  BigInt vertex_count() const;

  /// Vertex count, or ResourceError naming it when over budget.
  std::uint64_t checked_vertex_count(const EnumerationBudget& budget) const;

  Vertex make_vertex(std::vector<int> digits) const;
  void validate(const Vertex& v) const;

  bool operator==(const GraphSpec&) const = default;

 private:
  GraphSpec(Family family, int m, int n, int q) : family_(family), m_(m), n_(n), q_(q) {}

  Family family_ = Family::Hamming;
  int m_ = 0;
  int n_ = 1;
  int q_ = 2;
};

std::vector<Vertex> neighbors(const GraphSpec& g, const Vertex& v);
int distance(const GraphSpec& g, const Vertex& u, const Vertex& v);
IntersectionArray intersection_array(const GraphSpec& g);

/// Distinct adjacency eigenvalues, largest first.
std::vector<std::int64_t> graph_eigenvalues(const GraphSpec& g);

/// Parses the vertex text format; coordinates are reduced modulo the alphabet.
Vertex parse_vertex(const GraphSpec& g, std::string_view text);
std::string format_vertex(const GraphSpec& g, const Vertex& v);

/// Budget-checked index arithmetic over the vertex set.
class IndexedGraph {
 public:
  explicit IndexedGraph(GraphSpec g, const EnumerationBudget& budget = EnumerationBudget::from_environment());

  const GraphSpec& spec() const { return spec_; }
  std::uint64_t vertex_count() const { return count_; }
  std::int64_t degree() const { return spec_.degree(); }

  VertexIndex index_of(const Vertex& v) const;
  Vertex vertex_at(VertexIndex index) const;
  int digit(VertexIndex index, int position) const {
    return static_cast<int>((index / place_[position]) % radix_);
  }
  void digits_of(VertexIndex index, std::span<int> out) const;

  template <typename F>
  void for_each_neighbor(VertexIndex index, F&& visit) const {
    const int m = spec_.shrikhande_count();
    for (int i = 0; i < m; ++i) {
      const int px = 2 * i;
      const int py = 2 * i + 1;
      const int x = digit(index, px);
      const int y = digit(index, py);
      const VertexIndex base = index - x * place_[px] - y * place_[py];
      for (const auto& s : kShrikhandeConnectingSet) {
        visit(base + ((x + s[0]) & 3) * place_[px] + ((y + s[1]) & 3) * place_[py]);
      }
    }
    for (int p = 2 * m; p < spec_.digit_count(); ++p) {
      const int d = digit(index, p);
      const VertexIndex base = index - d * place_[p];
      for (int a = 0; a < radix_; ++a) {
        if (a != d) visit(base + a * place_[p]);
      }
    }
  }

  int distance(VertexIndex u, VertexIndex v) const;

 private:
  GraphSpec spec_;
  std::uint64_t count_ = 0;
  int radix_ = 2;
  std::vector<VertexIndex> place_;
};

/// Lexicographic vertex sequence (first digit most significant).
class VertexRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const IndexedGraph* graph, VertexIndex index) : graph_(graph), index_(index) {}
    Vertex operator*() const { return graph_->vertex_at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    bool operator==(const iterator& other) const { return index_ == other.index_; }

   private:
    const IndexedGraph* graph_ = nullptr;
    VertexIndex index_ = 0;
  };

  explicit VertexRange(IndexedGraph graph) : graph_(std::move(graph)) {}
  iterator begin() const { return {&graph_, 0}; }
  iterator end() const { return {&graph_, graph_.vertex_count()}; }
  std::uint64_t size() const { return graph_.vertex_count(); }

 private:
  IndexedGraph graph_;
};

VertexRange enumerate_vertices(const GraphSpec& g,
                               const EnumerationBudget& budget = EnumerationBudget::from_environment());

/// Parameters of H(N,q) or D(m,n) with 2m+n = N at arbitrary size.  This is
/// all the feasibility checks need: the intersection array, the spectrum and
/// |V| = q^N.  Doob graphs share everything with H(N,4) except the family tag.
class GraphParams {
 public:
  static GraphParams of(const GraphSpec& g);
  static GraphParams hamming(BigInt n, int q);
  /// D(m,n) with 2m+n = length, labelled with m = length/2, n = length%2.
  static GraphParams doob(BigInt length);

  Family family() const { return family_; }
  int alphabet() const { return q_; }
  const BigInt& length() const { return length_; }
  const std::string& label() const { return label_; }

  BigInt degree() const { return length_ * (q_ - 1); }
  BigInt diameter() const { return length_; }
  BigInt b(const BigInt& i) const;
  BigInt c(const BigInt& i) const;
  BigInt a(const BigInt& i) const { return degree() - b(i) - c(i); }

  /// |V| = q^N.
  ScaledValue vertex_count() const { return ScaledValue(BigRational(1), BigInt(q_), length_); }

  /// lambda = (q-1)N - q*i for some 0 <= i <= N.
  bool has_eigenvalue(const BigInt& lambda) const;

  /// Whether a_j |V| must be an integer: Hamming with
  /// q in {2,3,4}, or any Doob graph.
  bool integrality_applies() const;

 private:
  Family family_ = Family::Hamming;
  int q_ = 2;
  BigInt length_ = 1;
  std::string label_;
};

}  // namespace perfcol
