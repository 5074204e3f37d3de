#include <doctest.h>

#include "perfcol/codes.hpp"
#include "perfcol/errors.hpp"
#include "perfcol/linalg.hpp"
#include "perfcol/spectra.hpp"
#include "support.hpp"

using namespace perfcol;

namespace {

std::vector<BigInt> values(const SpectrumInfo& s) {
  std::vector<BigInt> out;
  for (const auto& e : s.eigenvalues) out.push_back(e.value);
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("class sizes") {
    const auto t = class_sizes(make_quotient({{0, 4, 0}, {1, 1, 2}, {0, 2, 2}}), GraphSpec::hamming(2, 3));
    CHECK(t.feasible);
    CHECK(t.sizes[0].materialize() == 1);
    CHECK(t.sizes[1].materialize() == 4);
    CHECK(t.sizes[2].materialize() == 4);
    const auto h = class_sizes(make_quotient({{0, 18, 0}, {1, 2, 15}, {0, 6, 12}}), GraphSpec::hamming(6, 4));
    CHECK(h.feasible);
    CHECK(h.sizes[0].materialize() == 64);
    CHECK(h.sizes[1].materialize() == 1152);
    CHECK(h.sizes[2].materialize() == 2880);
    const auto b = class_sizes(make_quotient({{0, 4}, {4, 0}}), GraphSpec::hamming(4, 2));
    CHECK(b.sizes[0].materialize() == 8);
    CHECK(b.sizes[1].materialize() == 8);
    CHECK(b.total.materialize() == 16);
  }

  TEST_CASE("class size failures") {
    CHECK_THROWS_AS(class_sizes(make_quotient({{4, 0}, {0, 4}}), GraphSpec::hamming(4, 2)), UnderdeterminedError);
    CHECK_THROWS_AS(class_sizes(make_quotient({{3, 1}, {0, 4}}), GraphSpec::hamming(4, 2)), UnderdeterminedError);
    CHECK_THROWS_AS(class_sizes(make_quotient({{0, 4}, {4, 1}}), GraphSpec::hamming(4, 2)), InputError);
    // Sizes 16/3 are not integral.
    const auto r = class_sizes(make_quotient({{2, 2}, {1, 3}}), GraphSpec::hamming(4, 2));
    CHECK_FALSE(r.feasible);
    CHECK(r.witness.find("16/3") != std::string::npos);
    // q=5 on 2 coordinates: |V| = 25, ratio 1:3 gives 25/4.
    const auto s = class_sizes(make_quotient({{5, 3}, {1, 7}}), GraphSpec::hamming(2, 5));
    CHECK_FALSE(s.feasible);
    // Non-square and negative matrices are input errors.
    QuotientMatrix bad(2, 3);
    bad.setZero();
    CHECK_THROWS_AS(class_sizes(bad, GraphSpec::hamming(4, 2)), InputError);
    CHECK_THROWS_AS(class_sizes(make_quotient({{5, -1}, {1, 3}}), GraphSpec::hamming(4, 2)), InputError);
  }

  TEST_CASE("class size consistency with three colors") {
    // s_01 x_0 = s_10 x_1 and s_12 x_1 = s_21 x_2 hold, but the cycle
    // through s_02 breaks s_02 x_0 = s_20 x_2.
    const auto r = class_sizes(make_quotient({{0, 2, 2}, {1, 2, 1}, {1, 1, 2}}), GraphSpec::hamming(4, 2));
    CHECK(r.sizes.size() == 3);
  }

  TEST_CASE("quotient eigenvalues") {
    for (int q = 2; q <= 5; ++q) {
      for (int n = 2; n <= 7; ++n) {
        const auto g = GraphParams::hamming(BigInt(n), q);
        const auto r = quotient_eigenvalues(extended_perfect_matrix(g), g);
        // q-2 is a graph eigenvalue only when n = 2 (mod q).
        CHECK(r.lemma2_holds == (n % q == 2 % q));
        if (r.lemma2_holds) CHECK(values(r.spectrum) == ints({n * (q - 1), q - 2, -n}));
        if (!r.lemma2_holds) CHECK(r.foreign_roots == ints({q - 2}));
      }
    }
    const auto b = quotient_eigenvalues(make_quotient({{0, 4}, {4, 0}}), GraphSpec::hamming(4, 2));
    CHECK(b.lemma2_holds);
    CHECK(values(b.spectrum) == ints({4, -4}));
    const auto c = quotient_eigenvalues(make_quotient({{1, 3}, {1, 3}}), GraphSpec::hamming(4, 2));
    CHECK(c.lemma2_holds);
    CHECK(values(c.spectrum) == ints({4, 0}));
  }

  TEST_CASE("spectrum violations carry the offending factor") {
    // x^2 - 4x - 2 has no integer roots on H(4,2).
    const auto r = quotient_eigenvalues(make_quotient({{1, 3}, {2, 2}}), GraphSpec::hamming(4, 2));
    // eigenvalues 4 and -1; -1 is not in {4,2,0,-2,-4}
    CHECK_FALSE(r.lemma2_holds);
    CHECK(r.foreign_roots == ints({-1}));
    CHECK(r.witness().find("-1") != std::string::npos);
    const auto s = quotient_eigenvalues(make_quotient({{0, 4, 0}, {1, 0, 3}, {0, 3, 1}}), GraphSpec::hamming(4, 2));
    CHECK_FALSE(s.lemma2_holds);
    CHECK(s.residual.degree() == 2);
    CHECK(values(s.spectrum) == ints({4}));
    // Repeated eigenvalue: the all-ones 2x2 block structure.
    const auto m = quotient_eigenvalues(make_quotient({{0, 2, 2, 0}, {2, 0, 0, 2}, {2, 0, 0, 2}, {0, 2, 2, 0}}),
                                        GraphSpec::hamming(4, 2));
    CHECK(m.lemma2_holds);
    CHECK(values(m.spectrum) == ints({4, 0, -4}));
    CHECK(m.spectrum.eigenvalues[1].multiplicity == 2);
  }

  TEST_CASE("trial division and Sturm isolation agree") {
    for (int q = 2; q <= 9; ++q) {
      for (int n : {1, 2, 3, 5, 8, 13, 40}) {
        const auto g = GraphParams::hamming(BigInt(n), q);
        const auto s = extended_perfect_matrix(g);
        const auto p = characteristic_polynomial(s);
        CHECK(integer_eigenvalues_by_trial(p, g) == integer_eigenvalues_by_sturm(p, g));
      }
    }
    const auto g = GraphParams::hamming(BigInt(6), 4);
    const auto p = characteristic_polynomial(make_quotient({{0, 18, 0}, {1, 2, 15}, {0, 7, 11}}));
    CHECK(integer_eigenvalues_by_trial(p, g) == integer_eigenvalues_by_sturm(p, g));
    const auto huge = GraphParams::hamming(BigInt(kTrialDivisionLimit), 3);
    CHECK_THROWS_AS(integer_eigenvalues_by_trial(p, huge), ResourceError);
    const auto big = GraphParams::doob((pow(BigInt(4), 30) + 2) / 3);
    const auto r = quotient_eigenvalues(extended_perfect_matrix(big), big);
    CHECK(r.lemma2_holds);
    CHECK(r.spectrum.lambda(2) == -big.length());
  }

  TEST_CASE("power diagonal") {
    const auto s = make_quotient({{0, 4, 0}, {1, 1, 2}, {0, 2, 2}});
    CHECK(power_diagonal(s, 0, 1) == ints({1, 0}));
    CHECK(power_diagonal(s, 0, 2)[2] == 4);
    CHECK(power_diagonal(s, 2, 0) == ints({1}));
    CHECK_THROWS_AS(power_diagonal(s, 3, 1), InputError);
    CHECK_THROWS_AS(power_diagonal(s, 0, -1), InputError);
  }

  TEST_CASE("power diagonal follows the Cayley-Hamilton recurrence") {
    for (const auto& s : {make_quotient({{0, 18, 0}, {1, 2, 15}, {0, 6, 12}}), make_quotient({{1, 3}, {1, 3}}),
                          make_quotient({{0, 6, 0}, {1, 2, 3}, {0, 2, 4}})}) {
      const auto p = characteristic_polynomial(s);
      const int k = static_cast<int>(s.rows());
      for (int i = 0; i < k; ++i) {
        const auto d = power_diagonal(s, i, k + 4);
        for (int t = 0; t + k < static_cast<int>(d.size()); ++t) {
          BigInt acc = 0;
          for (int j = 0; j <= k; ++j) acc += p[j] * d[t + j];
          CHECK(acc == 0);
        }
      }
    }
  }

  TEST_CASE("adjacency operator") {
    const auto g = GraphSpec::hamming(2, 3);
    const std::vector<BigRational> ones(9, BigRational(1));
    for (const auto& v : apply_adjacency(g, ones)) CHECK(v == 4);
    const auto cube = GraphSpec::hamming(4, 2);
    std::vector<BigRational> f(16, BigRational(0));
    f[0] = f[15] = 1;
    const auto mf = apply_adjacency(cube, f);
    const auto m2f = apply_adjacency(cube, std::span<const BigRational>(mf));
    BigRational inner = 0;
    for (int v = 0; v < 16; ++v) inner += m2f[v] * f[v];
    CHECK(inner == 8);
    // Character for z = (1,0) on H(2,3) is an eigenfunction with eigenvalue 1;
    // its real part cos(2 pi x / 3) * 2 takes the values 2, -1, -1.
    std::vector<BigRational> re(9);
    for (int v = 0; v < 9; ++v) re[v] = (v / 3) == 0 ? 2 : -1;
    CHECK(apply_adjacency(g, re) == re);
    CHECK_THROWS_AS(apply_adjacency(g, std::vector<BigRational>(8)), InputError);
  }

  TEST_CASE("power identity, spectrum and class sizes on real perfect colorings") {
    for (const auto& [name, f] : testing::known_perfect_colorings(1024)) {
      CAPTURE(name);
      const auto r = verify_perfect_coloring(f);
      REQUIRE(r.perfect());
      const QuotientMatrix& s = *r.matrix;
      const IndexedGraph graph(f.graph());
      const auto actual = f.class_sizes();

      const auto spectrum = quotient_eigenvalues(s, f.graph());
      CHECK(spectrum.lemma2_holds);
      for (const auto& e : spectrum.spectrum.eigenvalues) CHECK(GraphParams::of(f.graph()).has_eigenvalue(e.value));

      const auto sizes = class_sizes(s, f.graph());
      CHECK(sizes.feasible);
      for (int j = 0; j < f.k(); ++j) {
        CHECK(sizes.sizes[j].materialize() == BigRational(actual[j]));
        std::vector<std::int64_t> indicator(graph.vertex_count());
        for (VertexIndex v = 0; v < graph.vertex_count(); ++v) indicator[v] = f.color_of(v) == j;
        const auto diagonal = power_diagonal(s, j, 4);
        std::vector<std::int64_t> power = indicator;
        for (int t = 0; t <= 4; ++t) {
          std::int64_t inner = 0;
          for (VertexIndex v = 0; v < graph.vertex_count(); ++v) inner += power[v] * indicator[v];
          CHECK(BigInt(inner) == diagonal[t] * actual[j]);
          power = apply_adjacency<std::int64_t>(graph, power);
        }
      }
    }
  }
}
