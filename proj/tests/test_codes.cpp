#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "perfcol/codes.hpp"
#include "perfcol/errors.hpp"
#include "support.hpp"

using namespace perfcol;
using testing::hexacode;
using testing::make_code;

namespace {

const QuotientMatrix kExtendedQ2N4 = make_quotient({{0, 4, 0}, {1, 0, 3}, {0, 4, 0}});
const QuotientMatrix kHexacodeMatrix = make_quotient({{0, 18, 0}, {1, 2, 15}, {0, 6, 12}});

QuotientMatrix extended_matrix(const GraphSpec& g) { return extended_perfect_matrix(GraphParams::of(g)); }

bool has_extended_matrix(const Code& c) {
  const auto r = is_completely_regular(c);
  return r.perfect() && same_quotient(*r.matrix, extended_matrix(c.graph()));
}

/// Checks is_extended_1perfect(C) <=> distance coloring has the extended
/// matrix, over every nonempty subset of a small graph.
void exhaustive_equivalence(const GraphSpec& g, int expected_count) {
  const IndexedGraph graph(g);
  const auto n = graph.vertex_count();
  REQUIRE(n <= 16);
  int extended = 0;
  int mismatches = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<VertexIndex> indices;
    for (VertexIndex v = 0; v < n; ++v) {
      if (mask >> v & 1u) indices.push_back(v);
    }
    const Code c = testing::code_from_indices(g, indices);
    const bool ext = is_extended_1perfect(c);
    const bool matrix = has_extended_matrix(c);
    extended += ext;
    if (ext != matrix) ++mismatches;
    if (matrix && g.complete_count() > 0) {
      // The converse direction spelled out: distance 4 (or a singleton)
      // and every projection 1-perfect.
      const int d = code_distance(c);
      CHECK((d == 4 || d == kInfiniteDistance));
      for (int i = 1; i <= g.complete_count(); ++i) CHECK(is_1perfect(projection(c, i)));
    }
  }
  CHECK(mismatches == 0);
  CHECK(extended == expected_count);
}

}  // namespace

TEST_SUITE("codes") {
  TEST_CASE("code construction rejects bad input") {
    const auto g = GraphSpec::hamming(3, 2);
    CHECK_THROWS_AS(Code(g, {}), InputError);
    CHECK_THROWS_AS(make_code(g, {{0, 0, 0}, {0, 0, 0}}), InputError);
    CHECK_THROWS_AS(Code(g, {Vertex({0, 1})}), InputError);
    CHECK_THROWS_AS(Coloring(g, {0, 0, 0}), InputError);
    CHECK_THROWS_AS(Coloring(g, {0, 0, 0, 0, 2, 2, 2, 2}), InputError);  // color 1 unused
    CHECK_THROWS_AS(Coloring(g, {0, 0, 0, 0, 1, 1, 1, -1}), InputError);
  }

  TEST_CASE("code distance") {
    CHECK(code_distance(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}})) == 4);
    CHECK(code_distance(hexacode()) == 4);
    CHECK(code_distance(make_code(GraphSpec::hamming(3, 2), {{0, 0, 0}, {1, 1, 1}})) == 3);
    CHECK(code_distance(make_code(GraphSpec::hamming(3, 2), {{0, 1, 0}})) == kInfiniteDistance);
    const auto pair = closest_pair(make_code(GraphSpec::hamming(3, 3), {{0, 0, 0}, {1, 1, 1}, {1, 1, 2}}));
    REQUIRE(pair);
    CHECK(pair->first == Vertex({1, 1, 1}));
    CHECK(pair->second == Vertex({1, 1, 2}));
    CHECK_FALSE(closest_pair(make_code(GraphSpec::hamming(3, 2), {{0, 1, 0}})));
  }

  TEST_CASE("covering radius") {
    CHECK(covering_radius(make_code(GraphSpec::hamming(3, 2), {{0, 0, 0}, {1, 1, 1}})) == 1);
    CHECK(covering_radius(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}})) == 2);
    const auto g = GraphSpec::hamming(2, 3);
    std::vector<Vertex> all;
    for (const auto& v : enumerate_vertices(g)) all.push_back(v);
    CHECK(covering_radius(Code(g, all)) == 0);
    CHECK(covering_radius(make_code(GraphSpec::doob(1, 0), {{0, 0}})) == 2);
    CHECK_THROWS_AS(covering_radius(make_code(g, {{0, 0}}), EnumerationBudget{8}), ResourceError);
  }

  TEST_CASE("projection") {
    const auto p = projection(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}}), 4);
    CHECK(p.graph() == GraphSpec::hamming(3, 2));
    CHECK(p.words() == std::vector<Vertex>{Vertex({0, 0, 0}), Vertex({1, 1, 1})});
    const auto h = projection(hexacode(), 1);
    CHECK(h.size() == 64);
    CHECK(h.graph() == GraphSpec::hamming(5, 4));
    CHECK(code_distance(h) >= 3);
    const auto t = projection(make_code(GraphSpec::hamming(2, 3), {{0, 0}, {1, 1}, {2, 2}}), 2);
    CHECK(t.words() == std::vector<Vertex>{Vertex({0}), Vertex({1}), Vertex({2})});
    const auto d = make_code(GraphSpec::doob(1, 2), {{0, 0, 1, 2}});
    CHECK(projection(d, 2).words() == std::vector<Vertex>{Vertex({0, 0, 1})});
    CHECK(projection(d, 2).graph() == GraphSpec::doob(1, 1));
    CHECK_THROWS_AS(projection(d, Coordinate::shrikhande(1)), UnsupportedOperation);
    CHECK_THROWS_AS(projection(d, 3), InputError);
    CHECK_THROWS_AS(projection(make_code(GraphSpec::hamming(1, 3), {{0}}), 1), InputError);
  }

  TEST_CASE("projections keep the cardinality of codes with distance at least 2") {
    for (int i = 1; i <= 6; ++i) CHECK(projection(hexacode(), i).size() == 64);
    const auto c = make_code(GraphSpec::hamming(4, 3), {{0, 0, 0, 0}, {1, 1, 0, 0}, {2, 0, 2, 1}});
    for (int i = 1; i <= 4; ++i) CHECK(projection(c, i).size() == 3);
  }

  TEST_CASE("1-perfect codes") {
    CHECK(is_1perfect(make_code(GraphSpec::hamming(3, 2), {{0, 0, 0}, {1, 1, 1}})));
    CHECK_FALSE(is_1perfect(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}})));
    CHECK(is_1perfect(projection(hexacode(), 1)));
    CHECK(is_1perfect(make_code(GraphSpec::hamming(1, 5), {{3}})));
  }

  TEST_CASE("ball-count and sphere-packing definitions agree on small graphs") {
    // Every code of H(3,2), H(2,3) and H(2,4).
    for (const auto& g : {GraphSpec::hamming(3, 2), GraphSpec::hamming(2, 3), GraphSpec::hamming(2, 4)}) {
      const IndexedGraph graph(g);
      const auto n = graph.vertex_count();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<VertexIndex> idx;
        for (VertexIndex v = 0; v < n; ++v) {
          if (mask >> v & 1u) idx.push_back(v);
        }
        const Code c = testing::code_from_indices(g, idx);
        const bool packing = (c.size() == 1 ? g.diameter() == 1 : code_distance(c) >= 3) &&
                             c.size() * (1 + g.degree()) == n;
        CHECK(is_1perfect(c) == packing);
      }
    }
  }

  TEST_CASE("extended 1-perfect codes") {
    CHECK(is_extended_1perfect(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}})));
    CHECK(is_extended_1perfect(hexacode()));
    CHECK(is_extended_1perfect(make_code(GraphSpec::hamming(2, 3), {{0, 0}})));
    CHECK(is_extended_1perfect(make_code(GraphSpec::hamming(2, 4), {{1, 2}})));
    CHECK_FALSE(is_extended_1perfect(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}})));
    CHECK_FALSE(is_extended_1perfect(make_code(GraphSpec::hamming(3, 2), {{0, 0, 0}, {1, 1, 1}})));
    CHECK_FALSE(is_extended_1perfect(make_code(GraphSpec::hamming(1, 3), {{0}})));
    // D(1,0): 2m = 2 = (4+2)/3, |C| = 1.  D(3,0) would need |C| = 4^3 and distance 4.
    CHECK(is_extended_1perfect(make_code(GraphSpec::doob(1, 0), {{2, 3}})));
    CHECK_FALSE(is_extended_1perfect(make_code(GraphSpec::doob(1, 0), {{0, 0}, {2, 2}})));
    CHECK_FALSE(is_extended_1perfect(make_code(GraphSpec::doob(2, 0), {{0, 0, 0, 0}})));
    CHECK(is_extended_1perfect(make_code(GraphSpec::doob(1, 0), {{0, 0}})) ==
          is_extended_1perfect(make_code(GraphSpec::hamming(2, 4), {{0, 0}})));
  }

  TEST_CASE("distance colorings") {
    auto sizes = distance_coloring(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}})).class_sizes();
    CHECK(sizes == std::vector<std::uint64_t>{2, 8, 6});
    CHECK(distance_coloring(make_code(GraphSpec::hamming(2, 4), {{3, 1}})).class_sizes() ==
          std::vector<std::uint64_t>{1, 6, 9});
    const auto hex = distance_coloring(hexacode());
    CHECK(hex.class_sizes() == std::vector<std::uint64_t>{64, 1152, 2880});
    CHECK(hex.k() == 3);
    // |f^-1(1)| = n(q-1)q^(n-1) / ((n-1)(q-1)+1) at n = 6, q = 4.
    CHECK(hex.class_sizes()[1] == 6 * 3 * 1024 / 16);
    const IndexedGraph graph(GraphSpec::hamming(6, 4));
    for (const auto& w : hexacode().words()) CHECK(hex.color_of(graph.index_of(w)) == 0);
  }

  TEST_CASE("perfect coloring verification") {
    CHECK(same_quotient(
        *verify_perfect_coloring(distance_coloring(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}})))
             .matrix,
        kExtendedQ2N4));
    // Independent set {00,02,20,22} of the Shrikhande graph.
    const auto sh = GraphSpec::doob(1, 0);
    std::vector<int> colors(16, 1);
    for (int v : {0, 2, 8, 10}) colors[v] = 0;
    const auto r = verify_perfect_coloring(Coloring(sh, colors));
    REQUIRE(r.perfect());
    CHECK(same_quotient(*r.matrix, make_quotient({{0, 6}, {2, 4}})));
    const auto one = verify_perfect_coloring(Coloring(GraphSpec::doob(1, 1), std::vector<int>(64, 0)));
    CHECK(same_quotient(*one.matrix, make_quotient({{9}})));

    auto broken = distance_coloring(hexacode());
    std::vector<int> flipped(broken.colors().begin(), broken.colors().end());
    flipped[5] = flipped[5] == 2 ? 1 : 2;
    const auto bad = verify_perfect_coloring(Coloring(GraphSpec::hamming(6, 4), flipped));
    REQUIRE_FALSE(bad.perfect());
    CHECK(bad.counterexample->first_profile != bad.counterexample->second_profile);
    CHECK(bad.counterexample->first < bad.counterexample->second);
  }

  TEST_CASE("completely regular codes") {
    CHECK(same_quotient(*is_completely_regular(hexacode()).matrix, kHexacodeMatrix));
    CHECK(same_quotient(*is_completely_regular(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}})).matrix,
                        kExtendedQ2N4));
    CHECK(same_quotient(*is_completely_regular(make_code(GraphSpec::hamming(2, 4), {{0, 0}})).matrix,
                        make_quotient({{0, 6, 0}, {1, 2, 3}, {0, 2, 4}})));
    CHECK_FALSE(is_completely_regular(make_code(GraphSpec::hamming(3, 2), {{0, 0, 0}, {0, 1, 1}})).perfect());
  }

  TEST_CASE("single vertices are completely regular with the intersection-array matrix") {
    for (const auto& g : testing::small_graphs(1024)) {
      CAPTURE(g.to_string());
      const auto a = intersection_array(g);
      const int d = a.diameter();
      QuotientMatrix expected = QuotientMatrix::Zero(d + 1, d + 1);
      for (int i = 0; i <= d; ++i) {
        if (i > 0) expected(i, i - 1) = a.c_at(i);
        expected(i, i) = a.a_at(i);
        if (i < d) expected(i, i + 1) = a.b_at(i);
      }
      const IndexedGraph graph(g);
      for (VertexIndex v : {VertexIndex{0}, graph.vertex_count() / 3, graph.vertex_count() - 1}) {
        const auto r = is_completely_regular(Code(g, {graph.vertex_at(v)}));
        REQUIRE(r.perfect());
        CHECK(same_quotient(*r.matrix, expected));
      }
    }
  }

  TEST_CASE("admissible extended parameters") {
    auto t = admissible_extended_params(Family::Hamming, 3, BigInt(2));
    REQUIRE(t);
    CHECK(t->length == 5);
    CHECK(t->cardinality.materialize() == 9);
    auto d = admissible_extended_params(Family::Doob, 4, BigInt(3));
    REQUIRE(d);
    CHECK(d->length == 22);
    CHECK(d->cardinality == ScaledValue(BigRational(1), BigInt(4), BigInt(18)));
    auto b = admissible_extended_params(Family::Hamming, 2, BigInt(2));
    REQUIRE(b);
    CHECK(b->length == 4);
    CHECK(b->cardinality.materialize() == 2);
    // q^l + q - 2 = 0 (mod q-1) always, so every l is admissible.
    CHECK(admissible_extended_params(Family::Hamming, 5, BigInt(2))->length == 7);
    for (int q = 2; q <= 9; ++q) CHECK(admissible_extended_params(Family::Hamming, q, BigInt(3)).has_value());
    CHECK_THROWS_AS(admissible_extended_params(Family::Hamming, 3, BigInt(0)), InputError);
    CHECK_THROWS_AS(admissible_extended_params(Family::Hamming, 1, BigInt(2)), InputError);
  }

  TEST_CASE("extended matrix") {
    CHECK(same_quotient(extended_matrix(GraphSpec::hamming(6, 4)), kHexacodeMatrix));
    CHECK(same_quotient(extended_perfect_matrix(GraphParams::doob(BigInt(22))),
                        make_quotient({{0, 66, 0}, {1, 2, 63}, {0, 22, 44}})));
    CHECK(same_quotient(extended_matrix(GraphSpec::doob(1, 0)), extended_matrix(GraphSpec::hamming(2, 4))));
  }

  TEST_CASE("hexacode search") {
    CHECK(gf4_mul(2, 2) == 3);
    CHECK(gf4_mul(2, 3) == 1);
    CHECK(gf4_mul(3, 3) == 2);
    CHECK(gf4_add(2, 3) == 1);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
          CHECK(gf4_mul(a, gf4_add(b, c)) == gf4_add(gf4_mul(a, b), gf4_mul(a, c)));
        }
      }
    }
    const Code& h = hexacode();
    CHECK(h.size() == 64);
    // First block in lexicographic order, as frozen by the Python oracle:
    // rows (1,1,1), (1,2,3), (1,3,2).
    const std::set<Vertex> words(h.words().begin(), h.words().end());
    CHECK(words.contains(Vertex({1, 0, 0, 1, 1, 1})));
    CHECK(words.contains(Vertex({0, 1, 0, 1, 2, 3})));
    CHECK(words.contains(Vertex({0, 0, 1, 1, 3, 2})));
  }

  TEST_CASE("extended perfect iff the extended matrix, exhaustively on tiny graphs") {
    // H(4,2): the 8 pairs {x, x+1111}.  H(2,4) and D(1,0): the 16 singletons.
    // H(2,3): the 9 singletons.
    exhaustive_equivalence(GraphSpec::hamming(4, 2), 8);
    exhaustive_equivalence(GraphSpec::hamming(2, 4), 16);
    exhaustive_equivalence(GraphSpec::doob(1, 0), 16);
    exhaustive_equivalence(GraphSpec::hamming(2, 3), 9);
  }

  TEST_CASE("hexacode translates and perturbations") {
    const GraphSpec g = GraphSpec::hamming(6, 4);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> digit(0, 3);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> shift(6);
      for (auto& s : shift) s = digit(rng);
      std::vector<Vertex> moved;
      for (const auto& w : hexacode().words()) {
        std::vector<int> d(6);
        for (int i = 0; i < 6; ++i) d[i] = (w[i] + shift[i]) % 4;
        moved.emplace_back(d);
      }
      const Code c(g, moved);
      CHECK(is_extended_1perfect(c));
      CHECK(has_extended_matrix(c));

      // Move one word to a random vertex outside the code.
      std::vector<Vertex> perturbed = moved;
      const std::set<Vertex> present(moved.begin(), moved.end());
      Vertex fresh;
      do {
        std::vector<int> d(6);
        for (auto& x : d) x = digit(rng);
        fresh = Vertex(d);
      } while (present.contains(fresh));
      perturbed[trial * 7 % 64] = fresh;
      const Code p(g, perturbed);
      CHECK_FALSE(is_extended_1perfect(p));
      CHECK_FALSE(has_extended_matrix(p));
    }
  }

  TEST_CASE("code and coloring files") {
    std::stringstream buffer;
    write_code(buffer, hexacode());
    const Code back = read_code(buffer);
    CHECK(back.graph() == hexacode().graph());
    CHECK(back.words() == hexacode().words());

    std::istringstream with_comments("# a comment\n\ndoob:m=1,n=1\n0,0 0\n  1,1 2  \n");
    const Code d = read_code(with_comments);
    CHECK(d.size() == 2);
    CHECK(d.words()[1] == Vertex({1, 1, 2}));
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_code(empty), InputError);
    std::istringstream bad("hamming:n=2,q=2\n0 0 0\n");
    CHECK_THROWS_AS(read_code(bad), InputError);

    const auto f = distance_coloring(make_code(GraphSpec::hamming(2, 3), {{0, 0}}));
    std::stringstream cb;
    write_coloring(cb, f);
    const Coloring g = read_coloring(cb);
    CHECK(std::vector<int>(g.colors().begin(), g.colors().end()) == std::vector<int>(f.colors().begin(), f.colors().end()));
    std::istringstream partial("hamming:n=1,q=3\n0 : 0\n1 : 1\n");
    CHECK_THROWS_AS(read_coloring(partial), InputError);
    std::istringstream twice("hamming:n=1,q=2\n0 : 0\n0 : 1\n");
    CHECK_THROWS_AS(read_coloring(twice), InputError);
    std::istringstream nocolon("hamming:n=1,q=2\n0 0\n1 1\n");
    CHECK_THROWS_AS(read_coloring(nocolon), InputError);
    std::istringstream fractional("hamming:n=1,q=2\n0 : 1/2\n1 : 0\n");
    CHECK_THROWS_AS(read_coloring(fractional), InputError);
  }
}
