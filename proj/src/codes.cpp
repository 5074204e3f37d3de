#include "perfcol/codes.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "perfcol/errors.hpp"

namespace perfcol {

namespace {

std::vector<VertexIndex> word_indices(const IndexedGraph& graph, const Code& c) {
  std::vector<VertexIndex> out;
  out.reserve(c.size());
  for (const auto& w : c.words()) out.push_back(graph.index_of(w));
  return out;
}

std::vector<int> bfs_distances(const IndexedGraph& graph, const std::vector<VertexIndex>& sources) {
  std::vector<int> dist(graph.vertex_count(), -1);
  std::deque<VertexIndex> frontier;
  for (VertexIndex s : sources) {
    dist[s] = 0;
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    const VertexIndex v = frontier.front();
    frontier.pop_front();
    const int next = dist[v] + 1;
    graph.for_each_neighbor(v, [&](VertexIndex w) {
      if (dist[w] < 0) {
        dist[w] = next;
        frontier.push_back(w);
      }
    });
  }
  return dist;
}

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skip_line(const std::string& line) { return line.empty() || line[0] == '#'; }

}  // namespace

Code::Code(GraphSpec graph, std::vector<Vertex> words) : graph_(std::move(graph)), words_(std::move(words)) {
  if (words_.empty()) throw InputError("a code must be nonempty");
  for (const auto& w : words_) graph_.validate(w);
  std::vector<Vertex> sorted = words_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("repeated codeword " + format_vertex(graph_, *dup));
}

Coloring::Coloring(GraphSpec graph, std::vector<int> colors, const EnumerationBudget& budget)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  const std::uint64_t count = graph_.checked_vertex_count(budget);
  if (colors_.size() != count) {
    throw InputError("coloring of " + graph_.to_string() + " needs " + std::to_string(count) + " colors, got " +
                     std::to_string(colors_.size()));
  }
  int max_color = -1;
  for (int c : colors_) {
    if (c < 0) throw InputError("negative color in coloring");
    max_color = std::max(max_color, c);
  }
  k_ = max_color + 1;
  std::vector<bool> used(k_, false);
  for (int c : colors_) used[c] = true;
  for (int c = 0; c < k_; ++c) {
    if (!used[c]) throw InputError("coloring is not onto: color " + std::to_string(c) + " is unused");
  }
}

std::vector<std::uint64_t> Coloring::class_sizes() const {
  std::vector<std::uint64_t> sizes(k_, 0);
  for (int c : colors_) ++sizes[c];
  return sizes;
}

std::optional<std::pair<Vertex, Vertex>> closest_pair(const Code& c) {
  if (c.size() == 1) return std::nullopt;
  int best = kInfiniteDistance;
  std::pair<std::size_t, std::size_t> at{0, 1};
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const int d = distance(c.graph(), c.words()[i], c.words()[j]);
      if (d < best) {
        best = d;
        at = {i, j};
      }
    }
  }
  return std::pair{c.words()[at.first], c.words()[at.second]};
}

int code_distance(const Code& c) {
  const auto pair = closest_pair(c);
  return pair ? distance(c.graph(), pair->first, pair->second) : kInfiniteDistance;
}

int covering_radius(const Code& c, const EnumerationBudget& budget) {
  IndexedGraph graph(c.graph(), budget);
  const auto dist = bfs_distances(graph, word_indices(graph, c));
  return *std::max_element(dist.begin(), dist.end());
}

Code projection(const Code& c, Coordinate position) {
  const GraphSpec& g = c.graph();
  if (position.kind == Coordinate::Kind::Shrikhande) {
    throw UnsupportedOperation("projection is only defined at K_q coordinates, not at Shrikhande coordinate " +
                               std::to_string(position.index));
  }
  if (position.index < 1 || position.index > g.complete_count()) {
    throw InputError("projection coordinate " + std::to_string(position.index) + " out of range 1.." +
                     std::to_string(g.complete_count()) + " for " + g.to_string());
  }
  if (g.family() == Family::Hamming && g.complete_count() == 1) {
    throw InputError("cannot project a code in H(1,q)");
  }
  GraphSpec target = g.family() == Family::Doob ? GraphSpec::doob(g.shrikhande_count(), g.complete_count() - 1)
                                                : GraphSpec::hamming(g.complete_count() - 1, g.alphabet());
  const int removed = 2 * g.shrikhande_count() + position.index - 1;
  std::set<Vertex> words;
  for (const auto& w : c.words()) {
    std::vector<int> digits(w.digits().begin(), w.digits().end());
    digits.erase(digits.begin() + removed);
    words.insert(Vertex(std::move(digits)));
  }
  return Code(std::move(target), std::vector<Vertex>(words.begin(), words.end()));
}

bool is_1perfect(const Code& c, const EnumerationBudget& budget) {
  IndexedGraph graph(c.graph(), budget);
  std::vector<std::uint8_t> in_code(graph.vertex_count(), 0);
  for (VertexIndex w : word_indices(graph, c)) in_code[w] = 1;
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    int hits = in_code[v];
    graph.for_each_neighbor(v, [&](VertexIndex w) { hits += in_code[w]; });
    if (hits != 1) return false;
  }
  return true;
}

bool is_extended_1perfect(const Code& c, const EnumerationBudget& budget) {
  const GraphSpec& g = c.graph();
  const int d = code_distance(c);
  if (d != 4 && d != kInfiniteDistance) return false;
  if (g.complete_count() == 0) {
    // D(m,0): 2m = (4^l+2)/3 and |C| = 4^(2m-l-1).
    const int length = g.digit_count();
    for (int l = 1;; ++l) {
      const BigInt n = (pow(BigInt(4), l) + 2) / 3;
      if (n > length) return false;
      if (n == length) return BigInt(c.size()) == pow(BigInt(4), static_cast<std::uint64_t>(length - l - 1));
    }
  }
  if (g.family() == Family::Hamming && g.complete_count() == 1) return false;
  return is_1perfect(projection(c, Coordinate::complete(1)), budget);
}

Coloring distance_coloring(const Code& c, const EnumerationBudget& budget) {
  IndexedGraph graph(c.graph(), budget);
  return Coloring(c.graph(), bfs_distances(graph, word_indices(graph, c)), budget);
}

PerfectnessResult verify_perfect_coloring(const Coloring& f) {
  IndexedGraph graph(f.graph(), EnumerationBudget{f.colors().size()});
  const int k = f.k();
  std::vector<std::vector<std::int64_t>> reference(k);
  std::vector<VertexIndex> witness(k, 0);
  std::vector<std::int64_t> profile(k);
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    std::fill(profile.begin(), profile.end(), 0);
    graph.for_each_neighbor(v, [&](VertexIndex w) { ++profile[f.color_of(w)]; });
    const int color = f.color_of(v);
    if (reference[color].empty()) {
      reference[color] = profile;
      witness[color] = v;
    } else if (reference[color] != profile) {
      PerfectnessResult result;
      result.counterexample = Counterexample{color, graph.vertex_at(witness[color]), graph.vertex_at(v),
                                             reference[color], profile};
      return result;
    }
  }
  QuotientMatrix s(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) s(i, j) = reference[i][j];
  }
  return PerfectnessResult{std::move(s), std::nullopt};
}

PerfectnessResult is_completely_regular(const Code& c, const EnumerationBudget& budget) {
  auto result = verify_perfect_coloring(distance_coloring(c, budget));
  if (result.perfect() && !is_tridiagonal(*result.matrix)) {
    throw InternalError("distance coloring produced a non-tridiagonal quotient matrix");
  }
  return result;
}

std::optional<ExtendedParams> admissible_extended_params(Family family, int q, const BigInt& l) {
  if (l < 1) throw InputError("l must be a positive integer");
  if (family == Family::Doob) q = 4;
  if (q < 2) throw InputError("q must be at least 2");
  const std::uint64_t exponent = l.convert_to<std::uint64_t>();
  const BigInt top = pow(BigInt(q), exponent) + q - 2;
  if (top % (q - 1) != 0) return std::nullopt;
  ExtendedParams p;
  p.l = l;
  p.length = top / (q - 1);
  p.cardinality = ScaledValue(BigRational(1), BigInt(q), p.length - l - 1);
  return p;
}

QuotientMatrix extended_perfect_matrix(const GraphParams& g) {
  const BigInt n = g.length();
  const int q = g.alphabet();
  QuotientMatrix s = QuotientMatrix::Zero(3, 3);
  s(0, 1) = n * (q - 1);
  s(1, 0) = 1;
  s(1, 1) = q - 2;
  s(1, 2) = (n - 1) * (q - 1);
  s(2, 1) = n;
  s(2, 2) = n * (q - 2);
  return s;
}

int gf4_add(int a, int b) { return a ^ b; }

int gf4_mul(int a, int b) {
  // Labels 0,1,2,3 stand for 0, 1, w, w^2 with w^3 = 1.
  if (a == 0 || b == 0) return 0;
  static constexpr std::array<int, 4> log{0, 0, 1, 2};
  static constexpr std::array<int, 3> exp{1, 2, 3};
  return exp[(log[a] + log[b]) % 3];
}

Code search_hexacode() {
  const GraphSpec g = GraphSpec::hamming(6, 4);
  std::array<int, 9> block{};
  for (int code = 0; code < (1 << 18); ++code) {
    for (int i = 0; i < 9; ++i) block[i] = (code >> (2 * (8 - i))) & 3;
    std::vector<Vertex> words;
    bool ok = true;
    for (int u = 0; u < 64 && ok; ++u) {
      const std::array<int, 3> info{(u >> 4) & 3, (u >> 2) & 3, u & 3};
      std::vector<int> w(info.begin(), info.end());
      for (int j = 0; j < 3; ++j) {
        int parity = 0;
        for (int i = 0; i < 3; ++i) parity = gf4_add(parity, gf4_mul(info[i], block[3 * i + j]));
        w.push_back(parity);
      }
      // Linear code: minimum distance = minimum nonzero weight.
      if (u != 0 && std::count_if(w.begin(), w.end(), [](int d) { return d != 0; }) < 4) ok = false;
      words.emplace_back(std::move(w));
    }
    if (ok) return Code(g, std::move(words));
  }
  throw InternalError("no [6,3,4] code found over GF(4)");
}

Code read_code(std::istream& in) {
  std::string line;
  std::optional<GraphSpec> graph;
  std::vector<Vertex> words;
  while (std::getline(in, line)) {
    line = strip(line);
    if (skip_line(line)) continue;
    if (!graph) {
      graph = GraphSpec::parse(line);
      continue;
    }
    words.push_back(parse_vertex(*graph, line));
  }
  if (!graph) throw InputError("code file is missing the graph spec line");
  return Code(*graph, std::move(words));
}

void write_code(std::ostream& out, const Code& c) {
  out << c.graph().to_string() << '\n';
  for (const auto& w : c.words()) out << format_vertex(c.graph(), w) << '\n';
}

Coloring read_coloring(std::istream& in, const EnumerationBudget& budget) {
  std::string line;
  std::optional<GraphSpec> spec;
  std::optional<IndexedGraph> graph;
  std::vector<int> colors;
  std::uint64_t assigned = 0;
  while (std::getline(in, line)) {
    line = strip(line);
    if (skip_line(line)) continue;
    if (!spec) {
      spec = GraphSpec::parse(line);
      graph.emplace(*spec, budget);
      colors.assign(graph->vertex_count(), -1);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("coloring line '" + line + "' lacks ' : color'");
    const Vertex v = parse_vertex(*spec, line.substr(0, colon));
    const BigRational color = parse_fraction(strip(line.substr(colon + 1)));
    if (!is_integer(color) || color < 0 || color > 1'000'000) {
      throw InputError("bad color in coloring line '" + line + "'");
    }
    const VertexIndex idx = graph->index_of(v);
    if (colors[idx] >= 0) throw InputError("vertex " + format_vertex(*spec, v) + " colored twice");
    colors[idx] = numerator_of(color).convert_to<int>();
    ++assigned;
  }
  if (!spec) throw InputError("coloring file is missing the graph spec line");
  if (assigned != graph->vertex_count()) {
    for (VertexIndex v = 0; v < graph->vertex_count(); ++v) {
      if (colors[v] < 0) {
        throw InputError("coloring is not total: vertex " + format_vertex(*spec, graph->vertex_at(v)) +
                         " has no color (" + std::to_string(assigned) + " of " +
                         std::to_string(graph->vertex_count()) + " colored)");
      }
    }
  }
  return Coloring(*spec, std::move(colors), budget);
}

void write_coloring(std::ostream& out, const Coloring& f) {
  IndexedGraph graph(f.graph(), EnumerationBudget{f.colors().size()});
  out << f.graph().to_string() << '\n';
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    out << format_vertex(f.graph(), graph.vertex_at(v)) << " : " << f.color_of(v) << '\n';
  }
}

}  // namespace perfcol
