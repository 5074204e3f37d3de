#include "perfcol/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "perfcol/errors.hpp"

namespace perfcol {

namespace {

int mod(int a, int q) {
  int r = a % q;
  return r < 0 ? r + q : r;
}

int parse_int_field(std::string_view text, std::string_view key, std::string_view whole) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.substr(0, eq) != key) {
    throw InputError("graph spec '" + std::string(whole) + "': expected '" + std::string(key) + "=<int>'");
  }
  auto digits = text.substr(eq + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InputError("graph spec '" + std::string(whole) + "': bad integer for " + std::string(key));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

int shrikhande_distance(int dx, int dy) {
  dx = mod(dx, 4);
  dy = mod(dy, 4);
  if (dx == 0 && dy == 0) return 0;
  for (const auto& s : kShrikhandeConnectingSet) {
    if (s[0] == dx && s[1] == dy) return 1;
  }
  return 2;
}

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget budget;
  if (const char* env = std::getenv("PERFCOL_MAX_VERTICES")) {
    std::string_view text(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InputError("PERFCOL_MAX_VERTICES must be a non-negative integer");
    }
    budget.max_vertices = value;
  }
  return budget;
}

GraphSpec GraphSpec::hamming(int n, int q) {
  if (n < 1) throw InputError("hamming graph needs n >= 1");
  if (q < 2) throw InputError("hamming graph needs q >= 2");
  return GraphSpec(Family::Hamming, 0, n, q);
}

GraphSpec GraphSpec::doob(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw InputError("doob graph needs m, n >= 0 and m + n >= 1");
  if (m == 0) return hamming(n, 4);
  return GraphSpec(Family::Doob, m, n, 4);
}

GraphSpec GraphSpec::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("graph spec '" + std::string(whole) + "': missing ':'");
  auto kind = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  auto comma = rest.find(',');
  if (comma == std::string_view::npos) throw InputError("graph spec '" + std::string(whole) + "': missing ','");
  auto first = trim(rest.substr(0, comma));
  auto second = trim(rest.substr(comma + 1));
  if (kind == "hamming") {
    return hamming(parse_int_field(first, "n", whole), parse_int_field(second, "q", whole));
  }
  if (kind == "doob") {
    return doob(parse_int_field(first, "m", whole), parse_int_field(second, "n", whole));
  }
  throw InputError("graph spec '" + std::string(whole) + "': unknown family '" + std::string(kind) + "'");
}

std::string GraphSpec::to_string() const {
  if (family_ == Family::Doob) return "doob:m=" + std::to_string(m_) + ",n=" + std::to_string(n_);
  return "hamming:n=" + std::to_string(n_) + ",q=" + std::to_string(q_);
}

BigInt GraphSpec::vertex_count() const { return pow(BigInt(q_), static_cast<std::uint64_t>(digit_count())); }

std::uint64_t GraphSpec::checked_vertex_count(const EnumerationBudget& budget) const {
  const BigInt count = vertex_count();
  if (count > BigInt(budget.max_vertices)) {
    throw ResourceError(to_string() + " has " + count.str() + " vertices, over the enumeration budget of " +
                        std::to_string(budget.max_vertices) + " (set PERFCOL_MAX_VERTICES to raise it)");
  }
  return count.convert_to<std::uint64_t>();
}

Vertex GraphSpec::make_vertex(std::vector<int> digits) const {
  if (static_cast<int>(digits.size()) != digit_count()) {
    throw InputError("vertex of " + to_string() + " needs " + std::to_string(digit_count()) + " digits, got " +
                     std::to_string(digits.size()));
  }
  for (int& d : digits) d = mod(d, q_);
  return Vertex(std::move(digits));
}

void GraphSpec::validate(const Vertex& v) const {
  if (static_cast<int>(v.size()) != digit_count()) {
    throw InputError("vertex has " + std::to_string(v.size()) + " digits, " + to_string() + " needs " +
                     std::to_string(digit_count()));
  }
  for (int d : v.digits()) {
    if (d < 0 || d >= q_) throw InputError("vertex digit " + std::to_string(d) + " out of range for " + to_string());
  }
}

std::vector<Vertex> neighbors(const GraphSpec& g, const Vertex& v) {
  g.validate(v);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(g.degree()));
  std::vector<int> digits(v.digits().begin(), v.digits().end());
  for (int i = 0; i < g.shrikhande_count(); ++i) {
    for (const auto& s : kShrikhandeConnectingSet) {
      auto w = digits;
      w[2 * i] = (w[2 * i] + s[0]) & 3;
      w[2 * i + 1] = (w[2 * i + 1] + s[1]) & 3;
      out.emplace_back(std::move(w));
    }
  }
  for (int p = 2 * g.shrikhande_count(); p < g.digit_count(); ++p) {
    for (int a = 0; a < g.alphabet(); ++a) {
      if (a == digits[p]) continue;
      auto w = digits;
      w[p] = a;
      out.emplace_back(std::move(w));
    }
  }
  return out;
}

int distance(const GraphSpec& g, const Vertex& u, const Vertex& v) {
  g.validate(u);
  g.validate(v);
  int d = 0;
  for (int i = 0; i < g.shrikhande_count(); ++i) {
    d += shrikhande_distance(u[2 * i] - v[2 * i], u[2 * i + 1] - v[2 * i + 1]);
  }
  for (int p = 2 * g.shrikhande_count(); p < g.digit_count(); ++p) d += (u[p] != v[p]);
  return d;
}

IntersectionArray intersection_array(const GraphSpec& g) {
  // D(m,n) shares the array of H(2m+n,4), and digit_count()/alphabet() give
  // exactly those parameters.
  const int d = g.diameter();
  const int q = g.alphabet();
  IntersectionArray array;
  for (int i = 0; i < d; ++i) array.b.push_back(static_cast<std::int64_t>(d - i) * (q - 1));
  for (int i = 1; i <= d; ++i) array.c.push_back(i);
  return array;
}

std::vector<std::int64_t> graph_eigenvalues(const GraphSpec& g) {
  std::vector<std::int64_t> eigenvalues;
  const std::int64_t d = g.diameter();
  const std::int64_t q = g.alphabet();
  for (std::int64_t i = 0; i <= d; ++i) eigenvalues.push_back((q - 1) * d - q * i);
  return eigenvalues;
}

Vertex parse_vertex(const GraphSpec& g, std::string_view text) {
  std::vector<int> digits;
  std::istringstream in{std::string(text)};
  std::string token;
  int pairs = 0;
  while (in >> token) {
    auto comma = token.find(',');
    auto read = [&](std::string_view s) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("bad vertex coordinate '" + std::string(s) + "' in '" + std::string(text) + "'");
      }
      digits.push_back(value);
    };
    const bool expect_pair = pairs < g.shrikhande_count();
    if (expect_pair != (comma != std::string::npos)) {
      throw InputError("vertex '" + std::string(text) + "' for " + g.to_string() + ": expected " +
                       std::to_string(g.shrikhande_count()) + " 'a,b' tokens followed by " +
                       std::to_string(g.complete_count()) + " digits");
    }
    if (expect_pair) {
      read(std::string_view(token).substr(0, comma));
      read(std::string_view(token).substr(comma + 1));
      ++pairs;
    } else {
      read(token);
    }
  }
  return g.make_vertex(std::move(digits));
}

std::string format_vertex(const GraphSpec& g, const Vertex& v) {
  g.validate(v);
  std::string out;
  for (int i = 0; i < g.shrikhande_count(); ++i) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v[2 * i]) + "," + std::to_string(v[2 * i + 1]);
  }
  for (int p = 2 * g.shrikhande_count(); p < g.digit_count(); ++p) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v[p]);
  }
  return out;
}

IndexedGraph::IndexedGraph(GraphSpec g, const EnumerationBudget& budget)
    : spec_(std::move(g)), count_(spec_.checked_vertex_count(budget)), radix_(spec_.alphabet()) {
  place_.assign(spec_.digit_count(), 1);
  for (int p = spec_.digit_count() - 2; p >= 0; --p) place_[p] = place_[p + 1] * radix_;
}

VertexIndex IndexedGraph::index_of(const Vertex& v) const {
  spec_.validate(v);
  VertexIndex index = 0;
  for (int d : v.digits()) index = index * radix_ + d;
  return index;
}

Vertex IndexedGraph::vertex_at(VertexIndex index) const {
  std::vector<int> digits(spec_.digit_count());
  digits_of(index, digits);
  return Vertex(std::move(digits));
}

void IndexedGraph::digits_of(VertexIndex index, std::span<int> out) const {
  for (int p = spec_.digit_count() - 1; p >= 0; --p) {
    out[p] = static_cast<int>(index % radix_);
    index /= radix_;
  }
}

int IndexedGraph::distance(VertexIndex u, VertexIndex v) const {
  int d = 0;
  const int m = spec_.shrikhande_count();
  for (int i = 0; i < m; ++i) {
    d += shrikhande_distance(digit(u, 2 * i) - digit(v, 2 * i), digit(u, 2 * i + 1) - digit(v, 2 * i + 1));
  }
  for (int p = 2 * m; p < spec_.digit_count(); ++p) d += digit(u, p) != digit(v, p);
  return d;
}

VertexRange enumerate_vertices(const GraphSpec& g, const EnumerationBudget& budget) {
  return VertexRange(IndexedGraph(g, budget));
}

GraphParams GraphParams::of(const GraphSpec& g) {
  GraphParams p;
  p.family_ = g.family();
  p.q_ = g.alphabet();
  p.length_ = g.digit_count();
  p.label_ = g.to_string();
  return p;
}

GraphParams GraphParams::hamming(BigInt n, int q) {
  if (n < 1 || q < 2) throw InputError("hamming parameters need n >= 1, q >= 2");
  GraphParams p;
  p.family_ = Family::Hamming;
  p.q_ = q;
  p.length_ = std::move(n);
  p.label_ = "hamming:n=" + p.length_.str() + ",q=" + std::to_string(q);
  return p;
}

GraphParams GraphParams::doob(BigInt length) {
  if (length < 2) throw InputError("doob parameters need 2m+n >= 2 with m >= 1");
  GraphParams p;
  p.family_ = Family::Doob;
  p.q_ = 4;
  p.label_ = "doob:m=" + BigInt(length / 2).str() + ",n=" + BigInt(length % 2).str();
  p.length_ = std::move(length);
  return p;
}

BigInt GraphParams::b(const BigInt& i) const {
  if (i < 0 || i >= length_) return 0;
  return (length_ - i) * (q_ - 1);
}

BigInt GraphParams::c(const BigInt& i) const {
  if (i <= 0 || i > length_) return 0;
  return i;
}

bool GraphParams::has_eigenvalue(const BigInt& lambda) const {
  const BigInt gap = degree() - lambda;
  if (gap < 0 || gap % q_ != 0) return false;
  return gap / q_ <= length_;
}

bool GraphParams::integrality_applies() const {
  return family_ == Family::Doob || (q_ >= 2 && q_ <= 4);
}

}  // namespace perfcol
