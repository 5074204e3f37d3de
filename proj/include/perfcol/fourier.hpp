#pragma once

// Exact character sums over Z_q^N (q = 2, 3, 4) used to recompute the
// eigenspace masses of a color class independently of the quotient matrix.
//
// Characters are phi_z(t) = xi^<z,t> / q^(N/2).  The normalizing factor is
// never formed: coefficients are kept unnormalized in Z[xi] and only
// |alpha_z|^2 = |coefficient|^2 / q^N is ever rational.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "perfcol/codes.hpp"
#include "perfcol/errors.hpp"
#include "perfcol/graphs.hpp"
#include "perfcol/numeric.hpp"

namespace perfcol {

/// Element of Z[xi_q] for q in {2,3,4}.
///   q=2: x
///   q=4: x + y i
///   q=3: (x + y sqrt(-3)) / 2 with x = y (mod 2)
template <typename Scalar>
class CycloValue {
 public:
  CycloValue() = default;
  explicit CycloValue(int q) : q_(q) { check_q(q); }
  CycloValue(int q, Scalar x, Scalar y) : q_(q), x_(std::move(x)), y_(std::move(y)) { check_q(q); }

  static CycloValue integer(int q, const Scalar& n) { return q == 3 ? CycloValue(q, Scalar(2 * n), Scalar(0)) : CycloValue(q, n, Scalar(0)); }

  /// xi^k.
  static CycloValue root_power(int q, std::int64_t k) {
    const int r = static_cast<int>(((k % q) + q) % q);
    switch (q) {
      case 2:
        return {q, Scalar(r == 0 ? 1 : -1), Scalar(0)};
      case 4: {
        static constexpr int re[4] = {1, 0, -1, 0};
        static constexpr int im[4] = {0, 1, 0, -1};
        return {q, Scalar(re[r]), Scalar(im[r])};
      }
      default: {
        // 1 = (2 + 0s)/2, xi = (-1 + s)/2, xi^2 = (-1 - s)/2
        static constexpr int re[3] = {2, -1, -1};
        static constexpr int im[3] = {0, 1, -1};
        return {q, Scalar(re[r]), Scalar(im[r])};
      }
    }
  }

  int q() const { return q_; }
  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  CycloValue conjugate() const { return {q_, x_, Scalar(-y_)}; }

  CycloValue& operator+=(const CycloValue& o) {
    x_ += o.x_;
    y_ += o.y_;
    return *this;
  }
  CycloValue& operator-=(const CycloValue& o) {
    x_ -= o.x_;
    y_ -= o.y_;
    return *this;
  }
  friend CycloValue operator+(CycloValue a, const CycloValue& b) { return a += b; }
  friend CycloValue operator-(CycloValue a, const CycloValue& b) { return a -= b; }

  friend CycloValue operator*(const CycloValue& a, const CycloValue& b) {
    if (a.q_ != b.q_) throw InputError("cyclotomic values over different q");
    switch (a.q_) {
      case 2:
        return {a.q_, Scalar(a.x_ * b.x_), Scalar(0)};
      case 4:
        return {a.q_, Scalar(a.x_ * b.x_ - a.y_ * b.y_), Scalar(a.x_ * b.y_ + a.y_ * b.x_)};
      default:
        return {a.q_, Scalar((a.x_ * b.x_ - 3 * a.y_ * b.y_) / 2), Scalar((a.x_ * b.y_ + a.y_ * b.x_) / 2)};
    }
  }

  friend CycloValue operator*(const Scalar& n, const CycloValue& a) { return {a.q_, Scalar(n * a.x_), Scalar(n * a.y_)}; }

  bool operator==(const CycloValue& o) const { return q_ == o.q_ && x_ == o.x_ && y_ == o.y_; }

  /// |value|^2.
  BigRational norm() const {
    const BigInt x(x_);
    const BigInt y(y_);
    switch (q_) {
      case 2:
        return BigRational(x * x);
      case 4:
        return BigRational(x * x + y * y);
      default:
        return BigRational(x * x + 3 * y * y, BigInt(4));
    }
  }

  /// For q=3 the representation needs x and y of equal parity.
  bool well_formed() const { return q_ != 3 || ((x_ - y_) % 2 == 0); }

  std::string to_string() const {
    const BigInt x(x_);
    const BigInt y(y_);
    switch (q_) {
      case 2:
        return x.str();
      case 4:
        return "(" + x.str() + (y < 0 ? " - " : " + ") + BigInt(abs(y)).str() + "i)";
      default:
        return "(" + x.str() + (y < 0 ? " - " : " + ") + BigInt(abs(y)).str() + "sqrt(-3))/2";
    }
  }

 private:
  static void check_q(int q) {
    if (q != 2 && q != 3 && q != 4) throw UnsupportedOperation("cyclotomic arithmetic only for q in {2,3,4}");
  }

  int q_ = 2;
  Scalar x_{0};
  Scalar y_{0};
};

using Cyclo = CycloValue<std::int64_t>;

/// Default vertex limit for the oracle.
inline constexpr std::uint64_t kOracleVertexLimit = 4096;

/// Flat digit dot product mod q; for the Doob graph the Shrikhande pairs
/// contribute x v + y u in the usual coordinates, which is the same sum.
int inner_product(const GraphSpec& g, const Vertex& z, const Vertex& t);

/// xi^<z,t>, unnormalized.
Cyclo character_value(const GraphSpec& g, const Vertex& z, const Vertex& t);

/// Eigenvalue of phi_z, coordinate by coordinate: a K_q digit gives q-1 when
/// zero and -1 otherwise; a Shrikhande pair (a,b) gives
/// 2Re(i^a) + 2Re(i^b) + 2Re(i^(a+b)).
std::int64_t character_eigenvalue(const GraphSpec& g, const Vertex& z);

/// Sum over x in the class of conj(xi^<z,x>); alpha_z is this over q^(N/2).
Cyclo fourier_coefficient(const Coloring& f, int color, const Vertex& z);

/// All coefficients of one color class, indexed by frequency.
struct ColorSpectrum {
  GraphSpec graph;
  int color = 0;
  std::uint64_t class_size = 0;
  std::vector<Cyclo> coefficients;
  std::vector<std::int64_t> lambdas;  // lambda(z)
};

/// ResourceError above max_vertices; UnsupportedOperation outside q in {2,3,4}.
ColorSpectrum color_spectrum(const Coloring& f, int color, std::uint64_t max_vertices = kOracleVertexLimit);

/// Sum of |alpha_z|^2 over lambda(z) = lambda.
BigRational eigenspace_mass(const ColorSpectrum& s, std::int64_t lambda);
BigRational eigenspace_mass(const Coloring& f, int color, std::int64_t lambda);

/// eigenspace_mass * |V| as an integer; InternalError if it is not one.
BigInt integrality_witness(const ColorSpectrum& s, std::int64_t lambda);

/// phi_z is an eigenfunction with eigenvalue lambda(z) for every z.  Returns
/// the first frequency where M phi_z != lambda(z) phi_z, if any.
std::optional<Vertex> eigenfunction_violation(const GraphSpec& g, std::uint64_t max_vertices = kOracleVertexLimit);

struct OracleRow {
  std::int64_t lambda = 0;
  BigRational mass;
  BigInt mass_times_v;
  BigRational theorem1;  // 0 when lambda is not an eigenvalue of S
  bool matches = false;
};

struct OracleReport {
  GraphSpec graph;
  int color = 0;
  std::optional<QuotientMatrix> matrix;
  std::vector<OracleRow> rows;  // one per graph eigenvalue, descending
  bool parseval = false;
  bool support = false;       // no mass outside the spectrum of S
  bool well_formed = false;   // q=3 coefficients have x = y (mod 2)
  std::string note;

  bool agrees() const;
};

/// Verifies f, runs theorem1_check on its quotient matrix and compares.
OracleReport run_oracle(const Coloring& f, int color, std::uint64_t max_vertices = kOracleVertexLimit);

nlohmann::json oracle_to_json(const OracleReport& report);
std::string oracle_to_text(const OracleReport& report);

}  // namespace perfcol
