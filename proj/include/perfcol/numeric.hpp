#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace perfcol {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using BigRational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline BigInt numerator_of(const BigRational& r) { return mp::numerator(r); }
inline BigInt denominator_of(const BigRational& r) { return mp::denominator(r); }

inline bool is_integer(const BigRational& r) { return denominator_of(r) == 1; }

/// "p/q" or "p" when the denominator is one.
std::string to_fraction_string(const BigRational& r);

/// Accepts "p", "-p", "p/q".
BigRational parse_fraction(const std::string& text);

BigInt pow(const BigInt& base, std::uint64_t exponent);

/// Smallest e >= 0 with den | base^e, or -1 if no such e exists.
std::int64_t power_exponent_needed(BigInt den, const BigInt& base);

/// Exact value coefficient * base^exponent with an arbitrary-size exponent.
///
/// Used wherever |V(G)| = q^N appears: N itself may be ~10^29, so the
/// power is never expanded unless it is small.
class ScaledValue {
 public:
  ScaledValue() = default;
  ScaledValue(BigRational coefficient, BigInt base, BigInt exponent);

  static ScaledValue of(const BigRational& value, const BigInt& base) {
    return ScaledValue(value, base, BigInt(0));
  }

  const BigRational& coefficient() const { return coefficient_; }
  const BigInt& base() const { return base_; }
  const BigInt& exponent() const { return exponent_; }

  int sign() const { return coefficient_.sign(); }
  bool is_zero() const { return coefficient_ == 0; }
  bool is_integer() const;

  /// True when the expanded value stays under max_bits.
  bool is_materializable(std::uint64_t max_bits = 1u << 14) const;
  BigRational materialize() const;

  /// Expanded fraction when it fits in 128 bits, otherwise "c*b^e".
  std::string to_string() const;

  ScaledValue operator*(const ScaledValue& other) const;
  bool operator==(const ScaledValue& other) const;

 private:
  void normalize();

  BigRational coefficient_{0};
  BigInt base_{2};
  BigInt exponent_{0};
};

}  // namespace perfcol
