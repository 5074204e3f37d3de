#include "perfcol/numeric.hpp"

#include "perfcol/errors.hpp"

namespace perfcol {

std::string to_fraction_string(const BigRational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

BigRational parse_fraction(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw InputError("empty number in '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InputError("bad number '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InputError("bad number '" + text + "'");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return BigRational(parse_int(text.substr(0, slash)), den);
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::int64_t power_exponent_needed(BigInt den, const BigInt& base) {
  if (den < 0) den = -den;
  std::int64_t steps = 0;
  while (den != 1) {
    BigInt g = mp::gcd(den, base);
    if (g == 1) return -1;
    den /= g;
    ++steps;
  }
  return steps;
}

ScaledValue::ScaledValue(BigRational coefficient, BigInt base, BigInt exponent)
    : coefficient_(std::move(coefficient)), base_(std::move(base)), exponent_(std::move(exponent)) {
  if (base_ < 2) throw InputError("ScaledValue base must be >= 2");
  normalize();
}

void ScaledValue::normalize() {
  if (coefficient_ == 0) {
    exponent_ = 0;
    return;
  }
  BigInt num = numerator_of(coefficient_);
  BigInt den = denominator_of(coefficient_);
  while (num % base_ == 0) {
    num /= base_;
    ++exponent_;
  }
  while (den % base_ == 0) {
    den /= base_;
    --exponent_;
  }
  coefficient_ = BigRational(num, den);
}

bool ScaledValue::is_integer() const {
  if (coefficient_ == 0) return true;
  const BigInt den = denominator_of(coefficient_);
  if (exponent_ < 0) {
    // After normalization the numerator is not divisible by base, so a
    // negative power of base can never be cleared.
    return false;
  }
  std::int64_t needed = power_exponent_needed(den, base_);
  return needed >= 0 && BigInt(needed) <= exponent_;
}

bool ScaledValue::is_materializable(std::uint64_t max_bits) const {
  const BigInt magnitude = exponent_ < 0 ? BigInt(-exponent_) : exponent_;
  const std::uint64_t base_bits = mp::msb(base_) + 1;
  if (magnitude > BigInt(max_bits)) return false;
  return magnitude.convert_to<std::uint64_t>() * base_bits <= max_bits;
}

BigRational ScaledValue::materialize() const {
  if (!is_materializable()) throw ResourceError("value too large to expand: " + to_string());
  const BigInt magnitude = exponent_ < 0 ? BigInt(-exponent_) : exponent_;
  BigInt p = pow(base_, magnitude.convert_to<std::uint64_t>());
  return exponent_ < 0 ? coefficient_ / BigRational(p) : coefficient_ * BigRational(p);
}

std::string ScaledValue::to_string() const {
  if (is_materializable(128)) return to_fraction_string(materialize());
  const std::string power = base_.str() + "^" + exponent_.str();
  if (coefficient_ == 1) return power;
  if (coefficient_ == -1) return "-" + power;
  return to_fraction_string(coefficient_) + "*" + power;
}

ScaledValue ScaledValue::operator*(const ScaledValue& other) const {
  if (base_ != other.base_) throw InternalError("ScaledValue base mismatch");
  return ScaledValue(coefficient_ * other.coefficient_, base_, exponent_ + other.exponent_);
}

bool ScaledValue::operator==(const ScaledValue& other) const {
  if (coefficient_ == 0 || other.coefficient_ == 0) return coefficient_ == other.coefficient_;
  if (base_ != other.base_) return false;
  // Normal forms are not unique for composite bases (2*4^0 == 1/2*4^1), so
  // compare c1 * b^(e1-e2) with c2; a large shift can never be absorbed.
  const BigInt shift = exponent_ - other.exponent_;
  const BigInt magnitude = shift < 0 ? BigInt(-shift) : shift;
  const std::uint64_t bound = mp::msb(mp::abs(numerator_of(coefficient_))) + mp::msb(denominator_of(coefficient_)) +
                              mp::msb(mp::abs(numerator_of(other.coefficient_))) +
                              mp::msb(denominator_of(other.coefficient_)) + 2;
  if (magnitude > BigInt(bound)) return false;
  const BigRational p(pow(base_, magnitude.convert_to<std::uint64_t>()));
  return (shift < 0 ? coefficient_ / p : coefficient_ * p) == other.coefficient_;
}

}  // namespace perfcol
