#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "perfcol/errors.hpp"
#include "perfcol/numeric.hpp"

namespace perfcol {

/// Dense univariate polynomial, coefficients from the constant term up.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coefficients_; }
  const Scalar& operator[](int i) const { return coefficients_[i]; }
  const Scalar& leading() const { return coefficients_.back(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(coefficients_[i] * Scalar(i));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    auto c = coefficients_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  template <typename Other>
  Polynomial<Other> cast() const {
    std::vector<Other> c;
    for (const auto& v : coefficients_) c.push_back(Other(v));
    return Polynomial<Other>(std::move(c));
  }

  bool operator==(const Polynomial&) const = default;

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<Scalar> coefficients_;
};

/// p = (x - r) * quotient + remainder.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Scalar> divide_linear(const Polynomial<Scalar>& p, const Scalar& r) {
  if (p.degree() < 1) return {Polynomial<Scalar>(), p.is_zero() ? Scalar(0) : p[0]};
  std::vector<Scalar> q(p.degree());
  Scalar carry = 0;
  for (int i = p.degree(); i >= 1; --i) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return {Polynomial<Scalar>(std::move(q)), carry * r + p[0]};
}

/// Division over a field: a = q*b + r with deg r < deg b.
template <typename Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divmod(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  std::vector<Field> rem = a.coefficients();
  std::vector<Field> quot(std::max(0, a.degree() - b.degree() + 1), Field(0));
  for (int i = a.degree(); i >= b.degree(); --i) {
    const Field factor = rem[i] / b.leading();
    if (factor == 0) continue;
    quot[i - b.degree()] = factor;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= factor * b[j];
  }
  return {Polynomial<Field>(std::move(quot)), Polynomial<Field>(std::move(rem))};
}

template <typename Field>
Polynomial<Field> monic_gcd(Polynomial<Field> a, Polynomial<Field> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Field> c = a.coefficients();
  const Field lead = a.leading();
  for (auto& v : c) v /= lead;
  return Polynomial<Field>(std::move(c));
}

/// Sturm chain of the square-free part of p.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial<BigRational>& p);

  /// Sign changes along the chain at x (zeros skipped).
  int variations(const BigRational& x) const;

  /// Distinct real roots in the half-open interval (a, b].
  int count_roots(const BigRational& a, const BigRational& b) const { return variations(a) - variations(b); }

  const Polynomial<BigRational>& square_free() const { return chain_.front(); }

 private:
  std::vector<Polynomial<BigRational>> chain_;
};

/// Distinct integer roots of p inside [lo, hi], ascending, found by Sturm
/// bisection (cost is logarithmic in hi - lo).
std::vector<BigInt> integer_roots_in(const Polynomial<BigInt>& p, const BigInt& lo, const BigInt& hi);

}  // namespace perfcol
