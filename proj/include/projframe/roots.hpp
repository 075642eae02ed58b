#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>

#include "projframe/error.hpp"
#include "projframe/numerics.hpp"

namespace projframe {

/// Exact root of unity e^{2 pi i num/den}, kept reduced with 0 <= num < den.
class RootOfUnity {
 public:
  constexpr RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw Error(ErrorKind::invalid_input, "root of unity needs a positive denominator");
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static RootOfUnity one() { return {}; }
  /// i^k
  static RootOfUnity i_pow(std::int64_t k) { return {k, 4}; }
  static RootOfUnity minus_one() { return {1, 2}; }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Complex value; quarter turns are produced exactly.
  Complex value() const {
    if ((4 * num_) % den_ == 0) {
      switch ((4 * num_) / den_) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
  }

  RootOfUnity inverse() const { return {-num_, den_}; }
  RootOfUnity conj() const { return inverse(); }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
  }
  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }

  /// k-th power.
  RootOfUnity pow(std::int64_t k) const { return {num_ * k, den_}; }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Cocycle value: an exact root of unity when known, otherwise a complex
/// approximation. The approximate form need not have unit modulus (only
/// unitary cocycles do).
class UnitComplex {
 public:
  UnitComplex() : exact_(RootOfUnity::one()), value_(1.0) {}
  UnitComplex(RootOfUnity r) : exact_(r), value_(r.value()) {}  // NOLINT(implicit)
  explicit UnitComplex(Complex z) : value_(z) {
    if (z == Complex{}) throw Error(ErrorKind::invalid_input, "cocycle values must be nonzero");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorKind::invalid_input, "cocycle values must be finite");
  }

  bool is_exact() const noexcept { return exact_.has_value(); }
  const std::optional<RootOfUnity>& exact() const noexcept { return exact_; }
  Complex value() const noexcept { return value_; }

  friend UnitComplex operator*(const UnitComplex& a, const UnitComplex& b) {
    if (a.exact_ && b.exact_) return UnitComplex(*a.exact_ * *b.exact_);
    return UnitComplex(a.value_ * b.value_);
  }
  friend UnitComplex operator/(const UnitComplex& a, const UnitComplex& b) {
    if (a.exact_ && b.exact_) return UnitComplex(*a.exact_ / *b.exact_);
    return UnitComplex(a.value_ / b.value_);
  }
  UnitComplex inverse() const {
    if (exact_) return UnitComplex(exact_->inverse());
    return UnitComplex(1.0 / value_);
  }

  /// Exact comparison when both sides are exact, tolerance otherwise.
  bool equals(const UnitComplex& other, double tol) const {
    if (exact_ && other.exact_) return *exact_ == *other.exact_;
    return std::abs(value_ - other.value_) <= tol;
  }

 private:
  std::optional<RootOfUnity> exact_;
  Complex value_;
};

/// Entry of a monomial-type matrix: zero (nullopt) or an exact root of unity.
using ExactEntry = std::optional<RootOfUnity>;

inline Complex value_of(const ExactEntry& e) { return e ? e->value() : Complex{}; }

}  // namespace projframe
