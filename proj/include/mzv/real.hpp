#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace mzv {

/// Owning MPFR value. Every value carries its own precision; binary
/// operations produce a result at the larger of the two operand precisions.
class Real {
 public:
  static constexpr mpfr_prec_t kMinPrecision = MPFR_PREC_MIN;

  explicit Real(mpfr_prec_t precision);
  Real(long value, mpfr_prec_t precision);
  Real(const mpq_class& value, mpfr_prec_t precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  /// Rounded copy at another precision.
  Real with_precision(mpfr_prec_t precision) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const noexcept { return mpfr_sgn(value_); }

  /// Shortest-ish decimal that round-trips at this precision.
  std::string to_string() const;
  /// Decimal with `digits` significant digits.
  std::string to_string(int digits) const;
  static Real parse(std::string_view text, mpfr_prec_t precision);

  static Real pi(mpfr_prec_t precision);
  /// Riemann zeta at a positive integer >= 2 via MPFR; a test oracle.
  static Real zeta(unsigned long s, mpfr_prec_t precision);

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator-(Real value) {
    mpfr_neg(value.value_, value.value_, MPFR_RNDN);
    return value;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  void promote_to(mpfr_prec_t precision);
  mpfr_t value_;
};

Real abs(Real value);
Real pow(const Real& base, unsigned long exponent);

}  // namespace mzv
