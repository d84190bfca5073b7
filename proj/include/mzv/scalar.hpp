#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mzv/errors.hpp"
#include "mzv/real.hpp"

namespace mzv {

enum class Regime { exact, floating };

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

/// Precision used when none is given: MZV_DEFAULT_PREC if set and valid,
/// otherwise 128 bits.
mpfr_prec_t default_precision();

/// A number in one of two regimes: an exact rational, or an MPFR float that
/// carries its own precision. Arithmetic across regimes is a DomainError;
/// use to_float() to convert explicitly.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(mpq_class value) : value_(std::move(value)) { canonical(); }
  Scalar(Real value) : value_(std::move(value)) {}

  static Scalar exact(long num, unsigned long den = 1);
  /// An integer in this value's regime and precision.
  Scalar like(long value) const;

  Regime regime() const noexcept {
    return std::holds_alternative<mpq_class>(value_) ? Regime::exact : Regime::floating;
  }
  bool is_exact() const noexcept { return regime() == Regime::exact; }
  /// 0 for exact values.
  mpfr_prec_t precision() const noexcept;

  const mpq_class& rational() const;
  const Real& real() const;

  /// Explicit conversion to the float regime (also re-rounds floats).
  Scalar to_float(mpfr_prec_t precision) const;
  double to_double() const;
  int sign() const;

  /// "p/q" (or "p") for rationals; round-trip decimal for floats.
  std::string to_string() const;
  /// "p/q" and integers parse as exact; anything with '.', 'e' or 'E' parses
  /// as a float at `precision` (default_precision() when absent).
  static Scalar parse(std::string_view text, std::optional<mpfr_prec_t> precision = {});

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void canonical();
  void require_same_regime(const Scalar& rhs, const char* op) const;
  std::variant<mpq_class, Real> value_;
};

Scalar abs(const Scalar& value);

/// The evaluation parameters q in (0,1] and x in (-1,1), both in one regime.
class Params {
 public:
  Params(Scalar q, Scalar x);
  static Params exact(mpq_class q, mpq_class x = 0) { return Params(Scalar(q), Scalar(x)); }

  const Scalar& q() const noexcept { return q_; }
  const Scalar& x() const noexcept { return x_; }
  Regime regime() const noexcept { return q_.regime(); }
  bool q_is_one() const;

  Params to_float(mpfr_prec_t precision) const;

 private:
  Scalar q_;
  Scalar x_;
};

/// [m]_q = 1 + q + ... + q^{m-1}.
Scalar q_integer(unsigned m, const Scalar& q);
/// f_q(m;x) = prod_{h=1}^m ([h]_q - q^h x).
Scalar f_q(unsigned m, const Params& params);
/// q^{mn} f_q(m;x) f_q(n;x) / f_q(m+n;x).
Scalar connector(unsigned m, unsigned n, const Params& params);

}  // namespace mzv
