#include "mzv/real.hpp"

#include <cmath>
#include <memory>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

mpfr_prec_t checked(mpfr_prec_t precision) {
  if (precision < MPFR_PREC_MIN || precision > MPFR_PREC_MAX)
    throw DomainError("precision out of range: " + std::to_string(precision));
  return precision;
}

}  // namespace

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t precision) : Real(precision) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, mpfr_prec_t precision) : Real(precision) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(mpfr_prec_t precision) const {
  Real out(precision);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

void Real::promote_to(mpfr_prec_t precision) {
  if (precision > this->precision()) mpfr_prec_round(value_, precision, MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.sign() == 0) throw DomainError("division by zero");
  promote_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::string Real::to_string() const {
  // Enough digits for a decimal -> binary round trip at this precision.
  const int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  return to_string(digits);
}

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(value_)) return "0.0";
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN),
      mpfr_free_str);
  std::string mantissa(raw.get());
  std::string out;
  if (mantissa.front() == '-') {
    out += '-';
    mantissa.erase(0, 1);
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  // Always keep a decimal point so the text reads back as a float.
  out += mantissa.front();
  out += '.';
  if (mantissa.size() > 1)
    out.append(mantissa, 1);
  else
    out += '0';
  const long e = static_cast<long>(exponent) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

Real Real::parse(std::string_view text, mpfr_prec_t precision) {
  Real out(precision);
  const std::string buffer(text);
  char* end = nullptr;
  if (!buffer.empty()) mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (buffer.empty() || end != buffer.c_str() + buffer.size() || mpfr_nan_p(out.value_))
    throw DomainError("malformed decimal '" + buffer + "'");
  return out;
}

Real Real::pi(mpfr_prec_t precision) {
  Real out(precision);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real Real::zeta(unsigned long s, mpfr_prec_t precision) {
  if (s < 2) throw DomainError("zeta(s) needs s >= 2");
  Real out(precision);
  mpfr_zeta_ui(out.value_, s, MPFR_RNDN);
  return out;
}

Real abs(Real value) {
  mpfr_abs(value.get(), value.get(), MPFR_RNDN);
  return value;
}

Real pow(const Real& base, unsigned long exponent) {
  Real out(base.precision());
  mpfr_pow_ui(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

}  // namespace mzv
