#include "mzv/scalar.hpp"

#include <cstdlib>
#include <string>

#include "mzv/qarith.hpp"

namespace mzv {

mpfr_prec_t default_precision() {
  if (const char* env = std::getenv("MZV_DEFAULT_PREC")) {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 53 && bits <= 1 << 20) return bits;
  }
  return kDefaultPrecision;
}

Scalar Scalar::exact(long num, unsigned long den) {
  if (den == 0) throw DomainError("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::like(long value) const {
  if (is_exact()) return Scalar(mpq_class(value));
  return Scalar(Real(value, precision()));
}

void Scalar::canonical() {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    if (q->get_den() == 0) throw DomainError("zero denominator");
    q->canonicalize();
  }
}

mpfr_prec_t Scalar::precision() const noexcept {
  const auto* r = std::get_if<Real>(&value_);
  return r ? r->precision() : 0;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw DomainError("expected an exact rational, got a float");
}

const Real& Scalar::real() const {
  if (const auto* r = std::get_if<Real>(&value_)) return *r;
  throw DomainError("expected a float, got an exact rational");
}

Scalar Scalar::to_float(mpfr_prec_t precision) const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(Real(*q, precision));
  return Scalar(std::get<Real>(value_).with_precision(precision));
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_d();
  return std::get<Real>(value_).to_double();
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  return std::get<Real>(value_).sign();
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::get<Real>(value_).to_string();
}

Scalar Scalar::parse(std::string_view text, std::optional<mpfr_prec_t> precision) {
  if (text.find_first_of(".eE") != std::string_view::npos)
    return Scalar(Real::parse(text, precision.value_or(default_precision())));
  mpq_class value;
  const std::string buffer(text);
  const auto slash = buffer.find('/');
  const bool well_formed =
      !buffer.empty() && buffer.find_first_not_of("+-0123456789/") == std::string::npos &&
      slash != 0 && slash != buffer.size() - 1 && buffer.find('/', slash + 1) == std::string::npos;
  if (!well_formed || value.set_str(buffer.front() == '+' ? buffer.substr(1) : buffer, 10) != 0)
    throw DomainError("malformed number '" + buffer + "'");
  if (value.get_den() == 0) throw DomainError("zero denominator in '" + buffer + "'");
  return Scalar(std::move(value));
}

void Scalar::require_same_regime(const Scalar& rhs, const char* op) const {
  if (regime() != rhs.regime())
    throw DomainError(std::string("mixed-regime ") + op +
                      " (exact vs float); convert explicitly with to_float()");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_regime(rhs, "addition");
  std::visit([&](auto& v) { v += std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_regime(rhs, "subtraction");
  std::visit([&](auto& v) { v -= std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_regime(rhs, "multiplication");
  std::visit([&](auto& v) { v *= std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_regime(rhs, "division");
  if (rhs.sign() == 0) throw DomainError("division by zero");
  std::visit([&](auto& v) { v /= std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar operator-(const Scalar& a) {
  return std::visit(
      [](const auto& v) -> Scalar {
        using V = std::decay_t<decltype(v)>;
        return Scalar(V(-v));
      },
      a.value_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_regime(b, "comparison");
  return a.value_ == b.value_;
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.require_same_regime(b, "comparison");
  if (a.is_exact()) {
    const int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::partial_ordering::less
                 : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }
  return a.real() <=> b.real();
}

Scalar abs(const Scalar& value) { return value.sign() < 0 ? -value : value; }

Params::Params(Scalar q, Scalar x) : q_(std::move(q)), x_(std::move(x)) {
  if (q_.regime() != x_.regime()) throw DomainError("q and x must share a regime");
  const Scalar zero = q_.like(0);
  const Scalar one = q_.like(1);
  if (!(q_ > zero && q_ <= one))
    throw DomainError("q = " + q_.to_string() + " is outside (0,1]");
  const Scalar x_prec = x_.is_exact() ? x_ : x_.to_float(q_.precision());
  if (!(x_prec > -one && x_prec < one))
    throw DomainError("x = " + x_.to_string() + " is outside (-1,1)");
}

bool Params::q_is_one() const {
  return q_.is_exact() ? q_.rational() == 1 : q_.real() == Real(1, q_.precision());
}

Params Params::to_float(mpfr_prec_t precision) const {
  return Params(q_.to_float(precision), x_.to_float(precision));
}

namespace {

void require_q(const Scalar& q) {
  if (q.is_exact() ? (q.rational() <= 0 || q.rational() > 1)
                   : (q.real().sign() <= 0 || q.real() > Real(1, q.precision())))
    throw DomainError("q = " + q.to_string() + " is outside (0,1]");
}

}  // namespace

Scalar q_integer(unsigned m, const Scalar& q) {
  if (m == 0) throw DomainError("q_integer: m must be positive");
  require_q(q);
  if (q.is_exact()) return Scalar(detail::q_integer(m, q.rational()));
  return Scalar(detail::q_integer(m, q.real()));
}

Scalar f_q(unsigned m, const Params& params) {
  if (params.regime() == Regime::exact)
    return Scalar(detail::f_q(m, params.q().rational(), params.x().rational()));
  return Scalar(detail::f_q(m, params.q().real(), params.x().real()));
}

Scalar connector(unsigned m, unsigned n, const Params& params) {
  if (params.regime() == Regime::exact)
    return Scalar(detail::connector(m, n, params.q().rational(), params.x().rational()));
  return Scalar(detail::connector(m, n, params.q().real(), params.x().real()));
}

}  // namespace mzv
