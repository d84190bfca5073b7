#pragma once

// Number-type generic q-arithmetic shared by the exact (mpq_class) and float
// (Real) regimes.

#include <gmpxx.h>

#include <vector>

#include "mzv/real.hpp"

namespace mzv::detail {

inline mpq_class constant_like(const mpq_class&, long value) { return mpq_class(value); }
inline Real constant_like(const Real& proto, long value) { return Real(value, proto.precision()); }

template <class T>
T power(const T& base, unsigned long exponent) {
  T result = constant_like(base, 1);
  T square = base;
  while (exponent) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent) square *= square;
  }
  return result;
}

template <class T>
T q_integer(unsigned m, const T& q) {
  T sum = constant_like(q, 0);
  T term = constant_like(q, 1);
  for (unsigned i = 0; i < m; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

/// [h]_q - q^h x for h = 0..max_h, with q^h and [h]_q alongside.
template <class T>
struct QTables {
  std::vector<T> q_power;
  std::vector<T> q_int;
  std::vector<T> shifted;

  QTables(const T& q, const T& x, unsigned max_h) {
    q_power.reserve(max_h + 1);
    q_int.reserve(max_h + 1);
    shifted.reserve(max_h + 1);
    q_power.push_back(constant_like(q, 1));
    q_int.push_back(constant_like(q, 0));
    shifted.push_back(constant_like(q, 0) - x);
    for (unsigned h = 1; h <= max_h; ++h) {
      q_int.push_back(q_int.back() + q_power.back());
      q_power.push_back(q_power.back() * q);
      shifted.push_back(q_int.back() - q_power.back() * x);
    }
  }
};

template <class T>
T f_q(unsigned m, const T& q, const T& x) {
  T product = constant_like(q, 1);
  T q_int = constant_like(q, 0);
  T q_pow = constant_like(q, 1);
  for (unsigned h = 1; h <= m; ++h) {
    q_int += q_pow;
    q_pow *= q;
    product *= q_int - q_pow * x;
  }
  return product;
}

/// Direct product form, independent of the row recurrence used for series.
template <class T>
T connector(unsigned m, unsigned n, const T& q, const T& x) {
  T value = power(q, static_cast<unsigned long>(m) * n);
  value *= f_q(m, q, x);
  value *= f_q(n, q, x);
  value /= f_q(m + n, q, x);
  return value;
}

}  // namespace mzv::detail
