#include "mzv/series.hpp"

#include "mzv/qarith.hpp"

namespace mzv {

namespace {

using detail::constant_like;
using detail::QTables;

// Sum restricted to outer variables <= M/4, <= M/2 and <= M.
template <class T>
struct Checkpoints {
  unsigned quarter;
  unsigned half;
  unsigned full;
  T at_quarter;
  T at_half;
  T at_full;

  Checkpoints(unsigned M, const T& zero)
      : quarter(M / 4), half(M / 2), full(M), at_quarter(zero), at_half(zero), at_full(zero) {}

  void add(unsigned outer, const T& value) {
    if (outer <= quarter) at_quarter += value;
    if (outer <= half) at_half += value;
    at_full += value;
  }
};

// weights[h] = sum over 0 < h_1 < ... < h_r = h of the per-factor terms
//   q^{(k_i-1)h_i} / (([h_i]_q - q^{h_i} x) [h_i]_q^{k_i-1}).
// The empty index carries the single chain h = 0 with weight 1.
template <class T>
std::vector<T> chain_weights(const Index& k, const QTables<T>& tables, unsigned M) {
  const T zero = constant_like(tables.q_power[0], 0);
  std::vector<T> weights(M + 1, zero);
  if (k.empty()) {
    weights[0] = constant_like(zero, 1);
    return weights;
  }
  std::vector<T> ratio(M + 1, zero);
  std::vector<T> inverse_shifted(M + 1, zero);
  for (unsigned h = 1; h <= M; ++h) {
    ratio[h] = tables.q_power[h] / tables.q_int[h];
    inverse_shifted[h] = constant_like(zero, 1) / tables.shifted[h];
  }
  auto factor = [&](unsigned part, unsigned h) -> T {
    return detail::power(ratio[h], part - 1) * inverse_shifted[h];
  };
  for (unsigned h = 1; h <= M; ++h) weights[h] = factor(k[0], h);
  for (std::size_t level = 1; level < k.depth(); ++level) {
    T inner = zero;  // sum of the previous level over h' < h
    for (unsigned h = 1; h <= M; ++h) {
      T next = inner * factor(k[level], h);
      inner += weights[h];
      weights[h] = std::move(next);
    }
  }
  return weights;
}

template <class T>
Checkpoints<T> connected_sum(const Index& left, const Index& right, const T& q, const T& x,
                             bool q_is_one, unsigned M) {
  const QTables<T> tables(q, x, 2 * M);
  const auto left_weights = chain_weights(left, tables, M);
  const auto right_weights = chain_weights(right, tables, M);
  const T zero = constant_like(q, 0);
  const unsigned m_first = left.empty() ? 0 : 1;
  const unsigned m_last = left.empty() ? 0 : M;
  const unsigned n_first = right.empty() ? 0 : 1;
  const unsigned n_last = right.empty() ? 0 : M;

  std::vector<T> inverse_shifted(2 * M + 1, zero);
  for (unsigned h = 1; h <= 2 * M; ++h) inverse_shifted[h] = constant_like(q, 1) / tables.shifted[h];

  // row[n] = connector(m, n), advanced one m at a time:
  //   connector(m, n) = connector(m-1, n) q^n ([m]_q - q^m x) / ([m+n]_q - q^{m+n} x).
  std::vector<T> row(M + 1, constant_like(q, 1));
  Checkpoints<T> sums(M, zero);
  for (unsigned m = m_first; m <= m_last; ++m) {
    if (m > 0) {
      for (unsigned n = std::max(n_first, 1u); n <= n_last; ++n) {
        if (!q_is_one) row[n] *= tables.q_power[n];
        row[n] *= tables.shifted[m];
        row[n] *= inverse_shifted[m + n];
      }
    }
    T row_quarter = zero;
    T row_half = zero;
    T row_full = zero;
    for (unsigned n = n_first; n <= n_last; ++n) {
      row_full += right_weights[n] * row[n];
      if (n == sums.quarter) row_quarter = row_full;
      if (n == sums.half) row_half = row_full;
    }
    if (n_last < sums.quarter) row_quarter = row_full;
    if (n_last < sums.half) row_half = row_full;
    const T& lw = left_weights[m];
    if (m <= sums.quarter) sums.at_quarter += lw * row_quarter;
    if (m <= sums.half) sums.at_half += lw * row_half;
    sums.at_full += lw * row_full;
  }
  return sums;
}

template <class T>
Checkpoints<T> qmzv_sum(const Index& k, const T& q, unsigned M) {
  const QTables<T> tables(q, constant_like(q, 0), M);
  const auto weights = chain_weights(k, tables, M);
  Checkpoints<T> sums(M, constant_like(q, 0));
  for (unsigned h = 1; h <= M; ++h) sums.add(h, weights[h]);
  return sums;
}

EvalResult finish(PartialSums sums, unsigned M) {
  Scalar tail = estimate_tail(sums, M);
  return EvalResult{std::move(sums.latest), std::move(tail), M};
}

template <class T>
EvalResult finish(Checkpoints<T> sums, unsigned M) {
  return finish(PartialSums{Scalar(std::move(sums.at_quarter)), Scalar(std::move(sums.at_half)),
                            Scalar(std::move(sums.at_full))},
                M);
}

void require_truncation(const EvalConfig& cfg) {
  if (cfg.truncation == 0) throw DomainError("truncation must be at least 1");
}

// The parameters the evaluation actually runs with, converted explicitly.
Params working_params(const Params& params, const EvalConfig& cfg) {
  if (cfg.regime == Regime::exact) {
    if (params.regime() != Regime::exact)
      throw DomainError("exact evaluation needs rational q and x");
    return params;
  }
  return params.to_float(cfg.precision);
}

}  // namespace

EvalConfig default_config(const Scalar& q) {
  EvalConfig cfg;
  cfg.precision = default_precision();
  const bool geometric = q.is_exact() ? q.rational() <= mpq_class(3, 4)
                                      : q.real() <= Real(mpq_class(3, 4), q.precision());
  cfg.truncation = geometric ? 200 : 2000;
  return cfg;
}

Scalar default_tolerance(const Scalar& tails, const Scalar& magnitude) {
  Scalar out = tails * tails.like(1000);
  if (out.is_exact()) return out;
  const mpfr_prec_t prec = std::max(tails.precision(), magnitude.precision());
  Real floor_term = abs(magnitude.real().with_precision(prec));
  mpfr_mul_2si(floor_term.get(), floor_term.get(), -static_cast<long>(prec - 16), MPFR_RNDU);
  return out + Scalar(floor_term);
}

Scalar estimate_tail(const PartialSums& sums, unsigned truncation) {
  const Scalar d = sums.latest - sums.middle;
  if (d.sign() == 0) return d.like(0);
  const Scalar previous = sums.middle - sums.earlier;
  if (previous.sign() > 0 && d.sign() > 0) {
    const Scalar rho = d / previous;
    const Scalar one = d.like(1);
    if (rho < one) return d * rho / (one - rho);
  }
  return abs(d) * d.like(static_cast<long>(truncation));
}

EvalResult eval_connected(const Index& left, const Index& right, const Params& params,
                          const EvalConfig& cfg) {
  require_truncation(cfg);
  if (left.empty() != right.empty()) {
    const Index& side = left.empty() ? right : left;
    if (!is_admissible(side))
      throw ConvergenceError("connected sum with one empty side needs the other side (" +
                             to_string(side) + ") to be admissible");
  }
  const Params p = working_params(params, cfg);
  const unsigned M = cfg.truncation;
  if (p.regime() == Regime::exact)
    return finish(connected_sum(left, right, p.q().rational(), p.x().rational(), p.q_is_one(), M), M);
  return finish(connected_sum(left, right, p.q().real(), p.x().real(), p.q_is_one(), M), M);
}

EvalResult eval_generating(const Index& k, const Params& params, const EvalConfig& cfg) {
  if (!is_admissible(k))
    throw ConvergenceError("Z_q(k;x) needs an admissible index, got (" + to_string(k) + ")");
  return eval_connected(k, Index{}, params, cfg);
}

EvalResult eval_qmzv(const Index& k, const Scalar& q, const EvalConfig& cfg) {
  require_truncation(cfg);
  if (!is_admissible(k))
    throw ConvergenceError("zeta_q(k) diverges for the non-admissible index (" + to_string(k) +
                           ")");
  const Params p = working_params(Params(q, q.like(0)), cfg);
  const unsigned M = cfg.truncation;
  if (p.regime() == Regime::exact) return finish(qmzv_sum(k, p.q().rational(), M), M);
  return finish(qmzv_sum(k, p.q().real(), M), M);
}

EvalResult eval_ohno_sum(const Index& k, unsigned c, const Scalar& q, const EvalConfig& cfg) {
  if (!is_admissible(k))
    throw ConvergenceError("S_q(k;c) needs an admissible index, got (" + to_string(k) + ")");
  std::optional<EvalResult> total;
  for (const auto& shift : compositions(c, static_cast<unsigned>(k.depth()))) {
    EvalResult term = eval_qmzv(elevate(k, shift), q, cfg);
    if (!total) {
      total = std::move(term);
    } else {
      total->value += term.value;
      total->tail_estimate += term.tail_estimate;
    }
  }
  return *total;
}

}  // namespace mzv
