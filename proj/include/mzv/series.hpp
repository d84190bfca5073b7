#pragma once

#include <gmpxx.h>

#include <vector>

#include "mzv/index.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

/// Truncation and number regime for series evaluation. Every summation
/// variable runs over 1..truncation.
struct EvalConfig {
  unsigned truncation = 2000;
  mpfr_prec_t precision = kDefaultPrecision;
  Regime regime = Regime::floating;
};

/// 2000 terms when q = 1 (polynomial decay), 200 when q <= 3/4 (geometric),
/// float regime at default_precision().
EvalConfig default_config(const Scalar& q);

struct EvalResult {
  Scalar value;
  /// Heuristic estimate of the omitted tail; never a rigorous bound.
  Scalar tail_estimate;
  unsigned truncation_used = 0;
};

/// Partial sums of one series at three checkpoints of a fixed progression.
/// Series evaluation uses M/4, M/2 and M.
struct PartialSums {
  Scalar earlier;
  Scalar middle;
  Scalar latest;
};

/// With d = latest - middle and rho = d / (middle - earlier), returns
/// d*rho/(1-rho) when 0 < rho < 1 and |d|*truncation otherwise.
Scalar estimate_tail(const PartialSums& sums, unsigned truncation);

// 1000 x tails, plus a rounding floor of magnitude * 2^-(prec-16) in the float regime.
Scalar default_tolerance(const Scalar& tails, const Scalar& magnitude);

/// zeta_q(k), truncated. At q = 1 this is the classical MZV.
EvalResult eval_qmzv(const Index& k, const Scalar& q, const EvalConfig& cfg);

/// The connected sum Z_q(left; right; x).
EvalResult eval_connected(const Index& left, const Index& right, const Params& params,
                          const EvalConfig& cfg);

/// Z_q(k; x) = Z_q(k; {}; x).
EvalResult eval_generating(const Index& k, const Params& params, const EvalConfig& cfg);

/// S_q(k; c): sum of zeta_q over every weight-c elevation of k.
EvalResult eval_ohno_sum(const Index& k, unsigned c, const Scalar& q, const EvalConfig& cfg);

}  // namespace mzv
