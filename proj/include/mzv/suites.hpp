#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

struct SuiteCase {
  std::string input;
  Scalar deviation;
  Scalar tolerance;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;

  std::size_t passed_count() const;
  bool passed() const { return passed_count() == cases.size(); }
};

nlohmann::ordered_json to_json(const SuiteReport& report);
SuiteReport report_from_json(const nlohmann::json& j);

using GridPoint = std::pair<mpq_class, mpq_class>;  // (q, x)

/// "q,x;q,x;..." with rational entries, e.g. "1,0;1/2,-1/2".
std::vector<GridPoint> parse_grid(const std::string& text);

struct SuiteOptions {
  unsigned max_weight = 6;
  unsigned max_c = 3;
  std::vector<GridPoint> grid;
  /// Per-series default (2000 at q = 1, 200 otherwise) when absent.
  std::optional<unsigned> truncation;
  /// 10^3 times the summed tail estimates when absent.
  std::optional<Scalar> tolerance;
  mpfr_prec_t precision = kDefaultPrecision;
  /// Sum formula: restrict to one weight and/or depth.
  std::optional<unsigned> weight;
  std::optional<unsigned> depth;
  /// Telescope: m, n range and the upper summation limit.
  unsigned max_m = 5;
  unsigned max_n = 5;
  unsigned a_max = 30;
};

/// |Z_q(k;x) - Z_q(dual(k);x)| for every admissible k up to max_weight.
SuiteReport run_duality_suite(const SuiteOptions& opts);
/// |S_q(k;c) - S_q(dual(k);c)| for admissible k up to max_weight, c <= max_c,
/// at each distinct q of the grid.
SuiteReport run_ohno_suite(const SuiteOptions& opts);
/// Exact residuals of the telescoping identity over the grid.
SuiteReport run_telescope_suite(const SuiteOptions& opts);
/// |sum of zeta(k) over weight w, depth d - zeta(w)|, with both sides read off
/// as x^c coefficients of Z_1({1}^{d-1},2;x) = Z_1(d+1;x), c = w-d-1.
SuiteReport run_sumformula_suite(const SuiteOptions& opts);

/// Default grids: duality (1,0); ohno q in {1/2, 1}; telescope
/// q in {1/4,1/2,3/4,1} x x in {-1/2,0,1/3}; sumformula (1,0).
std::vector<GridPoint> default_grid(const std::string& suite);

}  // namespace mzv
