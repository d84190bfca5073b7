#include "mzv/suites.hpp"

#include <algorithm>
#include <sstream>

#include "mzv/index.hpp"
#include "mzv/series.hpp"
#include "mzv/transport.hpp"

namespace mzv {

namespace {

EvalConfig config_for(const mpq_class& q, const SuiteOptions& opts) {
  EvalConfig cfg = default_config(Scalar(q));
  cfg.precision = opts.precision;
  if (opts.truncation) cfg.truncation = *opts.truncation;
  return cfg;
}

Scalar tolerance_for(const SuiteOptions& opts, const Scalar& tails, const Scalar& magnitude) {
  if (!opts.tolerance) return default_tolerance(tails, magnitude);
  if (tails.is_exact()) return *opts.tolerance;
  return opts.tolerance->to_float(tails.precision());
}

SuiteCase make_case(std::string input, Scalar deviation, Scalar tolerance) {
  const bool passed = deviation <= tolerance;
  return SuiteCase{std::move(input), std::move(deviation), std::move(tolerance), passed};
}

SuiteCase compare(std::string input, const EvalResult& a, const EvalResult& b,
                  const SuiteOptions& opts) {
  Scalar deviation = abs(a.value - b.value);
  Scalar tolerance = tolerance_for(opts, a.tail_estimate + b.tail_estimate, abs(a.value) + abs(b.value));
  return make_case(std::move(input), std::move(deviation), std::move(tolerance));
}

std::string describe(const std::string& lhs, const std::string& rhs, const mpq_class& q,
                     const std::optional<mpq_class>& x, std::optional<unsigned> c = {}) {
  std::ostringstream out;
  out << lhs << " vs " << rhs << " q=" << q.get_str();
  if (x) out << " x=" << x->get_str();
  if (c) out << " c=" << *c;
  return out.str();
}

std::vector<mpq_class> distinct_q(const std::vector<GridPoint>& grid) {
  std::vector<mpq_class> out;
  for (const auto& [q, x] : grid)
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  return out;
}

const std::vector<GridPoint>& grid_or_default(const SuiteOptions& opts, const std::string& suite,
                                              std::vector<GridPoint>& storage) {
  if (!opts.grid.empty()) return opts.grid;
  storage = default_grid(suite);
  return storage;
}

}  // namespace

std::size_t SuiteReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.passed; }));
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  mpfr_prec_t precision = 0;
  for (const auto& c : report.cases)
    precision = std::max({precision, c.deviation.precision(), c.tolerance.precision()});
  j["precision"] = precision;
  j["summary"] = {{"total", report.cases.size()},
                  {"passed", report.passed_count()},
                  {"failed", report.cases.size() - report.passed_count()}};
  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : report.cases)
    cases.push_back({{"input", c.input},
                     {"deviation", c.deviation.to_string()},
                     {"tolerance", c.tolerance.to_string()},
                     {"passed", c.passed}});
  j["cases"] = std::move(cases);
  return j;
}

SuiteReport report_from_json(const nlohmann::json& j) {
  try {
    SuiteReport report;
    report.suite = j.at("suite").get<std::string>();
    const mpfr_prec_t stored = j.value("precision", mpfr_prec_t{0});
    const mpfr_prec_t prec = stored > 0 ? stored : default_precision();
    for (const auto& c : j.at("cases")) {
      const auto deviation = c.at("deviation").get<std::string>();
      const auto tolerance = c.at("tolerance").get<std::string>();
      report.cases.push_back(SuiteCase{c.at("input").get<std::string>(),
                                       Scalar::parse(deviation, prec),
                                       Scalar::parse(tolerance, prec),
                                       c.at("passed").get<bool>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed suite report: ") + e.what());
  }
}

std::vector<GridPoint> parse_grid(const std::string& text) {
  std::vector<GridPoint> grid;
  std::istringstream points(text);
  std::string point;
  while (std::getline(points, point, ';')) {
    if (point.empty()) continue;
    const auto comma = point.find(',');
    if (comma == std::string::npos) throw DomainError("grid point '" + point + "' must be q,x");
    const Scalar q = Scalar::parse(point.substr(0, comma));
    const Scalar x = Scalar::parse(point.substr(comma + 1));
    if (!q.is_exact() || !x.is_exact())
      throw DomainError("grid entries must be rationals such as 1/2, got '" + point + "'");
    Params(q, x);  // domain check
    grid.emplace_back(q.rational(), x.rational());
  }
  if (grid.empty()) throw DomainError("empty grid");
  return grid;
}

std::vector<GridPoint> default_grid(const std::string& suite) {
  if (suite == "ohno") return {{mpq_class(1, 2), 0}, {1, 0}};
  if (suite == "telescope") {
    std::vector<GridPoint> grid;
    for (const mpq_class& q : {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), mpq_class(1)})
      for (const mpq_class& x : {mpq_class(-1, 2), mpq_class(0), mpq_class(1, 3)})
        grid.emplace_back(q, x);
    return grid;
  }
  return {{1, 0}};
}

SuiteReport run_duality_suite(const SuiteOptions& opts) {
  SuiteReport report{"duality", {}};
  std::vector<GridPoint> storage;
  for (const auto& [q, x] : grid_or_default(opts, "duality", storage)) {
    const EvalConfig cfg = config_for(q, opts);
    const Params params = Params::exact(q, x);
    for (unsigned w = 2; w <= opts.max_weight; ++w) {
      for (const auto& k : enumerate_admissible(w)) {
        const Index kd = dual(k);
        report.cases.push_back(compare(describe(to_string(k), to_string(kd), q, x),
                                       eval_generating(k, params, cfg),
                                       eval_generating(kd, params, cfg), opts));
      }
    }
  }
  return report;
}

SuiteReport run_ohno_suite(const SuiteOptions& opts) {
  SuiteReport report{"ohno", {}};
  std::vector<GridPoint> storage;
  for (const auto& q : distinct_q(grid_or_default(opts, "ohno", storage))) {
    const EvalConfig cfg = config_for(q, opts);
    for (unsigned w = 2; w <= opts.max_weight; ++w) {
      for (const auto& k : enumerate_admissible(w)) {
        const Index kd = dual(k);
        for (unsigned c = 0; c <= opts.max_c; ++c) {
          report.cases.push_back(compare(describe(to_string(k), to_string(kd), q, {}, c),
                                         eval_ohno_sum(k, c, Scalar(q), cfg),
                                         eval_ohno_sum(kd, c, Scalar(q), cfg), opts));
        }
      }
    }
  }
  return report;
}

SuiteReport run_telescope_suite(const SuiteOptions& opts) {
  SuiteReport report{"telescope", {}};
  std::vector<GridPoint> storage;
  for (const auto& [q, x] : grid_or_default(opts, "telescope", storage)) {
    const Params params = Params::exact(q, x);
    for (unsigned m = 0; m <= opts.max_m; ++m) {
      for (unsigned n = 1; n <= opts.max_n; ++n) {
        const auto check = check_telescoping(m, n, params, opts.a_max);
        mpq_class worst = abs(check.partial_sum_residual);
        for (const auto& r : check.term_residuals) worst = std::max(worst, mpq_class(abs(r)));
        std::ostringstream input;
        input << "m=" << m << " n=" << n << " a_max=" << opts.a_max << " q=" << q.get_str()
              << " x=" << x.get_str();
        // Exact identity: nothing but zero is acceptable.
        report.cases.push_back(make_case(input.str(), Scalar(worst), Scalar(mpq_class(0))));
      }
    }
  }
  return report;
}

SuiteReport run_sumformula_suite(const SuiteOptions& opts) {
  SuiteReport report{"sumformula", {}};
  std::vector<GridPoint> storage;
  for (const auto& q : distinct_q(grid_or_default(opts, "sumformula", storage))) {
    const EvalConfig cfg = config_for(q, opts);
    const unsigned w_first = opts.weight.value_or(2);
    const unsigned w_last = opts.weight.value_or(opts.max_weight);
    for (unsigned w = w_first; w <= w_last; ++w) {
      for (unsigned d = 1; d < w; ++d) {
        if (opts.depth && *opts.depth != d) continue;
        // {1}^{d-1},2 elevated by every composition of c runs over all
        // admissible indices of weight w and depth d.
        std::vector<Index::part_type> ones(d - 1, 1);
        ones.push_back(2);
        const Index base(std::move(ones));
        const unsigned c = w - d - 1;
        std::ostringstream input;
        input << "w=" << w << " d=" << d << " q=" << q.get_str();
        report.cases.push_back(compare(input.str(), eval_ohno_sum(base, c, Scalar(q), cfg),
                                       eval_ohno_sum(Index{d + 1}, c, Scalar(q), cfg), opts));
      }
    }
  }
  return report;
}

}  // namespace mzv
