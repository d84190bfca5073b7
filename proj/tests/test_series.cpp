#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mzv/series.hpp"
#include "oracles.hpp"

using mzv::EvalConfig;
using mzv::Index;
using mzv::Params;
using mzv::Real;
using mzv::Regime;
using mzv::Scalar;

namespace {

EvalConfig floating(unsigned M, mpfr_prec_t prec = 128) { return EvalConfig{M, prec, Regime::floating}; }
EvalConfig exact(unsigned M) { return EvalConfig{M, 0, Regime::exact}; }

Scalar real(const char* text, mpfr_prec_t prec = 128) { return Scalar(Real::parse(text, prec)); }
Scalar real(const Real& r) { return Scalar(r); }

const std::vector<mpq_class> kGridQ{mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), 1};
const std::vector<mpq_class> kGridX{mpq_class(-1, 2), 0, mpq_class(1, 3)};

}  // namespace

TEST_CASE("zeta(2) is bracketed by the truncated sum and the integral tail") {
  for (unsigned M : {100u, 2000u}) {
    const auto r = mzv::eval_qmzv(Index{2}, Scalar::exact(1), floating(M));
    const Real pi = Real::pi(128);
    const Scalar zeta2 = real(pi * pi / Real(6, 128));
    CHECK(r.value < zeta2);
    CHECK(zeta2 < r.value + real(Real(1, 128) / Real(static_cast<long>(M), 128)));
    CHECK(r.truncation_used == M);
  }
  const auto r = mzv::eval_qmzv(Index{2}, Scalar::exact(1), floating(2000));
  CHECK(std::abs(r.value.to_double() - 1.6449340668) < 1e-3);
}

TEST_CASE("zeta(3) truncation error is below 1/(2M^2)") {
  const unsigned M = 2000;
  const auto r = mzv::eval_qmzv(Index{3}, Scalar::exact(1), floating(M));
  const Scalar gap = Scalar(Real::zeta(3, 128)) - r.value;
  CHECK(gap.sign() > 0);
  CHECK(gap < real(Real(1, 128) / Real(2L * M * M, 128)));
  CHECK(std::abs(r.value.to_double() - 1.2020569032) < 1e-6);
}

TEST_CASE("zeta_q(2) at q=1/2 matches a naive loop") {
  const auto q = Real(mpq_class(1, 2), 160);
  const auto r = mzv::eval_qmzv(Index{2}, Scalar::exact(1, 2), floating(200, 160));
  CHECK(abs(r.value - real(oracle::naive_qzeta_depth1(2, 200, q))) < real("1e-40", 160));
  CHECK(r.tail_estimate < real("1e-40", 160));
}

TEST_CASE("DP matches naive nested loops exactly") {
  const std::vector<Index> sides{Index{}, Index{1}, Index{2}, Index{3}, Index{1, 2}, Index{2, 1},
                                 Index{1, 1}, Index{2, 2}, Index{1, 1, 2}, Index{1, 3, 1}};
  for (const auto& q : {mpq_class(1, 2), mpq_class(1)}) {
    for (const auto& x : {mpq_class(-1, 2), mpq_class(1, 3)}) {
      for (const auto& l : sides) {
        for (const auto& r : sides) {
          if (l.depth() + r.depth() > 3) continue;
          if (l.empty() != r.empty() && !mzv::is_admissible(l.empty() ? r : l)) continue;
          CAPTURE(mzv::to_string(l));
          CAPTURE(mzv::to_string(r));
          const unsigned M = 9;
          const auto dp = mzv::eval_connected(l, r, Params::exact(q, x), exact(M));
          CHECK(dp.value.rational() == oracle::naive_connected(l.parts(), r.parts(), M, q, x));
        }
      }
    }
  }
}

TEST_CASE("qmzv and generating series at x = 0 agree exactly with the connected sum") {
  for (const auto& q : kGridQ) {
    for (const auto& k : {Index{2}, Index{1, 2}, Index{2, 1, 3}}) {
      const auto cfg = exact(12);
      const auto a = mzv::eval_qmzv(k, Scalar(q), cfg);
      const auto b = mzv::eval_generating(k, Params::exact(q, 0), cfg);
      const auto c = mzv::eval_connected(k, Index{}, Params::exact(q, 0), cfg);
      CHECK(a.value == b.value);
      CHECK(b.value == c.value);
      CHECK(a.tail_estimate == b.tail_estimate);
    }
  }
}

TEST_CASE("connected sum symmetry") {
  const std::vector<std::pair<Index, Index>> pairs{
      {Index{1, 1}, Index{1}}, {Index{1}, Index{2}}, {Index{2, 1}, Index{1, 2}}, {Index{3}, Index{}}};
  for (const auto& q : kGridQ) {
    for (const auto& x : kGridX) {
      for (const auto& [l, r] : pairs) {
        const auto p = Params::exact(q, x);
        CHECK(mzv::eval_connected(l, r, p, exact(10)).value ==
              mzv::eval_connected(r, l, p, exact(10)).value);
      }
    }
  }
}

TEST_CASE("partial sums are non-decreasing in M") {
  const auto p = Params::exact(mpq_class(3, 4), mpq_class(-1, 2));
  Scalar previous = Scalar::exact(0);
  for (unsigned M = 1; M <= 14; ++M) {
    const auto v = mzv::eval_connected(Index{1, 2}, Index{1}, p, exact(M)).value;
    CHECK(v >= previous);
    previous = v;
  }
}

TEST_CASE("empty and one-sided connected sums") {
  const auto p = Params::exact(1, 0);
  CHECK(mzv::eval_connected(Index{}, Index{}, p, exact(5)).value == Scalar::exact(1));
  CHECK(mzv::eval_connected(Index{}, Index{}, p, exact(5)).tail_estimate == Scalar::exact(0));
  CHECK(mzv::eval_connected(Index{1, 2}, Index{}, p, exact(20)).value ==
        mzv::eval_qmzv(Index{1, 2}, Scalar::exact(1), exact(20)).value);
  CHECK_THROWS_AS(mzv::eval_connected(Index{2, 1}, Index{}, p, exact(5)), mzv::ConvergenceError);
  CHECK_THROWS_AS(mzv::eval_connected(Index{}, Index{1}, p, exact(5)), mzv::ConvergenceError);
  CHECK_NOTHROW(mzv::eval_connected(Index{1}, Index{1}, p, exact(5)));
  CHECK_THROWS_AS(mzv::eval_qmzv(Index{2, 1}, Scalar::exact(1), exact(5)), mzv::ConvergenceError);
  CHECK_THROWS_AS(mzv::eval_generating(Index{}, p, exact(5)), mzv::ConvergenceError);
  CHECK_THROWS_AS(mzv::eval_qmzv(Index{2}, Scalar::exact(1), exact(0)), mzv::DomainError);
  CHECK_THROWS_AS(mzv::eval_qmzv(Index{2}, Scalar::exact(1).to_float(64), exact(5)),
                  mzv::DomainError);
}

TEST_CASE("Euler chain states agree within their tail estimates") {
  const auto p = Params::exact(1, 0);
  const auto cfg = floating(2000);
  const auto z12 = mzv::eval_qmzv(Index{1, 2}, Scalar::exact(1), cfg);
  for (const auto& [l, r] : std::vector<std::pair<Index, Index>>{{Index{1, 1}, Index{1}},
                                                                 {Index{1}, Index{2}}}) {
    const auto z = mzv::eval_connected(l, r, p, cfg);
    CHECK(abs(z.value - z12.value) <= z.tail_estimate + z12.tail_estimate);
  }
  // Tail-corrected values land close to zeta(3).
  const Scalar zeta3(Real::zeta(3, 128));
  CHECK(abs(z12.value + z12.tail_estimate - zeta3) < real("1e-3"));
}

TEST_CASE("x-duality of the generating series at q = 1/2 is tight") {
  const auto p = Params::exact(mpq_class(1, 2), mpq_class(1, 3));
  const auto a = mzv::eval_generating(Index{1, 2}, p, floating(300));
  const auto b = mzv::eval_generating(Index{3}, p, floating(300));
  CHECK(abs(a.value - b.value) < real("1e-30"));
}

TEST_CASE("x-duality at q = 1 within combined tail estimates") {
  const auto p = Params::exact(1, mpq_class(1, 4));
  const auto a = mzv::eval_generating(Index{1, 2}, p, floating(2000));
  const auto b = mzv::eval_generating(Index{3}, p, floating(2000));
  CHECK(abs(a.value - b.value) <= a.tail_estimate + b.tail_estimate);
}

TEST_CASE("generating series bound (1/(1-x))^r zeta_q(k)") {
  for (const auto& q : {mpq_class(1, 2), mpq_class(1)}) {
    for (const auto& k : {Index{2}, Index{1, 2}, Index{1, 1, 2}}) {
      const mpq_class x(1, 2);
      const auto cfg = exact(15);
      const auto z = mzv::eval_generating(k, Params::exact(q, x), cfg);
      const auto zeta = mzv::eval_qmzv(k, Scalar(q), cfg);
      CHECK(z.value.rational() <= oracle::rat_pow(1 / (1 - x), k.depth()) * zeta.value.rational());
    }
  }
  const auto z2 = mzv::eval_generating(Index{2}, Params::exact(1, mpq_class(1, 2)), floating(2000));
  const auto zeta2 = mzv::eval_qmzv(Index{2}, Scalar::exact(1), floating(2000));
  CHECK(z2.value <= Scalar::exact(2).to_float(128) * zeta2.value);
}

TEST_CASE("ohno sums") {
  const auto cfg = exact(16);
  const auto one = Scalar::exact(1);
  CHECK(mzv::eval_ohno_sum(Index{1, 2}, 0, one, cfg).value ==
        mzv::eval_qmzv(Index{1, 2}, one, cfg).value);
  CHECK(mzv::eval_ohno_sum(Index{1, 2}, 1, one, cfg).value ==
        mzv::eval_qmzv(Index{2, 2}, one, cfg).value + mzv::eval_qmzv(Index{1, 3}, one, cfg).value);
  CHECK(mzv::eval_ohno_sum(Index{3}, 1, one, cfg).value == mzv::eval_qmzv(Index{4}, one, cfg).value);

  const auto fcfg = floating(2000);
  const auto s = mzv::eval_ohno_sum(Index{1, 2}, 1, one, fcfg);
  const auto z4 = mzv::eval_qmzv(Index{4}, one, fcfg);
  CHECK(abs(s.value - z4.value) <= s.tail_estimate + z4.tail_estimate);
}

TEST_CASE("generating series is the power series of the ohno sums") {
  const mpq_class x(1, 4);
  for (const auto& q : {mpq_class(1, 2), mpq_class(1)}) {
    for (const auto& k : {Index{2}, Index{1, 2}, Index{3}}) {
      CAPTURE(mzv::to_string(k));
      const auto cfg = floating(q == 1 ? 400 : 200);
      const auto z = mzv::eval_generating(k, Params::exact(q, x), cfg);
      Scalar partial = Scalar::exact(0).to_float(128);
      Scalar x_power = Scalar::exact(1).to_float(128);
      Scalar previous_gap = z.value;
      for (unsigned c = 0; c <= 10; ++c) {
        partial += mzv::eval_ohno_sum(k, c, Scalar(q), cfg).value * x_power;
        x_power *= Scalar(x).to_float(128);
        const Scalar gap = abs(z.value - partial);
        CHECK(gap < previous_gap);
        previous_gap = gap;
      }
      CHECK(previous_gap < real("1e-5"));
    }
  }
}

TEST_CASE("estimate_tail") {
  // Geometric series sum 2^{-m}: partial sums at N-2, N-1, N; true tail 2^{-N}.
  const unsigned N = 30;
  auto geometric = [](unsigned n) { return Scalar(mpq_class(1) - mpq_class(1, 1ul << n)); };
  const Scalar est = mzv::estimate_tail({geometric(N - 2), geometric(N - 1), geometric(N)}, N);
  const Scalar truth(mpq_class(1, 1ul << N));
  CHECK(est <= truth * Scalar::exact(2));
  CHECK(est * Scalar::exact(2) >= truth);

  // zeta(2) at M/4, M/2, M covers the tail, which exceeds 1/(M+1).
  const unsigned M = 400;
  const auto r = mzv::eval_qmzv(Index{2}, Scalar::exact(1), floating(M));
  const Real pi = Real::pi(128);
  const Scalar true_tail = real(pi * pi / Real(6, 128)) - r.value;
  CHECK(r.tail_estimate >= true_tail);
  CHECK(r.tail_estimate < true_tail * Scalar::exact(2).to_float(128));

  // Converged: no change between checkpoints.
  CHECK(mzv::estimate_tail({Scalar::exact(3), Scalar::exact(3), Scalar::exact(3)}, 10) ==
        Scalar::exact(0));
  // Differences that do not shrink use the d*M fallback.
  CHECK(mzv::estimate_tail({Scalar::exact(1), Scalar::exact(2), Scalar::exact(3)}, 10) ==
        Scalar::exact(10));
}

TEST_CASE("default truncation") {
  CHECK(mzv::default_config(Scalar::exact(1)).truncation == 2000);
  CHECK(mzv::default_config(Scalar::exact(3, 4)).truncation == 200);
  CHECK(mzv::default_config(Scalar::exact(1, 2)).truncation == 200);
  CHECK(mzv::default_config(Scalar::exact(9, 10)).truncation == 2000);
}

TEST_CASE("float evaluation is reproducible digit for digit") {
  const auto p = Params::exact(1, mpq_class(1, 4));
  const auto a = mzv::eval_connected(Index{1, 1}, Index{2}, p, floating(300, 192));
  const auto b = mzv::eval_connected(Index{1, 1}, Index{2}, p, floating(300, 192));
  CHECK(a.value.to_string() == b.value.to_string());
  CHECK(a.value.precision() == 192);
}
