#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mzv/index.hpp"
#include "mzv/scalar.hpp"
#include "mzv/series.hpp"

namespace mzv {

/// The pair (left; right) of a connected sum Z_q(left; right; x).
struct ConnectedState {
  Index left;
  Index right;
  friend bool operator==(const ConnectedState&, const ConnectedState&) = default;
};

std::string to_string(const ConnectedState& s);

/// A: (k, 1; l) -> (k; l_1, ..., l_s + 1), needs right non-empty.
/// B: (k_1, ..., k_r + 1; l) -> (k_1, ..., k_r; l, 1), needs left's last part >= 2.
enum class TransportMove { A, B };

char to_char(TransportMove move);

bool can_apply(TransportMove move, const ConnectedState& s) noexcept;
ConnectedState apply_move(TransportMove move, const ConnectedState& s);
ConnectedState apply_move_A(const ConnectedState& s);
ConnectedState apply_move_B(const ConnectedState& s);

/// Inverses of the two moves; each undoes the forward move on its image.
ConnectedState unapply_move(TransportMove move, const ConnectedState& s);

struct ProofTrace {
  Index input;
  std::vector<ConnectedState> states;
  std::vector<TransportMove> moves;
};

/// Carries (k; {}) to ({}; dual(k)) in exactly weight(k) moves, choosing B
/// whenever the left side ends in a part >= 2 and A otherwise.
ProofTrace prove_duality(const Index& k);

/// Checks every structural invariant of a trace; returns a description of the
/// first violation, or nullopt when the trace is valid.
std::optional<std::string> trace_defect(const ProofTrace& trace);

/// Walks a trace backwards with the inverse moves, returning the recovered
/// states in forward order.
std::vector<ConnectedState> replay_inverse(const ProofTrace& trace);

nlohmann::ordered_json to_json(const ProofTrace& trace);
/// Rejects malformed JSON and traces that fail trace_defect().
ProofTrace trace_from_json(const nlohmann::json& j);

/// Exact residuals of the telescoping identity behind move A.
struct TelescopeCheck {
  unsigned m = 0;
  unsigned n = 1;
  unsigned a_max = 1;
  /// LHS(a) - (q^n/[n]_q)(T(a-1) - T(a)) for a = m+1..a_max.
  std::vector<mpq_class> term_residuals;
  /// sum_{a=m+1}^{a_max} LHS(a).
  mpq_class partial_sum;
  /// partial_sum - (q^n/[n]_q)(T(m) - T(a_max)).
  mpq_class partial_sum_residual;

  bool exact() const;
};

/// Verifies, in rational arithmetic, that for a in (m, a_max]
///   connector(a, n) / ([a]_q - q^a x) = (q^n/[n]_q) (connector(a-1, n) - connector(a, n))
/// and the corresponding partial sum.
TelescopeCheck check_telescoping(unsigned m, unsigned n, const Params& params, unsigned a_max);

struct TraceReport {
  std::vector<EvalResult> evaluations;
  Scalar max_deviation;
  Scalar max_tail;
  Scalar tolerance;
  bool passed = false;
};

/// Evaluates every state of the trace and compares them pairwise. Without an
/// explicit tolerance, 10^3 times the largest tail estimate is used.
TraceReport verify_trace_numeric(const ProofTrace& trace, const Params& params,
                                 const EvalConfig& cfg, std::optional<Scalar> tolerance = {});

nlohmann::ordered_json to_json(const TraceReport& report, const ProofTrace& trace);

}  // namespace mzv
