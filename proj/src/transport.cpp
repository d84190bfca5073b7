#include "mzv/transport.hpp"

#include <algorithm>

#include "mzv/qarith.hpp"

namespace mzv {

namespace {

using Parts = std::vector<Index::part_type>;

Parts parts_of(const Index& k) { return Parts(k.begin(), k.end()); }

nlohmann::ordered_json index_json(const Index& k) { return nlohmann::ordered_json(k.parts()); }

Index index_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw DomainError(std::string("trace field '") + field + "' must be an array");
  Parts parts;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 ||
        v.get<std::uint64_t>() > UINT32_MAX)
      throw DomainError(std::string("trace field '") + field +
                        "' must hold positive integers");
    parts.push_back(v.get<Index::part_type>());
  }
  return Index(std::move(parts));
}

}  // namespace

std::string to_string(const ConnectedState& s) {
  return "(" + to_string(s.left) + "; " + to_string(s.right) + ")";
}

char to_char(TransportMove move) { return move == TransportMove::A ? 'A' : 'B'; }

bool can_apply(TransportMove move, const ConnectedState& s) noexcept {
  if (s.left.empty()) return false;
  if (move == TransportMove::A) return s.left.back() == 1 && !s.right.empty();
  return s.left.back() >= 2;
}

ConnectedState apply_move_A(const ConnectedState& s) {
  if (!can_apply(TransportMove::A, s))
    throw DomainError("move A needs left ending in 1 and a non-empty right: " + to_string(s));
  Parts left = parts_of(s.left);
  Parts right = parts_of(s.right);
  left.pop_back();
  ++right.back();
  return {Index(std::move(left)), Index(std::move(right))};
}

ConnectedState apply_move_B(const ConnectedState& s) {
  if (!can_apply(TransportMove::B, s))
    throw DomainError("move B needs left ending in a part >= 2: " + to_string(s));
  Parts left = parts_of(s.left);
  Parts right = parts_of(s.right);
  --left.back();
  right.push_back(1);
  return {Index(std::move(left)), Index(std::move(right))};
}

ConnectedState apply_move(TransportMove move, const ConnectedState& s) {
  return move == TransportMove::A ? apply_move_A(s) : apply_move_B(s);
}

ConnectedState unapply_move(TransportMove move, const ConnectedState& s) {
  Parts left = parts_of(s.left);
  Parts right = parts_of(s.right);
  if (move == TransportMove::A) {
    if (right.empty() || right.back() < 2)
      throw DomainError("inverse of A needs right ending in a part >= 2: " + to_string(s));
    --right.back();
    left.push_back(1);
  } else {
    if (left.empty() || right.empty() || right.back() != 1)
      throw DomainError("inverse of B needs a non-empty left and right ending in 1: " +
                        to_string(s));
    right.pop_back();
    ++left.back();
  }
  return {Index(std::move(left)), Index(std::move(right))};
}

ProofTrace prove_duality(const Index& k) {
  if (!is_admissible(k))
    throw DomainError("prove_duality: index (" + to_string(k) + ") is not admissible");
  ProofTrace trace{k, {{k, Index{}}}, {}};
  while (!trace.states.back().left.empty()) {
    const ConnectedState& current = trace.states.back();
    const TransportMove move = current.left.back() >= 2 ? TransportMove::B : TransportMove::A;
    // A from an empty right would strand a trailing 1; the strategy never gets there.
    if (!can_apply(move, current))
      throw std::logic_error("transport stuck at " + to_string(current));
    trace.moves.push_back(move);
    trace.states.push_back(apply_move(move, current));
  }
  return trace;
}

std::optional<std::string> trace_defect(const ProofTrace& trace) {
  if (!is_admissible(trace.input)) return "input is not admissible";
  const auto w = weight(trace.input);
  if (trace.moves.size() != w)
    return "expected " + std::to_string(w) + " moves, found " + std::to_string(trace.moves.size());
  if (trace.states.size() != w + 1)
    return "expected " + std::to_string(w + 1) + " states, found " +
           std::to_string(trace.states.size());
  if (trace.states.front() != ConnectedState{trace.input, Index{}})
    return "first state is not (input; {})";
  if (trace.states.back() != ConnectedState{Index{}, dual(trace.input)})
    return "last state is not ({}; dual(input))";
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const auto move = trace.moves[i];
    if (!can_apply(move, trace.states[i]))
      return "move " + std::to_string(i) + " (" + to_char(move) + ") does not apply to " +
             to_string(trace.states[i]);
    if (apply_move(move, trace.states[i]) != trace.states[i + 1])
      return "state " + std::to_string(i + 1) + " does not follow from move " +
             std::to_string(i);
  }
  return std::nullopt;
}

std::vector<ConnectedState> replay_inverse(const ProofTrace& trace) {
  std::vector<ConnectedState> states{trace.states.back()};
  for (auto it = trace.moves.rbegin(); it != trace.moves.rend(); ++it)
    states.push_back(unapply_move(*it, states.back()));
  std::reverse(states.begin(), states.end());
  return states;
}

nlohmann::ordered_json to_json(const ProofTrace& trace) {
  nlohmann::ordered_json j;
  j["input"] = index_json(trace.input);
  j["dual"] = index_json(trace.states.empty() ? Index{} : trace.states.back().right);
  auto moves = nlohmann::ordered_json::array();
  for (auto m : trace.moves) moves.push_back(std::string(1, to_char(m)));
  j["moves"] = std::move(moves);
  auto states = nlohmann::ordered_json::array();
  for (const auto& s : trace.states)
    states.push_back({{"left", index_json(s.left)}, {"right", index_json(s.right)}});
  j["states"] = std::move(states);
  return j;
}

ProofTrace trace_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("trace must be a JSON object");
  for (const char* key : {"input", "dual", "moves", "states"})
    if (!j.contains(key)) throw DomainError(std::string("trace is missing '") + key + "'");
  ProofTrace trace;
  trace.input = index_from_json(j["input"], "input");
  if (!j["moves"].is_array() || !j["states"].is_array())
    throw DomainError("trace 'moves' and 'states' must be arrays");
  for (const auto& m : j["moves"]) {
    if (m == "A") {
      trace.moves.push_back(TransportMove::A);
    } else if (m == "B") {
      trace.moves.push_back(TransportMove::B);
    } else {
      throw DomainError("unknown move " + m.dump());
    }
  }
  for (const auto& s : j["states"]) {
    if (!s.is_object() || !s.contains("left") || !s.contains("right"))
      throw DomainError("each state needs 'left' and 'right'");
    trace.states.push_back({index_from_json(s["left"], "left"), index_from_json(s["right"], "right")});
  }
  if (auto defect = trace_defect(trace)) throw DomainError("invalid trace: " + *defect);
  if (index_from_json(j["dual"], "dual") != trace.states.back().right)
    throw DomainError("invalid trace: 'dual' disagrees with the final state");
  return trace;
}

bool TelescopeCheck::exact() const {
  return partial_sum_residual == 0 &&
         std::all_of(term_residuals.begin(), term_residuals.end(),
                     [](const mpq_class& r) { return r == 0; });
}

TelescopeCheck check_telescoping(unsigned m, unsigned n, const Params& params, unsigned a_max) {
  if (params.regime() != Regime::exact)
    throw DomainError("check_telescoping runs in exact rational arithmetic only");
  if (n == 0) throw DomainError("check_telescoping needs n >= 1");
  if (a_max <= m) throw DomainError("check_telescoping needs a_max > m");
  const mpq_class& q = params.q().rational();
  const mpq_class& x = params.x().rational();

  auto T = [&](unsigned a) { return detail::connector(a, n, q, x); };
  const mpq_class scale = detail::power(q, n) / detail::q_integer(n, q);

  TelescopeCheck check;
  check.m = m;
  check.n = n;
  check.a_max = a_max;
  mpq_class previous = T(m);
  for (unsigned a = m + 1; a <= a_max; ++a) {
    const mpq_class current = T(a);
    const mpq_class lhs =
        current / (detail::q_integer(a, q) - detail::power(q, a) * x);
    check.partial_sum += lhs;
    check.term_residuals.push_back(lhs - scale * (previous - current));
    previous = current;
  }
  check.partial_sum_residual = check.partial_sum - scale * (T(m) - T(a_max));
  return check;
}

TraceReport verify_trace_numeric(const ProofTrace& trace, const Params& params,
                                 const EvalConfig& cfg, std::optional<Scalar> tolerance) {
  if (auto defect = trace_defect(trace)) throw DomainError("invalid trace: " + *defect);
  TraceReport report;
  for (const auto& s : trace.states)
    report.evaluations.push_back(eval_connected(s.left, s.right, params, cfg));
  const auto& first = report.evaluations.front();
  Scalar lowest = first.value;
  Scalar highest = first.value;
  report.max_tail = first.tail_estimate;
  for (const auto& e : report.evaluations) {
    if (e.value < lowest) lowest = e.value;
    if (e.value > highest) highest = e.value;
    if (e.tail_estimate > report.max_tail) report.max_tail = e.tail_estimate;
  }
  report.max_deviation = highest - lowest;
  report.tolerance = tolerance ? *tolerance : default_tolerance(report.max_tail, abs(highest) + abs(lowest));
  if (report.tolerance.is_exact() && !report.max_deviation.is_exact())
    report.tolerance = report.tolerance.to_float(cfg.precision);
  report.passed = report.max_deviation <= report.tolerance;
  return report;
}

nlohmann::ordered_json to_json(const TraceReport& report, const ProofTrace& trace) {
  nlohmann::ordered_json j;
  j["max_deviation"] = report.max_deviation.to_string();
  j["max_tail"] = report.max_tail.to_string();
  j["tolerance"] = report.tolerance.to_string();
  j["passed"] = report.passed;
  auto states = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.evaluations.size(); ++i) {
    const auto& e = report.evaluations[i];
    states.push_back({{"left", index_json(trace.states[i].left)},
                      {"right", index_json(trace.states[i].right)},
                      {"value", e.value.to_string()},
                      {"tail_estimate", e.tail_estimate.to_string()},
                      {"truncation", e.truncation_used}});
  }
  j["states"] = std::move(states);
  return j;
}

}  // namespace mzv
