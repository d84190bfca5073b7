#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the code paths it is used to check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/real.hpp"

namespace oracle {

using Parts = std::vector<std::uint32_t>;

// k <-> y x^{k_1-1} y x^{k_2-1} ...; the dual reverses the word and swaps x, y.
inline std::string to_word(const Parts& k) {
  std::string w;
  for (auto p : k) {
    w += 'y';
    w.append(p - 1, 'x');
  }
  return w;
}

inline Parts from_word(const std::string& w) {
  Parts k;
  for (char c : w) {
    if (c == 'y')
      k.push_back(1);
    else
      ++k.back();
  }
  return k;
}

inline Parts word_dual(const Parts& k) {
  std::string w = to_word(k);
  std::reverse(w.begin(), w.end());
  for (char& c : w) c = c == 'x' ? 'y' : 'x';
  return from_word(w);
}

// Every composition of w, via the 2^{w-1} cut patterns, filtered and sorted.
inline std::vector<Parts> admissible_by_bitmask(unsigned w) {
  std::vector<Parts> out;
  for (std::uint32_t mask = 0; mask < (1u << (w - 1)); ++mask) {
    Parts k{1};
    for (unsigned i = 0; i + 1 < w; ++i) {
      if (mask & (1u << i))
        k.push_back(1);
      else
        ++k.back();
    }
    if (k.back() >= 2) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline mpq_class rat_pow(const mpq_class& b, unsigned long e) {
  mpq_class r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

inline mpq_class rat_q_int(unsigned m, const mpq_class& q) {
  // (1 - q^m)/(1 - q), or m at q = 1.
  if (q == 1) return m;
  return (1 - rat_pow(q, m)) / (1 - q);
}

inline mpq_class rat_f(unsigned m, const mpq_class& q, const mpq_class& x) {
  mpq_class p = 1;
  for (unsigned h = 1; h <= m; ++h) p *= rat_q_int(h, q) - rat_pow(q, h) * x;
  return p;
}

inline mpq_class rat_factor(unsigned part, unsigned h, const mpq_class& q, const mpq_class& x) {
  return rat_pow(q, (part - 1) * h) /
         ((rat_q_int(h, q) - rat_pow(q, h) * x) * rat_pow(rat_q_int(h, q), part - 1));
}

// Chains 0 < h_1 < ... < h_r <= M enumerated explicitly; returns (outer, weight).
inline void chains(const Parts& k, unsigned M, const mpq_class& q, const mpq_class& x,
                   std::vector<std::pair<unsigned, mpq_class>>& out, std::size_t level = 0,
                   unsigned last = 0, mpq_class acc = 1) {
  if (level == k.size()) {
    out.emplace_back(last, acc);
    return;
  }
  for (unsigned h = last + 1; h <= M; ++h)
    chains(k, M, q, x, out, level + 1, h, acc * rat_factor(k[level], h, q, x));
}

// Naive nested-loop Z_q(left; right; x) truncated at M, connector from the
// closed-form product each time.
inline mpq_class naive_connected(const Parts& left, const Parts& right, unsigned M,
                                 const mpq_class& q, const mpq_class& x) {
  std::vector<std::pair<unsigned, mpq_class>> ls, rs;
  chains(left, M, q, x, ls);
  chains(right, M, q, x, rs);
  mpq_class total = 0;
  for (const auto& [m, lw] : ls)
    for (const auto& [n, rw] : rs)
      total += lw * rw * rat_pow(q, m * n) * rat_f(m, q, x) * rat_f(n, q, x) / rat_f(m + n, q, x);
  return total;
}

inline mzv::Real naive_qzeta_depth1(unsigned k, unsigned M, const mzv::Real& q) {
  mzv::Real total(0, q.precision());
  for (unsigned m = 1; m <= M; ++m) {
    mzv::Real qint(0, q.precision());
    for (unsigned i = 0; i < m; ++i) qint += mzv::pow(q, i);
    total += mzv::pow(q, (k - 1) * m) / mzv::pow(qint, k);
  }
  return total;
}

}  // namespace oracle
