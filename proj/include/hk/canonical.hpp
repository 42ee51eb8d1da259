#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "hk/chain.hpp"
#include "hk/word.hpp"

namespace hk {

// The canonical form of a monoid element: k pairs (a_t, b_t) of integers.
// For the linear family these satisfy
//   1 <= a_1 < ... < a_k,  b_1 < ... < b_k <= n+1,  a_t < b_t,
// and for the circular family
//   1 <= a_1 < ... < a_k <= n,  b_1 < ... < b_k < b_1 + n,  a_t < b_t,
// with k < n. The b_t of a circular couple encode the winding number of the
// corresponding strand via b_t = s_t + n*h_t with s_t in 1..n. The empty
// couple (k = 0) is the identity in both families.
struct SeqCouple {
  MonoidFamily family = MonoidFamily::linear;
  int n = 1;
  std::vector<long long> a;
  std::vector<long long> b;

  std::size_t k() const { return a.size(); }

  friend bool operator==(const SeqCouple& x, const SeqCouple& y) {
    return x.family == y.family && x.n == y.n && x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const SeqCouple& x, const SeqCouple& y) { return !(x == y); }
  friend bool operator<(const SeqCouple& x, const SeqCouple& y) {
    return std::tie(x.family, x.n, x.a, x.b) < std::tie(y.family, y.n, y.a, y.b);
  }
};

inline SeqCouple make_couple(MonoidFamily family, int n, std::vector<long long> a,
                             std::vector<long long> b) {
  check_rank(family, n);
  if (a.size() != b.size()) throw std::invalid_argument("couple: |a| != |b|");
  return SeqCouple{family, n, std::move(a), std::move(b)};
}

inline std::string format_couple(const SeqCouple& c) {
  std::string out = "a=[";
  for (std::size_t t = 0; t < c.a.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(c.a[t]);
  }
  out += "] b=[";
  for (std::size_t t = 0; t < c.b.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(c.b[t]);
  }
  out += "]";
  return out;
}

// Empty list means the couple is a valid member of II_n / IIC_n.
inline std::vector<std::string> validate_couple(const SeqCouple& c) {
  std::vector<std::string> bad;
  const std::size_t k = c.a.size();
  if (c.b.size() != k) {
    bad.push_back("sequence lengths differ");
    return bad;
  }
  if (c.n < min_rank(c.family)) bad.push_back("rank below family minimum");
  const bool lin = c.family == MonoidFamily::linear;
  if (lin && k > static_cast<std::size_t>(c.n)) bad.push_back("k exceeds n");
  if (!lin && k >= static_cast<std::size_t>(c.n)) bad.push_back("k must be < n");
  for (std::size_t t = 0; t < k; ++t) {
    if (c.a[t] < 1) bad.push_back("a_" + std::to_string(t + 1) + " below 1");
    if (t + 1 < k && c.a[t] >= c.a[t + 1]) bad.push_back("a not strictly increasing at " + std::to_string(t + 1));
    if (t + 1 < k && c.b[t] >= c.b[t + 1]) bad.push_back("b not strictly increasing at " + std::to_string(t + 1));
    if (c.a[t] >= c.b[t]) bad.push_back("a_t < b_t fails at t=" + std::to_string(t + 1));
  }
  if (k > 0) {
    if (lin) {
      if (c.b[k - 1] > c.n + 1) bad.push_back("b_k exceeds n+1");
    } else {
      if (c.a[k - 1] > c.n) bad.push_back("a_k exceeds n");
      if (c.b[k - 1] >= c.b[0] + c.n) bad.push_back("b_k < b_1 + n fails");
    }
  }
  return bad;
}

inline bool couple_valid(const SeqCouple& c) { return validate_couple(c).empty(); }

// Diagnostic record of a canonical-form computation: every intermediate
// state of the chain action plus the per-value extraction data.
struct CanonTraceRow {
  long long a = 0;  // value (linear) or residue (circular)
  long long m = 0;  // maximal occurrence, m = a + n*h
  long long h = 0;  // winding
  long long s = 0;  // rightmost position of m in y
  long long b = 0;  // b = s + m - a
  bool kept = true; // dropped when b = a
};

struct CanonTrace {
  std::vector<ActionState> states;  // initial state first
  std::vector<int> applied;         // letters in application order (rightmost first)
  ActionState y;
  std::vector<CanonTraceRow> rows;
};

namespace detail {

inline ActionState act_traced(const IntChain& c, const GeneratorWord& w, CanonTrace* trace) {
  ActionState s = initial_state(c.family, c.n);
  if (!trace) return act(c, w, std::move(s));
  trace->states.push_back(s);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    s = apply_generator(c, *it, std::move(s));
    trace->applied.push_back(*it);
    trace->states.push_back(s);
  }
  return s;
}

}  // namespace detail

// Linear solver: act with the canonical chain on (1, ..., n+1); the distinct
// values of the result y are the a_t, the rightmost position of a_t in y is
// b_t, and pairs with b_t = a_t are dropped.
inline SeqCouple phi_linear(const GeneratorWord& w, CanonTrace* trace = nullptr) {
  if (w.family != MonoidFamily::linear) throw std::invalid_argument("phi_linear: not a linear word");
  const IntChain chain = canonical_chain(MonoidFamily::linear, w.n);
  ActionState y = detail::act_traced(chain, w, trace);
  if (trace) trace->y = y;

  SeqCouple out{MonoidFamily::linear, w.n, {}, {}};
  // y is non-decreasing, so one left-to-right sweep finds each distinct value
  // together with its rightmost position.
  for (std::size_t p = 0; p < y.size(); ++p) {
    if (p + 1 < y.size() && y[p + 1] == y[p]) continue;
    const long long value = y[p];
    const long long pos = static_cast<long long>(p) + 1;
    const bool keep = value != pos;
    if (trace) trace->rows.push_back({value, value, 0, pos, pos, keep});
    if (keep) {
      out.a.push_back(value);
      out.b.push_back(pos);
    }
  }
  return out;
}

// Circular solver: act with the canonical circular chain on (1, ..., n). For
// every residue a present mod n in the result y, take the maximal occurring
// value m = a + n*h congruent to it, the rightmost position s of m, and set
// b = s + m - a; pairs with b = a are dropped.
inline SeqCouple phi_circular(const GeneratorWord& w, CanonTrace* trace = nullptr) {
  if (w.family != MonoidFamily::circular)
    throw std::invalid_argument("phi_circular: not a circular word");
  const int n = w.n;
  const IntChain chain = canonical_chain(MonoidFamily::circular, n);
  ActionState y = detail::act_traced(chain, w, trace);
  if (trace) trace->y = y;

  std::vector<long long> max_val(n + 1, 0), right_pos(n + 1, 0);
  for (std::size_t p = 0; p < y.size(); ++p) {
    const long long v = y[p];
    const int r = static_cast<int>((v - 1) % n) + 1;
    if (v > max_val[r] || (v == max_val[r] && static_cast<long long>(p) + 1 > right_pos[r])) {
      max_val[r] = v;
      right_pos[r] = static_cast<long long>(p) + 1;
    }
  }

  SeqCouple out{MonoidFamily::circular, n, {}, {}};
  for (int r = 1; r <= n; ++r) {
    if (max_val[r] == 0) continue;  // residue absent from y
    const long long m = max_val[r];
    const long long h = (m - r) / n;
    const long long s = right_pos[r];
    const long long b = s + m - r;
    const bool keep = b != r;
    if (trace) trace->rows.push_back({r, m, h, s, b, keep});
    if (keep) {
      out.a.push_back(r);
      out.b.push_back(b);
    }
  }
  return out;
}

inline SeqCouple canonical_form(const GeneratorWord& w, CanonTrace* trace = nullptr) {
  return w.family == MonoidFamily::linear ? phi_linear(w, trace) : phi_circular(w, trace);
}

inline bool words_equal(const GeneratorWord& w1, const GeneratorWord& w2) {
  if (w1.family != w2.family || w1.n != w2.n)
    throw std::invalid_argument("words_equal: family/rank mismatch");
  return canonical_form(w1) == canonical_form(w2);
}

// Sum of b_t - a_t: the crossing number of the canonical diagram, and a lower
// bound for the length of any representative word.
inline long long crossing_weight(const SeqCouple& c) {
  long long s = 0;
  for (std::size_t t = 0; t < c.a.size(); ++t) s += c.b[t] - c.a[t];
  return s;
}

}  // namespace hk
