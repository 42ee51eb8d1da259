#pragma once

#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hk/bijections.hpp"
#include "hk/canonical.hpp"
#include "hk/word.hpp"

namespace hk {

// Exact Catalan number C_m = binom(2m, m) / (m + 1).
inline long long catalan(int m) {
  if (m < 0) throw std::invalid_argument("catalan: negative index");
  // running product keeps every intermediate value integral
  unsigned long long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return static_cast<long long>(c);
}

// All couples of II_n, in lexicographic order (a_1,b_1,a_2,b_2,...) with
// shorter prefixes first. |result| = C_{n+1}.
inline std::vector<SeqCouple> enumerate_IIn(int n) {
  check_rank(MonoidFamily::linear, n);
  std::vector<SeqCouple> out;
  SeqCouple cur{MonoidFamily::linear, n, {}, {}};
  // extend with pairs (a, b), a > last a, b > last b, a < b <= n+1
  auto rec = [&](auto&& self, long long min_a, long long min_b) -> void {
    out.push_back(cur);
    for (long long a = min_a; a <= n; ++a) {
      for (long long b = std::max(a + 1, min_b); b <= n + 1; ++b) {
        cur.a.push_back(a);
        cur.b.push_back(b);
        self(self, a + 1, b + 1);
        cur.a.pop_back();
        cur.b.pop_back();
      }
    }
  };
  rec(rec, 1, 2);
  std::sort(out.begin(), out.end());
  return out;
}

// All couples of IIC_n with crossing weight sum(b_t - a_t) <= B, sorted.
inline std::vector<SeqCouple> enumerate_IICn_bounded(int n, int B) {
  check_rank(MonoidFamily::circular, n);
  if (B < 0) throw std::invalid_argument("enumerate_IICn_bounded: negative bound");
  std::vector<SeqCouple> out;
  SeqCouple cur{MonoidFamily::circular, n, {}, {}};
  auto rec = [&](auto&& self, long long min_a, long long min_b, long long budget) -> void {
    // the n-closeness constraint only involves b_1 and the current maximum
    if (cur.a.empty() || cur.b.back() < cur.b.front() + n) out.push_back(cur);
    if (cur.k() + 1 >= static_cast<std::size_t>(n)) return;  // k < n
    for (long long a = min_a; a <= n; ++a) {
      for (long long b = std::max(a + 1, min_b); b - a <= budget; ++b) {
        if (!cur.b.empty() && b >= cur.b.front() + n) break;
        cur.a.push_back(a);
        cur.b.push_back(b);
        self(self, a + 1, b + 1, budget - (b - a));
        cur.a.pop_back();
        cur.b.pop_back();
      }
    }
  };
  rec(rec, 1, 2, B);
  std::sort(out.begin(), out.end());
  return out;
}

// Closure of the identity under right multiplication by every generator,
// going through normal words: c -> phi(normal_word(c) . x_i). For the linear
// family this reaches the whole monoid; the count must be C_{n+1}.
struct EnumResult {
  MonoidFamily family = MonoidFamily::linear;
  int n = 1;
  std::vector<SeqCouple> elements;  // sorted
  long long count = 0;
  long long products = 0;  // generation statistic: right multiplications done
  int rounds = 0;          // BFS depth reached
};

inline EnumResult enumerate_linear_monoid(int n, long long max_products = 100000000) {
  check_rank(MonoidFamily::linear, n);
  EnumResult res;
  res.family = MonoidFamily::linear;
  res.n = n;
  std::set<SeqCouple> seen;
  std::deque<SeqCouple> queue;
  SeqCouple id{MonoidFamily::linear, n, {}, {}};
  seen.insert(id);
  queue.push_back(id);
  std::deque<SeqCouple> next;
  while (!queue.empty()) {
    ++res.rounds;
    for (; !queue.empty(); queue.pop_front()) {
      const SeqCouple& c = queue.front();
      GeneratorWord base = normal_word_linear(c);
      for (int i = 1; i <= n; ++i) {
        if (++res.products > max_products)
          throw std::runtime_error("enumerate_linear_monoid: work cap exceeded");
        GeneratorWord w = base;
        w.letters.push_back(i);
        SeqCouple product = phi_linear(w);
        if (seen.insert(product).second) next.push_back(product);
      }
    }
    queue.swap(next);
  }
  res.elements.assign(seen.begin(), seen.end());
  res.count = static_cast<long long>(res.elements.size());
  return res;
}

inline long long default_work_guard() {
  if (const char* env = std::getenv("HK_MAX_WORK")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10000000;  // 10^7
}

// Canonical forms of every word of length <= L: the brute-force side of the
// ball-count cross-validation. Refuses more than max_work words.
inline std::set<SeqCouple> word_ball_canonicals(int n, MonoidFamily family, int L,
                                                long long max_work = default_work_guard()) {
  check_rank(family, n);
  if (L < 0) throw std::invalid_argument("word_ball_canonicals: negative length");
  long long total = 0, pow = 1;
  for (int l = 0; l <= L; ++l) {
    total += pow;
    if (total > max_work) throw std::runtime_error("word_ball_canonicals: n^L exceeds work guard");
    pow *= n;
  }
  std::set<SeqCouple> out;
  GeneratorWord w{family, n, {}};
  out.insert(canonical_form(w));
  for (int len = 1; len <= L; ++len) {
    w.letters.assign(len, 1);
    while (true) {
      out.insert(canonical_form(w));
      int p = len - 1;
      while (p >= 0 && w.letters[p] == n) w.letters[p--] = 1;
      if (p < 0) break;
      ++w.letters[p];
    }
  }
  return out;
}

enum class BfsVerdict { connected, not_found_within_cap };

// Breadth-first search over relation applications (both orientations)
// through words of length <= cap. `connected` is sound: it exhibits a chain
// of defining relations from w1 to w2. A negative answer only means no chain
// exists within the cap.
inline BfsVerdict bfs_equivalent(const GeneratorWord& w1, const GeneratorWord& w2, int cap,
                                 long long max_nodes = 50000000) {
  if (w1.family != w2.family || w1.n != w2.n)
    throw std::invalid_argument("bfs_equivalent: family/rank mismatch");
  if (static_cast<std::size_t>(cap) < std::max(w1.size(), w2.size()))
    throw std::invalid_argument("bfs_equivalent: cap below word length");
  if (w1.letters == w2.letters) return BfsVerdict::connected;

  auto encode = [](const std::vector<int>& ls) {
    std::string s;
    s.reserve(2 * ls.size());
    for (int l : ls) {
      s.push_back(static_cast<char>(l & 0xff));
      s.push_back(static_cast<char>((l >> 8) & 0xff));
    }
    return s;
  };
  const std::string target = encode(w2.letters);
  std::unordered_set<std::string> visited{encode(w1.letters)};
  std::deque<GeneratorWord> queue{w1};
  long long nodes = 0;
  while (!queue.empty()) {
    GeneratorWord cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& r : applicable_relations(cur)) {
      auto next = apply_relation(cur, r);
      if (!next || next->size() > static_cast<std::size_t>(cap)) continue;
      std::string key = encode(next->letters);
      if (!visited.insert(key).second) continue;
      if (key == target) return BfsVerdict::connected;
      if (++nodes > max_nodes) throw std::runtime_error("bfs_equivalent: node cap exceeded");
      queue.push_back(std::move(*next));
    }
  }
  return BfsVerdict::not_found_within_cap;
}

// The up-to-right corners (b_t - 1, a_t) of the monotone lattice path below
// the diagonal of the (n+1) x (n+1) grid associated with a linear couple.
// Strictly increasing in both coordinates with y <= x; the empty couple maps
// to the corner-free path (all right steps, then all up steps).
inline std::vector<std::pair<long long, long long>> couple_to_lattice_path(const SeqCouple& c) {
  if (c.family != MonoidFamily::linear)
    throw std::invalid_argument("couple_to_lattice_path: linear couples only");
  if (!couple_valid(c)) throw std::invalid_argument("couple_to_lattice_path: invalid couple");
  std::vector<std::pair<long long, long long>> corners;
  for (std::size_t t = 0; t < c.k(); ++t) corners.push_back({c.b[t] - 1, c.a[t]});
  return corners;
}

// Expands the corner list back into unit steps ('R'/'U') from (0,0) to
// (m,m), m = n+1. Used to confirm the path never passes above the diagonal.
inline std::string lattice_path_steps(const SeqCouple& c) {
  auto corners = couple_to_lattice_path(c);
  const long long m = c.n + 1;
  std::string steps;
  long long x = 0, y = 0;
  for (const auto& [cx, cy] : corners) {
    steps.append(static_cast<std::size_t>(cx - x), 'R');
    steps.append(static_cast<std::size_t>(cy - y), 'U');
    x = cx;
    y = cy;
  }
  steps.append(static_cast<std::size_t>(m - x), 'R');
  steps.append(static_cast<std::size_t>(m - y), 'U');
  return steps;
}

}  // namespace hk
