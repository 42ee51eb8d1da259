#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hk/canonical.hpp"
#include "hk/diagram.hpp"
#include "hk/word.hpp"

namespace hk {

// A permutation of {1..n1}, stored as the image sequence: images[i-1] = p(i).
struct Perm {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }

  friend bool operator==(const Perm& x, const Perm& y) { return x.images == y.images; }
  friend bool operator<(const Perm& x, const Perm& y) { return x.images < y.images; }
};

inline Perm identity_perm(int n1) {
  Perm p;
  p.images.resize(n1);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.images.size() + 1, false);
  for (int v : p.images) {
    if (v < 1 || v > p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// No i < j < k with p(i) > p(j) > p(k). Quadratic scan: for each j, a
// descent before it and a smaller value after it.
inline bool is_321_avoiding(const Perm& p) {
  const int n1 = p.size();
  int prefix_max = 0;
  for (int j = 1; j <= n1; ++j) {
    if (prefix_max > p(j)) {
      for (int k = j + 1; k <= n1; ++k)
        if (p(k) < p(j)) return false;
    }
    prefix_max = std::max(prefix_max, p(j));
  }
  return true;
}

// Right sequence couple of a 321-avoiding permutation: the exceedance
// positions a_t (those with p(a) > a) and their images b_t = p(a_t).
inline SeqCouple rho(const Perm& p) {
  if (!is_permutation(p)) throw std::invalid_argument("rho: not a permutation");
  if (!is_321_avoiding(p)) throw std::invalid_argument("rho: permutation contains a 321 pattern");
  const int n1 = p.size();
  if (n1 < 2) throw std::invalid_argument("rho: permutation too small");
  SeqCouple c{MonoidFamily::linear, n1 - 1, {}, {}};
  for (int i = 1; i <= n1; ++i) {
    if (p(i) > i) {
      c.a.push_back(i);
      c.b.push_back(p(i));
    }
  }
  return c;
}

// Completion map: sends a_t to b_t and the complement of (a_t) to the
// complement of (b_t) in increasing order. Inverse of rho.
inline Perm kappa(const SeqCouple& c) {
  if (c.family != MonoidFamily::linear) throw std::invalid_argument("kappa: linear couples only");
  if (!couple_valid(c)) throw std::invalid_argument("kappa: invalid couple");
  const int n1 = c.n + 1;
  std::vector<bool> a_used(n1 + 1, false), b_used(n1 + 1, false);
  Perm p;
  p.images.assign(n1, 0);
  for (std::size_t t = 0; t < c.a.size(); ++t) {
    p.images[c.a[t] - 1] = static_cast<int>(c.b[t]);
    a_used[c.a[t]] = true;
    b_used[c.b[t]] = true;
  }
  int bc = 1;
  for (int i = 1; i <= n1; ++i) {
    if (a_used[i]) continue;
    while (b_used[bc]) ++bc;
    p.images[i - 1] = bc++;
  }
  return p;
}

// Straight-line drawing of a 321-avoiding permutation: strand i runs from
// (i,0) to (p(i),1); crossings are exactly the inversions.
inline CrossingList delta(const Perm& p) {
  if (!is_permutation(p)) throw std::invalid_argument("delta: not a permutation");
  if (!is_321_avoiding(p)) throw std::invalid_argument("delta: permutation contains a 321 pattern");
  const int n1 = p.size();
  const int n = n1 - 1;
  if (n < 1) throw std::invalid_argument("delta: permutation too small");

  std::vector<Strand> strands;
  strands.reserve(n1);
  for (int i = 1; i <= n1; ++i) {
    StrandKind kind = p(i) > i    ? StrandKind::right_moving
                      : p(i) < i ? StrandKind::left_moving
                                 : StrandKind::trivial;
    strands.push_back({kind, i, p(i), 0});
  }

  std::vector<detail::RawCrossing> raw;
  for (int i = 1; i <= n1; ++i) {
    for (int j = i + 1; j <= n1; ++j) {
      if (p(i) <= p(j)) continue;
      // strand i goes right past strand j; intersection of the two segments
      Rational y(j - i, (j - i) + (p(i) - p(j)));
      Rational x = Rational(i) + Rational(p(i) - i) * y;
      raw.push_back({y, x, x, i - 1, j - 1, 0});
    }
  }
  return detail::assemble_web(MonoidFamily::linear, n, std::move(strands), std::move(raw));
}

// Preferred representative of a linear couple: for each pair, the descending
// run x_{b-1} x_{b-2} ... x_a; runs concatenated in couple order. Its length
// is sum(b_t - a_t) and phi_linear maps it back to the couple.
inline GeneratorWord normal_word_linear(const SeqCouple& c) {
  if (c.family != MonoidFamily::linear)
    throw std::invalid_argument("normal_word_linear: linear couples only");
  if (!couple_valid(c)) throw std::invalid_argument("normal_word_linear: invalid couple");
  GeneratorWord w{MonoidFamily::linear, c.n, {}};
  for (std::size_t t = 0; t < c.a.size(); ++t)
    for (long long j = c.b[t] - 1; j >= c.a[t]; --j)
      w.letters.push_back(static_cast<int>(j));
  return w;
}

// Spiral synthesis of a circular couple: repeatedly take the maximal tail
// b_u, ..., b_k of consecutive values, emit the generators b_u-1, ..., b_k-1
// (indices reduced mod n into 1..n), decrement that tail, and drop exhausted
// pairs. Blocks are concatenated in emission order, so the last emitted block
// acts first.
inline GeneratorWord spiral(const SeqCouple& c) {
  if (c.family != MonoidFamily::circular)
    throw std::invalid_argument("spiral: circular couples only");
  if (!couple_valid(c)) throw std::invalid_argument("spiral: invalid couple");
  const int n = c.n;
  std::vector<long long> a = c.a, b = c.b;
  GeneratorWord w{MonoidFamily::circular, n, {}};
  while (!a.empty()) {
    std::size_t k = a.size();
    std::size_t u = k - 1;
    while (u > 0 && b[u - 1] + 1 == b[u]) --u;
    for (std::size_t t = u; t < k; ++t) {
      long long j = b[t] - 1;  // generator index on the cover, reduce to 1..n
      w.letters.push_back(static_cast<int>((j - 1) % n + 1));
      b[t] -= 1;
    }
    for (std::size_t t = k; t-- > 0;) {
      if (b[t] == a[t]) {
        a.erase(a.begin() + t);
        b.erase(b.begin() + t);
      }
    }
  }
  return w;
}

// Endpoints of the left strands of a circular canonical diagram, lifted to
// the universal cover, together with the Euclidean-division data used to
// compute them: h = sum of right windings = q*(n-k) + r.
struct LeftCouple {
  int n = 3;
  std::vector<long long> c;
  std::vector<long long> d;
  long long h = 0;
  long long q = 0;
  long long r = 0;

  std::size_t size() const { return c.size(); }
};

// Derives the left strand endpoints from the right couple: complements of
// (a_t) and of (b_t mod n) in {1..n}, with the last r of the d-values pulled
// down by n(q+1) and the rest by nq, reordered increasingly; pairs with
// c_u = d_u become trivial strands and are discarded.
inline LeftCouple left_sequence_couple(const SeqCouple& c) {
  if (c.family != MonoidFamily::circular)
    throw std::invalid_argument("left_sequence_couple: circular couples only");
  if (!couple_valid(c)) throw std::invalid_argument("left_sequence_couple: invalid couple");
  const int n = c.n;
  const std::size_t k = c.k();

  long long h = 0;
  std::vector<bool> a_used(n + 1, false), s_used(n + 1, false);
  for (std::size_t t = 0; t < k; ++t) {
    long long s = (c.b[t] - 1) % n + 1;
    h += (c.b[t] - s) / n;
    a_used[c.a[t]] = true;
    s_used[s] = true;
  }
  const long long nk = n - static_cast<long long>(k);
  const long long q = h / nk;
  const long long r = h % nk;

  std::vector<long long> cprime, dsecond;
  for (int v = 1; v <= n; ++v) {
    if (!a_used[v]) cprime.push_back(v);
    if (!s_used[v]) dsecond.push_back(v);
  }
  std::vector<long long> dprime = dsecond;
  for (std::size_t u = 0; u < dprime.size(); ++u) {
    const bool last_r = u + static_cast<std::size_t>(r) >= dprime.size();
    dprime[u] -= static_cast<long long>(n) * (last_r ? q + 1 : q);
  }
  std::sort(dprime.begin(), dprime.end());
  for (std::size_t u = 0; u + 1 < dprime.size(); ++u)
    if (dprime[u] >= dprime[u + 1])
      throw std::logic_error("left_sequence_couple: reordered d-sequence is not strictly increasing");

  LeftCouple out;
  out.n = n;
  out.h = h;
  out.q = q;
  out.r = r;
  for (std::size_t u = 0; u < cprime.size(); ++u) {
    if (cprime[u] == dprime[u]) continue;  // trivial strand
    out.c.push_back(cprime[u]);
    out.d.push_back(dprime[u]);
  }
  return out;
}

// Full straight-line reconstruction of the canonical circular diagram: right
// segments (a_t,0)->(b_t,1) and left segments (c_u,0)->(d_u,1) in the cover,
// projected to the cylinder; the crossings of each right segment with the
// n-translates of the left segments.
inline CrossingList web_from_couple_circular(const SeqCouple& cp) {
  if (cp.family != MonoidFamily::circular)
    throw std::invalid_argument("web_from_couple_circular: circular couples only");
  if (!couple_valid(cp)) throw std::invalid_argument("web_from_couple_circular: invalid couple");
  const int n = cp.n;
  const LeftCouple lc = left_sequence_couple(cp);

  std::vector<Strand> strands;
  std::vector<int> rights, lefts;
  std::vector<bool> used(n + 1, false);
  for (std::size_t t = 0; t < cp.k(); ++t) {
    long long s = (cp.b[t] - 1) % n + 1;
    rights.push_back(static_cast<int>(strands.size()));
    strands.push_back({StrandKind::right_moving, static_cast<int>(cp.a[t]), cp.b[t],
                       (cp.b[t] - s) / n});
    used[cp.a[t]] = true;
  }
  for (std::size_t u = 0; u < lc.size(); ++u) {
    long long top = ((lc.d[u] - 1) % n + n) % n + 1;
    lefts.push_back(static_cast<int>(strands.size()));
    strands.push_back({StrandKind::left_moving, static_cast<int>(lc.c[u]), lc.d[u],
                       (top - lc.d[u]) / n});
    used[lc.c[u]] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[v]) strands.push_back({StrandKind::trivial, v, v, 0});

  std::vector<detail::RawCrossing> raw;
  for (int ri : rights) {
    const long long a = strands[ri].lower, b = strands[ri].upper;
    for (int li : lefts) {
      const long long cu = strands[li].lower, du = strands[li].upper;
      // the translate L + jn crosses R iff a < cu + jn and b > du + jn
      for (long long j = -(2 + (std::max(std::abs(a - cu), std::abs(b - du)) / n));; ++j) {
        const long long c0 = cu + j * n, d0 = du + j * n;
        if (c0 <= a) continue;
        if (d0 >= b) break;
        Rational y(c0 - a, (b - a) + (cu - du));
        Rational x = Rational(a) + Rational(b - a) * y;
        raw.push_back({y, detail::cylinder_coord(x, n), x, ri, li, j});
      }
    }
  }
  return detail::assemble_web(MonoidFamily::circular, n, std::move(strands), std::move(raw));
}

// Word read off the straight-line diagram, bottom to top. phi_circular maps
// it back to the couple and its length is sum(b_t - a_t).
inline GeneratorWord straightline_word_circular(const SeqCouple& c) {
  return word_from_web(web_from_couple_circular(c));
}

}  // namespace hk
