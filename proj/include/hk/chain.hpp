#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hk/word.hpp"

namespace hk {

// A chain is a family of idempotent maps sigma_i : A x A -> A x A indexed by
// the generators, subject to the mixed braid/idempotent identity checked by
// check_chain_axioms below. Chains induce actions of the monoid on tuples:
// x_i applies sigma_i to components (i, i+1), and in the circular family x_n
// wraps around to components (n, 1).
template <class A>
struct BasicChain {
  MonoidFamily family = MonoidFamily::linear;
  int n = 1;
  std::string name;
  std::function<std::pair<A, A>(int i, const A&, const A&)> sigma;

  std::pair<A, A> apply(int i, const A& x, const A& y) const { return sigma(i, x, y); }
};

using IntChain = BasicChain<long long>;
using WordChain = BasicChain<std::string>;  // free monoid on {x, y}, concatenation
using ActionState = std::vector<long long>;

enum class BuiltinChain {
  identity,
  projector,
  f_chain,
  monoidhom,
  absorption_min,
  absorption_max,
  canonical,
};

inline const std::map<std::string, BuiltinChain>& builtin_chain_names() {
  static const std::map<std::string, BuiltinChain> names = {
      {"identity", BuiltinChain::identity},
      {"projector", BuiltinChain::projector},
      {"f_chain", BuiltinChain::f_chain},
      {"monoidhom", BuiltinChain::monoidhom},
      {"absorption_min", BuiltinChain::absorption_min},
      {"absorption_max", BuiltinChain::absorption_max},
      {"canonical", BuiltinChain::canonical},
  };
  return names;
}

namespace detail {

// Sample unary maps used by the integer builtins. Any functions work for the
// f_chain; projectors must satisfy p(p(b)) = p(b).
inline long long f_sample(int i, long long a) {
  switch ((i - 1) % 5) {
    case 0: return a;
    case 1: return a + 1;
    case 2: return 2 * a;
    case 3: return -a;
    default: return 3;
  }
}
inline long long projector_sample(int i, long long b) {
  switch ((i - 1) % 4) {
    case 0: return b;
    case 1: return b < 0 ? 0 : (b > 2 ? 2 : b);  // clamp to [0,2]
    case 2: return 2 * (b / 2);                  // round down to even
    default: return 1;                           // constant
  }
}
// Substitution endomorphisms of the free monoid on {x, y}.
inline std::string hom_sample(int i, const std::string& w) {
  static const std::array<std::pair<const char*, const char*>, 4> subs = {{
      {"x", "y"},    // identity
      {"y", "x"},    // swap letters
      {"xy", "y"},   // x -> xy
      {"x", ""},     // kill y
  }};
  const auto& [fx, fy] = subs[(i - 1) % subs.size()];
  std::string out;
  for (char c : w) out += (c == 'x') ? fx : fy;
  return out;
}

}  // namespace detail

// The integer-carrier builtins. `canonical` is the chain behind the
// word-problem solver: sigma_i(a,b) = (a,a), except sigma_n(a,b) = (a, a+n)
// in the circular family.
inline IntChain builtin_int_chain(BuiltinChain kind, MonoidFamily family, int n) {
  check_rank(family, n);
  IntChain c;
  c.family = family;
  c.n = n;
  using P = std::pair<long long, long long>;
  switch (kind) {
    case BuiltinChain::identity:
      c.name = "identity";
      c.sigma = [](int, long long a, long long b) { return P{a, b}; };
      break;
    case BuiltinChain::projector:
      c.name = "projector";
      c.sigma = [](int i, long long a, long long b) { return P{a, detail::projector_sample(i, b)}; };
      break;
    case BuiltinChain::f_chain:
      c.name = "f_chain";
      c.sigma = [](int i, long long a, long long) { return P{a, detail::f_sample(i, a)}; };
      break;
    case BuiltinChain::absorption_min:
      c.name = "absorption_min";
      c.sigma = [](int, long long a, long long b) { return P{a, a < b ? a : b}; };
      break;
    case BuiltinChain::absorption_max:
      c.name = "absorption_max";
      c.sigma = [](int, long long a, long long b) { return P{a, a > b ? a : b}; };
      break;
    case BuiltinChain::canonical:
      c.name = "canonical";
      if (family == MonoidFamily::linear)
        c.sigma = [](int, long long a, long long) { return P{a, a}; };
      else
        c.sigma = [n](int i, long long a, long long) { return P{a, i == n ? a + n : a}; };
      break;
    case BuiltinChain::monoidhom:
      throw std::invalid_argument("monoidhom runs on the free-monoid carrier, use builtin_word_chain");
  }
  return c;
}

// sigma_i(a,b) = (1, f_i(a) b) over the free monoid on {x, y}; the identity
// element is the empty word.
inline WordChain builtin_word_chain(MonoidFamily family, int n) {
  check_rank(family, n);
  WordChain c;
  c.family = family;
  c.n = n;
  c.name = "monoidhom";
  c.sigma = [](int i, const std::string& a, const std::string& b) {
    return std::pair<std::string, std::string>{std::string(), detail::hom_sample(i, a) + b};
  };
  return c;
}

inline std::variant<IntChain, WordChain> builtin_chain(const std::string& name,
                                                       MonoidFamily family, int n) {
  auto it = builtin_chain_names().find(name);
  if (it == builtin_chain_names().end())
    throw std::invalid_argument("unknown chain name: " + name);
  if (it->second == BuiltinChain::monoidhom) return builtin_word_chain(family, n);
  return builtin_int_chain(it->second, family, n);
}

inline IntChain canonical_chain(MonoidFamily family, int n) {
  return builtin_int_chain(BuiltinChain::canonical, family, n);
}

// --- chain axiom checking ----------------------------------------------------

// One aggregated row of an AxiomReport: how one check fared for one index i
// over the whole sample set.
struct AxiomCheckLine {
  int i = 0;
  std::string check;
  long long passed = 0;
  long long failed = 0;
  std::string first_failure;  // rendering of the first failing sample, if any
};

struct AxiomReport {
  std::string chain_name;
  MonoidFamily family = MonoidFamily::linear;
  int n = 1;
  std::vector<AxiomCheckLine> lines;

  bool all_ok() const {
    for (const auto& l : lines)
      if (l.failed) return false;
    return true;
  }
  long long failures() const {
    long long f = 0;
    for (const auto& l : lines) f += l.failed;
    return f;
  }
  std::string to_string() const {
    std::ostringstream os;
    os << "chain '" << chain_name << "' (" << family_name(family) << ", n=" << n << ")\n";
    os << "  i  check          pass    fail\n";
    for (const auto& l : lines) {
      os << "  " << l.i << "  " << l.check;
      for (std::size_t s = l.check.size(); s < 13; ++s) os << ' ';
      os << "  " << l.passed << "  " << l.failed;
      if (l.failed) os << "   first: " << l.first_failure;
      os << "\n";
    }
    return os.str();
  }
};

namespace detail {

template <class A>
std::string show_triple(const std::array<A, 3>& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

}  // namespace detail

// Verifies, for every index i and every sampled triple, idempotence of
// sigma_i and the three-way identity
//   (sigma_i x Id)(Id x sigma_{i+1})(sigma_i x Id)
//     = (Id x sigma_{i+1})(sigma_i x Id)(Id x sigma_{i+1})
//     = (sigma_i x Id)(Id x sigma_{i+1}),
// factors applied left to right. The identity is required for 1 <= i < n in
// the linear family and for all i (with sigma_{n+1} = sigma_1) in the
// circular one. The report is exhaustive rather than fail-fast.
template <class A>
AxiomReport check_chain_axioms(const BasicChain<A>& c,
                               const std::vector<std::array<A, 3>>& samples) {
  if (samples.empty()) throw std::invalid_argument("check_chain_axioms: no samples");
  AxiomReport rep;
  rep.chain_name = c.name;
  rep.family = c.family;
  rep.n = c.n;

  using Triple = std::array<A, 3>;
  auto lo = [&](int i, Triple t) {  // sigma_i x Id
    auto [u, v] = c.apply(i, t[0], t[1]);
    return Triple{u, v, t[2]};
  };
  auto hi = [&](int i, Triple t) {  // Id x sigma_{i+1}
    auto [u, v] = c.apply(i, t[1], t[2]);
    return Triple{t[0], u, v};
  };

  const int eq_top = c.family == MonoidFamily::linear ? c.n - 1 : c.n;
  for (int i = 1; i <= c.n; ++i) {
    AxiomCheckLine idem{i, "idempotent", 0, 0, {}};
    AxiomCheckLine eq_ab{i, "eq4_aba=bab", 0, 0, {}};
    AxiomCheckLine eq_ac{i, "eq4_aba=ba", 0, 0, {}};
    const int j = i == c.n ? 1 : i + 1;  // sigma_{n+1} = sigma_1
    for (const auto& t : samples) {
      {
        auto once = c.apply(i, t[0], t[1]);
        auto twice = c.apply(i, once.first, once.second);
        bool ok = once == twice;
        (ok ? idem.passed : idem.failed)++;
        if (!ok && idem.first_failure.empty()) idem.first_failure = detail::show_triple(t);
      }
      if (i <= eq_top) {
        Triple a = lo(i, hi(j, lo(i, t)));
        Triple b = hi(j, lo(i, hi(j, t)));
        Triple ba = hi(j, lo(i, t));
        bool ok_ab = a == b;
        bool ok_ac = a == ba;
        (ok_ab ? eq_ab.passed : eq_ab.failed)++;
        (ok_ac ? eq_ac.passed : eq_ac.failed)++;
        if (!ok_ab && eq_ab.first_failure.empty()) eq_ab.first_failure = detail::show_triple(t);
        if (!ok_ac && eq_ac.first_failure.empty()) eq_ac.first_failure = detail::show_triple(t);
      }
    }
    rep.lines.push_back(idem);
    if (i <= eq_top) {
      rep.lines.push_back(eq_ab);
      rep.lines.push_back(eq_ac);
    }
  }
  return rep;
}

// Exhaustive small sample domains for the builtins.
inline std::vector<std::array<long long, 3>> int_sample_triples(long long lo = 0, long long hi = 4) {
  std::vector<std::array<long long, 3>> out;
  for (long long a = lo; a <= hi; ++a)
    for (long long b = lo; b <= hi; ++b)
      for (long long c = lo; c <= hi; ++c) out.push_back({a, b, c});
  return out;
}

// All words of length <= max_len over {x, y}.
inline std::vector<std::string> short_words(int max_len = 3) {
  std::vector<std::string> out{""};
  std::size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t hi = out.size();
    for (std::size_t k = lo; k < hi; ++k) {
      out.push_back(out[k] + "x");
      out.push_back(out[k] + "y");
    }
    lo = hi;
  }
  return out;
}

inline std::vector<std::array<std::string, 3>> word_sample_triples(int max_len = 3) {
  auto ws = short_words(max_len);
  std::vector<std::array<std::string, 3>> out;
  out.reserve(ws.size() * ws.size() * ws.size());
  for (const auto& a : ws)
    for (const auto& b : ws)
      for (const auto& c : ws) out.push_back({a, b, c});
  return out;
}

// --- the induced action ------------------------------------------------------

inline ActionState initial_state(MonoidFamily family, int n) {
  check_rank(family, n);
  ActionState s(family == MonoidFamily::linear ? n + 1 : n);
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = static_cast<long long>(k) + 1;
  return s;
}

// x_i applies sigma_i to components (i, i+1); the circular x_n acts on
// components (n, 1).
inline ActionState apply_generator(const IntChain& c, int i, ActionState s) {
  if (i < 1 || i > c.n) throw std::invalid_argument("apply_generator: index out of range");
  const std::size_t need = c.family == MonoidFamily::linear ? c.n + 1 : c.n;
  if (s.size() != need) throw std::invalid_argument("apply_generator: state length mismatch");
  if (c.family == MonoidFamily::circular && i == c.n) {
    auto [u, v] = c.apply(i, s[c.n - 1], s[0]);
    s[c.n - 1] = u;
    s[0] = v;
  } else {
    auto [u, v] = c.apply(i, s[i - 1], s[i]);
    s[i - 1] = u;
    s[i] = v;
  }
  return s;
}

// Applies the letters of w right to left: the rightmost letter acts first,
// so act(concat(w1, w2), s) = act(w1, act(w2, s)).
inline ActionState act(const IntChain& c, const GeneratorWord& w, ActionState s) {
  if (w.family != c.family || w.n != c.n)
    throw std::invalid_argument("act: word/chain family or rank mismatch");
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    s = apply_generator(c, *it, std::move(s));
  return s;
}

}  // namespace hk
