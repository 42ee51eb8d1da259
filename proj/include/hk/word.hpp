#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

// The two monoid families handled by this library: type A_n (a linearly
// oriented chain of generators) and type A~_n (the same chain closed into a
// cycle, subscripts mod n).
enum class MonoidFamily { linear, circular };

inline constexpr int min_rank(MonoidFamily f) {
  // The cycle needs at least 3 vertices for the relations to be consistent;
  // with n = 2 both cyclic directions would impose conflicting braid triples
  // on the same generator pair.
  return f == MonoidFamily::linear ? 1 : 3;
}

inline std::string family_name(MonoidFamily f) {
  return f == MonoidFamily::linear ? "linear" : "circular";
}

inline MonoidFamily family_from_name(std::string_view s) {
  if (s == "linear") return MonoidFamily::linear;
  if (s == "circular") return MonoidFamily::circular;
  throw std::invalid_argument("unknown family: " + std::string(s));
}

inline void check_rank(MonoidFamily family, int n) {
  if (n < min_rank(family))
    throw std::invalid_argument("rank n=" + std::to_string(n) + " below minimum " +
                                std::to_string(min_rank(family)) + " for " + family_name(family));
}

// A word in the generators x_1..x_n. Letters are 1-based; the empty word is
// the identity. This is the free-word level: no relations are applied here.
struct GeneratorWord {
  MonoidFamily family = MonoidFamily::linear;
  int n = 1;
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const GeneratorWord& x, const GeneratorWord& y) {
    return x.family == y.family && x.n == y.n && x.letters == y.letters;
  }
};

inline GeneratorWord make_word(MonoidFamily family, int n, std::vector<int> letters) {
  check_rank(family, n);
  for (int l : letters)
    if (l < 1 || l > n)
      throw std::invalid_argument("letter " + std::to_string(l) + " out of range [1," +
                                  std::to_string(n) + "]");
  return GeneratorWord{family, n, std::move(letters)};
}

// Accepts whitespace- or dot-separated tokens, each either a bare integer or
// "x<i>". The leftmost token becomes the leftmost letter.
inline GeneratorWord parse_word(std::string_view text, MonoidFamily family, int n) {
  check_rank(family, n);
  std::vector<int> letters;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::string digits = tok;
    if (digits[0] == 'x' || digits[0] == 'X') digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("malformed token '" + tok + "'");
    if (digits.size() > 9) throw std::invalid_argument("letter out of range in token '" + tok + "'");
    int v = std::stoi(digits);
    if (v < 1 || v > n)
      throw std::invalid_argument("letter " + std::to_string(v) + " out of range [1," +
                                  std::to_string(n) + "]");
    letters.push_back(v);
    tok.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.')
      flush();
    else
      tok.push_back(c);
  }
  flush();
  return GeneratorWord{family, n, std::move(letters)};
}

// Canonical serialization: space-separated integers.
inline std::string format_word(const GeneratorWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

inline GeneratorWord concat(const GeneratorWord& w1, const GeneratorWord& w2) {
  if (w1.family != w2.family || w1.n != w2.n)
    throw std::invalid_argument("concat: family/rank mismatch");
  GeneratorWord out = w1;
  out.letters.insert(out.letters.end(), w2.letters.begin(), w2.letters.end());
  return out;
}

// Cyclic successor of a generator index. For the linear family the last
// generator has no successor (returns 0).
inline int successor(int i, MonoidFamily family, int n) {
  if (family == MonoidFamily::linear) return i < n ? i + 1 : 0;
  return i % n + 1;
}

// Far-commutativity: x_i x_j = x_j x_i whenever i and j are not equal and not
// adjacent in the (oriented) chain or cycle.
inline bool commutes(int i, int j, MonoidFamily family, int n) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("generator index out of range");
  if (family == MonoidFamily::linear) return std::abs(i - j) >= 2;
  int d = ((i - j) % n + n) % n;
  return d != 0 && d != 1 && d != n - 1;
}

// --- defining relations, as positional rewriting instances ------------------
//
// With act() consuming letters right to left (rightmost letter acts first),
// the braid-type relation on an oriented pair (i, j = successor(i)) takes the
// word-string form
//     [i, j, i] = [j, i, j] = [j, i],
// the two triples being the length-preserving swap and [j, i] the contraction
// target. Idempotency is [i, i] = [i], far commutativity swaps a commuting
// adjacent pair in place.

enum class RelationKind { idempotent, far_commute, braid };

enum class BraidForm {
  none,          // not a braid instance
  swap_triples,  // [i, j, i] <-> [j, i, j]
  contract_iji,  // [i, j, i] <-> [j, i]
  contract_jij,  // [j, i, j] <-> [j, i]
};

struct RelationInstance {
  RelationKind kind = RelationKind::idempotent;
  BraidForm form = BraidForm::none;
  int position = 0;     // index of the leftmost letter involved
  bool forward = true;  // false applies the equality right-to-left

  friend bool operator==(const RelationInstance& a, const RelationInstance& b) {
    return a.kind == b.kind && a.form == b.form && a.position == b.position &&
           a.forward == b.forward;
  }
};

inline RelationInstance inverse(const RelationInstance& r) {
  RelationInstance out = r;
  out.forward = !r.forward;
  return out;
}

namespace detail {
inline bool is_iji(const std::vector<int>& ls, std::size_t p, MonoidFamily f, int n) {
  return p + 2 < ls.size() && ls[p] == ls[p + 2] && successor(ls[p], f, n) == ls[p + 1];
}
inline bool is_jij(const std::vector<int>& ls, std::size_t p, MonoidFamily f, int n) {
  return p + 2 < ls.size() && ls[p] == ls[p + 2] && successor(ls[p + 1], f, n) == ls[p];
}
inline bool is_ji(const std::vector<int>& ls, std::size_t p, MonoidFamily f, int n) {
  return p + 1 < ls.size() && successor(ls[p + 1], f, n) == ls[p];
}
}  // namespace detail

// Applies r to w if the pattern matches at r.position; std::nullopt otherwise.
// The position itself must be inside the word.
inline std::optional<GeneratorWord> apply_relation(const GeneratorWord& w,
                                                   const RelationInstance& r) {
  const auto& ls = w.letters;
  const std::size_t p = static_cast<std::size_t>(r.position);
  if (r.position < 0 || p >= ls.size()) throw std::out_of_range("apply_relation: position");
  const MonoidFamily f = w.family;
  const int n = w.n;
  GeneratorWord out = w;
  auto& v = out.letters;

  switch (r.kind) {
    case RelationKind::idempotent:
      if (r.forward) {
        if (p + 1 >= ls.size() || ls[p] != ls[p + 1]) return std::nullopt;
        v.erase(v.begin() + p);
      } else {
        v.insert(v.begin() + p, ls[p]);
      }
      return out;

    case RelationKind::far_commute:
      if (p + 1 >= ls.size() || !commutes(ls[p], ls[p + 1], f, n)) return std::nullopt;
      std::swap(v[p], v[p + 1]);
      return out;

    case RelationKind::braid:
      switch (r.form) {
        case BraidForm::swap_triples:
          if (r.forward) {
            if (!detail::is_iji(ls, p, f, n)) return std::nullopt;
            v[p] = ls[p + 1];
            v[p + 1] = ls[p];
            v[p + 2] = ls[p + 1];
          } else {
            if (!detail::is_jij(ls, p, f, n)) return std::nullopt;
            v[p] = ls[p + 1];
            v[p + 1] = ls[p];
            v[p + 2] = ls[p + 1];
          }
          return out;
        case BraidForm::contract_iji:
          if (r.forward) {
            if (!detail::is_iji(ls, p, f, n)) return std::nullopt;
            v[p] = ls[p + 1];
            v[p + 1] = ls[p];
            v.erase(v.begin() + p + 2);
          } else {
            if (!detail::is_ji(ls, p, f, n)) return std::nullopt;
            int i = ls[p + 1], j = ls[p];
            v[p] = i;
            v[p + 1] = j;
            v.insert(v.begin() + p + 2, i);
          }
          return out;
        case BraidForm::contract_jij:
          if (r.forward) {
            if (!detail::is_jij(ls, p, f, n)) return std::nullopt;
            v.erase(v.begin() + p + 2);
          } else {
            if (!detail::is_ji(ls, p, f, n)) return std::nullopt;
            v.insert(v.begin() + p + 2, ls[p]);
          }
          return out;
        case BraidForm::none:
          break;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

// All instances applicable to w, in a fixed deterministic order: position
// left to right, then idempotent < far_commute < braid, then braid form,
// then forward before backward. Oracle traversals rely on this order.
inline std::vector<RelationInstance> applicable_relations(const GeneratorWord& w) {
  std::vector<RelationInstance> out;
  const auto& ls = w.letters;
  const MonoidFamily f = w.family;
  const int n = w.n;
  for (std::size_t p = 0; p < ls.size(); ++p) {
    if (p + 1 < ls.size() && ls[p] == ls[p + 1])
      out.push_back({RelationKind::idempotent, BraidForm::none, static_cast<int>(p), true});
    out.push_back({RelationKind::idempotent, BraidForm::none, static_cast<int>(p), false});
    if (p + 1 < ls.size() && commutes(ls[p], ls[p + 1], f, n))
      out.push_back({RelationKind::far_commute, BraidForm::none, static_cast<int>(p), true});
    if (detail::is_iji(ls, p, f, n)) {
      out.push_back({RelationKind::braid, BraidForm::swap_triples, static_cast<int>(p), true});
      out.push_back({RelationKind::braid, BraidForm::contract_iji, static_cast<int>(p), true});
    }
    if (detail::is_jij(ls, p, f, n)) {
      out.push_back({RelationKind::braid, BraidForm::swap_triples, static_cast<int>(p), false});
      out.push_back({RelationKind::braid, BraidForm::contract_jij, static_cast<int>(p), true});
    }
    if (detail::is_ji(ls, p, f, n)) {
      out.push_back({RelationKind::braid, BraidForm::contract_iji, static_cast<int>(p), false});
      out.push_back({RelationKind::braid, BraidForm::contract_jij, static_cast<int>(p), false});
    }
  }
  return out;
}

}  // namespace hk
