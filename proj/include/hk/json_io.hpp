#pragma once

#include <string>

#include <json.hpp>

#include "hk/bijections.hpp"
#include "hk/canonical.hpp"
#include "hk/word.hpp"

namespace hk {

using json = nlohmann::json;

inline json to_json(const GeneratorWord& w) {
  return json{{"family", family_name(w.family)}, {"n", w.n}, {"letters", w.letters}};
}

inline GeneratorWord word_from_json(const json& j) {
  auto family = family_from_name(j.at("family").get<std::string>());
  int n = j.at("n").get<int>();
  return make_word(family, n, j.at("letters").get<std::vector<int>>());
}

inline json to_json(const SeqCouple& c) {
  return json{{"family", family_name(c.family)}, {"n", c.n}, {"a", c.a}, {"b", c.b}};
}

// family and n may be omitted in the JSON when supplied by the caller.
inline SeqCouple couple_from_json(const json& j, MonoidFamily fallback_family = MonoidFamily::linear,
                                  int fallback_n = 0, bool have_fallback = false) {
  MonoidFamily family = fallback_family;
  int n = fallback_n;
  if (j.contains("family")) family = family_from_name(j.at("family").get<std::string>());
  else if (!have_fallback) throw std::invalid_argument("couple JSON: missing family");
  if (j.contains("n")) n = j.at("n").get<int>();
  else if (!have_fallback) throw std::invalid_argument("couple JSON: missing n");
  auto a = j.at("a").get<std::vector<long long>>();
  auto b = j.at("b").get<std::vector<long long>>();
  return make_couple(family, n, std::move(a), std::move(b));
}

inline json to_json(const Perm& p) { return json{{"images", p.images}}; }

inline Perm perm_from_json(const json& j) {
  Perm p{j.at("images").get<std::vector<int>>()};
  if (!is_permutation(p)) throw std::invalid_argument("images is not a permutation");
  return p;
}

inline json to_json(const LeftCouple& lc) {
  return json{{"n", lc.n}, {"c", lc.c}, {"d", lc.d}, {"h", lc.h}, {"q", lc.q}, {"r", lc.r}};
}

// One couple per line, sorted input expected; diffable golden format.
inline std::string couples_to_jsonl(const std::vector<SeqCouple>& cs) {
  std::string out;
  for (const auto& c : cs) {
    out += to_json(c).dump();
    out += '\n';
  }
  return out;
}

}  // namespace hk
