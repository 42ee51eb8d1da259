// Acceptance suite: one line per criterion, PASS or FAIL, exact values and
// tolerances pinned in code. Exits nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hk/bijections.hpp"
#include "hk/canonical.hpp"
#include "hk/chain.hpp"
#include "hk/json_io.hpp"
#include "hk/oracle.hpp"
#include "hk/web.hpp"
#include "hk/word.hpp"

using namespace hk;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool ok, double secs, const std::string& note = "") {
  std::printf("%s %2d  %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), secs,
              note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// Splits `trials` across hardware threads; `body(rng, trial)` returns false on
// a failed trial. Seeds are fixed per worker so runs are reproducible.
template <class Body>
long long run_trials(long long trials, Body body) {
  unsigned workers = std::max(2u, std::thread::hardware_concurrency());
  std::atomic<long long> failures{0};
  std::vector<std::thread> pool;
  for (unsigned wkr = 0; wkr < workers; ++wkr) {
    pool.emplace_back([&, wkr] {
      std::mt19937_64 rng(0x9E3779B9ULL + wkr);
      long long local = 0;
      for (long long t = wkr; t < trials; t += workers)
        if (!body(rng, t)) ++local;
      failures += local;
    });
  }
  for (auto& th : pool) th.join();
  return failures.load();
}

GeneratorWord random_word(std::mt19937_64& rng, MonoidFamily family, int n, int max_len,
                          int min_len = 0) {
  std::vector<int> letters(min_len + rng() % (max_len - min_len + 1));
  for (auto& l : letters) l = 1 + static_cast<int>(rng() % n);
  return GeneratorWord{family, n, letters};
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = std::string(HK_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// Criterion 1: linear monoid sizes are the Catalan numbers.
void criterion_1() {
  auto start = Clock::now();
  const std::vector<long long> expected = {2, 5, 14, 42, 132, 429, 1430};
  bool ok = true;
  std::ostringstream note;
  for (int n = 1; n <= 7; ++n) {
    long long count = enumerate_linear_monoid(n).count;
    if (count != expected[n - 1] || count != catalan(n + 1)) {
      ok = false;
      note << "n=" << n << " count=" << count << " ";
    }
  }
  double secs = seconds_since(start);
  if (secs >= 10.0) {
    ok = false;
    note << "over 10 s";
  }
  report(1, "Catalan sizes of the linear monoids, n = 1..7", ok, secs, note.str());
}

// Criterion 2: couples, 321-avoiding permutations and Catalan numbers agree.
void criterion_2() {
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream note;
  for (int n = 1; n <= 7; ++n) {
    long long couples = static_cast<long long>(enumerate_IIn(n).size());
    // independent brute-force filter over all of S_{n+1}
    std::vector<int> im(n + 1);
    for (int i = 0; i <= n; ++i) im[i] = i + 1;
    long long avoiding = 0;
    do {
      bool has321 = false;
      for (int i = 0; i <= n && !has321; ++i)
        for (int j = i + 1; j <= n && !has321; ++j)
          for (int k = j + 1; k <= n && !has321; ++k)
            if (im[i] > im[j] && im[j] > im[k]) has321 = true;
      if (!has321) ++avoiding;
    } while (std::next_permutation(im.begin(), im.end()));
    if (couples != catalan(n + 1) || avoiding != catalan(n + 1)) {
      ok = false;
      note << "n=" << n << " couples=" << couples << " avoiding=" << avoiding << " ";
    }
  }
  double secs = seconds_since(start);
  if (secs >= 30.0) {
    ok = false;
    note << "over 30 s";
  }
  report(2, "couples = 321-avoiding permutations = Catalan, n = 1..7", ok, secs, note.str());
}

// Criterion 3: rho and kappa are mutually inverse, n <= 6.
void criterion_3() {
  auto start = Clock::now();
  bool ok = true;
  for (int n = 1; n <= 6 && ok; ++n) {
    for (const auto& c : enumerate_IIn(n)) {
      if (rho(kappa(c)) != c) ok = false;
    }
    std::vector<int> im(n + 1);
    for (int i = 0; i <= n; ++i) im[i] = i + 1;
    do {
      Perm p{im};
      if (!is_321_avoiding(p)) continue;
      if (kappa(rho(p)) != p) ok = false;
    } while (std::next_permutation(im.begin(), im.end()));
  }
  report(3, "bijection round trips rho/kappa on full enumerations, n <= 6", ok,
         seconds_since(start));
}

// Criterion 4: the worked example, bit-exact, through the CLI where it is a
// CLI surface.
void criterion_4() {
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream note;

  int code = -1;
  std::string out = run_cli("normalize --family circular --n 4 \"4 3 1 4 2 1 3 2 4 3\"", &code);
  if (code != 0 || out != "a=[2,3] b=[6,9]\n") {
    ok = false;
    note << "normalize printed '" << out << "' ";
  }
  out = run_cli("normalize --family circular --n 4 --trace \"4 3 1 4 2 1 3 2 4 3\"", &code);
  if (code != 0 || out.find("y = (11,6,7,7)\n") == std::string::npos) {
    ok = false;
    note << "trace final state missing ";
  }
  auto lc = left_sequence_couple(SeqCouple{MonoidFamily::circular, 4, {2, 3}, {6, 9}});
  if (lc.c != std::vector<long long>{1, 4} || lc.d != std::vector<long long>{-4, -1} ||
      lc.h != 3 || lc.q != 1 || lc.r != 1) {
    ok = false;
    note << "left couple mismatch ";
  }
  report(4, "worked example: normalize, trace state, left sequence couple", ok,
         seconds_since(start), note.str());
}

// Criterion 5: spiral and straight-line words invert the canonical form and
// have minimal length, over all bounded circular couples.
void criterion_5() {
  auto start = Clock::now();
  bool ok = true;
  long long checked = 0;
  for (int n : {3, 4}) {
    for (const auto& c : enumerate_IICn_bounded(n, 6)) {
      ++checked;
      auto ws = spiral(c);
      auto wl = straightline_word_circular(c);
      if (phi_circular(ws) != c || phi_circular(wl) != c) ok = false;
      if (static_cast<long long>(ws.size()) != crossing_weight(c) ||
          static_cast<long long>(wl.size()) != crossing_weight(c))
        ok = false;
    }
  }
  double secs = seconds_since(start);
  if (secs >= 10.0) ok = false;
  report(5, "spiral and straight-line contracts over " + std::to_string(checked) +
             " bounded circular couples",
         ok, secs);
}

// Criterion 6: brute-force word balls equal the bounded couple enumeration.
void criterion_6() {
  auto start = Clock::now();
  bool ok = true;
  for (int L = 0; L <= 6; ++L) {
    auto ball = word_ball_canonicals(3, MonoidFamily::circular, L);
    auto enumd = enumerate_IICn_bounded(3, L);
    if (ball != std::set<SeqCouple>(enumd.begin(), enumd.end())) ok = false;
  }
  report(6, "word balls match bounded couple enumeration (circular n=3, L = 0..6)", ok,
         seconds_since(start));
}

// Criterion 7: canonical forms are invariant under every defining relation.
void criterion_7() {
  auto start = Clock::now();
  long long failures = 0;
  for (auto family : {MonoidFamily::linear, MonoidFamily::circular}) {
    failures += run_trials(10000, [family](std::mt19937_64& rng, long long) {
      int n = min_rank(family) + static_cast<int>(rng() % 5);
      auto w = random_word(rng, family, n, 16);
      auto rels = applicable_relations(w);
      if (rels.empty()) return true;
      auto w2 = apply_relation(w, rels[rng() % rels.size()]);
      return w2.has_value() && canonical_form(w) == canonical_form(*w2);
    });
  }
  report(7, "relation invariance, 10^4 randomized trials per family", failures == 0,
         seconds_since(start), failures ? std::to_string(failures) + " failures" : "");
}

// Criterion 8: chain axioms hold exhaustively for every builtin chain.
void criterion_8() {
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream note;
  auto ints = int_sample_triples(0, 4);
  auto words = word_sample_triples(3);
  for (auto family : {MonoidFamily::linear, MonoidFamily::circular}) {
    for (const auto& [name, kind] : builtin_chain_names()) {
      AxiomReport rep;
      if (kind == BuiltinChain::monoidhom)
        rep = check_chain_axioms(builtin_word_chain(family, 4), words);
      else
        rep = check_chain_axioms(builtin_int_chain(kind, family, 4), ints);
      if (!rep.all_ok()) {
        ok = false;
        note << name << "/" << family_name(family) << ": " << rep.failures() << " failures ";
      }
    }
  }
  report(8, "chain axioms, exhaustive small domains, all builtins, both families", ok,
         seconds_since(start), note.str());
}

// Criterion 9: canonical linear action lands in the order-preserving
// order-decreasing transformations.
void criterion_9() {
  auto start = Clock::now();
  long long failures = run_trials(10000, [](std::mt19937_64& rng, long long) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto chain = canonical_chain(MonoidFamily::linear, n);
    auto w = random_word(rng, MonoidFamily::linear, n, 24);
    auto y = act(chain, w, initial_state(MonoidFamily::linear, n));
    for (std::size_t p = 0; p < y.size(); ++p) {
      if (y[p] > static_cast<long long>(p) + 1) return false;
      if (p && y[p - 1] > y[p]) return false;
    }
    return true;
  });
  report(9, "action output is order-preserving and order-decreasing, 10^4 trials",
         failures == 0, seconds_since(start), failures ? std::to_string(failures) + " failures" : "");
}

// Criterion 10: BFS oracle soundness on mutated pairs, plus empirical
// completeness at desk scale for circular n=3.
void criterion_10() {
  auto start = Clock::now();
  long long failures = 0;
  for (auto family : {MonoidFamily::linear, MonoidFamily::circular}) {
    failures += run_trials(5000, [family](std::mt19937_64& rng, long long) {
      int n = family == MonoidFamily::linear ? 2 : 3;
      auto w = random_word(rng, family, n, 5, 1);
      GeneratorWord w2 = w;
      int moves = 1 + static_cast<int>(rng() % 5);
      for (int m = 0; m < moves; ++m) {
        auto rels = applicable_relations(w2);
        if (rels.empty()) break;
        auto next = apply_relation(w2, rels[rng() % rels.size()]);
        if (!next) return false;
        w2 = *next;
      }
      int cap = static_cast<int>(std::max(w.size(), w2.size())) + 4;
      return bfs_equivalent(w, w2, cap) == BfsVerdict::connected && words_equal(w, w2);
    });
  }

  // exhaustive completeness probe: every equal pair of circular n=3 words of
  // length <= 4 should reconnect within cap = max length + 4; exceptions are
  // logged as findings, not failures
  std::vector<GeneratorWord> words;
  for (int len = 0; len <= 4; ++len) {
    std::vector<int> letters(len, 1);
    while (true) {
      words.push_back(GeneratorWord{MonoidFamily::circular, 3, letters});
      int p = len - 1;
      while (p >= 0 && letters[p] == 3) letters[p--] = 1;
      if (p < 0) break;
      ++letters[p];
    }
  }
  std::vector<SeqCouple> canon;
  canon.reserve(words.size());
  for (const auto& w : words) canon.push_back(phi_circular(w));
  long long findings = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (canon[i] != canon[j]) continue;
      int cap = static_cast<int>(std::max(words[i].size(), words[j].size())) + 4;
      if (bfs_equivalent(words[i], words[j], cap) != BfsVerdict::connected) {
        ++findings;
        std::printf("  finding: words '%s' and '%s' equal but not reconnected at cap %d\n",
                    format_word(words[i]).c_str(), format_word(words[j]).c_str(), cap);
      }
    }
  }
  std::string note = failures ? std::to_string(failures) + " soundness failures" : "";
  if (findings) note += (note.empty() ? "" : "; ") + std::to_string(findings) + " findings logged";
  report(10, "oracle soundness (10^4 mutated pairs) and n=3 completeness probe", failures == 0,
         seconds_since(start), note);
}

// Criterion 11: structural web property over the criterion-5 couples.
void criterion_11() {
  auto start = Clock::now();
  bool ok = true;
  long long checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : enumerate_IIn(n)) {
      ++checked;
      if (!check_web(build_web(c)).empty()) ok = false;
    }
  }
  for (int n : {3, 4}) {
    for (const auto& c : enumerate_IICn_bounded(n, 6)) {
      ++checked;
      auto web = build_web(c);
      if (!check_web(web).empty()) ok = false;
      std::size_t right_index = 0;
      for (std::size_t s = 0; s < web.strands.size(); ++s) {
        if (web.strands[s].kind != StrandKind::right_moving) continue;
        long long h = (c.b[right_index] - ((c.b[right_index] - 1) % n + 1)) / n;
        if (seam_crossings_of(web, static_cast<int>(s)) != h) ok = false;
        ++right_index;
      }
    }
  }
  report(11, "web structure (no bigons/triangles, seam counts) over " + std::to_string(checked) +
              " webs",
         ok, seconds_since(start));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
