// Command-line front end: word problem, canonical forms, enumeration,
// synthesis and rendering for Hecke-Kiselman monoids of types A_n and A~_n.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict or failed
// check, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hk/bijections.hpp"
#include "hk/canonical.hpp"
#include "hk/chain.hpp"
#include "hk/json_io.hpp"
#include "hk/oracle.hpp"
#include "hk/web.hpp"
#include "hk/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string family_name = "linear";
  int n = 0;
  std::string format = "text";
  bool trace = false;
  int cap = -1;
  int bound = -1;
  unsigned long long seed = 20240601ULL;
  std::string file;
  std::string method;
};

hk::MonoidFamily family_of(const CliConfig& cfg) { return hk::family_from_name(cfg.family_name); }

std::string state_str(const hk::ActionState& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += ")";
  return out;
}

void print_trace(const hk::CanonTrace& trace) {
  for (std::size_t i = 0; i + 1 < trace.states.size(); ++i)
    std::cout << state_str(trace.states[i]) << " -x" << trace.applied[i] << "-> "
              << state_str(trace.states[i + 1]) << "\n";
  std::cout << "y = " << state_str(trace.y) << "\n";
  for (const auto& row : trace.rows)
    std::cout << "a=" << row.a << " m=" << row.m << " h=" << row.h << " s=" << row.s
              << " b=" << row.b << (row.kept ? "" : " (dropped)") << "\n";
}

// Words from the argument, --file, or stdin ("-"); file/stdin carry one word
// per line.
std::vector<hk::GeneratorWord> gather_words(const CliConfig& cfg, const std::string& arg,
                                            bool arg_given) {
  std::vector<hk::GeneratorWord> words;
  auto family = family_of(cfg);
  if (!cfg.file.empty()) {
    std::istream* in = &std::cin;
    std::ifstream f;
    if (cfg.file != "-") {
      f.open(cfg.file);
      if (!f) throw std::invalid_argument("cannot open " + cfg.file);
      in = &f;
    }
    std::string line;
    while (std::getline(*in, line)) words.push_back(hk::parse_word(line, family, cfg.n));
  } else if (arg_given) {
    words.push_back(hk::parse_word(arg, family, cfg.n));
  } else {
    throw std::invalid_argument("no input word (pass one as an argument or use --file)");
  }
  return words;
}

hk::SeqCouple couple_from_arg(const CliConfig& cfg, const std::string& arg) {
  auto j = hk::json::parse(arg);
  bool have_fallback = cfg.n > 0;
  auto c = hk::couple_from_json(j, family_of(cfg), cfg.n, have_fallback);
  auto bad = hk::validate_couple(c);
  if (!bad.empty()) throw std::invalid_argument("invalid couple: " + bad.front());
  return c;
}

int cmd_normalize(const CliConfig& cfg, const std::string& arg, bool arg_given) {
  for (const auto& w : gather_words(cfg, arg, arg_given)) {
    hk::CanonTrace trace;
    hk::SeqCouple c = hk::canonical_form(w, cfg.trace ? &trace : nullptr);
    if (cfg.trace) print_trace(trace);
    if (cfg.format == "json") {
      auto j = hk::to_json(c);
      j["v"] = 1;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << hk::format_couple(c) << "\n";
    }
  }
  return kExitOk;
}

int cmd_equal(const CliConfig& cfg, const std::string& w1, const std::string& w2) {
  auto family = family_of(cfg);
  bool eq = hk::words_equal(hk::parse_word(w1, family, cfg.n), hk::parse_word(w2, family, cfg.n));
  std::cout << (eq ? "EQUAL" : "DISTINCT") << "\n";
  return eq ? kExitOk : kExitNegative;
}

int cmd_count(const CliConfig& cfg) {
  if (family_of(cfg) == hk::MonoidFamily::linear) {
    std::cout << hk::enumerate_linear_monoid(cfg.n).count << "\n";
  } else {
    if (cfg.bound < 0)
      throw std::invalid_argument("the circular monoid is infinite, pass --bound B");
    std::cout << hk::enumerate_IICn_bounded(cfg.n, cfg.bound).size() << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const CliConfig& cfg, bool via_monoid) {
  std::vector<hk::SeqCouple> cs;
  if (family_of(cfg) == hk::MonoidFamily::linear)
    cs = via_monoid ? hk::enumerate_linear_monoid(cfg.n).elements : hk::enumerate_IIn(cfg.n);
  else {
    if (cfg.bound < 0)
      throw std::invalid_argument("the circular monoid is infinite, pass --bound B");
    cs = hk::enumerate_IICn_bounded(cfg.n, cfg.bound);
  }
  std::cout << hk::couples_to_jsonl(cs);
  return kExitOk;
}

int cmd_word(const CliConfig& cfg, const std::string& arg) {
  auto c = couple_from_arg(cfg, arg);
  std::string method = cfg.method;
  if (method.empty()) method = c.family == hk::MonoidFamily::linear ? "run" : "spiral";
  hk::GeneratorWord w;
  if (method == "run")
    w = hk::normal_word_linear(c);
  else if (method == "spiral")
    w = hk::spiral(c);
  else if (method == "straightline")
    w = hk::straightline_word_circular(c);
  else
    throw std::invalid_argument("unknown method '" + method + "' (run|spiral|straightline)");
  if (cfg.format == "json") {
    auto j = hk::to_json(w);
    j["v"] = 1;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << hk::format_word(w) << "\n";
  }
  return kExitOk;
}

int cmd_render(const CliConfig& cfg, const std::string& arg) {
  auto c = couple_from_arg(cfg, arg);
  auto web = hk::build_web(c);
  if (cfg.format == "ascii")
    std::cout << hk::render_ascii(web);
  else
    std::cout << hk::render_svg(web);
  return kExitOk;
}

int cmd_oracle_bfs(const CliConfig& cfg, const std::string& w1s, const std::string& w2s) {
  auto family = family_of(cfg);
  auto w1 = hk::parse_word(w1s, family, cfg.n);
  auto w2 = hk::parse_word(w2s, family, cfg.n);
  int cap = cfg.cap >= 0 ? cfg.cap : static_cast<int>(std::max(w1.size(), w2.size())) + 4;
  auto verdict = hk::bfs_equivalent(w1, w2, cap);
  bool connected = verdict == hk::BfsVerdict::connected;
  std::cout << (connected ? "CONNECTED" : "NOT-FOUND-WITHIN-CAP") << "\n";
  return connected ? kExitOk : kExitNegative;
}

int cmd_oracle_ball(const CliConfig& cfg, int length) {
  auto ball = hk::word_ball_canonicals(cfg.n, family_of(cfg), length);
  std::vector<hk::SeqCouple> cs(ball.begin(), ball.end());
  std::cout << hk::couples_to_jsonl(cs);
  return kExitOk;
}

int cmd_selftest(const CliConfig& cfg) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
    if (!ok) ++failures;
  };

  for (auto family : {hk::MonoidFamily::linear, hk::MonoidFamily::circular}) {
    const int n = 4;
    auto ints = hk::int_sample_triples(0, 4);
    for (const auto& [name, kind] : hk::builtin_chain_names()) {
      if (kind == hk::BuiltinChain::monoidhom) continue;
      auto rep = hk::check_chain_axioms(hk::builtin_int_chain(kind, family, n), ints);
      report("chain axioms: " + name + " (" + hk::family_name(family) + ")", rep.all_ok());
      if (!rep.all_ok()) std::cout << rep.to_string();
    }
    auto rep = hk::check_chain_axioms(hk::builtin_word_chain(family, n), hk::word_sample_triples(3));
    report("chain axioms: monoidhom (" + hk::family_name(family) + ")", rep.all_ok());
    if (!rep.all_ok()) std::cout << rep.to_string();
  }

  std::mt19937_64 rng(cfg.seed);
  for (auto family : {hk::MonoidFamily::linear, hk::MonoidFamily::circular}) {
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      int n = family == hk::MonoidFamily::linear ? 1 + static_cast<int>(rng() % 5)
                                                 : 3 + static_cast<int>(rng() % 3);
      std::vector<int> letters(rng() % 12);
      for (auto& l : letters) l = 1 + static_cast<int>(rng() % n);
      hk::GeneratorWord w{family, n, letters};
      auto rels = hk::applicable_relations(w);
      if (rels.empty()) continue;
      auto w2 = hk::apply_relation(w, rels[rng() % rels.size()]);
      ok = w2 && hk::words_equal(w, *w2);
    }
    report("relation invariance of canonical forms (" + hk::family_name(family) + ")", ok);
  }

  {
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n)
      ok = hk::enumerate_linear_monoid(n).count == hk::catalan(n + 1) &&
           static_cast<long long>(hk::enumerate_IIn(n).size()) == hk::catalan(n + 1);
    report("linear monoid size is the Catalan number (n <= 5)", ok);
  }
  {
    bool ok = true;
    for (int L = 0; L <= 4 && ok; ++L) {
      auto ball = hk::word_ball_canonicals(3, hk::MonoidFamily::circular, L);
      auto enumd = hk::enumerate_IICn_bounded(3, L);
      ok = ball == std::set<hk::SeqCouple>(enumd.begin(), enumd.end());
    }
    report("circular word balls match bounded couple enumeration (n=3, L <= 4)", ok);
  }
  return failures == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem and canonical forms for Hecke-Kiselman monoids"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub, bool need_n = true) {
    sub->add_option("--family", cfg.family_name, "linear or circular")
        ->check(CLI::IsMember({"linear", "circular"}));
    auto* n_opt = sub->add_option("--n", cfg.n, "rank (number of generators)");
    if (need_n) n_opt->required();
    sub->add_option("--format", cfg.format, "text, json, svg or ascii");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  };

  std::string arg1, arg2;
  bool via_monoid = false;
  int ball_len = 0;

  auto* normalize = app.add_subcommand("normalize", "canonical form of a word");
  add_common(normalize);
  normalize->add_flag("--trace", cfg.trace, "print every intermediate action state");
  normalize->add_option("--file", cfg.file, "read words from a file ('-' for stdin), one per line");
  auto* norm_word = normalize->add_option("word", arg1, "the word, e.g. \"4 3 1 4 2\"");

  auto* equal = app.add_subcommand("equal", "decide whether two words are equal");
  add_common(equal);
  equal->add_option("word1", arg1)->required();
  equal->add_option("word2", arg2)->required();

  auto* count = app.add_subcommand("count", "number of monoid elements");
  add_common(count);
  count->add_option("--bound", cfg.bound, "crossing-weight bound (circular family)");

  auto* enumerate = app.add_subcommand("enumerate", "list canonical couples as JSON lines");
  add_common(enumerate);
  enumerate->add_option("--bound", cfg.bound, "crossing-weight bound (circular family)");
  enumerate->add_flag("--monoid", via_monoid, "generate by right multiplication instead of inequalities");

  auto* word = app.add_subcommand("word", "synthesize a representative word from a couple");
  add_common(word, false);
  word->add_option("--method", cfg.method, "run, spiral or straightline");
  word->add_option("couple", arg1, "couple JSON, e.g. '{\"a\":[2,3],\"b\":[6,9]}'")->required();

  auto* render = app.add_subcommand("render", "draw the canonical diagram of a couple");
  add_common(render, false);
  render->add_option("couple", arg1, "couple JSON")->required();

  auto* oracle = app.add_subcommand("oracle", "independent verification helpers");
  oracle->require_subcommand(1);
  auto* bfs = oracle->add_subcommand("bfs", "search a relation chain between two words");
  add_common(bfs);
  bfs->add_option("--cap", cfg.cap, "maximal word length during the search");
  bfs->add_option("word1", arg1)->required();
  bfs->add_option("word2", arg2)->required();
  auto* ball = oracle->add_subcommand("ball", "canonical forms of all words up to a length");
  add_common(ball);
  ball->add_option("--len", ball_len, "maximal word length")->required();

  auto* selftest = app.add_subcommand("selftest", "run built-in consistency checks");
  selftest->add_option("--seed", cfg.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(normalize)) return cmd_normalize(cfg, arg1, norm_word->count() > 0);
    if (app.got_subcommand(equal)) return cmd_equal(cfg, arg1, arg2);
    if (app.got_subcommand(count)) return cmd_count(cfg);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg, via_monoid);
    if (app.got_subcommand(word)) return cmd_word(cfg, arg1);
    if (app.got_subcommand(render)) return cmd_render(cfg, arg1);
    if (app.got_subcommand(oracle)) {
      if (oracle->got_subcommand(bfs)) return cmd_oracle_bfs(cfg, arg1, arg2);
      return cmd_oracle_ball(cfg, ball_len);
    }
    if (app.got_subcommand(selftest)) return cmd_selftest(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
