#include <catch2/catch.hpp>

#include <vector>

#include "hk/oracle.hpp"
#include "hk/web.hpp"

using namespace hk;

namespace {

// Minimal XML well-formedness scan: angle brackets balance and every opened
// tag is closed in order.
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;  // self-closing
    if (tag[0] == '/') {
      std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else {
      stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("build_web basic shapes") {
  auto empty_lin = build_web(SeqCouple{MonoidFamily::linear, 4, {}, {}});
  CHECK(empty_lin.crossings.empty());
  CHECK(empty_lin.strands.size() == 5);
  for (const auto& s : empty_lin.strands) CHECK(s.kind == StrandKind::trivial);

  auto lin = build_web(SeqCouple{MonoidFamily::linear, 4, {1, 3}, {3, 4}});
  CHECK(lin.crossings.size() == 3);

  auto circ = build_web(SeqCouple{MonoidFamily::circular, 4, {2, 3}, {6, 9}});
  CHECK(circ.crossings.size() == 10);
  std::vector<long long> windings;
  for (const auto& s : circ.strands)
    if (s.kind == StrandKind::right_moving) windings.push_back(s.winding);
  CHECK(windings == std::vector<long long>{1, 2});
  CHECK_THROWS_AS(build_web(SeqCouple{MonoidFamily::linear, 2, {1}, {1}}), std::invalid_argument);
}

TEST_CASE("word reading of a web canonicalizes back to the couple") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_IIn(n)) CHECK(phi_linear(word_from_web(build_web(c))) == c);
  for (int n : {3, 4})
    for (const auto& c : enumerate_IICn_bounded(n, 5))
      CHECK(phi_circular(word_from_web(build_web(c))) == c);
}

TEST_CASE("webs have no bigons, no triangles, and correct seam counts") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : enumerate_IIn(n)) {
      auto web = build_web(c);
      auto bad = check_web(web);
      INFO(format_couple(c));
      for (const auto& msg : bad) INFO(msg);
      CHECK(bad.empty());
    }
  }
  for (int n : {3, 4}) {
    for (const auto& c : enumerate_IICn_bounded(n, 5)) {
      auto web = build_web(c);
      auto bad = check_web(web);
      INFO(format_couple(c));
      for (const auto& msg : bad) INFO(msg);
      CHECK(bad.empty());
      // seam crossings of each right strand = its winding
      for (std::size_t s = 0; s < web.strands.size(); ++s)
        if (web.strands[s].kind == StrandKind::right_moving)
          CHECK(seam_crossings_of(web, static_cast<int>(s)) == web.strands[s].winding);
    }
  }
}

TEST_CASE("render_svg") {
  auto empty = render_svg(build_web(SeqCouple{MonoidFamily::linear, 3, {}, {}}));
  CHECK(xml_well_formed(empty));
  // one polyline per strand
  std::size_t lines = 0, pos = 0;
  while ((pos = empty.find("<polyline", pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 4);

  auto circ = build_web(SeqCouple{MonoidFamily::circular, 4, {2, 3}, {6, 9}});
  auto svg = render_svg(circ);
  CHECK(xml_well_formed(svg));
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // the seam
  CHECK(svg == render_svg(circ));                            // deterministic

  // golden file for the smallest nontrivial linear web
  auto one = render_svg(build_web(SeqCouple{MonoidFamily::linear, 1, {1}, {2}}));
  const std::string expected =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"144\" height=\"108\" viewBox=\"0 0 144 108\">\n"
      "  <rect width=\"144\" height=\"108\" fill=\"white\"/>\n"
      "  <polyline points=\"48,72 96,36 96,0\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n"
      "  <polyline points=\"96,72 48,36 48,0\" fill=\"none\" stroke=\"#2e6bc0\" stroke-width=\"2\"/>\n"
      "  <text x=\"48\" y=\"104\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333\">1</text>\n"
      "  <text x=\"96\" y=\"104\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333\">2</text>\n"
      "</svg>\n";
  CHECK(one == expected);
}

TEST_CASE("webs of random canonical forms stay sound at larger ranks") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 250; ++trial) {
    auto family = trial % 2 ? hk::MonoidFamily::linear : hk::MonoidFamily::circular;
    int n = hk::min_rank(family) + static_cast<int>(rng() % 5);
    std::vector<int> letters(rng() % 22);
    for (auto& l : letters) l = 1 + static_cast<int>(rng() % n);
    auto c = hk::canonical_form(hk::GeneratorWord{family, n, letters});
    auto web = build_web(c);
    auto bad = check_web(web);
    INFO(format_couple(c));
    for (const auto& msg : bad) INFO(msg);
    CHECK(bad.empty());
    CHECK(hk::canonical_form(word_from_web(web)) == c);
  }
}

TEST_CASE("render_ascii has one row per crossing") {
  auto web = build_web(SeqCouple{MonoidFamily::circular, 4, {2, 3}, {6, 9}});
  auto text = render_ascii(web);
  std::size_t rows = 0, pos = 0;
  while ((pos = text.find('\n', pos)) != std::string::npos) {
    ++rows;
    ++pos;
  }
  CHECK(rows == web.crossings.size() + 1);  // crossings + the bottom line
  CHECK(text.find("(seam)") != std::string::npos);

  auto empty = render_ascii(build_web(SeqCouple{MonoidFamily::linear, 3, {}, {}}));
  CHECK(empty == "bottom  1 2 3 4\n");
}
