#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hk/bijections.hpp"
#include "hk/canonical.hpp"
#include "hk/diagram.hpp"

namespace hk {

// Canonical diagram of a couple: straight-line drawing through the
// permutation for the linear family, universal-cover construction for the
// circular one.
inline CrossingList build_web(const SeqCouple& c) {
  if (!couple_valid(c)) throw std::invalid_argument("build_web: invalid couple");
  if (c.family == MonoidFamily::linear) return delta(kappa(c));
  return web_from_couple_circular(c);
}

// Structural verification of the web property. Recomputes every pairwise
// segment crossing from the strand data alone and checks that
//   - the stored crossing set matches the recomputed one exactly,
//   - every crossing involves one right-moving and one left-moving strand
//     (vertical strands are crossed by nothing, strands of equal type never
//     meet),
//   - no lift pair crosses twice and no two crossings coincide,
//   - no three strands pairwise cross,
//   - the winding recorded on each strand matches its endpoints.
// Returns human-readable violations; empty means the web is sound.
inline std::vector<std::string> check_web(const CrossingList& w) {
  std::vector<std::string> bad;
  const bool cyclic = w.family == MonoidFamily::circular;
  const int n = w.n;
  const long long period = cyclic ? n : 0;

  struct Hit {
    int s1, s2;
    long long shift;
    Rational y;
  };
  std::vector<Hit> found;

  const auto& ss = w.strands;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    for (std::size_t j = 0; j < ss.size(); ++j) {
      if (i == j && !cyclic) continue;
      // crossings of strand i with translates of strand j, for j-shifts in a
      // window wide enough to cover both spans
      long long lo = 0, hi = 0;
      if (cyclic) {
        long long spread = (std::max(std::abs(static_cast<long long>(ss[i].lower) - ss[j].lower),
                                     std::abs(ss[i].upper - ss[j].upper)) /
                            n) +
                           2;
        lo = -spread;
        hi = spread;
      }
      for (long long sh = lo; sh <= hi; ++sh) {
        if (i == j && sh == 0) continue;
        if (i > j || (i == j && sh < 0)) continue;  // count unordered pairs once
        long long a0 = ss[i].lower, a1 = ss[i].upper;
        long long b0 = ss[j].lower + sh * period, b1 = ss[j].upper + sh * period;
        long long d0 = a0 - b0, d1 = a1 - b1;
        if (d0 == 0 || d1 == 0) {
          bad.push_back("strands share an endpoint");
          continue;
        }
        if ((d0 > 0) == (d1 > 0)) continue;  // no sign change, no crossing
        Rational y(-d0, d1 - d0);
        found.push_back({static_cast<int>(i), static_cast<int>(j), sh, y});
        if (ss[i].kind == ss[j].kind)
          bad.push_back("two strands of kind " + std::to_string(static_cast<int>(ss[i].kind)) +
                        " cross (strands " + std::to_string(i) + "," + std::to_string(j) + ")");
        if (ss[i].kind == StrandKind::trivial || ss[j].kind == StrandKind::trivial)
          bad.push_back("a trivial strand is crossed");
      }
    }
  }

  if (found.size() != w.crossings.size())
    bad.push_back("stored crossing count " + std::to_string(w.crossings.size()) +
                  " != recomputed " + std::to_string(found.size()));

  // match stored crossings against recomputed ones (as unordered lift pairs)
  std::multiset<std::string> fkeys, skeys;
  auto key = [](int s1, int s2, long long sh, const Rational& y) {
    int a = s1, b = s2;
    long long shift = sh;
    if (a > b) {
      std::swap(a, b);
      shift = -shift;
    }
    return std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(shift) + "/" +
           y.str();
  };
  for (const auto& h : found) fkeys.insert(key(h.s1, h.s2, h.shift, h.y));
  for (const auto& cr : w.crossings) skeys.insert(key(cr.s1, cr.s2, cr.shift, cr.y));
  if (fkeys != skeys) bad.push_back("stored crossings differ from recomputed geometry");

  // lift-pair uniqueness ("no bigons": straight segments can only violate
  // this if the same pair is stored twice)
  std::set<std::string> lift_pairs;
  for (const auto& cr : w.crossings) {
    std::string k = std::to_string(cr.s1) + "/" + std::to_string(cr.s2) + "/" +
                    std::to_string(cr.shift);
    if (!lift_pairs.insert(k).second) bad.push_back("lift pair crosses twice: " + k);
  }

  // no pairwise-crossing strand triple ("no triangles")
  std::set<std::pair<int, int>> pairs;
  for (const auto& cr : w.crossings)
    pairs.insert({std::min(cr.s1, cr.s2), std::max(cr.s1, cr.s2)});
  const int S = static_cast<int>(ss.size());
  for (int x = 0; x < S; ++x)
    for (int y = x + 1; y < S; ++y)
      for (int z = y + 1; z < S; ++z)
        if (pairs.count({x, y}) && pairs.count({x, z}) && pairs.count({y, z}))
          bad.push_back("strands " + std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z) + " pairwise cross");

  // recorded windings must match the endpoints
  for (const auto& st : ss) {
    long long expect = 0;
    if (cyclic && st.kind == StrandKind::right_moving)
      expect = (st.upper - ((st.upper - 1) % n + 1)) / n;
    else if (cyclic && st.kind == StrandKind::left_moving)
      expect = ((((st.upper - 1) % n + n) % n + 1) - st.upper) / n;
    if (st.winding != expect)
      bad.push_back("strand at " + std::to_string(st.lower) + " has winding " +
                    std::to_string(st.winding) + ", endpoints say " + std::to_string(expect));
  }
  return bad;
}

// Number of times right strand t passes the seam, from the stored crossing
// positions: exactly the crossings emitted at position n involving t.
inline long long seam_crossings_of(const CrossingList& w, int strand_index) {
  if (w.family != MonoidFamily::circular) return 0;
  long long count = 0;
  for (const auto& cr : w.crossings)
    if (cr.position == w.n && (cr.s1 == strand_index || cr.s2 == strand_index)) ++count;
  return count;
}

// --- rendering ---------------------------------------------------------------

struct RenderOpts {
  int cell_w = 48;
  int cell_h = 36;
  bool labels = true;
};

namespace detail {

// Slot occupancy of every strand at every level (between crossings),
// reconstructed from the crossing positions.
inline std::vector<std::vector<int>> occupancy_levels(const CrossingList& w) {
  const bool cyclic = w.family == MonoidFamily::circular;
  const int slots = cyclic ? w.n : w.n + 1;
  std::vector<int> occ(slots, -1);
  for (std::size_t s = 0; s < w.strands.size(); ++s) occ[w.strands[s].lower - 1] = static_cast<int>(s);
  std::vector<std::vector<int>> levels{occ};
  for (const auto& cr : w.crossings) {
    int m = cr.position - 1;
    int m2 = (m + 1) % slots;
    std::swap(occ[m], occ[m2]);
    levels.push_back(occ);
  }
  return levels;
}

}  // namespace detail

// Standalone SVG. The cylinder is drawn cut open along x = 1, with a dotted
// seam on both vertical borders; strand polylines break where they pass the
// seam. Heights are evenly spaced by crossing rank. Output is deterministic.
inline std::string render_svg(const CrossingList& w, const RenderOpts& opts = {}) {
  const bool cyclic = w.family == MonoidFamily::circular;
  const int slots = cyclic ? w.n : w.n + 1;
  const int m = static_cast<int>(w.crossings.size());
  const int width = (slots + (cyclic ? 1 : 0) + 1) * opts.cell_w;
  const int height = (m + 2) * opts.cell_h;
  auto px = [&](double slot) { return static_cast<int>(slot * opts.cell_w); };
  auto py = [&](int level) { return height - (level + 1) * opts.cell_h; };

  auto levels = detail::occupancy_levels(w);
  // slot of strand s at level l
  auto slot_of = [&](int level, int s) {
    for (int q = 0; q < slots; ++q)
      if (levels[level][q] == s) return q + 1;
    return -1;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  if (cyclic) {
    for (int border : {1, slots + 1})
      svg << "  <line x1=\"" << px(border) << "\" y1=\"" << py(m + 1) << "\" x2=\"" << px(border)
          << "\" y2=\"" << py(0) << "\" stroke=\"#999\" stroke-dasharray=\"3,4\"/>\n";
  }
  for (std::size_t s = 0; s < w.strands.size(); ++s) {
    const char* color = w.strands[s].kind == StrandKind::right_moving ? "#c0392b"
                        : w.strands[s].kind == StrandKind::left_moving ? "#2e6bc0"
                                                                        : "#666666";
    std::vector<std::string> pieces;
    std::ostringstream piece;
    int prev = slot_of(0, static_cast<int>(s));
    piece << px(prev) << "," << py(0);
    for (int l = 1; l <= m; ++l) {
      int cur = slot_of(l, static_cast<int>(s));
      bool seam = cyclic && std::abs(cur - prev) == slots - 1;
      if (seam && prev == slots) {
        // rightward through the seam: exit at the right border, re-enter left
        piece << " " << px(slots + 1) << "," << py(l);
        pieces.push_back(piece.str());
        piece.str("");
        piece << px(1) << "," << py(l);
      } else if (seam) {
        // leftward through the seam: re-enter at the right border
        pieces.push_back(piece.str());
        piece.str("");
        piece << px(slots + 1) << "," << py(l - 1) << " " << px(cur) << "," << py(l);
      } else {
        piece << " " << px(cur) << "," << py(l);
      }
      prev = cur;
    }
    piece << " " << px(prev) << "," << py(m + 1);
    pieces.push_back(piece.str());
    for (const auto& pts : pieces)
      svg << "  <polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
  }
  if (opts.labels) {
    for (int q = 1; q <= slots; ++q)
      svg << "  <text x=\"" << px(q) << "\" y=\"" << height - 4 << "\" font-size=\"12\" "
          << "text-anchor=\"middle\" fill=\"#333\">" << q << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// One text row per crossing, bottom to top, showing how the strand labels
// (lower endpoints) permute.
inline std::string render_ascii(const CrossingList& w) {
  auto levels = detail::occupancy_levels(w);
  std::ostringstream os;
  auto row = [&](const std::vector<int>& occ) {
    std::string s;
    for (int id : occ) {
      if (!s.empty()) s += ' ';
      s += std::to_string(w.strands[id].lower);
    }
    return s;
  };
  os << "bottom  " << row(levels[0]) << "\n";
  for (std::size_t l = 1; l < levels.size(); ++l) {
    const auto& cr = w.crossings[l - 1];
    os << "x" << cr.position << (cr.position == w.n && w.family == MonoidFamily::circular
                                     ? " (seam)"
                                     : "")
       << " -> " << row(levels[l]) << "\n";
  }
  return os.str();
}

}  // namespace hk
