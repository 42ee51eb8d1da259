#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk/rational.hpp"
#include "hk/word.hpp"

namespace hk {

// Strands and crossings of a canonical diagram, recorded combinatorially.
// Strands are identified by the x-coordinate of their lower endpoint; upper
// endpoints of circular strands are kept in the universal cover (the plane
// strip), so a right strand of winding h ends at upper = s + n*h.

enum class StrandKind { right_moving, left_moving, trivial };

struct Strand {
  StrandKind kind = StrandKind::trivial;
  int lower = 0;            // 1..n (circular) or 1..n+1 (linear)
  long long upper = 0;      // cover coordinate of the upper endpoint
  long long winding = 0;    // h_t for right strands, g_u for left strands, 0 otherwise
};

struct Crossing {
  int height_rank = 0;   // 0 = lowest crossing
  int position = 0;      // generator index emitted at this crossing
  int s1 = 0;            // index into strands: the right-moving strand
  int s2 = 0;            // index into strands: the left-moving strand
  long long shift = 0;   // which n-translate of s2 the lift of s1 meets
  Rational y;            // exact height in (0,1)
  Rational x;            // exact cover x-coordinate of the crossing point
};

struct CrossingList {
  MonoidFamily family = MonoidFamily::linear;
  int n = 1;
  std::vector<Strand> strands;
  std::vector<Crossing> crossings;  // sorted bottom to top
};

// Reading the crossings bottom to top yields the letters of the word from
// right to left (the rightmost letter of a word acts first, i.e. sits at the
// bottom of its diagram).
inline GeneratorWord word_from_web(const CrossingList& w) {
  GeneratorWord out{w.family, w.n, {}};
  out.letters.reserve(w.crossings.size());
  for (auto it = w.crossings.rbegin(); it != w.crossings.rend(); ++it)
    out.letters.push_back(it->position);
  return out;
}

namespace detail {

// A crossing candidate before positions are assigned.
struct RawCrossing {
  Rational y;
  Rational x_cyl;  // cylinder coordinate in [1, n+1) (equals x for linear diagrams)
  Rational x;
  int s1 = 0;
  int s2 = 0;
  long long shift = 0;
};

inline Rational cylinder_coord(const Rational& x, int n) {
  // reduce into [1, n+1)
  Rational shifted = x - Rational(1);
  std::int64_t q = (shifted / Rational(n)).floor();
  return x - Rational(q * static_cast<std::int64_t>(n));
}

// Tracks the cyclic (or linear) order of strand positions from the bottom of
// the diagram upward and assigns a generator index to each crossing. The
// geometric heights fix only the processing order; adjacency of the two
// strands involved is a structural requirement and is verified. For circular
// diagrams the occupant of each slot carries the translate shift so the
// final occupancy can be checked against the strand endpoints, and the
// number of passes through the seam between slots n and 1 is counted per
// strand (that count is the winding number of a right strand).
struct SlotSim {
  bool cyclic = false;
  int slots = 0;
  std::vector<int> occupant;          // strand index per slot (0-based slots)
  std::vector<long long> shift;       // translate shift per slot
  std::vector<long long> seam_count;  // per strand

  SlotSim(bool cyclic_, int slots_, int strand_count)
      : cyclic(cyclic_), slots(slots_), occupant(slots_), shift(slots_, 0),
        seam_count(strand_count, 0) {
    for (int s = 0; s < slots; ++s) occupant[s] = -1;
  }

  void place(int slot1based, int strand) { occupant[slot1based - 1] = strand; }

  // Returns the 1-based generator index emitted by a crossing of strands
  // (a, b); a must sit immediately left of b in the current cyclic order.
  int cross(int a, int b) {
    for (int m = 0; m < slots; ++m) {
      int m2 = m + 1 < slots ? m + 1 : 0;
      if (m2 == 0 && !cyclic) break;
      if (occupant[m] == a && occupant[m2] == b) {
        if (m + 1 < slots || !cyclic) {
          std::swap(occupant[m], occupant[m2]);
          std::swap(shift[m], shift[m2]);
        } else {
          // seam crossing between slots n and 1: occupants swap and pick up
          // the translate adjustment
          int sa = occupant[m];
          long long sha = shift[m];
          occupant[m] = occupant[0];
          shift[m] = shift[0] + 1;
          occupant[0] = sa;
          shift[0] = sha - 1;
          seam_count[a] += 1;
          seam_count[b] += 1;
        }
        return m + 1;
      }
    }
    throw std::logic_error("slot simulation: crossing strands are not adjacent");
  }
};

// Sorts raw crossings, runs the slot simulation and fills a CrossingList.
// `lower_of` gives the initial slot of each strand.
inline CrossingList assemble_web(MonoidFamily family, int n, std::vector<Strand> strands,
                                 std::vector<RawCrossing> raw) {
  const bool cyclic = family == MonoidFamily::circular;
  const int slots = cyclic ? n : n + 1;

  std::sort(raw.begin(), raw.end(), [](const RawCrossing& a, const RawCrossing& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x_cyl < b.x_cyl;
  });
  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i].y == raw[i + 1].y && raw[i].x_cyl == raw[i + 1].x_cyl)
      throw std::logic_error("coincident crossings");

  SlotSim sim(cyclic, slots, static_cast<int>(strands.size()));
  for (std::size_t s = 0; s < strands.size(); ++s)
    sim.place(strands[s].lower, static_cast<int>(s));

  CrossingList out{family, n, std::move(strands), {}};
  out.crossings.reserve(raw.size());
  int rank = 0;
  for (const auto& rc : raw) {
    int pos = sim.cross(rc.s1, rc.s2);
    out.crossings.push_back({rank++, pos, rc.s1, rc.s2, rc.shift, rc.y, rc.x});
  }

  // Final occupancy must match the strand upper endpoints: the strand in
  // slot m carries translate shift sh, and upper + sh*n == m.
  for (int m = 0; m < slots; ++m) {
    const Strand& st = out.strands[sim.occupant[m]];
    if (st.upper + sim.shift[m] * n != m + 1)
      throw std::logic_error("slot simulation: final occupancy mismatch");
  }
  // Seam counts are the winding numbers: h_t for right strands, g_u for left.
  for (std::size_t s = 0; s < out.strands.size(); ++s) {
    if (out.strands[s].kind != StrandKind::trivial &&
        sim.seam_count[s] != out.strands[s].winding)
      throw std::logic_error("slot simulation: seam count != winding");
  }
  return out;
}

}  // namespace detail

}  // namespace hk
