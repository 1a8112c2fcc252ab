#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vk/gauss.hpp"

namespace vk {

enum class MoveTag { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

/// A classical Reidemeister rewrite with its site data.  Virtual moves need
/// no representation: detour moves are identities on Gauss codes.
struct MoveKind {
  MoveTag tag = MoveTag::R1Insert;
  // R1Insert: pos in [0,L], sign, over_first (kink reads O U when true)
  // R1Delete: a = crossing id of the kink
  // R2Insert: pos in [0,L] for the first block, pos2 >= pos for the second,
  //           over_first (over pair in the first block), under_reversed
  //           (under pair reads U_b U_a), sign of crossing a (b gets -sign)
  // R2Delete: a, b = the two crossing ids of the bigon
  // R3: a = c_TM, b = c_TB, c = c_MB (top/middle/bottom strand roles)
  int pos = 0;
  int pos2 = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  int sign = +1;
  bool over_first = true;
  bool under_reversed = false;

  std::string spec() const;
  static MoveKind parse_spec(const std::string& text);

  friend bool operator==(const MoveKind&, const MoveKind&) = default;
};

struct MoveOptions {
  /// Enumerate all eight oriented R3 variants instead of only the
  /// generating one.  Off by default.
  bool all_r3_variants = false;
};

/// Applies the move at its site and returns the canonicalized result.
/// Throws Error(InapplicableMove) when the pattern is absent.
GaussCode apply(const GaussCode& code, const MoveKind& move, const MoveOptions& opts = {});

/// All applicable moves (both directions) whose result stays within
/// max_crossings, one representative per (tag, resulting canonical form),
/// sorted by (result, spec).  Deterministic.
std::vector<std::pair<MoveKind, GaussCode>> enumerate_moves(const GaussCode& code,
                                                            int max_crossings,
                                                            const MoveOptions& opts = {});

/// Witness sequence of rewrites; steps[i].second == apply(steps[i].first, previous).
struct MovePath {
  GaussCode start;
  std::vector<std::pair<MoveKind, GaussCode>> steps;
};

struct SearchResult {
  bool equivalent = false;   // false means NotFoundWithinBounds, never a proof
  MovePath path;             // meaningful when equivalent
  long long states_visited = 0;
};

/// Bounded bidirectional breadth-first search over canonical forms.
/// Identical inputs give identical results and identical paths.
SearchResult search_equivalence(const GaussCode& a, const GaussCode& b, int max_crossings,
                                long long max_states, const MoveOptions& opts = {});

/// Replays the path through apply(); true iff every step matches and the
/// endpoint equals `end` canonically.
bool replay_path(const MovePath& path, const GaussCode& end, const MoveOptions& opts = {});

}  // namespace vk
