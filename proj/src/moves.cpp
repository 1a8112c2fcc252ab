#include "vk/moves.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace vk {

namespace {

int next_free_id(const GaussCode& code) {
  int m = 0;
  for (const Pass& p : code.passes()) m = std::max(m, p.id);
  return m + 1;
}

GaussCode with_word(std::vector<Pass> w) { return GaussCode::from_passes(std::move(w)).canonical(); }

struct PassIndex {
  int over = -1, under = -1, sign = 0;
};

std::map<int, PassIndex> index_passes(const GaussCode& code) {
  std::map<int, PassIndex> idx;
  const auto& w = code.passes();
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    PassIndex& e = idx[w[i].id];
    (w[i].strand == Strand::Over ? e.over : e.under) = i;
    e.sign = w[i].sign;
  }
  return idx;
}

// +1 if position i immediately precedes j cyclically, -1 if j precedes i,
// 0 otherwise.
int adjacency(int i, int j, int L) {
  if ((i + 1) % L == j) return +1;
  if ((j + 1) % L == i) return -1;
  return 0;
}

std::vector<Pass> erase_positions(const std::vector<Pass>& w, std::vector<int> kill) {
  std::sort(kill.begin(), kill.end());
  std::vector<Pass> out;
  out.reserve(w.size() - kill.size());
  size_t k = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (k < kill.size() && kill[k] == i) {
      ++k;
      continue;
    }
    out.push_back(w[i]);
  }
  return out;
}

GaussCode apply_r1_insert(const GaussCode& code, const MoveKind& m) {
  const int L = code.size();
  if (m.pos < 0 || m.pos > L)
    throw Error(ErrorKind::InapplicableMove, "r1 insert position out of range");
  int id = next_free_id(code);
  Pass o{id, Strand::Over, m.sign};
  Pass u{id, Strand::Under, m.sign};
  std::vector<Pass> w = code.passes();
  if (m.over_first)
    w.insert(w.begin() + m.pos, {o, u});
  else
    w.insert(w.begin() + m.pos, {u, o});
  return with_word(std::move(w));
}

GaussCode apply_r1_delete(const GaussCode& code, const MoveKind& m) {
  auto idx = index_passes(code);
  auto it = idx.find(m.a);
  if (it == idx.end())
    throw Error(ErrorKind::UnknownCrossing, "no crossing " + std::to_string(m.a));
  const int L = code.size();
  if (adjacency(it->second.over, it->second.under, L) == 0)
    throw Error(ErrorKind::InapplicableMove,
                "crossing " + std::to_string(m.a) + " is not a kink");
  return with_word(erase_positions(code.passes(), {it->second.over, it->second.under}));
}

GaussCode apply_r2_insert(const GaussCode& code, const MoveKind& m) {
  const int L = code.size();
  if (m.pos < 0 || m.pos2 < m.pos || m.pos2 > L)
    throw Error(ErrorKind::InapplicableMove, "r2 insert positions out of range");
  int ida = next_free_id(code);
  int idb = ida + 1;
  std::vector<Pass> over = {{ida, Strand::Over, m.sign}, {idb, Strand::Over, -m.sign}};
  std::vector<Pass> under = {{ida, Strand::Under, m.sign}, {idb, Strand::Under, -m.sign}};
  if (m.under_reversed) std::swap(under[0], under[1]);
  const std::vector<Pass>& first = m.over_first ? over : under;
  const std::vector<Pass>& second = m.over_first ? under : over;
  std::vector<Pass> w = code.passes();
  w.insert(w.begin() + m.pos2, second.begin(), second.end());
  w.insert(w.begin() + m.pos, first.begin(), first.end());
  return with_word(std::move(w));
}

bool r2_site(const GaussCode& code, int a, int b) {
  if (a == b) return false;
  auto idx = index_passes(code);
  auto ia = idx.find(a), ib = idx.find(b);
  if (ia == idx.end() || ib == idx.end()) return false;
  if (ia->second.sign == ib->second.sign) return false;
  const int L = code.size();
  return adjacency(ia->second.over, ib->second.over, L) != 0 &&
         adjacency(ia->second.under, ib->second.under, L) != 0;
}

GaussCode apply_r2_delete(const GaussCode& code, const MoveKind& m) {
  if (!r2_site(code, m.a, m.b))
    throw Error(ErrorKind::InapplicableMove,
                "crossings " + std::to_string(m.a) + "," + std::to_string(m.b) +
                    " do not form a bigon");
  auto idx = index_passes(code);
  const PassIndex& ia = idx[m.a];
  const PassIndex& ib = idx[m.b];
  return with_word(erase_positions(code.passes(), {ia.over, ia.under, ib.over, ib.under}));
}

// Oriented R3 admissibility at roles (tm, tb, mb): the three adjacent pass
// pairs exist and the braid-derived condition sign = order product holds.
// Returns intra-pair orders via o[], or false.
bool r3_site(const GaussCode& code, int tm, int tb, int mb, bool all_variants, int o[3]) {
  if (tm == tb || tm == mb || tb == mb) return false;
  auto idx = index_passes(code);
  if (!idx.count(tm) || !idx.count(tb) || !idx.count(mb)) return false;
  const int L = code.size();
  const PassIndex& ptm = idx[tm];
  const PassIndex& ptb = idx[tb];
  const PassIndex& pmb = idx[mb];
  o[0] = adjacency(ptm.over, ptb.over, L);    // top strand pair
  o[1] = adjacency(ptm.under, pmb.over, L);   // middle strand pair
  o[2] = adjacency(ptb.under, pmb.under, L);  // bottom strand pair
  if (o[0] == 0 || o[1] == 0 || o[2] == 0) return false;
  if (ptm.sign != o[0] * o[1]) return false;
  if (ptb.sign != o[0] * o[2]) return false;
  if (pmb.sign != o[1] * o[2]) return false;
  if (!all_variants && !(o[0] == o[1] && o[1] == o[2])) return false;
  return true;
}

GaussCode apply_r3(const GaussCode& code, const MoveKind& m, const MoveOptions& opts) {
  int o[3];
  if (!r3_site(code, m.a, m.b, m.c, opts.all_r3_variants, o))
    throw Error(ErrorKind::InapplicableMove, "no r3 triangle at the given crossings");
  auto idx = index_passes(code);
  std::vector<Pass> w = code.passes();
  auto swap_pair = [&](int i, int j) { std::swap(w[i], w[j]); };
  swap_pair(idx[m.a].over, idx[m.b].over);
  swap_pair(idx[m.a].under, idx[m.c].over);
  swap_pair(idx[m.b].under, idx[m.c].under);
  return with_word(std::move(w));
}

}  // namespace

GaussCode apply(const GaussCode& code, const MoveKind& move, const MoveOptions& opts) {
  switch (move.tag) {
    case MoveTag::R1Insert: return apply_r1_insert(code, move);
    case MoveTag::R1Delete: return apply_r1_delete(code, move);
    case MoveTag::R2Insert: return apply_r2_insert(code, move);
    case MoveTag::R2Delete: return apply_r2_delete(code, move);
    case MoveTag::R3: return apply_r3(code, move, opts);
  }
  throw Error(ErrorKind::InapplicableMove, "unknown move tag");
}

std::vector<std::pair<MoveKind, GaussCode>> enumerate_moves(const GaussCode& code,
                                                            int max_crossings,
                                                            const MoveOptions& opts) {
  const int n = code.crossings();
  const int L = code.size();
  std::vector<std::pair<MoveKind, GaussCode>> out;
  // one representative per (tag, resulting canonical form)
  std::unordered_set<std::string> seen;
  auto push = [&](MoveKind m, GaussCode result) {
    std::string k = std::to_string(static_cast<int>(m.tag)) + "|" + result.key();
    if (seen.insert(std::move(k)).second) out.emplace_back(std::move(m), std::move(result));
  };

  std::vector<int> ids;
  for (const Pass& p : code.passes())
    if (ids.empty() || std::find(ids.begin(), ids.end(), p.id) == ids.end()) ids.push_back(p.id);
  std::sort(ids.begin(), ids.end());

  // R1 deletions
  for (int id : ids) {
    MoveKind m{.tag = MoveTag::R1Delete, .a = id};
    try {
      push(m, apply(code, m, opts));
    } catch (const Error&) {
    }
  }
  // R2 deletions
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (r2_site(code, ids[i], ids[j])) {
        MoveKind m{.tag = MoveTag::R2Delete, .a = ids[i], .b = ids[j]};
        push(m, apply(code, m, opts));
      }
  // R3
  for (int tm : ids)
    for (int tb : ids)
      for (int mb : ids) {
        int o[3];
        if (r3_site(code, tm, tb, mb, opts.all_r3_variants, o)) {
          MoveKind m{.tag = MoveTag::R3, .a = tm, .b = tb, .c = mb};
          push(m, apply(code, m, opts));
        }
      }
  // R1 insertions
  if (n + 1 <= max_crossings) {
    int slots = std::max(L, 1);
    for (int pos = 0; pos < slots; ++pos)
      for (int sign : {+1, -1})
        for (bool over_first : {true, false}) {
          MoveKind m{.tag = MoveTag::R1Insert, .pos = pos, .sign = sign, .over_first = over_first};
          push(m, apply(code, m, opts));
        }
  }
  // R2 insertions
  if (n + 2 <= max_crossings) {
    int slots = std::max(L, 1);
    for (int p = 0; p < slots; ++p)
      for (int q = p; q < slots; ++q)
        for (bool over_first : {true, false})
          for (bool under_rev : {false, true})
            for (int sign : {+1, -1}) {
              MoveKind m{.tag = MoveTag::R2Insert,
                         .pos = p,
                         .pos2 = q,
                         .sign = sign,
                         .over_first = over_first,
                         .under_reversed = under_rev};
              push(m, apply(code, m, opts));
            }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second.key() != y.second.key()) return x.second.key() < y.second.key();
    if (x.first.tag != y.first.tag) return x.first.tag < y.first.tag;
    return x.first.spec() < y.first.spec();
  });
  return out;
}

std::string MoveKind::spec() const {
  switch (tag) {
    case MoveTag::R1Insert:
      return "r1i(pos=" + std::to_string(pos) + ",sign=" + (sign > 0 ? "+" : "-") +
             ",order=" + (over_first ? "ou" : "uo") + ")";
    case MoveTag::R1Delete:
      return "r1d(" + std::to_string(a) + ")";
    case MoveTag::R2Insert:
      return "r2i(p=" + std::to_string(pos) + ",q=" + std::to_string(pos2) +
             ",first=" + (over_first ? "over" : "under") +
             ",under=" + (under_reversed ? "rev" : "fwd") + ",sign=" + (sign > 0 ? "+" : "-") +
             ")";
    case MoveTag::R2Delete:
      return "r2d(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case MoveTag::R3:
      return "r3(tm=" + std::to_string(a) + ",tb=" + std::to_string(b) +
             ",mb=" + std::to_string(c) + ")";
  }
  return "?";
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& body) {
  std::map<std::string, std::string> kv;
  size_t i = 0;
  while (i < body.size()) {
    size_t j = body.find(',', i);
    if (j == std::string::npos) j = body.size();
    std::string item = body.substr(i, j - i);
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::BadInput, "bad move parameter: " + item);
    kv[item.substr(0, eq)] = item.substr(eq + 1);
    i = j + 1;
  }
  return kv;
}

}  // namespace

MoveKind MoveKind::parse_spec(const std::string& text) {
  size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw Error(ErrorKind::BadInput, "bad move spec: " + text);
  std::string name = text.substr(0, open);
  std::string body = text.substr(open + 1, text.size() - open - 2);
  MoveKind m;
  if (name == "r1i") {
    m.tag = MoveTag::R1Insert;
    auto kv = parse_kv(body);
    m.pos = std::stoi(kv.at("pos"));
    m.sign = kv.at("sign") == "+" ? +1 : -1;
    m.over_first = kv.at("order") == "ou";
  } else if (name == "r1d") {
    m.tag = MoveTag::R1Delete;
    m.a = std::stoi(body);
  } else if (name == "r2i") {
    m.tag = MoveTag::R2Insert;
    auto kv = parse_kv(body);
    m.pos = std::stoi(kv.at("p"));
    m.pos2 = std::stoi(kv.at("q"));
    m.over_first = kv.at("first") == "over";
    m.under_reversed = kv.at("under") == "rev";
    m.sign = kv.at("sign") == "+" ? +1 : -1;
  } else if (name == "r2d") {
    m.tag = MoveTag::R2Delete;
    size_t comma = body.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::BadInput, "bad r2d spec");
    m.a = std::stoi(body.substr(0, comma));
    m.b = std::stoi(body.substr(comma + 1));
  } else if (name == "r3") {
    m.tag = MoveTag::R3;
    auto kv = parse_kv(body);
    m.a = std::stoi(kv.at("tm"));
    m.b = std::stoi(kv.at("tb"));
    m.c = std::stoi(kv.at("mb"));
  } else {
    throw Error(ErrorKind::BadInput, "unknown move: " + name);
  }
  return m;
}

namespace {

struct Visit {
  int parent = -1;   // index into states, -1 for roots
  MoveKind move;     // move taking parent to this state
};

struct Side {
  std::vector<GaussCode> states;
  std::vector<Visit> visits;
  std::unordered_map<std::string, int> index;
  std::vector<int> frontier;

  int add(const GaussCode& c, int parent, const MoveKind& m) {
    auto [it, fresh] = index.try_emplace(c.key(), static_cast<int>(states.size()));
    if (!fresh) return -1;
    states.push_back(c);
    visits.push_back({parent, m});
    return it->second;
  }
  int find(const std::string& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
  }
};

// Chain of moves from the side's root to the given state.
std::vector<std::pair<MoveKind, GaussCode>> chain_from_root(const Side& s, int at) {
  std::vector<std::pair<MoveKind, GaussCode>> steps;
  while (s.visits[at].parent >= 0) {
    steps.emplace_back(s.visits[at].move, s.states[at]);
    at = s.visits[at].parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

SearchResult search_equivalence(const GaussCode& a, const GaussCode& b, int max_crossings,
                                long long max_states, const MoveOptions& opts) {
  SearchResult res;
  GaussCode ca = a.canonical();
  GaussCode cb = b.canonical();
  res.path.start = ca;
  if (ca == cb) {
    res.equivalent = true;
    res.states_visited = 1;
    return res;
  }
  Side fwd, bwd;
  fwd.add(ca, -1, MoveKind{});
  bwd.add(cb, -1, MoveKind{});
  fwd.frontier = {0};
  bwd.frontier = {0};
  long long visited = 2;

  auto meet_path = [&](int fi, int bi) {
    std::vector<std::pair<MoveKind, GaussCode>> steps = chain_from_root(fwd, fi);
    // invert the backward chain: need moves meeting-state -> ... -> cb
    int at = bi;
    GaussCode cur = bwd.states[bi];
    while (bwd.visits[at].parent >= 0) {
      int par = bwd.visits[at].parent;
      const GaussCode& target = bwd.states[par];
      bool found = false;
      for (const auto& [mv, result] : enumerate_moves(cur, max_crossings, opts)) {
        if (result == target) {
          steps.emplace_back(mv, result);
          found = true;
          break;
        }
      }
      if (!found)
        throw std::logic_error("move inversion failed during path reconstruction");
      cur = target;
      at = par;
    }
    res.equivalent = true;
    res.path.steps = std::move(steps);
  };

  while (!fwd.frontier.empty() || !bwd.frontier.empty()) {
    Side* side = &fwd;
    Side* other = &bwd;
    if (fwd.frontier.empty() ||
        (!bwd.frontier.empty() && bwd.frontier.size() < fwd.frontier.size())) {
      side = &bwd;
      other = &fwd;
    }
    // expand one full level deterministically
    std::vector<int> level = std::move(side->frontier);
    side->frontier.clear();
    std::sort(level.begin(), level.end(), [&](int x, int y) {
      return side->states[x].key() < side->states[y].key();
    });
    int best_meet_here = -1, best_meet_there = -1;
    std::string best_key;
    for (int si : level) {
      GaussCode state = side->states[si];
      for (const auto& [mv, result] : enumerate_moves(state, max_crossings, opts)) {
        int fresh = side->add(result, si, mv);
        if (fresh < 0) continue;
        ++visited;
        side->frontier.push_back(fresh);
        int hit = other->find(result.key());
        if (hit >= 0 && (best_meet_here < 0 || result.key() < best_key)) {
          best_meet_here = fresh;
          best_meet_there = hit;
          best_key = result.key();
        }
      }
      if (visited > max_states && best_meet_here < 0) {
        res.states_visited = visited;
        return res;  // NotFoundWithinBounds
      }
    }
    if (best_meet_here >= 0) {
      if (side == &fwd)
        meet_path(best_meet_here, best_meet_there);
      else
        meet_path(best_meet_there, best_meet_here);
      res.states_visited = visited;
      return res;
    }
  }
  res.states_visited = visited;
  return res;
}

bool replay_path(const MovePath& path, const GaussCode& end, const MoveOptions& opts) {
  GaussCode cur = path.start.canonical();
  for (const auto& [mv, expect] : path.steps) {
    GaussCode next = apply(cur, mv, opts);
    if (!(next == expect)) return false;
    cur = next;
  }
  return cur == end.canonical();
}

}  // namespace vk
