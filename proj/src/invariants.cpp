#include "vk/invariants.hpp"

#include <algorithm>
#include <map>

#include "vk/snf.hpp"

namespace vk {

int odd_writhe(const GaussCode& code) {
  int sum = 0;
  std::map<int, int> sign;
  for (const Pass& p : code.passes()) sign[p.id] = p.sign;
  for (const auto& [id, s] : sign)
    if (code.classical_parity(id) == Parity::Odd) sum += s;
  return sum;
}

long long fox_colorings(const GaussCode& code, int n) {
  if (n < 2) throw Error(ErrorKind::BadInput, "fox colorings need n >= 2");
  const int crossings = code.crossings();
  if (crossings == 0) return n;  // one arc, constants only
  GroupPresentation pres = wirtinger(code);
  IntMatrix m(static_cast<int>(pres.relations.size()), pres.generators);
  for (int i = 0; i < static_cast<int>(pres.relations.size()); ++i) {
    const auto& r = pres.relations[i];
    // 2*over - in - out = 0 (mod n); accumulate to survive repeated arcs
    m.at(i, r.over) += 2;
    m.at(i, r.under_in) -= 1;
    m.at(i, r.under_out) -= 1;
  }
  return count_kernel_mod(m, n);
}

namespace {

struct ChordStructure {
  int L = 0;
  std::vector<int> partner;       // position -> position of the other pass
  std::vector<int> crossing_idx;  // position -> crossing index (first-appearance order)
  std::vector<int> sign;          // crossing index -> sign
  int crossings = 0;
};

ChordStructure chords(const GaussCode& code) {
  ChordStructure cs;
  cs.L = code.size();
  cs.partner.assign(cs.L, -1);
  cs.crossing_idx.assign(cs.L, -1);
  std::map<int, int> first_pos, index;
  const auto& w = code.passes();
  for (int i = 0; i < cs.L; ++i) {
    auto it = first_pos.find(w[i].id);
    if (it == first_pos.end()) {
      first_pos[w[i].id] = i;
      index[w[i].id] = cs.crossings;
      cs.sign.push_back(w[i].sign);
      ++cs.crossings;
    } else {
      cs.partner[i] = it->second;
      cs.partner[it->second] = i;
    }
    cs.crossing_idx[i] = index[w[i].id];
  }
  return cs;
}

}  // namespace

int smoothing_loops(const GaussCode& code, unsigned long long state) {
  const int L = code.size();
  if (L == 0) return 1;
  ChordStructure cs = chords(code);
  // Directed arcs: arc i runs position i -> i+1; encode 2*i (forward),
  // 2*i+1 (backward).  A smoothing is orientation-respecting ("oriented")
  // iff the crossing sign is + and the state bit is A, or sign - and bit B.
  auto oriented_at = [&](int pos) {
    int ci = cs.crossing_idx[pos];
    bool a_state = ((state >> ci) & 1ULL) == 0;
    return (cs.sign[ci] > 0) == a_state;
  };
  auto next = [&](int dart) -> int {
    int arc = dart / 2;
    bool fwd = (dart % 2) == 0;
    if (fwd) {
      int p = (arc + 1) % L;  // arrive at head: in-side of pass p
      int q = cs.partner[p];
      if (oriented_at(p)) return 2 * q;                    // out of q, forward
      return 2 * ((q - 1 + L) % L) + 1;                    // backward along arc into q
    }
    int p = arc;  // arrive at tail: out-side of pass p
    int q = cs.partner[p];
    if (oriented_at(p)) return 2 * ((q - 1 + L) % L) + 1;  // backward along arc into q
    return 2 * q;                                          // out of q, forward
  };
  std::vector<char> seen(2 * L, 0);
  int orbits = 0;
  for (int d = 0; d < 2 * L; ++d) {
    if (seen[d]) continue;
    ++orbits;
    int x = d;
    while (!seen[x]) {
      seen[x] = 1;
      x = next(x);
    }
  }
  return orbits / 2;
}

Laurent kauffman_bracket(const GaussCode& code, int max_crossings) {
  const int n = code.crossings();
  if (n > max_crossings)
    throw Error(ErrorKind::TooManyCrossings,
                "bracket state sum limited to " + std::to_string(max_crossings) + " crossings");
  if (n == 0) return Laurent::one();
  const Laurent delta = Laurent::monomial(2, -1) + Laurent::monomial(-2, -1);
  std::vector<Laurent> delta_pow(n + 1);
  delta_pow[0] = Laurent::one();
  for (int i = 1; i <= n; ++i) delta_pow[i] = delta_pow[i - 1] * delta;
  Laurent sum;
  for (unsigned long long state = 0; state < (1ULL << n); ++state) {
    int b_count = __builtin_popcountll(state);
    int a_count = n - b_count;
    int loops = smoothing_loops(code, state);
    Laurent term = delta_pow[loops - 1];
    term.mul_monomial(a_count - b_count, 1);
    sum += term;
  }
  return sum;
}

Laurent f_polynomial(const GaussCode& code, int max_crossings) {
  Laurent br = kauffman_bracket(code, max_crossings);
  return br * Laurent::neg_a_cubed_pow(-code.writhe());
}

bool InvariantReport::equal_invariant_fields(const InvariantReport& other) const {
  return odd_writhe == other.odd_writhe && fox == other.fox &&
         f_polynomial == other.f_polynomial && rep_counts == other.rep_counts &&
         peripheral_counts == other.peripheral_counts;
}

InvariantReport compute_report(const GaussCode& code, const ReportOptions& opts) {
  InvariantReport rep;
  rep.odd_writhe = odd_writhe(code);
  for (int n = opts.fox_min; n <= opts.fox_max; ++n) rep.fox[n] = fox_colorings(code, n);
  rep.bracket = kauffman_bracket(code, opts.bracket_limit);
  rep.f_polynomial = f_polynomial(code, opts.bracket_limit);
  GroupPresentation pres = wirtinger(code);
  const std::vector<FiniteGroup>& groups = opts.groups ? *opts.groups : builtin_groups();
  for (const FiniteGroup& g : groups) {
    HomCounts counts = count_homomorphisms(pres, g);
    rep.rep_counts[g.id()] = counts.total;
    rep.peripheral_counts[g.id()] = counts.peripheral;
  }
  return rep;
}

}  // namespace vk
