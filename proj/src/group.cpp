#include "vk/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace vk {

FiniteGroup::FiniteGroup(std::string id, std::vector<std::vector<int>> table)
    : id_(std::move(id)), table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw Error(ErrorKind::GroupTableInvalid, id_ + ": empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::GroupTableInvalid, id_ + ": table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw Error(ErrorKind::GroupTableInvalid, id_ + ": entry out of range");
  }
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw Error(ErrorKind::GroupTableInvalid, id_ + ": no identity");
  inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table_[x][y] == identity_ && table_[y][x] == identity_) {
        inverse_[x] = y;
        break;
      }
    if (inverse_[x] < 0) throw Error(ErrorKind::GroupTableInvalid, id_ + ": missing inverse");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
          throw Error(ErrorKind::GroupTableInvalid, id_ + ": not associative");
}

bool FiniteGroup::abelian() const {
  for (int x = 0; x < order(); ++x)
    for (int y = x + 1; y < order(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

int FiniteGroup::pow(int x, int e) const {
  int base = e >= 0 ? x : inv(x);
  int k = e >= 0 ? e : -e;
  int acc = identity_;
  for (int i = 0; i < k; ++i) acc = mul(acc, base);
  return acc;
}

namespace {

using Table = std::vector<std::vector<int>>;

// Closure of permutation generators acting on 0..points-1; elements become
// group elements, multiplication = composition (left acts after right).
Table permutation_group(int points, const std::vector<std::vector<int>>& gens) {
  std::vector<int> identity(points);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<std::vector<int>> elems;
  elems.insert(identity);
  std::vector<std::vector<int>> queue = {identity};
  while (!queue.empty()) {
    std::vector<int> p = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      std::vector<int> q(points);
      for (int i = 0; i < points; ++i) q[i] = g[p[i]];
      if (elems.insert(q).second) queue.push_back(q);
    }
  }
  std::vector<std::vector<int>> list(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(list.size()); ++i) index[list[i]] = i;
  Table t(list.size(), std::vector<int>(list.size()));
  for (size_t a = 0; a < list.size(); ++a)
    for (size_t b = 0; b < list.size(); ++b) {
      std::vector<int> c(points);
      for (int i = 0; i < points; ++i) c[i] = list[a][list[b][i]];
      t[a][b] = index.at(c);
    }
  return t;
}

Table cyclic(int n) {
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

Table product(const Table& a, const Table& b) {
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  Table t(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      t[i][j] = a[i / nb][j / nb] * nb + b[i % nb][j % nb];
  return t;
}

Table dihedral(int n) {  // order 2n, n >= 3
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return permutation_group(n, {rot, refl});
}

Table quaternion8() {
  // elements (s, u): s in {+,-} x u in {1,i,j,k}; index = 4*s + u
  auto mul = [](int x, int y) {
    int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
    // unit multiplication with sign: 1=0, i=1, j=2, k=3
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1},
                                  {+1, -1, +1, -1},
                                  {+1, -1, -1, +1},
                                  {+1, +1, -1, -1}};
    int s = (sx + sy) % 2;
    if (sgn[ux][uy] < 0) s ^= 1;
    return 4 * s + unit[ux][uy];
  };
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) t[x][y] = mul(x, y);
  return t;
}

Table dicyclic3() {  // order 12: <a,b | a^6, b^2=a^3, b a b^-1 = a^-1>
  auto idx = [](int i, int e) { return e * 6 + i; };
  Table t(12, std::vector<int>(12));
  for (int i = 0; i < 6; ++i)
    for (int e = 0; e < 2; ++e)
      for (int j = 0; j < 6; ++j)
        for (int f = 0; f < 2; ++f) {
          int x = idx(i, e), y = idx(j, f);
          int r, s;
          if (e == 0) {
            r = (i + j) % 6;
            s = f;
          } else if (f == 0) {
            r = (i - j + 6) % 6;
            s = 1;
          } else {
            r = (i - j + 3 + 12) % 6;
            s = 0;
          }
          t[x][y] = idx(r, s);
        }
  return t;
}

Table alternating4() {
  return permutation_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});  // two 3-cycles
}

Table symmetric(int n) {
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permutation_group(n, {transposition, cycle});
}

}  // namespace

const std::vector<FiniteGroup>& builtin_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> g;
    auto add = [&](const std::string& id, Table t) { g.emplace_back(id, std::move(t)); };
    for (int n = 1; n <= 12; ++n) add("Z" + std::to_string(n), cyclic(n));
    add("Z2xZ2", product(cyclic(2), cyclic(2)));
    add("Z4xZ2", product(cyclic(4), cyclic(2)));
    add("Z2xZ2xZ2", product(cyclic(2), product(cyclic(2), cyclic(2))));
    add("Z3xZ3", product(cyclic(3), cyclic(3)));
    add("Z6xZ2", product(cyclic(6), cyclic(2)));
    add("S3", symmetric(3));
    add("D4", dihedral(4));
    add("Q8", quaternion8());
    add("D5", dihedral(5));
    add("D6", dihedral(6));
    add("A4", alternating4());
    add("Dic3", dicyclic3());
    add("S4", symmetric(4));
    return g;
  }();
  return groups;
}

GroupPresentation wirtinger(const GaussCode& code) {
  GroupPresentation pres;
  const int n = code.crossings();
  if (n == 0) {
    pres.generators = 1;
    pres.meridian = 0;
    return pres;  // <x | >, longitude empty
  }
  const auto& w = code.passes();
  const int L = 2 * n;
  // arcs end at under-passes; arc j ends at the j-th under-pass position
  std::vector<int> under_pos;
  for (int i = 0; i < L; ++i)
    if (w[i].strand == Strand::Under) under_pos.push_back(i);
  auto arc_of = [&](int pos) {
    // arc whose terminal under-pass is the first one at position >= pos
    auto it = std::lower_bound(under_pos.begin(), under_pos.end(), pos);
    if (it == under_pos.end()) return 0;  // wraps to the first arc
    return static_cast<int>(it - under_pos.begin());
  };
  pres.generators = n;
  pres.meridian = arc_of(0);
  for (int j = 0; j < n; ++j) {
    int pos = under_pos[j];
    const Pass& u = w[pos];
    auto [over_pos, under_pos_same] = code.positions_of(u.id);
    (void)under_pos_same;
    GroupPresentation::Relation r;
    r.under_in = j;
    r.under_out = (j + 1) % n;
    r.over = arc_of(over_pos);
    r.sign = u.sign;
    pres.relations.push_back(r);
  }
  // longitude: over-arc^sign at each under-pass along the traversal,
  // then m^-writhe so it abelianizes to zero
  for (int i = 0; i < L; ++i) {
    if (w[i].strand != Strand::Under) continue;
    auto [over_pos, self] = code.positions_of(w[i].id);
    (void)self;
    pres.longitude.push_back({arc_of(over_pos), w[i].sign});
  }
  int wr = code.writhe();
  if (wr != 0) pres.longitude.push_back({pres.meridian, -wr});
  return pres;
}

std::vector<std::vector<long long>> GroupPresentation::abelianization_matrix() const {
  std::vector<std::vector<long long>> m;
  for (const Relation& r : relations) {
    std::vector<long long> row(generators, 0);
    row[r.under_out] += 1;  // c - a = 0 in the abelianization
    row[r.under_in] -= 1;
    m.push_back(std::move(row));
  }
  return m;
}

int evaluate_word(const Word& w, const FiniteGroup& g, const std::vector<int>& assignment) {
  int acc = g.identity();
  for (const WordLetter& l : w) acc = g.mul(acc, g.pow(assignment[l.gen], l.exp));
  return acc;
}

namespace {

struct HomSearch {
  const GroupPresentation& pres;
  const FiniteGroup& g;
  std::vector<int> value;
  std::vector<char> assigned;
  HomCounts counts;

  HomSearch(const GroupPresentation& p, const FiniteGroup& grp)
      : pres(p), g(grp), value(p.generators, 0), assigned(p.generators, 0) {}

  // conjugation c = b^e a b^-e and its inverse solve
  int conj(int a, int b, int e) const {
    int be = g.pow(b, e);
    return g.mul(g.mul(be, a), g.inv(be));
  }

  // Propagate all relations that are forced; records changes on the trail.
  bool propagate(std::vector<int>& trail) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& r : pres.relations) {
        if (!assigned[r.over]) continue;
        int b = value[r.over];
        if (assigned[r.under_in]) {
          int c = conj(value[r.under_in], b, r.sign);
          if (assigned[r.under_out]) {
            if (value[r.under_out] != c) return false;
          } else {
            value[r.under_out] = c;
            assigned[r.under_out] = 1;
            trail.push_back(r.under_out);
            progress = true;
          }
        } else if (assigned[r.under_out]) {
          int a = conj(value[r.under_out], b, -r.sign);
          value[r.under_in] = a;
          assigned[r.under_in] = 1;
          trail.push_back(r.under_in);
          progress = true;
        }
      }
    }
    return true;
  }

  void finish() {
    for (const auto& r : pres.relations)
      if (value[r.under_out] != conj(value[r.under_in], value[r.over], r.sign)) return;
    int m = value[pres.meridian];
    int l = evaluate_word(pres.longitude, g, value);
    if (g.mul(m, l) != g.mul(l, m))
      throw Error(ErrorKind::BadInput,
                  "meridian and longitude images do not commute; presentation is broken");
    ++counts.total;
    if (l == g.identity()) ++counts.peripheral;
  }

  int pick() const {
    // prefer an over-arc generator of a relation whose ends are assigned
    for (const auto& r : pres.relations)
      if (!assigned[r.over] && (assigned[r.under_in] || assigned[r.under_out])) return r.over;
    for (int i = 0; i < pres.generators; ++i)
      if (!assigned[i]) return i;
    return -1;
  }

  void run() {
    std::vector<int> trail;
    if (!propagate(trail)) return;  // cannot happen from the empty state
    dfs();
  }

  void dfs() {
    int gen = pick();
    if (gen < 0) {
      finish();
      return;
    }
    for (int v = 0; v < g.order(); ++v) {
      value[gen] = v;
      assigned[gen] = 1;
      std::vector<int> trail;
      if (propagate(trail)) dfs();
      for (int t : trail) assigned[t] = 0;
      assigned[gen] = 0;
    }
  }
};

}  // namespace

HomCounts count_homomorphisms(const GroupPresentation& pres, const FiniteGroup& g) {
  HomSearch search(pres, g);
  search.run();
  return search.counts;
}

long long rep_count(const GroupPresentation& pres, const FiniteGroup& g) {
  return count_homomorphisms(pres, g).total;
}

long long peripheral_count(const GroupPresentation& pres, const FiniteGroup& g) {
  return count_homomorphisms(pres, g).peripheral;
}

}  // namespace vk
