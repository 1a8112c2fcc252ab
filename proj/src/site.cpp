#include "vk/site.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace vk {

FiniteCategory::FiniteCategory(int objects, std::vector<Arrow> arrows, std::vector<int> identities,
                               const std::vector<std::array<int, 3>>& compositions)
    : objects_(objects), arrows_(std::move(arrows)), identity_(std::move(identities)) {
  const int m = static_cast<int>(arrows_.size());
  if (objects_ < 0) throw Error(ErrorKind::CategoryInvalid, "negative object count");
  for (const Arrow& a : arrows_)
    if (a.dom < 0 || a.dom >= objects_ || a.cod < 0 || a.cod >= objects_)
      throw Error(ErrorKind::CategoryInvalid, "arrow endpoint out of range");
  if (static_cast<int>(identity_.size()) != objects_)
    throw Error(ErrorKind::CategoryInvalid, "need one identity per object");
  for (int c = 0; c < objects_; ++c) {
    int e = identity_[c];
    if (e < 0 || e >= m || arrows_[e].dom != c || arrows_[e].cod != c)
      throw Error(ErrorKind::CategoryInvalid,
                  "identity of object " + std::to_string(c) + " is not an endo-arrow");
  }
  comp_.assign(m, std::vector<int>(m, -1));
  for (const auto& [g, f, gf] : compositions) {
    if (g < 0 || g >= m || f < 0 || f >= m || gf < 0 || gf >= m)
      throw Error(ErrorKind::CategoryInvalid, "composition triple out of range");
    if (arrows_[f].cod != arrows_[g].dom)
      throw Error(ErrorKind::CompositionMismatch, "triple composes non-composable arrows");
    if (arrows_[gf].dom != arrows_[f].dom || arrows_[gf].cod != arrows_[g].cod)
      throw Error(ErrorKind::CompositionMismatch, "composite has wrong endpoints");
    if (comp_[g][f] != -1 && comp_[g][f] != gf)
      throw Error(ErrorKind::CategoryInvalid, "conflicting composition entries");
    comp_[g][f] = gf;
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (arrows_[f].cod == arrows_[g].dom && comp_[g][f] < 0)
        throw Error(ErrorKind::CategoryInvalid, "composition table is not total");
  // identity laws
  for (int f = 0; f < m; ++f) {
    if (comp_[f][identity_[arrows_[f].dom]] != f || comp_[identity_[arrows_[f].cod]][f] != f)
      throw Error(ErrorKind::CategoryInvalid, "identity law fails at arrow " + std::to_string(f));
  }
  // associativity on all composable triples
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (arrows_[f].cod != arrows_[g].dom) continue;
      int gf = comp_[g][f];
      for (int h = 0; h < m; ++h) {
        if (arrows_[g].cod != arrows_[h].dom) continue;
        if (comp_[h][comp_[g][f]] != comp_[comp_[h][g]][f])
          throw Error(ErrorKind::CategoryInvalid, "associativity fails");
        (void)gf;
      }
    }
  into_.assign(objects_, {});
  outof_.assign(objects_, {});
  for (int f = 0; f < m; ++f) {
    into_[arrows_[f].cod].push_back(f);
    outof_[arrows_[f].dom].push_back(f);
  }
}

int FiniteCategory::compose(int g, int f) const {
  if (!composable(g, f))
    throw Error(ErrorKind::CompositionMismatch, "arrows are not composable");
  return comp_[g][f];
}

int Sieve::count() const {
  return static_cast<int>(std::count(member.begin(), member.end(), 1));
}

bool Sieve::subset_of(const Sieve& other) const {
  for (size_t i = 0; i < member.size(); ++i)
    if (member[i] && !other.member[i]) return false;
  return true;
}

std::string Sieve::describe(const FiniteCategory& cat) const {
  std::string out = "sieve on " + std::to_string(target) + " {";
  bool first = true;
  for (int f = 0; f < cat.arrow_count(); ++f)
    if (member[f]) {
      if (!first) out += ",";
      out += std::to_string(f);
      first = false;
    }
  return out + "}";
}

Sieve generate_sieve(const FiniteCategory& cat, int target, const std::vector<int>& seeds) {
  Sieve s;
  s.target = target;
  s.member.assign(cat.arrow_count(), 0);
  for (int f : seeds) {
    if (cat.arrow(f).cod != target)
      throw Error(ErrorKind::WrongCodomain,
                  "seed arrow " + std::to_string(f) + " does not end at the target");
    s.member[f] = 1;
  }
  // close under right composition
  bool changed = true;
  while (changed) {
    changed = false;
    for (int f = 0; f < cat.arrow_count(); ++f) {
      if (!s.member[f]) continue;
      for (int g : cat.arrows_into(cat.arrow(f).dom)) {
        int fg = cat.compose(f, g);
        if (!s.member[fg]) {
          s.member[fg] = 1;
          changed = true;
        }
      }
    }
  }
  return s;
}

Sieve maximal_sieve(const FiniteCategory& cat, int target) {
  Sieve s;
  s.target = target;
  s.member.assign(cat.arrow_count(), 0);
  for (int f : cat.arrows_into(target)) s.member[f] = 1;
  return s;
}

Sieve pullback_sieve(const FiniteCategory& cat, int h, const Sieve& s) {
  if (cat.arrow(h).cod != s.target)
    throw Error(ErrorKind::CompositionMismatch, "pullback arrow does not end at the sieve target");
  Sieve out;
  out.target = cat.arrow(h).dom;
  out.member.assign(cat.arrow_count(), 0);
  for (int g : cat.arrows_into(out.target))
    if (s.member[cat.compose(h, g)]) out.member[g] = 1;
  return out;
}

namespace {

bool sieve_less(const Sieve& a, const Sieve& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.member < b.member;
}

}  // namespace

std::vector<Sieve> all_sieves(const FiniteCategory& cat, int target, size_t cap) {
  // every sieve is a union of principal sieves; close the empty sieve under
  // unions with principals
  std::vector<Sieve> principals;
  for (int f : cat.arrows_into(target)) principals.push_back(generate_sieve(cat, target, {f}));
  Sieve empty;
  empty.target = target;
  empty.member.assign(cat.arrow_count(), 0);
  std::set<std::vector<char>> seen;
  std::vector<Sieve> out;
  std::vector<Sieve> queue = {empty};
  seen.insert(empty.member);
  while (!queue.empty()) {
    Sieve s = std::move(queue.back());
    queue.pop_back();
    out.push_back(s);
    if (out.size() > cap)
      throw Error(ErrorKind::BadInput, "sieve enumeration exceeds cap on object " +
                                           std::to_string(target));
    for (const Sieve& p : principals) {
      Sieve u = s;
      for (size_t i = 0; i < u.member.size(); ++i) u.member[i] |= p.member[i];
      if (seen.insert(u.member).second) queue.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end(), sieve_less);
  return out;
}

void Coverage::add(const Sieve& s) {
  auto& list = covers[s.target];
  if (std::find(list.begin(), list.end(), s) == list.end()) {
    list.push_back(s);
    std::sort(list.begin(), list.end(), sieve_less);
  }
}

bool Coverage::contains(const Sieve& s) const {
  const auto& list = covers[s.target];
  return std::find(list.begin(), list.end(), s) != list.end();
}

Coverage trivial_coverage(const FiniteCategory& cat) {
  Coverage j(cat);
  for (int c = 0; c < cat.objects(); ++c) j.add(maximal_sieve(cat, c));
  return j;
}

TopologyCheck is_topology(const FiniteCategory& cat, const Coverage& j) {
  TopologyCheck res;
  if (static_cast<int>(j.covers.size()) != cat.objects())
    throw Error(ErrorKind::CoverageInvalid, "coverage does not match the category");
  for (int c = 0; c < cat.objects(); ++c)
    for (const Sieve& s : j.covers[c]) {
      if (s.target != c) throw Error(ErrorKind::CoverageInvalid, "sieve filed under wrong object");
      for (int f = 0; f < cat.arrow_count(); ++f)
        if (s.member[f] && cat.arrow(f).cod != c)
          throw Error(ErrorKind::CoverageInvalid, "member arrow has wrong codomain");
      for (int f = 0; f < cat.arrow_count(); ++f)
        if (s.member[f])
          for (int g : cat.arrows_into(cat.arrow(f).dom))
            if (!s.member[cat.compose(f, g)])
              throw Error(ErrorKind::CoverageInvalid, "coverage contains a non-sieve");
    }
  // maximality
  for (int c = 0; c < cat.objects(); ++c) {
    if (!j.contains(maximal_sieve(cat, c))) {
      res.axiom = TopologyAxiom::Maximality;
      res.witness = "maximal sieve on object " + std::to_string(c) + " is not covering";
      return res;
    }
  }
  // stability
  for (int c = 0; c < cat.objects(); ++c)
    for (const Sieve& s : j.covers[c])
      for (int h : cat.arrows_into(c)) {
        Sieve pulled = pullback_sieve(cat, h, s);
        if (!j.contains(pulled)) {
          res.axiom = TopologyAxiom::Stability;
          res.witness = "pullback of " + s.describe(cat) + " along arrow " + std::to_string(h) +
                        " is not covering";
          return res;
        }
      }
  // transitivity: S covering, R any sieve with all pullbacks along S covering
  for (int c = 0; c < cat.objects(); ++c) {
    std::vector<Sieve> candidates = all_sieves(cat, c);
    for (const Sieve& r : candidates) {
      if (j.contains(r)) continue;
      for (const Sieve& s : j.covers[c]) {
        bool all_pulled_cover = true;
        for (int f = 0; f < cat.arrow_count() && all_pulled_cover; ++f)
          if (s.member[f] && !j.contains(pullback_sieve(cat, f, r))) all_pulled_cover = false;
        if (all_pulled_cover) {
          res.axiom = TopologyAxiom::Transitivity;
          res.witness = "sieve " + r.describe(cat) + " has covering pullbacks along " +
                        s.describe(cat) + " but is not covering";
          return res;
        }
      }
    }
  }
  res.valid = true;
  return res;
}

FinitePresheaf::FinitePresheaf(const FiniteCategory& cat, std::vector<int> sizes,
                               std::vector<std::vector<int>> restriction)
    : cat_(&cat), sizes_(std::move(sizes)), restriction_(std::move(restriction)) {
  if (static_cast<int>(sizes_.size()) != cat.objects())
    throw Error(ErrorKind::FunctorInvalid, "presheaf needs one set per object");
  if (static_cast<int>(restriction_.size()) != cat.arrow_count())
    throw Error(ErrorKind::FunctorInvalid, "presheaf needs one map per arrow");
  for (int f = 0; f < cat.arrow_count(); ++f) {
    const auto& a = cat.arrow(f);
    if (static_cast<int>(restriction_[f].size()) != sizes_[a.cod])
      throw Error(ErrorKind::FunctorInvalid, "restriction map has wrong domain size");
    for (int v : restriction_[f])
      if (v < 0 || v >= sizes_[a.dom])
        throw Error(ErrorKind::FunctorInvalid, "restriction map image out of range");
  }
  for (int c = 0; c < cat.objects(); ++c) {
    int e = cat.identity(c);
    for (int x = 0; x < sizes_[c]; ++x)
      if (restriction_[e][x] != x)
        throw Error(ErrorKind::FunctorInvalid, "P(id) is not the identity");
  }
  for (int f = 0; f < cat.arrow_count(); ++f)
    for (int g = 0; g < cat.arrow_count(); ++g) {
      if (!cat.composable(f, g)) continue;  // f after g
      int fg = cat.compose(f, g);
      for (int x = 0; x < sizes_[cat.arrow(f).cod]; ++x)
        if (restriction_[fg][x] != restriction_[g][restriction_[f][x]])
          throw Error(ErrorKind::FunctorInvalid, "P(f.g) != P(g).P(f)");
    }
}

FinitePresheaf FinitePresheaf::constant(const FiniteCategory& cat, int g_size) {
  std::vector<int> sizes(cat.objects(), g_size);
  std::vector<std::vector<int>> maps(cat.arrow_count());
  for (int f = 0; f < cat.arrow_count(); ++f) {
    maps[f].resize(g_size);
    std::iota(maps[f].begin(), maps[f].end(), 0);
  }
  return FinitePresheaf(cat, std::move(sizes), std::move(maps));
}

FinitePresheaf FinitePresheaf::terminal(const FiniteCategory& cat) { return constant(cat, 1); }

SetFunctor::SetFunctor(const FiniteCategory& cat, std::vector<int> sizes,
                       std::vector<std::vector<int>> action)
    : cat_(&cat), sizes_(std::move(sizes)), action_(std::move(action)) {
  if (static_cast<int>(sizes_.size()) != cat.objects())
    throw Error(ErrorKind::FunctorInvalid, "functor needs one set per object");
  if (static_cast<int>(action_.size()) != cat.arrow_count())
    throw Error(ErrorKind::FunctorInvalid, "functor needs one map per arrow");
  for (int f = 0; f < cat.arrow_count(); ++f) {
    const auto& a = cat.arrow(f);
    if (static_cast<int>(action_[f].size()) != sizes_[a.dom])
      throw Error(ErrorKind::FunctorInvalid, "action map has wrong domain size");
    for (int v : action_[f])
      if (v < 0 || v >= sizes_[a.cod])
        throw Error(ErrorKind::FunctorInvalid, "action map image out of range");
  }
  for (int c = 0; c < cat.objects(); ++c) {
    int e = cat.identity(c);
    for (int x = 0; x < sizes_[c]; ++x)
      if (action_[e][x] != x) throw Error(ErrorKind::FunctorInvalid, "A(id) is not the identity");
  }
  for (int f = 0; f < cat.arrow_count(); ++f)
    for (int g = 0; g < cat.arrow_count(); ++g) {
      if (!cat.composable(g, f)) continue;  // g after f
      int gf = cat.compose(g, f);
      for (int x = 0; x < sizes_[cat.arrow(f).dom]; ++x)
        if (action_[gf][x] != action_[g][action_[f][x]])
          throw Error(ErrorKind::FunctorInvalid, "A(g.f) != A(g).A(f)");
    }
}

std::vector<Family> matching_families(const FinitePresheaf& p, const Sieve& s) {
  const FiniteCategory& cat = p.category();
  std::vector<int> members;
  for (int f = 0; f < cat.arrow_count(); ++f)
    if (s.member[f]) members.push_back(f);
  std::vector<Family> out;
  Family fam(cat.arrow_count(), -1);

  // check constraints touching `e`, which was just assigned
  auto consistent = [&](int e, size_t upto) {
    for (size_t i = 0; i <= upto; ++i) {
      int f = members[i];
      if (fam[f] < 0) continue;
      // x_{f.g} = P(g)(x_f) whenever the composite lands on an assigned arrow
      for (int g : cat.arrows_into(cat.arrow(f).dom)) {
        int fg = cat.compose(f, g);
        if (fg == e || f == e) {
          if (fam[fg] >= 0 && fam[fg] != p.restrict(g, fam[f])) return false;
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == members.size()) {
      out.push_back(fam);
      return;
    }
    int e = members[i];
    // forced value when e factors through an assigned member
    int forced = -1;
    bool conflict = false;
    for (size_t k = 0; k < i && !conflict; ++k) {
      int f = members[k];
      for (int g : cat.arrows_into(cat.arrow(f).dom)) {
        if (cat.compose(f, g) == e) {
          int v = p.restrict(g, fam[f]);
          if (forced < 0)
            forced = v;
          else if (forced != v)
            conflict = true;
        }
      }
    }
    if (conflict) return;
    int dom_size = p.size(cat.arrow(e).dom);
    for (int v = 0; v < dom_size; ++v) {
      if (forced >= 0 && v != forced) continue;
      fam[e] = v;
      if (consistent(e, i)) self(self, i + 1);
      fam[e] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> amalgamations(const FinitePresheaf& p, const Sieve& s, const Family& fam) {
  const FiniteCategory& cat = p.category();
  std::vector<int> out;
  for (int a = 0; a < p.size(s.target); ++a) {
    bool ok = true;
    for (int f = 0; f < cat.arrow_count() && ok; ++f)
      if (s.member[f] && p.restrict(f, a) != fam[f]) ok = false;
    if (ok) out.push_back(a);
  }
  return out;
}

std::string SheafCheck::describe(const FiniteCategory& cat) const {
  if (is_sheaf) return "sheaf";
  std::string out = reason == SheafFailure::NoAmalgamation ? "no amalgamation" : "non-unique amalgamation";
  out += " for " + sieve.describe(cat) + " on object " + std::to_string(object);
  return out;
}

SheafCheck sheaf_check(const FinitePresheaf& p, const Coverage& j) {
  SheafCheck res;
  const FiniteCategory& cat = p.category();
  for (int c = 0; c < cat.objects(); ++c)
    for (const Sieve& s : j.covers[c])
      for (const Family& fam : matching_families(p, s)) {
        std::vector<int> am = amalgamations(p, s, fam);
        if (am.size() != 1) {
          res.is_sheaf = false;
          res.object = c;
          res.sieve = s;
          res.family = fam;
          res.reason = am.empty() ? SheafFailure::NoAmalgamation : SheafFailure::NonUnique;
          return res;
        }
      }
  res.is_sheaf = true;
  return res;
}

namespace {

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

PlusResult plus_construction(const FinitePresheaf& p, const Coverage& j) {
  const FiniteCategory& cat = p.category();
  const int n_obj = cat.objects();

  // enumerate (sieve, family) pairs per object
  struct Entry {
    int sieve_idx;
    Family family;
  };
  std::vector<std::vector<Entry>> entries(n_obj);
  for (int c = 0; c < n_obj; ++c)
    for (int si = 0; si < static_cast<int>(j.covers[c].size()); ++si)
      for (Family& fam : matching_families(p, j.covers[c][si]))
        entries[c].push_back({si, std::move(fam)});

  auto restrict_family = [&](const Family& fam, const Sieve& target_sieve, Family& out) {
    out.assign(cat.arrow_count(), -1);
    for (int g = 0; g < cat.arrow_count(); ++g)
      if (target_sieve.member[g]) out[g] = fam[g];
  };

  // families agree on a common covering refinement
  std::vector<std::vector<int>> klass(n_obj);        // entry -> class id
  std::vector<std::vector<int>> class_rep(n_obj);    // class -> least entry index
  for (int c = 0; c < n_obj; ++c) {
    const auto& list = entries[c];
    DSU dsu(static_cast<int>(list.size()));
    for (size_t x = 0; x < list.size(); ++x)
      for (size_t y = x + 1; y < list.size(); ++y) {
        const Sieve& sx = j.covers[c][list[x].sieve_idx];
        const Sieve& sy = j.covers[c][list[y].sieve_idx];
        bool related = false;
        for (const Sieve& refinement : j.covers[c]) {
          if (!refinement.subset_of(sx) || !refinement.subset_of(sy)) continue;
          bool agree = true;
          for (int f = 0; f < cat.arrow_count() && agree; ++f)
            if (refinement.member[f] && list[x].family[f] != list[y].family[f]) agree = false;
          if (agree) {
            related = true;
            break;
          }
        }
        if (related) dsu.unite(static_cast<int>(x), static_cast<int>(y));
      }
    std::map<int, int> root_to_class;
    klass[c].resize(list.size());
    for (size_t x = 0; x < list.size(); ++x) {
      int root = dsu.find(static_cast<int>(x));
      auto it = root_to_class.find(root);
      if (it == root_to_class.end()) {
        int id = static_cast<int>(class_rep[c].size());
        root_to_class[root] = id;
        class_rep[c].push_back(static_cast<int>(x));
        klass[c][x] = id;
      } else {
        klass[c][x] = it->second;
      }
    }
  }

  // restriction maps between class sets
  std::vector<int> sizes(n_obj);
  for (int c = 0; c < n_obj; ++c) sizes[c] = static_cast<int>(class_rep[c].size());
  auto lookup_class = [&](int obj, int sieve_idx, const Family& fam) {
    for (size_t x = 0; x < entries[obj].size(); ++x)
      if (entries[obj][x].sieve_idx == sieve_idx && entries[obj][x].family == fam)
        return klass[obj][x];
    throw std::logic_error("restricted family not found in plus-construction");
  };
  std::vector<std::vector<int>> maps(cat.arrow_count());
  for (int h = 0; h < cat.arrow_count(); ++h) {
    int c = cat.arrow(h).cod, b = cat.arrow(h).dom;
    maps[h].resize(sizes[c]);
    for (int cls = 0; cls < sizes[c]; ++cls) {
      const Entry& rep = entries[c][class_rep[c][cls]];
      Sieve pulled = pullback_sieve(cat, h, j.covers[c][rep.sieve_idx]);
      // y_g = x_{h o g}
      Family y(cat.arrow_count(), -1);
      for (int g = 0; g < cat.arrow_count(); ++g)
        if (pulled.member[g]) y[g] = rep.family[cat.compose(h, g)];
      auto it = std::find(j.covers[b].begin(), j.covers[b].end(), pulled);
      if (it == j.covers[b].end())
        throw std::logic_error("pullback of covering sieve is not covering (invalid topology?)");
      maps[h][cls] = lookup_class(b, static_cast<int>(it - j.covers[b].begin()), y);
    }
  }

  PlusResult result{FinitePresheaf(cat, sizes, std::move(maps)), {}};
  // unit: restrict each section along the maximal sieve
  result.unit.resize(n_obj);
  for (int c = 0; c < n_obj; ++c) {
    Sieve maximal = maximal_sieve(cat, c);
    auto it = std::find(j.covers[c].begin(), j.covers[c].end(), maximal);
    if (it == j.covers[c].end())
      throw std::logic_error("maximal sieve missing from coverage (invalid topology?)");
    int max_idx = static_cast<int>(it - j.covers[c].begin());
    result.unit[c].resize(p.size(c));
    for (int a = 0; a < p.size(c); ++a) {
      Family fam(cat.arrow_count(), -1);
      for (int f = 0; f < cat.arrow_count(); ++f)
        if (maximal.member[f]) fam[f] = p.restrict(f, a);
      result.unit[c][a] = lookup_class(c, max_idx, fam);
    }
  }
  return result;
}

FinitePresheaf sheafify(const FinitePresheaf& p, const Coverage& j) {
  return plus_construction(plus_construction(p, j).presheaf, j).presheaf;
}

std::vector<std::vector<int>> global_sections(const FinitePresheaf& p) {
  const FiniteCategory& cat = p.category();
  std::vector<std::vector<int>> out;
  std::vector<int> pick(cat.objects(), -1);
  auto consistent = [&](int obj) {
    for (int f = 0; f < cat.arrow_count(); ++f) {
      const auto& a = cat.arrow(f);
      if (pick[a.cod] < 0 || pick[a.dom] < 0) continue;
      if (a.cod == obj || a.dom == obj)
        if (p.restrict(f, pick[a.cod]) != pick[a.dom]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int obj) -> void {
    if (obj == cat.objects()) {
      out.push_back(pick);
      return;
    }
    for (int v = 0; v < p.size(obj); ++v) {
      pick[obj] = v;
      if (consistent(obj)) self(self, obj + 1);
      pick[obj] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> global_invariants(const FiniteCategory& cat, const Coverage& j,
                                                int g_size) {
  FinitePresheaf delta = FinitePresheaf::constant(cat, g_size);
  return global_sections(sheafify(delta, j));
}

ElementsCategory category_of_elements(const SetFunctor& f) {
  const FiniteCategory& base = f.category();
  ElementsCategory out;
  std::map<std::pair<int, int>, int> index;
  for (int c = 0; c < base.objects(); ++c)
    for (int x = 0; x < f.size(c); ++x) {
      index[{c, x}] = static_cast<int>(out.objects.size());
      out.objects.emplace_back(c, x);
    }
  struct Arr {
    int base_arrow;
    int src_elem;
  };
  std::vector<Arr> arrows;
  std::vector<FiniteCategory::Arrow> shape;
  std::map<std::pair<int, int>, int> arrow_index;
  for (int g = 0; g < base.arrow_count(); ++g)
    for (int x = 0; x < f.size(base.arrow(g).dom); ++x) {
      arrow_index[{g, x}] = static_cast<int>(arrows.size());
      arrows.push_back({g, x});
      shape.push_back({index.at({base.arrow(g).dom, x}),
                       index.at({base.arrow(g).cod, f.act(g, x)})});
    }
  std::vector<int> identities(out.objects.size());
  for (size_t o = 0; o < out.objects.size(); ++o) {
    auto [c, x] = out.objects[o];
    identities[o] = arrow_index.at({base.identity(c), x});
  }
  std::vector<std::array<int, 3>> comps;
  for (size_t b = 0; b < arrows.size(); ++b)
    for (size_t a = 0; a < arrows.size(); ++a) {
      // b after a
      if (shape[a].cod != shape[b].dom) continue;
      int composite_arrow = base.compose(arrows[b].base_arrow, arrows[a].base_arrow);
      comps.push_back({static_cast<int>(b), static_cast<int>(a),
                       arrow_index.at({composite_arrow, arrows[a].src_elem})});
    }
  out.category = FiniteCategory(static_cast<int>(out.objects.size()), std::move(shape),
                                std::move(identities), comps);
  return out;
}

std::vector<int> pi0(const FiniteCategory& cat) {
  DSU dsu(cat.objects());
  for (int f = 0; f < cat.arrow_count(); ++f) dsu.unite(cat.arrow(f).dom, cat.arrow(f).cod);
  std::vector<int> label(cat.objects());
  std::vector<int> least(cat.objects(), -1);
  for (int c = 0; c < cat.objects(); ++c) {
    int r = dsu.find(c);
    if (least[r] < 0) least[r] = c;
  }
  for (int c = 0; c < cat.objects(); ++c) label[c] = least[dsu.find(c)];
  return label;
}

int pi0_count(const FiniteCategory& cat) {
  std::vector<int> label = pi0(cat);
  std::set<int> distinct(label.begin(), label.end());
  return static_cast<int>(distinct.size());
}

FilteringCheck filtering_check(const SetFunctor& a) {
  FilteringCheck res;
  const FiniteCategory& cat = a.category();
  bool nonempty = false;
  for (int c = 0; c < cat.objects(); ++c)
    if (a.size(c) > 0) nonempty = true;
  if (!nonempty) {
    res.failed = FilteringCondition::NonEmpty;
    res.witness = "A(C) is empty for every object";
    return res;
  }
  // (ii) spans
  for (int cb = 0; cb < cat.objects(); ++cb)
    for (int b = 0; b < a.size(cb); ++b)
      for (int cc = 0; cc < cat.objects(); ++cc)
        for (int c = 0; c < a.size(cc); ++c) {
          bool found = false;
          for (int cd = 0; cd < cat.objects() && !found; ++cd)
            for (int d = 0; d < a.size(cd) && !found; ++d)
              for (int f : cat.arrows_out_of(cd)) {
                if (cat.arrow(f).cod != cb || a.act(f, d) != b) continue;
                for (int g : cat.arrows_out_of(cd))
                  if (cat.arrow(g).cod == cc && a.act(g, d) == c) {
                    found = true;
                    break;
                  }
                if (found) break;
              }
          if (!found) {
            res.failed = FilteringCondition::Span;
            res.witness = "no span onto elements (" + std::to_string(cb) + "," +
                          std::to_string(b) + ") and (" + std::to_string(cc) + "," +
                          std::to_string(c) + ")";
            return res;
          }
        }
  // (iii) equalizers
  for (int f = 0; f < cat.arrow_count(); ++f)
    for (int g = 0; g < cat.arrow_count(); ++g) {
      if (f == g) continue;
      if (cat.arrow(f).dom != cat.arrow(g).dom || cat.arrow(f).cod != cat.arrow(g).cod) continue;
      int cc = cat.arrow(f).dom;
      for (int c = 0; c < a.size(cc); ++c) {
        if (a.act(f, c) != a.act(g, c)) continue;
        bool found = false;
        for (int cb = 0; cb < cat.objects() && !found; ++cb)
          for (int e : cat.arrows_out_of(cb)) {
            if (cat.arrow(e).cod != cc) continue;
            if (cat.compose(f, e) != cat.compose(g, e)) continue;
            for (int b = 0; b < a.size(cb); ++b)
              if (a.act(e, b) == c) {
                found = true;
                break;
              }
            if (found) break;
          }
        if (!found) {
          res.failed = FilteringCondition::Equalizer;
          res.witness = "parallel arrows " + std::to_string(f) + "," + std::to_string(g) +
                        " agree on element " + std::to_string(c) + " of object " +
                        std::to_string(cc) + " but have no equalizing arrow";
          return res;
        }
      }
    }
  res.filtering = true;
  return res;
}

ContinuityCheck continuity_check(const SetFunctor& a, const Coverage& j) {
  ContinuityCheck res;
  const FiniteCategory& cat = a.category();
  for (int c = 0; c < cat.objects(); ++c)
    for (const Sieve& s : j.covers[c])
      for (int u = 0; u < a.size(c); ++u) {
        bool hit = false;
        for (int f = 0; f < cat.arrow_count() && !hit; ++f) {
          if (!s.member[f]) continue;
          for (int v = 0; v < a.size(cat.arrow(f).dom); ++v)
            if (a.act(f, v) == u) {
              hit = true;
              break;
            }
        }
        if (!hit) {
          res.object = c;
          res.sieve = s;
          res.element = u;
          res.witness = "element " + std::to_string(u) + " of object " + std::to_string(c) +
                        " is not hit by " + s.describe(cat);
          return res;
        }
      }
  res.continuous = true;
  return res;
}

std::vector<int> intersection_of_images(const SetFunctor& a, int object, int u) {
  const FiniteCategory& cat = a.category();
  std::vector<char> in_all(a.size(object), 1);
  for (int f : cat.arrows_into(object)) {
    std::vector<char> image(a.size(object), 0);
    for (int v = 0; v < a.size(cat.arrow(f).dom); ++v) image[a.act(f, v)] = 1;
    if (!image[u]) continue;  // f not in S_u
    for (int x = 0; x < a.size(object); ++x) in_all[x] = in_all[x] && image[x];
  }
  std::vector<int> out;
  for (int x = 0; x < a.size(object); ++x)
    if (in_all[x]) out.push_back(x);
  return out;
}

namespace {

bool naturally_isomorphic(const SetFunctor& a, const SetFunctor& b) {
  const FiniteCategory& cat = a.category();
  for (int c = 0; c < cat.objects(); ++c)
    if (a.size(c) != b.size(c)) return false;
  // backtrack over per-object bijections commuting with every arrow
  std::vector<std::vector<int>> iso(cat.objects());
  auto check_partial = [&]() {
    for (int f = 0; f < cat.arrow_count(); ++f) {
      const auto& ar = cat.arrow(f);
      if (iso[ar.dom].empty() || iso[ar.cod].empty()) continue;
      for (int x = 0; x < a.size(ar.dom); ++x)
        if (iso[ar.cod][a.act(f, x)] != b.act(f, iso[ar.dom][x])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int obj) -> bool {
    if (obj == cat.objects()) return true;
    std::vector<int> perm(a.size(obj));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      iso[obj] = perm;
      if (check_partial() && self(self, obj + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    iso[obj].clear();
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::vector<SetFunctor> find_points(const FiniteCategory& cat, const Coverage& j, int max_size,
                                    size_t cap) {
  std::vector<SetFunctor> points;
  const int m = cat.arrow_count();
  std::vector<int> sizes(cat.objects(), 0);
  size_t enumerated = 0;

  auto try_maps = [&](auto&& self, std::vector<std::vector<int>>& action, int f) -> void {
    if (f == m) {
      try {
        SetFunctor a(cat, sizes, action);
        if (!filtering_check(a).filtering) return;
        if (!continuity_check(a, j).continuous) return;
        for (const SetFunctor& p : points)
          if (naturally_isomorphic(a, p)) return;
        points.push_back(std::move(a));
      } catch (const Error&) {
      }
      return;
    }
    const auto& ar = cat.arrow(f);
    int ds = sizes[ar.dom], cs = sizes[ar.cod];
    if (cat.is_identity(f)) {
      action[f].resize(ds);
      std::iota(action[f].begin(), action[f].end(), 0);
      self(self, action, f + 1);
      return;
    }
    if (ds == 0) {
      action[f].clear();
      self(self, action, f + 1);
      return;
    }
    if (cs == 0) return;  // no map from a nonempty set into the empty set
    action[f].assign(ds, 0);
    auto fill = [&](auto&& fill_self, int pos) -> void {
      if (pos == ds) {
        if (++enumerated > cap)
          throw Error(ErrorKind::BadInput, "point search exceeded enumeration cap");
        self(self, action, f + 1);
        return;
      }
      for (int v = 0; v < cs; ++v) {
        action[f][pos] = v;
        fill_self(fill_self, pos + 1);
      }
    };
    fill(fill, 0);
  };

  auto size_rec = [&](auto&& self, int obj) -> void {
    if (obj == cat.objects()) {
      std::vector<std::vector<int>> action(m);
      try_maps(try_maps, action, 0);
      return;
    }
    for (int s = 0; s <= max_size; ++s) {
      sizes[obj] = s;
      self(self, obj + 1);
    }
  };
  size_rec(size_rec, 0);
  return points;
}

}  // namespace vk
