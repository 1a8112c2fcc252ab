#include "vk/topospace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace vk {

bool FiniteSpace::is_open(uint32_t mask) const {
  return std::binary_search(opens.begin(), opens.end(), mask);
}

uint32_t FiniteSpace::minimal_open_containing(int point) const {
  uint32_t acc = opens.empty() ? 0 : opens.back();
  for (uint32_t u : opens)
    if (u & (1u << point)) acc &= u;
  return acc;
}

std::vector<FiniteSpace> enumerate_topologies(int n) {
  if (n < 0 || n > 4)
    throw Error(ErrorKind::BadInput, "topology enumeration is implemented for n <= 4");
  const uint32_t full = n == 0 ? 0 : ((1u << n) - 1);
  const int subsets = 1 << n;
  std::vector<FiniteSpace> out;
  // family of opens encoded as a bitmask over the 2^n subsets
  for (uint64_t fam = 0; fam < (1ULL << subsets); ++fam) {
    if (!(fam & 1ULL)) continue;                       // empty set must be open
    if (!(fam & (1ULL << full))) continue;             // whole space must be open
    std::vector<uint32_t> opens;
    for (int s = 0; s < subsets; ++s)
      if (fam & (1ULL << s)) opens.push_back(static_cast<uint32_t>(s));
    bool closed = true;
    for (size_t i = 0; i < opens.size() && closed; ++i)
      for (size_t j = i + 1; j < opens.size() && closed; ++j) {
        if (!(fam & (1ULL << (opens[i] | opens[j])))) closed = false;
        if (!(fam & (1ULL << (opens[i] & opens[j])))) closed = false;
      }
    if (!closed) continue;
    out.push_back(FiniteSpace{n, std::move(opens)});
  }
  return out;
}

bool is_t0(const FiniteSpace& space) {
  for (int x = 0; x < space.points; ++x)
    for (int y = x + 1; y < space.points; ++y) {
      bool separated = false;
      for (uint32_t u : space.opens) {
        bool in_x = u & (1u << x), in_y = u & (1u << y);
        if (in_x != in_y) separated = true;
      }
      if (!separated) return false;
    }
  return true;
}

std::vector<int> space_components(const FiniteSpace& space) {
  std::vector<int> parent(space.points);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](auto&& self, int x) -> int {
    return parent[x] == x ? x : parent[x] = self(self, parent[x]);
  };
  for (int x = 0; x < space.points; ++x) {
    uint32_t ux = space.minimal_open_containing(x);
    for (int y = 0; y < space.points; ++y)
      if (ux & (1u << y)) parent[find(find, x)] = find(find, y);
  }
  std::vector<int> least(space.points, -1);
  for (int x = 0; x < space.points; ++x) {
    int r = find(find, x);
    if (least[r] < 0) least[r] = x;
  }
  std::vector<int> label(space.points);
  for (int x = 0; x < space.points; ++x) label[x] = least[find(find, x)];
  return label;
}

int space_component_count(const FiniteSpace& space) {
  std::vector<int> label = space_components(space);
  return static_cast<int>(std::set<int>(label.begin(), label.end()).size());
}

int SpaceSite::object_of(uint32_t mask) const {
  auto it = std::lower_bound(open_mask.begin(), open_mask.end(), mask);
  if (it == open_mask.end() || *it != mask)
    throw Error(ErrorKind::BadInput, "mask is not an open of the site");
  return static_cast<int>(it - open_mask.begin());
}

int SpaceSite::inclusion_arrow(int sub_object, int super_object) const {
  for (int f : category->arrows_out_of(sub_object))
    if (category->arrow(f).cod == super_object) return f;
  throw Error(ErrorKind::BadInput, "no inclusion arrow between the given opens");
}

SpaceSite space_site(const FiniteSpace& space) {
  SpaceSite site;
  site.open_mask = space.opens;
  std::sort(site.open_mask.begin(), site.open_mask.end());
  const int n_obj = static_cast<int>(site.open_mask.size());
  std::vector<FiniteCategory::Arrow> arrows;
  std::vector<int> identities(n_obj, -1);
  std::map<std::pair<int, int>, int> arrow_id;
  for (int u = 0; u < n_obj; ++u)
    for (int v = 0; v < n_obj; ++v) {
      if ((site.open_mask[u] & site.open_mask[v]) != site.open_mask[u]) continue;  // need u <= v
      arrow_id[{u, v}] = static_cast<int>(arrows.size());
      arrows.push_back({u, v});
      if (u == v) identities[u] = static_cast<int>(arrows.size()) - 1;
    }
  std::vector<std::array<int, 3>> comps;
  for (const auto& [gv, gid] : arrow_id)
    for (const auto& [fv, fid] : arrow_id)
      if (fv.second == gv.first)
        comps.push_back({gid, fid, arrow_id.at({fv.first, gv.second})});
  site.category = std::make_shared<FiniteCategory>(n_obj, std::move(arrows),
                                                   std::move(identities), comps);
  // object display names
  site.category->object_names.resize(n_obj);
  for (int u = 0; u < n_obj; ++u) {
    std::string name = "{";
    for (int p = 0; p < space.points; ++p)
      if (site.open_mask[u] & (1u << p)) {
        if (name.size() > 1) name += ",";
        name += std::to_string(p);
      }
    site.category->object_names[u] = name + "}";
  }
  // open-cover coverage: union of domains equals the target open
  site.open_cover = Coverage(*site.category);
  for (int u = 0; u < n_obj; ++u) {
    for (const Sieve& s : all_sieves(*site.category, u)) {
      uint32_t covered = 0;
      for (int f = 0; f < site.category->arrow_count(); ++f)
        if (s.member[f]) covered |= site.open_mask[site.category->arrow(f).dom];
      if (covered == site.open_mask[u]) site.open_cover.add(s);
    }
  }
  return site;
}

SetFunctor points_functor(const SpaceSite& site) {
  const FiniteCategory& cat = *site.category;
  // elements of F(U) = points of U in ascending order
  std::vector<std::vector<int>> elems(cat.objects());
  std::vector<int> sizes(cat.objects());
  for (int u = 0; u < cat.objects(); ++u) {
    for (int p = 0; p < 32; ++p)
      if (site.open_mask[u] & (1u << p)) elems[u].push_back(p);
    sizes[u] = static_cast<int>(elems[u].size());
  }
  std::vector<std::vector<int>> action(cat.arrow_count());
  for (int f = 0; f < cat.arrow_count(); ++f) {
    const auto& a = cat.arrow(f);
    action[f].resize(sizes[a.dom]);
    for (int i = 0; i < sizes[a.dom]; ++i) {
      int point = elems[a.dom][i];
      action[f][i] = static_cast<int>(
          std::lower_bound(elems[a.cod].begin(), elems[a.cod].end(), point) -
          elems[a.cod].begin());
    }
  }
  return SetFunctor(cat, std::move(sizes), std::move(action));
}

SetFunctor stalk_functor(const SpaceSite& site, int point) {
  const FiniteCategory& cat = *site.category;
  std::vector<int> sizes(cat.objects());
  for (int u = 0; u < cat.objects(); ++u)
    sizes[u] = (site.open_mask[u] & (1u << point)) ? 1 : 0;
  std::vector<std::vector<int>> action(cat.arrow_count());
  for (int f = 0; f < cat.arrow_count(); ++f) {
    const auto& a = cat.arrow(f);
    if (sizes[a.dom] == 1) action[f] = {0};  // codomain contains the point too
  }
  return SetFunctor(cat, std::move(sizes), std::move(action));
}

MoveGraphSite move_graph_site(const std::vector<GaussCode>& seeds, int max_crossings,
                              long long max_states_per_seed, const MoveOptions& opts,
                              int max_points, int max_classes) {
  // explore the ball around each seed, merging balls that intersect
  std::vector<std::set<std::string>> balls;
  std::map<std::string, GaussCode> code_of;
  for (const GaussCode& seed : seeds) {
    GaussCode c = seed.canonical();
    std::set<std::string> ball;
    std::vector<GaussCode> frontier = {c};
    ball.insert(c.key());
    code_of.emplace(c.key(), c);
    while (!frontier.empty() && static_cast<long long>(ball.size()) < max_states_per_seed) {
      std::vector<GaussCode> next;
      for (const GaussCode& state : frontier) {
        for (const auto& [mv, result] : enumerate_moves(state, max_crossings, opts)) {
          if (ball.insert(result.key()).second) {
            code_of.emplace(result.key(), result);
            next.push_back(result);
            if (static_cast<long long>(ball.size()) >= max_states_per_seed) break;
          }
        }
        if (static_cast<long long>(ball.size()) >= max_states_per_seed) break;
      }
      frontier = std::move(next);
    }
    balls.push_back(std::move(ball));
  }
  // merge intersecting balls into classes
  std::vector<int> ball_class(balls.size());
  std::iota(ball_class.begin(), ball_class.end(), 0);
  auto find = [&](auto&& self, int x) -> int {
    return ball_class[x] == x ? x : ball_class[x] = self(self, ball_class[x]);
  };
  for (size_t i = 0; i < balls.size(); ++i)
    for (size_t j = i + 1; j < balls.size(); ++j) {
      bool meet = false;
      for (const std::string& k : balls[i])
        if (balls[j].count(k)) {
          meet = true;
          break;
        }
      if (meet) ball_class[find(find, static_cast<int>(i))] = find(find, static_cast<int>(j));
    }
  // points = all explored codes, sorted by key for determinism
  MoveGraphSite out;
  std::vector<std::string> keys;
  for (const auto& [k, c] : code_of) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  if (static_cast<int>(keys.size()) > max_points)
    throw Error(ErrorKind::BadInput,
                "move-graph neighborhood has " + std::to_string(keys.size()) +
                    " codes; raise max_points or tighten bounds");
  std::map<std::string, int> point_of;
  for (const std::string& k : keys) {
    point_of[k] = static_cast<int>(out.code_points.size());
    out.code_points.push_back(code_of.at(k));
  }
  const int n_pts = static_cast<int>(out.code_points.size());
  out.class_of.assign(n_pts, -1);
  for (size_t b = 0; b < balls.size(); ++b) {
    for (const std::string& k : balls[b]) {
      int cls = find(find, static_cast<int>(b));
      int pt = point_of.at(k);
      if (out.class_of[pt] >= 0 && out.class_of[pt] != cls)
        throw std::logic_error("ball merge failed to unify classes");
      out.class_of[pt] = cls;
    }
  }
  // relabel classes by least member point
  std::map<int, int> least;
  for (int p = 0; p < n_pts; ++p)
    if (!least.count(out.class_of[p])) least[out.class_of[p]] = p;
  for (int p = 0; p < n_pts; ++p) out.class_of[p] = least.at(out.class_of[p]);
  std::set<int> classes(out.class_of.begin(), out.class_of.end());
  out.class_count = static_cast<int>(classes.size());
  if (out.class_count > max_classes)
    throw Error(ErrorKind::BadInput, "too many reachability classes for a desk-scale site");
  // partition topology: opens = unions of classes
  FiniteSpace space;
  space.points = n_pts;
  std::vector<int> class_list(classes.begin(), classes.end());
  for (uint32_t sub = 0; sub < (1u << class_list.size()); ++sub) {
    uint32_t mask = 0;
    for (size_t i = 0; i < class_list.size(); ++i)
      if (sub & (1u << i))
        for (int p = 0; p < n_pts; ++p)
          if (out.class_of[p] == class_list[i]) mask |= 1u << p;
    space.opens.push_back(mask);
  }
  std::sort(space.opens.begin(), space.opens.end());
  space.opens.erase(std::unique(space.opens.begin(), space.opens.end()), space.opens.end());
  out.site = space_site(space);
  return out;
}

}  // namespace vk
