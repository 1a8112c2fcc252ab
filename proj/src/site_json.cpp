#include "vk/site_json.hpp"

#include <fstream>

namespace vk {

using nlohmann::json;

namespace {

FiniteCategory parse_category(const json& jc) {
  if (!jc.contains("objects") || !jc.contains("arrows") || !jc.contains("identities") ||
      !jc.contains("composition"))
    throw Error(ErrorKind::BadInput, "category needs objects, arrows, identities, composition");
  int objects = jc.at("objects").get<int>();
  std::vector<FiniteCategory::Arrow> arrows;
  for (const auto& ja : jc.at("arrows")) {
    if (ja.contains("id") && ja.at("id").get<int>() != static_cast<int>(arrows.size()))
      throw Error(ErrorKind::BadInput, "arrow ids must be 0..m-1 in order");
    arrows.push_back({ja.at("dom").get<int>(), ja.at("cod").get<int>()});
  }
  std::vector<int> identities = jc.at("identities").get<std::vector<int>>();
  std::vector<std::array<int, 3>> comps;
  for (const auto& jt : jc.at("composition")) {
    if (!jt.is_array() || jt.size() != 3)
      throw Error(ErrorKind::BadInput, "composition entries are [g, f, g.f] triples");
    comps.push_back({jt[0].get<int>(), jt[1].get<int>(), jt[2].get<int>()});
  }
  FiniteCategory cat(objects, std::move(arrows), std::move(identities), comps);
  if (jc.contains("object_names"))
    cat.object_names = jc.at("object_names").get<std::vector<std::string>>();
  return cat;
}

Coverage parse_coverage(const FiniteCategory& cat, const json& jcov) {
  Coverage j(cat);
  for (auto it = jcov.begin(); it != jcov.end(); ++it) {
    int object = std::stoi(it.key());
    if (object < 0 || object >= cat.objects())
      throw Error(ErrorKind::BadInput, "coverage object out of range");
    for (const auto& arr : it.value()) {
      Sieve s;
      s.target = object;
      s.member.assign(cat.arrow_count(), 0);
      for (const auto& f : arr) {
        int fid = f.get<int>();
        if (fid < 0 || fid >= cat.arrow_count())
          throw Error(ErrorKind::BadInput, "coverage arrow id out of range");
        if (cat.arrow(fid).cod != object)
          throw Error(ErrorKind::WrongCodomain, "coverage arrow does not end at its object");
        s.member[fid] = 1;
      }
      // ingest as the generated sieve so hand-written files may give seeds
      j.add(generate_sieve(cat, object, [&] {
        std::vector<int> seeds;
        for (int f = 0; f < cat.arrow_count(); ++f)
          if (s.member[f]) seeds.push_back(f);
        return seeds;
      }()));
    }
  }
  return j;
}

std::pair<std::vector<int>, std::vector<std::vector<std::string>>> parse_sets(const json& jsets) {
  std::vector<int> sizes;
  std::vector<std::vector<std::string>> names;
  for (const auto& set : jsets) {
    if (set.is_number_integer()) {
      int k = set.get<int>();
      std::vector<std::string> elems;
      for (int i = 0; i < k; ++i) elems.push_back(std::to_string(i));
      sizes.push_back(k);
      names.push_back(std::move(elems));
    } else {
      std::vector<std::string> elems = set.get<std::vector<std::string>>();
      sizes.push_back(static_cast<int>(elems.size()));
      names.push_back(std::move(elems));
    }
  }
  return {sizes, names};
}

std::vector<std::vector<int>> parse_maps(const json& jmaps) {
  std::vector<std::vector<int>> maps;
  for (const auto& jm : jmaps) maps.push_back(jm.get<std::vector<int>>());
  return maps;
}

}  // namespace

SiteDocument load_site(const json& doc) {
  SiteDocument out;
  if (!doc.contains("category")) throw Error(ErrorKind::BadInput, "document has no category");
  out.category = std::make_shared<FiniteCategory>(parse_category(doc.at("category")));
  if (doc.contains("coverage")) out.coverage = parse_coverage(*out.category, doc.at("coverage"));
  if (doc.contains("presheaf")) {
    const json& jp = doc.at("presheaf");
    auto [sizes, names] = parse_sets(jp.at("sets"));
    out.presheaf.emplace(*out.category, std::move(sizes), parse_maps(jp.at("maps")));
    out.presheaf_element_names = std::move(names);
  }
  if (doc.contains("functor")) {
    const json& jf = doc.at("functor");
    auto [sizes, names] = parse_sets(jf.at("sets"));
    out.functor.emplace(*out.category, std::move(sizes), parse_maps(jf.at("maps")));
    out.functor_element_names = std::move(names);
  }
  return out;
}

SiteDocument load_site_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, path + ": " + e.what());
  }
  return load_site(doc);
}

json category_to_json(const FiniteCategory& cat) {
  json jc;
  jc["objects"] = cat.objects();
  json arrows = json::array();
  for (int f = 0; f < cat.arrow_count(); ++f)
    arrows.push_back({{"id", f}, {"dom", cat.arrow(f).dom}, {"cod", cat.arrow(f).cod}});
  jc["arrows"] = arrows;
  json ids = json::array();
  for (int c = 0; c < cat.objects(); ++c) ids.push_back(cat.identity(c));
  jc["identities"] = ids;
  json comps = json::array();
  for (int g = 0; g < cat.arrow_count(); ++g)
    for (int f = 0; f < cat.arrow_count(); ++f)
      if (cat.composable(g, f)) comps.push_back({g, f, cat.compose(g, f)});
  jc["composition"] = comps;
  if (!cat.object_names.empty()) jc["object_names"] = cat.object_names;
  return jc;
}

json coverage_to_json(const FiniteCategory& cat, const Coverage& j) {
  json out = json::object();
  for (int c = 0; c < cat.objects(); ++c) {
    json sieves = json::array();
    for (const Sieve& s : j.covers[c]) {
      json arr = json::array();
      for (int f = 0; f < cat.arrow_count(); ++f)
        if (s.member[f]) arr.push_back(f);
      sieves.push_back(arr);
    }
    out[std::to_string(c)] = sieves;
  }
  return out;
}

json presheaf_to_json(const FinitePresheaf& p, const std::vector<std::vector<std::string>>* names) {
  const FiniteCategory& cat = p.category();
  json jp;
  json sets = json::array();
  for (int c = 0; c < cat.objects(); ++c) {
    if (names && c < static_cast<int>(names->size())) {
      sets.push_back((*names)[c]);
    } else {
      std::vector<std::string> elems;
      for (int i = 0; i < p.size(c); ++i) elems.push_back(std::to_string(i));
      sets.push_back(elems);
    }
  }
  jp["sets"] = sets;
  json maps = json::array();
  for (int f = 0; f < cat.arrow_count(); ++f) maps.push_back(p.restriction_table(f));
  jp["maps"] = maps;
  return jp;
}

json functor_to_json(const SetFunctor& a, const std::vector<std::vector<std::string>>* names) {
  const FiniteCategory& cat = a.category();
  json jf;
  json sets = json::array();
  for (int c = 0; c < cat.objects(); ++c) {
    if (names && c < static_cast<int>(names->size())) {
      sets.push_back((*names)[c]);
    } else {
      std::vector<std::string> elems;
      for (int i = 0; i < a.size(c); ++i) elems.push_back(std::to_string(i));
      sets.push_back(elems);
    }
  }
  jf["sets"] = sets;
  json maps = json::array();
  for (int f = 0; f < cat.arrow_count(); ++f) maps.push_back(a.action_table(f));
  jf["maps"] = maps;
  return jf;
}

}  // namespace vk
