#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "vk/site.hpp"

namespace vk {

/// Site document: a category plus optional coverage, presheaf and functor.
/// The category is heap-held so the functor views stay valid across moves.
struct SiteDocument {
  std::shared_ptr<FiniteCategory> category;
  std::optional<Coverage> coverage;
  std::optional<FinitePresheaf> presheaf;
  std::optional<SetFunctor> functor;
  std::vector<std::vector<std::string>> presheaf_element_names;
  std::vector<std::vector<std::string>> functor_element_names;
};

SiteDocument load_site(const nlohmann::json& doc);
SiteDocument load_site_file(const std::string& path);

nlohmann::json category_to_json(const FiniteCategory& cat);
nlohmann::json coverage_to_json(const FiniteCategory& cat, const Coverage& j);
nlohmann::json presheaf_to_json(const FinitePresheaf& p,
                                const std::vector<std::vector<std::string>>* names = nullptr);
nlohmann::json functor_to_json(const SetFunctor& a,
                               const std::vector<std::vector<std::string>>* names = nullptr);

}  // namespace vk
