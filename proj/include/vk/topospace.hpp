#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "vk/moves.hpp"
#include "vk/site.hpp"

namespace vk {

/// Finite topological space on labeled points 0..points-1; opens as bitmasks,
/// sorted ascending, always containing the empty set and the full set.
struct FiniteSpace {
  int points = 0;
  std::vector<uint32_t> opens;

  bool is_open(uint32_t mask) const;
  uint32_t minimal_open_containing(int point) const;
};

/// Every topology on n labeled points (n <= 4: brute force over families of
/// subsets closed under union and intersection).
std::vector<FiniteSpace> enumerate_topologies(int n);

bool is_t0(const FiniteSpace& space);

/// Connected components via the specialization adjacency (finite spaces are
/// connected iff specialization-path-connected); labels by least point.
std::vector<int> space_components(const FiniteSpace& space);
int space_component_count(const FiniteSpace& space);

/// Poset-of-opens site with the open-cover coverage: a sieve covers U iff
/// the union of its domains is U.
struct SpaceSite {
  std::shared_ptr<FiniteCategory> category;  // objects = opens, ascending by mask
  Coverage open_cover;
  std::vector<uint32_t> open_mask;  // per object

  int object_of(uint32_t mask) const;
  int inclusion_arrow(int sub_object, int super_object) const;  // V -> U
};

SpaceSite space_site(const FiniteSpace& space);

/// F(U) = points of U, acting by inclusions.
SetFunctor points_functor(const SpaceSite& site);

/// A_p(U) = singleton iff p in U, else empty.
SetFunctor stalk_functor(const SpaceSite& site, int point);

/// Partition topology on the codes reachable from the seeds within the given
/// bounds: points = explored canonical codes, basic opens = reachability
/// classes, opens = unions of classes.  The desk-scale bridge from the move
/// graph to the sheaf machinery.
struct MoveGraphSite {
  SpaceSite site;
  std::vector<GaussCode> code_points;  // point index -> code
  std::vector<int> class_of;           // point index -> class label (least point)
  int class_count = 0;
};

MoveGraphSite move_graph_site(const std::vector<GaussCode>& seeds, int max_crossings,
                              long long max_states_per_seed, const MoveOptions& opts = {},
                              int max_points = 16, int max_classes = 8);

}  // namespace vk
