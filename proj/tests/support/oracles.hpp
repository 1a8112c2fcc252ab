#pragma once

// Independent oracle implementations for the test suites.  Everything here
// deliberately re-derives results by a route different from the library:
// permutation cycle counting instead of dart walking, exhaustive enumeration
// instead of elimination or backtracking.

#include <cstdint>
#include <random>
#include <vector>

#include "vk/gauss.hpp"
#include "vk/group.hpp"
#include "vk/laurent.hpp"
#include "vk/site.hpp"

namespace vk::oracle {

/// Boundary curves of the ribbon surface: build the vertex rotation and the
/// band involution as explicit permutations of the 4n corner slots, compose
/// them as arrays, count cycles.
int boundary_count_by_permutations(const GaussCode& code);

/// Loop count of a bracket smoothing state via union-find over the 4n arc
/// ends (no directed traversal).
int smoothing_loops_by_union_find(const GaussCode& code, unsigned long long state);

/// Full bracket from the union-find loop counter.
Laurent bracket_by_enumeration(const GaussCode& code);

/// Number of Fox n-colorings by trying all n^arcs assignments.
long long fox_colorings_by_enumeration(const GaussCode& code, int n);

/// Homomorphism counts by trying all |G|^generators assignments.
HomCounts hom_counts_by_enumeration(const GroupPresentation& pres, const FiniteGroup& g);

/// Uniform random valid Gauss code with exactly n crossings.
GaussCode random_code(std::mt19937_64& rng, int crossings);

/// Random finite poset as a category (reflexive-transitive closure of a
/// random DAG on `objects` elements).
FiniteCategory random_poset_category(std::mt19937_64& rng, int objects);

/// Cyclic monoid <a | a^(k+m) = a^k> as a one-object category.
FiniteCategory cyclic_monoid_category(int k, int m);

}  // namespace vk::oracle
