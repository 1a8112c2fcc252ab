#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vk/gauss.hpp"  // Error

namespace vk {

/// Finite category: objects 0..N-1, arrows with dom/cod, identity arrow per
/// object, and a total composition table on composable pairs.  Identity laws
/// and associativity are checked exhaustively at construction.
class FiniteCategory {
 public:
  struct Arrow {
    int dom = 0;
    int cod = 0;
  };

  FiniteCategory(int objects, std::vector<Arrow> arrows, std::vector<int> identities,
                 const std::vector<std::array<int, 3>>& compositions);

  int objects() const { return objects_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int f) const { return arrows_[f]; }
  int identity(int object) const { return identity_[object]; }
  bool is_identity(int f) const { return identity_[arrows_[f].dom] == f && arrows_[f].dom == arrows_[f].cod; }

  /// g after f; requires cod(f) == dom(g).
  int compose(int g, int f) const;
  bool composable(int g, int f) const { return arrows_[f].cod == arrows_[g].dom; }

  const std::vector<int>& arrows_into(int object) const { return into_[object]; }
  const std::vector<int>& arrows_out_of(int object) const { return outof_[object]; }

  /// Optional display names (object labels) used by emitters.
  std::vector<std::string> object_names;

 private:
  int objects_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> comp_;  // comp_[g][f], -1 when not composable
  std::vector<std::vector<int>> into_, outof_;
};

/// Set of arrows with common codomain, closed under composition on the right.
struct Sieve {
  int target = 0;
  std::vector<char> member;  // indexed by arrow id

  int count() const;
  bool contains(int f) const { return member[f] != 0; }
  bool subset_of(const Sieve& other) const;
  friend bool operator==(const Sieve&, const Sieve&) = default;
  std::string describe(const FiniteCategory& cat) const;
};

/// Least sieve on `target` containing the seed arrows.
Sieve generate_sieve(const FiniteCategory& cat, int target, const std::vector<int>& seeds);

/// Maximal sieve (all arrows into target).
Sieve maximal_sieve(const FiniteCategory& cat, int target);

/// h*(S) = { g | h o g in S } on dom(h); requires cod(h) == S.target.
Sieve pullback_sieve(const FiniteCategory& cat, int h, const Sieve& s);

/// Every sieve on the object, deterministically ordered (size, then bytes).
/// Throws when the count exceeds the cap (guards pathological categories).
std::vector<Sieve> all_sieves(const FiniteCategory& cat, int target, size_t cap = 1 << 20);

/// Covering-sieve assignment; axioms are checked by is_topology, not here.
struct Coverage {
  std::vector<std::vector<Sieve>> covers;  // per object, deduplicated + sorted

  Coverage() = default;
  explicit Coverage(const FiniteCategory& cat) : covers(cat.objects()) {}
  void add(const Sieve& s);
  bool contains(const Sieve& s) const;
};

Coverage trivial_coverage(const FiniteCategory& cat);

enum class TopologyAxiom { Maximality, Stability, Transitivity };

struct TopologyCheck {
  bool valid = false;
  TopologyAxiom axiom = TopologyAxiom::Maximality;  // meaningful when !valid
  std::string witness;
};

TopologyCheck is_topology(const FiniteCategory& cat, const Coverage& j);

/// Contravariant finite presheaf; functoriality checked at construction.
class FinitePresheaf {
 public:
  FinitePresheaf(const FiniteCategory& cat, std::vector<int> sizes,
                 std::vector<std::vector<int>> restriction);

  const FiniteCategory& category() const { return *cat_; }
  int size(int object) const { return sizes_[object]; }
  /// P(f): P(cod f) -> P(dom f).
  int restrict(int f, int element) const { return restriction_[f][element]; }
  const std::vector<int>& restriction_table(int f) const { return restriction_[f]; }

  static FinitePresheaf constant(const FiniteCategory& cat, int g_size);
  static FinitePresheaf terminal(const FiniteCategory& cat);

 private:
  const FiniteCategory* cat_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> restriction_;
};

/// Covariant finite set-valued functor; functoriality checked at construction.
class SetFunctor {
 public:
  SetFunctor(const FiniteCategory& cat, std::vector<int> sizes,
             std::vector<std::vector<int>> action);

  const FiniteCategory& category() const { return *cat_; }
  int size(int object) const { return sizes_[object]; }
  /// A(f): A(dom f) -> A(cod f).
  int act(int f, int element) const { return action_[f][element]; }
  const std::vector<int>& action_table(int f) const { return action_[f]; }

 private:
  const FiniteCategory* cat_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> action_;
};

/// Matching family for a sieve: value per member arrow (-1 elsewhere),
/// compatible under all restrictions.
using Family = std::vector<int>;

std::vector<Family> matching_families(const FinitePresheaf& p, const Sieve& s);

/// Elements of P(target) restricting to the family on every member arrow.
std::vector<int> amalgamations(const FinitePresheaf& p, const Sieve& s, const Family& fam);

enum class SheafFailure { NoAmalgamation, NonUnique };

struct SheafCheck {
  bool is_sheaf = false;
  // witness, meaningful when !is_sheaf:
  int object = -1;
  Sieve sieve;
  Family family;
  SheafFailure reason = SheafFailure::NoAmalgamation;
  std::string describe(const FiniteCategory& cat) const;
};

SheafCheck sheaf_check(const FinitePresheaf& p, const Coverage& j);

struct PlusResult {
  FinitePresheaf presheaf;
  /// unit[C][a] = index in P+(C) of the class of a's restriction family.
  std::vector<std::vector<int>> unit;
};

/// One Grothendieck plus-construction step: P+(C) = matching families over
/// covering sieves of C, identified when they agree on a common covering
/// refinement.  Requires a valid topology.
PlusResult plus_construction(const FinitePresheaf& p, const Coverage& j);

FinitePresheaf sheafify(const FinitePresheaf& p, const Coverage& j);

/// Natural transformations from the terminal presheaf into P: compatible
/// global element choices, ordered lexicographically.
std::vector<std::vector<int>> global_sections(const FinitePresheaf& p);

/// Hom(1, sheafify(Delta_G)) enumerated exactly.
std::vector<std::vector<int>> global_invariants(const FiniteCategory& cat, const Coverage& j,
                                                int g_size);

struct ElementsCategory {
  FiniteCategory category;
  std::vector<std::pair<int, int>> objects;  // (base object, element)
};

ElementsCategory category_of_elements(const SetFunctor& f);

/// Connected components under the zig-zag relation; component label = least
/// member object.
std::vector<int> pi0(const FiniteCategory& cat);
int pi0_count(const FiniteCategory& cat);

enum class FilteringCondition { NonEmpty, Span, Equalizer };

struct FilteringCheck {
  bool filtering = false;
  FilteringCondition failed = FilteringCondition::NonEmpty;
  std::string witness;
};

FilteringCheck filtering_check(const SetFunctor& a);

struct ContinuityCheck {
  bool continuous = false;
  int object = -1;
  Sieve sieve;
  int element = -1;
  std::string witness;
};

ContinuityCheck continuity_check(const SetFunctor& a, const Coverage& j);

/// S_u = arrows into `object` whose image under A contains u; returns the
/// intersection of their images, always containing u.
std::vector<int> intersection_of_images(const SetFunctor& a, int object, int u);

/// Bounded exhaustive search for continuous filtering functors with
/// |A(C)| <= max_size, up to natural isomorphism.  Throws on blowup.
std::vector<SetFunctor> find_points(const FiniteCategory& cat, const Coverage& j, int max_size,
                                    size_t cap = 200000);

}  // namespace vk
