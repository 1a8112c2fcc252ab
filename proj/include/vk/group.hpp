#pragma once

#include <string>
#include <vector>

#include "vk/gauss.hpp"

namespace vk {

/// Finite group as a complete multiplication table over 0..order-1.
/// Identity and inverses are discovered and checked at construction.
class FiniteGroup {
 public:
  FiniteGroup(std::string id, std::vector<std::vector<int>> table);

  const std::string& id() const { return id_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int x, int y) const { return table_[x][y]; }
  int inv(int x) const { return inverse_[x]; }
  int identity() const { return identity_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool abelian() const;

  int pow(int x, int e) const;

 private:
  std::string id_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = -1;
};

/// The bundled list: every group of order <= 12 plus S4, 25 in all.
const std::vector<FiniteGroup>& builtin_groups();

/// x^eps with eps in {-1,+1} entries; a word in generators.
struct WordLetter {
  int gen = 0;
  int exp = 0;
};
using Word = std::vector<WordLetter>;

/// Wirtinger presentation of the upper group with its peripheral pair.
/// Generators are arcs (maximal runs ending at an under-pass), one per
/// crossing; the empty code gets the free group on one generator.
/// Relation per crossing with sign e, over-arc b, incoming under-arc a,
/// outgoing under-arc c:  c = b^e a b^-e.
struct GroupPresentation {
  int generators = 0;
  struct Relation {
    int under_in = 0;   // a
    int over = 0;       // b
    int under_out = 0;  // c
    int sign = +1;      // e
  };
  std::vector<Relation> relations;
  int meridian = 0;  // generator of the arc through the traversal start
  Word longitude;    // product of over-arcs along the traversal, times m^-writhe

  /// Exponent matrix of the abelianized relations (rows = relations).
  std::vector<std::vector<long long>> abelianization_matrix() const;
};

GroupPresentation wirtinger(const GaussCode& code);

struct HomCounts {
  long long total = 0;       // all homomorphisms into the group
  long long peripheral = 0;  // those sending the longitude to the identity
};

/// Exact homomorphism count by backtracking with relation propagation.
/// Also verifies that the meridian and longitude images commute for every
/// counted homomorphism (they must; a failure indicates a bad presentation).
HomCounts count_homomorphisms(const GroupPresentation& pres, const FiniteGroup& g);

long long rep_count(const GroupPresentation& pres, const FiniteGroup& g);
long long peripheral_count(const GroupPresentation& pres, const FiniteGroup& g);

int evaluate_word(const Word& w, const FiniteGroup& g, const std::vector<int>& assignment);

}  // namespace vk
