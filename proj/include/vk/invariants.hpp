#pragma once

#include <map>
#include <string>

#include "vk/gauss.hpp"
#include "vk/group.hpp"
#include "vk/laurent.hpp"

namespace vk {

/// Sum of signs over crossings whose passes interleave oddly.  Vanishes on
/// classical-realizable diagrams.
int odd_writhe(const GaussCode& code);

/// Number of n-colorings: solutions over Z_n of 2*over = in + out per
/// crossing, one variable per arc.  Always a positive multiple of n.
long long fox_colorings(const GaussCode& code, int n);

/// Kauffman bracket by the 2^n state sum, loops counted on the smoothed
/// chord structure (no planarity assumed).  Throws TooManyCrossings above
/// the limit.
Laurent kauffman_bracket(const GaussCode& code, int max_crossings = 16);

/// Writhe-normalized bracket (-A^3)^-w * <K>; invariant under R1/R2/R3.
Laurent f_polynomial(const GaussCode& code, int max_crossings = 16);

/// Number of loops after smoothing each crossing; state bit i = 1 means the
/// B-smoothing at the i-th crossing in first-appearance order.
int smoothing_loops(const GaussCode& code, unsigned long long state);

/// Every field is constant on move-equivalence classes except `bracket`,
/// which picks up -A^{+-3} under R1.
struct InvariantReport {
  int odd_writhe = 0;
  std::map<int, long long> fox;                    // n in [2,9] by default
  Laurent bracket;
  Laurent f_polynomial;
  std::map<std::string, long long> rep_counts;     // per bundled group
  std::map<std::string, long long> peripheral_counts;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;

  /// Equal in every field except the raw bracket.
  bool equal_invariant_fields(const InvariantReport& other) const;
};

struct ReportOptions {
  int fox_min = 2;
  int fox_max = 9;
  int bracket_limit = 16;
  const std::vector<FiniteGroup>* groups = nullptr;  // default: builtin_groups()
};

InvariantReport compute_report(const GaussCode& code, const ReportOptions& opts = {});

}  // namespace vk
