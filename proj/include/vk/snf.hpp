#pragma once

#include <cstdint>
#include <vector>

namespace vk {

/// Dense integer matrix, row major.  Sized for crossing-count-scale inputs.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Diagonal of the Smith normal form, d_1 | d_2 | ... | d_k with
/// k = min(rows, cols); entries are non-negative, trailing zeros included.
/// Exact integer elimination with smallest-pivot reduction; overflow checked.
std::vector<long long> smith_normal_form(IntMatrix m);

/// Number of solutions x in (Z_n)^cols of  M x = 0 (mod n), via the SNF:
/// prod over diagonal entries d of gcd(d, n), times n^(cols - rank bound).
long long count_kernel_mod(const IntMatrix& m, long long n);

}  // namespace vk
