#include "vk/snf.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace vk {

namespace {

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("snf: coefficient overflow");
  return r;
}

long long checked_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("snf: coefficient overflow");
  return r;
}

}  // namespace

std::vector<long long> smith_normal_form(IntMatrix m) {
  const int k = std::min(m.rows, m.cols);
  std::vector<long long> diag(k, 0);
  int t = 0;  // current pivot index
  while (t < k) {
    // pick the nonzero entry of least magnitude in the trailing block
    int pr = -1, pc = -1;
    long long best = 0;
    for (int r = t; r < m.rows; ++r)
      for (int c = t; c < m.cols; ++c) {
        long long v = std::llabs(m.at(r, c));
        if (v != 0 && (pr < 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    // move pivot to (t, t)
    if (pr != t)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(t, c));
    if (pc != t)
      for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, pc), m.at(r, t));
    long long p = m.at(t, t);
    // reduce column and row by the pivot
    bool clean = true;
    for (int r = t + 1; r < m.rows; ++r) {
      long long q = m.at(r, t) / p;
      if (q != 0)
        for (int c = t; c < m.cols; ++c)
          m.at(r, c) = checked_sub(m.at(r, c), checked_mul(q, m.at(t, c)));
      if (m.at(r, t) != 0) clean = false;
    }
    for (int c = t + 1; c < m.cols; ++c) {
      long long q = m.at(t, c) / p;
      if (q != 0)
        for (int r = t; r < m.rows; ++r)
          m.at(r, c) = checked_sub(m.at(r, c), checked_mul(q, m.at(r, t)));
      if (m.at(t, c) != 0) clean = false;
    }
    if (!clean) continue;  // remainders survive; pick a smaller pivot next round
    // pivot must divide every entry of the trailing block
    bool divides = true;
    for (int r = t + 1; r < m.rows && divides; ++r)
      for (int c = t + 1; c < m.cols && divides; ++c)
        if (m.at(r, c) % p != 0) {
          // fold that row into row t and restart this pivot
          for (int cc = t; cc < m.cols; ++cc)
            m.at(t, cc) = checked_sub(m.at(t, cc), checked_mul(-1, m.at(r, cc)));
          divides = false;
        }
    if (!divides) continue;
    diag[t] = std::llabs(p);
    ++t;
  }
  return diag;
}

long long count_kernel_mod(const IntMatrix& m, long long n) {
  std::vector<long long> diag = smith_normal_form(m);
  long long count = 1;
  for (long long d : diag) {
    long long g = d == 0 ? n : std::gcd(d, n);
    count = checked_mul(count, g);
  }
  for (int extra = m.cols - static_cast<int>(diag.size()); extra > 0; --extra)
    count = checked_mul(count, n);
  return count;
}

}  // namespace vk
