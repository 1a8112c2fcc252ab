#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vk {

/// Laurent polynomial in one variable A with exact int64 coefficients.
/// Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(0, 1); }
  static Laurent monomial(int exponent, long long coeff);

  bool is_zero() const { return terms_.empty(); }
  long long coeff(int exponent) const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Multiply by c*A^e in place.
  Laurent& mul_monomial(int exponent, long long coeff);

  /// (-A^3)^k for k of either sign; used by the writhe normalization.
  static Laurent neg_a_cubed_pow(int k);

  /// Ascending-exponent (exponent, coefficient) pairs.
  std::vector<std::pair<int, long long>> pairs() const;

  /// Human form, ascending exponents: "1 - A^4 + 2A^-2" style.
  std::string str() const;

 private:
  std::map<int, long long> terms_;
  void strip();
};

}  // namespace vk
