#include "vk/laurent.hpp"

namespace vk {

Laurent Laurent::monomial(int exponent, long long coeff) {
  Laurent p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

long long Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void Laurent::strip() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) terms_[e] += c;
  strip();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) terms_[e] -= c;
  strip();
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.terms_[ea + eb] += ca * cb;
  out.strip();
  return out;
}

Laurent& Laurent::mul_monomial(int exponent, long long coeff) {
  if (coeff == 0) {
    terms_.clear();
    return *this;
  }
  std::map<int, long long> shifted;
  for (const auto& [e, c] : terms_) shifted[e + exponent] = c * coeff;
  terms_ = std::move(shifted);
  return *this;
}

Laurent Laurent::neg_a_cubed_pow(int k) {
  long long sign = (k % 2 == 0) ? 1 : -1;
  return monomial(3 * k, sign);
}

std::vector<std::pair<int, long long>> Laurent::pairs() const {
  return {terms_.begin(), terms_.end()};
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += std::to_string(mag);
    if (e != 0) {
      out += "A";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace vk
