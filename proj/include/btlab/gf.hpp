#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace btlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Finite field F_q, q = p^f. Elements are indices 0..q-1 encoding the
// polynomial a_0 + a_1*w + ... + a_{f-1}*w^{f-1} in base p, where w is a
// root of a fixed monic irreducible of degree f. Index 0 is zero, 1 is one.
class GF {
 public:
  GF(int64_t p, int f);

  int64_t p() const { return p_; }
  int f() const { return f_; }
  int q() const { return q_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t inv(uint8_t a) const;
  uint8_t frobenius(uint8_t a) const { return frob_[a]; }

  // trace to the prime field F_p (result is an index < p)
  uint8_t trace(uint8_t a) const;

  // the canonical generator w (index p); for f = 1 this is absent
  uint8_t gen() const { return f_ == 1 ? 1 : static_cast<uint8_t>(p_); }

  // multiplies an element by the integer n mod p
  uint8_t smul(int64_t n, uint8_t a) const;

  std::string to_string(uint8_t a) const;

 private:
  int64_t p_;
  int f_;
  int q_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, frob_;
};

}  // namespace btlab
