#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "btlab/gf.hpp"

namespace btlab {

struct PrecisionError : Error {
  explicit PrecisionError(const std::string& w) : Error(w) {}
};

enum class FieldKind { MixedQp, EqualChar };

// The ring of integers O_F of a local field, with elements carried exactly
// modulo pi^N.  Mixed characteristic is restricted to F = Q_p (f = 1);
// F_q((t)) covers general residue fields.
class LocalField {
 public:
  LocalField(int64_t p, int f, FieldKind kind, int N);

  int64_t p() const { return p_; }
  int f() const { return f_; }
  int q() const { return gf_.q(); }
  FieldKind kind() const { return kind_; }
  int N() const { return N_; }
  const GF& residue() const { return gf_; }

  bool operator==(const LocalField& o) const {
    return p_ == o.p_ && f_ == o.f_ && kind_ == o.kind_ && N_ == o.N_;
  }

  // digit arithmetic on windows [0, len): d = a + b with carries for Q_p
  void digits_add(std::vector<uint8_t>& d, const std::vector<uint8_t>& a,
                  const std::vector<uint8_t>& b) const;
  void digits_neg(std::vector<uint8_t>& d, const std::vector<uint8_t>& a) const;
  void digits_mul(std::vector<uint8_t>& d, const std::vector<uint8_t>& a,
                  const std::vector<uint8_t>& b) const;

 private:
  int64_t p_;
  int f_;
  FieldKind kind_;
  int N_;
  GF gf_;
};

// An element of O_F known exactly modulo pi^N (digit vector, low first).
class OElem {
 public:
  OElem() : K_(nullptr) {}
  OElem(const LocalField* K, std::vector<uint8_t> digits);
  static OElem zero(const LocalField* K);
  static OElem one(const LocalField* K);
  static OElem from_int(const LocalField* K, int64_t n);
  // c * pi^k, c a residue index
  static OElem pi_pow(const LocalField* K, int k, uint8_t c = 1);

  const LocalField* field() const { return K_; }
  const std::vector<uint8_t>& digits() const { return d_; }
  uint8_t digit(int i) const { return d_[i]; }

  OElem add(const OElem& b) const;
  OElem sub(const OElem& b) const;
  OElem neg() const;
  OElem mul(const OElem& b) const;

  // index of the lowest nonzero digit; nullopt means "all digits zero",
  // i.e. valuation >= N
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  // truncation to O_F / pi^m (m <= N)
  OElem quotient_class(int m) const;

  bool operator==(const OElem& b) const;
  std::string to_string() const;

 private:
  const LocalField* K_;
  std::vector<uint8_t> d_;
};

// An element of F known exactly modulo pi^hi, with digits on [lo, hi).
// Tracks precision through arithmetic; operations that would need unknown
// digits throw PrecisionError.
class FElem {
 public:
  FElem() : K_(nullptr), lo_(0) {}
  FElem(const LocalField* K, int lo, std::vector<uint8_t> digits);
  static FElem zero(const LocalField* K, int hi);
  static FElem from_oelem(const OElem& a);
  static FElem from_int(const LocalField* K, int64_t n, int hi);
  static FElem pi_pow(const LocalField* K, int k, int hi, uint8_t c = 1);

  const LocalField* field() const { return K_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(d_.size()); }
  uint8_t digit_at(int exp) const;  // 0 outside the window below hi

  FElem add(const FElem& b) const;
  FElem sub(const FElem& b) const;
  FElem neg() const;
  FElem mul(const FElem& b) const;
  FElem shift(int k) const;  // multiply by pi^k

  // exact valuation; throws if the element vanishes within its window
  // (valuation only known to be >= hi)
  int valuation() const;
  std::optional<int> valuation_opt() const;
  bool known_zero() const { return !valuation_opt().has_value(); }

  // exact division (requires valuation(b) <= valuation(a) sense not needed;
  // result window shrinks per the precision rules)
  FElem div(const FElem& b) const;

  // reduce modulo pi^m: digits >= m dropped (m <= hi required)
  FElem truncate(int m) const;

  bool congruent(const FElem& b, int m) const;  // equal mod pi^m
  std::string to_string() const;

 private:
  const LocalField* K_;
  int lo_;
  std::vector<uint8_t> d_;
};

// Data for an extension F/E of local fields: ramification e(F/E), the
// residue inclusion, and the trace map on digit level.
// Supported shapes: unramified (residue extension, same uniformizer) and
// totally ramified t -> t^{e} in equal characteristic.
class ExtensionData {
 public:
  ExtensionData(const LocalField* F, const LocalField* E, int ram);

  const LocalField* F() const { return F_; }
  const LocalField* E() const { return E_; }
  int ram() const { return ram_; }

  // residue-field inclusion E -> F (index map)
  uint8_t include_residue(uint8_t a) const;
  // O_E -> O_F on digit level
  OElem include(const OElem& a) const;
  // trace_{F/E} on O_F, exact on the available precision
  OElem trace(const OElem& a) const;

 private:
  const LocalField* F_;
  const LocalField* E_;
  int ram_;
  std::vector<uint8_t> res_incl_;   // E residue index -> F residue index
  std::vector<uint8_t> res_trace_;  // F residue index -> E residue index
};

}  // namespace btlab
