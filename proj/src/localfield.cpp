#include "btlab/localfield.hpp"

#include <algorithm>

namespace btlab {

LocalField::LocalField(int64_t p, int f, FieldKind kind, int N)
    : p_(p), f_(f), kind_(kind), N_(N), gf_(p, f) {
  if (N < 1) throw Error("localfield: N must be >= 1");
  if (kind == FieldKind::MixedQp && f != 1)
    throw Error("localfield: mixed characteristic requires f = 1");
  bool prime = p >= 2;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw Error("localfield: p must be prime");
}

void LocalField::digits_add(std::vector<uint8_t>& d,
                            const std::vector<uint8_t>& a,
                            const std::vector<uint8_t>& b) const {
  const size_t n = a.size();
  d.assign(n, 0);
  if (kind_ == FieldKind::MixedQp) {
    int64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      int64_t s = a[i] + b[i] + carry;
      d[i] = static_cast<uint8_t>(s % p_);
      carry = s / p_;
    }
  } else {
    for (size_t i = 0; i < n; ++i) d[i] = gf_.add(a[i], b[i]);
  }
}

void LocalField::digits_neg(std::vector<uint8_t>& d,
                            const std::vector<uint8_t>& a) const {
  const size_t n = a.size();
  d.assign(n, 0);
  if (kind_ == FieldKind::MixedQp) {
    int64_t borrow = 0;
    for (size_t i = 0; i < n; ++i) {
      int64_t s = -static_cast<int64_t>(a[i]) - borrow;
      borrow = 0;
      while (s < 0) {
        s += p_;
        borrow++;
      }
      d[i] = static_cast<uint8_t>(s);
    }
  } else {
    for (size_t i = 0; i < n; ++i) d[i] = gf_.neg(a[i]);
  }
}

void LocalField::digits_mul(std::vector<uint8_t>& d,
                            const std::vector<uint8_t>& a,
                            const std::vector<uint8_t>& b) const {
  const size_t n = a.size();
  d.assign(n, 0);
  if (kind_ == FieldKind::MixedQp) {
    std::vector<int64_t> acc(n, 0);
    for (size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; i + j < n; ++j) acc[i + j] += int64_t(a[i]) * b[j];
    }
    int64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      int64_t s = acc[i] + carry;
      d[i] = static_cast<uint8_t>(s % p_);
      carry = s / p_;
    }
  } else {
    for (size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; i + j < n; ++j)
        d[i + j] = gf_.add(d[i + j], gf_.mul(a[i], b[j]));
    }
  }
}

// ---------------------------------------------------------------- OElem

OElem::OElem(const LocalField* K, std::vector<uint8_t> digits)
    : K_(K), d_(std::move(digits)) {
  if (static_cast<int>(d_.size()) != K->N())
    throw Error("oelem: digit vector must have length N");
  for (uint8_t x : d_)
    if (x >= K->q()) throw Error("oelem: digit out of range");
}

OElem OElem::zero(const LocalField* K) {
  return OElem(K, std::vector<uint8_t>(K->N(), 0));
}

OElem OElem::one(const LocalField* K) {
  std::vector<uint8_t> d(K->N(), 0);
  d[0] = 1;
  return OElem(K, std::move(d));
}

OElem OElem::from_int(const LocalField* K, int64_t n) {
  std::vector<uint8_t> d(K->N(), 0);
  if (K->kind() == FieldKind::MixedQp) {
    int64_t v = n;
    int64_t pN = 1;
    for (int i = 0; i < K->N(); ++i) pN *= K->p();
    v %= pN;
    if (v < 0) v += pN;
    for (int i = 0; i < K->N(); ++i) {
      d[i] = static_cast<uint8_t>(v % K->p());
      v /= K->p();
    }
  } else {
    // n maps into the residue field via n mod p in the constant digit
    int64_t v = n % K->p();
    if (v < 0) v += K->p();
    d[0] = static_cast<uint8_t>(v);
  }
  return OElem(K, std::move(d));
}

OElem OElem::pi_pow(const LocalField* K, int k, uint8_t c) {
  std::vector<uint8_t> d(K->N(), 0);
  if (k < 0 || k >= K->N()) throw Error("oelem: pi power out of range");
  d[k] = c;
  return OElem(K, std::move(d));
}

OElem OElem::add(const OElem& b) const {
  if (!(*K_ == *b.K_)) throw Error("oelem: field spec mismatch");
  std::vector<uint8_t> d;
  K_->digits_add(d, d_, b.d_);
  return OElem(K_, std::move(d));
}

OElem OElem::sub(const OElem& b) const { return add(b.neg()); }

OElem OElem::neg() const {
  std::vector<uint8_t> d;
  K_->digits_neg(d, d_);
  return OElem(K_, std::move(d));
}

OElem OElem::mul(const OElem& b) const {
  if (!(*K_ == *b.K_)) throw Error("oelem: field spec mismatch");
  std::vector<uint8_t> d;
  K_->digits_mul(d, d_, b.d_);
  return OElem(K_, std::move(d));
}

std::optional<int> OElem::valuation() const {
  for (size_t i = 0; i < d_.size(); ++i)
    if (d_[i]) return static_cast<int>(i);
  return std::nullopt;
}

OElem OElem::quotient_class(int m) const {
  if (m < 0 || m > K_->N()) throw Error("oelem: quotient exponent out of range");
  std::vector<uint8_t> d(d_);
  for (int i = m; i < K_->N(); ++i) d[i] = 0;
  return OElem(K_, std::move(d));
}

bool OElem::operator==(const OElem& b) const {
  return K_ == b.K_ ? d_ == b.d_ : (*K_ == *b.K_ && d_ == b.d_);
}

std::string OElem::to_string() const {
  std::string s;
  for (size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ".";
    s += K_->residue().to_string(d_[i]);
  }
  return s;
}

// ---------------------------------------------------------------- FElem

FElem::FElem(const LocalField* K, int lo, std::vector<uint8_t> digits)
    : K_(K), lo_(lo), d_(std::move(digits)) {
  for (uint8_t x : d_)
    if (x >= K->q()) throw Error("felem: digit out of range");
}

FElem FElem::zero(const LocalField* K, int hi) {
  return FElem(K, hi, {});
}

FElem FElem::from_oelem(const OElem& a) {
  return FElem(a.field(), 0, a.digits());
}

FElem FElem::from_int(const LocalField* K, int64_t n, int hi) {
  if (hi < 1) throw Error("felem: from_int needs hi >= 1");
  if (K->kind() == FieldKind::MixedQp) {
    std::vector<uint8_t> d(hi, 0);
    int64_t pN2 = 1;
    for (int i = 0; i < hi; ++i) pN2 *= K->p();
    int64_t v = n % pN2;
    if (v < 0) v += pN2;
    for (int i = 0; i < hi; ++i) {
      d[i] = static_cast<uint8_t>(v % K->p());
      v /= K->p();
    }
    return FElem(K, 0, std::move(d));
  }
  std::vector<uint8_t> d(hi, 0);
  int64_t v = n % K->p();
  if (v < 0) v += K->p();
  d[0] = static_cast<uint8_t>(v);
  return FElem(K, 0, std::move(d));
}

FElem FElem::pi_pow(const LocalField* K, int k, int hi, uint8_t c) {
  if (k >= hi) throw Error("felem: pi power beyond precision");
  std::vector<uint8_t> d(hi - k, 0);
  d[0] = c;
  return FElem(K, k, std::move(d));
}

uint8_t FElem::digit_at(int exp) const {
  if (exp >= hi()) throw PrecisionError("felem: digit beyond precision");
  if (exp < lo_) return 0;
  return d_[exp - lo_];
}

FElem FElem::add(const FElem& b) const {
  if (!(*K_ == *b.K_)) throw Error("felem: field spec mismatch");
  const int nlo = std::min(lo_, b.lo_);
  const int nhi = std::min(hi(), b.hi());
  if (nhi <= nlo) return FElem(K_, nhi, {});
  std::vector<uint8_t> av(nhi - nlo, 0), bv(nhi - nlo, 0), dv;
  for (int e = nlo; e < nhi; ++e) {
    av[e - nlo] = (e >= lo_ && e < hi()) ? d_[e - lo_] : 0;
    bv[e - nlo] = (e >= b.lo_ && e < b.hi()) ? b.d_[e - b.lo_] : 0;
  }
  K_->digits_add(dv, av, bv);
  return FElem(K_, nlo, std::move(dv));
}

FElem FElem::neg() const {
  std::vector<uint8_t> dv;
  K_->digits_neg(dv, d_);
  return FElem(K_, lo_, std::move(dv));
}

FElem FElem::sub(const FElem& b) const { return add(b.neg()); }

FElem FElem::mul(const FElem& b) const {
  if (!(*K_ == *b.K_)) throw Error("felem: field spec mismatch");
  const int nlo = lo_ + b.lo_;
  const int nhi = std::min(lo_ + b.hi(), b.lo_ + hi());
  if (nhi <= nlo) return FElem(K_, nhi, {});
  const int len = nhi - nlo;
  std::vector<uint8_t> av(d_.begin(),
                          d_.begin() + std::min<size_t>(d_.size(), len)),
      bv(b.d_.begin(), b.d_.begin() + std::min<size_t>(b.d_.size(), len)), dv;
  av.resize(len, 0);
  bv.resize(len, 0);
  K_->digits_mul(dv, av, bv);
  return FElem(K_, nlo, std::move(dv));
}

FElem FElem::shift(int k) const { return FElem(K_, lo_ + k, d_); }

std::optional<int> FElem::valuation_opt() const {
  for (size_t i = 0; i < d_.size(); ++i)
    if (d_[i]) return lo_ + static_cast<int>(i);
  return std::nullopt;
}

int FElem::valuation() const {
  auto v = valuation_opt();
  if (!v)
    throw PrecisionError("felem: valuation undetermined (zero to precision)");
  return *v;
}

FElem FElem::div(const FElem& b) const {
  const int v = b.valuation();
  // unit part of b on window [0, ub)
  const int ub = b.hi() - v;
  std::vector<uint8_t> u(ub, 0);
  for (int e = v; e < b.hi(); ++e) u[e - v] = b.digit_at(e);
  // Newton iteration for the inverse of the unit
  std::vector<uint8_t> x(ub, 0);
  x[0] = K_->residue().inv(u[0]);
  for (int it = 1; it < ub; it *= 2) {
    std::vector<uint8_t> ux, two(ub, 0), t;
    K_->digits_mul(ux, u, x);
    // two = 2 - ux
    std::vector<uint8_t> onevec(ub, 0);
    onevec[0] = 1;
    K_->digits_add(two, onevec, onevec);
    std::vector<uint8_t> nux;
    K_->digits_neg(nux, ux);
    K_->digits_add(t, two, nux);
    K_->digits_mul(x, std::vector<uint8_t>(x), t);
  }
  FElem binv(K_, -v, std::move(x));
  return mul(binv);
}

FElem FElem::truncate(int m) const {
  if (m > hi()) throw PrecisionError("felem: truncation beyond precision");
  if (m <= lo_) return FElem(K_, m, {});
  std::vector<uint8_t> dv(d_.begin(), d_.begin() + (m - lo_));
  return FElem(K_, lo_, std::move(dv));
}

bool FElem::congruent(const FElem& b, int m) const {
  if (m > hi() || m > b.hi())
    throw PrecisionError("felem: congruence beyond precision");
  for (int e = std::min(lo_, b.lo_); e < m; ++e)
    if (digit_at(e) != b.digit_at(e)) return false;
  return true;
}

std::string FElem::to_string() const {
  std::string s = "pi^" + std::to_string(lo_) + ":";
  for (size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ".";
    s += K_->residue().to_string(d_[i]);
  }
  return s;
}

// ---------------------------------------------------------- ExtensionData

ExtensionData::ExtensionData(const LocalField* F, const LocalField* E, int ram)
    : F_(F), E_(E), ram_(ram) {
  if (F->p() != E->p()) throw Error("extension: residue characteristics differ");
  if (F->kind() != E->kind()) throw Error("extension: mixed/equal kinds differ");
  if (ram == 1) {
    if (E->f() != 1 && E->f() != F->f())
      throw Error("extension: unramified case needs prime subfield or equality");
  } else {
    if (E->f() != F->f())
      throw Error("extension: ramified case needs equal residue fields");
    if (F->kind() != FieldKind::EqualChar)
      throw Error("extension: ramified mixed characteristic unsupported");
  }
  // residue inclusion and residue trace tables
  res_incl_.assign(E->residue().q(), 0);
  for (int a = 0; a < E->residue().q(); ++a)
    res_incl_[a] = static_cast<uint8_t>(a);  // prime field embeds by index
  res_trace_.assign(F->residue().q(), 0);
  for (int a = 0; a < F->residue().q(); ++a) {
    if (E->f() == F->f()) {
      res_trace_[a] = static_cast<uint8_t>(a);
    } else {
      res_trace_[a] = F->residue().trace(static_cast<uint8_t>(a));
    }
  }
}

uint8_t ExtensionData::include_residue(uint8_t a) const { return res_incl_[a]; }

OElem ExtensionData::include(const OElem& a) const {
  if (!(*a.field() == *E_)) throw Error("extension: include expects O_E");
  std::vector<uint8_t> d(F_->N(), 0);
  for (int i = 0; i < E_->N(); ++i) {
    if (i * ram_ >= F_->N()) break;
    d[i * ram_] = include_residue(a.digit(i));
  }
  return OElem(F_, std::move(d));
}

OElem ExtensionData::trace(const OElem& a) const {
  if (!(*a.field() == *F_)) throw Error("extension: trace expects O_F");
  std::vector<uint8_t> d(E_->N(), 0);
  const int64_t e_mod_p = ram_ % F_->p();
  for (int i = 0; i < E_->N(); ++i) {
    const int j = i * ram_;
    if (j >= F_->N()) break;
    uint8_t t = res_trace_[a.digit(j)];
    if (ram_ > 1) t = E_->residue().smul(e_mod_p, t);
    d[i] = t;
  }
  return OElem(E_, std::move(d));
}

}  // namespace btlab
