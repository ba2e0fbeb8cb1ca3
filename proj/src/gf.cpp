#include "btlab/gf.hpp"

namespace btlab {

namespace {

// polynomial arithmetic over F_p on index-encoded elements
std::vector<int> decode(int idx, int64_t p, int f) {
  std::vector<int> c(f, 0);
  for (int i = 0; i < f; ++i) {
    c[i] = idx % static_cast<int>(p);
    idx /= static_cast<int>(p);
  }
  return c;
}

int encode(const std::vector<int>& c, int64_t p) {
  int idx = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    idx = idx * static_cast<int>(p) + c[i];
  return idx;
}

// monic irreducible of degree f over F_p, as coefficient list of length f
// (low to high) for the reduction w^f = -(c_0 + c_1 w + ...).
std::vector<int> find_irreducible(int64_t p, int f) {
  if (f == 1) return {0};
  const int pf = static_cast<int>(p);
  std::vector<int> c(f, 0);
  // brute force over the p^f candidates; f <= 3 so no-root suffices
  const int total = [&] {
    int t = 1;
    for (int i = 0; i < f; ++i) t *= pf;
    return t;
  }();
  for (int cand = 0; cand < total; ++cand) {
    c = decode(cand, p, f);
    bool has_root = false;
    for (int x = 0; x < pf && !has_root; ++x) {
      long v = 1;
      for (int i = 0; i < f; ++i) v = (v * x) % pf;  // x^f
      long s = v;
      long xp = 1;
      for (int i = 0; i < f; ++i) {
        s = (s + c[i] * xp) % pf;
        xp = (xp * x) % pf;
      }
      if (s % pf == 0) has_root = true;
    }
    if (!has_root) {
      if (f <= 3) return c;
      throw Error("gf: residue degree > 3 not supported");
    }
  }
  throw Error("gf: no irreducible polynomial found");
}

}  // namespace

GF::GF(int64_t p, int f) : p_(p), f_(f) {
  if (p < 2) throw Error("gf: p must be >= 2");
  if (f < 1 || f > 3) throw Error("gf: residue degree must be in 1..3");
  int q = 1;
  for (int i = 0; i < f; ++i) q *= static_cast<int>(p);
  q_ = q;
  if (q_ > 128) throw Error("gf: q too large");

  const std::vector<int> irr = find_irreducible(p, f);

  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  frob_.assign(q_, 0);

  for (int a = 0; a < q_; ++a) {
    const auto ca = decode(a, p, f);
    {
      std::vector<int> cn(f);
      for (int i = 0; i < f; ++i) cn[i] = (static_cast<int>(p) - ca[i]) % p;
      neg_[a] = static_cast<uint8_t>(encode(cn, p));
    }
    for (int b = 0; b < q_; ++b) {
      const auto cb = decode(b, p, f);
      std::vector<int> cs(f);
      for (int i = 0; i < f; ++i) cs[i] = (ca[i] + cb[i]) % p;
      add_[a * q_ + b] = static_cast<uint8_t>(encode(cs, p));
      // multiply then reduce by w^f = -(irr)
      std::vector<int> prod(2 * f - 1, 0);
      for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j)
          prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      for (int d = 2 * f - 2; d >= f; --d) {
        const int coef = prod[d];
        if (coef == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < f; ++i)
          prod[d - f + i] =
              ((prod[d - f + i] - coef * irr[i]) % p + p * p) % p;
      }
      prod.resize(f);
      mul_[a * q_ + b] = static_cast<uint8_t>(encode(prod, p));
    }
  }
  for (int a = 0; a < q_; ++a) {
    uint8_t x = static_cast<uint8_t>(a);
    for (int64_t i = 1; i < p_; ++i) x = mul(x, static_cast<uint8_t>(a));
    frob_[a] = x;  // a^p
    if (a != 0) {
      for (int b = 0; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<uint8_t>(b);
    }
  }
}

uint8_t GF::inv(uint8_t a) const {
  if (a == 0) throw Error("gf: inverse of zero");
  return inv_[a];
}

uint8_t GF::trace(uint8_t a) const {
  uint8_t s = 0, x = a;
  for (int i = 0; i < f_; ++i) {
    s = add(s, x);
    x = frobenius(x);
  }
  return s;
}

uint8_t GF::smul(int64_t n, uint8_t a) const {
  n %= p_;
  if (n < 0) n += p_;
  uint8_t s = 0;
  for (int64_t i = 0; i < n; ++i) s = add(s, a);
  return s;
}

std::string GF::to_string(uint8_t a) const {
  if (f_ == 1) return std::to_string(static_cast<int>(a));
  std::string s = "[";
  int idx = a;
  for (int i = 0; i < f_; ++i) {
    if (i) s += ",";
    s += std::to_string(idx % static_cast<int>(p_));
    idx /= static_cast<int>(p_);
  }
  return s + "]";
}

}  // namespace btlab
