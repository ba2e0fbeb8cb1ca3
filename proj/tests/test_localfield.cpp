#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btlab/localfield.hpp"

using namespace btlab;

namespace {

// independent finite-field trace oracle: sum of Frobenius iterates computed
// from scratch by repeated multiplication
uint8_t trace_oracle(const GF& gf, uint8_t a) {
  uint8_t s = 0;
  uint8_t x = a;
  for (int i = 0; i < gf.f(); ++i) {
    s = gf.add(s, x);
    uint8_t y = x;
    for (int64_t j = 1; j < gf.p(); ++j) y = gf.mul(y, x);
    x = y;
  }
  return s;
}

}  // namespace

TEST_CASE("residue fields") {
  GF f2(2, 1), f3(3, 1), f4(2, 2), f9(3, 2);
  CHECK(f4.q() == 4);
  // w^2 = w + 1 or similar: w * w != 0 and the field has no zero divisors
  for (int a = 1; a < f4.q(); ++a)
    for (int b = 1; b < f4.q(); ++b) CHECK(f4.mul(a, b) != 0);
  // Frobenius is additive and fixes F_p
  CHECK(f4.frobenius(1) == 1);
  for (int a = 0; a < f4.q(); ++a)
    for (int b = 0; b < f4.q(); ++b)
      CHECK(f4.frobenius(f4.add(a, b)) ==
            f4.add(f4.frobenius(a), f4.frobenius(b)));
  // trace oracle agreement
  for (int a = 0; a < f4.q(); ++a) CHECK(f4.trace(a) == trace_oracle(f4, a));
  for (int a = 0; a < f9.q(); ++a) CHECK(f9.trace(a) == trace_oracle(f9, a));
  // trace of the F_4 generator is 1 (w + w^2 = 1)
  CHECK(f4.trace(f4.gen()) == 1);
  CHECK(f4.trace(1) == 0);
}

TEST_CASE("Q_2 digit arithmetic") {
  LocalField q2(2, 1, FieldKind::MixedQp, 3);
  OElem one = OElem::one(&q2);
  OElem two = one.add(one);
  CHECK(two == OElem::from_int(&q2, 2));
  // neg(1) = 3 mod 4 at N = 2
  LocalField q2n2(2, 1, FieldKind::MixedQp, 2);
  CHECK(OElem::one(&q2n2).neg() == OElem::from_int(&q2n2, 3));
}

TEST_CASE("F_2((t)) arithmetic") {
  LocalField f2t(2, 1, FieldKind::EqualChar, 4);
  OElem t = OElem::pi_pow(&f2t, 1);
  CHECK(t.mul(t) == OElem::pi_pow(&f2t, 2));
  CHECK(t.add(t).is_zero());
}

TEST_CASE("valuation") {
  LocalField q3(3, 1, FieldKind::MixedQp, 5);
  CHECK(OElem::pi_pow(&q3, 1).valuation() == 1);
  CHECK(!OElem::zero(&q3).valuation().has_value());
  OElem a = OElem::pi_pow(&q3, 2).add(OElem::pi_pow(&q3, 3));
  CHECK(a.valuation() == 2);
}

TEST_CASE("quotient classes") {
  LocalField q2(2, 1, FieldKind::MixedQp, 4);
  OElem five = OElem::from_int(&q2, 5);
  CHECK(five.quotient_class(2) == OElem::one(&q2));
  CHECK(five.quotient_class(0) == OElem::zero(&q2));
  LocalField f4t(2, 2, FieldKind::EqualChar, 3);
  OElem wpt = OElem::pi_pow(&f4t, 0, f4t.residue().gen())
                  .add(OElem::pi_pow(&f4t, 1));
  CHECK(wpt.quotient_class(1) ==
        OElem::pi_pow(&f4t, 0, f4t.residue().gen()));
}

TEST_CASE("ring axioms on random samples") {
  LocalField q3(3, 1, FieldKind::MixedQp, 4);
  LocalField f4(2, 2, FieldKind::EqualChar, 3);
  uint64_t s = 12345;
  auto rnd = [&s]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  };
  for (const LocalField* K : {&q3, &f4}) {
    for (int it = 0; it < 200; ++it) {
      std::vector<uint8_t> da(K->N()), db(K->N()), dc(K->N());
      for (int i = 0; i < K->N(); ++i) {
        da[i] = rnd() % K->q();
        db[i] = rnd() % K->q();
        dc[i] = rnd() % K->q();
      }
      OElem a(K, da), b(K, db), c(K, dc);
      CHECK(a.add(b) == b.add(a));
      CHECK(a.add(b).add(c) == a.add(b.add(c)));
      CHECK(a.mul(b) == b.mul(a));
      CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
      CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
      CHECK(a.add(a.neg()).is_zero());
      auto va = a.valuation(), vb = b.valuation();
      if (va && vb && *va + *vb < K->N()) {
        CHECK(a.mul(b).valuation() == *va + *vb);
      }
    }
  }
}

TEST_CASE("felem precision tracking") {
  LocalField q2(2, 1, FieldKind::MixedQp, 8);
  FElem a = FElem::from_int(&q2, 5, 6);       // known mod 2^6
  FElem b = FElem::pi_pow(&q2, -2, 4);        // 1/4, known mod 2^4
  FElem c = a.mul(b);
  CHECK(c.lo() == -2);
  CHECK(c.valuation() == -2);
  FElem d = a.div(FElem::from_int(&q2, 3, 6));
  CHECK(d.mul(FElem::from_int(&q2, 3, 6)).congruent(a, 5));
  // division by pi shifts the window
  FElem e = a.div(FElem::pi_pow(&q2, 1, 6));
  CHECK(e.valuation() == -1);
  CHECK_THROWS_AS((void)FElem::zero(&q2, 4).valuation(), PrecisionError);
}

TEST_CASE("trace to subfield") {
  // unramified F_4((t)) / F_2((t))
  LocalField F(2, 2, FieldKind::EqualChar, 4);
  LocalField E(2, 1, FieldKind::EqualChar, 4);
  ExtensionData ext(&F, &E, 1);
  OElem w = OElem::pi_pow(&F, 0, F.residue().gen());
  CHECK(ext.trace(w) == OElem::one(&E));   // w + w^2 = 1
  CHECK(ext.trace(OElem::one(&F)).is_zero());  // 2*1 = 0 in char 2
  // ramified F_2((t)) / F_2((s)), s = t^2
  LocalField Fr(2, 1, FieldKind::EqualChar, 6);
  LocalField Er(2, 1, FieldKind::EqualChar, 3);
  ExtensionData extr(&Fr, &Er, 2);
  CHECK(extr.trace(OElem::pi_pow(&Fr, 1)).is_zero());  // trace(t) = 0
  // additivity and E-linearity on all of O_F/pi^3, q <= 4
  LocalField F3(2, 2, FieldKind::EqualChar, 3);
  LocalField E3(2, 1, FieldKind::EqualChar, 3);
  ExtensionData e3(&F3, &E3, 1);
  const int q = F3.q();
  std::vector<OElem> all;
  for (int d0 = 0; d0 < q; ++d0)
    for (int d1 = 0; d1 < q; ++d1)
      for (int d2 = 0; d2 < q; ++d2)
        all.push_back(OElem(&F3, {static_cast<uint8_t>(d0),
                                  static_cast<uint8_t>(d1),
                                  static_cast<uint8_t>(d2)}));
  for (size_t i = 0; i < all.size(); i += 7)
    for (size_t j = 0; j < all.size(); j += 11) {
      CHECK(e3.trace(all[i].add(all[j])) ==
            e3.trace(all[i]).add(e3.trace(all[j])));
    }
  // E-linearity: trace(include(c) * a) = c * trace(a)
  for (int c = 0; c < 2; ++c) {
    OElem ce = OElem::pi_pow(&E3, 1, static_cast<uint8_t>(c ? 1 : 0));
    for (size_t i = 0; i < all.size(); i += 13) {
      CHECK(e3.trace(e3.include(ce).mul(all[i])) == ce.mul(e3.trace(all[i])));
    }
  }
}

TEST_CASE("trace respects the valuation shift") {
  // trace(p_F^{e' + m e(F/E) - t - 1}) lies in p_E^{e' + m - 1}
  LocalField Fr(2, 1, FieldKind::EqualChar, 8);
  LocalField Er(2, 1, FieldKind::EqualChar, 4);
  ExtensionData extr(&Fr, &Er, 2);
  const int eprime = 1;
  for (int m = 0; m <= 2; ++m)
    for (int t = 0; t <= 1; ++t) {
      const int k = eprime + m * 2 - t - 1;
      if (k < 0 || k >= Fr.N()) continue;
      OElem a = OElem::pi_pow(&Fr, k);
      auto v = extr.trace(a).valuation();
      if (v) CHECK(*v >= eprime + m - 1);
    }
}
