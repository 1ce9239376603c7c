#include "doctest.h"
#include "eptl/scalar.hpp"

#include <random>

using namespace eptl;

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(0).is_zero());
  // [1] = 1
  CHECK(quantum_integer(1) == Scalar(1));
  // [2] = q + q^-1
  CHECK(quantum_integer(2) == Scalar::q_pow(1) + Scalar::q_pow(-1));
  // [3] = q^2 + 1 + q^-2
  CHECK(quantum_integer(3) == Scalar::q_pow(2) + Scalar(1) + Scalar::q_pow(-2));
  // [-k] = -[k]
  CHECK(quantum_integer(-4) == -quantum_integer(4));
  // beta = -[2]
  CHECK(beta_scalar() == -quantum_integer(2));
}

TEST_CASE("q-number identity [k+1][k-1] = [k]^2 - 1") {
  for (int k = 1; k <= 12; ++k) {
    Scalar lhs = quantum_integer(k + 1) * quantum_integer(k - 1);
    Scalar rhs = quantum_integer(k) * quantum_integer(k) - Scalar(1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("field arithmetic and canonical form") {
  Scalar s = Scalar::variable(VAR_S);
  Scalar x = Scalar::variable(VAR_X);
  Scalar a = (s + x) * (s - x);
  Scalar b = s * s - x * x;
  CHECK(a == b);
  Scalar c = a / (s + x);
  CHECK(c == s - x);
  CHECK((c * c.inverse()).is_one());
  // Cancellation to canonical form: (s^2-1)/(s-1) = s+1
  Scalar d = (s * s - Scalar(1)) / (s - Scalar(1));
  CHECK(d == s + Scalar(1));
}

TEST_CASE("evaluate is exact and detects poles") {
  // beta at s=2 (q=4): -4 - 1/4 = -17/4
  std::array<Rat, kNumVars> pt{Rat(2), Rat(1), Rat(1), Rat(1)};
  CHECK(beta_scalar().eval(pt) == Rat(-17, 4));
  // [2]_q at q=1 (s=1) is 2 (the formula's degeneration is built in since
  // canonical form cancels the denominator).
  std::array<Rat, kNumVars> pt1{Rat(1), Rat(1), Rat(1), Rat(1)};
  CHECK(quantum_integer(2).eval(pt1) == Rat(2));
  // alpha_ab at z=3: 10/3
  std::array<Rat, kNumVars> pt3{Rat(2), Rat(1), Rat(1), Rat(3)};
  CHECK(fugacity(VAR_Z).eval(pt3) == Rat(10, 3));
  // Pole detection
  Scalar inv_z = Scalar::variable(VAR_Z, -1);
  std::array<Rat, kNumVars> pt0{Rat(2), Rat(1), Rat(1), Rat(0)};
  CHECK_THROWS(inv_z.eval(pt0));
}

TEST_CASE("evaluate is a ring homomorphism on random pairs") {
  std::mt19937_64 rng(20260809u);
  std::uniform_int_distribution<int> d(-6, 6);
  auto rand_scalar = [&]() {
    Scalar acc(0);
    for (int t = 0; t < 3; ++t) {
      Scalar m(Rat(d(rng)));
      m = m * Scalar::variable(VAR_S, std::abs(d(rng)) % 3);
      m = m * Scalar::variable(VAR_X, -(std::abs(d(rng)) % 2));
      m = m * Scalar::variable(VAR_Z, d(rng) % 2);
      acc += m;
    }
    return acc;
  };
  std::array<Rat, kNumVars> pt{Rat(3, 2), Rat(5, 3), Rat(-7, 4), Rat(9, 5)};
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    Scalar a = rand_scalar(), b = rand_scalar();
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("parse / print round trip") {
  for (const char* text :
       {"0", "1", "-3/4*s^2", "(s^4 - 2*s^2*x + 1)/(s^2*x)", "x + 1/x",
        "(x*y*z + 1)/(z^2 - 1)", "s^2 + 1 + s^-2"}) {
    Scalar a = Scalar::parse(text);
    Scalar b = Scalar::parse(a.str());
    CHECK(a == b);
  }
  CHECK(Scalar::parse("q") == Scalar::q_pow(1));
  CHECK(Scalar::parse("q^-1 + q") == Scalar::q_pow(1) + Scalar::q_pow(-1));
}

TEST_CASE("classify_z symbolic") {
  // z = q^3, N=8, k=1 -> non-generic with eps=+1, l=3
  auto c = classify_z(Scalar::q_pow(3), 8, 1.0);
  CHECK_FALSE(c.generic);
  CHECK(c.eps == 1);
  CHECK(c.ell == 3);
  CHECK(c.sign == 1);
  // symbolic indeterminate z is generic
  CHECK(classify_z(Scalar::variable(VAR_Z), 8, 1.0).generic);
  // z = -q^2, N=4, k=0 -> eps=-1, l=2
  auto c2 = classify_z(-Scalar::q_pow(2), 4, 0.0);
  CHECK_FALSE(c2.generic);
  CHECK(c2.eps == -1);
  CHECK(c2.ell == 2);
}

TEST_CASE("classify_z round-trips on constructed points") {
  for (int j = 1; j <= 6; ++j) {
    for (int eps : {+1, -1}) {
      for (int sign : {+1, -1}) {
        Scalar zv = Scalar(eps) * Scalar::q_pow(sign * j);
        auto c = classify_z(zv, 2 * j, 0.0);
        CHECK_FALSE(c.generic);
        CHECK(c.eps == eps);
        CHECK(c.ell == j);
        CHECK(c.sign == sign);
      }
    }
  }
}

TEST_CASE("random generic specializations avoid the bad loci") {
  for (uint64_t seed : {1u, 2u, 3u}) {
    auto sp = random_generic_specialization(seed, 8);
    auto c = classify_z(sp, 8, 0.0);
    CHECK(c.generic);
  }
}
