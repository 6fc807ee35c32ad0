#include <doctest.h>

#include "fvol/algebra.hpp"
#include "support/test_support.hpp"

using namespace fvol;
using namespace fvol::testing;

TEST_CASE("prime modulus validation") {
  CHECK_NOTHROW(PrimeModulus(2));
  CHECK_NOTHROW(PrimeModulus(2147483647));
  for (std::uint64_t bad : {0ull, 1ull, 4ull, 91ull, 2147483659ull}) {
    try {
      PrimeModulus m(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPrime);
    }
  }
}

TEST_CASE("fp_op examples") {
  PrimeModulus m5(5), m2(2), m7(7);
  CHECK(fp_op(FpElement(2, m5), FpElement(0, m5), FpOp::Inv).value() == 3);
  CHECK(fp_op(FpElement(1, m2), FpElement(1, m2), FpOp::Add).value() == 0);
  CHECK(fp_op(FpElement(4, m7), FpElement(5, m7), FpOp::Mul).value() == 6);
  CHECK(FpElement(-3, m7).value() == 4);

  try {
    fp_op(FpElement(0, m5), FpElement(0, m5), FpOp::Inv);
    FAIL("inverse of zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  try {
    fp_op(FpElement(1, m5), FpElement(1, m7), FpOp::Add);
    FAIL("mixed moduli");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RingMismatch);
  }
}

TEST_CASE("inverse property over small primes") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 13u, 101u}) {
    PrimeModulus m(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      FpElement x(static_cast<std::int64_t>(a), m);
      CHECK((x * x.inverse()).value() == 1);
    }
  }
}

TEST_CASE("poly_mul examples") {
  auto r2 = standard_ring(2, 2);
  auto r5 = standard_ring(5, 2);
  CHECK((P(r2, "x+y") * P(r2, "x+y")).to_string() == "x^2 + y^2");
  auto f = P(r5, "x^3 + 2*x*y + 4");
  CHECK(f * Polynomial::constant(r5, 1) == f);

  auto prod = P(r5, "x+y") * P(r5, "x-y");
  CHECK(prod.to_string() == "x^2 + 4*y^2");
  CHECK(term_map(prod) == convolve(P(r5, "x+y"), P(r5, "x-y")));
}

TEST_CASE("poly_power examples") {
  auto r2 = standard_ring(2, 2);
  auto r3 = standard_ring(3, 2);
  CHECK(P(r2, "x+y").pow(4).to_string() == "x^4 + y^4");
  CHECK(P(r2, "x+y").pow(0) == Polynomial::constant(r2, 1));
  CHECK(P(r3, "x+y").pow(3).to_string() == "x^3 + y^3");
}

TEST_CASE("exponent overflow is reported") {
  auto r = standard_ring(2, 1);
  auto big = P(r, "x^18446744073709551615");
  try {
    auto prod = big * P(r, "x");
    FAIL("no overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  try {
    auto f = P(r, "x^4294967296").frobenius(std::uint64_t{1} << 32);
    FAIL("no overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Random rng(11);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ring = standard_ring(p, n);
      for (int trial = 0; trial < 30; ++trial) {
        auto f = random_polynomial(rng, ring, 4, 5);
        auto g = random_polynomial(rng, ring, 4, 5);
        auto h = random_polynomial(rng, ring, 3, 4);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK(term_map(f * g) == convolve(f, g));
        CHECK((f - f).is_zero());
      }
    }
  }
}

TEST_CASE("powers of p agree with the Frobenius substitution") {
  Random rng(12);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto ring = standard_ring(p, 3);
    for (int trial = 0; trial < 8; ++trial) {
      auto f = random_polynomial(rng, ring, 2, 3);
      std::uint64_t q = 1;
      for (int e = 0; e <= 4; ++e) {
        if (q <= 27) {
          Polynomial naive = Polynomial::constant(ring, 1);
          for (std::uint64_t i = 0; i < q; ++i) naive = naive * f;
          CHECK(naive == f.frobenius(q));
        }
        CHECK(f.pow(q) == f.frobenius(q));
        q *= p;
      }
    }
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  Random rng(13);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto ring = standard_ring(p, 2);
    for (int trial = 0; trial < 10; ++trial) {
      auto f = random_polynomial(rng, ring, 2, 3);
      Polynomial naive = Polynomial::constant(ring, 1);
      for (std::uint64_t k = 0; k <= 14; ++k) {
        CHECK(f.pow(k) == naive);
        naive = naive * f;
      }
    }
  }
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
  Random rng(14);
  const std::size_t n = 3;
  for (auto order : {MonomialOrder::lex(n), MonomialOrder::grevlex(n),
                     MonomialOrder::elimination(n, 1)}) {
    auto draw = [&] {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = rng.below(5);
      return m;
    };
    Monomial one(n);
    for (int trial = 0; trial < 500; ++trial) {
      Monomial a = draw(), b = draw(), c = draw();
      int ab = order.compare(a.view(), b.view());
      CHECK(ab == -order.compare(b.view(), a.view()));
      CHECK((ab == 0) == (a == b));
      if (ab < 0) {
        CHECK(order.less(monomial_product(a.view(), c.view()).view(),
                         monomial_product(b.view(), c.view()).view()));
        if (order.less(b.view(), c.view())) CHECK(order.less(a.view(), c.view()));
      }
      if (!(a == one)) CHECK(order.less(one.view(), a.view()));
    }
  }
}

TEST_CASE("grevlex and lex tie-breaking") {
  auto gr = standard_ring(2, 3);
  auto lx = standard_ring(2, 3, OrderKind::Lex);
  // Degree 2 in grevlex: x^2 > xy > y^2 > xz > yz > z^2.
  CHECK(P(gr, "z^2 + y*z + x*z + y^2 + x*y + x^2").to_string() ==
        "x^2 + x*y + y^2 + x*z + y*z + z^2");
  CHECK(P(lx, "z^3 + x + y^2").to_string() == "x + y^2 + z^3");
}

TEST_CASE("parser and canonical printing") {
  auto r = standard_ring(5, 3);
  CHECK(P(r, "y^2 + x").to_string() == "y^2 + x");
  CHECK(P(r, "7*x - 2").to_string() == "2*x + 3");
  CHECK(P(r, "(x+1)^2").to_string() == "x^2 + 2*x + 1");
  CHECK(P(r, "-(x*y)").to_string() == "4*x*y");
  CHECK(P(r, "5*x").to_string() == "0");
  CHECK(P(r, "x^0").to_string() == "1");

  Random rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_polynomial(rng, r, 5, 6);
    CHECK(P(r, f.to_string()) == f);
  }
}

TEST_CASE("parser diagnostics") {
  auto r = standard_ring(3, 2);
  try {
    P(r, "2x");
    FAIL("juxtaposition accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(e.offset() == 1);
  }
  try {
    P(r, "x + q");
    FAIL("unknown variable accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
    CHECK(e.offset() == 4);
  }
  for (const char* bad : {"", "x +", "(x", "x^", "x^-1", "x ** y", "x y"}) {
    CHECK_THROWS_AS(P(r, bad), ParseError);
  }
}

TEST_CASE("embed and project") {
  auto small = standard_ring(3, 2);
  auto big = small->with_eliminated_prefix({"w"});
  auto f = P(small, "x^2 + 2*y");
  auto g = f.embed(big, 1);
  CHECK(g.ring()->variables()[0] == "w");
  CHECK(g.project(small, 1) == f);
  CHECK_THROWS_AS(P(big, "w*x").project(small, 1), Error);
}
