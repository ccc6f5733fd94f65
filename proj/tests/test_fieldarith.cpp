#include <random>

#include "doctest.h"
#include "symbalg/fieldarith.hpp"

using namespace symbalg;

namespace {

// Independent oracle: multiplicative order by direct powering.
std::uint64_t element_order(const Fq& a) {
  REQUIRE(!a.is_zero());
  Fq pw = a;
  std::uint64_t n = 1;
  while (!pw.is_one()) {
    pw = pw * a;
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("field construction validates inputs") {
  CHECK_THROWS_AS(make_field(4), InvalidInput);
  CHECK_THROWS_AS(make_field(3, 0), InvalidInput);
  CHECK_THROWS_AS(make_field(3, 2, {2, 0, 1}), InvalidInput);  // t^2+2 = (t+1)(t+2)
  auto f9 = make_field(3, 2);
  CHECK(f9->order() == 9);
  CHECK(f9->modulus == std::vector<std::uint64_t>{1, 0, 1});  // default t^2+1
}

TEST_CASE("cross-field arithmetic is a hard error") {
  auto f7 = make_field(7);
  auto f5 = make_field(5);
  CHECK_THROWS_AS(Fq::from_int(f7, 1) + Fq::from_int(f5, 1), ContextMismatch);
}

TEST_CASE("primitive_pth_root") {
  auto f7 = make_field(7);
  SUBCASE("F_7, p=3") {
    Fq rho = primitive_pth_root(f7, 3);
    // oracle: exhaustive order check in F_7
    CHECK(element_order(rho) == 3);
    CHECK(rho == Fq::from_int(f7, 4));  // 2^((7-1)/3) = 4, deterministic
  }
  SUBCASE("p equal to the characteristic is rejected") {
    CHECK_THROWS_AS(primitive_pth_root(f7, 7), InvalidInput);
  }
  SUBCASE("F_11, p=5") {
    auto f11 = make_field(11);
    Fq rho = primitive_pth_root(f11, 5);
    CHECK(element_order(rho) == 5);
  }
  SUBCASE("no root when p does not divide q-1") {
    CHECK_THROWS_AS(primitive_pth_root(f7, 5), NoRoot);
  }
}

TEST_CASE("sqrt") {
  auto f17 = make_field(17);
  SUBCASE("sqrt(2) in F_17") {
    auto s = sqrt(Fq::from_int(f17, 2));
    REQUIRE(s.has_value());
    CHECK(*s == Fq::from_int(f17, 6));
    CHECK(*s * *s == Fq::from_int(f17, 2));
  }
  SUBCASE("sqrt(-1) in F_17") {
    auto s = sqrt(Fq::from_int(f17, -1));
    REQUIRE(s.has_value());
    CHECK(*s == Fq::from_int(f17, 4));
  }
  SUBCASE("sqrt(0) = 0") {
    auto s = sqrt(Fq::zero(f17));
    REQUIRE(s.has_value());
    CHECK(s->is_zero());
  }
  SUBCASE("fails on exactly (q-1)/2 nonzero inputs for odd q") {
    unsigned failures = 0;
    for (std::uint64_t i = 1; i < 17; ++i)
      if (!sqrt(Fq::from_index(f17, i))) ++failures;
    CHECK(failures == 8);
  }
}

TEST_CASE("pth_root_frobenius") {
  SUBCASE("identity and prime field") {
    auto f3 = make_field(3);
    CHECK(pth_root_frobenius(Fq::one(f3), 3) == Fq::one(f3));
    CHECK(pth_root_frobenius(Fq::from_int(f3, 2), 3) == Fq::from_int(f3, 2));
  }
  SUBCASE("omega in F_9") {
    auto f9 = make_field(3, 2);
    Fq omega = Fq::from_coeffs(f9, {0, 1});  // t, with t^2 = -1
    Fq r = pth_root_frobenius(omega, 3);
    CHECK(r.pow(3) == omega);
    CHECK(r == -omega);  // omega^3 = -omega
  }
  SUBCASE("wrong characteristic rejected") {
    auto f7 = make_field(7);
    CHECK_THROWS_AS(pth_root_frobenius(Fq::one(f7), 3), InvalidInput);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (const auto& f : {make_field(7), make_field(3, 2), make_field(5, 2)}) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
    for (int i = 0; i < 100; ++i) {
      Fq a = Fq::from_index(f, dist(rng));
      Fq b = Fq::from_index(f, dist(rng));
      Fq c = Fq::from_index(f, dist(rng));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) {
        CHECK(a * a.inv() == Fq::one(f));
        CHECK(a.pow(f->order() - 1) == Fq::one(f));
      }
    }
  }
}

TEST_CASE("primitive root powers never hit 1 early") {
  for (auto [ell, k, p] : {std::tuple<std::uint64_t, unsigned, std::uint64_t>{7, 1, 3},
                           {11, 1, 5},
                           {13, 1, 3},
                           {7, 2, 3}}) {
    auto f = make_field(ell, k);
    Fq rho = primitive_pth_root(f, p);
    for (std::uint64_t j = 1; j < p; ++j) CHECK(!rho.pow(j).is_one());
    CHECK(rho.pow(p).is_one());
  }
}
