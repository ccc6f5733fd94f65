#include "doctest.h"
#include "support.hpp"
#include "symbalg/charcoeffs.hpp"
#include "symbalg/matoracle.hpp"

using namespace symbalg;
using testsupport::random_element;

namespace {

CtxPtr as3() { return make_ctx(3, 1, Variant::ArtinSchreier, make_field(3)); }
CtxPtr rou3() { return make_ctx(3, 1, Variant::RootOfUnity, make_field(7)); }

std::vector<Fq> random_point(const CtxPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> any(0, ctx->base->order() - 1);
  std::uniform_int_distribution<std::uint64_t> nz(1, ctx->base->order() - 1);
  std::vector<Fq> pt;
  for (unsigned i = 0; i < ctx->m; ++i) {
    bool alpha_nz = ctx->variant == Variant::RootOfUnity;
    pt.push_back(Fq::from_index(ctx->base, alpha_nz ? nz(rng) : any(rng)));
    pt.push_back(Fq::from_index(ctx->base, nz(rng)));
  }
  return pt;
}

// Independent oracle for 3x3 determinants.
Fq det3(const FqMatrix& M) {
  auto m = [&](size_t i, size_t j) { return M.at(i, j); };
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("split_symbol relation checks") {
  std::mt19937_64 rng(61);
  for (const auto& ctx : {as3(), rou3(),
                          make_ctx(3, 2, Variant::RootOfUnity, make_field(7))}) {
    for (int t = 0; t < 5; ++t) {
      auto pt = random_point(ctx, rng);
      MatRep rep = split_symbol(ctx, pt);  // constructor verifies the relations
      CHECK(rep.x_images.size() == ctx->m);
      CHECK(rep.x_images.front().n == ctx->degree());
    }
  }
}

TEST_CASE("split_symbol edge cases") {
  auto ctx = as3();
  auto f3 = ctx->base;
  SUBCASE("alpha = 0 splits over the prime field with x -> diag(0,1,2)") {
    MatRep rep = split_symbol(ctx, {Fq::zero(f3), Fq::one(f3)});
    CHECK(rep.field->order() == 3);
    for (int i = 0; i < 3; ++i)
      CHECK(rep.x_images[0].at(i, i) == Fq::from_int(rep.field, i));
  }
  SUBCASE("alpha = 1 needs F_27") {
    MatRep rep = split_symbol(ctx, {Fq::one(f3), Fq::one(f3)});
    CHECK(rep.field->order() == 27);
  }
  SUBCASE("zero beta rejected") {
    CHECK_THROWS_AS(split_symbol(ctx, {Fq::one(f3), Fq::zero(f3)}), ZeroBeta);
  }
}

TEST_CASE("represent_element is a homomorphism") {
  std::mt19937_64 rng(62);
  auto ctx = rou3();
  auto pt = random_point(ctx, rng);
  MatRep rep = split_symbol(ctx, pt);
  CHECK(represent_element(rep, Element::one(ctx)) ==
        FqMatrix::identity(3, rep.field));
  for (int t = 0; t < 30; ++t) {
    Element a = random_element(ctx, rng, 3, 1);
    Element b = random_element(ctx, rng, 3, 1);
    CHECK(represent_element(rep, a * b) ==
          represent_element(rep, a) * represent_element(rep, b));
  }
}

TEST_CASE("charpoly_division_free") {
  auto f7 = make_field(7);
  SUBCASE("zero matrix") {
    FqMatrix Z(4, Fq::zero(f7));
    auto f = charpoly_division_free(Z);
    REQUIRE(f.size() == 4);
    for (const auto& c : f) CHECK(c.is_zero());
  }
  SUBCASE("diag(a, b)") {
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) {
        FqMatrix M(2, Fq::zero(f7));
        M.at(0, 0) = Fq::from_int(f7, a);
        M.at(1, 1) = Fq::from_int(f7, b);
        auto f = charpoly_division_free(M);
        CHECK(f[0] == -(M.at(0, 0) + M.at(1, 1)));
        CHECK(f[1] == M.at(0, 0) * M.at(1, 1));
      }
  }
  SUBCASE("random 3x3: f1 = -trace, f3 = -det") {
    std::mt19937_64 rng(63);
    std::uniform_int_distribution<std::uint64_t> d(0, 6);
    for (int t = 0; t < 100; ++t) {
      FqMatrix M(3, Fq::zero(f7));
      for (auto& v : M.data) v = Fq::from_index(f7, d(rng));
      auto f = charpoly_division_free(M);
      CHECK(f[0] == -M.trace());
      CHECK(f[2] == -det3(M));
    }
  }
}

TEST_CASE("oracle agreement: traces and Newton coefficients") {
  std::mt19937_64 rng(64);
  for (const auto& ctx : {as3(), rou3()}) {
    auto pt = random_point(ctx, rng);
    MatRep rep = split_symbol(ctx, pt);
    for (int t = 0; t < 25; ++t) {
      Element a = random_element(ctx, rng, 3, 1);
      // specialized algebra trace == honest matrix trace
      Fq alg_tr = rep.embed(trace(a).specialize(pt));
      FqMatrix M = represent_element(rep, a);
      CHECK(alg_tr == M.trace());
      // Newton f_1, f_2 from power-sum traces == Berkowitz coefficients
      std::vector<Fq> psums;
      for (unsigned k = 1; k <= 2; ++k)
        psums.push_back(rep.embed(trace(power(a, k)).specialize(pt)));
      auto fk = newton_coeffs(psums, rep.field->ell);
      auto cp = charpoly_division_free(M);
      CHECK(fk[0] == cp[0]);
      CHECK(fk[1] == cp[1]);
    }
  }
}
