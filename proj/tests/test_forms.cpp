#include <random>

#include "doctest.h"
#include "symbalg/forms.hpp"

using namespace symbalg;

namespace {

CtxPtr rou3() { return make_ctx(3, 1, Variant::RootOfUnity, make_field(7)); }

CoeffPoly cpoly(const FieldPtr& f, unsigned nvars, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<std::uint64_t> sc(0, f->order() - 1);
  CoeffPoly p = CoeffPoly::zero(f, nvars);
  for (int t = 0; t < 2; ++t) {
    ExpVec e(nvars);
    for (auto& v : e) v = exp(rng);
    p.add_term(e, Fq::from_index(f, sc(rng)));
  }
  return p;
}

// Independent oracle: cofactor (Laplace) expansion along the first row.
CoeffPoly det_cofactor(const PolyMatrix& M) {
  if (M.rows == 1) return M.at(0, 0);
  const FieldPtr f = M.data.front().base();
  const unsigned nv = M.data.front().nvars();
  CoeffPoly acc = CoeffPoly::zero(f, nv);
  for (size_t c = 0; c < M.cols; ++c) {
    PolyMatrix minor(M.rows - 1, M.cols - 1, CoeffPoly::zero(f, nv));
    for (size_t i = 1; i < M.rows; ++i)
      for (size_t j = 0, jj = 0; j < M.cols; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jj++) = M.at(i, j);
      }
    CoeffPoly term = M.at(0, c) * det_cofactor(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("gram_trace_form entries") {
  auto ctx = rou3();
  PolyMatrix G = gram_trace_form(ctx);
  REQUIRE(G.rows == 9);
  REQUIRE(G.cols == 9);
  auto basis = monomial_basis(*ctx);
  // basis[0] is the identity: Tr(1*1) = 3
  CHECK(G.at(0, 0) == CoeffPoly::constant(ctx->base, 2, Fq::from_int(ctx->base, 3)));
  // locate x, x^2, y
  size_t ix = 0, ix2 = 0, iy = 0;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == BasisMono{1, 0}) ix = i;
    if (basis[i] == BasisMono{2, 0}) ix2 = i;
    if (basis[i] == BasisMono{0, 1}) iy = i;
  }
  CHECK(G.at(ix, ix2) ==
        CoeffPoly::monomial(ctx->base, {1, 0}, Fq::from_int(ctx->base, 3)));
  CHECK(G.at(ix, iy).is_zero());
  // symmetry
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j) CHECK(G.at(i, j) == G.at(j, i));
}

TEST_CASE("det_fraction_free") {
  auto f7 = make_field(7);
  SUBCASE("identity") {
    PolyMatrix I(3, 3, CoeffPoly::zero(f7, 2));
    for (int i = 0; i < 3; ++i)
      I.at(i, i) = CoeffPoly::constant(f7, 2, Fq::one(f7));
    CHECK(det_fraction_free(I) == CoeffPoly::constant(f7, 2, Fq::one(f7)));
  }
  SUBCASE("agrees with cofactor expansion on random 4x4 matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 15; ++t) {
      PolyMatrix M(4, 4, CoeffPoly::zero(f7, 2));
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) M.at(i, j) = cpoly(f7, 2, rng);
      CHECK(det_fraction_free(M) == det_cofactor(M));
    }
  }
  SUBCASE("Gram determinant is a nonzero polynomial (both variants)") {
    CHECK(!det_fraction_free(gram_trace_form(rou3())).is_zero());
    auto as = make_ctx(3, 1, Variant::ArtinSchreier, make_field(3));
    CHECK(!det_fraction_free(gram_trace_form(as)).is_zero());
  }
}

TEST_CASE("rank") {
  auto ctx = rou3();
  Element x = Element::basis(ctx, {1, 0});
  Element x2 = Element::basis(ctx, {2, 0});
  CHECK(rank_of_elements({x, x2, x.scaled(Fq::from_int(ctx->base, 2))}) == 2);
  CHECK(in_span({x, x2}, x + x2.scaled(Fq::from_int(ctx->base, 5))));
  CHECK(!in_span({x, x2}, Element::one(ctx)));
}

TEST_CASE("orthonormal_split_basis") {
  SUBCASE("d=3 over F_17 gives the identity Gram") {
    auto res = orthonormal_split_basis(3, make_field(17));
    CHECK(res.basis.size() == 9);
    CHECK(res.gram_is_identity);
    // the basis really spans M_3: 9 independent matrices over F_17
    // (flatten into rows and row-reduce over the field by brute force)
    std::vector<std::vector<Fq>> rows;
    for (const auto& M : res.basis) rows.push_back(M.data);
    size_t rank = 0;
    std::vector<std::vector<Fq>> reduced;
    for (auto row : rows) {
      for (const auto& r : reduced) {
        size_t lead = 0;
        while (lead < r.size() && r[lead].is_zero()) ++lead;
        if (lead < row.size() && !row[lead].is_zero())
          for (size_t c = 0; c < row.size(); ++c)
            row[c] = row[c] - r[c] * (row[lead] * r[lead].inv());
      }
      bool zero = true;
      for (const auto& v : row)
        if (!v.is_zero()) zero = false;
      if (!zero) {
        reduced.push_back(row);
        ++rank;
      }
    }
    CHECK(rank == 9);
  }
  SUBCASE("d=1") {
    auto res = orthonormal_split_basis(1, make_field(17));
    CHECK(res.basis.size() == 1);
    CHECK(res.gram_is_identity);
  }
  SUBCASE("F_7 lacks sqrt(-1)") {
    CHECK_THROWS_AS(orthonormal_split_basis(3, make_field(7)), MissingRoot);
  }
}

TEST_CASE("strict_upper_space") {
  SUBCASE("d=5, r=3: dimension beats the quotient") {
    auto rep = strict_upper_space(5, 3, make_field(5));
    CHECK(rep.dim == 10);
    CHECK(rep.quotient == 8);
    CHECK(rep.exceeds_quotient);
    CHECK(rep.traces_vanish);
  }
  SUBCASE("d=3, r=2 stays under the quotient") {
    auto rep = strict_upper_space(3, 2, make_field(3));
    CHECK(rep.dim == 3);
    CHECK(rep.quotient == 4);
    CHECK(!rep.exceeds_quotient);
    CHECK(rep.traces_vanish);
  }
  SUBCASE("d=2, r=1") {
    auto rep = strict_upper_space(2, 1, make_field(2));
    CHECK(rep.dim == 1);
    CHECK(rep.traces_vanish);
  }
}
