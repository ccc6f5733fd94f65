#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "symbalg/coeffring.hpp"

namespace symbalg {

enum class Variant { ArtinSchreier, RootOfUnity };

/// The ambient algebra: an m-fold tensor product of symbol algebras of prime
/// degree p over F = F_0(alpha_1,beta_1,...,alpha_m,beta_m).
///
/// ArtinSchreier factor:  x^p - x = alpha, y^p = beta, y x y^{-1} = x + 1
/// RootOfUnity factor:    x^p = alpha,     y^p = beta, y x y^{-1} = rho x
struct AlgebraCtx {
  std::uint64_t p;
  unsigned m;
  Variant variant;
  FieldPtr base;
  Fq rho;  // valid iff RootOfUnity

  unsigned nvars() const { return 2 * m; }
  std::uint64_t degree() const;  // p^m

  bool operator==(const AlgebraCtx& o) const;
};

using CtxPtr = std::shared_ptr<const AlgebraCtx>;

/// Validated context; rho is computed deterministically for RootOfUnity.
CtxPtr make_ctx(std::uint64_t p, unsigned m, Variant variant, FieldPtr base);

/// Basis monomial x_1^{d_1} y_1^{e_1} ... x_m^{d_m} y_m^{e_m}, slot order
/// d_1,e_1,...,d_m,e_m, entries in [0, p-1].  Same slot layout as ExpVec.
using BasisMono = std::vector<int>;

constexpr std::size_t kDefaultTermBudget = 1'000'000;

/// Element of the algebra in monomial normal form: basis monomial ->
/// Laurent-polynomial coefficient, no zero values stored.
class Element {
 public:
  using TermMap = std::map<BasisMono, CoeffPoly, SigLexLess>;

  Element() = default;
  explicit Element(CtxPtr ctx);

  static Element zero(const CtxPtr& ctx);
  static Element one(const CtxPtr& ctx);
  /// Basis monomial with coefficient 1 (entries must lie in [0, p-1]).
  static Element basis(const CtxPtr& ctx, BasisMono mono);
  static Element from_poly(const CtxPtr& ctx, BasisMono mono, CoeffPoly c);

  const CtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  Element scaled(const CoeffPoly& c) const;
  Element scaled(const Fq& c) const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  void add_term(const BasisMono& mono, const CoeffPoly& c);

 private:
  void check_same(const Element& o) const;

  CtxPtr ctx_;
  TermMap terms_;
};

/// Product of two scaled basis monomials, reduced to normal form via the
/// defining relations.
Element mono_mul(const CtxPtr& ctx, const BasisMono& a, const BasisMono& b);

/// Reduced trace as a coefficient polynomial: the single-coefficient lookup
/// dictated by the trace tables of the two presentations, extended to tensor
/// products multiplicatively.
CoeffPoly trace(const Element& a);

/// a^r by repeated multiplication; a^0 = 1.
Element power(const Element& a, std::uint64_t r);

/// Star product: the sum over all distinct arrangements of the multiset word
/// with ds[i] copies of vs[i].  Entries of ds may be zero (skipped); the sum
/// of ds must be >= 1.  Throws FuelExhausted when the number of arrangements
/// exceeds the term budget.
Element star(const std::vector<Element>& vs, const std::vector<unsigned>& ds,
             std::size_t term_budget = kDefaultTermBudget);

}  // namespace symbalg
