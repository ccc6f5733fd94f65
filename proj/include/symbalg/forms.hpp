#pragma once

#include "symbalg/algebra.hpp"

namespace symbalg {

/// Rectangular matrix of coefficient-ring entries.
struct PolyMatrix {
  size_t rows = 0, cols = 0;
  std::vector<CoeffPoly> data;

  PolyMatrix() = default;
  PolyMatrix(size_t r, size_t c, const CoeffPoly& fill);
  CoeffPoly& at(size_t r, size_t c) { return data[r * cols + c]; }
  const CoeffPoly& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

/// All p^{2m} basis monomials in ascending index order (identity first).
std::vector<BasisMono> monomial_basis(const AlgebraCtx& ctx);

/// Gram matrix of the trace form phi(v) = Tr(v^2) over the monomial basis:
/// entry (i, j) = Tr(b_i * b_j).  Symmetric.
PolyMatrix gram_trace_form(const CtxPtr& ctx);

/// Exact determinant / rank by fraction-free (Bareiss) elimination; valid
/// over the Laurent-polynomial domain, no fraction field needed.
CoeffPoly det_fraction_free(const PolyMatrix& M);
size_t rank_fraction_free(const PolyMatrix& M);

/// Matrix of coefficient rows of the given elements (columns: union of the
/// basis monomials present, in SigLexLess order); shared rank primitive.
PolyMatrix coefficient_matrix(const std::vector<Element>& elems);
size_t rank_of_elements(const std::vector<Element>& elems);

/// Is e in the F-span of gens?  (rank comparison)
bool in_span(const std::vector<Element>& gens, const Element& e);

/// d x d matrix over Fq (dense, row-major) used by the explicit form bases.
struct FqMatrix {
  size_t n = 0;
  std::vector<Fq> data;

  FqMatrix() = default;
  FqMatrix(size_t n_, const Fq& fill);
  Fq& at(size_t r, size_t c) { return data[r * n + c]; }
  const Fq& at(size_t r, size_t c) const { return data[r * n + c]; }

  static FqMatrix identity(size_t n, const FieldPtr& f);
  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix scaled(const Fq& c) const;
  Fq trace() const;
  bool operator==(const FqMatrix& o) const { return n == o.n && data == o.data; }
};

struct OrthoBasisResult {
  std::vector<FqMatrix> basis;  // d^2 matrices
  bool gram_is_identity;
};

/// The explicit basis making Tr(v^2) isometric to <1,...,1> on M_d: diagonal
/// units, symmetrized pairs scaled by 1/sqrt(2), and antisymmetrized pairs
/// scaled by sqrt(-1)/sqrt(2).  Requires both roots in the field.
OrthoBasisResult orthonormal_split_basis(size_t d, const FieldPtr& field);

struct StrictUpperReport {
  size_t dim;                 // d(d-1)/2
  std::uint64_t quotient;     // floor((d^2 - 1)/r)
  bool exceeds_quotient;      // dim > quotient
  bool traces_vanish;         // all star-product traces of degree 1..r are 0
};

/// Strictly upper triangular matrices in M_d over F_ell: dimension count and
/// verification that every star-product trace of total degree <= r vanishes.
StrictUpperReport strict_upper_space(size_t d, unsigned r, const FieldPtr& field);

}  // namespace symbalg
