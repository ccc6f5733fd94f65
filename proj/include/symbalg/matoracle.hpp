#pragma once

#include "symbalg/algebra.hpp"
#include "symbalg/forms.hpp"

namespace symbalg {

/// Embedding of a small field into an extension, determined by the image of
/// the generator (a root of the source modulus in the target field).
struct Embedding {
  FieldPtr from, to;
  Fq gen_image;  // unused when from->k == 1

  Fq operator()(const Fq& a) const;
};

/// Find the canonical embedding (lexicographically smallest root); throws
/// NoRoot if the source field does not embed.
Embedding find_embedding(const FieldPtr& from, const FieldPtr& to);

/// Explicit splitting representation of a specialized tensor product of
/// symbol algebras: generator images as p^m x p^m matrices over a finite
/// extension, assembled by Kronecker products.  All defining relations are
/// verified at construction.
struct MatRep {
  CtxPtr ctx;
  FieldPtr field;                  // splitting extension
  Embedding embed;                 // base field -> splitting field
  std::vector<Fq> spec_point;      // 2m values over the base field
  std::vector<FqMatrix> x_images;  // X_1..X_m
  std::vector<FqMatrix> y_images;  // Y_1..Y_m
};

/// Build a splitting representation at a specialization point (values over
/// the base field; every beta must be nonzero, and for the root-of-unity
/// variant every alpha too).  Searches extension degrees 1 and p.
MatRep split_symbol(const CtxPtr& ctx, const std::vector<Fq>& spec_point);

/// Image of an element under the representation (homomorphism induced by the
/// generator images; coefficients specialized then embedded).
FqMatrix represent_element(const MatRep& rep, const Element& a);

/// Coefficients of det(xI - M) as [f_1, ..., f_d] with the convention
/// x^d + f_1 x^{d-1} + ... + f_d, by the Berkowitz method (division-free,
/// valid in any characteristic).
std::vector<Fq> charpoly_division_free(const FqMatrix& M);

}  // namespace symbalg
