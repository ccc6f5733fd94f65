#include "symbalg/forms.hpp"

#include <algorithm>
#include <set>

#include "symbalg/multidegree.hpp"

namespace symbalg {

PolyMatrix::PolyMatrix(size_t r, size_t c, const CoeffPoly& fill)
    : rows(r), cols(c), data(r * c, fill) {}

std::vector<BasisMono> monomial_basis(const AlgebraCtx& ctx) {
  const unsigned n = ctx.nvars();
  std::vector<BasisMono> out;
  BasisMono cur(n, 0);
  while (true) {
    out.push_back(cur);
    unsigned i = 0;
    while (i < n && cur[i] == static_cast<int>(ctx.p) - 1) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

PolyMatrix gram_trace_form(const CtxPtr& ctx) {
  auto basis = monomial_basis(*ctx);
  const size_t d = basis.size();
  PolyMatrix M(d, d, CoeffPoly::zero(ctx->base, ctx->nvars()));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      Element bi = Element::basis(ctx, basis[i]);
      Element bj = Element::basis(ctx, basis[j]);
      CoeffPoly t = trace(bi * bj);
      M.at(i, j) = t;
      if (i != j) M.at(j, i) = trace(bj * bi);
    }
  return M;
}

namespace {

// Fraction-free elimination core.  Returns the number of pivots; if det is
// requested the matrix must be square and det receives the exact value.
size_t bareiss(PolyMatrix M, CoeffPoly* det) {
  const size_t rows = M.rows, cols = M.cols;
  if (rows == 0 || cols == 0) {
    if (det) throw InvalidInput("determinant of empty matrix");
    return 0;
  }
  const FieldPtr base = M.data.front().base();
  const unsigned nvars = M.data.front().nvars();
  CoeffPoly prev = CoeffPoly::constant(base, nvars, Fq::one(base));
  bool negate = false;
  size_t rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    // first nonzero entry in row-major order
    size_t pivot = row;
    while (pivot < rows && M.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (size_t c = 0; c < cols; ++c) std::swap(M.at(pivot, c), M.at(row, c));
      negate = !negate;
    }
    const CoeffPoly piv = M.at(row, col);
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t c = col + 1; c < cols; ++c)
        M.at(i, c) = (piv * M.at(i, c) - M.at(i, col) * M.at(row, c)).divide_exact(prev);
      M.at(i, col) = CoeffPoly::zero(base, nvars);
    }
    prev = piv;
    ++rank;
    ++row;
  }
  if (det) {
    if (rows != cols) throw InvalidInput("determinant of non-square matrix");
    if (rank < rows) {
      *det = CoeffPoly::zero(base, nvars);
    } else {
      *det = negate ? -prev : prev;  // last pivot is the determinant
    }
  }
  return rank;
}

}  // namespace

CoeffPoly det_fraction_free(const PolyMatrix& M) {
  CoeffPoly det;
  bareiss(M, &det);
  return det;
}

size_t rank_fraction_free(const PolyMatrix& M) { return bareiss(M, nullptr); }

PolyMatrix coefficient_matrix(const std::vector<Element>& elems) {
  if (elems.empty()) return PolyMatrix();
  const CtxPtr& ctx = elems.front().ctx();
  std::set<BasisMono, SigLexLess> cols;
  for (const auto& e : elems)
    for (const auto& [m, c] : e.terms()) cols.insert(m);
  std::vector<BasisMono> order(cols.begin(), cols.end());
  PolyMatrix M(elems.size(), std::max<size_t>(order.size(), 1),
               CoeffPoly::zero(ctx->base, ctx->nvars()));
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < order.size(); ++j) {
      auto it = elems[i].terms().find(order[j]);
      if (it != elems[i].terms().end()) M.at(i, j) = it->second;
    }
  return M;
}

size_t rank_of_elements(const std::vector<Element>& elems) {
  if (elems.empty()) return 0;
  return rank_fraction_free(coefficient_matrix(elems));
}

bool in_span(const std::vector<Element>& gens, const Element& e) {
  if (e.is_zero()) return true;
  std::vector<Element> with = gens;
  with.push_back(e);
  return rank_of_elements(with) == rank_of_elements(gens);
}

FqMatrix::FqMatrix(size_t n_, const Fq& fill) : n(n_), data(n_ * n_, fill) {}

FqMatrix FqMatrix::identity(size_t n, const FieldPtr& f) {
  FqMatrix M(n, Fq::zero(f));
  for (size_t i = 0; i < n; ++i) M.at(i, i) = Fq::one(f);
  return M;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  FqMatrix R(n, Fq::zero(data.front().field()));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < n; ++j) R.at(i, j) = R.at(i, j) + at(i, k) * o.at(k, j);
    }
  return R;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  FqMatrix R = *this;
  for (size_t i = 0; i < data.size(); ++i) R.data[i] = R.data[i] + o.data[i];
  return R;
}

FqMatrix FqMatrix::scaled(const Fq& c) const {
  FqMatrix R = *this;
  for (auto& v : R.data) v = v * c;
  return R;
}

Fq FqMatrix::trace() const {
  Fq t = Fq::zero(data.front().field());
  for (size_t i = 0; i < n; ++i) t = t + at(i, i);
  return t;
}

OrthoBasisResult orthonormal_split_basis(size_t d, const FieldPtr& field) {
  if (field->ell == 2) throw InvalidInput("characteristic 2 not supported here");
  auto r2 = sqrt(Fq::from_int(field, 2));
  auto rm1 = sqrt(Fq::from_int(field, -1));
  if (!r2) throw MissingRoot("field has no square root of 2");
  if (!rm1) throw MissingRoot("field has no square root of -1");
  Fq inv_r2 = r2->inv();
  auto unit = [&](size_t i, size_t j) {
    FqMatrix E(d, Fq::zero(field));
    E.at(i, j) = Fq::one(field);
    return E;
  };
  OrthoBasisResult res;
  for (size_t i = 0; i < d; ++i) res.basis.push_back(unit(i, i));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      res.basis.push_back((unit(i, j) + unit(j, i)).scaled(inv_r2));
      res.basis.push_back(
          (unit(i, j).scaled(*rm1) + unit(j, i).scaled(-*rm1)).scaled(inv_r2));
    }
  res.gram_is_identity = true;
  for (size_t a = 0; a < res.basis.size() && res.gram_is_identity; ++a)
    for (size_t b = 0; b < res.basis.size(); ++b) {
      Fq t = (res.basis[a] * res.basis[b]).trace();
      bool want_one = a == b;
      if (want_one ? !t.is_one() : !t.is_zero()) {
        res.gram_is_identity = false;
        break;
      }
    }
  return res;
}

StrictUpperReport strict_upper_space(size_t d, unsigned r, const FieldPtr& field) {
  if (d < 2 || r < 1) throw InvalidInput("strict_upper_space requires d >= 2, r >= 1");
  std::vector<FqMatrix> basis;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      FqMatrix E(d, Fq::zero(field));
      E.at(i, j) = Fq::one(field);
      basis.push_back(E);
    }
  StrictUpperReport rep;
  rep.dim = basis.size();
  rep.quotient = (static_cast<std::uint64_t>(d) * d - 1) / r;
  rep.exceeds_quotient = rep.dim > rep.quotient;
  rep.traces_vanish = true;
  for (unsigned t = 1; t <= r && rep.traces_vanish; ++t) {
    for_each_composition(t, basis.size(), [&](const std::vector<unsigned>& deg) {
      // star product of matrices: sum over multiset permutations
      std::vector<unsigned> word;
      for (size_t i = 0; i < deg.size(); ++i)
        for (unsigned c = 0; c < deg[i]; ++c) word.push_back(static_cast<unsigned>(i));
      FqMatrix sum(d, Fq::zero(field));
      do {
        FqMatrix prod = FqMatrix::identity(d, field);
        for (unsigned idx : word) prod = prod * basis[idx];
        sum = sum + prod;
      } while (std::next_permutation(word.begin(), word.end()));
      if (!sum.trace().is_zero()) {
        rep.traces_vanish = false;
        return false;
      }
      return true;
    });
  }
  return rep;
}

}  // namespace symbalg
