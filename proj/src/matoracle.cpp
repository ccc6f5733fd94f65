#include "symbalg/matoracle.hpp"

namespace symbalg {

Fq Embedding::operator()(const Fq& a) const {
  if (!(*a.field() == *from)) throw ContextMismatch("embedding applied to wrong field");
  if (from->k == 1) return Fq::from_int(to, static_cast<long long>(a.coeffs()[0]));
  Fq acc = Fq::zero(to);
  Fq pw = Fq::one(to);
  for (unsigned i = 0; i < from->k; ++i) {
    acc = acc + pw * Fq::from_int(to, static_cast<long long>(a.coeffs()[i]));
    pw = pw * gen_image;
  }
  return acc;
}

Embedding find_embedding(const FieldPtr& from, const FieldPtr& to) {
  if (from->ell != to->ell) throw NoRoot("characteristics differ");
  if (to->k % from->k != 0) throw NoRoot("degree does not divide");
  Embedding e{from, to, Fq::zero(to)};
  if (from->k == 1) return e;
  // smallest root of the source modulus in the target field
  for (std::uint64_t idx = 0; idx < to->order(); ++idx) {
    Fq cand = Fq::from_index(to, idx);
    Fq val = Fq::zero(to);
    Fq pw = Fq::one(to);
    for (auto c : from->modulus) {
      val = val + pw * Fq::from_int(to, static_cast<long long>(c));
      pw = pw * cand;
    }
    if (val.is_zero()) {
      e.gen_image = cand;
      return e;
    }
  }
  throw NoRoot("source modulus has no root in the target field");
}

namespace {

// Smallest root (by index) of X^p - X - a, or of X^p - a, in the field.
std::optional<Fq> artin_schreier_root(const Fq& a, std::uint64_t p) {
  for (std::uint64_t idx = 0; idx < a.field()->order(); ++idx) {
    Fq r = Fq::from_index(a.field(), idx);
    if (r.pow(p) - r == a) return r;
  }
  return std::nullopt;
}

std::optional<Fq> pth_root(const Fq& a, std::uint64_t p) {
  for (std::uint64_t idx = 0; idx < a.field()->order(); ++idx) {
    Fq r = Fq::from_index(a.field(), idx);
    if (r.pow(p) == a) return r;
  }
  return std::nullopt;
}

FqMatrix kron(const FqMatrix& A, const FqMatrix& B, const FieldPtr& f) {
  FqMatrix R(A.n * B.n, Fq::zero(f));
  for (size_t i = 0; i < A.n; ++i)
    for (size_t j = 0; j < A.n; ++j) {
      if (A.at(i, j).is_zero()) continue;
      for (size_t k = 0; k < B.n; ++k)
        for (size_t l = 0; l < B.n; ++l)
          R.at(i * B.n + k, j * B.n + l) = A.at(i, j) * B.at(k, l);
    }
  return R;
}

FqMatrix mat_pow(FqMatrix M, std::uint64_t e, const FieldPtr& f) {
  FqMatrix R = FqMatrix::identity(M.n, f);
  while (e--) R = R * M;
  return R;
}

struct FactorImages {
  FqMatrix X, Y;  // p x p
};

// Generator images of a single specialized symbol algebra over K.
FactorImages build_factor(const AlgebraCtx& ctx, const FieldPtr& K, const Embedding& emb,
                          const Fq& alpha_hat, const Fq& beta_hat) {
  const std::uint64_t p = ctx.p;
  const Fq a = emb(alpha_hat);
  const Fq b = emb(beta_hat);
  FqMatrix X(p, Fq::zero(K));
  Fq y_scale = Fq::zero(K);
  if (ctx.variant == Variant::ArtinSchreier) {
    auto r = artin_schreier_root(a, p);
    if (!r) throw NoSplittingField("no Artin-Schreier root in the candidate field");
    for (std::uint64_t i = 0; i < p; ++i)
      X.at(i, i) = *r + Fq::from_int(K, static_cast<long long>(i));
    y_scale = pth_root_frobenius(b, p);
  } else {
    auto s = pth_root(a, p);
    auto c = pth_root(b, p);
    if (!s || !c) throw NoSplittingField("no p-th root in the candidate field");
    Fq rho = emb(ctx.rho);
    for (std::uint64_t i = 0; i < p; ++i) X.at(i, i) = *s * rho.pow(i);
    y_scale = *c;
  }
  // cyclic shift, orientation chosen so Y X Y^{-1} = X + 1 (resp. rho X)
  auto shift = [&](bool up) {
    FqMatrix C(p, Fq::zero(K));
    for (std::uint64_t j = 0; j < p; ++j) {
      std::uint64_t i = up ? (j + p - 1) % p : (j + 1) % p;
      C.at(i, j) = Fq::one(K);
    }
    return C;
  };
  for (bool up : {true, false}) {
    FqMatrix Y = shift(up).scaled(y_scale);
    // check Y X = (X + 1) Y resp. (rho X) Y without inverting Y
    FqMatrix lhs = Y * X;
    FqMatrix rhs;
    if (ctx.variant == Variant::ArtinSchreier)
      rhs = (X + FqMatrix::identity(p, K)) * Y;
    else
      rhs = X.scaled(emb(ctx.rho)) * Y;
    if (lhs == rhs) return {X, Y};
  }
  throw InternalContradiction("neither shift orientation satisfies the relation");
}

void check_relations(const MatRep& rep) {
  const AlgebraCtx& ctx = *rep.ctx;
  const FieldPtr& K = rep.field;
  const size_t d = rep.x_images.front().n;
  FqMatrix I = FqMatrix::identity(d, K);
  for (unsigned i = 0; i < ctx.m; ++i) {
    const FqMatrix& X = rep.x_images[i];
    const FqMatrix& Y = rep.y_images[i];
    Fq a = rep.embed(rep.spec_point[2 * i]);
    Fq b = rep.embed(rep.spec_point[2 * i + 1]);
    FqMatrix Xp = mat_pow(X, ctx.p, K);
    if (ctx.variant == Variant::ArtinSchreier) {
      if (!((Xp + X.scaled(-Fq::one(K))) == I.scaled(a)))
        throw InternalContradiction("X^p - X != alpha I");
      if (!(Y * X == (X + I) * Y)) throw InternalContradiction("YX != (X+1)Y");
    } else {
      if (!(Xp == I.scaled(a))) throw InternalContradiction("X^p != alpha I");
      if (!(Y * X == X.scaled(rep.embed(ctx.rho)) * Y))
        throw InternalContradiction("YX != rho XY");
    }
    if (!(mat_pow(Y, ctx.p, K) == I.scaled(b))) throw InternalContradiction("Y^p != beta I");
    for (unsigned j = 0; j < ctx.m; ++j) {
      if (i == j) continue;
      if (!(X * rep.x_images[j] == rep.x_images[j] * X) ||
          !(X * rep.y_images[j] == rep.y_images[j] * X) ||
          !(Y * rep.y_images[j] == rep.y_images[j] * Y))
        throw InternalContradiction("cross-index images do not commute");
    }
  }
}

}  // namespace

MatRep split_symbol(const CtxPtr& ctx, const std::vector<Fq>& spec_point) {
  if (spec_point.size() != ctx->nvars())
    throw InvalidInput("specialization point must have 2m entries");
  for (unsigned i = 0; i < ctx->m; ++i) {
    if (spec_point[2 * i + 1].is_zero()) throw ZeroBeta("beta must be nonzero");
    if (ctx->variant == Variant::RootOfUnity && spec_point[2 * i].is_zero())
      throw InvalidInput("alpha must be nonzero in the root-of-unity variant");
  }
  const FieldPtr& base = ctx->base;
  // Artin-Schreier polynomials split or are irreducible of degree p, and
  // p-th-root adjunction has degree dividing p, so degrees 1 and p suffice.
  std::vector<FieldPtr> candidates = {base,
                                      make_field(base->ell, base->k * static_cast<unsigned>(ctx->p))};
  for (const FieldPtr& K : candidates) {
    try {
      MatRep rep;
      rep.ctx = ctx;
      rep.field = K;
      rep.embed = find_embedding(base, K);
      rep.spec_point = spec_point;
      std::vector<FactorImages> factors;
      for (unsigned i = 0; i < ctx->m; ++i)
        factors.push_back(
            build_factor(*ctx, K, rep.embed, spec_point[2 * i], spec_point[2 * i + 1]));
      // Kronecker embedding: X_i = I x ... x X x ... x I
      for (unsigned i = 0; i < ctx->m; ++i) {
        FqMatrix Xi(1, Fq::one(K)), Yi(1, Fq::one(K));
        for (unsigned j = 0; j < ctx->m; ++j) {
          FqMatrix xi = (j == i) ? factors[j].X : FqMatrix::identity(ctx->p, K);
          FqMatrix yi = (j == i) ? factors[j].Y : FqMatrix::identity(ctx->p, K);
          Xi = kron(Xi, xi, K);
          Yi = kron(Yi, yi, K);
        }
        rep.x_images.push_back(std::move(Xi));
        rep.y_images.push_back(std::move(Yi));
      }
      check_relations(rep);
      return rep;
    } catch (const NoSplittingField&) {
      continue;
    }
  }
  throw NoSplittingField("no splitting field within the degree budget");
}

FqMatrix represent_element(const MatRep& rep, const Element& a) {
  const AlgebraCtx& ctx = *rep.ctx;
  const size_t d = rep.x_images.front().n;
  FqMatrix acc(d, Fq::zero(rep.field));
  for (const auto& [mono, poly] : a.terms()) {
    FqMatrix M = FqMatrix::identity(d, rep.field);
    for (unsigned i = 0; i < ctx.m; ++i) {
      M = M * mat_pow(rep.x_images[i], static_cast<std::uint64_t>(mono[2 * i]), rep.field);
      M = M * mat_pow(rep.y_images[i], static_cast<std::uint64_t>(mono[2 * i + 1]), rep.field);
    }
    Fq c = rep.embed(poly.specialize(rep.spec_point));
    acc = acc + M.scaled(c);
  }
  return acc;
}

std::vector<Fq> charpoly_division_free(const FqMatrix& M) {
  const size_t n = M.n;
  const FieldPtr f = M.data.front().field();
  // Berkowitz: iteratively extend the characteristic-polynomial coefficient
  // vector of the leading principal minors.
  std::vector<Fq> V = {Fq::one(f)};
  for (size_t it = 1; it <= n; ++it) {
    std::vector<Fq> q(it + 1, Fq::zero(f));
    q[0] = Fq::one(f);
    q[1] = -M.at(it - 1, it - 1);
    if (it >= 2) {
      // q[j] = -(R A^{j-2} C), R/C the border row/column of the minor
      std::vector<Fq> vec(it - 1);
      for (size_t r = 0; r < it - 1; ++r) vec[r] = M.at(r, it - 1);
      for (size_t j = 2; j <= it; ++j) {
        Fq dot = Fq::zero(f);
        for (size_t c = 0; c < it - 1; ++c) dot = dot + M.at(it - 1, c) * vec[c];
        q[j] = -dot;
        if (j < it) {
          std::vector<Fq> nv(it - 1, Fq::zero(f));
          for (size_t r = 0; r < it - 1; ++r)
            for (size_t c = 0; c < it - 1; ++c) nv[r] = nv[r] + M.at(r, c) * vec[c];
          vec = std::move(nv);
        }
      }
    }
    std::vector<Fq> nxt(it + 1, Fq::zero(f));
    for (size_t s = 0; s <= it; ++s)
      for (size_t j = 0; j <= s && j < q.size(); ++j)
        if (s - j < V.size()) nxt[s] = nxt[s] + q[j] * V[s - j];
    V = std::move(nxt);
  }
  return std::vector<Fq>(V.begin() + 1, V.end());  // drop the leading 1
}

}  // namespace symbalg
