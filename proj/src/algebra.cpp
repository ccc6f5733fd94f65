#include "symbalg/algebra.hpp"

#include <algorithm>

namespace symbalg {

std::uint64_t AlgebraCtx::degree() const {
  std::uint64_t d = 1;
  for (unsigned i = 0; i < m; ++i) d *= p;
  return d;
}

bool AlgebraCtx::operator==(const AlgebraCtx& o) const {
  if (p != o.p || m != o.m || variant != o.variant || *base != *o.base) return false;
  if (variant == Variant::RootOfUnity && rho != o.rho) return false;
  return true;
}

CtxPtr make_ctx(std::uint64_t p, unsigned m, Variant variant, FieldPtr base) {
  if (!is_prime(p)) throw InvalidInput("degree p must be prime");
  if (m == 0) throw InvalidInput("tensor length m must be positive");
  auto ctx = std::make_shared<AlgebraCtx>();
  ctx->p = p;
  ctx->m = m;
  ctx->variant = variant;
  ctx->base = std::move(base);
  if (variant == Variant::ArtinSchreier) {
    if (ctx->base->ell != p)
      throw InvalidInput("Artin-Schreier variant requires base characteristic p");
  } else {
    if (ctx->base->ell == p)
      throw InvalidInput("root-of-unity variant requires base characteristic != p");
    if (ctx->base->ell < p)
      throw InvalidInput("base characteristic must be 0 or >= p; finite case needs ell >= p");
    ctx->rho = primitive_pth_root(ctx->base, p);
  }
  return ctx;
}

Element::Element(CtxPtr ctx) : ctx_(std::move(ctx)) {}

Element Element::zero(const CtxPtr& ctx) { return Element(ctx); }

Element Element::one(const CtxPtr& ctx) {
  return basis(ctx, BasisMono(ctx->nvars(), 0));
}

Element Element::basis(const CtxPtr& ctx, BasisMono mono) {
  return from_poly(ctx, std::move(mono),
                   CoeffPoly::constant(ctx->base, ctx->nvars(), Fq::one(ctx->base)));
}

Element Element::from_poly(const CtxPtr& ctx, BasisMono mono, CoeffPoly c) {
  Element e(ctx);
  e.add_term(mono, c);
  return e;
}

void Element::check_same(const Element& o) const {
  if (!ctx_ || !o.ctx_) throw InvalidInput("uninitialized element");
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_))
    throw ContextMismatch("elements from different algebras");
}

void Element::add_term(const BasisMono& mono, const CoeffPoly& c) {
  if (mono.size() != ctx_->nvars()) throw ContextMismatch("basis monomial length mismatch");
  for (int v : mono)
    if (v < 0 || v >= static_cast<int>(ctx_->p))
      throw InvalidInput("basis exponent outside [0, p-1]");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  Element r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Element Element::operator-(const Element& o) const {
  check_same(o);
  Element r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Element Element::operator-() const {
  Element r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::scaled(const CoeffPoly& c) const {
  Element r(ctx_);
  for (const auto& [m, t] : terms_) {
    CoeffPoly v = t * c;
    if (!v.is_zero()) r.terms_.emplace(m, v);
  }
  return r;
}

Element Element::scaled(const Fq& c) const {
  Element r(ctx_);
  for (const auto& [m, t] : terms_) {
    CoeffPoly v = t.scaled(c);
    if (!v.is_zero()) r.terms_.emplace(m, v);
  }
  return r;
}

bool Element::operator==(const Element& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

namespace {

// Binomial coefficient as a base-field scalar; arguments stay below 2p.
Fq binom_fq(const FieldPtr& f, unsigned n, unsigned j) {
  // Pascal over the integers would overflow nothing at this scale, but stay
  // in the field to be safe in characteristic p.
  std::vector<Fq> row(n + 1, Fq::zero(f));
  row[0] = Fq::one(f);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned t = i; t-- > 0;) row[t + 1] = row[t + 1] + row[t];
  return row[j];
}

struct LocalTerm {
  int d, e;        // reduced exponents of x_i, y_i
  int ea, eb;      // exponents of alpha_i, beta_i picked up by reduction
  Fq scalar;
};

// Normal form of (x^da y^ea) * (x^db y^eb) within one tensor factor.
std::vector<LocalTerm> local_mul(const AlgebraCtx& ctx, int da, int ea, int db, int eb) {
  const int p = static_cast<int>(ctx.p);
  const FieldPtr& f = ctx.base;
  std::vector<LocalTerm> out;
  int e0 = ea + eb;
  int beta_exp = 0;
  if (e0 >= p) {  // y^p = beta
    e0 -= p;
    beta_exp = 1;
  }
  if (ctx.variant == Variant::RootOfUnity) {
    // y^e x^d = rho^{ed} x^d y^e
    Fq s = ctx.rho.pow(static_cast<std::uint64_t>(ea) * static_cast<std::uint64_t>(db));
    int d0 = da + db;
    int alpha_exp = 0;
    if (d0 >= p) {  // x^p = alpha
      d0 -= p;
      alpha_exp = 1;
    }
    out.push_back({d0, e0, alpha_exp, beta_exp, s});
    return out;
  }
  // Artin-Schreier: y^ea x^db = (x + ea)^db y^ea, then x^p = x + alpha.
  Fq ea_f = Fq::from_int(f, ea);
  for (int j = 0; j <= db; ++j) {
    Fq c = binom_fq(f, static_cast<unsigned>(db), static_cast<unsigned>(j)) *
           ea_f.pow(static_cast<std::uint64_t>(db - j));
    if (c.is_zero()) continue;
    int d0 = da + j;  // <= 2p-2
    if (d0 >= p) {
      // x^{d0} = x^{d0-p} (x + alpha)
      out.push_back({d0 - p + 1, e0, 0, beta_exp, c});
      out.push_back({d0 - p, e0, 1, beta_exp, c});
    } else {
      out.push_back({d0, e0, 0, beta_exp, c});
    }
  }
  return out;
}

}  // namespace

Element mono_mul(const CtxPtr& ctx, const BasisMono& a, const BasisMono& b) {
  const unsigned n = ctx->nvars();
  if (a.size() != n || b.size() != n) throw ContextMismatch("basis monomial length mismatch");
  // Distinct tensor indices commute exactly, so reduce index by index and
  // take the product of the local results.
  struct Partial {
    BasisMono mono;
    ExpVec exp;
    Fq scalar;
  };
  std::vector<Partial> acc = {{BasisMono{}, ExpVec{}, Fq::one(ctx->base)}};
  for (unsigned i = 0; i < ctx->m; ++i) {
    auto locals = local_mul(*ctx, a[2 * i], a[2 * i + 1], b[2 * i], b[2 * i + 1]);
    std::vector<Partial> next;
    next.reserve(acc.size() * locals.size());
    for (const auto& pa : acc)
      for (const auto& lt : locals) {
        Partial np = pa;
        np.mono.push_back(lt.d);
        np.mono.push_back(lt.e);
        np.exp.push_back(lt.ea);
        np.exp.push_back(lt.eb);
        np.scalar = np.scalar * lt.scalar;
        next.push_back(std::move(np));
      }
    acc = std::move(next);
  }
  Element r(ctx);
  for (const auto& pa : acc)
    r.add_term(pa.mono, CoeffPoly::monomial(ctx->base, pa.exp, pa.scalar));
  return r;
}

Element Element::operator*(const Element& o) const {
  check_same(o);
  Element r(ctx_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Element prod = mono_mul(ctx_, ma, mb);
      CoeffPoly c = ca * cb;
      for (const auto& [mm, mc] : prod.terms()) r.add_term(mm, mc * c);
    }
  return r;
}

CoeffPoly trace(const Element& a) {
  const AlgebraCtx& ctx = *a.ctx();
  const unsigned n = ctx.nvars();
  BasisMono target(n, 0);
  Fq factor = Fq::one(ctx.base);
  if (ctx.variant == Variant::ArtinSchreier) {
    // Tr(x^{p-1}) = -1 per factor, all other basis monomials trace to 0.
    for (unsigned i = 0; i < ctx.m; ++i) target[2 * i] = static_cast<int>(ctx.p) - 1;
    for (unsigned i = 0; i < ctx.m; ++i) factor = -factor;
  } else {
    // Tr(1) = p per factor.
    for (unsigned i = 0; i < ctx.m; ++i) factor = factor * Fq::from_int(ctx.base, static_cast<long long>(ctx.p));
  }
  auto it = a.terms().find(target);
  if (it == a.terms().end()) return CoeffPoly::zero(ctx.base, n);
  return it->second.scaled(factor);
}

Element power(const Element& a, std::uint64_t r) {
  Element acc = Element::one(a.ctx());
  for (std::uint64_t i = 0; i < r; ++i) acc = acc * a;
  return acc;
}

Element star(const std::vector<Element>& vs, const std::vector<unsigned>& ds,
             std::size_t term_budget) {
  if (vs.size() != ds.size()) throw InvalidInput("star: vs/ds length mismatch");
  std::vector<unsigned> word;  // index into vs, sorted -> multiset permutations
  for (size_t i = 0; i < vs.size(); ++i)
    for (unsigned c = 0; c < ds[i]; ++c) word.push_back(static_cast<unsigned>(i));
  if (word.empty()) throw InvalidInput("star: total degree must be >= 1");
  CtxPtr ctx = vs.front().ctx();
  // Arrangement count = multinomial(sum ds; ds...), checked against the budget
  // before any multiplication happens.
  std::size_t count = 1, seen = 0;
  bool overflow = false;
  for (size_t i = 0; i < ds.size() && !overflow; ++i)
    for (unsigned c = 1; c <= ds[i]; ++c) {
      ++seen;
      count = count * seen / c;  // exact: product of binomials
      if (count > term_budget) overflow = true;
    }
  if (overflow || count > term_budget)
    throw FuelExhausted("star: arrangement count exceeds term budget");
  Element sum = Element::zero(ctx);
  do {
    Element prod = Element::one(ctx);
    for (unsigned idx : word) prod = prod * vs[idx];
    sum = sum + prod;
  } while (std::next_permutation(word.begin(), word.end()));
  return sum;
}

}  // namespace symbalg
