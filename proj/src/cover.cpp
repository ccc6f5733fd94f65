#include "symbalg/cover.hpp"

#include <algorithm>
#include <random>

namespace symbalg {
namespace cover {
namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t encode(std::uint64_t p, const Pt& pt) {
  std::uint64_t r = 0;
  for (size_t i = pt.size(); i-- > 0;) r = r * p + static_cast<std::uint64_t>(pt[i]);
  return r;
}

Pt decode(std::uint64_t p, unsigned n, std::uint64_t code) {
  Pt pt(n);
  for (unsigned i = 0; i < n; ++i) {
    pt[i] = static_cast<int>(code % p);
    code /= p;
  }
  return pt;
}

Pt scale_add(std::uint64_t p, int a, const Pt& v, int b, const Pt& w) {
  Pt r(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    r[i] = static_cast<int>((static_cast<long long>(a) * v[i] +
                             static_cast<long long>(b) * w[i]) %
                            static_cast<long long>(p));
  return r;
}

// Canonical directions: nonzero vectors with first nonzero coordinate 1.
std::vector<Pt> canonical_directions(std::uint64_t p, unsigned n) {
  std::vector<Pt> dirs;
  std::uint64_t total = ipow(p, n);
  for (std::uint64_t code = 1; code < total; ++code) {
    Pt d = decode(p, n, code);
    size_t first = 0;
    while (d[first] == 0) ++first;
    if (d[first] == 1) dirs.push_back(std::move(d));
  }
  return dirs;
}

bool collinear(std::uint64_t p, const Pt& P, const Pt& v, const Pt& w) {
  // P = v + t (w - v) for some t in F_p
  for (std::uint64_t t = 0; t < p; ++t) {
    bool ok = true;
    for (size_t i = 0; i < P.size() && ok; ++i) {
      long long lhs = (v[i] + static_cast<long long>(t) * (w[i] - v[i] + static_cast<long long>(p))) %
                      static_cast<long long>(p);
      ok = lhs == P[i];
    }
    if (ok) return true;
  }
  return false;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

// Coverage machinery over encoded points, with precomputed scalar-multiply
// and add tables.
struct Tables {
  std::uint64_t p, total;
  unsigned n;
  std::vector<std::vector<std::uint64_t>> mul;  // mul[c][pt]
  std::vector<std::uint64_t> add_tab;           // present when total is small

  Tables(std::uint64_t p_, unsigned n_) : p(p_), total(ipow(p_, n_)), n(n_) {
    mul.assign(p, std::vector<std::uint64_t>(total));
    for (std::uint64_t c = 0; c < p; ++c)
      for (std::uint64_t code = 0; code < total; ++code) {
        Pt pt = decode(p, n, code);
        for (auto& x : pt) x = static_cast<int>((static_cast<std::uint64_t>(x) * c) % p);
        mul[c][code] = encode(p, pt);
      }
    if (total <= 4096) {
      add_tab.resize(total * total);
      for (std::uint64_t a = 0; a < total; ++a)
        for (std::uint64_t b = 0; b < total; ++b) add_tab[a * total + b] = add_slow(a, b);
    }
  }

  std::uint64_t add_slow(std::uint64_t a, std::uint64_t b) const {
    Pt pa = decode(p, n, a), pb = decode(p, n, b);
    for (unsigned i = 0; i < n; ++i) pa[i] = (pa[i] + pb[i]) % static_cast<int>(p);
    return encode(p, pa);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return add_tab.empty() ? add_slow(a, b) : add_tab[a * total + b];
  }
};

// Does the set (encoded) cover every target via k*v + (p-1-k)*w?
bool covers_all(const Tables& T, const std::vector<std::uint64_t>& set,
                std::uint64_t* uncovered) {
  std::vector<char> hit(T.total, 0);
  std::uint64_t remaining = T.total;
  for (std::uint64_t v : set)
    for (std::uint64_t w : set)
      for (std::uint64_t k = 0; k < T.p; ++k) {
        std::uint64_t q = T.add(T.mul[k][v], T.mul[T.p - 1 - k][w]);
        if (!hit[q]) {
          hit[q] = 1;
          if (--remaining == 0) return true;
        }
      }
  if (uncovered) {
    for (std::uint64_t q = 0; q < T.total; ++q)
      if (!hit[q]) {
        *uncovered = q;
        break;
      }
  }
  return false;
}

template <typename Fn>
bool for_each_subset(std::uint64_t total, unsigned size, std::uint64_t budget,
                     std::uint64_t* used, Fn&& fn) {
  // Lexicographic combinations of {0..total-1}; fn returns false to stop.
  std::vector<std::uint64_t> idx(size);
  for (unsigned i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    if ((*used)++ >= budget) throw BudgetExceeded("subset enumeration budget exceeded");
    if (!fn(idx)) return false;
    // advance
    unsigned i = size;
    while (i-- > 0) {
      if (idx[i] != total - size + i) {
        ++idx[i];
        for (unsigned j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return true;
    }
  }
}

}  // namespace

std::uint64_t line_count(std::uint64_t p, unsigned n) {
  return (ipow(p, n) - 1) / (p - 1);
}

std::vector<Line> lines_through(std::uint64_t p, const Pt& P) {
  unsigned n = static_cast<unsigned>(P.size());
  std::vector<Line> lines;
  for (auto& dir : canonical_directions(p, n)) {
    Line ln;
    ln.base = P;
    ln.dir = dir;
    for (std::uint64_t t = 0; t < p; ++t)
      ln.points.push_back(scale_add(p, 1, P, static_cast<int>(t), dir));
    lines.push_back(std::move(ln));
  }
  return lines;
}

std::optional<std::pair<Pt, Pt>> secant_through(std::uint64_t p, const Pt& P,
                                                const std::vector<Pt>& S) {
  std::vector<Pt> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j)
      if (collinear(p, P, sorted[i], sorted[j])) return std::make_pair(sorted[i], sorted[j]);
  return std::nullopt;
}

std::optional<CoverWitness> represent(std::uint64_t p, const Pt& Q,
                                      const std::vector<Pt>& S) {
  std::vector<Pt> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto verify = [&](const CoverWitness& cw) {
    Pt r = scale_add(p, cw.k, cw.v, static_cast<int>(p) - 1 - cw.k, cw.w);
    if (r != Q) throw InternalContradiction("cover witness failed modular re-check");
  };
  // Q = (p-1)*v needs no second point; canonical witness uses w = v.
  for (const Pt& v : sorted) {
    if (scale_add(p, static_cast<int>(p) - 1, v, 0, v) == Q) {
      CoverWitness cw{v, v, static_cast<int>(p) - 1};
      verify(cw);
      return cw;
    }
  }
  for (const Pt& v : sorted)
    for (const Pt& w : sorted)
      for (int k = 0; k < static_cast<int>(p); ++k)
        if (scale_add(p, k, v, static_cast<int>(p) - 1 - k, w) == Q) {
          CoverWitness cw{v, w, k};
          verify(cw);
          return cw;
        }
  return std::nullopt;
}

VerifyReport verify_bound(std::uint64_t p, unsigned n,
                          std::optional<std::pair<std::uint64_t, std::uint64_t>> sampled,
                          std::uint64_t budget) {
  VerifyReport rep;
  rep.p = p;
  rep.n = n;
  rep.bound = line_count(p, n);
  rep.sets_checked = 0;
  rep.exhaustive = !sampled.has_value();
  rep.passed = true;
  rep.degenerate_p2 = (p == 2);
  Tables T(p, n);
  unsigned size = static_cast<unsigned>(rep.bound + 1);
  auto record_failure = [&](const std::vector<std::uint64_t>& set, std::uint64_t q) {
    std::vector<Pt> pts;
    for (auto c : set) pts.push_back(decode(p, n, c));
    rep.failure = {pts, decode(p, n, q)};
    rep.passed = false;
  };
  if (rep.exhaustive) {
    if (binomial_capped(T.total, size, budget) > budget)
      throw BudgetExceeded("exhaustive verification would exceed the set budget");
    std::uint64_t used = 0;
    for_each_subset(T.total, size, budget, &used, [&](const std::vector<std::uint64_t>& set) {
      ++rep.sets_checked;
      std::uint64_t q;
      if (!covers_all(T, set, &q)) {
        record_failure(set, q);
        return false;
      }
      return true;
    });
  } else {
    auto [samples, seed] = *sampled;
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> all(T.total);
    for (std::uint64_t i = 0; i < T.total; ++i) all[i] = i;
    for (std::uint64_t s = 0; s < samples; ++s) {
      // partial Fisher-Yates draw of `size` distinct points
      for (unsigned i = 0; i < size; ++i) {
        std::uniform_int_distribution<std::uint64_t> dist(i, T.total - 1);
        std::swap(all[i], all[dist(rng)]);
      }
      std::vector<std::uint64_t> set(all.begin(), all.begin() + size);
      ++rep.sets_checked;
      std::uint64_t q;
      if (!covers_all(T, set, &q)) {
        record_failure(set, q);
        break;
      }
    }
  }
  return rep;
}

std::optional<SharpResult> find_sharp(std::uint64_t p, unsigned n, std::uint64_t budget) {
  Tables T(p, n);
  unsigned size = static_cast<unsigned>(line_count(p, n));
  if (binomial_capped(T.total, size, budget) > budget)
    throw BudgetExceeded("sharpness search would exceed the set budget");
  std::optional<SharpResult> result;
  std::uint64_t used = 0;
  for_each_subset(T.total, size, budget, &used, [&](const std::vector<std::uint64_t>& set) {
    std::uint64_t q;
    if (!covers_all(T, set, &q)) {
      SharpResult sr;
      for (auto c : set) sr.set.push_back(decode(p, n, c));
      sr.uncovered = decode(p, n, q);
      // re-verify through the public path
      if (represent(p, sr.uncovered, sr.set).has_value())
        throw InternalContradiction("sharpness witness covered on re-check");
      result = std::move(sr);
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace cover
}  // namespace symbalg
