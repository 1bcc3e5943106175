#include "edgebasis/complete_graph.hpp"

#include <algorithm>

#include "edgebasis/error.hpp"

namespace edgebasis {

namespace {

Monomial power(int n, Letter letter, int v, int e) {
  Monomial m(n);
  m.set(letter, v, e);
  return m;
}

// c_i (lead - trail): the sign flips the orientation.
Binomial signed_binomial(const SignedOrderContext& ctx, int i, Monomial plus, Monomial minus) {
  if (ctx.sign(i) > 0) return Binomial(std::move(plus), std::move(minus));
  return Binomial(std::move(minus), std::move(plus));
}

Binomial mixed_triple(const SignedOrderContext& ctx, int i, int k, int j) {
  const int n = ctx.n();
  const Monomial rk = ctx.r(k);
  return signed_binomial(ctx, i, power(n, Letter::X, i, 1) * power(n, Letter::Y, j, 1) * rk,
                         power(n, Letter::Y, i, 1) * power(n, Letter::X, j, 1) * rk);
}

bool in_gamma(const SignedOrderContext& ctx, int i, int k, int j) {
  return ctx.above(i, k) && ctx.above(k, j) && (ctx.order().vertex_flipped(i) != ctx.order().vertex_flipped(k));
}

} // namespace

std::vector<Binomial> gamma_set(const SignedOrderContext& ctx) {
  const int n = ctx.n();
  std::vector<Binomial> out;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        if (i != k && k != j && i != j && in_gamma(ctx, i, k, j)) out.push_back(mixed_triple(ctx, i, k, j));
  return canonical(std::move(out));
}

std::vector<Binomial> lambda_basis(const SignedOrderContext& ctx) {
  const int n = ctx.n();
  if (n < 2) throw InvalidInput("lambda_basis needs n >= 2");
  std::vector<Binomial> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (ctx.above(i, j))
        out.push_back(signed_binomial(ctx, i, power(n, Letter::X, i, 1) * power(n, Letter::X, j, 1),
                                      power(n, Letter::Y, i, 1) * power(n, Letter::Y, j, 1)));
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        // (i, k, j): i, k > j
        if (ctx.above(i, j) && ctx.above(k, j) && !in_gamma(ctx, i, k, j)) out.push_back(mixed_triple(ctx, i, k, j));
        // (i, j, k, i) with j < k as the unordered interior pair: j, k > i
        if (j < k && ctx.above(j, i) && ctx.above(k, i))
          out.push_back(signed_binomial(ctx, i, power(n, Letter::X, i, 2) * ctx.r(j) * ctx.r(k),
                                        power(n, Letter::Y, i, 2) * ctx.r(j) * ctx.r(k)));
      }
    }
  }
  return canonical(std::move(out));
}

Monomial normal_form_kn(const Monomial& m) {
  const int n = m.n();
  const std::vector<int> support = m.support().members();
  if (support.size() > 2) {
    const int k = support.back();
    const int gamma = m.x_degree();
    Monomial out(n);
    for (int v : support) out.set(Letter::Y, v, m.x(v) + m.y(v));
    if (gamma % 2 == 1) {
      out.set(Letter::X, k, 1);
      out.set(Letter::Y, k, m.x(k) + m.y(k) - 1);
    }
    return out;
  }
  if (support.size() < 2) return m;
  const int i = support[0];
  const int j = support[1];
  const int q = std::min(m.x(i), m.x(j));
  Monomial out = m;
  for (int v : {i, j}) {
    out.set(Letter::X, v, m.x(v) - q);
    out.set(Letter::Y, v, m.y(v) + q);
  }
  return out;
}

bool membership_pbei_kn(const Binomial& f) {
  const std::vector<int> support = f.lead().support().members();
  if (support.size() > 2) return is_homogeneous_pbei(f);
  if (support.size() < 2) return false;  // only q = 0 keeps exponents nonnegative
  const int i = support[0];
  const int j = support[1];
  const Monomial& u = f.lead();
  const Monomial& v = f.trail();
  if (!v.support().is_subset_of(f.lead().support())) return false;
  const int q = u.x(i) - v.x(i);
  return q != 0 && v.y(i) == u.y(i) + q && v.x(j) == u.x(j) - q && v.y(j) == u.y(j) + q;
}

CoprimeClassification classify_coprime_two_vertex(const Binomial& f) {
  using Family = CoprimeClassification::Family;
  if (!is_homogeneous_pbei(f)) throw InvalidInput("classify: binomial is not multi-homogeneous");
  const std::vector<int> support = f.lead().support().members();
  if (support.size() != 2) throw InvalidInput("classify: lead must be supported on exactly two vertices");
  if (!gcd(f.lead(), f.trail()).is_one()) throw InvalidInput("classify: terms share a common factor");
  const int i = support[0];
  const int j = support[1];
  const Monomial& u = f.lead();
  const Monomial& v = f.trail();
  // Exact term shape: letter at i and letter at j for the lead; the trail
  // swaps both letters with the same exponents.
  auto shape = [&](Letter li, Letter lj) -> std::optional<std::pair<int, int>> {
    const Letter oi = li == Letter::X ? Letter::Y : Letter::X;
    const Letter oj = lj == Letter::X ? Letter::Y : Letter::X;
    const int p = u.exponent(li, i);
    const int q = u.exponent(lj, j);
    if (p < 1 || q < 1) return std::nullopt;
    Monomial lead = power(u.n(), li, i, p) * power(u.n(), lj, j, q);
    Monomial trail = power(u.n(), oi, i, p) * power(u.n(), oj, j, q);
    if (lead != u || trail != v || p % 2 != q % 2) return std::nullopt;
    return std::make_pair(p, q);
  };
  const std::pair<Family, std::pair<Letter, Letter>> families[] = {
      {Family::PurePlus, {Letter::X, Letter::X}},
      {Family::PureMinus, {Letter::Y, Letter::Y}},
      {Family::MixedPlus, {Letter::X, Letter::Y}},
      {Family::MixedMinus, {Letter::Y, Letter::X}},
  };
  for (const auto& [family, letters] : families)
    if (auto pq = shape(letters.first, letters.second)) return {family, i, j, pq->first, pq->second};
  throw InvalidInput("classify: binomial fits none of the four coprime families");
}

} // namespace edgebasis
