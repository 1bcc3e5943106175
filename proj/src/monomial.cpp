#include "edgebasis/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgebasis/error.hpp"

namespace edgebasis {

Monomial::Monomial(std::vector<int> xexp, std::vector<int> yexp) : n_(static_cast<int>(xexp.size())) {
  if (xexp.size() != yexp.size()) throw InvalidInput("x and y exponent vectors differ in length");
  exps_ = std::move(xexp);
  exps_.insert(exps_.end(), yexp.begin(), yexp.end());
  for (int e : exps_)
    if (e < 0) throw InvalidInput("negative exponent");
}

Monomial Monomial::variable(int n, Letter letter, int vertex) {
  if (vertex < 1 || vertex > n) throw InvalidInput("variable index " + std::to_string(vertex) + " out of range");
  Monomial m(n);
  m.set(letter, vertex, 1);
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
int Monomial::x_degree() const { return std::accumulate(exps_.begin(), exps_.begin() + n_, 0); }
int Monomial::y_degree() const { return std::accumulate(exps_.begin() + n_, exps_.end(), 0); }
bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (int v = 1; v <= n_; ++v)
    if (x(v) != 0 || y(v) != 0) s.insert(v);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.n_ != n_) throw InvalidInput("monomials live in different rings");
  for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] += other.exps_[k];
  return *this;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (divisor.n_ != n_ || !divisor.divides(*this)) throw InvalidInput("monomial division is not exact");
  Monomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= divisor.exps_[k];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> x(a.n()), y(a.n());
  for (int v = 1; v <= a.n(); ++v) {
    x[v - 1] = std::max(a.x(v), b.x(v));
    y[v - 1] = std::max(a.y(v), b.y(v));
  }
  return Monomial(std::move(x), std::move(y));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> x(a.n()), y(a.n());
  for (int v = 1; v <= a.n(); ++v) {
    x[v - 1] = std::min(a.x(v), b.x(v));
    y[v - 1] = std::min(a.y(v), b.y(v));
  }
  return Monomial(std::move(x), std::move(y));
}

bool coprime(const Monomial& a, const Monomial& b) {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t k = 0; k < ea.size(); ++k)
    if (ea[k] != 0 && eb[k] != 0) return false;
  return true;
}

Monomial restrict_to(const Monomial& m, VertexSet w) {
  Monomial r(m.n());
  for (int v = 1; v <= m.n(); ++v) {
    if (!w.contains(v)) continue;
    r.set(Letter::X, v, m.x(v));
    r.set(Letter::Y, v, m.y(v));
  }
  return r;
}

Binomial::Binomial(Monomial lead, Monomial trail) : lead_(std::move(lead)), trail_(std::move(trail)) {
  if (lead_.n() != trail_.n()) throw InvalidInput("binomial terms live in different rings");
  if (lead_ == trail_) throw InvalidInput("binomial with equal terms is the zero polynomial");
}

int Binomial::degree() const { return std::max(lead_.degree(), trail_.degree()); }

BinomialOrZero make_binomial(Monomial lead, Monomial trail) {
  if (lead == trail) return std::nullopt;
  return Binomial(std::move(lead), std::move(trail));
}

std::vector<Binomial> canonical(std::vector<Binomial> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool is_negation_closed(const std::vector<Binomial>& canonical_set) {
  return std::all_of(canonical_set.begin(), canonical_set.end(), [&](const Binomial& f) {
    return std::binary_search(canonical_set.begin(), canonical_set.end(), f.negated());
  });
}

LexOrder::LexOrder(Permutation sigma, std::vector<int> positions_in_l)
    : sigma_(std::move(sigma)), l_positions_(std::move(positions_in_l)) {
  const int n = sigma_.size();
  std::sort(l_positions_.begin(), l_positions_.end());
  l_positions_.erase(std::unique(l_positions_.begin(), l_positions_.end()), l_positions_.end());
  for (int p : l_positions_) {
    if (p < 1 || p > n) throw InvalidInput("L position " + std::to_string(p) + " outside [1," + std::to_string(n) + "]");
    l_mask_.insert(p);
  }
  priority_.reserve(2 * static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p)
    priority_.push_back(variable_index(n, position_in_l(p) ? Letter::Y : Letter::X, sigma_(p)));
  for (int p = 1; p <= n; ++p)
    priority_.push_back(variable_index(n, position_in_l(p) ? Letter::X : Letter::Y, sigma_(p)));
}

std::strong_ordering LexOrder::compare(const Monomial& a, const Monomial& b) const {
  for (int var : priority_) {
    const int ea = a.exponent(var);
    const int eb = b.exponent(var);
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

const Monomial& initial_monomial(const LexOrder& order, const Binomial& f) {
  return order.greater(f.trail(), f.lead()) ? f.trail() : f.lead();
}

Binomial normalize(const LexOrder& order, const Binomial& f) {
  return order.greater(f.trail(), f.lead()) ? f.negated() : f;
}

MultidegreeBei mdeg_bei(const Monomial& m) {
  MultidegreeBei d{m.x_degree(), m.y_degree(), std::vector<int>(m.n())};
  for (int v = 1; v <= m.n(); ++v) d.vertex[v - 1] = m.x(v) + m.y(v);
  return d;
}

MultidegreePbei mdeg_pbei(const Monomial& m) {
  MultidegreePbei d{m.x_degree() % 2, m.y_degree() % 2, std::vector<int>(m.n())};
  for (int v = 1; v <= m.n(); ++v) d.vertex[v - 1] = m.x(v) + m.y(v);
  return d;
}

bool is_homogeneous_bei(const Binomial& f) { return mdeg_bei(f.lead()) == mdeg_bei(f.trail()); }
bool is_homogeneous_pbei(const Binomial& f) { return mdeg_pbei(f.lead()) == mdeg_pbei(f.trail()); }

} // namespace edgebasis
